//! Determining equations for cosymmetries, symmetries and (inverse) Noether
//! operators, together with the tools used to split and solve them.

mod families;
pub mod proofs;
mod scan;
mod split;

pub use families::{clu_law, family_case_i, family_case_ii, family_uniform, family_y_multiplier};
pub use scan::{noether_scan, scan_ansatz, AnsatzOperator, ForcingStep, ScanOutcome, ScanReport};
pub use split::{split_by_fn_atoms, split_by_generator, split_by_jet, AtomSplit};

use crate::expr::Expr;
use crate::jet::{total_t, EvolutionEquation};
use crate::operator::DiffOperator;

/// Which operator identity a scan or residual refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorKind {
    /// `D_t(N) − D_F∘N − N∘D_F* = 0`, maps cosymmetries to symmetries.
    Noether,
    /// `D_t(B) + D_F*∘B + B∘D_F = 0`, maps symmetries to cosymmetries.
    InverseNoether,
}

/// `D_t(γ) + D_F*(γ)`; zero iff `γ` is a cosymmetry.
pub fn cosym_residual(eq: &EvolutionEquation, gamma: &Expr) -> Expr {
    total_t(gamma, eq) + eq.linearization().adjoint.apply(gamma)
}

/// `D_t(G) − D_F(G)`; zero iff `G` is a symmetry characteristic.
pub fn sym_residual(eq: &EvolutionEquation, g: &Expr) -> Expr {
    total_t(g, eq) - eq.linearization().operator.apply(g)
}

pub fn noether_residual(eq: &EvolutionEquation, n: &DiffOperator) -> DiffOperator {
    let lin = eq.linearization();
    n.dt(eq)
        .sub(&lin.operator.compose(n))
        .sub(&n.compose(&lin.adjoint))
}

pub fn inverse_noether_residual(eq: &EvolutionEquation, b: &DiffOperator) -> DiffOperator {
    let lin = eq.linearization();
    b.dt(eq)
        .add(&lin.adjoint.compose(b))
        .add(&b.compose(&lin.operator))
}

pub fn operator_residual(
    eq: &EvolutionEquation,
    op: &DiffOperator,
    kind: OperatorKind,
) -> DiffOperator {
    match kind {
        OperatorKind::Noether => noether_residual(eq, op),
        OperatorKind::InverseNoether => inverse_noether_residual(eq, op),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{integer, FnAtom};

    fn gir() -> EvolutionEquation {
        EvolutionEquation::gir_opaque(Expr::constant("a"), "f").unwrap()
    }

    fn f_atom(d: Vec<u32>) -> Expr {
        Expr::atom(FnAtom::new("f", d, vec![Expr::u(0, 0), Expr::u(1, 0)]).unwrap())
    }

    #[test]
    fn functions_of_y_are_cosymmetries() {
        let m = Expr::apply("M", vec![Expr::y()]);
        assert!(cosym_residual(&gir(), &m).is_zero());
    }

    #[test]
    fn x_is_not_a_cosymmetry_of_infeld_rowlands() {
        let eq = EvolutionEquation::gir(Expr::one(), Expr::u(1, 0).pow(2).unwrap()).unwrap();
        assert_eq!(
            cosym_residual(&eq, &Expr::x()),
            Expr::u(2, 0).scale(&integer(-2))
        );
    }

    #[test]
    fn translations_are_symmetries() {
        let eq = gir();
        assert!(sym_residual(&eq, &Expr::u(1, 0)).is_zero());
        assert!(sym_residual(&eq, &Expr::u(0, 1)).is_zero());
    }

    #[test]
    fn constant_is_not_a_symmetry() {
        // D_t(1) − D_F(1) = −D_F(1) = D_x(f_u)
        let r = sym_residual(&gir(), &Expr::one());
        assert_eq!(
            r,
            f_atom(vec![2, 0]) * Expr::u(1, 0) + f_atom(vec![1, 1]) * Expr::u(2, 0)
        );
    }

    #[test]
    fn identity_operator_residual_leading_terms() {
        let eq = gir();
        assert!(noether_residual(&eq, &DiffOperator::zero()).is_zero());
        assert!(inverse_noether_residual(&eq, &DiffOperator::zero()).is_zero());

        let n = noether_residual(&eq, &DiffOperator::identity());
        assert_eq!(n.top_key(), Some((4, 0)));
        assert_eq!(n.coeff(4, 0), Expr::int(2));
        let b = inverse_noether_residual(&eq, &DiffOperator::identity());
        assert_eq!(b.top_key(), Some((4, 0)));
        assert_eq!(b.coeff(4, 0), Expr::int(-2));
    }

    #[test]
    fn operators_map_symmetries_and_cosymmetries() {
        // u_t = u_xxx: D_x is Noether and the identity is inverse Noether.
        let eq = EvolutionEquation::new(Expr::u(3, 0), "kdv-linear");
        assert!(noether_residual(&eq, &DiffOperator::dx()).is_zero());
        assert!(inverse_noether_residual(&eq, &DiffOperator::identity()).is_zero());

        let gamma = Expr::u(0, 0);
        assert!(cosym_residual(&eq, &gamma).is_zero());
        let image = DiffOperator::dx().apply(&gamma);
        assert!(sym_residual(&eq, &image).is_zero());

        let g = Expr::u(1, 0);
        assert!(sym_residual(&eq, &g).is_zero());
        assert!(cosym_residual(&eq, &DiffOperator::identity().apply(&g)).is_zero());
    }
}
