//! Mechanized steps of the cosymmetry classification: separant extraction for
//! generic cosymmetries and the coefficient splittings for cosymmetries that
//! depend on `x, y, t` only.
//!
//! Each step returns a [`StepCheck`] pairing the mechanically extracted
//! expression with the closed form it is expected to reproduce. The two must
//! agree up to one overall sign.

use crate::error::Result;
use crate::expr::{Expr, FnAtom, Generator, Indep};
use crate::jet::EvolutionEquation;

use super::{cosym_residual, split_by_fn_atoms, split_by_generator, split_by_jet};

#[derive(Clone, Debug)]
pub struct StepCheck {
    pub label: String,
    pub computed: Expr,
    pub expected: Expr,
}

impl StepCheck {
    fn new(label: impl Into<String>, computed: Expr, expected: Expr) -> StepCheck {
        StepCheck {
            label: label.into(),
            computed,
            expected,
        }
    }

    /// `Some(±1)` if `computed = ±expected`.
    pub fn sign(&self) -> Option<i32> {
        if self.computed == self.expected {
            Some(1)
        } else if self.computed == -&self.expected {
            Some(-1)
        } else {
            None
        }
    }

    pub fn holds(&self) -> bool {
        self.sign().is_some()
    }

    /// `computed − sign·expected`, or `computed − expected` when no sign fits.
    pub fn discrepancy(&self) -> Expr {
        match self.sign() {
            Some(-1) => &self.computed + &self.expected,
            _ => &self.computed - &self.expected,
        }
    }
}

/// `gamma(x, y, t, u[i,j] for i ≤ k, j ≤ l)`.
pub fn generic_cosymmetry(k: u32, l: u32) -> Expr {
    let jets: Vec<(u32, u32)> = (0..=k).flat_map(|i| (0..=l).map(move |j| (i, j))).collect();
    gamma_over(&jets)
}

fn gamma_over(jets: &[(u32, u32)]) -> Expr {
    let mut args = vec![Expr::x(), Expr::y(), Expr::t()];
    args.extend(jets.iter().map(|&(i, j)| Expr::u(i, j)));
    Expr::apply("gamma", args)
}

fn linear_coefficient(chain: &[Expr]) -> (Expr, bool) {
    let c = chain.get(1).cloned().unwrap_or_default();
    (c, chain.len() <= 2)
}

/// The top separant: the coefficient of `u[k+4,l]` in the cosymmetry residual
/// of a generic `γ` of jet order `(k, l)`, against `2 ∂γ/∂u[k,l]`.
pub fn separant_step(eq: &EvolutionEquation, k: u32, l: u32) -> Result<StepCheck> {
    let gamma = generic_cosymmetry(k, l);
    let residual = cosym_residual(eq, &gamma);
    let chain = split_by_jet(&residual, k + 4, l)?;
    let (coefficient, linear) = linear_coefficient(&chain);
    let expected = gamma
        .pdiff(&Generator::Jet(k, l))
        .scale(&crate::expr::integer(2));
    let computed = if linear { coefficient } else { residual };
    Ok(StepCheck::new(
        format!("separant u[{},{}]", k + 4, l),
        computed,
        expected,
    ))
}

/// The full descent along the top row: once `∂γ/∂u[k,j']` vanishes for
/// `j' > j`, the coefficient of `u[k+4,j]` is `±2 ∂γ/∂u[k,j]`.
pub fn separant_chain(eq: &EvolutionEquation, k: u32, l: u32) -> Result<Vec<StepCheck>> {
    let mut out = Vec::new();
    for j in (0..=l).rev() {
        let jets: Vec<(u32, u32)> = (0..=k)
            .flat_map(|i| (0..=l).map(move |jj| (i, jj)))
            .filter(|&(i, jj)| !(i == k && jj > j))
            .collect();
        let gamma = gamma_over(&jets);
        let residual = cosym_residual(eq, &gamma);
        let chain = split_by_jet(&residual, k + 4, j)?;
        let (coefficient, linear) = linear_coefficient(&chain);
        let expected = gamma
            .pdiff(&Generator::Jet(k, j))
            .scale(&crate::expr::integer(2));
        out.push(StepCheck::new(
            format!("separant u[{},{}]", k + 4, j),
            if linear { coefficient } else { residual },
            expected,
        ));
    }
    Ok(out)
}

fn gamma_xyt() -> Expr {
    Expr::apply("gamma", vec![Expr::x(), Expr::y(), Expr::t()])
}

/// Iterated partial derivative by independent variables.
pub fn partial(e: &Expr, vars: &[Indep]) -> Expr {
    vars.iter()
        .fold(e.clone(), |acc, v| acc.pdiff(&Generator::Indep(*v)))
}

use Indep::{T, X, Y};

fn u_jet(i: u32, j: u32) -> Generator {
    Generator::Jet(i, j)
}

/// `γ_t − γ_xxxx − a γ_xy`.
fn linear_part(gamma: &Expr, a: &Expr) -> Expr {
    partial(gamma, &[T]) - partial(gamma, &[X, X, X, X]) - a * partial(gamma, &[X, Y])
}

/// Reduction of the cosymmetry condition for `γ = γ(x, y, t)` on an
/// Infeld–Rowlands equation with arbitrary `f`, and the `u_xx` separant.
pub fn reduced_cosymmetry_condition(eq: &EvolutionEquation) -> Result<Vec<StepCheck>> {
    let params = eq.gir_params().ok_or_else(|| {
        crate::error::Error::Precondition("equation is not of Infeld–Rowlands type".into())
    })?;
    let (a, f) = (&params.a, &params.f);
    let gamma = gamma_xyt();
    let f_u = f.pdiff(&u_jet(0, 0));
    let f_ux = f.pdiff(&u_jet(1, 0));
    let f_uxux = f_ux.pdiff(&u_jet(1, 0));
    let f_uux = f_u.pdiff(&u_jet(1, 0));
    let gx = partial(&gamma, &[X]);
    let expected = linear_part(&gamma, a) - &f_ux * partial(&gamma, &[X, X]) + &f_u * &gx
        - &f_uxux * Expr::u(2, 0) * &gx
        - &f_uux * Expr::u(1, 0) * &gx;
    let residual = cosym_residual(eq, &gamma);
    let chain = split_by_jet(&residual, 2, 0)?;
    let (coefficient, _) = linear_coefficient(&chain);
    Ok(vec![
        StepCheck::new("reduced condition", residual, expected),
        StepCheck::new("u_xx separant", coefficient, f_uxux * gx),
    ])
}

/// `f = f_1(u) u_x + f_0(u)`.
fn linear_in_ux(a: &Expr) -> Result<(EvolutionEquation, Generator, Generator)> {
    let f1 = Expr::apply("f_1", vec![Expr::u(0, 0)]);
    let f0 = Expr::apply("f_0", vec![Expr::u(0, 0)]);
    let eq = EvolutionEquation::gir(a.clone(), &f1 * Expr::u(1, 0) + &f0)?;
    let df0 = Generator::atom(FnAtom::new("f_0", vec![1], vec![Expr::u(0, 0)])?);
    Ok((eq, f1.as_generator().unwrap().clone(), df0))
}

/// Splittings for `f` linear in `u_x` (case 1: `f_1` independent of
/// `1, ∂f_0/∂u`).
pub fn linear_in_ux_steps(a: &Expr) -> Result<Vec<StepCheck>> {
    let (eq, f1, df0) = linear_in_ux(a)?;
    let f1e = Expr::gen(f1.clone());
    let df0e = Expr::gen(df0.clone());
    let gamma = gamma_xyt();
    let residual = cosym_residual(&eq, &gamma);
    let expected =
        linear_part(&gamma, a) - &f1e * partial(&gamma, &[X, X]) + &df0e * partial(&gamma, &[X]);
    let split = split_by_fn_atoms(&residual, &[f1.clone(), df0.clone()])?;
    let mut out = vec![
        StepCheck::new("linear in u_x", residual.clone(), expected),
        StepCheck::new(
            "coefficient of f_1",
            split.coefficient(&f1),
            partial(&gamma, &[X, X]),
        ),
        StepCheck::new(
            "coefficient of f_0'",
            split.coefficient(&df0),
            partial(&gamma, &[X]),
        ),
        StepCheck::new("free of f_1, f_0'", split.remainder, linear_part(&gamma, a)),
    ];

    // γ = γ_0(y,t) + x γ_1(y,t)
    let g0 = Expr::apply("gamma_0", vec![Expr::y(), Expr::t()]);
    let g1 = Expr::apply("gamma_1", vec![Expr::y(), Expr::t()]);
    let affine = &g0 + Expr::x() * &g1;
    let residual = cosym_residual(&eq, &affine);
    let next = partial(&g0, &[T]) - a * partial(&g1, &[Y]) + &df0e * &g1;
    let expected = Expr::x() * partial(&g1, &[T]) + &next;
    let by_x = split_by_generator(&residual, &Generator::Indep(X))?;
    out.push(StepCheck::new("affine in x", residual, expected));
    out.push(StepCheck::new(
        "coefficient of x",
        by_x.get(1).cloned().unwrap_or_default(),
        partial(&g1, &[T]),
    ));
    let rest = by_x.first().cloned().unwrap_or_default();
    out.push(StepCheck::new("x-free part", rest.clone(), next));
    let split = split_by_fn_atoms(&rest, &[df0])?;
    out.push(StepCheck::new(
        "subcase 1a: coefficient of f_0'",
        split.coefficient(&Generator::atom(FnAtom::new(
            "f_0",
            vec![1],
            vec![Expr::u(0, 0)],
        )?)),
        g1,
    ));
    Ok(out)
}

/// Subcase `f_0 = k_1 u + k_0`: the reduced equation and its expected
/// general solution with `γ_1 = L(y)`.
pub fn subcase_1b_steps(a: &Expr) -> Result<Vec<StepCheck>> {
    let (k0, k1) = (Expr::constant("k_0"), Expr::constant("k_1"));
    let f1 = Expr::apply("f_1", vec![Expr::u(0, 0)]);
    let eq = EvolutionEquation::gir(a.clone(), &f1 * Expr::u(1, 0) + &k1 * Expr::u(0, 0) + &k0)?;
    let g0 = Expr::apply("gamma_0", vec![Expr::y(), Expr::t()]);
    let l = Expr::apply("L", vec![Expr::y()]);
    let residual = cosym_residual(&eq, &(&g0 + Expr::x() * &l));
    let ly = partial(&l, &[Y]);
    let expected = partial(&g0, &[T]) - a * &ly + &k1 * &l;
    let m = Expr::apply("M", vec![Expr::y()]);
    let solution = &m + Expr::t() * (a * &ly - &k1 * &l);
    let solved = cosym_residual(&eq, &(&solution + Expr::x() * &l));
    Ok(vec![
        StepCheck::new("subcase 1b reduced", residual, expected),
        StepCheck::new("subcase 1b solution", solved, Expr::zero()),
    ])
}

/// Case 2, `f_1 = c_1 ∂f_0/∂u + c_0`: splitting by `1` and `∂f_0/∂u`, and the
/// subcase `c_1 ≠ 0` with `γ = γ_0 + γ_1 exp(x/c_1)`.
pub fn case_2_steps(a: &Expr) -> Result<Vec<StepCheck>> {
    let (c0, c1) = (Expr::constant("c_0"), Expr::constant("c_1"));
    let f0 = Expr::apply("f_0", vec![Expr::u(0, 0)]);
    let df0 = Generator::atom(FnAtom::new("f_0", vec![1], vec![Expr::u(0, 0)])?);
    let f = (&c1 * Expr::gen(df0.clone()) + &c0) * Expr::u(1, 0) + &f0;
    let eq = EvolutionEquation::gir(a.clone(), f)?;

    let gamma = gamma_xyt();
    let residual = cosym_residual(&eq, &gamma);
    let split = split_by_fn_atoms(&residual, std::slice::from_ref(&df0))?;
    let gx = partial(&gamma, &[X]);
    let gxx = partial(&gamma, &[X, X]);
    let mut out = vec![
        StepCheck::new(
            "coefficient of f_0' (gx)",
            split.coefficient(&df0),
            &gx - &c1 * &gxx,
        ),
        StepCheck::new(
            "free of f_0' (gt)",
            split.remainder,
            linear_part(&gamma, a) - &c0 * &gxx,
        ),
    ];

    let c1_inv = c1.try_inverse()?;
    let g0 = Expr::apply("gamma_0", vec![Expr::y(), Expr::t()]);
    let g1 = Expr::apply("gamma_1", vec![Expr::y(), Expr::t()]);
    let wave = Expr::exp(Expr::x() * &c1_inv);
    let ansatz = &g0 + &g1 * &wave;
    let residual = cosym_residual(&eq, &ansatz);
    let ax = partial(&ansatz, &[X]);
    let gt1 = partial(&ansatz, &[T])
        - c1_inv.pow(3)? * &ax
        - a * partial(&ansatz, &[X, Y])
        - &c0 * &c1_inv * &ax;
    out.push(StepCheck::new("subcase 2b (gt1)", residual.clone(), gt1));
    let split = split_by_fn_atoms(&residual, &[wave.as_generator().unwrap().clone()])?;
    out.push(StepCheck::new(
        "coefficient of 1",
        split.remainder.clone(),
        partial(&g0, &[T]),
    ));
    let rate = (&c0 * c1.pow(2)? + Expr::one()) * c1_inv.pow(4)?;
    out.push(StepCheck::new(
        "coefficient of exp(x/c_1)",
        split.coefficient(wave.as_generator().unwrap()),
        partial(&g1, &[T]) - a * &c1_inv * partial(&g1, &[Y]) - &rate * &g1,
    ));
    let profile = Expr::apply("F", vec![a * Expr::t() + &c1 * Expr::y()]);
    let solution = Expr::exp(Expr::t() * &rate) * profile;
    let plugged =
        partial(&solution, &[T]) - a * &c1_inv * partial(&solution, &[Y]) - &rate * &solution;
    out.push(StepCheck::new("subcase 2b solution", plugged, Expr::zero()));
    Ok(out)
}
