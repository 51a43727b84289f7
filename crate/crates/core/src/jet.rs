//! Evolution equations `u_t = F` and the total derivatives adapted to them.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::expr::{Derivation, Expr, Generator, Indep};
use crate::operator::DiffOperator;
use crate::variational::frechet;

struct TotalX;
struct TotalY;

impl Derivation for TotalX {
    fn symbol(&self, g: &Generator) -> Option<Expr> {
        match g {
            Generator::Indep(Indep::X) => Some(Expr::one()),
            Generator::Jet(i, j) => Some(Expr::u(i + 1, *j)),
            _ => None,
        }
    }
}

impl Derivation for TotalY {
    fn symbol(&self, g: &Generator) -> Option<Expr> {
        match g {
            Generator::Indep(Indep::Y) => Some(Expr::one()),
            Generator::Jet(i, j) => Some(Expr::u(*i, j + 1)),
            _ => None,
        }
    }
}

pub fn total_x(e: &Expr) -> Expr {
    e.derive_with(&TotalX)
}

pub fn total_y(e: &Expr) -> Expr {
    e.derive_with(&TotalY)
}

/// `D_x^i D_y^j e`.
pub fn total_xy(e: &Expr, i: u32, j: u32) -> Expr {
    let mut out = e.clone();
    for _ in 0..j {
        if out.is_zero() {
            break;
        }
        out = total_y(&out);
    }
    for _ in 0..i {
        if out.is_zero() {
            break;
        }
        out = total_x(&out);
    }
    out
}

struct TotalT<'a>(&'a EvolutionEquation);

impl Derivation for TotalT<'_> {
    fn symbol(&self, g: &Generator) -> Option<Expr> {
        match g {
            Generator::Indep(Indep::T) => Some(Expr::one()),
            Generator::Jet(i, j) => Some(self.0.prolongation(*i, *j)),
            _ => None,
        }
    }
}

/// `D_t e` on the equation: `u[i,j]_t` is replaced by `D_x^i D_y^j F`.
pub fn total_t(e: &Expr, eq: &EvolutionEquation) -> Expr {
    e.derive_with(&TotalT(eq))
}

/// Parameters of `u_t = -(u_xxx + a u_y + f)_x`.
#[derive(Clone, Debug, PartialEq)]
pub struct GirParams {
    pub a: Expr,
    pub f: Expr,
}

/// Linearization `D_F` and its formal adjoint.
#[derive(Clone, Debug)]
pub struct Linearization {
    pub operator: DiffOperator,
    pub adjoint: DiffOperator,
}

struct Inner {
    rhs: Expr,
    label: String,
    gir: Option<GirParams>,
    prolongations: RwLock<HashMap<(u32, u32), Expr>>,
    linearization: OnceLock<Linearization>,
}

/// An evolution equation in normal form. Clones share the prolongation cache.
#[derive(Clone)]
pub struct EvolutionEquation {
    inner: Arc<Inner>,
}

impl EvolutionEquation {
    pub fn new(rhs: Expr, label: impl Into<String>) -> EvolutionEquation {
        EvolutionEquation::build(rhs, label.into(), None)
    }

    fn build(rhs: Expr, label: String, gir: Option<GirParams>) -> EvolutionEquation {
        let mut cache = HashMap::new();
        cache.insert((0, 0), rhs.clone());
        EvolutionEquation {
            inner: Arc::new(Inner {
                rhs,
                label,
                gir,
                prolongations: RwLock::new(cache),
                linearization: OnceLock::new(),
            }),
        }
    }

    /// The generalized Infeld–Rowlands equation `u_t = -(u_xxx + a u_y + f)_x`
    /// with `f` a function of `u[0,0]` and `u[1,0]`, either an opaque atom of
    /// arity two or an explicit expression.
    pub fn gir(a: Expr, f: Expr) -> Result<EvolutionEquation> {
        if !a.is_constant() {
            return Err(Error::Nonlinearity(format!(
                "the coefficient a must be constant, got {a}"
            )));
        }
        if let Some(atom) = f.as_generator().and_then(Generator::as_atom) {
            if atom.arity() != 2 {
                return Err(Error::Arity {
                    name: atom.name().to_string(),
                    expected: 2,
                    found: atom.arity(),
                });
            }
        }
        for g in f.generators() {
            match g {
                Generator::Jet(0, 0)
                | Generator::Jet(1, 0)
                | Generator::Const(_)
                | Generator::Fn(_) => {}
                other => {
                    return Err(Error::Nonlinearity(format!(
                        "f may depend only on u[0,0] and u[1,0], found {other}"
                    )))
                }
            }
        }
        let flux = Expr::u(3, 0) + &a * Expr::u(0, 1) + &f;
        let rhs = -total_x(&flux);
        let label = format!("gir(a={a}, f={f})");
        Ok(EvolutionEquation::build(
            rhs,
            label,
            Some(GirParams { a, f }),
        ))
    }

    /// `gir` with the opaque nonlinearity `name(u[0,0], u[1,0])`.
    pub fn gir_opaque(a: Expr, name: &str) -> Result<EvolutionEquation> {
        EvolutionEquation::gir(a, Expr::apply(name, vec![Expr::u(0, 0), Expr::u(1, 0)]))
    }

    pub fn rhs(&self) -> &Expr {
        &self.inner.rhs
    }

    pub fn label(&self) -> &str {
        &self.inner.label
    }

    pub fn gir_params(&self) -> Option<&GirParams> {
        self.inner.gir.as_ref()
    }

    /// Same right-hand side.
    pub fn same_as(&self, other: &EvolutionEquation) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.rhs() == other.rhs()
    }

    /// `D_x^i D_y^j F`, memoized.
    pub fn prolongation(&self, i: u32, j: u32) -> Expr {
        if let Some(v) = self.inner.prolongations.read().unwrap().get(&(i, j)) {
            return v.clone();
        }
        let value = if i > 0 {
            total_x(&self.prolongation(i - 1, j))
        } else {
            total_y(&self.prolongation(i, j - 1))
        };
        self.inner
            .prolongations
            .write()
            .unwrap()
            .entry((i, j))
            .or_insert(value)
            .clone()
    }

    pub fn linearization(&self) -> &Linearization {
        self.inner.linearization.get_or_init(|| {
            let operator = frechet(self.rhs());
            let adjoint = operator.adjoint();
            Linearization { operator, adjoint }
        })
    }
}

impl fmt::Debug for EvolutionEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u_t = {} [{}]", self.rhs(), self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{integer, rational, FnAtom};

    fn f_atom(d: Vec<u32>) -> Expr {
        Expr::atom(FnAtom::new("f", d, vec![Expr::u(0, 0), Expr::u(1, 0)]).unwrap())
    }

    #[test]
    fn gir_rhs_is_chain_rule_expansion() {
        let a = Expr::constant("a");
        let eq = EvolutionEquation::gir_opaque(a.clone(), "f").unwrap();
        let expected = -Expr::u(4, 0)
            - &a * Expr::u(1, 1)
            - f_atom(vec![1, 0]) * Expr::u(1, 0)
            - f_atom(vec![0, 1]) * Expr::u(2, 0);
        assert_eq!(eq.rhs(), &expected);
    }

    #[test]
    fn gir_infeld_rowlands() {
        let f = Expr::u(1, 0).pow(2).unwrap();
        let eq = EvolutionEquation::gir(Expr::one(), f).unwrap();
        let expected =
            -Expr::u(4, 0) - Expr::u(1, 1) - (Expr::u(1, 0) * Expr::u(2, 0)).scale(&integer(2));
        assert_eq!(eq.rhs(), &expected);
    }

    #[test]
    fn gir_kuramoto_sivashinsky_form() {
        let f = Expr::u(0, 0).pow(2).unwrap().scale(&rational(1, 2));
        let eq = EvolutionEquation::gir(Expr::one(), f).unwrap();
        let expected = -Expr::u(4, 0) - Expr::u(1, 1) - Expr::u(0, 0) * Expr::u(1, 0);
        assert_eq!(eq.rhs(), &expected);
    }

    #[test]
    fn gir_rejects_wrong_arity() {
        let f = Expr::apply("f", vec![Expr::u(0, 0)]);
        assert!(matches!(
            EvolutionEquation::gir(Expr::one(), f),
            Err(Error::Arity {
                expected: 2,
                found: 1,
                ..
            })
        ));
        let f = Expr::u(2, 0);
        assert!(EvolutionEquation::gir(Expr::one(), f).is_err());
        assert!(EvolutionEquation::gir(Expr::x(), Expr::u(0, 0)).is_err());
    }

    #[test]
    fn total_derivative_basics() {
        assert_eq!(total_x(&Expr::u(0, 0)), Expr::u(1, 0));
        assert_eq!(total_y(&Expr::u(2, 3)), Expr::u(2, 4));
        let f = f_atom(vec![0, 0]);
        assert_eq!(
            total_x(&f),
            f_atom(vec![1, 0]) * Expr::u(1, 0) + f_atom(vec![0, 1]) * Expr::u(2, 0)
        );
    }

    #[test]
    fn total_t_defining_cases() {
        let eq = EvolutionEquation::gir_opaque(Expr::constant("a"), "f").unwrap();
        assert_eq!(&total_t(&Expr::u(0, 0), &eq), eq.rhs());
        let m = Expr::apply("M", vec![Expr::y()]);
        assert_eq!(total_t(&(Expr::t() * &m), &eq), m);
        assert_eq!(total_t(&Expr::u(1, 0), &eq), total_x(eq.rhs()));
    }

    #[test]
    fn prolongation_cache_is_consistent() {
        let eq = EvolutionEquation::gir_opaque(Expr::constant("a"), "f").unwrap();
        let p = eq.prolongation(2, 1);
        assert_eq!(p, total_xy(eq.rhs(), 2, 1));
        assert_eq!(eq.clone().prolongation(2, 1), p);
    }
}
