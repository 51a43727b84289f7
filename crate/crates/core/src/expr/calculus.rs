use std::collections::HashMap;

use num_traits::One;

use super::{integer, Expr, FnAtom, Generator, Rational, TermAcc};

/// A derivation on expressions, specified by its values on the generators.
///
/// Atoms are differentiated by the chain rule through their arguments unless
/// [`Derivation::atom`] supplies a value directly.
pub trait Derivation {
    /// Value on an independent variable, constant or jet coordinate.
    /// `None` means zero.
    fn symbol(&self, g: &Generator) -> Option<Expr>;

    fn atom(&self, _atom: &Generator) -> Option<Expr> {
        None
    }
}

pub(crate) fn apply_derivation<D: Derivation + ?Sized>(e: &Expr, d: &D) -> Expr {
    let mut memo = HashMap::new();
    derive_inner(e, d, &mut memo)
}

fn derive_inner<D: Derivation + ?Sized>(
    e: &Expr,
    d: &D,
    memo: &mut HashMap<Generator, Expr>,
) -> Expr {
    let mut acc = TermAcc::new();
    for (m, c) in e.terms() {
        for (k, (g, exp)) in m.factors().iter().enumerate() {
            let dg = derive_generator(g, d, memo);
            if dg.is_zero() {
                continue;
            }
            let rest = m.shifted(k, -1);
            let coef: Rational = c * integer(*exp as i64);
            acc.push_scaled(&rest, &coef, &dg);
        }
    }
    acc.finish()
}

fn derive_generator<D: Derivation + ?Sized>(
    g: &Generator,
    d: &D,
    memo: &mut HashMap<Generator, Expr>,
) -> Expr {
    if let Some(v) = memo.get(g) {
        return v.clone();
    }
    let value = match g {
        Generator::Fn(atom) => match d.atom(g) {
            Some(v) => v,
            None => chain_rule(atom, d, memo),
        },
        _ => d.symbol(g).unwrap_or_else(Expr::zero),
    };
    memo.insert(g.clone(), value.clone());
    value
}

fn chain_rule<D: Derivation + ?Sized>(
    atom: &FnAtom,
    d: &D,
    memo: &mut HashMap<Generator, Expr>,
) -> Expr {
    let mut acc = TermAcc::new();
    for (slot, arg) in atom.args().iter().enumerate() {
        let darg = derive_inner(arg, d, memo);
        if darg.is_zero() {
            continue;
        }
        let outer = super::Monomial::single(Generator::atom(atom.bumped(slot)), 1);
        acc.push_scaled(&outer, &Rational::one(), &darg);
    }
    acc.finish()
}

struct Partial<'a>(&'a Generator);

impl Derivation for Partial<'_> {
    fn symbol(&self, g: &Generator) -> Option<Expr> {
        (g == self.0).then(Expr::one)
    }

    fn atom(&self, atom: &Generator) -> Option<Expr> {
        (atom == self.0).then(Expr::one)
    }
}

impl Expr {
    /// Partial derivative with respect to a generator. Atoms are differentiated
    /// by the chain rule unless `g` is the atom itself.
    pub fn pdiff(&self, g: &Generator) -> Expr {
        if !self.contains(g) {
            return Expr::zero();
        }
        apply_derivation(self, &Partial(g))
    }

    pub fn derive_with<D: Derivation + ?Sized>(&self, d: &D) -> Expr {
        apply_derivation(self, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::Indep;

    fn u(i: u32, j: u32) -> Expr {
        Expr::u(i, j)
    }

    #[test]
    fn power_rule() {
        let e = u(1, 0).pow(2).unwrap();
        assert_eq!(e.pdiff(&Generator::Jet(1, 0)), u(1, 0).scale(&integer(2)));
    }

    #[test]
    fn chain_rule_base_case() {
        let f = Expr::apply("f", vec![u(0, 0), u(1, 0)]);
        let expected = Expr::atom(FnAtom::new("f", vec![1, 0], vec![u(0, 0), u(1, 0)]).unwrap());
        assert_eq!(f.pdiff(&Generator::Jet(0, 0)), expected);
    }

    #[test]
    fn exp_rule() {
        let c_inv = Expr::constant("c_1").pow(-1).unwrap();
        let arg = Expr::x() * &c_inv;
        let e = Expr::exp(arg);
        assert_eq!(e.pdiff(&Generator::Indep(Indep::X)), &c_inv * &e);
    }

    #[test]
    fn laurent_constant_derivative() {
        let c = Generator::constant("c");
        let e = Expr::constant("c").pow(-1).unwrap();
        assert_eq!(e.pdiff(&c), -Expr::constant("c").pow(-2).unwrap());
    }

    #[test]
    fn atom_as_independent_generator() {
        let g = Expr::apply("g", vec![u(0, 0)]);
        let e = &g * Expr::x() + Expr::y();
        let gen = g.as_generator().unwrap().clone();
        assert_eq!(e.pdiff(&gen), Expr::x());
    }

    #[test]
    fn nested_chain_rule() {
        // M(x*y) differentiated by x gives M'(x*y)*y
        let arg = Expr::x() * Expr::y();
        let e = Expr::apply("M", vec![arg.clone()]);
        let dm = Expr::atom(FnAtom::new("M", vec![1], vec![arg]).unwrap());
        assert_eq!(e.pdiff(&Generator::Indep(Indep::X)), dm * Expr::y());
    }
}
