//! Exact canonical differential polynomials.
//!
//! An [`Expr`] is a finite sum of monomials with rational coefficients. The
//! generators are the independent variables, the jet coordinates `u[i,j]`,
//! symbolic constants and opaque function atoms. Every value is kept in a
//! unique canonical form, so equality of canonical forms is the zero test.

mod calculus;
mod subst;
mod tree;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use calculus::Derivation;
pub use tree::Tree;

pub type Rational = BigRational;

/// Name of the built-in exponential atom.
pub const EXP: &str = "exp";

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Indep {
    X,
    Y,
    T,
}

impl Indep {
    pub fn name(self) -> &'static str {
        match self {
            Indep::X => "x",
            Indep::Y => "y",
            Indep::T => "t",
        }
    }
}

/// An applied function symbol `name^{(deriv)}(args)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FnAtom {
    name: Arc<str>,
    deriv: Vec<u32>,
    args: Vec<Expr>,
}

impl FnAtom {
    pub fn new(name: &str, deriv: Vec<u32>, args: Vec<Expr>) -> Result<FnAtom> {
        if deriv.len() != args.len() {
            return Err(Error::Arity {
                name: name.to_string(),
                expected: deriv.len(),
                found: args.len(),
            });
        }
        if name == EXP {
            if args.len() != 1 {
                return Err(Error::Arity {
                    name: EXP.to_string(),
                    expected: 1,
                    found: args.len(),
                });
            }
            // every derivative of exp is exp
            return Ok(FnAtom {
                name: Arc::from(EXP),
                deriv: vec![0],
                args,
            });
        }
        Ok(FnAtom {
            name: Arc::from(name),
            deriv,
            args,
        })
    }

    /// The underived function applied to `args`.
    pub fn plain(name: &str, args: Vec<Expr>) -> FnAtom {
        let deriv = vec![0; args.len()];
        FnAtom::new(name, deriv, args).expect("arity matches by construction")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn deriv(&self) -> &[u32] {
        &self.deriv
    }

    pub fn args(&self) -> &[Expr] {
        &self.args
    }

    pub fn arity(&self) -> usize {
        self.args.len()
    }

    pub fn is_exp(&self) -> bool {
        &*self.name == EXP
    }

    pub fn is_underived(&self) -> bool {
        self.deriv.iter().all(|&d| d == 0)
    }

    /// Same function and derivative index, new arguments.
    pub fn with_args(&self, args: Vec<Expr>) -> FnAtom {
        FnAtom {
            name: self.name.clone(),
            deriv: self.deriv.clone(),
            args,
        }
    }

    /// The partial derivative with respect to argument slot `slot`.
    pub fn bumped(&self, slot: usize) -> FnAtom {
        if self.is_exp() {
            return self.clone();
        }
        let mut deriv = self.deriv.clone();
        deriv[slot] += 1;
        FnAtom {
            name: self.name.clone(),
            deriv,
            args: self.args.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Indep(Indep),
    Const(Arc<str>),
    Jet(u32, u32),
    Fn(Arc<FnAtom>),
}

impl Generator {
    pub fn constant(name: &str) -> Generator {
        Generator::Const(Arc::from(name))
    }

    pub fn atom(atom: FnAtom) -> Generator {
        Generator::Fn(Arc::new(atom))
    }

    fn rank(&self) -> u8 {
        match self {
            Generator::Indep(_) => 0,
            Generator::Const(_) => 1,
            Generator::Jet(..) => 2,
            Generator::Fn(_) => 3,
        }
    }

    pub fn as_atom(&self) -> Option<&FnAtom> {
        match self {
            Generator::Fn(a) => Some(a),
            _ => None,
        }
    }

    pub fn as_jet(&self) -> Option<(u32, u32)> {
        match self {
            Generator::Jet(i, j) => Some((*i, *j)),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, Generator::Const(_))
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Generator::Indep(a), Generator::Indep(b)) => a.cmp(b),
            (Generator::Const(a), Generator::Const(b)) => a.cmp(b),
            (Generator::Jet(i1, j1), Generator::Jet(i2, j2)) => {
                (i1 + j1, i1, j1).cmp(&(i2 + j2, i2, j2))
            }
            (Generator::Fn(a), Generator::Fn(b)) => {
                if Arc::ptr_eq(a, b) {
                    Ordering::Equal
                } else {
                    a.cmp(b)
                }
            }
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A product of generator powers, sorted by generator, with no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Generator, i32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn single(g: Generator, exp: i32) -> Monomial {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(g, exp)])
        }
    }

    /// Checked constructor from arbitrary factors.
    pub fn from_factors(mut factors: Vec<(Generator, i32)>) -> Result<Monomial> {
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Generator, i32)> = Vec::with_capacity(factors.len());
        for (g, e) in factors {
            match out.last_mut() {
                Some((last, le)) if *last == g => *le += e,
                _ => out.push((g, e)),
            }
        }
        out.retain(|(_, e)| *e != 0);
        for (g, e) in &out {
            if *e < 0 && !g.is_constant() {
                return Err(Error::NegativeExponent {
                    generator: g.to_string(),
                    exponent: *e as i64,
                });
            }
        }
        Ok(Monomial(out))
    }

    pub fn factors(&self) -> &[(Generator, i32)] {
        &self.0
    }

    pub fn exponent_of(&self, g: &Generator) -> i32 {
        self.0
            .binary_search_by(|(h, _)| h.cmp(g))
            .map(|k| self.0[k].1)
            .unwrap_or(0)
    }

    /// Removes `g` entirely from the monomial.
    pub(crate) fn without(&self, g: &Generator) -> Monomial {
        Monomial(self.0.iter().filter(|(h, _)| h != g).cloned().collect())
    }

    /// Shifts the exponent of the factor at position `k` by `delta`.
    pub(crate) fn shifted(&self, k: usize, delta: i32) -> Monomial {
        let mut v = self.0.clone();
        v[k].1 += delta;
        if v[k].1 == 0 {
            v.remove(k);
        }
        Monomial(v)
    }

    pub(crate) fn mul(&self, other: &Monomial) -> Monomial {
        if self.0.is_empty() {
            return other.clone();
        }
        if other.0.is_empty() {
            return self.clone();
        }
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|(_, e)| *e as i64).sum()
    }
}

pub(crate) type Term = (Monomial, Rational);

/// Unsorted term accumulator; `finish` merges like monomials.
#[derive(Default)]
pub(crate) struct TermAcc {
    terms: Vec<Term>,
}

impl TermAcc {
    pub fn new() -> TermAcc {
        TermAcc::default()
    }

    pub fn push(&mut self, m: Monomial, c: Rational) {
        if !c.is_zero() {
            self.terms.push((m, c));
        }
    }

    pub fn push_scaled(&mut self, m: &Monomial, c: &Rational, e: &Expr) {
        for (m2, c2) in e.terms() {
            self.push(m.mul(m2), c * c2);
        }
    }

    pub fn extend(&mut self, e: &Expr) {
        self.terms.extend(e.terms().iter().cloned());
    }

    pub fn finish(mut self) -> Expr {
        self.terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<Term> = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Expr::from_sorted(out)
    }
}

/// A canonical expression. Cloning is cheap; the term list is shared.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Expr {
    terms: Arc<Vec<Term>>,
}

impl Expr {
    fn from_sorted(terms: Vec<Term>) -> Expr {
        Expr {
            terms: Arc::new(terms),
        }
    }

    pub fn zero() -> Expr {
        Expr::from_sorted(Vec::new())
    }

    pub fn one() -> Expr {
        Expr::from_rational(Rational::one())
    }

    pub fn int(n: i64) -> Expr {
        Expr::from_rational(integer(n))
    }

    pub fn from_rational(c: Rational) -> Expr {
        if c.is_zero() {
            Expr::zero()
        } else {
            Expr::from_sorted(vec![(Monomial::one(), c)])
        }
    }

    pub fn term(m: Monomial, c: Rational) -> Expr {
        if c.is_zero() {
            Expr::zero()
        } else {
            Expr::from_sorted(vec![(m, c)])
        }
    }

    pub fn gen(g: Generator) -> Expr {
        Expr::term(Monomial::single(g, 1), Rational::one())
    }

    pub fn x() -> Expr {
        Expr::gen(Generator::Indep(Indep::X))
    }

    pub fn y() -> Expr {
        Expr::gen(Generator::Indep(Indep::Y))
    }

    pub fn t() -> Expr {
        Expr::gen(Generator::Indep(Indep::T))
    }

    /// The jet coordinate `u[i,j]`.
    pub fn u(i: u32, j: u32) -> Expr {
        Expr::gen(Generator::Jet(i, j))
    }

    pub fn constant(name: &str) -> Expr {
        Expr::gen(Generator::constant(name))
    }

    pub fn atom(atom: FnAtom) -> Expr {
        Expr::gen(Generator::atom(atom))
    }

    /// `name(args)` with no derivatives taken.
    pub fn apply(name: &str, args: Vec<Expr>) -> Expr {
        Expr::atom(FnAtom::plain(name, args))
    }

    pub fn exp(arg: Expr) -> Expr {
        Expr::apply(EXP, vec![arg])
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value as a rational number, if it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// The single generator this expression consists of, if it is exactly one
    /// generator to the first power with unit coefficient.
    pub fn as_generator(&self) -> Option<&Generator> {
        match self.terms.as_slice() {
            [(m, c)] if c.is_one() => match m.factors() {
                [(g, 1)] => Some(g),
                _ => None,
            },
            _ => None,
        }
    }

    /// True for a rational number times a product of symbolic constants.
    pub fn is_constant(&self) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| m.factors().iter().all(|(g, _)| g.is_constant()))
    }

    pub fn scale(&self, c: &Rational) -> Expr {
        if c.is_zero() {
            return Expr::zero();
        }
        Expr::from_sorted(self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect())
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Expr {
        let mut acc = TermAcc::new();
        acc.push_scaled(m, c, self);
        acc.finish()
    }

    pub fn add_expr(&self, other: &Expr) -> Expr {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b) = (&*self.terms, &*other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Expr::from_sorted(out)
    }

    pub fn mul_expr(&self, other: &Expr) -> Expr {
        if self.is_zero() || other.is_zero() {
            return Expr::zero();
        }
        let mut acc = TermAcc::new();
        for (m, c) in self.terms() {
            acc.push_scaled(m, c, other);
        }
        acc.finish()
    }

    pub fn pow(&self, exp: i32) -> Result<Expr> {
        if exp < 0 {
            return self.try_inverse()?.pow(-exp);
        }
        let mut result = Expr::one();
        let mut base = self.clone();
        let mut e = exp as u32;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_expr(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_expr(&base);
            }
        }
        Ok(result)
    }

    /// Multiplicative inverse of a nonzero rational times a product of
    /// symbolic constant powers.
    pub fn try_inverse(&self) -> Result<Expr> {
        match self.terms.as_slice() {
            [(m, c)] => {
                if let Some((g, _)) = m.factors().iter().find(|(g, _)| !g.is_constant()) {
                    return Err(match g {
                        Generator::Const(_) => unreachable!(),
                        _ => Error::NegativeExponent {
                            generator: g.to_string(),
                            exponent: -1,
                        },
                    });
                }
                let inv = Monomial(m.factors().iter().map(|(g, e)| (g.clone(), -e)).collect());
                Ok(Expr::term(inv, c.recip()))
            }
            _ => Err(Error::NotInvertible(self.to_string())),
        }
    }

    /// Every generator occurring anywhere, including inside atom arguments.
    pub fn generators(&self) -> BTreeSet<Generator> {
        let mut out = BTreeSet::new();
        self.collect_generators(&mut out);
        out
    }

    fn collect_generators(&self, out: &mut BTreeSet<Generator>) {
        for (m, _) in self.terms() {
            for (g, _) in m.factors() {
                if let Generator::Fn(a) = g {
                    for arg in a.args() {
                        arg.collect_generators(out);
                    }
                }
                out.insert(g.clone());
            }
        }
    }

    /// Jet coordinates `(i, j)` occurring anywhere in the expression.
    pub fn jets(&self) -> BTreeSet<(u32, u32)> {
        let mut out = BTreeSet::new();
        self.collect_jets(&mut out);
        out
    }

    fn collect_jets(&self, out: &mut BTreeSet<(u32, u32)>) {
        for (m, _) in self.terms() {
            for (g, _) in m.factors() {
                match g {
                    Generator::Jet(i, j) => {
                        out.insert((*i, *j));
                    }
                    Generator::Fn(a) => a.args().iter().for_each(|arg| arg.collect_jets(out)),
                    _ => {}
                }
            }
        }
    }

    pub fn contains(&self, g: &Generator) -> bool {
        self.terms().iter().any(|(m, _)| {
            m.factors().iter().any(|(h, _)| {
                h == g
                    || h.as_atom()
                        .is_some_and(|a| a.args().iter().any(|arg| arg.contains(g)))
            })
        })
    }

    /// True if `g` occurs as an argument of some atom.
    pub fn occurs_in_atom(&self, g: &Generator) -> Option<Arc<FnAtom>> {
        for (m, _) in self.terms() {
            for (h, _) in m.factors() {
                if let Generator::Fn(a) = h {
                    if a.args().iter().any(|arg| arg.contains(g)) {
                        return Some(a.clone());
                    }
                }
            }
        }
        None
    }

    /// Names of all functions applied anywhere in the expression.
    pub fn function_names(&self) -> BTreeSet<(String, usize)> {
        self.generators()
            .into_iter()
            .filter_map(|g| g.as_atom().map(|a| (a.name().to_string(), a.arity())))
            .collect()
    }
}

impl Default for Expr {
    fn default() -> Self {
        Expr::zero()
    }
}

impl From<i64> for Expr {
    fn from(n: i64) -> Self {
        Expr::int(n)
    }
}

impl From<Rational> for Expr {
    fn from(c: Rational) -> Self {
        Expr::from_rational(c)
    }
}

impl From<Generator> for Expr {
    fn from(g: Generator) -> Self {
        Expr::gen(g)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Expr> for &Expr {
            type Output = Expr;
            fn $method(self, rhs: &Expr) -> Expr {
                let f: fn(&Expr, &Expr) -> Expr = $body;
                f(self, rhs)
            }
        }
        impl $tr<Expr> for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Expr> for Expr {
            type Output = Expr;
            fn $method(self, rhs: &Expr) -> Expr {
                (&self).$method(rhs)
            }
        }
        impl $tr<Expr> for &Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.add_expr(b));
binop!(Sub, sub, |a, b| a.add_expr(&-b));
binop!(Mul, mul, |a, b| a.mul_expr(b));

impl Neg for &Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::from_sorted(self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect())
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        -&self
    }
}

impl std::iter::Sum for Expr {
    fn sum<I: Iterator<Item = Expr>>(iter: I) -> Expr {
        let mut acc = TermAcc::new();
        for e in iter {
            acc.extend(&e);
        }
        acc.finish()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Indep(v) => f.write_str(v.name()),
            Generator::Const(name) => f.write_str(name),
            Generator::Jet(i, j) => write!(f, "u[{i},{j}]"),
            Generator::Fn(a) => {
                if a.is_underived() {
                    write!(f, "{}(", a.name())?;
                } else {
                    write!(f, "d({};", a.name())?;
                    for (k, d) in a.deriv().iter().enumerate() {
                        if k > 0 {
                            f.write_str(",")?;
                        }
                        write!(f, "{d}")?;
                    }
                    f.write_str(")(")?;
                }
                for (k, arg) in a.args().iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{arg}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (g, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Expr({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f_uux() -> Expr {
        Expr::apply("f", vec![Expr::u(0, 0), Expr::u(1, 0)])
    }

    #[test]
    fn like_terms_merge() {
        assert_eq!(
            Expr::u(1, 0) + Expr::u(1, 0),
            Expr::u(1, 0).scale(&integer(2))
        );
    }

    #[test]
    fn ring_identity_cancels() {
        let x = Expr::x();
        let e = &x * (Expr::u(0, 0) + Expr::u(1, 0)) - &x * Expr::u(0, 0) - &x * Expr::u(1, 0);
        assert!(e.is_zero());
    }

    #[test]
    fn atoms_commute() {
        let u2 = Expr::u(0, 0).pow(2).unwrap();
        assert!((f_uux() * &u2 - &u2 * f_uux()).is_zero());
        assert!((f_uux() - f_uux()).is_zero());
    }

    #[test]
    fn exp_atoms_do_not_merge() {
        let e = Expr::exp(Expr::x()) * Expr::exp(Expr::y()) - Expr::exp(Expr::x() + Expr::y());
        assert!(!e.is_zero());
    }

    #[test]
    fn jet_order_is_graded() {
        let mut gens = vec![
            Generator::Jet(0, 2),
            Generator::Jet(3, 0),
            Generator::Jet(1, 0),
            Generator::Jet(0, 0),
            Generator::Jet(1, 1),
        ];
        gens.sort();
        assert_eq!(
            gens,
            vec![
                Generator::Jet(0, 0),
                Generator::Jet(1, 0),
                Generator::Jet(0, 2),
                Generator::Jet(1, 1),
                Generator::Jet(3, 0),
            ]
        );
        assert!(Generator::Indep(Indep::T) < Generator::constant("a"));
        assert!(Generator::constant("zz") < Generator::Jet(0, 0));
    }

    #[test]
    fn laurent_constants() {
        let c = Expr::constant("c1");
        let inv = c.try_inverse().unwrap();
        assert_eq!(&c * &inv, Expr::one());
        assert_eq!(c.pow(-2).unwrap() * c.pow(2).unwrap(), Expr::one());
        assert!(Expr::u(1, 0).try_inverse().is_err());
        assert!((Expr::constant("a") + Expr::one()).try_inverse().is_err());
    }

    #[test]
    fn negative_jet_power_rejected() {
        let err = Monomial::from_factors(vec![(Generator::Jet(1, 0), -1)]).unwrap_err();
        assert!(matches!(err, Error::NegativeExponent { .. }));
        assert!(Monomial::from_factors(vec![(Generator::constant("a"), -3)]).is_ok());
    }

    #[test]
    fn display_forms() {
        let e = Expr::u(1, 0).pow(2).unwrap().scale(&rational(-3, 4)) + Expr::constant("a");
        assert_eq!(e.to_string(), "a - 3/4*u[1,0]^2");
        let d =
            Expr::atom(FnAtom::new("f", vec![1, 0], vec![Expr::u(0, 0), Expr::u(1, 0)]).unwrap());
        assert_eq!(d.to_string(), "d(f;1,0)(u[0,0], u[1,0])");
    }
}
