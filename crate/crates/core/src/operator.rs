//! Linear differential operators `Σ h_ij D_x^i D_y^j` with expression
//! coefficients, kept in standard form (derivatives to the right).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::expr::{integer, Expr};
use crate::jet::{total_t, total_x, total_y, EvolutionEquation};
use crate::par;

/// `deg_x` or `deg_y`; the zero operator has degree `-∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffOperator {
    terms: BTreeMap<(u32, u32), Expr>,
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, m| acc * (n - m) as i64 / (m + 1) as i64)
}

/// Lazily filled table of `D_x^p D_y^q e`.
struct DerivativeTable {
    cache: HashMap<(u32, u32), Expr>,
}

impl DerivativeTable {
    fn new(e: &Expr) -> DerivativeTable {
        DerivativeTable {
            cache: HashMap::from([((0, 0), e.clone())]),
        }
    }

    fn get(&mut self, p: u32, q: u32) -> Expr {
        if let Some(v) = self.cache.get(&(p, q)) {
            return v.clone();
        }
        let v = if p > 0 {
            total_x(&self.get(p - 1, q))
        } else {
            total_y(&self.get(p, q - 1))
        };
        self.cache.insert((p, q), v.clone());
        v
    }
}

fn sum_into(parts: Vec<Vec<((u32, u32), Expr)>>) -> DiffOperator {
    let mut grouped: BTreeMap<(u32, u32), Vec<Expr>> = BTreeMap::new();
    for (key, e) in parts.into_iter().flatten() {
        grouped.entry(key).or_default().push(e);
    }
    let entries: Vec<((u32, u32), Vec<Expr>)> = grouped.into_iter().collect();
    let summed = par::map(&entries, |(key, es)| {
        (*key, es.iter().cloned().sum::<Expr>())
    });
    DiffOperator::from_terms(summed.into_iter().collect())
}

impl DiffOperator {
    pub fn zero() -> DiffOperator {
        DiffOperator::default()
    }

    pub fn identity() -> DiffOperator {
        DiffOperator::monomial(0, 0, Expr::one())
    }

    /// `coeff · D_x^i D_y^j`.
    pub fn monomial(i: u32, j: u32, coeff: Expr) -> DiffOperator {
        DiffOperator::from_terms(BTreeMap::from([((i, j), coeff)]))
    }

    pub fn dx() -> DiffOperator {
        DiffOperator::monomial(1, 0, Expr::one())
    }

    pub fn dy() -> DiffOperator {
        DiffOperator::monomial(0, 1, Expr::one())
    }

    /// Multiplication by `h`.
    pub fn multiplication(h: Expr) -> DiffOperator {
        DiffOperator::monomial(0, 0, h)
    }

    pub fn from_terms(mut terms: BTreeMap<(u32, u32), Expr>) -> DiffOperator {
        terms.retain(|_, e| !e.is_zero());
        DiffOperator { terms }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Expr> {
        &self.terms
    }

    pub fn coeff(&self, i: u32, j: u32) -> Expr {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> (Degree, Degree) {
        let dx = self.terms.keys().map(|k| k.0).max();
        let dy = self.terms.keys().map(|k| k.1).max();
        let wrap = |d: Option<u32>| d.map_or(Degree::NegInfinity, Degree::Finite);
        (wrap(dx), wrap(dy))
    }

    /// The largest key under the graded order on `(i + j, i)`.
    pub fn top_key(&self) -> Option<(u32, u32)> {
        self.terms.keys().copied().max_by_key(|&(i, j)| (i + j, i))
    }

    /// `Σ h_ij D_x^i D_y^j e`.
    pub fn apply(&self, e: &Expr) -> Expr {
        let mut table = DerivativeTable::new(e);
        self.terms
            .iter()
            .map(|(&(i, j), h)| h * table.get(i, j))
            .sum()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &DiffOperator) -> DiffOperator {
        if self.is_zero() || other.is_zero() {
            return DiffOperator::zero();
        }
        let inner: Vec<(&(u32, u32), &Expr)> = other.terms.iter().collect();
        let parts = par::map(&inner, |&(&(k, l), b)| {
            let mut table = DerivativeTable::new(b);
            let mut out = Vec::new();
            for (&(i, j), a) in &self.terms {
                for p in 0..=i {
                    for q in 0..=j {
                        let db = table.get(p, q);
                        if db.is_zero() {
                            continue;
                        }
                        let c = integer(binomial(i, p) * binomial(j, q));
                        out.push(((i - p + k, j - q + l), (a * &db).scale(&c)));
                    }
                }
            }
            out
        });
        sum_into(parts)
    }

    /// `L* = Σ (-D_x)^i (-D_y)^j ∘ h_ij`, in standard form.
    pub fn adjoint(&self) -> DiffOperator {
        let entries: Vec<(&(u32, u32), &Expr)> = self.terms.iter().collect();
        let parts = par::map(&entries, |&(&(i, j), h)| {
            let mut table = DerivativeTable::new(h);
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            let mut out = Vec::new();
            for p in 0..=i {
                for q in 0..=j {
                    let dh = table.get(p, q);
                    if dh.is_zero() {
                        continue;
                    }
                    let c = integer(sign * binomial(i, p) * binomial(j, q));
                    out.push(((i - p, j - q), dh.scale(&c)));
                }
            }
            out
        });
        sum_into(parts)
    }

    /// Coefficient-wise `D_t`.
    pub fn dt(&self, eq: &EvolutionEquation) -> DiffOperator {
        let entries: Vec<(&(u32, u32), &Expr)> = self.terms.iter().collect();
        let done = par::map(&entries, |&(&k, h)| (k, total_t(h, eq)));
        DiffOperator::from_terms(done.into_iter().collect())
    }

    pub fn add(&self, other: &DiffOperator) -> DiffOperator {
        let mut terms = self.terms.clone();
        for (k, e) in &other.terms {
            let entry = terms.entry(*k).or_default();
            *entry = &*entry + e;
        }
        DiffOperator::from_terms(terms)
    }

    pub fn neg(&self) -> DiffOperator {
        DiffOperator {
            terms: self.terms.iter().map(|(k, e)| (*k, -e)).collect(),
        }
    }

    pub fn sub(&self, other: &DiffOperator) -> DiffOperator {
        self.add(&other.neg())
    }

    /// Left multiplication of every coefficient by `h`.
    pub fn scale(&self, h: &Expr) -> DiffOperator {
        DiffOperator::from_terms(self.terms.iter().map(|(k, e)| (*k, h * e)).collect())
    }

    /// Applies `f` to every coefficient.
    pub fn map_coefficients<F>(&self, f: F) -> DiffOperator
    where
        F: Fn(&Expr) -> Expr + Sync + Send,
    {
        let entries: Vec<(&(u32, u32), &Expr)> = self.terms.iter().collect();
        let done = par::map(&entries, |&(&k, h)| (k, f(h)));
        DiffOperator::from_terms(done.into_iter().collect())
    }
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, ((i, j), h)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({h})")?;
            if *i > 0 {
                write!(f, "*Dx^{i}")?;
            }
            if *j > 0 {
                write!(f, "*Dy^{j}")?;
            }
        }
        Ok(())
    }
}
