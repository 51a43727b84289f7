use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::expr::{Expr, Generator, Monomial};

/// Coefficients of `e` as a polynomial in `v`: entry `k` is the coefficient
/// of `v^k`. Fails if `v` occurs inside an atom argument or with a negative
/// power.
pub fn split_by_generator(e: &Expr, v: &Generator) -> Result<Vec<Expr>> {
    if let Some(atom) = e.occurs_in_atom(v) {
        return Err(Error::NotPolynomial {
            generator: v.to_string(),
            atom: Generator::Fn(atom).to_string(),
        });
    }
    let mut buckets: BTreeMap<usize, Vec<(Monomial, crate::expr::Rational)>> = BTreeMap::new();
    for (m, c) in e.terms() {
        let k = m.exponent_of(v);
        if k < 0 {
            return Err(Error::NotPolynomial {
                generator: v.to_string(),
                atom: format!("{v}^{k}"),
            });
        }
        buckets
            .entry(k as usize)
            .or_default()
            .push((m.without(v), c.clone()));
    }
    let len = buckets.keys().next_back().map_or(0, |k| k + 1);
    let mut out = vec![Expr::zero(); len];
    for (k, terms) in buckets {
        out[k] = terms.into_iter().map(|(m, c)| Expr::term(m, c)).sum();
    }
    Ok(out)
}

pub fn split_by_jet(e: &Expr, i: u32, j: u32) -> Result<Vec<Expr>> {
    split_by_generator(e, &Generator::Jet(i, j))
}

/// Result of splitting a linear expression by a list of atoms.
#[derive(Clone, Debug, PartialEq)]
pub struct AtomSplit {
    pub coefficients: Vec<(Generator, Expr)>,
    pub remainder: Expr,
}

impl AtomSplit {
    pub fn coefficient(&self, g: &Generator) -> Expr {
        self.coefficients
            .iter()
            .find(|(h, _)| h == g)
            .map(|(_, e)| e.clone())
            .unwrap_or_default()
    }
}

/// Treats the listed atoms as independent functions and collects their
/// coefficients. Each term may contain at most one listed atom, to the
/// first power.
pub fn split_by_fn_atoms(e: &Expr, atoms: &[Generator]) -> Result<AtomSplit> {
    for a in atoms {
        if let Some(outer) = e.occurs_in_atom(a) {
            return Err(Error::NonlinearAtom {
                atom: a.to_string(),
                term: Generator::Fn(outer).to_string(),
            });
        }
    }
    let mut coefficients: Vec<Vec<Expr>> = vec![Vec::new(); atoms.len()];
    let mut remainder = Vec::new();
    for (m, c) in e.terms() {
        let hits: Vec<(usize, i32)> = atoms
            .iter()
            .enumerate()
            .filter_map(|(k, a)| {
                let p = m.exponent_of(a);
                (p != 0).then_some((k, p))
            })
            .collect();
        let term = || Expr::term(m.clone(), c.clone());
        match hits.as_slice() {
            [] => remainder.push(term()),
            [(k, 1)] => coefficients[*k].push(Expr::term(m.without(&atoms[*k]), c.clone())),
            _ => {
                return Err(Error::NonlinearAtom {
                    atom: atoms[hits[0].0].to_string(),
                    term: term().to_string(),
                })
            }
        }
    }
    Ok(AtomSplit {
        coefficients: atoms
            .iter()
            .cloned()
            .zip(coefficients.into_iter().map(|v| v.into_iter().sum()))
            .collect(),
        remainder: remainder.into_iter().sum(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::integer;

    #[test]
    fn split_polynomial_in_jet() {
        let v = Expr::u(1, 0);
        let e = v.pow(2).unwrap().scale(&integer(3)) + Expr::x() * &v;
        let chain = split_by_jet(&e, 1, 0).unwrap();
        assert_eq!(chain, vec![Expr::zero(), Expr::x(), Expr::int(3)]);
    }

    #[test]
    fn split_rejects_nested_occurrence() {
        let e = Expr::apply("f", vec![Expr::u(0, 0), Expr::u(1, 0)]);
        assert!(matches!(
            split_by_jet(&e, 1, 0),
            Err(Error::NotPolynomial { .. })
        ));
    }

    #[test]
    fn split_by_atom() {
        let g = Expr::apply("g", vec![Expr::u(0, 0)]);
        let e = &g * Expr::x() + Expr::y();
        let gen = g.as_generator().unwrap().clone();
        let s = split_by_fn_atoms(&e, std::slice::from_ref(&gen)).unwrap();
        assert_eq!(s.coefficient(&gen), Expr::x());
        assert_eq!(s.remainder, Expr::y());

        let sq = g.pow(2).unwrap();
        assert!(matches!(
            split_by_fn_atoms(&sq, std::slice::from_ref(&gen)),
            Err(Error::NonlinearAtom { .. })
        ));
        let nested = Expr::apply("h", vec![g.clone()]);
        assert!(split_by_fn_atoms(&nested, &[gen]).is_err());
    }
}
