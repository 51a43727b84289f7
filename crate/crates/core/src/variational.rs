//! Variational derivative and linearization.

use std::collections::BTreeMap;

use crate::expr::{Expr, Generator};
use crate::jet::total_xy;
use crate::operator::DiffOperator;

/// `δe/δu = Σ (-1)^{i+j} D_x^i D_y^j ∂e/∂u[i,j]`.
pub fn euler(e: &Expr) -> Expr {
    e.jets()
        .into_iter()
        .map(|(i, j)| {
            let partial = e.pdiff(&Generator::Jet(i, j));
            let term = total_xy(&partial, i, j);
            if (i + j) % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum()
}

/// The linearization `D_h = Σ ∂h/∂u[i,j] D_x^i D_y^j`.
pub fn frechet(h: &Expr) -> DiffOperator {
    let terms: BTreeMap<(u32, u32), Expr> = h
        .jets()
        .into_iter()
        .map(|(i, j)| ((i, j), h.pdiff(&Generator::Jet(i, j))))
        .collect();
    DiffOperator::from_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::integer;
    use crate::jet::total_x;

    #[test]
    fn euler_of_linear_density() {
        let m = Expr::apply("M", vec![Expr::y()]);
        assert_eq!(euler(&(&m * Expr::u(0, 0))), m);
    }

    #[test]
    fn euler_of_square() {
        let e = Expr::u(1, 0).pow(2).unwrap();
        assert_eq!(euler(&e), Expr::u(2, 0).scale(&integer(-2)));
    }

    #[test]
    fn euler_kills_total_derivative() {
        let e = total_x(&(Expr::u(0, 0) * Expr::u(1, 1)));
        assert!(euler(&e).is_zero());
    }

    #[test]
    fn frechet_examples() {
        assert_eq!(frechet(&Expr::u(0, 0)), DiffOperator::identity());
        let op = frechet(&Expr::u(1, 0).pow(2).unwrap());
        assert_eq!(
            op,
            DiffOperator::monomial(1, 0, Expr::u(1, 0).scale(&integer(2)))
        );
    }
}
