mod common;

use common::{gir, local, nonzero_operator, operator};
use jetlaw::{euler, total_t, total_x, total_y, Degree};
use proptest::prelude::*;

fn add(d1: Degree, d2: Degree) -> Degree {
    match (d1, d2) {
        (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
        _ => Degree::NegInfinity,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn euler_annihilates_divergences(p in local(2), q in local(2)) {
        prop_assert!(euler(&(total_x(&p) + total_y(&q))).is_zero());
    }

    #[test]
    fn total_derivatives_commute(e in local(3)) {
        prop_assert_eq!(total_x(&total_y(&e)), total_y(&total_x(&e)));
    }

    #[test]
    fn total_derivatives_are_derivations(a in local(2), b in local(2)) {
        let eq = gir();
        let ab = &a * &b;
        prop_assert_eq!(total_x(&ab), total_x(&a) * &b + &a * total_x(&b));
        prop_assert_eq!(total_y(&ab), total_y(&a) * &b + &a * total_y(&b));
        prop_assert_eq!(total_t(&ab, &eq), total_t(&a, &eq) * &b + &a * total_t(&b, &eq));
    }

    #[test]
    fn adjoint_bilinear_identity(l in operator(), p in local(1), q in local(1)) {
        let lhs = &p * l.apply(&q) - &q * l.adjoint().apply(&p);
        prop_assert!(euler(&lhs).is_zero());
    }

    #[test]
    fn adjoint_is_an_involution(l in operator()) {
        prop_assert_eq!(l.adjoint().adjoint(), l);
    }

    #[test]
    fn adjoint_reverses_composition(l in operator(), m in operator()) {
        prop_assert_eq!(l.compose(&m).adjoint(), m.adjoint().compose(&l.adjoint()));
    }

    #[test]
    fn composition_is_application(l in operator(), m in operator(), e in local(2)) {
        prop_assert_eq!(l.compose(&m).apply(&e), l.apply(&m.apply(&e)));
    }

    #[test]
    fn degrees_add_under_composition(l in nonzero_operator(), m in nonzero_operator()) {
        let (lx, ly) = l.degree();
        let (mx, my) = m.degree();
        prop_assert_eq!(l.compose(&m).degree(), (add(lx, mx), add(ly, my)));
    }
}
