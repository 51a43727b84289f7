mod common;

use common::{expr, to_tree, tree};
use jetlaw::dsl::{parse, print, Context};
use jetlaw::{Generator, Indep};
use proptest::prelude::*;

fn generators() -> impl Strategy<Value = Generator> {
    prop_oneof![
        Just(Generator::Indep(Indep::X)),
        Just(Generator::Indep(Indep::Y)),
        Just(Generator::constant("c_1")),
        Just(Generator::Jet(0, 0)),
        Just(Generator::Jet(1, 0)),
        Just(Generator::Jet(2, 1)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn normalize_is_idempotent(t in tree(6)) {
        if let Ok(e) = t.normalize() {
            prop_assert_eq!(to_tree(&e).normalize().unwrap(), e);
        }
    }

    #[test]
    fn print_parse_round_trip(e in expr(5)) {
        let ctx = Context::from_expr(&e);
        let text = print(&e);
        let back = parse(&text, &ctx).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
        prop_assert_eq!(back, e);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ring_axioms(a in expr(3), b in expr(3), c in expr(3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn pdiff_leibniz(a in expr(3), b in expr(3), g in generators()) {
        let lhs = (&a * &b).pdiff(&g);
        let rhs = a.pdiff(&g) * &b + &a * b.pdiff(&g);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pdiff_clairaut(e in expr(4), g1 in generators(), g2 in generators()) {
        prop_assert_eq!(e.pdiff(&g1).pdiff(&g2), e.pdiff(&g2).pdiff(&g1));
    }
}
