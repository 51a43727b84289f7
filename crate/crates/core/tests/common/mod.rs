#![allow(dead_code)]

use std::collections::BTreeMap;

use jetlaw::expr::{rational, Tree};
use jetlaw::{DiffOperator, EvolutionEquation, Expr, Generator, Indep};
use proptest::prelude::*;

pub fn leaf() -> impl Strategy<Value = Tree> {
    prop_oneof![
        (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Tree::Num(rational(n, d))),
        prop_oneof![Just(Indep::X), Just(Indep::Y), Just(Indep::T)]
            .prop_map(|v| Tree::Gen(Generator::Indep(v))),
        prop_oneof![Just("a"), Just("c_1")].prop_map(|c| Tree::Gen(Generator::constant(c))),
        (0u32..=2, 0u32..=1).prop_map(|(i, j)| Tree::Gen(Generator::Jet(i, j))),
        (-2i32..=2).prop_map(|e| Tree::Pow(Box::new(Tree::Gen(Generator::constant("c_1"))), e)),
    ]
}

fn apply(name: &str, args: Vec<Tree>) -> Tree {
    Tree::Apply {
        name: name.to_string(),
        deriv: None,
        args,
    }
}

/// Random unnormalized trees of depth at most `depth`.
pub fn tree(depth: u32) -> impl Strategy<Value = Tree> {
    leaf().prop_recursive(depth, 24, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..=3).prop_map(Tree::Sum),
            prop::collection::vec(inner.clone(), 2..=2).prop_map(Tree::Product),
            inner.clone().prop_map(|t| Tree::Neg(Box::new(t))),
            (inner.clone(), 0i32..=2).prop_map(|(t, e)| Tree::Pow(Box::new(t), e)),
            (inner.clone(), 1i64..=3).prop_map(|(t, d)| Tree::Quotient(
                Box::new(t),
                Box::new(Tree::Num(rational(d, 1)))
            )),
            (inner.clone(), inner.clone()).prop_map(|(p, q)| apply("f", vec![p, q])),
            inner.clone().prop_map(|p| apply("g", vec![p])),
            inner.prop_map(|p| apply("exp", vec![p])),
        ]
    })
}

/// A local function: atom arguments are restricted to `u[0,0]`, `u[1,0]`,
/// `x` and `y` so that total derivatives stay small.
pub fn local(depth: u32) -> impl Strategy<Value = Expr> {
    let base = prop_oneof![
        3 => leaf(),
        1 => Just(apply("f", vec![Tree::Gen(Generator::Jet(0, 0)), Tree::Gen(Generator::Jet(1, 0))])),
        1 => Just(apply("g", vec![Tree::Gen(Generator::Indep(Indep::Y))])),
        1 => Just(apply("exp", vec![Tree::Gen(Generator::Indep(Indep::X))])),
    ];
    base.prop_recursive(depth, 12, 2, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..=2).prop_map(Tree::Sum),
            prop::collection::vec(inner, 2..=2).prop_map(Tree::Product),
        ]
    })
    .prop_map(|t| t.normalize().expect("local trees normalize"))
}

pub fn expr(depth: u32) -> impl Strategy<Value = Expr> {
    tree(depth).prop_filter_map("non-normalizable", |t| t.normalize().ok())
}

/// Operators of bidegree at most `(2, 1)` with local coefficients.
pub fn operator() -> impl Strategy<Value = DiffOperator> {
    prop::collection::btree_map((0u32..=2, 0u32..=1), local(1), 1..=3)
        .prop_map(|m: BTreeMap<(u32, u32), Expr>| DiffOperator::from_terms(m))
}

pub fn nonzero_operator() -> impl Strategy<Value = DiffOperator> {
    operator().prop_filter("zero operator", |op| !op.is_zero())
}

pub fn gir() -> EvolutionEquation {
    EvolutionEquation::gir_opaque(Expr::constant("a"), "f").unwrap()
}

/// Rebuilds an unnormalized tree from a canonical expression.
pub fn to_tree(e: &Expr) -> Tree {
    Tree::Sum(
        e.terms()
            .iter()
            .map(|(m, c)| {
                let mut factors = vec![Tree::Num(c.clone())];
                for (g, p) in m.factors() {
                    factors.push(Tree::Pow(Box::new(Tree::Gen(g.clone())), *p));
                }
                Tree::Product(factors)
            })
            .collect(),
    )
}
