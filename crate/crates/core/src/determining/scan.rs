use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

use super::{operator_residual, OperatorKind};
use crate::expr::{Expr, FnAtom, Generator, Rational};
use crate::jet::EvolutionEquation;
use crate::operator::DiffOperator;

/// `Σ_{i≤r, j≤s} p_ij D_x^i D_y^j` with every `p_ij` a distinct unknown
/// function of `x, y, t` and the jets of total order at most `order`.
#[derive(Clone, Debug)]
pub struct AnsatzOperator {
    pub r: u32,
    pub s: u32,
    pub order: u32,
    coefficients: BTreeMap<(u32, u32), FnAtom>,
}

impl AnsatzOperator {
    pub fn new(prefix: &str, r: u32, s: u32, order: u32) -> AnsatzOperator {
        let mut args = vec![Expr::x(), Expr::y(), Expr::t()];
        for total in 0..=order {
            for i in (0..=total).rev() {
                args.push(Expr::u(i, total - i));
            }
        }
        let coefficients = (0..=r)
            .flat_map(|i| (0..=s).map(move |j| (i, j)))
            .map(|(i, j)| {
                (
                    (i, j),
                    FnAtom::plain(&format!("{prefix}_{i}_{j}"), args.clone()),
                )
            })
            .collect();
        AnsatzOperator {
            r,
            s,
            order,
            coefficients,
        }
    }

    /// The ansatz with no unknown coefficients.
    pub fn empty() -> AnsatzOperator {
        AnsatzOperator {
            r: 0,
            s: 0,
            order: 0,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn coefficients(&self) -> &BTreeMap<(u32, u32), FnAtom> {
        &self.coefficients
    }

    pub fn to_operator(&self) -> DiffOperator {
        DiffOperator::from_terms(
            self.coefficients
                .iter()
                .map(|(k, a)| (*k, Expr::atom(a.clone())))
                .collect(),
        )
    }
}

/// One elimination: the residual's top coefficient at `position` was
/// `factor · p_{coefficient}`, so that unknown vanishes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ForcingStep {
    pub coefficient: (u32, u32),
    pub position: (u32, u32),
    #[serde(serialize_with = "crate::report::serialize_rational")]
    pub factor: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ScanOutcome {
    /// Every unknown coefficient was forced to vanish.
    AllForced,
    /// The top coefficient was not a rational multiple of a single unknown.
    Inconclusive {
        position: (u32, u32),
        coefficient: Expr,
    },
    /// The residual vanished with unknowns left over.
    Unforced { remaining: Vec<(u32, u32)> },
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub kind: OperatorKind,
    pub r_max: u32,
    pub s_max: u32,
    pub order: u32,
    pub steps: Vec<ForcingStep>,
    pub outcome: ScanOutcome,
}

impl ScanReport {
    pub fn all_forced(&self) -> bool {
        self.outcome == ScanOutcome::AllForced
    }
}

pub fn noether_scan(
    eq: &EvolutionEquation,
    r_max: u32,
    s_max: u32,
    order: u32,
    kind: OperatorKind,
) -> ScanReport {
    let prefix = match kind {
        OperatorKind::Noether => "p",
        OperatorKind::InverseNoether => "b",
    };
    scan_ansatz(eq, &AnsatzOperator::new(prefix, r_max, s_max, order), kind)
}

/// Repeatedly reads off the top coefficient of the residual, checks that it
/// is a rational multiple of one unknown, and sets that unknown to zero.
pub fn scan_ansatz(
    eq: &EvolutionEquation,
    ansatz: &AnsatzOperator,
    kind: OperatorKind,
) -> ScanReport {
    let mut residual = operator_residual(eq, &ansatz.to_operator(), kind);
    let mut remaining: HashMap<String, (u32, u32)> = ansatz
        .coefficients()
        .iter()
        .map(|(k, a)| (a.name().to_string(), *k))
        .collect();
    let mut steps = Vec::new();

    let outcome = loop {
        let Some(position) = residual.top_key() else {
            if remaining.is_empty() {
                break ScanOutcome::AllForced;
            }
            let mut left: Vec<(u32, u32)> = remaining.values().copied().collect();
            left.sort();
            break ScanOutcome::Unforced { remaining: left };
        };
        let top = residual.coeff(position.0, position.1);
        let Some((name, factor)) = single_unknown(&top, &remaining) else {
            break ScanOutcome::Inconclusive {
                position,
                coefficient: top,
            };
        };
        let coefficient = remaining.remove(&name).expect("checked by single_unknown");
        steps.push(ForcingStep {
            coefficient,
            position,
            factor,
        });
        let names = HashSet::from([name]);
        residual = residual.map_coefficients(|h| h.vanish_functions(&names));
    };

    ScanReport {
        kind,
        r_max: ansatz.r,
        s_max: ansatz.s,
        order: ansatz.order,
        steps,
        outcome,
    }
}

fn single_unknown(e: &Expr, remaining: &HashMap<String, (u32, u32)>) -> Option<(String, Rational)> {
    let [(m, c)] = e.terms() else {
        return None;
    };
    let [(Generator::Fn(atom), 1)] = m.factors() else {
        return None;
    };
    (atom.is_underived() && remaining.contains_key(atom.name()))
        .then(|| (atom.name().to_string(), c.clone()))
}
