//! Machine-readable verification reports.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::expr::{Expr, Rational};

pub fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Zero,
    Nonzero,
    ForcedZero,
    Inconclusive,
}

impl Verdict {
    pub fn of(residual: &Expr) -> Verdict {
        if residual.is_zero() {
            Verdict::Zero
        } else {
            Verdict::Nonzero
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Zero => "zero",
            Verdict::Nonzero => "nonzero",
            Verdict::ForcedZero => "forced-zero",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub id: String,
    pub verdict: Verdict,
    pub residual: String,
    pub millis: u64,
    pub expected: Verdict,
    pub tag: String,
    pub inputs: BTreeMap<String, String>,
}

impl Case {
    pub fn passed(&self) -> bool {
        self.verdict == self.expected
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.cases.iter().all(Case::passed)
    }

    pub fn case(&self, id: &str) -> Option<&Case> {
        self.cases.iter().find(|c| c.id == id)
    }

    /// Zeroes every timing so that reruns serialize identically.
    pub fn without_timing(mut self) -> Report {
        for c in &mut self.cases {
            c.millis = 0;
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let mark = if c.passed() { "ok  " } else { "FAIL" };
            out.push_str(&format!(
                "{mark} {:<40} {:<12} (expected {}, {} ms)\n",
                c.id,
                c.verdict.as_str(),
                c.expected.as_str(),
                c.millis
            ));
            if !c.passed() || self.cases.len() == 1 {
                out.push_str(&format!("     residual: {}\n", c.residual));
            }
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        let passed = self.cases.iter().filter(|c| c.passed()).count();
        out.push_str(&format!(
            "{passed}/{} cases as expected\n",
            self.cases.len()
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_names() {
        assert_eq!(
            serde_json::to_string(&Verdict::ForcedZero).unwrap(),
            "\"forced-zero\""
        );
        assert_eq!(Verdict::of(&Expr::zero()), Verdict::Zero);
        assert_eq!(Verdict::of(&Expr::x()), Verdict::Nonzero);
    }

    #[test]
    fn schema_field_names() {
        let report = Report {
            suite: "s".into(),
            cases: vec![Case {
                id: "c".into(),
                verdict: Verdict::Zero,
                residual: "0".into(),
                millis: 3,
                expected: Verdict::Zero,
                tag: "t".into(),
                inputs: BTreeMap::new(),
            }],
            notes: vec![],
        };
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        for key in ["id", "verdict", "residual", "millis"] {
            assert!(v["cases"][0].get(key).is_some(), "{key}");
        }
        assert_eq!(v["suite"], "s");
    }
}
