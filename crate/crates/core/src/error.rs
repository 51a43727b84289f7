use std::ops::Range;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative exponent {exponent} on {generator}: only symbolic constants may carry negative powers")]
    NegativeExponent { generator: String, exponent: i64 },

    #[error("cannot divide by {0}: divisors must be nonzero rationals times powers of symbolic constants")]
    NotInvertible(String),

    #[error("function `{name}` expects {expected} argument(s), found {found}")]
    Arity {
        name: String,
        expected: usize,
        found: usize,
    },

    #[error("{message} at {}..{}", span.start, span.end)]
    Syntax { message: String, span: Range<usize> },

    #[error("unknown function `{name}` at {}..{} (declare it first)", span.start, span.end)]
    UnknownFunction { name: String, span: Range<usize> },

    #[error("malformed equation spec: {0}")]
    EquationSpec(String),

    #[error("invalid nonlinearity: {0}")]
    Nonlinearity(String),

    #[error("expression is not polynomial in {generator}: it occurs inside {atom}")]
    NotPolynomial { generator: String, atom: String },

    #[error("atom {atom} occurs nonlinearly in the term {term}")]
    NonlinearAtom { atom: String, term: String },

    #[error("conservation laws belong to different equations")]
    MismatchedEquations,

    #[error("triple is not a conservation law: residual {residual}")]
    NotVerified { residual: String },

    #[error("{0}")]
    Precondition(String),
}
