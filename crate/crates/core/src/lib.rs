//! Symbolic jet calculus for evolution equations `u_t = F` in two space
//! dimensions: exact differential polynomials, total derivatives, the Euler
//! operator, linear differential operators and their adjoints, conservation
//! laws, and the determining equations for cosymmetries, symmetries and
//! Noether operators.

pub mod conservation;
pub mod determining;
pub mod dsl;
pub mod error;
pub mod expr;
pub mod jet;
pub mod operator;
pub mod par;
pub mod report;
pub mod suite;
pub mod variational;

pub use conservation::ConservationLaw;
pub use error::{Error, Result};
pub use expr::{Expr, FnAtom, Generator, Indep, Rational};
pub use jet::{total_t, total_x, total_y, EvolutionEquation};
pub use operator::{Degree, DiffOperator};
pub use variational::{euler, frechet};
