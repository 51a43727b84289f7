//! Local conservation laws `D_t(ρ) + D_x(σ) + D_y(ζ) = 0`.

use crate::error::{Error, Result};
use crate::expr::{Expr, Rational};
use crate::jet::{total_t, total_x, total_y, EvolutionEquation};
use crate::variational::euler;

/// A density and flux triple on a given equation. The triple need not
/// verify; see [`ConservationLaw::verifies`].
#[derive(Clone, Debug)]
pub struct ConservationLaw {
    pub rho: Expr,
    pub sigma: Expr,
    pub zeta: Expr,
    eq: EvolutionEquation,
}

impl ConservationLaw {
    pub fn new(eq: &EvolutionEquation, rho: Expr, sigma: Expr, zeta: Expr) -> ConservationLaw {
        ConservationLaw {
            rho,
            sigma,
            zeta,
            eq: eq.clone(),
        }
    }

    pub fn equation(&self) -> &EvolutionEquation {
        &self.eq
    }

    /// All three components vanish.
    pub fn is_degenerate(&self) -> bool {
        self.rho.is_zero() && self.sigma.is_zero() && self.zeta.is_zero()
    }

    /// `D_t(ρ) + D_x(σ) + D_y(ζ)`.
    pub fn residual(&self) -> Expr {
        total_t(&self.rho, &self.eq) + total_x(&self.sigma) + total_y(&self.zeta)
    }

    pub fn verifies(&self) -> bool {
        self.residual().is_zero()
    }

    /// `δρ/δu`.
    pub fn characteristic(&self) -> Expr {
        euler(&self.rho)
    }

    /// Trivial in the sense of a vanishing characteristic. Rejects triples
    /// that are not conservation laws.
    pub fn is_trivial_by_characteristic(&self) -> Result<bool> {
        let residual = self.residual();
        if !residual.is_zero() {
            return Err(Error::NotVerified {
                residual: residual.to_string(),
            });
        }
        Ok(self.characteristic().is_zero())
    }

    /// `c1·self + c2·other`, component-wise.
    pub fn combine(
        c1: &Rational,
        first: &ConservationLaw,
        c2: &Rational,
        second: &ConservationLaw,
    ) -> Result<ConservationLaw> {
        if !first.eq.same_as(&second.eq) {
            return Err(Error::MismatchedEquations);
        }
        let lin = |a: &Expr, b: &Expr| a.scale(c1) + b.scale(c2);
        Ok(ConservationLaw {
            rho: lin(&first.rho, &second.rho),
            sigma: lin(&first.sigma, &second.sigma),
            zeta: lin(&first.zeta, &second.zeta),
            eq: first.eq.clone(),
        })
    }
}

/// The trivial law `ρ = D_x α − D_y β`, `σ = D_y γ − D_t α`, `ζ = D_t β − D_x γ`.
pub fn trivial_from_potentials(
    alpha: &Expr,
    beta: &Expr,
    gamma: &Expr,
    eq: &EvolutionEquation,
) -> ConservationLaw {
    ConservationLaw::new(
        eq,
        total_x(alpha) - total_y(beta),
        total_y(gamma) - total_t(alpha, eq),
        total_t(beta, eq) - total_x(gamma),
    )
}
