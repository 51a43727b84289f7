//! Explicit conservation-law families of the generalized Infeld–Rowlands
//! equation `u_t = -(u_xxx + a u_y + f)_x`.

use crate::conservation::ConservationLaw;
use crate::error::{Error, Result};
use crate::expr::{Expr, Generator};
use crate::jet::{total_x, total_y, EvolutionEquation};

fn u() -> Expr {
    Expr::u(0, 0)
}

fn flux_core(eq: &EvolutionEquation) -> Result<Expr> {
    let p = eq.gir_params().ok_or_else(|| {
        Error::Precondition(format!("{} is not of Infeld–Rowlands type", eq.label()))
    })?;
    Ok(Expr::u(3, 0) + &p.a * Expr::u(0, 1) + &p.f)
}

/// `D_t(M u) + D_x((u_xxx + a u_y + f) M) = 0` for any `M(y)`.
pub fn family_y_multiplier(eq: &EvolutionEquation, m: &Expr) -> Result<ConservationLaw> {
    let core = flux_core(eq)?;
    Ok(ConservationLaw::new(eq, m * u(), core * m, Expr::zero()))
}

/// The triple with density `ζ u`, x-flux
/// `−(u_xx − K_1 u_x + q) ζ_x + (u_xxx + a u_y + f − K_2) ζ` and y-flux
/// `−a u ζ_x`, for `ζ = ζ(x, y, t)`.
pub fn clu_law(
    eq: &EvolutionEquation,
    q: &Expr,
    k1: &Expr,
    k2: &Expr,
    zeta: &Expr,
) -> Result<ConservationLaw> {
    let core = flux_core(eq)?;
    let a = &eq.gir_params().expect("checked by flux_core").a;
    let zeta_x = total_x(zeta);
    let sigma = -((Expr::u(2, 0) - k1 * Expr::u(1, 0) + q) * &zeta_x) + (core - k2) * zeta;
    let y_flux = -(a * u() * &zeta_x);
    Ok(ConservationLaw::new(eq, zeta * u(), sigma, y_flux))
}

fn d_du(e: &Expr) -> Expr {
    e.pdiff(&Generator::Jet(0, 0))
}

fn invertible(c: &Expr, what: &str) -> Result<Expr> {
    if c.is_zero() {
        return Err(Error::Precondition(format!("{what} must be nonzero")));
    }
    c.try_inverse()
}

/// Case `f = g(u) u_x + k_1 u + k_0` with `g = ∂q/∂u`.
///
/// `q` is the antiderivative of `g`; pass e.g. `Q(u)` for an opaque `g = Q'`.
/// The characteristic is `ζ = x L + t(a L_y − k_1 L)`.
pub fn family_case_i(
    a: &Expr,
    q: &Expr,
    k0: &Expr,
    k1: &Expr,
    l: &Expr,
) -> Result<(EvolutionEquation, ConservationLaw)> {
    let g = d_du(q);
    let f = &g * Expr::u(1, 0) + k1 * u() + k0;
    let eq = EvolutionEquation::gir(a.clone(), f)?;
    let zeta = Expr::x() * l + Expr::t() * (a * total_y(l) - k1 * l);
    // the x-flux offset is +k_0: it absorbs the constant in f
    let law = clu_law(&eq, q, &Expr::zero(), k0, &zeta)?;
    Ok((eq, law))
}

/// Case `f = (c_1 h'(u) + c_0) u_x + h(u)` with `c_1 ≠ 0`.
///
/// `profile` names the arbitrary function `F` in
/// `ζ = exp(x/c_1 + t(c_0/c_1² + 1/c_1⁴)) F(a t + c_1 y)`.
pub fn family_case_ii(
    a: &Expr,
    h: &Expr,
    c0: &Expr,
    c1: &Expr,
    profile: &str,
) -> Result<(EvolutionEquation, ConservationLaw)> {
    let c1_inv = invertible(c1, "c_1")?;
    let c1_inv2 = c1_inv.pow(2)?;
    let f = (c1 * d_du(h) + c0) * Expr::u(1, 0) + h;
    let eq = EvolutionEquation::gir(a.clone(), f)?;
    let q = c1 * h + (c0 + &c1_inv2) * u();
    let growth = c0 * &c1_inv2 + c1_inv.pow(4)?;
    let zeta = Expr::exp(Expr::x() * &c1_inv + Expr::t() * growth)
        * Expr::apply(profile, vec![a * Expr::t() + c1 * Expr::y()]);
    let law = clu_law(&eq, &q, &c1_inv, &Expr::zero(), &zeta)?;
    Ok((eq, law))
}

/// Uniform presentation `f = u_x g'(u) + c̃_1 g + c̃_0 u + c̃_2`.
///
/// For `c̃_1 = 0`, `arbitrary` names `L` in `ζ = x L(y) + t(a L' − c̃_0 L)`;
/// otherwise it names `F` in
/// `ζ = exp(c̃_1 x + (c̃_0 − c̃_1³) y/a) F(y/c̃_1 + a t)`.
pub fn family_uniform(
    a: &Expr,
    g: &Expr,
    c0: &Expr,
    c1: &Expr,
    c2: &Expr,
    arbitrary: &str,
) -> Result<(EvolutionEquation, ConservationLaw)> {
    let f = Expr::u(1, 0) * d_du(g) + c1 * g + c0 * u() + c2;
    let eq = EvolutionEquation::gir(a.clone(), f)?;
    if c1.is_zero() {
        let l = Expr::apply(arbitrary, vec![Expr::y()]);
        let zeta = Expr::x() * &l + Expr::t() * (a * total_y(&l) - c0 * &l);
        let law = clu_law(&eq, g, &Expr::zero(), c2, &zeta)?;
        return Ok((eq, law));
    }
    let a_inv = invertible(a, "a")?;
    let c1_inv = invertible(c1, "c̃_1")?;
    let zeta = Expr::exp(c1 * Expr::x() + (c0 - c1.pow(3)?) * &a_inv * Expr::y())
        * Expr::apply(arbitrary, vec![Expr::y() * &c1_inv + a * Expr::t()]);
    let q = g + c2 * &c1_inv + c1.pow(2)? * u();
    let law = clu_law(&eq, &q, c1, &Expr::zero(), &zeta)?;
    Ok((eq, law))
}
