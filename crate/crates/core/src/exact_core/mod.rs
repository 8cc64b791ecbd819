//! Exact arithmetic: rationals, the parameter ring and Laurent polynomials.

mod coeff;
mod laurent;
mod mupoly;
mod rational;
pub mod serial;

pub use coeff::Coeff;
pub use laurent::{LaurentPoly, RatPoly, SExp, SymPoly};
pub use mupoly::{MuExp, MuPoly};
pub use rational::{format_rational, parse_rational, pochhammer, rat, rat_int, MuVector, Rational};
pub(crate) use rational::check_mu_domain;

/// Substitutes numeric parameters into every coefficient.
///
/// Rejects negative entries: the model is only defined for `mu_i >= 0`.
pub fn evaluate_mu(f: &SymPoly, mu: &MuVector) -> crate::Result<RatPoly> {
    rational::check_mu_domain(mu)?;
    Ok(f.map_coeffs(|c| c.evaluate(mu)))
}
