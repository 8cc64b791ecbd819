use num_traits::{One, Zero};

use crate::error::Error;
use crate::exact_core::{pochhammer, RatPoly, Rational};
use crate::Result;

use super::SpectralContext;

/// Coefficient of `s_n^alpha D̃_[n-1]^alpha` in the CK series.
fn ck_coefficient(alpha: u32, gamma_n: &Rational) -> Result<Rational> {
    let i = alpha / 2;
    let fact = pochhammer(&Rational::one(), i);
    let (poch, two_pow, negative) = if alpha.is_multiple_of(2) {
        (pochhammer(gamma_n, i), 2 * i, i % 2 == 1)
    } else {
        (pochhammer(gamma_n, i + 1), 2 * i + 1, i.is_multiple_of(2))
    };
    if poch.is_zero() {
        return Err(Error::ParameterPole(format!("(γ_n)_k vanishes for γ_n = {gamma_n}")));
    }
    let denom = fact * poch * Rational::from_integer(num_bigint::BigInt::from(1u8) << two_pow);
    let c = Rational::one() / denom;
    Ok(if negative { -c } else { c })
}

/// Cauchy-Kovalevskaya extension `CK_n[p]` into `ker D̃_[n]`.
///
/// `p` must be homogeneous and depend only on `s_1..s_{n-1}`.
pub fn ck_extend(p: &RatPoly, n: usize, ctx: &SpectralContext) -> Result<RatPoly> {
    if !(2..=4).contains(&n) {
        return Err(Error::ContractViolation(format!("CK level {n} outside 2..=4")));
    }
    if p.is_zero() {
        return Ok(RatPoly::zero());
    }
    let m = p
        .homogeneous_degree()
        .filter(|&d| d >= 0 && p.is_polynomial())
        .ok_or_else(|| Error::ContractViolation("CK input must be a homogeneous polynomial".into()))?;
    if p.terms().any(|(e, _)| e[n - 1..].iter().any(|&k| k != 0)) {
        return Err(Error::ContractViolation(format!("CK input depends on s_{n} or later")));
    }
    let gamma_n = ctx.gamma.single(n);
    let mut out = RatPoly::zero();
    let mut cur = p.clone();
    let mut s_pow = RatPoly::one();
    let s_n = RatPoly::var(n - 1);
    for alpha in 0..=(m as u32) {
        if cur.is_zero() {
            break;
        }
        let c = ck_coefficient(alpha, gamma_n)?;
        out.add_scaled(&(&s_pow * &cur), &c);
        cur = ctx.dirac(n - 1).apply(&cur);
        s_pow = &s_pow * &s_n;
    }
    debug_assert!(ctx.dirac(n).apply(&out).is_zero());
    Ok(out)
}

/// One level of the nested construction: `CK_n[x̃_[n-1]^j φ]`.
pub fn ck_level(n: usize, j: u32, phi: &RatPoly, ctx: &SpectralContext) -> Result<RatPoly> {
    ck_extend(&ctx.coord_pow(n - 1, j, phi), n, ctx)
}
