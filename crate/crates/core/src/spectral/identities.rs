use num_traits::Zero;

use crate::error::Error;
use crate::exact_core::{pochhammer, RatPoly, Rational};
use crate::Result;

use super::SpectralContext;

/// `D̃_[n]^alpha x̃_[n]^beta f` for `f ∈ K_m(R^n)` via the closed Pochhammer
/// formulas, one per parity pair.
pub fn apply_op_identities(alpha: u32, beta: u32, f: &RatPoly, n: usize, ctx: &SpectralContext) -> Result<RatPoly> {
    if f.is_zero() {
        return Ok(RatPoly::zero());
    }
    let m = f
        .homogeneous_degree()
        .filter(|_| f.is_polynomial())
        .ok_or_else(|| Error::ContractViolation("operand must be a homogeneous polynomial".into()))?;
    if !ctx.dirac(n).apply(f).is_zero() {
        return Err(Error::ContractViolation(format!("operand not in ker D̃_[{n}]")));
    }
    let int = |k: i64| Rational::from_integer(k.into());
    let g = ctx.gamma.first(n);
    let (a, b) = ((alpha / 2) as i64, (beta / 2) as i64);
    let mf = int(m as i64);
    let pow4 = |k: i64| int(1i64 << (2 * k));
    let (coeff, power) = match (alpha % 2, beta % 2) {
        (0, 0) => (
            pow4(a) * pochhammer(&int(-b), a as u32) * pochhammer(&(int(1 - b) - &mf - g), a as u32),
            2 * b - 2 * a,
        ),
        (1, 0) => (
            int(2) * pow4(a) * int(b) * pochhammer(&int(1 - b), a as u32) * pochhammer(&(int(1 - b) - &mf - g), a as u32),
            2 * b - 2 * a - 1,
        ),
        (0, 1) => (
            pow4(a) * pochhammer(&int(-b), a as u32) * pochhammer(&(int(-b) - &mf - g), a as u32),
            2 * b + 1 - 2 * a,
        ),
        _ => (
            int(2) * pow4(a) * pochhammer(&int(-b), a as u32) * (&mf + int(b) + g)
                * pochhammer(&(int(1 - b) - &mf - g), a as u32),
            2 * b - 2 * a,
        ),
    };
    if coeff.is_zero() || power < 0 {
        return Ok(RatPoly::zero());
    }
    Ok(ctx.coord_pow(n, power as u32, f).scale(&coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::{rat, rat_int};
    use crate::spectral::{build_basis, ck_extend};

    #[test]
    fn matches_direct_application() {
        let ctx = SpectralContext::new(&[rat(1, 2), rat(1, 3), rat_int(1), rat(2, 5)]).unwrap();
        let mut samples: Vec<(usize, RatPoly)> = Vec::new();
        for m in 0..3 {
            for e in build_basis(m, &ctx).unwrap() {
                samples.push((4, e.poly));
            }
        }
        samples.push((2, ck_extend(&RatPoly::var(0).pow(2), 2, &ctx).unwrap()));
        samples.push((3, ck_extend(&ck_extend(&RatPoly::var(0), 2, &ctx).unwrap(), 3, &ctx).unwrap()));
        for (n, f) in &samples {
            for alpha in 0..5 {
                for beta in 0..5 {
                    let direct = ctx.dirac_pow(*n, alpha, &ctx.coord_pow(*n, beta, f));
                    let fast = apply_op_identities(alpha, beta, f, *n, &ctx).unwrap();
                    assert_eq!(fast, direct, "n={n} alpha={alpha} beta={beta}");
                }
            }
        }
    }

    #[test]
    fn degenerate_cases() {
        let ctx = SpectralContext::new(&[rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)]).unwrap();
        let f = build_basis(1, &ctx).unwrap().remove(0).poly;
        assert_eq!(apply_op_identities(0, 0, &f, 4, &ctx).unwrap(), f);
        assert!(apply_op_identities(2, 0, &f, 4, &ctx).unwrap().is_zero());
        // D x² f = 2 x f
        let x_f = ctx.coord(4).apply(&f);
        assert_eq!(apply_op_identities(1, 2, &f, 4, &ctx).unwrap(), x_f.scale(&rat_int(2)));
        assert!(apply_op_identities(1, 0, &RatPoly::var(1), 4, &ctx).is_err());
    }
}
