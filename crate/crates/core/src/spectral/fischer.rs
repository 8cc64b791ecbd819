use num_integer::binomial;

use crate::exact_core::{rat_int, RatPoly};
use crate::Result;

use super::{build_basis, linalg, SpectralContext};

fn dim_p(n: u32, m: i64) -> u64 {
    if m < 0 {
        0
    } else {
        binomial(m as u64 + n as u64 - 1, n as u64 - 1)
    }
}

/// `(dim P_m(R^n), dim K_m(R^n))`.
pub fn fischer_dims(n: u32, m: u32) -> (u64, u64) {
    let p = dim_p(n, m as i64);
    (p, p - dim_p(n, m as i64 - 1))
}

fn monomials(n: usize, m: u32) -> Vec<RatPoly> {
    fn rec(n: usize, left: u32, cur: &mut [i32; 4], i: usize, out: &mut Vec<RatPoly>) {
        if i + 1 == n {
            cur[i] = left as i32;
            out.push(RatPoly::monomial(*cur, rat_int(1)));
            cur[i] = 0;
            return;
        }
        for k in 0..=left {
            cur[i] = k as i32;
            rec(n, left - k, cur, i + 1, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(n, m, &mut [0; 4], 0, &mut out);
    out
}

/// `dim ker D̃_[n]` on `P_m(R^n)`, from the rank of the image of all monomials.
pub fn kernel_dim_by_rank(n: usize, m: u32, ctx: &SpectralContext) -> u64 {
    let basis = monomials(n, m);
    let images: Vec<RatPoly> = basis.iter().map(|p| ctx.dirac(n).apply(p)).collect();
    (basis.len() - linalg::rank(&images)) as u64
}

/// Rank of `{ x̃_[4]^j K_{m-j} }` against `dim P_m(R^4)`.
pub fn fischer_reassembly_rank(m: u32, ctx: &SpectralContext) -> Result<(usize, u64)> {
    let mut span = Vec::new();
    for j in 0..=m {
        for e in build_basis(m - j, ctx)? {
            span.push(ctx.coord_pow(4, j, &e.poly));
        }
    }
    Ok((linalg::rank(&span), dim_p(4, m as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::rat;

    #[test]
    fn examples() {
        assert_eq!(fischer_dims(4, 0), (1, 1));
        assert_eq!(fischer_dims(4, 2), (10, 6));
        assert_eq!(fischer_dims(2, 3), (4, 1));
        assert_eq!(fischer_dims(3, 0), (1, 1));
        for m in 0..8 {
            assert_eq!(fischer_dims(4, m).1, ((m + 1) * (m + 2) / 2) as u64);
        }
    }

    #[test]
    fn kernel_dimension_oracle() {
        let ctx = SpectralContext::new(&[rat(1, 2), rat(1, 3), rat(0, 1), rat(5, 2)]).unwrap();
        for n in 2..=4usize {
            for m in 0..4 {
                assert_eq!(kernel_dim_by_rank(n, m, &ctx), fischer_dims(n as u32, m).1, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn reassembly() {
        let ctx = SpectralContext::new(&[rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)]).unwrap();
        for m in 0..4 {
            let (r, d) = fischer_reassembly_rank(m, &ctx).unwrap();
            assert_eq!(r as u64, d);
        }
    }
}
