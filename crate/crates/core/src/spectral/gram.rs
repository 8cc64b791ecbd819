use rayon::prelude::*;

use num_traits::Zero;

use crate::error::Error;
use crate::exact_core::{RatPoly, Rational};
use crate::Result;

use super::{build_basis, monomial_moment, GammaTable, KernelBasisElement, SpectralContext};

/// `⟨f, g⟩_w / I(0)` with weight `Π|s_i|^{2mu_i}`.
pub fn inner_product(f: &RatPoly, g: &RatPoly, gamma: &GammaTable) -> Result<Rational> {
    if !f.is_polynomial() || !g.is_polynomial() {
        return Err(Error::ContractViolation("inner product of a Laurent polynomial".into()));
    }
    let mut acc = Rational::zero();
    for (ef, cf) in f.terms() {
        for (eg, cg) in g.terms() {
            let e = [ef[0] + eg[0], ef[1] + eg[1], ef[2] + eg[2], ef[3] + eg[3]];
            if e.iter().all(|k| k % 2 == 0) {
                acc += cf * cg * monomial_moment(&e, gamma);
            }
        }
    }
    Ok(acc)
}

/// Matrix of inner products between two lists of basis elements.
pub fn gram_matrix(
    rows: &[KernelBasisElement],
    cols: &[KernelBasisElement],
    gamma: &GammaTable,
) -> Result<Vec<Vec<Rational>>> {
    rows.par_iter()
        .map(|r| cols.iter().map(|c| inner_product(&r.poly, &c.poly, gamma)).collect())
        .collect()
}

/// Gram block between the degree-`m1` and degree-`m2` bases.
pub fn gram(m1: u32, m2: u32, ctx: &SpectralContext) -> Result<Vec<Vec<Rational>>> {
    let rows = build_basis(m1, ctx)?;
    let cols = if m1 == m2 { rows.clone() } else { build_basis(m2, ctx)? };
    gram_matrix(&rows, &cols, &ctx.gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::{rat, rat_int};

    fn half() -> SpectralContext {
        let h = rat(1, 2);
        SpectralContext::new(&[h.clone(), h.clone(), h.clone(), h]).unwrap()
    }

    #[test]
    fn small_blocks() {
        let ctx = half();
        assert_eq!(gram(0, 0, &ctx).unwrap(), vec![vec![rat_int(1)]]);
        let g01 = gram(0, 1, &ctx).unwrap();
        assert!(g01.iter().flatten().all(|v| v.is_zero()));
    }

    #[test]
    fn degree_two_diagonal() {
        let ctx = half();
        let g = gram(2, 2, &ctx).unwrap();
        assert_eq!(g.len(), 6);
        for (i, row) in g.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if i == j {
                    assert!(*v > rat_int(0));
                } else {
                    assert!(v.is_zero(), "({i},{j}) = {v}");
                }
            }
        }
    }

    #[test]
    fn rejects_laurent() {
        let ctx = half();
        let f = RatPoly::monomial([-1, 0, 0, 0], rat_int(1));
        assert!(inner_product(&f, &f, &ctx.gamma).is_err());
    }
}
