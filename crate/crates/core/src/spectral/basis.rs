use serde::Serialize;

use crate::error::Error;
use crate::exact_core::{MuVector, RatPoly};
use crate::Result;

use super::{ck_level, linalg, SpectralContext};

/// One element `ψ̃_j` of the explicit basis of `ker D̃_[4]` in degree `m`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct KernelBasisElement {
    pub m: u32,
    /// `(j1, j2, j3)` with `j1 + j2 + j3 = m`.
    pub labels: [u32; 3],
    #[serde(skip)]
    pub poly: RatPoly,
    #[serde(skip)]
    pub mu: MuVector,
}

/// All labels of degree `m`, ordered lexicographically.
pub fn labels(m: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for j1 in 0..=m {
        for j2 in 0..=m - j1 {
            out.push([j1, j2, m - j1 - j2]);
        }
    }
    out
}

/// `CK_4[x̃_[3]^{j3} CK_3[x̃_[2]^{j2} CK_2[s_1^{j1}]]]`.
pub fn nested_ck(j: [u32; 3], ctx: &SpectralContext) -> Result<RatPoly> {
    let mut phi = RatPoly::one();
    for (level, &jj) in j.iter().enumerate() {
        phi = ck_level(level + 2, jj, &phi, ctx)?;
    }
    Ok(phi)
}

/// The full basis in degree `m`, checked for linear independence.
pub fn build_basis(m: u32, ctx: &SpectralContext) -> Result<Vec<KernelBasisElement>> {
    let elems = labels(m)
        .into_iter()
        .map(|j| {
            Ok(KernelBasisElement { m, labels: j, poly: nested_ck(j, ctx)?, mu: ctx.mu().clone() })
        })
        .collect::<Result<Vec<_>>>()?;
    let polys: Vec<RatPoly> = elems.iter().map(|e| e.poly.clone()).collect();
    let r = linalg::rank(&polys);
    if r != elems.len() {
        return Err(Error::ContractViolation(format!(
            "degree {m} basis has rank {r}, expected {}",
            elems.len()
        )));
    }
    Ok(elems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::{rat, rat_int};

    #[test]
    fn label_count() {
        for m in 0..6 {
            assert_eq!(labels(m).len() as u32, (m + 1) * (m + 2) / 2);
        }
    }

    #[test]
    fn basis_in_kernel() {
        let ctx = SpectralContext::new(&[rat(1, 2), rat(1, 3), rat_int(2), rat(1, 7)]).unwrap();
        for m in 0..4 {
            let b = build_basis(m, &ctx).unwrap();
            assert_eq!(b.len() as u32, (m + 1) * (m + 2) / 2);
            for e in &b {
                assert!(ctx.dirac(4).apply(&e.poly).is_zero(), "{:?}", e.labels);
            }
        }
    }
}
