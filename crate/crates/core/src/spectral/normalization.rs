use serde::Serialize;

use crate::exact_core::Rational;
use crate::Result;

use super::{closed_form_element, inner_product, GammaTable, SpectralContext};

fn f64_of(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().expect("finite rational")
}

fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// `η_1 η_2 η_3` for label `j`, in floating point.
///
/// The prefactor of `η_n` is the Pochhammer symbol `(γ_n)_c`; with a bare
/// `γ_n` the ground state would not come out as `I(0)`.
pub fn eta_product(j: [u32; 3], gamma: &GammaTable) -> f64 {
    let g = |i: usize| f64_of(gamma.single(i));
    let gf = |n: usize| f64_of(gamma.first(n));
    let mut log_eta = 0.0;
    let mut d_prev = 0.0;
    for (level, &jj) in j.iter().enumerate() {
        let n = level + 2;
        let c = (jj / 2) as f64;
        let lambda = d_prev + gf(n - 1);
        let gn = g(n);
        log_eta += ln_gamma(c + gn) - ln_gamma(gn)
            + 0.5 * (ln_gamma(c + d_prev + gf(n)) - ln_gamma(c + 1.0) - ln_gamma(c + gn) - ln_gamma(c + lambda));
        if jj % 2 == 1 {
            log_eta += 0.5 * ((c + gn).ln() - (c + lambda).ln());
        }
        d_prev += jj as f64;
    }
    log_eta.exp()
}

/// Exact and floating sides of the normalization comparison for one label.
#[derive(Clone, Debug, Serialize)]
pub struct NormalizationResult {
    pub labels: [u32; 3],
    /// `⟨ψ̃, ψ̃⟩_w / I(0)` for the closed-form element, exact.
    #[serde(serialize_with = "crate::exact_core::serial::rational_str")]
    pub exact_ratio: Rational,
    /// `⟨ψ̃, ψ̃⟩_w`.
    pub norm_sq: f64,
    /// `2 / (η_1 η_2 η_3)^2`.
    pub eta_side: f64,
    pub rel_err: f64,
    pub pass: bool,
}

/// `I(0) = 2 Π Γ(γ_i) / Γ(γ_[4])`.
pub fn base_integral(gamma: &GammaTable) -> f64 {
    let lg: f64 = (1..=4).map(|i| ln_gamma(f64_of(gamma.single(i)))).sum();
    2.0 * (lg - ln_gamma(f64_of(gamma.total()))).exp()
}

pub fn normalization_check(j: [u32; 3], ctx: &SpectralContext, tol: f64) -> Result<NormalizationResult> {
    let psi = closed_form_element(j, ctx)?.element.poly;
    let exact_ratio = inner_product(&psi, &psi, &ctx.gamma)?;
    let norm_sq = f64_of(&exact_ratio) * base_integral(&ctx.gamma);
    let eta = eta_product(j, &ctx.gamma);
    let eta_side = 2.0 / (eta * eta);
    let rel_err = (norm_sq - eta_side).abs() / norm_sq;
    Ok(NormalizationResult { labels: j, exact_ratio, norm_sq, eta_side, rel_err, pass: rel_err < tol })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::{rat, rat_int};
    use crate::spectral::labels;

    #[test]
    fn ground_state_is_base_integral() {
        let ctx = SpectralContext::new(&[rat(1, 3), rat_int(2), rat(5, 4), rat_int(0)]).unwrap();
        let r = normalization_check([0, 0, 0], &ctx, 1e-12).unwrap();
        assert_eq!(r.exact_ratio, rat_int(1));
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn base_integral_at_half() {
        // 2 Γ(1)^4 / Γ(4) = 1/3
        let h = rat(1, 2);
        let g = GammaTable::new(&[h.clone(), h.clone(), h.clone(), h]).unwrap();
        assert!((base_integral(&g) - 1.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn all_labels_agree() {
        for mu in [[rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)], [rat(1, 3), rat_int(2), rat(5, 4), rat_int(0)]] {
            let ctx = SpectralContext::new(&mu).unwrap();
            for m in 0..4 {
                for j in labels(m) {
                    let r = normalization_check(j, &ctx, 1e-9).unwrap();
                    assert!(r.pass, "{r:?}");
                }
            }
        }
    }
}
