use crate::exact_core::{MuVector, RatPoly, Rational};
use crate::operator_engine::{normal_form, NormalForm};
use crate::realizations::{Gauge, GeneratorKind, Realizations, Subset};
use crate::Result;

use super::GammaTable;

/// Gauge-transformed operators evaluated at fixed parameters.
#[derive(Clone, Debug)]
pub struct SpectralContext {
    pub gamma: GammaTable,
    /// `D̃_[n]` for `n = 1..=4` at index `n - 1`.
    dirac: Vec<NormalForm<Rational>>,
    /// `x̃_[n]` for `n = 1..=4` at index `n - 1`.
    coord: Vec<NormalForm<Rational>>,
    /// `S̃_[4]`.
    pub scasimir: NormalForm<Rational>,
    /// Hamiltonian conjugated by the gauge factor.
    pub hamiltonian: NormalForm<Rational>,
}

impl SpectralContext {
    pub fn new(mu: &MuVector) -> Result<SpectralContext> {
        let gamma = GammaTable::new(mu)?;
        let r = Realizations::new();
        let at = |k: GeneratorKind, n: usize| {
            let op = r.subset(Subset::first(n), k, Gauge::Tilde).expect("nonempty");
            normal_form(&op).evaluate_mu(mu)
        };
        Ok(SpectralContext {
            dirac: (1..=4).map(|n| at(GeneratorKind::D, n)).collect(),
            coord: (1..=4).map(|n| at(GeneratorKind::X, n)).collect(),
            scasimir: at(GeneratorKind::S, 4),
            hamiltonian: normal_form(&r.hamiltonian_tilde()).evaluate_mu(mu),
            gamma,
        })
    }

    pub fn mu(&self) -> &MuVector {
        self.gamma.mu()
    }

    pub fn dirac(&self, n: usize) -> &NormalForm<Rational> {
        &self.dirac[n - 1]
    }

    pub fn coord(&self, n: usize) -> &NormalForm<Rational> {
        &self.coord[n - 1]
    }

    /// `x̃_[n]^k f`.
    pub fn coord_pow(&self, n: usize, k: u32, f: &RatPoly) -> RatPoly {
        let mut out = f.clone();
        for _ in 0..k {
            out = self.coord(n).apply(&out);
        }
        out
    }

    /// `D̃_[n]^k f`.
    pub fn dirac_pow(&self, n: usize, k: u32, f: &RatPoly) -> RatPoly {
        let mut out = f.clone();
        for _ in 0..k {
            if out.is_zero() {
                break;
            }
            out = self.dirac(n).apply(&out);
        }
        out
    }
}
