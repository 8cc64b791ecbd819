use serde::Serialize;

use crate::error::Error;
use crate::exact_core::{rat, Rational};
use crate::operator_engine::reduce_mod_sphere;
use crate::Result;

use super::{KernelBasisElement, SpectralContext};

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Eigenvalues {
    #[serde(serialize_with = "crate::exact_core::serial::rational_str")]
    pub scasimir: Rational,
    #[serde(serialize_with = "crate::exact_core::serial::rational_str")]
    pub hamiltonian: Rational,
}

impl Eigenvalues {
    /// Predicted values `m + γ_[4] - 1/2` and `λ_S² - λ_S - 3/4`.
    pub fn predicted(m: u32, ctx: &SpectralContext) -> Eigenvalues {
        let s = Rational::from_integer(m.into()) + ctx.gamma.total() - rat(1, 2);
        let h = &s * &s - &s - rat(3, 4);
        Eigenvalues { scasimir: s, hamiltonian: h }
    }
}

/// Exact eigenvalue check of `S̃_[4]` on a kernel element.
pub fn check_eigen(e: &KernelBasisElement, ctx: &SpectralContext) -> Result<Eigenvalues> {
    let ev = Eigenvalues::predicted(e.m, ctx);
    let mut residual = ctx.scasimir.apply(&e.poly);
    residual.add_scaled(&e.poly, &-ev.scasimir.clone());
    if !residual.is_zero() {
        return Err(Error::ContractViolation(format!(
            "S̃ eigen residual for {:?} has {} terms",
            e.labels,
            residual.len()
        )));
    }
    Ok(ev)
}

/// `H̃ψ̃ = λ_H ψ̃` modulo the sphere ideal.
pub fn check_hamiltonian_on_sphere(e: &KernelBasisElement, ctx: &SpectralContext) -> Result<Rational> {
    let ev = Eigenvalues::predicted(e.m, ctx);
    let mut residual = ctx.hamiltonian.apply(&e.poly);
    residual.add_scaled(&e.poly, &-ev.hamiltonian.clone());
    if !reduce_mod_sphere(&residual).numerator.is_zero() {
        return Err(Error::ContractViolation(format!("H̃ eigen residual for {:?} survives on the sphere", e.labels)));
    }
    Ok(ev.hamiltonian)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::rat_int;
    use crate::spectral::build_basis;

    #[test]
    fn ground_state_at_half() {
        let h = rat(1, 2);
        let ctx = SpectralContext::new(&[h.clone(), h.clone(), h.clone(), h]).unwrap();
        let b = build_basis(0, &ctx).unwrap();
        let ev = check_eigen(&b[0], &ctx).unwrap();
        assert_eq!(ev.scasimir, rat(7, 2));
        assert_eq!(ev.hamiltonian, rat_int(8));
        assert_eq!(check_hamiltonian_on_sphere(&b[0], &ctx).unwrap(), rat_int(8));
    }

    #[test]
    fn free_case_is_m_m_plus_2() {
        let z = rat_int(0);
        let ctx = SpectralContext::new(&[z.clone(), z.clone(), z.clone(), z]).unwrap();
        for m in 0..4u32 {
            for e in build_basis(m, &ctx).unwrap() {
                let ev = check_eigen(&e, &ctx).unwrap();
                assert_eq!(ev.hamiltonian, rat_int((m * (m + 2)) as i64));
                check_hamiltonian_on_sphere(&e, &ctx).unwrap();
            }
        }
    }
}
