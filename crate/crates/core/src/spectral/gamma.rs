use num_traits::One;

use crate::exact_core::{rat, MuVector, Rational};
use crate::realizations::Subset;
use crate::Result;

/// `γ_A = Σ_{i∈A} (mu_i + 1/2)` for all sixteen subsets.
#[derive(Clone, PartialEq, Debug)]
pub struct GammaTable {
    mu: MuVector,
    by_subset: [Rational; 16],
}

impl GammaTable {
    pub fn new(mu: &MuVector) -> Result<GammaTable> {
        crate::exact_core::check_mu_domain(mu)?;
        let half = rat(1, 2);
        let by_subset = std::array::from_fn(|bits| {
            let mut g = Rational::from_integer(0.into());
            for (i, m) in mu.iter().enumerate() {
                if bits & (1 << i) != 0 {
                    g += m + &half;
                }
            }
            g
        });
        Ok(GammaTable { mu: mu.clone(), by_subset })
    }

    pub fn mu(&self) -> &MuVector {
        &self.mu
    }

    pub fn of(&self, a: Subset) -> &Rational {
        &self.by_subset[a.bits() as usize]
    }

    /// `γ_i` for a single coordinate (1-based).
    pub fn single(&self, i: usize) -> &Rational {
        &self.by_subset[1 << (i - 1)]
    }

    /// `γ_[n]`.
    pub fn first(&self, n: usize) -> &Rational {
        self.of(Subset::first(n))
    }

    pub fn total(&self) -> &Rational {
        self.of(Subset::FULL)
    }

    /// `(γ_i)_k`-style helper used by moments and CK coefficients.
    pub fn pochhammer_single(&self, i: usize, k: u32) -> Rational {
        crate::exact_core::pochhammer(self.single(i), k)
    }

    pub fn is_monotone(&self) -> bool {
        Subset::all().all(|a| {
            Subset::all()
                .filter(|b| a.is_subset_of(*b))
                .all(|b| self.of(a) <= self.of(b))
        })
    }

    pub fn one() -> Rational {
        Rational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::rat_int;

    #[test]
    fn halves_give_integers() {
        let h = rat(1, 2);
        let g = GammaTable::new(&[h.clone(), h.clone(), h.clone(), h]).unwrap();
        assert_eq!(g.of(Subset::EMPTY), &rat_int(0));
        assert_eq!(g.single(3), &rat_int(1));
        assert_eq!(g.first(2), &rat_int(2));
        assert_eq!(g.total(), &rat_int(4));
        assert!(g.is_monotone());
    }

    #[test]
    fn rejects_negative() {
        assert!(GammaTable::new(&[rat_int(0), rat_int(0), rat(-1, 3), rat_int(0)]).is_err());
    }
}
