use num_traits::{One, Zero};

use crate::exact_core::{pochhammer, Rational, SExp};

use super::GammaTable;

/// `∫ Π s_i^{2a_i} Π|s_i|^{2mu_i} dσ` over the three-sphere, divided by the
/// same integral at `a = 0`.
pub fn sphere_moment(a: [u32; 4], gamma: &GammaTable) -> Rational {
    let mut num = Rational::one();
    for (i, &ai) in a.iter().enumerate() {
        num *= pochhammer(gamma.single(i + 1), ai);
    }
    num / pochhammer(gamma.total(), a.iter().sum())
}

/// Normalized moment of a single monomial `s^e`; zero when any exponent is odd.
///
/// Panics on negative exponents.
pub fn monomial_moment(e: &SExp, gamma: &GammaTable) -> Rational {
    assert!(e.iter().all(|&k| k >= 0), "moment of a Laurent monomial");
    if e.iter().any(|k| k % 2 != 0) {
        return Rational::zero();
    }
    sphere_moment(e.map(|k| (k / 2) as u32), gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::{rat, rat_int};

    #[test]
    fn examples() {
        let g = GammaTable::new(&[rat(1, 3), rat_int(2), rat(5, 4), rat_int(0)]).unwrap();
        assert_eq!(sphere_moment([0; 4], &g), rat_int(1));
        assert_eq!(sphere_moment([1, 0, 0, 0], &g), g.single(1) / g.total());
        let partition: Rational = (0..4)
            .map(|i| {
                let mut a = [0; 4];
                a[i] = 1;
                sphere_moment(a, &g)
            })
            .sum();
        assert_eq!(partition, rat_int(1));
        assert_eq!(monomial_moment(&[1, 1, 0, 0], &g), rat_int(0));
        assert_eq!(monomial_moment(&[2, 0, 0, 0], &g), sphere_moment([1, 0, 0, 0], &g));
    }

    #[test]
    fn moments_respect_sphere_relation() {
        // Σ_i m(a + e_i) = m(a)
        let g = GammaTable::new(&[rat(1, 2), rat(2, 7), rat_int(1), rat(3, 5)]).unwrap();
        for a in [[0, 1, 2, 0], [3, 0, 0, 1], [1, 1, 1, 1]] {
            let s: Rational = (0..4)
                .map(|i| {
                    let mut b = a;
                    b[i] += 1;
                    sphere_moment(b, &g)
                })
                .sum();
            assert_eq!(s, sphere_moment(a, &g));
        }
    }
}
