use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Coeff, MuPoly, Rational};

/// Signed exponent vector of a monomial `s1^a s2^b s3^c s4^d`.
pub type SExp = [i32; 4];

/// Sparse Laurent polynomial in `s1..s4` over a coefficient ring `C`.
///
/// Iteration order is lexicographic in the exponent vector, which is also
/// the serialization order.
#[derive(Clone, PartialEq, Default)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<SExp, C>,
}

/// Laurent polynomial with symbolic parameter coefficients.
pub type SymPoly = LaurentPoly<MuPoly>;
/// Laurent polynomial at fixed numeric parameters.
pub type RatPoly = LaurentPoly<Rational>;

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial([0; 4], C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial([0; 4], c)
    }

    pub fn monomial(e: SExp, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// The coordinate `s_{i+1}` (`i` zero-based).
    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        Self::monomial(e, C::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (SExp, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SExp, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (SExp, C)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, e: &SExp) -> Option<&C> {
        self.terms.get(e)
    }

    pub fn add_term(&mut self, e: SExp, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, k: &C) {
        for (e, c) in &other.terms {
            self.add_term(*e, c.mul_ref(k));
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c.mul_ref(k))))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&C::from_rational(r.clone()))
    }

    /// Multiply by the monomial `s^shift`.
    pub fn shift(&self, shift: &SExp) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (add_exp(e, shift), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Total degree of every term, when all terms share one.
    pub fn homogeneous_degree(&self) -> Option<i32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<i32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Smallest exponent of each variable (0 if all exponents are non-negative).
    pub fn min_exponents(&self) -> SExp {
        let mut out = [0; 4];
        for e in self.terms.keys() {
            for i in 0..4 {
                out[i] = out[i].min(e[i]);
            }
        }
        out
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k >= 0))
    }

    pub fn map_coeffs<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

impl RatPoly {
    /// Embed into the symbolic ring with constant coefficients.
    pub fn to_symbolic(&self) -> SymPoly {
        self.map_coeffs(|c| MuPoly::constant(c.clone()))
    }

    pub fn eval_f64(&self, point: &[f64; 4]) -> f64 {
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut t = c.to_f64().unwrap_or(f64::NAN);
                for i in 0..4 {
                    t *= point[i].powi(e[i]);
                }
                t
            })
            .sum()
    }
}

pub(crate) fn add_exp(a: &SExp, b: &SExp) -> SExp {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c:?})")?;
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*s{}", i + 1)?,
                    _ => write!(f, "*s{}^{}", i + 1, p)?,
                }
            }
        }
        Ok(())
    }
}

impl<'a, C: Coeff> Add<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<C: Coeff> Add for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(mut self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<'a, C: Coeff> Sub<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<'a, C: Coeff> Mul<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(add_exp(ea, eb), ca.mul_ref(cb));
            }
        }
        out
    }
}

impl<C: Coeff> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::{evaluate_mu, rat, rat_int};

    fn s(i: usize) -> SymPoly {
        SymPoly::var(i - 1)
    }

    #[test]
    fn unit_cancellation() {
        let inv = SymPoly::monomial([-1, 0, 0, 0], MuPoly::constant(rat_int(1)));
        assert_eq!(&s(1) * &inv, SymPoly::one());
    }

    #[test]
    fn binomial_square() {
        let sum = &s(1) + &s(2);
        let sq = &sum * &sum;
        let expected = SymPoly::from_terms([
            ([2, 0, 0, 0], MuPoly::constant(rat_int(1))),
            ([1, 1, 0, 0], MuPoly::constant(rat_int(2))),
            ([0, 2, 0, 0], MuPoly::constant(rat_int(1))),
        ]);
        assert_eq!(sq, expected);
    }

    #[test]
    fn mixed_coefficient_product() {
        let a = SymPoly::monomial([-1, 0, 0, 0], MuPoly::var(0));
        let b = SymPoly::monomial([3, 0, 0, 0], MuPoly::constant(rat_int(1)));
        assert_eq!(&a * &b, SymPoly::monomial([2, 0, 0, 0], MuPoly::var(0)));
    }

    #[test]
    fn substitution() {
        let half = rat(1, 2);
        let f = SymPoly::monomial([2, 0, 0, 0], MuPoly::var(0));
        let mu = [half.clone(), rat_int(0), rat_int(0), rat_int(0)];
        assert_eq!(
            evaluate_mu(&f, &mu).unwrap(),
            RatPoly::monomial([2, 0, 0, 0], half.clone())
        );

        let c = &(&MuPoly::var(0) + &MuPoly::var(1)) + &MuPoly::constant(rat_int(1));
        let g = SymPoly::monomial([0, 1, 0, 0], c);
        let halves = [half.clone(), half.clone(), half.clone(), half];
        assert_eq!(
            evaluate_mu(&g, &halves).unwrap(),
            RatPoly::monomial([0, 1, 0, 0], rat_int(2))
        );

        let h = SymPoly::constant(&MuPoly::var(0) * &MuPoly::var(1));
        let zero_first = [rat_int(0), rat_int(3), rat_int(1), rat_int(1)];
        assert!(evaluate_mu(&h, &zero_first).unwrap().is_zero());
    }

    #[test]
    fn negative_mu_rejected() {
        let mu = [rat_int(0), rat(-1, 2), rat_int(0), rat_int(0)];
        assert!(matches!(
            evaluate_mu(&s(1), &mu),
            Err(crate::Error::ParameterDomain(_))
        ));
    }

    #[test]
    fn homogeneity() {
        let f = &s(1) + &(&s(2) * &s(3));
        assert_eq!(f.homogeneous_degree(), None);
        assert_eq!((&s(1) * &s(2)).homogeneous_degree(), Some(2));
    }
}
