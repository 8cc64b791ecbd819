use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::Rational;

/// Exponent vector of a parameter monomial `mu1^a mu2^b mu3^c mu4^d`.
pub type MuExp = [u16; 4];

/// Polynomial in `mu1..mu4` with exact rational coefficients.
///
/// Stored sparsely; zero coefficients are never kept, so structural
/// equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MuPoly {
    terms: BTreeMap<MuExp, Rational>,
}

impl MuPoly {
    pub fn constant(c: Rational) -> Self {
        let mut p = MuPoly::default();
        if !c.is_zero() {
            p.terms.insert([0; 4], c);
        }
        p
    }

    /// The parameter `mu_{i+1}` (`i` is zero-based).
    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(e: MuExp, c: Rational) -> Self {
        let mut p = MuPoly::default();
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MuExp, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&[0; 4]).cloned(),
            _ => None,
        }
    }

    pub fn scale_by(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return MuPoly::default();
        }
        MuPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }

    pub fn evaluate(&self, mu: &[Rational; 4]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (m, &k) in mu.iter().zip(e) {
                for _ in 0..k {
                    t *= m;
                }
            }
            acc += t;
        }
        acc
    }

    fn add_term(&mut self, e: MuExp, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }
}

impl fmt::Debug for MuPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MuPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*mu{}", i + 1)?,
                    _ => write!(f, "*mu{}^{}", i + 1, p)?,
                }
            }
        }
        Ok(())
    }
}

impl Zero for MuPoly {
    fn zero() -> Self {
        MuPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MuPoly {
    fn one() -> Self {
        MuPoly::constant(Rational::one())
    }
}

impl<'a> AddAssign<&'a MuPoly> for MuPoly {
    fn add_assign(&mut self, rhs: &'a MuPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl<'a> SubAssign<&'a MuPoly> for MuPoly {
    fn sub_assign(&mut self, rhs: &'a MuPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, &-c);
        }
    }
}

impl Add for MuPoly {
    type Output = MuPoly;
    fn add(mut self, rhs: MuPoly) -> MuPoly {
        self += &rhs;
        self
    }
}

impl<'a> Add<&'a MuPoly> for &'a MuPoly {
    type Output = MuPoly;
    fn add(self, rhs: &'a MuPoly) -> MuPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for MuPoly {
    type Output = MuPoly;
    fn sub(mut self, rhs: MuPoly) -> MuPoly {
        self -= &rhs;
        self
    }
}

impl<'a> Sub<&'a MuPoly> for &'a MuPoly {
    type Output = MuPoly;
    fn sub(self, rhs: &'a MuPoly) -> MuPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for MuPoly {
    type Output = MuPoly;
    fn neg(self) -> MuPoly {
        MuPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a MuPoly> for &'a MuPoly {
    type Output = MuPoly;
    fn mul(self, rhs: &'a MuPoly) -> MuPoly {
        let mut out = MuPoly::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }
}

impl Mul for MuPoly {
    type Output = MuPoly;
    fn mul(self, rhs: MuPoly) -> MuPoly {
        &self * &rhs
    }
}

impl From<Rational> for MuPoly {
    fn from(c: Rational) -> Self {
        MuPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::{rat, rat_int};

    fn mu(i: usize) -> MuPoly {
        MuPoly::var(i - 1)
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&mu(1) + &mu(2)) * &(&mu(1) - &mu(2));
        let rhs = &(&mu(1) * &mu(1)) - &(&mu(2) * &mu(2));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.len(), 2);
    }

    #[test]
    fn additive_identity_and_scalar_cancellation() {
        assert_eq!(&mu(1) + &MuPoly::zero(), mu(1));
        let two_mu3 = mu(3).scale_by(&rat_int(2));
        assert_eq!(&two_mu3 * &MuPoly::constant(rat(1, 2)), mu(3));
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = &mu(4) - &mu(4);
        assert!(p.is_zero());
        assert_eq!(p, MuPoly::default());
    }

    #[test]
    fn evaluation() {
        let p = &(&mu(1) * &mu(2)) + &MuPoly::constant(rat(1, 3));
        let v = [rat_int(0), rat_int(3), rat_int(0), rat_int(0)];
        assert_eq!(p.evaluate(&v), rat(1, 3));
    }
}
