use std::fmt::Debug;
use std::ops::{AddAssign, Neg, SubAssign};

use num_traits::{One, Zero};

use super::{MuExp, MuPoly, Rational};

/// Coefficient ring for Laurent polynomials and normal forms.
///
/// Implemented for [`Rational`] (fixed parameters) and [`MuPoly`]
/// (symbolic parameters).
pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    fn from_rational(r: Rational) -> Self;
    /// Lift a parameter polynomial; `mu` is required when `Self` cannot hold symbols.
    fn from_mu_poly(p: &MuPoly, mu: Option<&[Rational; 4]>) -> Self;
    /// Flattened `(mu exponent, rational)` pairs; `None` exponent for plain rationals.
    fn records(&self) -> Vec<(Option<MuExp>, Rational)>;
}

impl Coeff for Rational {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn from_mu_poly(p: &MuPoly, mu: Option<&[Rational; 4]>) -> Self {
        match mu {
            Some(mu) => p.evaluate(mu),
            None => p
                .as_constant()
                .expect("symbolic coefficient lifted into rationals without parameter values"),
        }
    }
    fn records(&self) -> Vec<(Option<MuExp>, Rational)> {
        vec![(None, self.clone())]
    }
}

impl Coeff for MuPoly {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale(&self, r: &Rational) -> Self {
        self.scale_by(r)
    }
    fn from_rational(r: Rational) -> Self {
        MuPoly::constant(r)
    }
    fn from_mu_poly(p: &MuPoly, mu: Option<&[Rational; 4]>) -> Self {
        match mu {
            Some(mu) => MuPoly::constant(p.evaluate(mu)),
            None => p.clone(),
        }
    }
    fn records(&self) -> Vec<(Option<MuExp>, Rational)> {
        self.terms().map(|(e, c)| (Some(*e), c.clone())).collect()
    }
}
