use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact_core::{Coeff, LaurentPoly, MuPoly, MuVector, RatPoly, Rational, SExp, SymPoly};
use crate::{Error, Result};

/// One of the four coordinate axes. Displayed 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Axis(u8);

impl Axis {
    /// From a 1-based index.
    pub fn new(i: usize) -> Result<Axis> {
        if (1..=4).contains(&i) {
            Ok(Axis(i as u8 - 1))
        } else {
            Err(Error::MalformedIndex(format!("axis {i} not in 1..=4")))
        }
    }

    /// From a 1-based index known to be valid.
    pub fn of(i: usize) -> Axis {
        Axis::new(i).expect("axis index in 1..=4")
    }

    /// Zero-based position in exponent vectors.
    pub fn idx(self) -> usize {
        self.0 as usize
    }

    pub fn number(self) -> usize {
        self.0 as usize + 1
    }

    pub fn all() -> impl Iterator<Item = Axis> {
        (0..4).map(Axis)
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// Operator expression tree acting on Laurent polynomials.
///
/// `Compose([a, b, c])` is `a ∘ b ∘ c`: the rightmost factor acts first.
#[derive(Clone, PartialEq, Debug)]
pub enum OperatorExpr {
    Scalar(MuPoly),
    MonoMul(SExp),
    Deriv(Axis),
    Refl(Axis),
    Sum(Vec<OperatorExpr>),
    Compose(Vec<OperatorExpr>),
    Scale(MuPoly, Box<OperatorExpr>),
}

pub fn identity() -> OperatorExpr {
    OperatorExpr::Scalar(MuPoly::one())
}

pub fn scalar(c: Rational) -> OperatorExpr {
    OperatorExpr::Scalar(MuPoly::constant(c))
}

/// Multiplication by the parameter `mu_i` (1-based).
pub fn mu(i: usize) -> OperatorExpr {
    OperatorExpr::Scalar(MuPoly::var(Axis::of(i).idx()))
}

pub fn mono(e: SExp) -> OperatorExpr {
    OperatorExpr::MonoMul(e)
}

/// Multiplication by `s_i` (1-based).
pub fn s(i: usize) -> OperatorExpr {
    let mut e = [0; 4];
    e[Axis::of(i).idx()] = 1;
    OperatorExpr::MonoMul(e)
}

/// Multiplication by `1/s_i` (1-based).
pub fn inv_s(i: usize) -> OperatorExpr {
    let mut e = [0; 4];
    e[Axis::of(i).idx()] = -1;
    OperatorExpr::MonoMul(e)
}

pub fn d(i: usize) -> OperatorExpr {
    OperatorExpr::Deriv(Axis::of(i))
}

pub fn refl(i: usize) -> OperatorExpr {
    OperatorExpr::Refl(Axis::of(i))
}

/// `ab - ba`.
pub fn commutator(a: &OperatorExpr, b: &OperatorExpr) -> OperatorExpr {
    a.clone() * b.clone() - b.clone() * a.clone()
}

/// `ab + ba`.
pub fn anticommutator(a: &OperatorExpr, b: &OperatorExpr) -> OperatorExpr {
    a.clone() * b.clone() + b.clone() * a.clone()
}

impl OperatorExpr {
    pub fn zero() -> OperatorExpr {
        OperatorExpr::Scalar(MuPoly::zero())
    }

    pub fn scaled(self, c: MuPoly) -> OperatorExpr {
        OperatorExpr::Scale(c, Box::new(self))
    }

    pub fn scaled_rational(self, c: Rational) -> OperatorExpr {
        self.scaled(MuPoly::constant(c))
    }

    pub fn pow(&self, k: u32) -> OperatorExpr {
        match k {
            0 => identity(),
            _ => OperatorExpr::Compose(vec![self.clone(); k as usize]),
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            OperatorExpr::Sum(xs) | OperatorExpr::Compose(xs) => {
                1 + xs.iter().map(OperatorExpr::size).sum::<usize>()
            }
            OperatorExpr::Scale(_, x) => 1 + x.size(),
            _ => 1,
        }
    }

    /// Exact action on a symbolic Laurent polynomial.
    pub fn apply(&self, f: &SymPoly) -> SymPoly {
        self.apply_lifted(f, None)
    }

    /// Exact action on a numeric polynomial at fixed parameters.
    pub fn apply_at(&self, f: &RatPoly, mu: &MuVector) -> RatPoly {
        self.apply_lifted(f, Some(mu))
    }

    fn apply_lifted<C: Coeff>(&self, f: &LaurentPoly<C>, mu: Option<&MuVector>) -> LaurentPoly<C> {
        match self {
            OperatorExpr::Scalar(c) => f.scale(&C::from_mu_poly(c, mu)),
            OperatorExpr::MonoMul(e) => f.shift(e),
            OperatorExpr::Deriv(a) => {
                let i = a.idx();
                LaurentPoly::from_terms(f.terms().filter(|(e, _)| e[i] != 0).map(|(e, c)| {
                    let mut e2 = *e;
                    e2[i] -= 1;
                    (e2, c.scale(&Rational::from_integer(e[i].into())))
                }))
            }
            OperatorExpr::Refl(a) => {
                let i = a.idx();
                LaurentPoly::from_terms(f.terms().map(|(e, c)| {
                    let c = if e[i] % 2 == 0 { c.clone() } else { -c.clone() };
                    (*e, c)
                }))
            }
            OperatorExpr::Sum(xs) => {
                let mut out = LaurentPoly::zero();
                for x in xs {
                    out = out + x.apply_lifted(f, mu);
                }
                out
            }
            OperatorExpr::Compose(xs) => {
                let mut cur = f.clone();
                for x in xs.iter().rev() {
                    cur = x.apply_lifted(&cur, mu);
                }
                cur
            }
            OperatorExpr::Scale(c, x) => x.apply_lifted(f, mu).scale(&C::from_mu_poly(c, mu)),
        }
    }

    /// Substitute numeric parameters into every scalar.
    pub fn evaluate_mu(&self, mu: &MuVector) -> OperatorExpr {
        let ev = |c: &MuPoly| MuPoly::constant(c.evaluate(mu));
        match self {
            OperatorExpr::Scalar(c) => OperatorExpr::Scalar(ev(c)),
            OperatorExpr::Sum(xs) => OperatorExpr::Sum(xs.iter().map(|x| x.evaluate_mu(mu)).collect()),
            OperatorExpr::Compose(xs) => {
                OperatorExpr::Compose(xs.iter().map(|x| x.evaluate_mu(mu)).collect())
            }
            OperatorExpr::Scale(c, x) => OperatorExpr::Scale(ev(c), Box::new(x.evaluate_mu(mu))),
            other => other.clone(),
        }
    }

    /// Conjugation by `G = prod |s_i|^{mu_i}`: returns `G^{-1} ∘ self ∘ G`.
    ///
    /// Only derivatives change: `∂_i ↦ ∂_i + mu_i / s_i`.
    pub fn gauge_conjugate(&self) -> OperatorExpr {
        match self {
            OperatorExpr::Deriv(a) => {
                let i = a.number();
                OperatorExpr::Sum(vec![d(i), mu(i) * inv_s(i)])
            }
            OperatorExpr::Sum(xs) => OperatorExpr::Sum(xs.iter().map(|x| x.gauge_conjugate()).collect()),
            OperatorExpr::Compose(xs) => {
                OperatorExpr::Compose(xs.iter().map(|x| x.gauge_conjugate()).collect())
            }
            OperatorExpr::Scale(c, x) => OperatorExpr::Scale(c.clone(), Box::new(x.gauge_conjugate())),
            other => other.clone(),
        }
    }
}

impl Add for OperatorExpr {
    type Output = OperatorExpr;
    fn add(self, rhs: OperatorExpr) -> OperatorExpr {
        let mut xs = match self {
            OperatorExpr::Sum(xs) => xs,
            x => vec![x],
        };
        match rhs {
            OperatorExpr::Sum(ys) => xs.extend(ys),
            y => xs.push(y),
        }
        OperatorExpr::Sum(xs)
    }
}

impl Sub for OperatorExpr {
    type Output = OperatorExpr;
    fn sub(self, rhs: OperatorExpr) -> OperatorExpr {
        self + (-rhs)
    }
}

impl Neg for OperatorExpr {
    type Output = OperatorExpr;
    fn neg(self) -> OperatorExpr {
        self.scaled(-MuPoly::one())
    }
}

impl Mul for OperatorExpr {
    type Output = OperatorExpr;
    fn mul(self, rhs: OperatorExpr) -> OperatorExpr {
        let mut xs = match self {
            OperatorExpr::Compose(xs) => xs,
            x => vec![x],
        };
        match rhs {
            OperatorExpr::Compose(ys) => xs.extend(ys),
            y => xs.push(y),
        }
        OperatorExpr::Compose(xs)
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorExpr::Scalar(c) => write!(f, "[{c}]"),
            OperatorExpr::MonoMul(e) => {
                let mut first = true;
                for (i, &k) in e.iter().enumerate() {
                    if k == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    match k {
                        1 => write!(f, "s{}", i + 1)?,
                        -1 => write!(f, "inv(s{})", i + 1)?,
                        _ => write!(f, "s{}^({})", i + 1, k)?,
                    }
                }
                if first {
                    write!(f, "1")?;
                }
                Ok(())
            }
            OperatorExpr::Deriv(a) => write!(f, "d{a}"),
            OperatorExpr::Refl(a) => write!(f, "R{a}"),
            OperatorExpr::Sum(xs) => {
                write!(f, "(")?;
                for (k, x) in xs.iter().enumerate() {
                    if k > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            OperatorExpr::Compose(xs) => {
                for (k, x) in xs.iter().enumerate() {
                    if k > 0 {
                        write!(f, "*")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            OperatorExpr::Scale(c, x) => write!(f, "[{c}]*({x})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::rat_int;

    fn sp(e: SExp) -> SymPoly {
        SymPoly::monomial(e, MuPoly::one())
    }

    #[test]
    fn derivative_and_reflection() {
        assert_eq!(d(1).apply(&sp([2, 0, 0, 0])), sp([1, 0, 0, 0]).scale_rational(&rat_int(2)));
        assert_eq!(refl(1).apply(&sp([1, 1, 0, 0])), -sp([1, 1, 0, 0]));
        assert_eq!(d(2).apply(&sp([0, -1, 0, 0])), -sp([0, -2, 0, 0]));
    }

    #[test]
    fn dunkl_on_cube() {
        // (∂1 - mu1 s1^{-1} R1) s1^3 = (3 + mu1) s1^2
        let dunkl = d(1) - mu(1) * inv_s(1) * refl(1);
        let out = dunkl.apply(&sp([3, 0, 0, 0]));
        let coeff = &MuPoly::constant(rat_int(3)) + &MuPoly::var(0);
        assert_eq!(out, SymPoly::monomial([2, 0, 0, 0], coeff));
    }

    #[test]
    fn axis_bounds() {
        assert!(Axis::new(0).is_err());
        assert!(Axis::new(5).is_err());
        assert_eq!(Axis::new(3).unwrap().idx(), 2);
    }
}
