use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::expr::{Axis, OperatorExpr};
use crate::exact_core::{Coeff, LaurentPoly, MuPoly, MuVector, Rational, SExp};

/// Ordered word `s^s ∂^d R^r`: multiplication first (leftmost), then
/// derivatives, then reflections (acting first). `r` is a bitmask over axes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OpKey {
    pub s: SExp,
    pub d: [u16; 4],
    pub r: u8,
}

impl OpKey {
    pub const IDENTITY: OpKey = OpKey { s: [0; 4], d: [0; 4], r: 0 };

    fn reflects(&self, i: usize) -> bool {
        self.r & (1 << i) != 0
    }
}

/// Canonical normal-ordered operator `Σ c · s^α ∂^β R^ε`.
///
/// Two operators act identically on every Laurent polynomial exactly when
/// their normal forms are equal.
#[derive(Clone, PartialEq, Debug)]
pub struct NormalForm<C> {
    terms: BTreeMap<OpKey, C>,
}

/// `k(k-1)...(k-n+1)` for a signed `k`.
fn falling(k: i32, n: u16) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..n as i32 {
        acc *= k - t;
    }
    acc
}

fn binomial(n: u16, k: u16) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

impl<C: Coeff> NormalForm<C> {
    pub fn zero() -> Self {
        NormalForm { terms: BTreeMap::new() }
    }

    pub fn identity() -> Self {
        Self::term(OpKey::IDENTITY, C::one())
    }

    pub fn scalar(c: C) -> Self {
        Self::term(OpKey::IDENTITY, c)
    }

    pub fn term(k: OpKey, c: C) -> Self {
        let mut nf = Self::zero();
        nf.add_term(k, c);
        nf
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

    pub fn terms(&self) -> impl Iterator<Item = (&OpKey, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &OpKey) -> Option<&C> {
        self.terms.get(k)
    }

    /// The scalar value, if this is a multiple of the identity.
    pub fn as_scalar(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&OpKey::IDENTITY).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, k: OpKey, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, v.mul_ref(c));
        }
        out
    }

    /// Operator product `self ∘ rhs` (rhs acts first), collected after
    /// every pairwise term product.
    pub fn compose(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let c = ca.mul_ref(cb);
                for (k, w) in compose_keys(ka, kb) {
                    out.add_term(k, c.scale(&w));
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        &self.compose(rhs) - &rhs.compose(self)
    }

    pub fn anticommutator(&self, rhs: &Self) -> Self {
        &self.compose(rhs) + &rhs.compose(self)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity();
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    /// Action on a Laurent polynomial.
    pub fn apply(&self, f: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (k, c) in &self.terms {
            for (e, fc) in f.terms() {
                let mut w = BigInt::one();
                let mut ne = *e;
                let mut negate = false;
                for i in 0..4 {
                    if k.reflects(i) && e[i] % 2 != 0 {
                        negate = !negate;
                    }
                    if k.d[i] > 0 {
                        w *= falling(e[i], k.d[i]);
                        ne[i] -= k.d[i] as i32;
                    }
                    ne[i] += k.s[i];
                }
                if w.is_zero() {
                    continue;
                }
                if negate {
                    w = -w;
                }
                out.add_term(ne, fc.mul_ref(c).scale(&Rational::from_integer(w)));
            }
        }
        out
    }

    /// Re-express as an operator tree.
    pub fn to_expr(&self) -> OperatorExpr
    where
        C: IntoMuPoly,
    {
        let mut parts = Vec::with_capacity(self.terms.len());
        for (k, c) in &self.terms {
            let mut word = vec![OperatorExpr::MonoMul(k.s)];
            for a in Axis::all() {
                for _ in 0..k.d[a.idx()] {
                    word.push(OperatorExpr::Deriv(a));
                }
            }
            for a in Axis::all() {
                if k.reflects(a.idx()) {
                    word.push(OperatorExpr::Refl(a));
                }
            }
            parts.push(OperatorExpr::Compose(word).scaled(c.to_mu_poly()));
        }
        if parts.is_empty() {
            OperatorExpr::zero()
        } else {
            OperatorExpr::Sum(parts)
        }
    }

    /// A monomial on which this operator acts nontrivially, with the image.
    ///
    /// Searches Laurent monomials with exponents in `-radius..=radius`
    /// around the derivative orders of the terms, lowest total degree first.
    pub fn separating_monomial(&self, radius: i32) -> Option<(SExp, LaurentPoly<C>)> {
        if self.is_zero() {
            return None;
        }
        let mut candidates: Vec<SExp> = Vec::new();
        for k in self.terms.keys() {
            let base = [k.d[0] as i32, k.d[1] as i32, k.d[2] as i32, k.d[3] as i32];
            for a in -radius..=radius {
                for b in -radius..=radius {
                    for c in -radius..=radius {
                        for e in -radius..=radius {
                            candidates.push([base[0] + a, base[1] + b, base[2] + c, base[3] + e]);
                        }
                    }
                }
            }
        }
        candidates.sort_by_key(|e| (e.iter().map(|x| x.abs()).sum::<i32>(), *e));
        candidates.dedup();
        candidates.into_iter().find_map(|e| {
            let image = self.apply(&LaurentPoly::monomial(e, C::one()));
            (!image.is_zero()).then_some((e, image))
        })
    }

    /// Largest total degree shift `|α| - |β|` over the terms.
    pub fn max_degree_shift(&self) -> i32 {
        self.terms
            .keys()
            .map(|k| k.s.iter().sum::<i32>() - k.d.iter().map(|&x| x as i32).sum::<i32>())
            .max()
            .unwrap_or(0)
    }
}

/// Coefficient types that embed into the symbolic ring.
pub trait IntoMuPoly {
    fn to_mu_poly(&self) -> MuPoly;
}

impl IntoMuPoly for MuPoly {
    fn to_mu_poly(&self) -> MuPoly {
        self.clone()
    }
}

impl IntoMuPoly for Rational {
    fn to_mu_poly(&self) -> MuPoly {
        MuPoly::constant(self.clone())
    }
}

impl NormalForm<MuPoly> {
    pub fn from_expr(op: &OperatorExpr) -> Self {
        match op {
            OperatorExpr::Scalar(c) => Self::scalar(c.clone()),
            OperatorExpr::MonoMul(e) => Self::term(OpKey { s: *e, ..OpKey::IDENTITY }, MuPoly::one()),
            OperatorExpr::Deriv(a) => {
                let mut k = OpKey::IDENTITY;
                k.d[a.idx()] = 1;
                Self::term(k, MuPoly::one())
            }
            OperatorExpr::Refl(a) => {
                Self::term(OpKey { r: 1 << a.idx(), ..OpKey::IDENTITY }, MuPoly::one())
            }
            OperatorExpr::Sum(xs) => {
                let mut out = Self::zero();
                for x in xs {
                    out = &out + &Self::from_expr(x);
                }
                out
            }
            OperatorExpr::Compose(xs) => {
                let mut it = xs.iter();
                let mut acc = match it.next() {
                    Some(x) => Self::from_expr(x),
                    None => return Self::identity(),
                };
                for x in it {
                    if acc.is_zero() {
                        break;
                    }
                    acc = acc.compose(&Self::from_expr(x));
                }
                acc
            }
            OperatorExpr::Scale(c, x) => Self::from_expr(x).scale(c),
        }
    }

    /// Substitute numeric parameters.
    pub fn evaluate_mu(&self, mu: &MuVector) -> NormalForm<Rational> {
        let mut out = NormalForm::zero();
        for (k, c) in &self.terms {
            out.add_term(*k, c.evaluate(mu));
        }
        out
    }
}

/// Products of two ordered words, with integer weights.
fn compose_keys(a: &OpKey, b: &OpKey) -> Vec<(OpKey, Rational)> {
    // R^{a.r} moved right past s^{b.s} ∂^{b.d}
    let mut negate = false;
    for i in 0..4 {
        if a.reflects(i) && (b.s[i] + b.d[i] as i32) % 2 != 0 {
            negate = !negate;
        }
    }
    // ∂_i^{a.d} s_i^{b.s} = Σ_k C(a.d,k) ff(b.s,k) s_i^{b.s-k} ∂_i^{a.d-k}
    let mut partial: Vec<(OpKey, BigInt)> = vec![(
        OpKey { s: a.s, d: [0; 4], r: a.r ^ b.r },
        if negate { -BigInt::one() } else { BigInt::one() },
    )];
    for i in 0..4 {
        let mut next = Vec::with_capacity(partial.len() * (a.d[i] as usize + 1));
        for (k, w) in &partial {
            for j in 0..=a.d[i] {
                let f = falling(b.s[i], j);
                if f.is_zero() {
                    continue;
                }
                let mut nk = *k;
                nk.s[i] += b.s[i] - j as i32;
                nk.d[i] = a.d[i] - j + b.d[i];
                next.push((nk, w * binomial(a.d[i], j) * f));
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|(k, w)| (k, Rational::from_integer(w)))
        .collect()
}

/// Prints in the expression syntax accepted by the parser, e.g.
/// `(1/2*mu1)*inv(s1)*d2*R1 + (1)*s3`.
impl<C: Coeff + std::fmt::Display> std::fmt::Display for NormalForm<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (key, c)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, &a) in key.s.iter().enumerate() {
                match a {
                    0 => {}
                    1 => write!(f, "*s{}", i + 1)?,
                    -1 => write!(f, "*inv(s{})", i + 1)?,
                    a if a > 0 => write!(f, "*s{}^{a}", i + 1)?,
                    a => write!(f, "*inv(s{})^{}", i + 1, -a)?,
                }
            }
            for (i, &b) in key.d.iter().enumerate() {
                match b {
                    0 => {}
                    1 => write!(f, "*d{}", i + 1)?,
                    b => write!(f, "*d{}^{b}", i + 1)?,
                }
            }
            for i in 0..4 {
                if key.r & (1 << i) != 0 {
                    write!(f, "*R{}", i + 1)?;
                }
            }
        }
        Ok(())
    }
}

impl<'a, C: Coeff> Add<&'a NormalForm<C>> for &'a NormalForm<C> {
    type Output = NormalForm<C>;
    fn add(self, rhs: &'a NormalForm<C>) -> NormalForm<C> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Sub<&'a NormalForm<C>> for &'a NormalForm<C> {
    type Output = NormalForm<C>;
    fn sub(self, rhs: &'a NormalForm<C>) -> NormalForm<C> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::rat;
    use crate::operator_engine::{commutator, d, inv_s, mu, normal_form, refl, s};

    #[test]
    fn heisenberg() {
        let nf = normal_form(&(d(1) * s(1)));
        let expected = &normal_form(&(s(1) * d(1))) + &NormalForm::identity();
        assert_eq!(nf, expected);
    }

    #[test]
    fn reflection_past_coordinate() {
        assert_eq!(normal_form(&(refl(1) * s(1))), normal_form(&(-(s(1) * refl(1)))));
        assert_eq!(normal_form(&(refl(2) * s(1))), normal_form(&(s(1) * refl(2))));
        assert_eq!(normal_form(&(refl(3) * d(3))), normal_form(&(-(d(3) * refl(3)))));
        assert_eq!(normal_form(&(refl(4) * refl(4))), NormalForm::identity());
    }

    #[test]
    fn anticommutator_of_x_and_dunkl() {
        let x = s(1);
        let dunkl = d(1) - mu(1) * inv_s(1) * refl(1);
        let lhs = normal_form(&(x.clone() * dunkl.clone() + dunkl * x));
        let two_e = normal_form(&(s(1) * d(1)).scaled_rational(rat(2, 1)));
        assert_eq!(lhs, &two_e + &NormalForm::identity());
    }

    #[test]
    fn self_commutator_vanishes() {
        let a = d(2) * s(2) * refl(2) + mu(3) * inv_s(1);
        assert!(normal_form(&commutator(&a, &a)).is_zero());
    }

    #[test]
    fn separating_monomial_found() {
        let nf = normal_form(&(d(1) * d(2) - d(2) * refl(3)));
        let (e, image) = nf.separating_monomial(1).unwrap();
        assert!(!image.is_zero());
        assert_eq!(nf.apply(&crate::exact_core::SymPoly::monomial(e, MuPoly::one())), image);
        assert!(NormalForm::<MuPoly>::zero().separating_monomial(1).is_none());
    }

    #[test]
    fn negative_power_derivative() {
        // ∂ s^{-1} = s^{-1} ∂ - s^{-2}
        let lhs = normal_form(&(d(1) * inv_s(1)));
        let rhs = &normal_form(&(inv_s(1) * d(1))) - &normal_form(&(inv_s(1) * inv_s(1)));
        assert_eq!(lhs, rhs);
    }
}
