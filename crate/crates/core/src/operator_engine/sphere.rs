use rayon::prelude::*;

use super::expr::OperatorExpr;
use super::normal::NormalForm;
use crate::exact_core::{Coeff, LaurentPoly, MuPoly, SExp, SymPoly};

/// Class of a Laurent polynomial modulo `s1²+s2²+s3²+s4²-1`.
///
/// The numerator is `f · s^clearing` with every `s4` exponent reduced to 0
/// or 1, which is the remainder of division by the ideal generator viewed
/// as a monic quadratic in `s4`. Since every `s_i` is a non-zero-divisor
/// modulo the (prime) ideal, the class is zero iff the numerator is zero.
#[derive(Clone, PartialEq, Debug)]
pub struct SphereQuotientElem<C: Coeff> {
    pub numerator: LaurentPoly<C>,
    pub clearing: [u32; 4],
}

impl<C: Coeff> SphereQuotientElem<C> {
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

/// `1 - s1² - s2² - s3²`, the value of `s4²` on the sphere.
fn s4_squared<C: Coeff>() -> LaurentPoly<C> {
    let mut p = LaurentPoly::one();
    for i in 0..3 {
        let mut e = [0; 4];
        e[i] = 2;
        p.add_term(e, -C::one());
    }
    p
}

pub fn reduce_mod_sphere<C: Coeff>(f: &LaurentPoly<C>) -> SphereQuotientElem<C> {
    let mins = f.min_exponents();
    let mut clearing = [0u32; 4];
    let mut shift = [0i32; 4];
    for i in 0..4 {
        if mins[i] < 0 {
            let k = (-mins[i] + 1) / 2;
            clearing[i] = 2 * k as u32;
            shift[i] = 2 * k;
        }
    }
    let g = f.shift(&shift);
    let base = s4_squared::<C>();
    let mut powers: Vec<LaurentPoly<C>> = vec![LaurentPoly::one()];
    let mut out = LaurentPoly::zero();
    for (e, c) in g.terms() {
        let q = (e[3] / 2) as usize;
        let mut rest = *e;
        rest[3] %= 2;
        while powers.len() <= q {
            let next = powers.last().expect("nonempty") * &base;
            powers.push(next);
        }
        for (pe, pc) in powers[q].terms() {
            let ne = [rest[0] + pe[0], rest[1] + pe[1], rest[2] + pe[2], rest[3]];
            out.add_term(ne, c.mul_ref(pc));
        }
    }
    SphereQuotientElem { numerator: out, clearing }
}

/// Monomials with `s4` exponent 0 or 1 and total degree at most `cap`,
/// in lexicographic order. They span the quotient up to that degree.
pub fn sphere_test_monomials(cap: u32) -> Vec<SExp> {
    let cap = cap as i32;
    let mut out = Vec::new();
    for a in 0..=cap {
        for b in 0..=cap - a {
            for c in 0..=cap - a - b {
                for e4 in 0..=1.min(cap - a - b - c) {
                    out.push([a, b, c, e4]);
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct SphereCheck {
    pub vanishes: bool,
    pub cap: u32,
    pub monomials_checked: usize,
    /// First failing monomial with its reduced nonzero residue.
    pub witness: Option<(SExp, SymPoly)>,
}

/// Does `op` map every test monomial into the sphere ideal?
pub fn op_vanishes_on_sphere(op: &OperatorExpr, degree_cap: u32) -> SphereCheck {
    nf_vanishes_on_sphere(&NormalForm::from_expr(op), degree_cap)
}

pub fn nf_vanishes_on_sphere(nf: &NormalForm<MuPoly>, degree_cap: u32) -> SphereCheck {
    let monomials = sphere_test_monomials(degree_cap);
    let residues: Vec<Option<SymPoly>> = monomials
        .par_iter()
        .map(|e| {
            let f = SymPoly::monomial(*e, MuPoly::constant(num_traits::One::one()));
            let r = reduce_mod_sphere(&nf.apply(&f));
            (!r.is_zero()).then_some(r.numerator)
        })
        .collect();
    let witness = monomials
        .iter()
        .zip(residues)
        .find_map(|(e, r)| r.map(|r| (*e, r)));
    SphereCheck {
        vanishes: witness.is_none(),
        cap: degree_cap,
        monomials_checked: monomials.len(),
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::{rat_int, RatPoly};
    use crate::operator_engine::{d, identity, mono, s};

    fn generator() -> RatPoly {
        let mut p = RatPoly::constant(rat_int(-1));
        for i in 0..4 {
            let mut e = [0; 4];
            e[i] = 2;
            p.add_term(e, rat_int(1));
        }
        p
    }

    #[test]
    fn generator_reduces_to_zero() {
        assert!(reduce_mod_sphere(&generator()).is_zero());
        let scaled = generator().shift(&[0, 0, 0, -1]);
        let r = reduce_mod_sphere(&scaled);
        assert!(r.is_zero());
        assert_eq!(r.clearing, [0, 0, 0, 2]);
    }

    #[test]
    fn single_substitution() {
        let f = RatPoly::monomial([0, 0, 0, 2], rat_int(1));
        let expected = RatPoly::from_terms([
            ([0, 0, 0, 0], rat_int(1)),
            ([2, 0, 0, 0], rat_int(-1)),
            ([0, 2, 0, 0], rat_int(-1)),
            ([0, 0, 2, 0], rat_int(-1)),
        ]);
        assert_eq!(reduce_mod_sphere(&f).numerator, expected);
    }

    #[test]
    fn ideal_member_vanishes() {
        let radius = s(1) * s(1) + s(2) * s(2) + s(3) * s(3) + s(4) * s(4);
        let op = radius - identity();
        assert!(op_vanishes_on_sphere(&op, 3).vanishes);
        assert!(op_vanishes_on_sphere(&(mono([0, -1, 0, 0]) * op), 3).vanishes);
    }

    #[test]
    fn radial_derivative_does_not_vanish() {
        let check = op_vanishes_on_sphere(&d(1), 4);
        assert!(!check.vanishes);
        let (e, _) = check.witness.unwrap();
        assert_eq!(e, [1, 0, 0, 0]);
    }

    #[test]
    fn monomial_count() {
        // degree <= 2 in s1..s3 (10) plus s4 times degree <= 1 (4)
        assert_eq!(sphere_test_monomials(2).len(), 14);
    }
}
