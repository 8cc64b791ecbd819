use num_traits::One;

use crate::exact_core::{pochhammer, RatPoly, Rational};
use crate::Result;

use super::{jacobi_homogeneous, nested_ck, KernelBasisElement, SpectralContext};

/// Closed-form basis element together with its relation to the nested CK one.
#[derive(Clone, Debug)]
pub struct ClosedForm {
    pub element: KernelBasisElement,
    /// `closed / ck` when the two are proportional.
    pub ratio_to_ck: Option<Rational>,
}

/// One Jacobi block at level `n` with label `j` applied to `φ ∈ ker D̃_[n-1]`
/// of degree `d_prev`.
fn block(n: usize, j: u32, phi: &RatPoly, d_prev: u32, ctx: &SpectralContext) -> RatPoly {
    let one = Rational::one();
    let big_gamma = ctx.gamma.single(n).clone();
    let lambda = Rational::from_integer(d_prev.into()) + ctx.gamma.first(n - 1);
    let c = j / 2;
    let c_rat = Rational::from_integer(c.into());
    let pref = pochhammer(&one, c) / pochhammer(&big_gamma, c);
    let x: RatPoly = (0..n - 1).map(|i| RatPoly::var(i).pow(2)).fold(RatPoly::zero(), |a, b| &a + &b);
    let y = RatPoly::var(n - 1).pow(2);
    let s_n = RatPoly::var(n - 1);
    let x_phi = ctx.coord(n - 1).apply(phi);
    let h = |deg: i64, a: &Rational, b: &Rational| jacobi_homogeneous(deg, a, b, &x, &y);
    let out = if j.is_multiple_of(2) {
        let first = &h(c as i64, &(&big_gamma - &one), &(&lambda - &one)) * phi;
        let second = &(&h(c as i64 - 1, &big_gamma, &lambda) * &x_phi) * &s_n;
        &first - &second
    } else {
        let first = &h(c as i64, &(&big_gamma - &one), &lambda) * &x_phi;
        let k = (&c_rat + &lambda) / (&c_rat + &big_gamma);
        let second = (&h(c as i64, &big_gamma, &(&lambda - &one)) * phi).scale(&k);
        &first - &(&second * &s_n)
    };
    out.scale(&pref)
}

/// `ψ̃_j` assembled from homogeneous Jacobi polynomials.
pub fn closed_form_element(j: [u32; 3], ctx: &SpectralContext) -> Result<ClosedForm> {
    let mut phi = RatPoly::one();
    let mut d_prev = 0;
    for (level, &jj) in j.iter().enumerate() {
        phi = block(level + 2, jj, &phi, d_prev, ctx);
        d_prev += jj;
    }
    let ck = nested_ck(j, ctx)?;
    let ratio = proportionality(&phi, &ck);
    Ok(ClosedForm {
        element: KernelBasisElement { m: d_prev, labels: j, poly: phi, mu: ctx.mu().clone() },
        ratio_to_ck: ratio,
    })
}

fn proportionality(a: &RatPoly, b: &RatPoly) -> Option<Rational> {
    let (e, cb) = b.terms().next()?;
    let ca = a.coeff(e)?;
    let r = ca / cb;
    (a == &b.scale(&r)).then_some(r)
}
