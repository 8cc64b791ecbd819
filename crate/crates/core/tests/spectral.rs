use std::f64::consts::PI;
use std::num::NonZeroUsize;

use dunkl_s3::exact_core::{rat, rat_int, RatPoly, Rational};
use dunkl_s3::spectral::{
    base_integral, build_basis, ck_extend, closed_form_element, fischer_dims, gram, jacobi, jacobi_homogeneous,
    kernel_dim_by_rank, labels, sphere_moment, SpectralContext,
};
use gauss_quad::GaussLegendre;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn half() -> [Rational; 4] {
    let h = rat(1, 2);
    [h.clone(), h.clone(), h.clone(), h]
}

/// Integral over the three-sphere in hyperspherical angles, splitting each
/// range at the zeros of the coordinates so that `|s_i|` is smooth on every piece.
fn sphere_integral(f: impl Fn([f64; 4]) -> f64) -> f64 {
    let gl = GaussLegendre::new(NonZeroUsize::new(24).unwrap());
    let halves = [(0.0, PI / 2.0), (PI / 2.0, PI)];
    let quarters = [(0.0, PI / 2.0), (PI / 2.0, PI), (PI, 1.5 * PI), (1.5 * PI, 2.0 * PI)];
    let mut total = 0.0;
    for &(a1, b1) in &halves {
        total += gl.integrate(a1, b1, |t1| {
            let mut inner = 0.0;
            for &(a2, b2) in &halves {
                inner += gl.integrate(a2, b2, |t2| {
                    let mut ring = 0.0;
                    for &(a3, b3) in &quarters {
                        ring += gl.integrate(a3, b3, |p| {
                            let s = [
                                t1.cos(),
                                t1.sin() * t2.cos(),
                                t1.sin() * t2.sin() * p.cos(),
                                t1.sin() * t2.sin() * p.sin(),
                            ];
                            f(s)
                        });
                    }
                    ring * t2.sin()
                });
            }
            inner * t1.sin() * t1.sin()
        });
    }
    total
}

fn weight(s: [f64; 4]) -> f64 {
    // mu = 1/2 in every slot: Π |s_i|^{2 mu_i} = Π |s_i|
    s.iter().map(|x| x.abs()).product()
}

fn eval(p: &RatPoly, s: [f64; 4]) -> f64 {
    p.eval_f64(&s)
}

#[test]
fn moments_match_quadrature() {
    let ctx = SpectralContext::new(&half()).unwrap();
    let base = sphere_integral(weight);
    assert!((base - base_integral(&ctx.gamma)).abs() < 1e-11, "{base}");
    for a in [[1u32, 0, 0, 0], [0, 2, 0, 1], [1, 1, 1, 1], [3, 0, 2, 0]] {
        let num = sphere_integral(|s| weight(s) * (0..4).map(|i| s[i].powi(2 * a[i] as i32)).product::<f64>());
        let exact = sphere_moment(a, &ctx.gamma).to_f64().unwrap();
        assert!((num / base - exact).abs() < 1e-10, "a={a:?}: {} vs {exact}", num / base);
    }
}

#[test]
fn gram_matches_quadrature() {
    let ctx = SpectralContext::new(&half()).unwrap();
    let basis = build_basis(2, &ctx).unwrap();
    let g = gram(2, 2, &ctx).unwrap();
    let base = sphere_integral(weight);
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let num = sphere_integral(|s| weight(s) * eval(&a.poly, s) * eval(&b.poly, s)) / base;
            let exact = g[i][j].to_f64().unwrap();
            assert!((num - exact).abs() < 1e-9, "({i},{j}): {num} vs {exact}");
        }
    }
}

#[test]
fn closed_form_equals_ck_through_degree_five() {
    for mu in [half(), [rat(1, 3), rat_int(2), rat(5, 4), rat_int(0)], [rat_int(0), rat_int(0), rat_int(0), rat_int(0)]] {
        let ctx = SpectralContext::new(&mu).unwrap();
        for m in 0..=5 {
            for j in labels(m) {
                let cf = closed_form_element(j, &ctx).unwrap();
                assert!(ctx.dirac(4).apply(&cf.element.poly).is_zero(), "{j:?}");
                assert_eq!(cf.ratio_to_ck, Some(rat_int(1)), "{j:?} at {mu:?}");
            }
        }
    }
}

#[test]
fn kernel_dimensions_by_row_reduction() {
    let ctx = SpectralContext::new(&[rat(2, 3), rat_int(1), rat(1, 2), rat(3, 7)]).unwrap();
    for n in 2..=4 {
        for m in 0..=5 {
            assert_eq!(kernel_dim_by_rank(n, m, &ctx), fischer_dims(n as u32, m).1, "n={n} m={m}");
        }
    }
}

#[test]
fn degree_one_example_at_half() {
    let ctx = SpectralContext::new(&half()).unwrap();
    let b = build_basis(1, &ctx).unwrap();
    assert_eq!(b.len(), 3);
    let e = b.iter().find(|e| e.labels == [1, 0, 0]).unwrap();
    // γ1 = γ2 = 1: s1 - s2, no further correction in degree one
    let expected = &RatPoly::var(0) - &RatPoly::var(1);
    assert_eq!(e.poly, expected);
}

#[test]
fn homogenized_jacobi_identity() {
    for (n, a, b) in [(0u32, rat(1, 2), rat(3, 2)), (3, rat(-1, 2), rat(5, 3)), (4, rat(7, 4), rat_int(2))] {
        for (x, y) in [(rat(2, 3), rat(1, 5)), (rat_int(1), rat_int(3))] {
            let hx = RatPoly::constant(x.clone());
            let hy = RatPoly::constant(y.clone());
            let homog = jacobi_homogeneous(n as i64, &a, &b, &hx, &hy);
            let sum = &x + &y;
            let direct = jacobi(n, &a, &b, &((&x - &y) / &sum)) * num_traits::pow(sum, n as usize);
            assert_eq!(homog, RatPoly::constant(direct));
        }
    }
}

fn homogeneous_poly(vars: usize, deg: u32) -> impl Strategy<Value = RatPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=deg, vars), -4i64..=4), 1..5).prop_map(move |terms| {
        let mut p = RatPoly::zero();
        for (split, c) in terms {
            // distribute deg over the first `vars` coordinates
            let mut e = [0i32; 4];
            let mut left = deg;
            for (i, k) in split.iter().enumerate() {
                let take = if i + 1 == vars { left } else { (*k).min(left) };
                e[i] = take as i32;
                left -= take;
            }
            p.add_term(e, rat(c, 1));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ck_lands_in_kernel((n, p) in (2usize..=4, 0u32..=6).prop_flat_map(|(n, deg)| (Just(n), homogeneous_poly(n - 1, deg)))) {
        let ctx = SpectralContext::new(&[rat(1, 3), rat(3, 2), rat_int(1), rat(2, 5)]).unwrap();
        let out = ck_extend(&p, n, &ctx).unwrap();
        prop_assert!(ctx.dirac(n).apply(&out).is_zero());
        // restriction to s_n = 0 gives back p
        let restricted = RatPoly::from_terms(out.terms().filter(|(e, _)| e[n - 1] == 0).map(|(e, c)| (*e, c.clone())));
        prop_assert_eq!(restricted, p);
    }
}
