use num_traits::{One, Zero};

use crate::exact_core::{pochhammer, RatPoly, Rational};

fn factorial(n: u32) -> Rational {
    pochhammer(&Rational::one(), n)
}

/// `(a+1)_n / ((a+1)_k n!)` written as a finite product, so that no
/// parameter value produces a pole.
fn leading_ratio(n: u32, k: u32, a: &Rational) -> Rational {
    let start = a + Rational::from_integer((k + 1).into());
    pochhammer(&start, n - k) / factorial(n)
}

/// `P_n^{(a,b)}(x)` from the terminating hypergeometric series
/// `(a+1)_n/n! · 2F1(-n, n+a+b+1; a+1; (1-x)/2)`.
pub fn jacobi(n: u32, a: &Rational, b: &Rational, x: &Rational) -> Rational {
    let minus_n = -Rational::from_integer(n.into());
    let upper = Rational::from_integer(n.into()) + a + b + Rational::one();
    let z = (Rational::one() - x) / Rational::from_integer(2.into());
    let mut acc = Rational::zero();
    let mut zk = Rational::one();
    for k in 0..=n {
        acc += pochhammer(&minus_n, k) * pochhammer(&upper, k) / factorial(k)
            * leading_ratio(n, k, a)
            * &zk;
        zk *= &z;
    }
    acc
}

/// `(x+y)^n P_n^{(a,b)}((x-y)/(x+y))` as a polynomial in `x` and `y`,
/// expanded with `(a+1)_n/n! · x^n · 2F1(-n, -n-b; a+1; -y/x)`.
///
/// Negative `n` gives zero.
pub fn jacobi_homogeneous(n: i64, a: &Rational, b: &Rational, x: &RatPoly, y: &RatPoly) -> RatPoly {
    if n < 0 {
        return RatPoly::zero();
    }
    let n = n as u32;
    let minus_n = -Rational::from_integer(n.into());
    let second = &minus_n - b;
    let x_pows: Vec<RatPoly> = (0..=n).scan(RatPoly::one(), |p, _| {
        let cur = p.clone();
        *p = &*p * x;
        Some(cur)
    }).collect();
    let mut out = RatPoly::zero();
    let mut y_pow = RatPoly::one();
    for k in 0..=n {
        let mut c = pochhammer(&minus_n, k) * pochhammer(&second, k) / factorial(k) * leading_ratio(n, k, a);
        if k % 2 == 1 {
            c = -c;
        }
        out.add_scaled(&(&y_pow * &x_pows[(n - k) as usize]), &c);
        y_pow = &y_pow * y;
    }
    out
}
