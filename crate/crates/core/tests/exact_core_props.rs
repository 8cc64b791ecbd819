use dunkl_s3::exact_core::serial::{rat_from_json_str, sym_from_json_str, to_json_string};
use dunkl_s3::exact_core::{evaluate_mu, format_rational, parse_rational, rat, MuPoly, RatPoly, Rational, SymPoly};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn laurent_poly() -> impl Strategy<Value = RatPoly> {
    prop::collection::vec((prop::array::uniform4(-2i32..=3), small_rat()), 0..5).prop_map(RatPoly::from_terms)
}

fn mu_poly() -> impl Strategy<Value = MuPoly> {
    prop::collection::vec((prop::array::uniform4(0u16..=2), small_rat()), 0..3).prop_map(|terms| {
        terms.into_iter().fold(MuPoly::constant(rat(0, 1)), |acc, (e, c)| acc + MuPoly::monomial(e, c))
    })
}

fn sym_poly() -> impl Strategy<Value = SymPoly> {
    prop::collection::vec((prop::array::uniform4(-2i32..=3), mu_poly()), 0..4).prop_map(SymPoly::from_terms)
}

fn mu_vec() -> impl Strategy<Value = [Rational; 4]> {
    prop::array::uniform4((0i64..=5, 1i64..=3).prop_map(|(n, d)| rat(n, d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in laurent_poly(), b in laurent_poly(), c in laurent_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, RatPoly::zero());
        prop_assert_eq!(&a * &RatPoly::one(), a.clone());
    }

    #[test]
    fn symbolic_ring_axioms(a in sym_poly(), b in sym_poly(), c in sym_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn no_zero_coefficients_stored(a in laurent_poly(), b in laurent_poly()) {
        let p = &(&a * &b) - &(&b * &a);
        prop_assert!(p.is_zero());
        prop_assert!((&a + &b).terms().all(|(_, c)| *c != rat(0, 1)));
    }

    #[test]
    fn serialization_round_trip(a in laurent_poly(), s in sym_poly()) {
        prop_assert_eq!(rat_from_json_str(&to_json_string(&a)).unwrap(), a);
        prop_assert_eq!(sym_from_json_str(&to_json_string(&s)).unwrap(), s);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in sym_poly(), b in sym_poly(), mu in mu_vec()) {
        let ea = evaluate_mu(&a, &mu).unwrap();
        let eb = evaluate_mu(&b, &mu).unwrap();
        prop_assert_eq!(evaluate_mu(&(&a * &b), &mu).unwrap(), &ea * &eb);
        prop_assert_eq!(evaluate_mu(&(&a + &b), &mu).unwrap(), &ea + &eb);
    }

    #[test]
    fn rational_text_round_trip(r in small_rat()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }
}

#[test]
fn negative_parameters_rejected() {
    let f = SymPoly::one();
    assert!(evaluate_mu(&f, &[rat(-1, 2), rat(0, 1), rat(0, 1), rat(0, 1)]).is_err());
}
