use dunkl_s3::exact_core::{rat, SymPoly};
use dunkl_s3::operator_engine::rewrite::rewrite_normal_form;
use dunkl_s3::operator_engine::{d, inv_s, mu, normal_form, refl, s, scalar, OperatorExpr};
use proptest::prelude::*;

fn leaf() -> impl Strategy<Value = OperatorExpr> {
    (0usize..6, 1usize..=4, -2i64..=3).prop_map(|(kind, i, c)| match kind {
        0 => s(i),
        1 => inv_s(i),
        2 => d(i),
        3 => refl(i),
        4 => mu(i),
        _ => scalar(rat(c, 2)),
    })
}

fn expr() -> impl Strategy<Value = OperatorExpr> {
    leaf().prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(|v| v.into_iter().reduce(|a, b| a + b).unwrap()),
            prop::collection::vec(inner, 2..4).prop_map(|v| v.into_iter().reduce(|a, b| a * b).unwrap()),
        ]
    })
}

fn test_poly() -> impl Strategy<Value = SymPoly> {
    prop::collection::vec((prop::array::uniform4(-2i32..=3), -3i64..=3), 1..4)
        .prop_map(|terms| SymPoly::from_terms(terms.into_iter().map(|(e, c)| (e, rat(c, 1).into()))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_acts_like_the_tree(op in expr(), f in test_poly()) {
        prop_assert_eq!(normal_form(&op).apply(&f), op.apply(&f));
    }

    #[test]
    fn rewriting_agrees_with_leibniz(op in expr()) {
        let out = rewrite_normal_form(&op);
        prop_assert_eq!(&out.normal_form, &normal_form(&op));
        prop_assert!((out.steps as f64) <= out.bound, "{} steps > bound {}", out.steps, out.bound);
    }

    #[test]
    fn composition_is_compatible(a in expr(), b in expr()) {
        let lhs = normal_form(&(a.clone() * b.clone()));
        prop_assert_eq!(lhs, normal_form(&a).compose(&normal_form(&b)));
    }

    #[test]
    fn canonical_form_is_idempotent(op in expr()) {
        let nf = normal_form(&op);
        prop_assert_eq!(normal_form(&nf.to_expr()), nf);
    }
}

#[test]
fn canonical_form_decides_equality() {
    // Two spellings of the same operator.
    let a = d(1) * s(1);
    let b = s(1) * d(1) + scalar(rat(1, 1));
    assert_eq!(normal_form(&a), normal_form(&b));
    assert_ne!(normal_form(&a), normal_form(&(s(1) * d(1))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn printed_form_parses_back(op in expr()) {
        let nf = normal_form(&op);
        let parsed = dunkl_s3::operator_engine::parse::parse_operator(&nf.to_string(), &dunkl_s3::operator_engine::parse::NoNames).unwrap();
        prop_assert_eq!(normal_form(&parsed), nf);
    }
}
