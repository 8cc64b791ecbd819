use dunkl_s3::algebra_verifier::{
    run_full_suite, verify_osp, verify_rank1_bi, verify_structure, Family, Status, SuiteConfig, VerificationReport,
    REPORT_VERSION,
};
use dunkl_s3::realizations::{Gauge, Mutation, Subset};

fn only(families: &[Family]) -> SuiteConfig {
    SuiteConfig { families: Some(families.to_vec()), ..Default::default() }
}

#[test]
fn report_is_deterministic_for_a_seed() {
    let cfg = SuiteConfig { seed: 7, ..only(&[Family::Identification, Family::Gauge]) };
    let a = run_full_suite(&cfg).to_json_untimed();
    let b = run_full_suite(&cfg).to_json_untimed();
    assert_eq!(a, b);
}

#[test]
fn report_schema() {
    let rep = run_full_suite(&only(&[Family::Identification]));
    let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
    assert_eq!(v["version"], REPORT_VERSION);
    assert_eq!(v["mu_mode"], "symbolic");
    assert!(v["caps"]["sphere"].is_u64());
    assert_eq!(v["summary"]["fail"], 0);
    let back: VerificationReport = serde_json::from_str(&rep.to_json()).unwrap();
    assert_eq!(back.checks.len(), rep.checks.len());
}

#[test]
fn subset_filter_keeps_only_that_subset() {
    let a = Subset::parse("134").unwrap();
    let rep = run_full_suite(&SuiteConfig { subset: Some(a), ..only(&[Family::Osp]) });
    assert_eq!(rep.checks.len(), 20);
    assert!(rep.checks.iter().all(|c| c.id.ends_with("A=134")));
    assert!(rep.all_passed());
}

#[test]
fn osp_relations_for_one_subset() {
    for g in [Gauge::Plain, Gauge::Tilde] {
        let checks = verify_osp(Subset::parse("24").unwrap(), g);
        assert_eq!(checks.len(), 10);
        assert!(checks.iter().all(|c| c.passed()), "{:?}", checks.iter().find(|c| !c.passed()));
    }
}

#[test]
fn structure_relation_sample_pairs() {
    for (a, b) in [("12", "23"), ("1", "234"), ("13", "24"), ("1234", "2")] {
        let c = verify_structure(Subset::parse(a).unwrap(), Subset::parse(b).unwrap());
        assert_eq!(c.status, Status::Pass, "{}", c.id);
    }
}

#[test]
fn rank_one_relations() {
    let checks = verify_rank1_bi();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c.passed()));
}

#[test]
fn mutation_yields_a_witness() {
    let rep = run_full_suite(&SuiteConfig { mutation: Some(Mutation::L12RotationSign), ..only(&[Family::Identification]) });
    assert!(!rep.all_passed());
    let fail = rep.failures().next().unwrap();
    let w = fail.witness.as_ref().expect("failing canonical-form check carries a witness");
    assert!(!w.residue.is_empty());
    assert!(rep.to_text().contains("FAIL identification.Q=L.A=12"));
}

#[test]
fn mutation_catalog_is_large_enough() {
    assert!(Mutation::ALL.len() >= 10);
    for m in Mutation::ALL {
        assert_eq!(m.name().parse::<Mutation>().unwrap(), m);
    }
}
