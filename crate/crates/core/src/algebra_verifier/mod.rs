//! The identity suite: every algebraic claim about the model, checked
//! either as an exact canonical-form identity or modulo the sphere ideal.

mod catalog;
mod report;

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exact_core::serial::{to_records, TermRecord};
use crate::exact_core::{MuPoly, SymPoly};
use crate::operator_engine::{normal_form, op_vanishes_on_sphere, OperatorExpr};
use crate::realizations::{Gauge, Mutation, Realizations, Subset};

pub use catalog::Family;
pub use report::{Summary, VerificationReport, REPORT_VERSION};

/// How a check was decided.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Method {
    CanonicalForm,
    SphereQuotient { cap: u32 },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Input monomial on which a failing identity leaves a nonzero residue.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub monomial: [i32; 4],
    pub residue: Vec<TermRecord>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub id: String,
    pub relation: Family,
    pub method: Method,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Random monomials on which the unsimplified trees were also applied.
    pub sampled: usize,
    /// Set when the sampled action disagrees with the canonical form.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub elapsed_ms: f64,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// An identity waiting to be decided.
#[derive(Clone, Debug)]
pub struct PendingCheck {
    pub id: String,
    pub family: Family,
    pub lhs: OperatorExpr,
    pub rhs: OperatorExpr,
    /// `Some(cap)`: decide modulo the sphere ideal with that degree cap.
    pub sphere_cap: Option<u32>,
    /// Subsets the check is indexed by, for filtering.
    pub subsets: Vec<Subset>,
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub sphere_cap: u32,
    pub seed: u64,
    /// Random monomials per canonical-form check for the sampling cross-check.
    pub samples: usize,
    /// Only these families (all when `None`).
    pub families: Option<Vec<Family>>,
    /// Only checks indexed by this subset (subset-free checks are kept).
    pub subset: Option<Subset>,
    /// Only checks whose subsets all lie inside this one.
    pub within: Option<Subset>,
    pub mutation: Option<Mutation>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            sphere_cap: 6,
            seed: 0,
            samples: 2,
            families: None,
            subset: None,
            within: None,
            mutation: None,
        }
    }
}

fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

fn witness(monomial: [i32; 4], residue: &SymPoly) -> Witness {
    Witness { monomial, residue: to_records(residue) }
}

/// Decide one identity.
pub fn run_check(p: &PendingCheck, seed: u64, samples: usize) -> IdentityCheck {
    let start = Instant::now();
    let diff = p.lhs.clone() - p.rhs.clone();
    let (method, status, wit, sampled, note) = match p.sphere_cap {
        Some(cap) => {
            let check = op_vanishes_on_sphere(&diff, cap);
            let w = check.witness.as_ref().map(|(e, r)| witness(*e, r));
            let status = if check.vanishes { Status::Pass } else { Status::Fail };
            (Method::SphereQuotient { cap }, status, w, 0, None)
        }
        None => {
            let nf = normal_form(&diff);
            let mut rng = StdRng::seed_from_u64(seed ^ fnv1a(&p.id));
            let mut note = None;
            for _ in 0..samples {
                let e = [
                    rng.gen_range(-2..=4),
                    rng.gen_range(-2..=4),
                    rng.gen_range(-2..=4),
                    rng.gen_range(-2..=4),
                ];
                let f = SymPoly::monomial(e, MuPoly::constant(num_traits::One::one()));
                if diff.apply(&f) != nf.apply(&f) {
                    note = Some(format!("tree action and canonical form disagree on s^{e:?}"));
                }
            }
            let w = nf.separating_monomial(1).map(|(e, r)| witness(e, &r));
            let ok = nf.is_zero() && note.is_none();
            let status = if ok { Status::Pass } else { Status::Fail };
            (Method::CanonicalForm, status, w, samples, note)
        }
    };
    IdentityCheck {
        id: p.id.clone(),
        relation: p.family,
        method,
        status,
        witness: wit,
        sampled,
        note,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Decide a batch in parallel; output order follows input order.
pub fn run_checks(pending: &[PendingCheck], seed: u64, samples: usize) -> Vec<IdentityCheck> {
    pending.par_iter().map(|p| run_check(p, seed, samples)).collect()
}

/// The ten defining osp(1|2) relations for the `A`-realization.
pub fn verify_osp(a: Subset, gauge: Gauge) -> Vec<IdentityCheck> {
    let r = Realizations::new();
    run_checks(&catalog::osp(&r, a, gauge), 0, 0)
}

/// Anticommutator relation between `Q_A` and `Q_B`.
pub fn verify_structure(a: Subset, b: Subset) -> IdentityCheck {
    let r = Realizations::new();
    run_check(&catalog::structure(&r, a, b), 0, 0)
}

/// Rank-one Bannai-Ito relations and centrality of the `ω`'s.
pub fn verify_rank1_bi() -> Vec<IdentityCheck> {
    let r = Realizations::new();
    run_checks(&catalog::rank1(&r), 0, 0)
}

/// Commutation of the Casimirs, `L_jk`, `M_A` and reflections with the Hamiltonian.
pub fn verify_symmetries(degree_cap: u32) -> Vec<IdentityCheck> {
    let r = Realizations::new();
    run_checks(&catalog::symmetry(&r, degree_cap), 0, 0)
}

pub fn run_full_suite(config: &SuiteConfig) -> VerificationReport {
    let r = Realizations::with_mutation(config.mutation);
    let pending = catalog::full(&r, config);
    let checks = run_checks(&pending, config.seed, config.samples);
    VerificationReport::new(config, checks)
}
