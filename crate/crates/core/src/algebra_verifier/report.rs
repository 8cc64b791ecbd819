use serde::{Deserialize, Serialize};

use super::{IdentityCheck, SuiteConfig};

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Caps {
    pub sphere: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: u32,
    pub mu_mode: String,
    pub caps: Caps,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mutation: Option<String>,
    pub checks: Vec<IdentityCheck>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(config: &SuiteConfig, checks: Vec<IdentityCheck>) -> Self {
        let pass = checks.iter().filter(|c| c.passed()).count();
        VerificationReport {
            version: REPORT_VERSION,
            mu_mode: "symbolic".into(),
            caps: Caps { sphere: config.sphere_cap },
            seed: config.seed,
            mutation: config.mutation.map(|m| m.name().to_string()),
            summary: Summary { pass, fail: checks.len() - pass },
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with timing fields zeroed, for reproducibility comparisons.
    pub fn to_json_untimed(&self) -> String {
        let mut copy = self.clone();
        for c in &mut copy.checks {
            c.elapsed_ms = 0.0;
        }
        copy.to_json()
    }

    /// One line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {} [{}]\n", c.id, c.relation));
            if let Some(w) = &c.witness {
                if !c.passed() {
                    out.push_str(&format!("     witness s^{:?}: {} residue terms\n", w.monomial, w.residue.len()));
                }
            }
        }
        out.push_str(&format!("summary: {} pass, {} fail\n", self.summary.pass, self.summary.fail));
        out
    }
}
