use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra_verifier::{run_full_suite, Family, SuiteConfig};
use crate::error::Error;
use crate::exact_core::serial::to_records;
use crate::exact_core::{format_rational, MuVector, Rational};
use crate::operator_engine::normal_form;
use crate::operator_engine::parse::parse_operator;
use crate::realizations::{Mutation, Realizations, Subset};
use crate::spectral::{
    build_basis, check_eigen, check_hamiltonian_on_sphere, fischer_dims, fischer_reassembly_rank,
    gram_matrix, kernel_dim_by_rank, normalization_check, KernelBasisElement, NormalizationResult,
    SpectralContext,
};
use crate::Result;

use super::{Format, MuSpec, Outcome, RunConfig, EXIT_FAIL, EXIT_PASS};

const VERSION: u32 = 1;

fn mu_strings(mu: &MuVector) -> Vec<String> {
    mu.iter().map(format_rational).collect()
}

fn code(ok: bool) -> i32 {
    if ok {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn render(cfg: &RunConfig, json: &Value, text: impl FnOnce() -> String) -> String {
    match cfg.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(json).expect("json values serialize")),
        Format::Text => text(),
    }
}

pub(super) fn verify(
    cfg: &RunConfig,
    only: Option<&str>,
    subset: Option<&str>,
    within: Option<&str>,
    mutate: Option<&str>,
    samples: usize,
) -> Result<Outcome> {
    let families = only
        .map(|s| s.split(',').map(|f| f.trim().parse::<Family>()).collect::<Result<Vec<_>>>())
        .transpose()?;
    let config = SuiteConfig {
        sphere_cap: cfg.sphere_cap,
        seed: cfg.seed,
        samples,
        families,
        subset: subset.map(Subset::parse).transpose()?,
        within: within.map(Subset::parse).transpose()?,
        mutation: mutate.map(|m| m.parse::<Mutation>()).transpose()?,
    };
    let report = run_full_suite(&config);
    let body = match cfg.format {
        Format::Json => format!("{}\n", report.to_json_untimed()),
        Format::Text => report.to_text(),
    };
    Ok(Outcome { code: code(report.all_passed()), body })
}

#[derive(Serialize)]
struct BasisEntry {
    j: [u32; 3],
    poly: Vec<crate::exact_core::serial::TermRecord>,
    s_eig: String,
    h_eig: String,
}

/// Basis export: `{version, m, mu, elements: [{j, poly, s_eig, h_eig}]}`.
///
/// Every element is checked for kernel membership, the sCasimir eigenvalue
/// and the Hamiltonian eigenvalue on the sphere before it is written.
pub fn basis_json(mu: &MuVector, m: u32) -> Result<Value> {
    let ctx = SpectralContext::new(mu)?;
    let elems = build_basis(m, &ctx)?;
    let entries = elems
        .par_iter()
        .map(|e| {
            if !ctx.dirac(4).apply(&e.poly).is_zero() {
                return Err(Error::ContractViolation(format!("{:?} not in the kernel", e.labels)));
            }
            let ev = check_eigen(e, &ctx)?;
            check_hamiltonian_on_sphere(e, &ctx)?;
            Ok(BasisEntry {
                j: e.labels,
                poly: to_records(&e.poly),
                s_eig: format_rational(&ev.scasimir),
                h_eig: format_rational(&ev.hamiltonian),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({ "version": VERSION, "m": m, "mu": mu_strings(mu), "elements": entries }))
}

pub(super) fn basis(cfg: &RunConfig, mu: &MuVector, m: u32) -> Result<Outcome> {
    let value = basis_json(mu, m)?;
    let body = render(cfg, &value, || {
        let mut out = String::new();
        for e in value["elements"].as_array().into_iter().flatten() {
            out.push_str(&format!(
                "j={} s_eig={} h_eig={} terms={}\n",
                e["j"],
                e["s_eig"].as_str().unwrap_or_default(),
                e["h_eig"].as_str().unwrap_or_default(),
                e["poly"].as_array().map_or(0, Vec::len)
            ));
        }
        out.push_str(&format!("{} elements in degree {m}\n", value["elements"].as_array().map_or(0, Vec::len)));
        out
    });
    Ok(Outcome { code: EXIT_PASS, body })
}

/// Gram export over all labels of degree at most `m_max`.
///
/// Returns the JSON value and whether all checks passed.
pub fn gram_json(mu: &MuVector, m_max: u32, normcheck: Option<f64>) -> Result<(Value, bool)> {
    let ctx = SpectralContext::new(mu)?;
    let elems: Vec<KernelBasisElement> = (0..=m_max)
        .into_par_iter()
        .map(|m| build_basis(m, &ctx))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let g = gram_matrix(&elems, &elems, &ctx.gamma)?;
    let mut offdiag_zero = true;
    let mut diag_positive = true;
    for (i, row) in g.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if i == j {
                diag_positive &= *v > Rational::zero();
            } else {
                offdiag_zero &= v.is_zero();
            }
        }
    }
    let norms: Option<Vec<NormalizationResult>> = normcheck
        .map(|tol| elems.par_iter().map(|e| normalization_check(e.labels, &ctx, tol)).collect::<Result<_>>())
        .transpose()?;
    let norms_ok = norms.as_ref().is_none_or(|n| n.iter().all(|r| r.pass));
    let value = json!({
        "version": VERSION,
        "mu": mu_strings(mu),
        "m_max": m_max,
        "labels": elems.iter().map(|e| json!({"m": e.m, "j": e.labels})).collect::<Vec<_>>(),
        "matrix": g.iter().map(|r| r.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "offdiag_zero": offdiag_zero,
        "diag_positive": diag_positive,
        "normcheck": norms,
    });
    Ok((value, offdiag_zero && diag_positive && norms_ok))
}

pub(super) fn gram(cfg: &RunConfig, mu: &MuVector, m_max: u32, normcheck: bool, tol: f64) -> Result<Outcome> {
    let (value, ok) = gram_json(mu, m_max, normcheck.then_some(tol))?;
    let body = render(cfg, &value, || {
        let mut out = String::new();
        let labels = value["labels"].as_array().cloned().unwrap_or_default();
        let matrix = value["matrix"].as_array().cloned().unwrap_or_default();
        for (i, l) in labels.iter().enumerate() {
            out.push_str(&format!("m={} j={} norm={}\n", l["m"], l["j"], matrix[i][i].as_str().unwrap_or_default()));
        }
        out.push_str(&format!(
            "off-diagonal zero: {}, diagonal positive: {}\n",
            value["offdiag_zero"], value["diag_positive"]
        ));
        if let Some(n) = value["normcheck"].as_array() {
            let worst = n.iter().filter_map(|r| r["rel_err"].as_f64()).fold(0.0, f64::max);
            let failed = n.iter().filter(|r| r["pass"] == json!(false)).count();
            out.push_str(&format!("normalization: {failed} failures, worst relative error {worst:e}\n"));
        }
        out
    });
    Ok(Outcome { code: code(ok), body })
}

/// One row of the Fischer table.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct DimsRow {
    pub m: u32,
    pub dim_p: u64,
    pub dim_k: u64,
    /// `Σ_{j≤m} dim K_j == dim P_m`.
    pub cumulative_ok: bool,
    /// `dim ker D̃_[n]` on `P_m`, by exact rank (fixed parameters only).
    pub kernel_by_rank: Option<u64>,
    /// Rank of `{ x̃^j K_{m-j} }` (fixed parameters and `n = 4` only).
    pub reassembly_rank: Option<u64>,
}

impl DimsRow {
    pub fn ok(&self) -> bool {
        self.cumulative_ok
            && self.kernel_by_rank.is_none_or(|k| k == self.dim_k)
            && self.reassembly_rank.is_none_or(|r| r == self.dim_p)
    }
}

pub fn dims_rows(n: u32, m_max: u32, mu: Option<&MuVector>) -> Result<Vec<DimsRow>> {
    let ctx = mu.map(SpectralContext::new).transpose()?;
    (0..=m_max)
        .map(|m| {
            let (dim_p, dim_k) = fischer_dims(n, m);
            let cumulative: u64 = (0..=m).map(|j| fischer_dims(n, j).1).sum();
            let kernel_by_rank = ctx.as_ref().map(|c| kernel_dim_by_rank(n as usize, m, c));
            let reassembly_rank = match (&ctx, n) {
                (Some(c), 4) => Some(fischer_reassembly_rank(m, c)?.0 as u64),
                _ => None,
            };
            Ok(DimsRow { m, dim_p, dim_k, cumulative_ok: cumulative == dim_p, kernel_by_rank, reassembly_rank })
        })
        .collect()
}

pub(super) fn dims(cfg: &RunConfig, n: u32, m_max: u32) -> Result<Outcome> {
    let mu = match &cfg.mu {
        MuSpec::Fixed(mu) => Some(&**mu),
        MuSpec::Symbolic => None,
    };
    let rows = dims_rows(n, m_max, mu)?;
    let ok = rows.iter().all(DimsRow::ok);
    let value = json!({ "version": VERSION, "n": n, "rows": rows });
    let body = render(cfg, &value, || {
        let mut out = format!("n={n}\n{:>3} {:>8} {:>8} {:>10}\n", "m", "dim P", "dim K", "reassembly");
        for r in &rows {
            out.push_str(&format!(
                "{:>3} {:>8} {:>8} {:>10}\n",
                r.m,
                r.dim_p,
                r.dim_k,
                if r.ok() { "ok" } else { "MISMATCH" }
            ));
        }
        out
    });
    Ok(Outcome { code: code(ok), body })
}

pub(super) fn nf(cfg: &RunConfig, expr: &str) -> Result<Outcome> {
    let r = Realizations::new();
    let op = parse_operator(expr, &r)?;
    let nf = normal_form(&op);
    let (text, terms) = match &cfg.mu {
        MuSpec::Symbolic => (nf.to_string(), nf.len()),
        MuSpec::Fixed(mu) => {
            let e = nf.evaluate_mu(mu);
            (e.to_string(), e.len())
        }
    };
    let value = json!({ "version": VERSION, "expr": expr, "normal_form": text, "terms": terms });
    let body = render(cfg, &value, || format!("{text}\n"));
    Ok(Outcome { code: EXIT_PASS, body })
}
