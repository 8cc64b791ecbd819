//! JSON term-list encoding of polynomials.
//!
//! A polynomial is a list of terms sorted by `(s, mu)` exponents:
//! `{"s":[-1,0,0,0],"mu":[1,0,0,0],"c":"1/1"}`. Numeric polynomials omit
//! the `mu` field.

use serde::{Deserialize, Serialize};

use super::{format_rational, parse_rational, Coeff, LaurentPoly, MuExp, MuPoly, RatPoly, Rational, SExp, SymPoly};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    pub s: SExp,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<MuExp>,
    pub c: String,
}

/// Serde helper writing a rational as `"p/q"`.
pub fn rational_str<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

pub fn to_records<C: Coeff>(p: &LaurentPoly<C>) -> Vec<TermRecord> {
    let mut out = Vec::with_capacity(p.len());
    for (s, c) in p.terms() {
        for (mu, r) in c.records() {
            out.push(TermRecord { s: *s, mu, c: format_rational(&r) });
        }
    }
    out
}

pub fn sym_from_records(records: &[TermRecord]) -> Result<SymPoly> {
    let mut p = SymPoly::zero();
    for r in records {
        let c = parse_rational(&r.c)?;
        p.add_term(r.s, MuPoly::monomial(r.mu.unwrap_or([0; 4]), c));
    }
    Ok(p)
}

pub fn rat_from_records(records: &[TermRecord]) -> Result<RatPoly> {
    let mut p = RatPoly::zero();
    for r in records {
        if r.mu.is_some_and(|m| m != [0; 4]) {
            return Err(Error::Parse(format!(
                "parameter exponent {:?} in a numeric polynomial",
                r.mu
            )));
        }
        p.add_term(r.s, parse_rational(&r.c)?);
    }
    Ok(p)
}

pub fn to_json_string<C: Coeff>(p: &LaurentPoly<C>) -> String {
    serde_json::to_string(&to_records(p)).expect("term records always serialize")
}

pub fn sym_from_json_str(s: &str) -> Result<SymPoly> {
    let records: Vec<TermRecord> =
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    sym_from_records(&records)
}

pub fn rat_from_json_str(s: &str) -> Result<RatPoly> {
    let records: Vec<TermRecord> =
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    rat_from_records(&records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::{rat, rat_int};

    #[test]
    fn golden_term() {
        let p = SymPoly::monomial([-1, 0, 0, 0], MuPoly::var(0));
        assert_eq!(
            to_json_string(&p),
            r#"[{"s":[-1,0,0,0],"mu":[1,0,0,0],"c":"1/1"}]"#
        );
        let q = RatPoly::monomial([0, 2, 0, 0], rat(-3, 4));
        assert_eq!(to_json_string(&q), r#"[{"s":[0,2,0,0],"c":"-3/4"}]"#);
    }

    #[test]
    fn ordering_is_by_s_then_mu() {
        let p = SymPoly::from_terms([
            ([1, 0, 0, 0], &MuPoly::var(1) + &MuPoly::constant(rat_int(2))),
            ([0, 1, 0, 0], MuPoly::var(3)),
        ]);
        let recs = to_records(&p);
        assert_eq!(recs[0].s, [0, 1, 0, 0]);
        assert_eq!(recs[1].mu, Some([0, 0, 0, 0]));
        assert_eq!(recs[2].mu, Some([0, 1, 0, 0]));
    }

    #[test]
    fn numeric_rejects_symbolic_terms() {
        let recs = vec![TermRecord { s: [0; 4], mu: Some([1, 0, 0, 0]), c: "1/1".into() }];
        assert!(rat_from_records(&recs).is_err());
    }
}
