//! Exact rank of polynomial families over the rationals.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exact_core::{RatPoly, Rational, SExp};

/// Rank of the span of `polys`, by Gaussian elimination on coefficient vectors.
pub fn rank(polys: &[RatPoly]) -> usize {
    let mut columns: BTreeMap<SExp, usize> = BTreeMap::new();
    for p in polys {
        for (e, _) in p.terms() {
            let next = columns.len();
            columns.entry(*e).or_insert(next);
        }
    }
    let width = columns.len();
    let mut rows: Vec<Vec<Rational>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![Rational::zero(); width];
            for (e, c) in p.terms() {
                row[columns[e]] = c.clone();
            }
            row
        })
        .collect();
    let mut r = 0;
    for col in 0..width {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = Rational::from_integer(1.into()) / &rows[r][col];
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}
