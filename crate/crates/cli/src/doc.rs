//! JSON documents exchanged by the command-line tool.
//!
//! Indices are 1-based in documents and 0-based in the engine; the
//! conversion happens here and nowhere else. Rationals are strings `"p/q"`
//! so no JSON parser ever sees them as floats.

use std::collections::BTreeSet;

use hermck::algebra::{format_rational, parse_rational, MAX_DIM};
use hermck::{Blade, CkData, GaussianRational, Monomial, SpinorPoly};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub blade: Vec<usize>,
    pub re: String,
    pub im: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyDocument {
    pub schema_version: u32,
    pub n: usize,
    pub terms: Vec<TermDoc>,
}

/// Initial data for `extend`: `top_row_0[j]` has bidegree `(a, b-j)` and
/// value degree `r`, `right_col_1[i]` has bidegree `(a-i, b)` and value
/// degree `r-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CkDocument {
    pub schema_version: u32,
    pub n: usize,
    pub r: usize,
    pub a: usize,
    pub b: usize,
    pub top_row_0: Vec<Vec<TermDoc>>,
    pub right_col_1: Vec<Vec<TermDoc>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FischerDocument {
    pub schema_version: u32,
    pub n: usize,
    pub side: String,
    pub a: usize,
    pub b: usize,
    pub r: usize,
    pub kernel: Vec<TermDoc>,
    pub image: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisDocument {
    pub schema_version: u32,
    pub n: usize,
    pub r: usize,
    pub a: usize,
    pub b: usize,
    pub dimension: usize,
    pub elements: Vec<Vec<TermDoc>>,
}

/// Terms in canonical order: the engine's monomial order, then blade order.
pub fn terms_of(p: &SpinorPoly) -> Vec<TermDoc> {
    p.flat_terms()
        .map(|(m, blade, c)| TermDoc {
            alpha: m.alpha().to_vec(),
            beta: m.beta().to_vec(),
            blade: blade.indices().map(|j| j + 1).collect(),
            re: format_rational(c.re()),
            im: format_rational(c.im()),
        })
        .collect()
}

pub fn poly_from_terms(n: usize, terms: &[TermDoc]) -> Result<SpinorPoly, String> {
    check_dim(n)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(terms.len());
    for (k, t) in terms.iter().enumerate() {
        let at = |msg: String| format!("term {k}: {msg}");
        if t.alpha.len() != n || t.beta.len() != n {
            return Err(at(format!("alpha and beta must have length {n}")));
        }
        if t.blade.iter().any(|&j| j == 0 || j > n) {
            return Err(at(format!("blade indices must lie in 1..={n}")));
        }
        let zero_based: Vec<usize> = t.blade.iter().map(|j| j - 1).collect();
        let blade =
            Blade::from_indices(&zero_based).ok_or_else(|| at("blade indices must be strictly increasing".into()))?;
        let mono = Monomial::new(&t.alpha, &t.beta).map_err(|e| at(e.to_string()))?;
        let re = parse_rational(&t.re).map_err(|e| at(format!("re: {e}")))?;
        let im = parse_rational(&t.im).map_err(|e| at(format!("im: {e}")))?;
        if !seen.insert((mono.clone(), blade)) {
            return Err(at("duplicate monomial and blade".into()));
        }
        out.push((mono, blade, GaussianRational::new(re, im)));
    }
    SpinorPoly::from_terms(n, out).map_err(|e| e.to_string())
}

fn check_dim(n: usize) -> Result<(), String> {
    if n == 0 || n > MAX_DIM {
        return Err(format!("n must lie in 1..={MAX_DIM}, got {n}"));
    }
    Ok(())
}

fn check_version(v: u32) -> Result<(), String> {
    if v != SCHEMA_VERSION {
        return Err(format!("unsupported schema_version {v}, expected {SCHEMA_VERSION}"));
    }
    Ok(())
}

impl PolyDocument {
    pub fn from_poly(p: &SpinorPoly) -> Self {
        PolyDocument { schema_version: SCHEMA_VERSION, n: p.dim(), terms: terms_of(p) }
    }

    pub fn to_poly(&self) -> Result<SpinorPoly, String> {
        check_version(self.schema_version)?;
        poly_from_terms(self.n, &self.terms)
    }
}

impl CkDocument {
    pub fn from_data(d: &CkData) -> Self {
        CkDocument {
            schema_version: SCHEMA_VERSION,
            n: d.n(),
            r: d.r(),
            a: d.a(),
            b: d.b(),
            top_row_0: d.top_row_0().iter().map(terms_of).collect(),
            right_col_1: d.right_col_1().iter().map(terms_of).collect(),
        }
    }

    /// Parses the entries and validates shapes; compatibility is not checked.
    pub fn to_data(&self) -> Result<CkData, String> {
        check_version(self.schema_version)?;
        let parse = |name: &str, list: &[Vec<TermDoc>]| -> Result<Vec<SpinorPoly>, String> {
            list.iter()
                .enumerate()
                .map(|(k, t)| poly_from_terms(self.n, t).map_err(|e| format!("{name}[{k}]: {e}")))
                .collect()
        };
        let top = parse("top_row_0", &self.top_row_0)?;
        let right = parse("right_col_1", &self.right_col_1)?;
        CkData::new(self.n, self.r, self.a, self.b, top, right).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn term(alpha: &[u32], beta: &[u32], blade: &[usize], re: &str, im: &str) -> TermDoc {
        TermDoc { alpha: alpha.into(), beta: beta.into(), blade: blade.into(), re: re.into(), im: im.into() }
    }

    #[test]
    fn one_based_blades_at_the_boundary() {
        let doc = PolyDocument { schema_version: 1, n: 3, terms: vec![term(&[1, 0, 0], &[0, 0, 0], &[2], "1", "0")] };
        let p = doc.to_poly().unwrap();
        let (_, blade, _) = p.flat_terms().next().unwrap();
        assert_eq!(blade.indices().collect::<Vec<_>>(), vec![1]);
        let back = PolyDocument::from_poly(&p);
        assert_eq!(back.terms, vec![term(&[1, 0, 0], &[0, 0, 0], &[2], "1/1", "0/1")]);
    }

    #[test]
    fn rejects_malformed_terms() {
        let bad = [
            term(&[1, 0], &[0, 0, 0], &[], "1", "0"),
            term(&[0, 0, 0], &[0, 0, 0], &[0], "1", "0"),
            term(&[0, 0, 0], &[0, 0, 0], &[4], "1", "0"),
            term(&[0, 0, 0], &[0, 0, 0], &[2, 1], "1", "0"),
            term(&[0, 0, 0], &[0, 0, 0], &[], "1/0", "0"),
            term(&[0, 0, 0], &[0, 0, 0], &[], "0.5", "0"),
        ];
        for t in bad {
            let doc = PolyDocument { schema_version: 1, n: 3, terms: vec![t.clone()] };
            assert!(doc.to_poly().is_err(), "{t:?}");
        }
        let dup = term(&[0, 0, 0], &[0, 0, 0], &[1], "1", "0");
        let doc = PolyDocument { schema_version: 1, n: 3, terms: vec![dup.clone(), dup] };
        assert!(doc.to_poly().is_err());
        let doc = PolyDocument { schema_version: 2, n: 3, terms: vec![] };
        assert!(doc.to_poly().is_err());
    }

    #[test]
    fn non_canonical_rationals_are_normalized() {
        let doc = PolyDocument { schema_version: 1, n: 2, terms: vec![term(&[0, 0], &[0, 0], &[], "2/-4", "3")] };
        let back = PolyDocument::from_poly(&doc.to_poly().unwrap());
        assert_eq!(back.terms[0].re, "-1/2");
        assert_eq!(back.terms[0].im, "3/1");
    }
}
