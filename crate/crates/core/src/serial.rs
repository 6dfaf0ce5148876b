//! JSON interchange for polynomials and graded matrix factorizations.
//!
//! A polynomial is a list of terms `{"c": "n/d", "e": [..]}` in descending
//! lexicographic order of exponents. An object is
//! `{"weights": {"a": [..], "h": H}, "f", "even", "odd", "q_pm", "q_mp"}`.

use serde::{Deserialize, Serialize};

use crate::algebra::{format_rational, parse_rational, Poly, PolyMatrix, WeightSystem};
use crate::error::{Error, Result};
use crate::mfcore::{GradedMF, GradedObject};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u32>,
}

pub type PolyJson = Vec<TermJson>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightsJson {
    pub a: Vec<u32>,
    pub h: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MfJson {
    pub weights: WeightsJson,
    pub f: PolyJson,
    pub even: Vec<i64>,
    pub odd: Vec<i64>,
    pub q_pm: Vec<Vec<PolyJson>>,
    pub q_mp: Vec<Vec<PolyJson>>,
}

pub fn poly_to_json(p: &Poly) -> PolyJson {
    p.terms()
        .map(|(e, c)| TermJson {
            c: format_rational(c),
            e: e.clone(),
        })
        .collect()
}

/// `at` names the location for error messages.
pub fn poly_from_json(terms: &[TermJson], nvars: usize, at: &str) -> Result<Poly> {
    let parsed = terms
        .iter()
        .enumerate()
        .map(|(t, term)| {
            let c = parse_rational(&term.c)
                .map_err(|e| Error::Parse(format!("{at}[{t}].c: {e}")))?;
            if term.e.len() != nvars {
                return Err(Error::Parse(format!(
                    "{at}[{t}].e: expected {nvars} exponents, found {}",
                    term.e.len()
                )));
            }
            Ok((c, term.e.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    Poly::from_terms(nvars, parsed)
}

pub fn matrix_to_json(m: &PolyMatrix) -> Vec<Vec<PolyJson>> {
    m.to_rows()
        .iter()
        .map(|row| row.iter().map(poly_to_json).collect())
        .collect()
}

fn matrix_from_json(
    rows: &[Vec<PolyJson>],
    shape: (usize, usize),
    nvars: usize,
    at: &str,
) -> Result<PolyMatrix> {
    let bad_shape = || {
        Error::Parse(format!(
            "{at}: expected a {}x{} matrix",
            shape.0, shape.1
        ))
    };
    if shape.1 == 0 {
        if rows.len() != shape.0 || rows.iter().any(|r| !r.is_empty()) {
            return Err(bad_shape());
        }
        return Ok(PolyMatrix::zeros(shape.0, 0, nvars));
    }
    if rows.len() != shape.0 || rows.iter().any(|r| r.len() != shape.1) {
        return Err(bad_shape());
    }
    let entries = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, p)| poly_from_json(p, nvars, &format!("{at}[{i}][{j}]")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    PolyMatrix::with_shape(shape.0, shape.1, nvars, entries)
}

pub fn mf_to_json(m: &GradedMF) -> MfJson {
    MfJson {
        weights: WeightsJson {
            a: m.weights().weights().to_vec(),
            h: m.h(),
        },
        f: poly_to_json(m.f()),
        even: m.even().to_vec(),
        odd: m.odd().to_vec(),
        q_pm: matrix_to_json(m.q_pm()),
        q_mp: matrix_to_json(m.q_mp()),
    }
}

pub fn mf_from_json(j: &MfJson) -> Result<GradedMF> {
    let weights = WeightSystem::new(j.weights.a.clone(), j.weights.h)
        .map_err(|e| Error::Parse(format!("weights: {e}")))?;
    let n = weights.nvars();
    let f = poly_from_json(&j.f, n, "f")?;
    let (p, r) = (j.even.len(), j.odd.len());
    let q_pm = matrix_from_json(&j.q_pm, (r, p), n, "q_pm")?;
    let q_mp = matrix_from_json(&j.q_mp, (p, r), n, "q_mp")?;
    let obj = GradedObject {
        even: j.even.clone(),
        odd: j.odd.clone(),
        weights,
    };
    GradedMF::new(obj, f, q_pm, q_mp)
}

/// Parses an object; syntax errors report line and column, semantic ones
/// the offending field path.
pub fn parse_mf(text: &str) -> Result<GradedMF> {
    let j: MfJson = serde_json::from_str(text)
        .map_err(|e| Error::Parse(e.to_string()))?;
    mf_from_json(&j)
}

/// Pretty JSON with a trailing newline.
pub fn write_mf(m: &GradedMF) -> String {
    let mut s = serde_json::to_string_pretty(&mf_to_json(m)).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::mfcore::{direct_sum2, indecomposable, knorrer_double};

    #[test]
    fn poly_order_is_descending() {
        let p = Poly::from_terms(2, [(rat(1, 2), vec![0, 1]), (rat(-3, 1), vec![2, 0])]).unwrap();
        let j = poly_to_json(&p);
        assert_eq!(j[0].e, vec![2, 0]);
        assert_eq!(j[0].c, "-3/1");
        assert_eq!(j[1].c, "1/2");
        assert_eq!(poly_from_json(&j, 2, "p").unwrap(), p);
    }

    #[test]
    fn round_trip() {
        let a = indecomposable(2, 0, 4).unwrap();
        let b = indecomposable(3, -1, 4).unwrap();
        let s = direct_sum2(&a, &b).unwrap();
        for m in [a.clone(), s, knorrer_double(&a, 2, 2).unwrap()] {
            assert_eq!(parse_mf(&write_mf(&m)).unwrap(), m);
        }
    }

    #[test]
    fn errors_carry_location() {
        let e = parse_mf("{\"weights\": ").unwrap_err().to_string();
        assert!(e.contains("line 1 column"), "{e}");
        let mut j = mf_to_json(&indecomposable(1, 0, 4).unwrap());
        j.q_pm[0][0][0].c = "x".into();
        let e = mf_from_json(&j).unwrap_err().to_string();
        assert!(e.contains("q_pm[0][0][0].c"), "{e}");
        j.q_pm[0][0][0].c = "1/1".into();
        j.q_pm[0][0][0].e = vec![1, 1];
        assert!(mf_from_json(&j).is_err());
    }
}
