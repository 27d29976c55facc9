//! JSON payloads for polarized Hodge structures and limiting mixed Hodge
//! structures.
//!
//! ```json
//! {
//!   "weight": 1,
//!   "Q": [["0", "1"], ["-1", "0"]],
//!   "F": {"lo": 1, "steps": [[["1", "i"]]]},
//!   "N": [["0", "0"], ["0", "0"]],
//!   "W": {"center": 1}
//! }
//! ```
//!
//! Scalars are strings in the canonical `a/b+c/d*i` form (plain JSON
//! integers are accepted on input). `F.steps[j]` lists basis vectors of
//! `F^{lo+j}`; indices below `lo` are the whole space and indices past the
//! list are zero. A payload with `"N"` is a limiting mixed Hodge structure,
//! otherwise a pure one; `"W"` optionally overrides the weight-filtration
//! centre (default: the weight).

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, ParseError, Result};
use crate::hodge::{Filtration, HodgeDatum};
use crate::linalg::{GaussianRational, MatrixGQ, Subspace};
use crate::lmhs::LmhsDatum;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum ScalarJson {
    Str(String),
    Int(i64),
}

impl ScalarJson {
    fn parse(&self) -> std::result::Result<GaussianRational, ParseError> {
        match self {
            ScalarJson::Str(s) => s.parse(),
            ScalarJson::Int(n) => Ok(GaussianRational::from_int(*n)),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct FiltrationJson {
    lo: i64,
    steps: Vec<Vec<Vec<ScalarJson>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct CenterJson {
    center: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct DatumJson {
    weight: i64,
    #[serde(rename = "Q")]
    q: Vec<Vec<ScalarJson>>,
    #[serde(rename = "F")]
    f: FiltrationJson,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    n: Option<Vec<Vec<ScalarJson>>>,
    #[serde(rename = "W", default, skip_serializing_if = "Option::is_none")]
    w: Option<CenterJson>,
}

/// A parsed payload before any semantic checks.
#[derive(Clone, Debug)]
pub struct RawDatum {
    pub weight: i64,
    pub q: MatrixGQ,
    pub f: Filtration,
    pub n: Option<MatrixGQ>,
    pub center: Option<i64>,
}

impl RawDatum {
    pub fn hodge(&self) -> HodgeDatum {
        HodgeDatum::new(self.weight, self.q.clone(), self.f.clone())
    }

    pub fn is_lmhs(&self) -> bool {
        self.n.is_some()
    }

    /// The limiting mixed Hodge structure (`N = 0` for a pure payload);
    /// fails when `N` is not nilpotent.
    pub fn lmhs(&self) -> Result<LmhsDatum> {
        let dim = self.q.rows();
        let n = self.n.clone().unwrap_or_else(|| MatrixGQ::zeros(dim, dim));
        LmhsDatum::with_center(self.hodge(), n, self.center.unwrap_or(self.weight))
    }
}

fn shape(msg: String) -> Error {
    Error::Parse(ParseError::Shape(msg))
}

fn parse_matrix(label: &str, rows: &[Vec<ScalarJson>], dim: usize) -> Result<MatrixGQ> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(shape(format!("{label} must be {dim}x{dim}")));
    }
    let mut m = MatrixGQ::zeros(dim, dim);
    for (i, r) in rows.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            m[(i, j)] = x.parse()?;
        }
    }
    Ok(m)
}

/// Parses a payload; every failure is an input error.
pub fn parse_datum(text: &str) -> Result<RawDatum> {
    let raw: DatumJson = serde_json::from_str(text).map_err(|e| Error::Parse(ParseError::Json(e.to_string())))?;
    let dim = raw.q.len();
    let q = parse_matrix("Q", &raw.q, dim)?;
    let mut steps = Vec::with_capacity(raw.f.steps.len());
    for (j, step) in raw.f.steps.iter().enumerate() {
        let mut vectors = Vec::with_capacity(step.len());
        for v in step {
            if v.len() != dim {
                return Err(shape(format!("F^{} has a vector of length {} (expected {dim})", raw.f.lo + j as i64, v.len())));
            }
            vectors.push(v.iter().map(ScalarJson::parse).collect::<std::result::Result<Vec<_>, _>>()?);
        }
        steps.push(Subspace::from_vectors(dim, vectors));
    }
    let f = Filtration::new(dim, raw.f.lo, steps);
    let n = raw.n.as_deref().map(|rows| parse_matrix("N", rows, dim)).transpose()?;
    Ok(RawDatum { weight: raw.weight, q, f, n, center: raw.w.map(|w| w.center) })
}

fn matrix_json(m: &MatrixGQ) -> Value {
    Value::Array(
        (0..m.rows()).map(|i| Value::Array((0..m.cols()).map(|j| json!(m[(i, j)].to_string())).collect())).collect(),
    )
}

fn filtration_json(f: &Filtration) -> Value {
    let steps: Vec<Value> = f
        .steps()
        .map(|(_, s)| Value::Array(s.basis_vectors().iter().map(|v| json!(v.iter().map(|x| x.to_string()).collect::<Vec<_>>())).collect()))
        .collect();
    json!({ "lo": f.lo(), "steps": steps })
}

pub fn phs_to_json(h: &HodgeDatum) -> Value {
    json!({ "weight": h.weight(), "Q": matrix_json(h.q()), "F": filtration_json(&h.filtration) })
}

pub fn lmhs_to_json(l: &LmhsDatum) -> Value {
    let mut v = phs_to_json(&l.hodge);
    v["N"] = matrix_json(&l.n);
    if l.center() != l.weight() {
        v["W"] = json!({ "center": l.center() });
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degen::ht_construct;
    use crate::hodge::HodgeNumbers;

    #[test]
    fn round_trip_preserves_the_datum() {
        let l = ht_construct(&HodgeNumbers::new(vec![1, 2, 1]).unwrap()).unwrap();
        let text = serde_json::to_string(&lmhs_to_json(&l)).unwrap();
        let back = parse_datum(&text).unwrap().lmhs().unwrap();
        assert_eq!(back.q(), l.q());
        assert_eq!(back.n, l.n);
        assert_eq!(back.f(), l.f());
    }

    #[test]
    fn malformed_scalars_and_shapes_are_parse_errors() {
        let bad = r#"{"weight": 0, "Q": [["1/0"]], "F": {"lo": 0, "steps": []}}"#;
        assert!(matches!(parse_datum(bad), Err(Error::Parse(_))));
        let bad = r#"{"weight": 0, "Q": [["1", "0"]], "F": {"lo": 0, "steps": []}}"#;
        assert!(matches!(parse_datum(bad), Err(Error::Parse(ParseError::Shape(_)))));
        let ok = r#"{"weight": 0, "Q": [[1]], "F": {"lo": 0, "steps": [[["1"]]]}}"#;
        let raw = parse_datum(ok).unwrap();
        assert!(!raw.is_lmhs());
        assert!(raw.hodge().validate().passed());
    }
}
