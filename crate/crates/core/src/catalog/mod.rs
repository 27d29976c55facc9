//! Worked root-theoretic examples with golden (p,q)-diagrams.
//!
//! Each group file lists rows `(L, Y)`: the grading element `L` of the
//! Hodge structure and the neutral element `Y` of the degeneration. The
//! Deligne splittings are recomputed from root data — a weight `λ` of `V`
//! sits at `(λ(Y) − λ(L) + n/2, λ(L) + n/2)` and a root `α` of `g` at
//! `(α(Y) − α(L), α(L))` — and compared node by node with the stored
//! diagrams.

mod g2_model;

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bigrading::BigradingDims;
use crate::error::{Error, ParseError, Result};
use crate::roots::{
    adjoint_bigrading, build_root_system, closed_orbit_criterion, orbit_dims, rep_bigrading, GradingElement,
    InvolutionDatum, RootSystem, TypeLetter, WeightMultiset,
};

pub use g2_model::{g2_closed_model, g2_in_so7, G2ClosedModel};

const BUILTIN: [(&str, &str); 2] =
    [("g2.json", include_str!("../../catalog/g2.json")), ("f4.json", include_str!("../../catalog/f4.json"))];

/// How the neutral element `Y` of a row is specified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum YSpec {
    /// `Y = 0` (the open orbit, `N = 0`).
    Zero,
    /// `Y = γ^∨` for a root `γ` in simple-root coordinates.
    Coroot(Vec<i64>),
    /// `Y = k·L`.
    GradingMultiple(i64),
}

/// Conjugation data used for the orbit root counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvolutionSpec {
    Compact,
    Split,
    Cayley(Vec<i64>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitExpectation {
    pub dim_r_orbit: usize,
    pub dim_kr_orbit: usize,
    pub closed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    #[serde(rename = "V")]
    pub v: BigradingDims,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub adjoint: Option<BigradingDims>,
    /// Smallest `k` with `N^k = 0` on `V`.
    pub v_nilpotency: usize,
    /// Smallest `k` with `(ad N)^k = 0` on `g`.
    pub adjoint_nilpotency: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit: Option<OrbitExpectation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub name: String,
    #[serde(default)]
    pub aliases: Vec<String>,
    #[serde(default)]
    pub description: String,
    pub y: YSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<InvolutionSpec>,
    /// Optional explicit nilpotent-orbit model re-deriving the diagrams.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<String>,
    pub expected: Expected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FigureShift {
    #[serde(rename = "V")]
    pub v: [i64; 2],
    pub adjoint: [i64; 2],
}

/// A catalog file: one group, one Hodge representation, several rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogGroup {
    pub group: String,
    pub letter: String,
    pub rank: usize,
    #[serde(default)]
    pub real_form: String,
    pub weight: i64,
    pub zero_weight_multiplicity: usize,
    pub grading: Vec<i64>,
    /// Offset from true `(p, q)` to the printed figure coordinates.
    pub figure_shift: FigureShift,
    #[serde(default)]
    pub notes: String,
    pub rows: Vec<CatalogRow>,
}

impl CatalogGroup {
    pub fn root_system(&self) -> Result<RootSystem> {
        build_root_system(TypeLetter::parse(&self.letter)?, self.rank)
    }

    pub fn grading_element(&self) -> GradingElement {
        GradingElement::from_ints(&self.grading)
    }

    pub fn representation(&self, rs: &RootSystem) -> WeightMultiset {
        WeightMultiset::short_roots_plus_zero(rs, self.zero_weight_multiplicity)
    }
}

/// The full catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub groups: Vec<CatalogGroup>,
}

fn parse_group(name: &str, text: &str) -> Result<CatalogGroup> {
    serde_json::from_str(text).map_err(|e| Error::Parse(ParseError::Json(format!("{name}: {e}"))))
}

impl Catalog {
    /// The catalog compiled into the library.
    pub fn builtin() -> Catalog {
        let groups = BUILTIN.iter().map(|(n, t)| parse_group(n, t).expect("built-in catalog parses")).collect();
        Catalog { groups }
    }

    /// Every `*.json` file of `dir`, sorted by file name.
    pub fn load_dir(dir: &Path) -> Result<Catalog> {
        let read_err = |e: std::io::Error| Error::Parse(ParseError::Json(format!("{}: {e}", dir.display())));
        let mut paths: Vec<_> = std::fs::read_dir(dir)
            .map_err(read_err)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        let mut groups = Vec::new();
        for p in paths {
            let text = std::fs::read_to_string(&p).map_err(read_err)?;
            groups.push(parse_group(&p.display().to_string(), &text)?);
        }
        Ok(Catalog { groups })
    }

    /// Group names, then row names with their aliases.
    pub fn names(&self) -> Vec<String> {
        let mut out: Vec<String> = self.groups.iter().map(|g| g.group.clone()).collect();
        for g in &self.groups {
            for r in &g.rows {
                out.push(r.name.clone());
                out.extend(r.aliases.iter().cloned());
            }
        }
        out
    }

    /// A group name selects all its rows; a row name or alias selects one.
    pub fn select(&self, name: &str) -> Result<Vec<(&CatalogGroup, &CatalogRow)>> {
        for g in &self.groups {
            if g.group == name {
                return Ok(g.rows.iter().map(|r| (g, r)).collect());
            }
            if let Some(r) = g.rows.iter().find(|r| r.name == name || r.aliases.iter().any(|a| a == name)) {
                return Ok(vec![(g, r)]);
            }
        }
        Err(Error::UnknownCatalogEntry { name: name.to_string(), available: self.names().join(", ") })
    }
}

/// Everything recomputed for one row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowComputation {
    pub name: String,
    /// `α_i(Y)`.
    pub y_values: Vec<i64>,
    #[serde(rename = "V")]
    pub v: BigradingDims,
    pub adjoint: BigradingDims,
    pub v_nilpotency: usize,
    pub adjoint_nilpotency: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit: Option<OrbitExpectation>,
    /// Diagrams re-derived from an explicit nilpotent orbit, when the row
    /// names a model: `(V, adjoint)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub model: Option<(BigradingDims, BigradingDims)>,
}

fn y_element(rs: &RootSystem, l: &GradingElement, spec: &YSpec) -> Result<GradingElement> {
    Ok(match spec {
        YSpec::Zero => GradingElement::zero(rs.rank),
        YSpec::Coroot(g) => {
            if !rs.is_root(g) {
                return Err(Error::UnsupportedType(format!("{g:?} is not a root of {}", rs.name())));
            }
            GradingElement::new(rs.coroot_grading(g))
        }
        YSpec::GradingMultiple(k) => l.scaled(*k),
    })
}

fn involution(rs: &RootSystem, spec: &InvolutionSpec) -> InvolutionDatum {
    match spec {
        InvolutionSpec::Compact => InvolutionDatum::compact(rs.rank),
        InvolutionSpec::Split => InvolutionDatum::split(rs.rank),
        InvolutionSpec::Cayley(g) => InvolutionDatum::cayley(rs, g),
    }
}

/// For a neutral element `Y` of an `sl2`, the longest `N`-string in a
/// representation has `max λ(Y) + 1` vectors.
fn string_bound<'a>(values: impl Iterator<Item = num_rational::Rational64> + 'a) -> usize {
    let top = values.max().unwrap_or_default();
    top.to_integer().max(0) as usize + 1
}

pub fn compute_row(group: &CatalogGroup, row: &CatalogRow) -> Result<RowComputation> {
    let rs = group.root_system()?;
    let l = group.grading_element();
    let y = y_element(&rs, &l, &row.y)?;
    let weights = group.representation(&rs);
    let v = rep_bigrading(&weights, &l, &y, group.weight)?;
    let adjoint = adjoint_bigrading(&rs, &l, &y)?;
    let v_nilpotency = string_bound(weights.weights.iter().map(|(w, _)| y.eval(w)));
    let adjoint_nilpotency = string_bound(rs.roots.iter().map(|r| y.eval_root(r)));
    let orbit = match &row.involution {
        Some(spec) => {
            let inv = involution(&rs, spec);
            let d = orbit_dims(&rs, &l, &inv)?;
            Some(OrbitExpectation {
                dim_r_orbit: d.dim_r_orbit,
                dim_kr_orbit: d.dim_kr_orbit,
                closed: closed_orbit_criterion(&rs, &l, &inv)?,
            })
        }
        None => None,
    };
    let model = match row.model.as_deref() {
        None => None,
        Some("so7_principal") => {
            let m = g2_closed_model()?;
            Some((m.v, m.adjoint))
        }
        Some(other) => return Err(Error::UnsupportedType(format!("unknown catalog model '{other}'"))),
    };
    Ok(RowComputation {
        name: row.name.clone(),
        y_values: y.int_coords().ok_or(Error::NonIntegralGrading)?,
        v,
        adjoint,
        v_nilpotency,
        adjoint_nilpotency,
        orbit,
        model,
    })
}

/// Outcome of comparing a row with its golden data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowCheck {
    pub group: String,
    pub name: String,
    pub computed: RowComputation,
    /// Unified-style difference lines; empty when everything matches.
    pub diff: Vec<String>,
}

impl RowCheck {
    pub fn matches(&self) -> bool {
        self.diff.is_empty()
    }
}

impl fmt::Display for RowCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", if self.matches() { "MATCH" } else { "DIFF " }, self.name)?;
        for line in &self.diff {
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

fn diagram_diff(label: &str, expected: &BigradingDims, computed: &BigradingDims, out: &mut Vec<String>) {
    let diff = expected.diff(computed);
    if diff.is_empty() {
        return;
    }
    out.push(format!("--- expected {label}"));
    out.push(format!("+++ computed {label}"));
    for (p, q, e, c) in diff {
        if e > 0 {
            out.push(format!("-({p},{q}) x{e}"));
        }
        if c > 0 {
            out.push(format!("+({p},{q}) x{c}"));
        }
    }
}

pub fn check_row(group: &CatalogGroup, row: &CatalogRow) -> Result<RowCheck> {
    let c = compute_row(group, row)?;
    let e = &row.expected;
    let mut diff = Vec::new();
    diagram_diff("V", &e.v, &c.v, &mut diff);
    if let Some(a) = &e.adjoint {
        diagram_diff("adjoint", a, &c.adjoint, &mut diff);
    }
    if e.v_nilpotency != c.v_nilpotency {
        diff.push(format!("V nilpotency: expected {}, computed {}", e.v_nilpotency, c.v_nilpotency));
    }
    if e.adjoint_nilpotency != c.adjoint_nilpotency {
        diff.push(format!("adjoint nilpotency: expected {}, computed {}", e.adjoint_nilpotency, c.adjoint_nilpotency));
    }
    if let (Some(eo), Some(co)) = (&e.orbit, &c.orbit) {
        if eo != co {
            diff.push(format!("orbit: expected {eo:?}, computed {co:?}"));
        }
    }
    if let Some((mv, ma)) = &c.model {
        diagram_diff("V (model)", &e.v, mv, &mut diff);
        if let Some(a) = &e.adjoint {
            diagram_diff("adjoint (model)", a, ma, &mut diff);
        }
    }
    Ok(RowCheck { group: group.group.clone(), name: row.name.clone(), computed: c, diff })
}

/// Recomputes every selected row.
pub fn run(catalog: &Catalog, name: &str) -> Result<Vec<RowCheck>> {
    catalog.select(name)?.into_iter().map(|(g, r)| check_row(g, r)).collect()
}
