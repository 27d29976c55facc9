use crate::error::{Error, Result};
use crate::hodge::{Filtration, HodgeDatum};
use crate::linalg::MatrixGQ;

use super::weight::{weight_filtration, WeightFiltration};

/// A candidate limiting mixed Hodge structure `(V, Q, F, N)` together with
/// the weight filtration of `N` centred at the weight of `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmhsDatum {
    pub hodge: HodgeDatum,
    pub n: MatrixGQ,
    pub w: WeightFiltration,
}

impl LmhsDatum {
    /// Builds the datum with `W = W(N)` centred at the weight.
    pub fn new(hodge: HodgeDatum, n: MatrixGQ) -> Result<Self> {
        let center = hodge.weight();
        LmhsDatum::with_center(hodge, n, center)
    }

    pub fn with_center(hodge: HodgeDatum, n: MatrixGQ, center: i64) -> Result<Self> {
        if n.rows() != hodge.dim || n.cols() != hodge.dim {
            return Err(Error::AmbientMismatch { left: hodge.dim, right: n.rows() });
        }
        let w = weight_filtration(&n, center)?;
        Ok(LmhsDatum { hodge, n, w })
    }

    /// Convenience constructor from raw parts.
    pub fn from_parts(weight: i64, q: MatrixGQ, f: Filtration, n: MatrixGQ) -> Result<Self> {
        LmhsDatum::new(HodgeDatum::new(weight, q, f), n)
    }

    pub fn dim(&self) -> usize {
        self.hodge.dim
    }

    pub fn weight(&self) -> i64 {
        self.hodge.weight()
    }

    pub fn center(&self) -> i64 {
        self.w.center
    }

    pub fn q(&self) -> &MatrixGQ {
        self.hodge.q()
    }

    pub fn f(&self) -> &Filtration {
        &self.hodge.filtration
    }

    /// The same `F` and `Q` with `N` replaced (weight filtration recomputed).
    pub fn with_n(&self, n: MatrixGQ) -> Result<Self> {
        LmhsDatum::with_center(self.hodge.clone(), n, self.center())
    }

    /// `Q(Nu, v) + Q(u, Nv) = 0`, i.e. `Nᵀ Q + Q N = 0`.
    pub fn n_is_skew(&self) -> bool {
        let q = self.q();
        self.n.transpose().mul(q).add(&q.mul(&self.n)).is_zero()
    }

    /// Violations of the structural invariants: `N` real, nilpotent,
    /// `Q`-skew and infinitesimal (`N F^p ⊆ F^{p−1}`).
    pub fn structure_violations(&self) -> Vec<(&'static str, String)> {
        let mut out = Vec::new();
        if !self.n.is_real() {
            out.push(("structure.real", "N has non-real entries".to_string()));
        }
        if self.n.nilpotency_index().is_none() {
            out.push(("structure.nilpotent", "N is not nilpotent".to_string()));
        }
        if !self.n_is_skew() {
            out.push(("structure.skew", "Q(Nu,v) + Q(u,Nv) != 0".to_string()));
        }
        let f = self.f();
        for p in f.lo()..=f.hi() {
            if !f.get(p - 1).contains(&f.get(p).apply(&self.n)) {
                out.push(("structure.griffiths", format!("N F^{p} not contained in F^{}", p - 1)));
            }
        }
        out
    }
}
