use crate::error::{Error, Result};
use crate::hodge::IncreasingFiltration;
use crate::linalg::{kernel, MatrixGQ, QuotientMap, Subspace};

/// The monodromy weight filtration `W•(N)` centred at `center`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFiltration {
    pub center: i64,
    pub filtration: IncreasingFiltration,
}

impl WeightFiltration {
    pub fn new(center: i64, filtration: IncreasingFiltration) -> Self {
        WeightFiltration { center, filtration }
    }

    pub fn ambient_dim(&self) -> usize {
        self.filtration.ambient_dim()
    }

    pub fn get(&self, k: i64) -> Subspace {
        self.filtration.get(k)
    }

    /// Smallest and largest weights with nonzero graded piece; `None` on the
    /// zero space.
    pub fn range(&self) -> Option<(i64, i64)> {
        if self.ambient_dim() == 0 {
            return None;
        }
        Some((self.filtration.lo(), self.filtration.hi()))
    }

    /// Largest `m` with `Gr_{center ± m} ≠ 0`.
    pub fn half_width(&self) -> i64 {
        self.range()
            .map(|(lo, hi)| (self.center - lo).max(hi - self.center).max(0))
            .unwrap_or(0)
    }

    /// `Gr_k = W_k / W_{k−1}` as a subspace of the quotient coordinates of
    /// the returned map (which kills `W_{k−1}`).
    pub fn graded(&self, k: i64) -> (QuotientMap, Subspace) {
        let qm = QuotientMap::new(&self.get(k - 1));
        let gr = qm.project(&self.get(k));
        (qm, gr)
    }

    pub fn graded_dim(&self, k: i64) -> usize {
        self.get(k).dim() - self.get(k - 1).dim()
    }

    /// Violations of the defining properties with respect to `n`:
    /// `N W_k ⊆ W_{k−2}` and `N^k : Gr_{c+k} → Gr_{c−k}` bijective.
    pub fn defining_violations(&self, n: &MatrixGQ) -> Vec<String> {
        let mut out = Vec::new();
        if !self.filtration.is_increasing() {
            out.push("W is not increasing".to_string());
        }
        let (lo, hi) = match self.range() {
            Some(r) => r,
            None => return out,
        };
        for k in lo..=hi {
            if !self.get(k - 2).contains(&self.get(k).apply(n)) {
                out.push(format!("N W_{k} not contained in W_{}", k - 2));
            }
        }
        out.extend(self.lefschetz_violations(n));
        out
    }

    /// Hard Lefschetz: `N^k W_{c+k} + W_{c−k−1} = W_{c−k}` together with
    /// `dim Gr_{c+k} = dim Gr_{c−k}`, for `k ≥ 1`.
    pub fn lefschetz_violations(&self, n: &MatrixGQ) -> Vec<String> {
        let c = self.center;
        let mut out = Vec::new();
        for k in 1..=self.half_width() {
            let (top, bottom) = (self.graded_dim(c + k), self.graded_dim(c - k));
            if top != bottom {
                out.push(format!("dim Gr_{} = {top} but dim Gr_{} = {bottom}", c + k, c - k));
                continue;
            }
            let image = self.get(c + k).apply(&n.pow(k as usize)).sum(&self.get(c - k - 1));
            if image != self.get(c - k) {
                out.push(format!("N^{k}: Gr_{} -> Gr_{} is not onto", c + k, c - k));
            }
        }
        out
    }
}

/// `W_{c+k} = Σ_{j ≥ 0} N^j ker N^{k+1+2j}` for `|k| ≤ l`, where `N^{l+1} = 0`.
pub fn weight_filtration(n: &MatrixGQ, center: i64) -> Result<WeightFiltration> {
    if !n.is_square() {
        return Err(Error::ShapeMismatch("N must be square".into()));
    }
    let dim = n.rows();
    let index = n.nilpotency_index().ok_or(Error::NotNilpotent)?;
    let l = index.saturating_sub(1) as i64;
    let powers: Vec<MatrixGQ> = (0..=index).map(|a| n.pow(a)).collect();
    let kernels: Vec<Subspace> = powers.iter().map(kernel).collect();
    let ker = |a: i64| kernels[(a as usize).min(index)].clone();
    let mut steps = Vec::new();
    for k in -l..=l {
        let mut w = Subspace::zero(dim);
        for j in 0..=l {
            let a = k + 1 + 2 * j;
            if a <= 0 {
                continue;
            }
            w = w.sum(&ker(a).apply(&powers[j as usize]));
        }
        steps.push(w);
    }
    Ok(WeightFiltration::new(
        center,
        IncreasingFiltration::new(dim, center - l, steps),
    ))
}
