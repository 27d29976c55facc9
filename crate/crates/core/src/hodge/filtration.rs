use crate::linalg::{MatrixGQ, Subspace};

/// A decreasing filtration `… ⊇ F^p ⊇ F^{p+1} ⊇ …` of `C^ambient`.
///
/// Stored steps cover `lo ..= lo + steps.len() − 1`; below `lo` every step is
/// the whole space and above the stored range every step is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    ambient: usize,
    lo: i64,
    steps: Vec<Subspace>,
}

impl Filtration {
    pub fn new(ambient: usize, lo: i64, steps: Vec<Subspace>) -> Self {
        for s in &steps {
            assert_eq!(s.ambient_dim(), ambient, "filtration step ambient");
        }
        let mut f = Filtration { ambient, lo, steps };
        f.trim();
        f
    }

    /// `F^p = ⊕_{r ≥ p} pieces(r)` for pieces indexed by `lo ..= hi`.
    pub fn from_graded(ambient: usize, lo: i64, hi: i64, piece: impl Fn(i64) -> Subspace) -> Self {
        let mut steps = Vec::new();
        let mut acc = Subspace::zero(ambient);
        for p in (lo..=hi).rev() {
            acc = acc.sum(&piece(p));
            steps.push(acc.clone());
        }
        steps.reverse();
        Filtration::new(ambient, lo, steps)
    }

    /// Canonical storage: no trailing zero steps and no redundant leading
    /// full steps, so equality of filtrations is equality of all `F^p`.
    fn trim(&mut self) {
        while self.steps.last().is_some_and(Subspace::is_zero) {
            self.steps.pop();
        }
        while self.steps.first().is_some_and(Subspace::is_full) {
            self.steps.remove(0);
            self.lo += 1;
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Largest index with a nonzero step; `lo` is the first index whose step
    /// is not the whole space (so `hi < lo` means a one-step filtration).
    pub fn hi(&self) -> i64 {
        self.lo + self.steps.len() as i64 - 1
    }

    pub fn get(&self, p: i64) -> Subspace {
        if p < self.lo {
            Subspace::full(self.ambient)
        } else if p > self.hi() {
            Subspace::zero(self.ambient)
        } else {
            self.steps[(p - self.lo) as usize].clone()
        }
    }

    pub fn steps(&self) -> impl Iterator<Item = (i64, &Subspace)> {
        self.steps.iter().enumerate().map(|(i, s)| (self.lo + i as i64, s))
    }

    pub fn is_decreasing(&self) -> bool {
        self.steps.windows(2).all(|w| w[0].contains(&w[1]))
    }

    /// Image of every step under `m`.
    pub fn apply(&self, m: &MatrixGQ) -> Filtration {
        Filtration::new(
            m.rows(),
            self.lo,
            self.steps.iter().map(|s| s.apply(m)).collect(),
        )
    }

    pub fn conj(&self) -> Filtration {
        Filtration::new(self.ambient, self.lo, self.steps.iter().map(Subspace::conj).collect())
    }

    pub fn dims(&self) -> Vec<(i64, usize)> {
        self.steps().map(|(p, s)| (p, s.dim())).collect()
    }
}

/// An increasing filtration `… ⊆ W_k ⊆ W_{k+1} ⊆ …` of `C^ambient`.
///
/// Stored steps cover `lo ..= hi`; below `lo` every step is zero and above
/// `hi` every step is the whole space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncreasingFiltration {
    ambient: usize,
    lo: i64,
    steps: Vec<Subspace>,
}

impl IncreasingFiltration {
    pub fn new(ambient: usize, lo: i64, steps: Vec<Subspace>) -> Self {
        for s in &steps {
            assert_eq!(s.ambient_dim(), ambient, "filtration step ambient");
        }
        let mut w = IncreasingFiltration { ambient, lo, steps };
        while w.steps.first().is_some_and(Subspace::is_zero) {
            w.steps.remove(0);
            w.lo += 1;
        }
        while w.steps.len() >= 2 && w.steps[w.steps.len() - 2].is_full() {
            w.steps.pop();
        }
        w
    }

    /// `W_k = ⊕_{j ≤ k} pieces(j)` for pieces indexed by `lo ..= hi`.
    pub fn from_graded(ambient: usize, lo: i64, hi: i64, piece: impl Fn(i64) -> Subspace) -> Self {
        let mut steps = Vec::new();
        let mut acc = Subspace::zero(ambient);
        for k in lo..=hi {
            acc = acc.sum(&piece(k));
            steps.push(acc.clone());
        }
        IncreasingFiltration::new(ambient, lo, steps)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.steps.len() as i64 - 1
    }

    pub fn get(&self, k: i64) -> Subspace {
        if k < self.lo {
            Subspace::zero(self.ambient)
        } else if k > self.hi() {
            Subspace::full(self.ambient)
        } else {
            self.steps[(k - self.lo) as usize].clone()
        }
    }

    pub fn steps(&self) -> impl Iterator<Item = (i64, &Subspace)> {
        self.steps.iter().enumerate().map(|(i, s)| (self.lo + i as i64, s))
    }

    pub fn is_increasing(&self) -> bool {
        self.steps.windows(2).all(|w| w[1].contains(&w[0]))
    }

    pub fn dims(&self) -> Vec<(i64, usize)> {
        self.steps().map(|(k, s)| (k, s.dim())).collect()
    }
}
