use super::matrix::MatrixGQ;
use super::scalar::GaussianRational;
use crate::error::{Error, Result};

/// A linear subspace of `C^n` (defined over Q[i]) in canonical form.
///
/// The basis is stored as the reduced row-echelon matrix of any spanning set,
/// which is unique; hence two subspaces are equal iff their bases are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: MatrixGQ,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: MatrixGQ::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: MatrixGQ::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of `rows` (an `m × ambient` matrix).
    pub fn span(rows: &MatrixGQ) -> Self {
        let (basis, pivots) = rows.rref_with_pivots();
        Subspace {
            ambient: rows.cols(),
            basis,
            pivots,
        }
    }

    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<GaussianRational>>) -> Self {
        Subspace::span(&MatrixGQ::from_rows(ambient, vectors))
    }

    /// Span of standard basis vectors `e_i` for the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vectors = indices
            .iter()
            .map(|&i| {
                let mut v = vec![GaussianRational::zero(); ambient];
                v[i] = GaussianRational::one();
                v
            })
            .collect();
        Subspace::from_vectors(ambient, vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &MatrixGQ {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<GaussianRational>> {
        self.basis.row_vecs()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    pub fn try_sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if other.is_zero() || self.is_full() {
            return Ok(self.clone());
        }
        if self.is_zero() || other.is_full() {
            return Ok(other.clone());
        }
        Ok(Subspace::span(&MatrixGQ::vstack(
            self.ambient,
            &[&self.basis, &other.basis],
        )))
    }

    /// Intersection through annihilators: `A ∩ B = ann(ann A + ann B)` for
    /// the bilinear pairing `⟨x, y⟩ = Σ x_i y_i`.
    pub fn try_intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if self.is_zero() || other.is_full() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(other.clone());
        }
        let ann = self.annihilator().sum(&other.annihilator());
        Ok(ann.annihilator())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.try_sum(other).expect("subspace sum ambient")
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.try_intersect(other).expect("subspace intersection ambient")
    }

    pub fn sum_all<'a>(ambient: usize, spaces: impl IntoIterator<Item = &'a Subspace>) -> Subspace {
        let mut rows: Vec<&MatrixGQ> = Vec::new();
        for s in spaces {
            assert_eq!(s.ambient, ambient, "sum_all ambient mismatch");
            rows.push(&s.basis);
        }
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        Subspace::span(&MatrixGQ::vstack(ambient, &rows))
    }

    /// `{x : Σ_i b_i x_i = 0 for every basis row b}`.
    pub fn annihilator(&self) -> Subspace {
        kernel(&self.basis)
    }

    pub fn conj(&self) -> Subspace {
        if self.basis.is_real() {
            return self.clone();
        }
        Subspace::span(&self.basis.conj())
    }

    pub fn is_real(&self) -> bool {
        self.basis.is_real()
    }

    pub fn contains_vec(&self, v: &[GaussianRational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce(v).iter().all(GaussianRational::is_zero)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient
            && other.dim() <= self.dim()
            && other.basis_vectors().iter().all(|v| self.contains_vec(v))
    }

    /// Canonical coset representative of `v` modulo this subspace: the
    /// unique vector in `v + self` vanishing at the pivot columns.
    pub fn reduce(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for (x, b) in out.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *x -= &(&factor * b);
                }
            }
        }
        out
    }

    /// Coordinates of `v` (assumed to lie in the subspace) in the echelon
    /// basis: because the basis is reduced, they are the pivot entries.
    pub fn coords(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Image under `m` (acting on column vectors).
    pub fn try_apply(&self, m: &MatrixGQ) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(Error::AmbientMismatch {
                left: m.cols(),
                right: self.ambient,
            });
        }
        if self.is_zero() {
            return Ok(Subspace::zero(m.rows()));
        }
        Ok(Subspace::span(&self.basis.mul(&m.transpose())))
    }

    pub fn apply(&self, m: &MatrixGQ) -> Subspace {
        self.try_apply(m).expect("apply ambient")
    }

    /// Preimage `{v : m v ∈ target}`.
    pub fn preimage(m: &MatrixGQ, target: &Subspace) -> Subspace {
        assert_eq!(m.rows(), target.ambient);
        // v ↦ (m v mod target) expressed in the non-pivot coordinates.
        let q = QuotientMap::new(target);
        kernel(&q.matrix().mul(m))
    }
}

/// Null space `{x : M x = 0}` of a matrix acting on column vectors.
pub fn kernel(m: &MatrixGQ) -> Subspace {
    let n = m.cols();
    let (red, pivots) = m.rref_with_pivots();
    let pivot_set: Vec<bool> = (0..n).map(|c| pivots.contains(&c)).collect();
    let mut vectors = Vec::new();
    for free in (0..n).filter(|&c| !pivot_set[c]) {
        let mut v = vec![GaussianRational::zero(); n];
        v[free] = GaussianRational::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -&red[(i, free)];
        }
        vectors.push(v);
    }
    Subspace::from_vectors(n, vectors)
}

/// Column space of a matrix.
pub fn image(m: &MatrixGQ) -> Subspace {
    Subspace::span(&m.transpose())
}

/// The linear map `C^n → C^n / S ≅ C^{n − dim S}` sending `v` to the
/// non-pivot entries of its canonical representative modulo `S`.
///
/// Its right inverse ("lowest-echelon lift") places quotient coordinates in
/// the non-pivot columns and zeros in the pivot columns.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    ambient: usize,
    free: Vec<usize>,
    matrix: MatrixGQ,
}

impl QuotientMap {
    pub fn new(s: &Subspace) -> Self {
        let n = s.ambient_dim();
        let free: Vec<usize> = (0..n).filter(|c| !s.pivots().contains(c)).collect();
        let mut matrix = MatrixGQ::zeros(free.len(), n);
        for c in 0..n {
            let mut e = vec![GaussianRational::zero(); n];
            e[c] = GaussianRational::one();
            let red = s.reduce(&e);
            for (r, &f) in free.iter().enumerate() {
                matrix[(r, c)] = red[f].clone();
            }
        }
        QuotientMap { ambient: n, free, matrix }
    }

    pub fn matrix(&self) -> &MatrixGQ {
        &self.matrix
    }

    pub fn quotient_dim(&self) -> usize {
        self.free.len()
    }

    pub fn project(&self, s: &Subspace) -> Subspace {
        s.apply(&self.matrix)
    }

    pub fn project_vec(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        self.matrix.apply_vec(v)
    }

    pub fn lift_vec(&self, x: &[GaussianRational]) -> Vec<GaussianRational> {
        let mut v = vec![GaussianRational::zero(); self.ambient];
        for (val, &f) in x.iter().zip(&self.free) {
            v[f] = val.clone();
        }
        v
    }

    pub fn lift(&self, s: &Subspace) -> Subspace {
        Subspace::from_vectors(
            self.ambient,
            s.basis_vectors().iter().map(|x| self.lift_vec(x)).collect(),
        )
    }
}
