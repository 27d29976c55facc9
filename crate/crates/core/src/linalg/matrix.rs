use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::scalar::GaussianRational;
use crate::error::{Error, Result};

/// A dense row-major matrix over Q[i].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixGQ {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl MatrixGQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatrixGQ {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = MatrixGQ::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussianRational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        MatrixGQ { rows, cols, data }
    }

    /// Builds a matrix from rows; all rows must share one length.
    pub fn from_rows(cols: usize, rows: Vec<Vec<GaussianRational>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        MatrixGQ { rows: n, cols, data }
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        MatrixGQ::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussianRational::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<GaussianRational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<GaussianRational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussianRational::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(GaussianRational::is_real)
    }

    pub fn transpose(&self) -> Self {
        MatrixGQ::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn conj(&self) -> Self {
        MatrixGQ {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(GaussianRational::conj).collect(),
        }
    }

    pub fn conj_transpose(&self) -> Self {
        MatrixGQ::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        MatrixGQ {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&GaussianRational::from_int(-1))
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(MatrixGQ {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(MatrixGQ {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = MatrixGQ::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(r, c)] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Panicking product for internal use where shapes are known to agree.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("matrix product shape")
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("matrix sum shape")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("matrix difference shape")
    }

    /// Commutator `[self, other] = self·other − other·self`.
    pub fn bracket(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn apply_vec(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = GaussianRational::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square());
        let mut out = MatrixGQ::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn trace(&self) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for i in 0..self.rows.min(self.cols) {
            acc += &self[(i, i)];
        }
        acc
    }

    /// Stacks matrices vertically.
    pub fn vstack(cols: usize, blocks: &[&MatrixGQ]) -> Self {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        MatrixGQ { rows, cols, data }
    }

    /// Block-diagonal direct sum.
    pub fn block_diag(blocks: &[&MatrixGQ]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = MatrixGQ::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(r0 + r, c0 + c)] = b[(r, c)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Flattens row-major into a single row vector.
    pub fn flatten(&self) -> Vec<GaussianRational> {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<GaussianRational>) -> Self {
        assert_eq!(data.len(), rows * cols);
        MatrixGQ { rows, cols, data }
    }

    /// Reduced row-echelon form with zero rows dropped, together with the
    /// pivot column of each remaining row.
    pub fn rref_with_pivots(&self) -> (MatrixGQ, Vec<usize>) {
        let mut rows: Vec<Vec<GaussianRational>> = self.row_vecs();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..self.cols {
            if lead >= rows.len() {
                break;
            }
            let Some(p) = (lead..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
                continue;
            };
            rows.swap(lead, p);
            let inv = rows[lead][c].inv();
            if !inv.is_one() {
                for x in rows[lead].iter_mut().skip(c) {
                    if !x.is_zero() {
                        *x = &*x * &inv;
                    }
                }
            }
            let pivot_row = rows[lead].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == lead || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !p.is_zero() {
                        *x -= &(&factor * p);
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        rows.truncate(lead);
        (MatrixGQ::from_rows(self.cols, rows), pivots)
    }

    pub fn rref(&self) -> MatrixGQ {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Exact inverse via Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<MatrixGQ> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let aug = MatrixGQ::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            }
        });
        let (red, pivots) = aug.rref_with_pivots();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(MatrixGQ::from_fn(n, n, |r, c| red[(r, n + c)].clone()))
    }

    /// Determinant by fraction-exact elimination.
    pub fn determinant(&self) -> GaussianRational {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.row_vecs();
        let mut det = GaussianRational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
                return GaussianRational::zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det = &det * &m[c][c];
            let inv = m[c][c].inv();
            for r in c + 1..n {
                if m[r][c].is_zero() {
                    continue;
                }
                let factor = &m[r][c] * &inv;
                for k in c..n {
                    let t = &factor * &m[c][k];
                    m[r][k] -= &t;
                }
            }
        }
        det
    }

    /// `Some(k)` with `self^k = 0` minimal, or `None` when not nilpotent.
    pub fn nilpotency_index(&self) -> Option<usize> {
        assert!(self.is_square());
        if self.is_zero() {
            return Some(if self.rows == 0 { 0 } else { 1 });
        }
        let mut p = self.clone();
        for k in 2..=self.rows.max(1) {
            p = p.mul(self);
            if p.is_zero() {
                return Some(k);
            }
        }
        None
    }

    /// `exp(zN) = Σ z^k N^k / k!` for nilpotent `N`.
    pub fn nilpotent_exp(&self, z: &GaussianRational) -> Result<MatrixGQ> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("exponential of non-square matrix".into()));
        }
        let index = self.nilpotency_index().ok_or(Error::NotNilpotent)?;
        let mut out = MatrixGQ::identity(self.rows);
        let mut term = MatrixGQ::identity(self.rows);
        for k in 1..index {
            let coeff = z / &GaussianRational::from_int(k as i64);
            term = term.mul(self).scale(&coeff);
            out = out.add(&term);
        }
        Ok(out)
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conj_transpose()
    }

    /// Sylvester's criterion: `Ok(None)` when positive definite, otherwise
    /// `Ok(Some(k))` naming the first leading principal minor (1-based) that is
    /// not a positive rational.
    pub fn hermitian_pd_failure(&self) -> Result<Option<usize>> {
        if !self.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        let n = self.rows;
        // Gaussian elimination without pivoting: the k-th pivot equals the
        // ratio of consecutive leading minors, so all minors are positive iff
        // every pivot is a positive real.
        let mut m = self.row_vecs();
        for c in 0..n {
            if m[c][c].real_sign() != Some(1) {
                return Ok(Some(c + 1));
            }
            let inv = m[c][c].inv();
            for r in c + 1..n {
                if m[r][c].is_zero() {
                    continue;
                }
                let factor = &m[r][c] * &inv;
                for k in c..n {
                    let t = &factor * &m[c][k];
                    m[r][k] -= &t;
                }
            }
        }
        Ok(None)
    }

    pub fn hermitian_pd(&self) -> Result<bool> {
        Ok(self.hermitian_pd_failure()?.is_none())
    }

    /// Entry-wise rationals for real matrices (used by root-theoretic code).
    pub fn real_entry(&self, r: usize, c: usize) -> Option<BigRational> {
        let x = &self[(r, c)];
        x.is_real().then(|| x.re().clone())
    }

    pub fn from_int_entry(n: i64) -> GaussianRational {
        GaussianRational::real(BigRational::from_integer(BigInt::from(n)))
    }
}

impl Index<(usize, usize)> for MatrixGQ {
    type Output = GaussianRational;
    fn index(&self, (r, c): (usize, usize)) -> &GaussianRational {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for MatrixGQ {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut GaussianRational {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for MatrixGQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixGQ {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
