use std::collections::BTreeMap;

use crate::bigrading::Bigrading;
use crate::error::{Error, Result};
use crate::hodge::{Filtration, IncreasingFiltration};
use crate::linalg::{kernel, GaussianRational, MatrixGQ, Subspace};

use super::datum::LmhsDatum;
use super::splitting::deligne_splitting;

/// The limiting mixed Hodge structure induced on a Lie algebra
/// `g ⊂ End(V, Q)`.
///
/// All subspaces live in the coordinate space `C^{dim g}` of `g_basis`;
/// the basis is in echelon form with respect to matrix entries, so
/// coordinates are read off at the pivot entries.
#[derive(Clone, Debug)]
pub struct AdjointLmhs {
    pub g_basis: Vec<MatrixGQ>,
    pub i_g: Bigrading,
    pub f_g: Filtration,
    pub w_g: IncreasingFiltration,
    pub killing_proxy: MatrixGQ,
    /// Coordinates of `N` in `g_basis`.
    pub n_coords: Vec<GaussianRational>,
    span: Subspace,
    size: usize,
}

impl AdjointLmhs {
    pub fn dim(&self) -> usize {
        self.g_basis.len()
    }

    /// Coordinates of `ξ` in `g_basis`, or `None` when `ξ ∉ g`.
    pub fn coords(&self, xi: &MatrixGQ) -> Option<Vec<GaussianRational>> {
        let flat = xi.flatten();
        self.span.contains_vec(&flat).then(|| self.span.coords(&flat))
    }

    /// `Σ c_i ξ_i`.
    pub fn element(&self, coords: &[GaussianRational]) -> MatrixGQ {
        let mut out = MatrixGQ::zeros(self.size, self.size);
        for (c, xi) in coords.iter().zip(&self.g_basis) {
            if !c.is_zero() {
                out = out.add(&xi.scale(c));
            }
        }
        out
    }
}

/// Basis of `End(V, Q) = {ξ : Qξ + ξᵀQ = 0}` as the kernel of the linear
/// map on the `dim²` matrix entries.
pub fn endomorphism_algebra(q: &MatrixGQ) -> Vec<MatrixGQ> {
    let d = q.rows();
    let mut map = MatrixGQ::zeros(d * d, d * d);
    for a in 0..d {
        for b in 0..d {
            let row = a * d + b;
            for k in 0..d {
                if !q[(a, k)].is_zero() {
                    map[(row, k * d + b)] += &q[(a, k)];
                }
                if !q[(k, b)].is_zero() {
                    map[(row, k * d + a)] += &q[(k, b)];
                }
            }
        }
    }
    kernel(&map)
        .basis_vectors()
        .into_iter()
        .map(|v| MatrixGQ::from_flat(d, d, v))
        .collect()
}

/// The adjoint structure on the full `End(V, Q)`.
pub fn adjoint_lmhs(l: &LmhsDatum) -> Result<AdjointLmhs> {
    adjoint_lmhs_in(l, &endomorphism_algebra(l.q()))
}

/// The adjoint structure on the subalgebra spanned by `basis`, which must be
/// contained in `End(V, Q)`, contain `N` and be compatible with the Deligne
/// splitting of `V`.
pub fn adjoint_lmhs_in(l: &LmhsDatum, basis: &[MatrixGQ]) -> Result<AdjointLmhs> {
    let d = l.dim();
    let split = deligne_splitting(l)?;
    if !split.is_r_split() {
        return Err(Error::NonRSplit);
    }
    let q = l.q();
    for xi in basis {
        if xi.rows() != d || xi.cols() != d {
            return Err(Error::ShapeMismatch("Lie algebra element has the wrong size".into()));
        }
        if !xi.transpose().mul(q).add(&q.mul(xi)).is_zero() {
            return Err(Error::NotMhs("supplied element does not preserve Q".into()));
        }
    }
    let span = Subspace::from_vectors(d * d, basis.iter().map(MatrixGQ::flatten).collect());
    let g_basis: Vec<MatrixGQ> =
        span.basis_vectors().into_iter().map(|v| MatrixGQ::from_flat(d, d, v)).collect();
    let dim_g = g_basis.len();

    // Change of basis to a splitting-adapted basis of V.
    let adapted = split.adapted_basis();
    let labels: Vec<(i64, i64)> = adapted.iter().map(|(p, q, _)| (*p, *q)).collect();
    let s = MatrixGQ::from_rows(d, adapted.into_iter().map(|(_, _, v)| v).collect()).transpose();
    let s_inv = s.inverse()?;

    let mut pieces: BTreeMap<(i64, i64), Vec<Vec<GaussianRational>>> = BTreeMap::new();
    for xi in &g_basis {
        let local = s_inv.mul(xi).mul(&s);
        let mut by_shift: BTreeMap<(i64, i64), MatrixGQ> = BTreeMap::new();
        for r in 0..d {
            for c in 0..d {
                if local[(r, c)].is_zero() {
                    continue;
                }
                let shift = (labels[r].0 - labels[c].0, labels[r].1 - labels[c].1);
                by_shift.entry(shift).or_insert_with(|| MatrixGQ::zeros(d, d))[(r, c)] =
                    local[(r, c)].clone();
            }
        }
        for (shift, m) in by_shift {
            let flat = s.mul(&m).mul(&s_inv).flatten();
            if !span.contains_vec(&flat) {
                return Err(Error::NotMhs(format!(
                    "the ({},{}) component of a Lie algebra element leaves the algebra",
                    shift.0, shift.1
                )));
            }
            pieces.entry(shift).or_default().push(span.coords(&flat));
        }
    }
    let i_g = Bigrading::new(
        dim_g,
        pieces
            .into_iter()
            .map(|((p, q), vs)| (p, q, Subspace::from_vectors(dim_g, vs))),
    );
    if !i_g.is_direct() {
        return Err(Error::NotMhs("the induced bigrading of g is not direct".into()));
    }

    let (plo, phi) = node_range(&i_g, |p, _| p);
    let f_g = Filtration::from_graded(dim_g, plo, phi, |a| i_g.sum_where(|p, _| p == a));
    let (wlo, whi) = node_range(&i_g, |p, q| p + q);
    let w_g = IncreasingFiltration::from_graded(dim_g, wlo, whi, |k| i_g.sum_where(|p, q| p + q == k));

    let n_flat = l.n.flatten();
    if !span.contains_vec(&n_flat) {
        return Err(Error::NotMhs("N does not lie in the Lie algebra".into()));
    }
    let n_coords = span.coords(&n_flat);
    if !i_g.get(-1, -1).contains_vec(&n_coords) {
        return Err(Error::NotMhs("N is not of type (-1,-1) in g".into()));
    }

    let killing_proxy = MatrixGQ::from_fn(dim_g, dim_g, |i, j| trace_of_product(&g_basis[i], &g_basis[j]));
    Ok(AdjointLmhs {
        g_basis,
        i_g,
        f_g,
        w_g,
        killing_proxy,
        n_coords,
        span,
        size: d,
    })
}

fn node_range(b: &Bigrading, key: impl Fn(i64, i64) -> i64) -> (i64, i64) {
    let ks = b.nodes().iter().map(|n| key(n.p, n.q));
    (ks.clone().min().unwrap_or(0), ks.max().unwrap_or(-1))
}

/// `tr(AB)` without forming the product.
pub fn trace_of_product(a: &MatrixGQ, b: &MatrixGQ) -> GaussianRational {
    let d = a.rows();
    let mut t = GaussianRational::zero();
    for r in 0..d {
        for c in 0..d {
            if !a[(r, c)].is_zero() && !b[(c, r)].is_zero() {
                t += &(&a[(r, c)] * &b[(c, r)]);
            }
        }
    }
    t
}

/// The diagonal subalgebra `s = ⊕_p I^{p,p}_g` with its induced
/// (Hodge–Tate) limiting mixed Hodge structure.
#[derive(Clone, Debug)]
pub struct DiagonalLevi {
    /// Matrices spanning `s`.
    pub basis: Vec<MatrixGQ>,
    /// `s` in the coordinates of the ambient `g`.
    pub space: Subspace,
    /// `I^{p,p}_s` in the coordinates of `basis`.
    pub i_s: Bigrading,
    pub f_s: Filtration,
    pub w_s: IncreasingFiltration,
    pub n_coords: Vec<GaussianRational>,
}

pub fn diagonal_levi(a: &AdjointLmhs) -> Result<DiagonalLevi> {
    let dim_g = a.dim();
    let space = a.i_g.sum_where(|p, q| p == q);
    let coords_s = space.basis_vectors();
    let basis: Vec<MatrixGQ> = coords_s.iter().map(|c| a.element(c)).collect();
    let dim_s = basis.len();

    for (i, x) in basis.iter().enumerate() {
        match a.coords(&x.conj()) {
            Some(c) if space.contains_vec(&c) => {}
            _ => return Err(Error::BracketEscape("s is not stable under conjugation".into())),
        }
        for y in &basis[i + 1..] {
            match a.coords(&x.bracket(y)) {
                Some(c) if space.contains_vec(&c) => {}
                _ => return Err(Error::BracketEscape("[s, s] is not contained in s".into())),
            }
        }
    }

    let to_s = |v: &[GaussianRational]| space.coords(v);
    let i_s = Bigrading::new(
        dim_s,
        a.i_g
            .nodes()
            .iter()
            .filter(|n| n.p == n.q)
            .map(|n| {
                let vs = n.space.basis_vectors().iter().map(|v| to_s(v)).collect();
                (n.p, n.q, Subspace::from_vectors(dim_s, vs))
            }),
    );
    if !i_s.is_hodge_tate() || !i_s.is_direct() {
        return Err(Error::BracketEscape("induced bigrading on s is not Hodge-Tate".into()));
    }
    if !space.contains_vec(&a.n_coords) {
        return Err(Error::BracketEscape("N does not lie in s".into()));
    }
    let (lo, hi) = node_range(&i_s, |p, _| p);
    let f_s = Filtration::from_graded(dim_s, lo, hi, |p| i_s.get(p, p));
    let w_s = IncreasingFiltration::from_graded(dim_s, 2 * lo, 2 * hi, |k| {
        if k % 2 == 0 {
            i_s.get(k / 2, k / 2)
        } else {
            Subspace::zero(dim_s)
        }
    });
    debug_assert_eq!(space.ambient_dim(), dim_g);
    Ok(DiagonalLevi {
        basis,
        n_coords: to_s(&a.n_coords),
        space,
        i_s,
        f_s,
        w_s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::{model_phs, HodgeNumbers};

    #[test]
    fn endomorphisms_of_symplectic_plane_form_sl2() {
        let q = MatrixGQ::from_ints(&[&[0, 1], &[-1, 0]]);
        assert_eq!(endomorphism_algebra(&q).len(), 3);
        let q = MatrixGQ::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(endomorphism_algebra(&q).len(), 3);
    }

    #[test]
    fn weight_one_plane_gives_sl2_diagram() {
        let h = model_phs(&HodgeNumbers::new(vec![1, 1]).unwrap()).unwrap();
        let l = LmhsDatum::new(h, MatrixGQ::zeros(2, 2)).unwrap();
        let a = adjoint_lmhs(&l).unwrap();
        let dims = a.i_g.dims();
        assert_eq!(dims.triples(), vec![(-1, 1, 1), (0, 0, 1), (1, -1, 1)]);
        let s = diagonal_levi(&a).unwrap();
        assert_eq!(s.basis.len(), 1);
    }
}
