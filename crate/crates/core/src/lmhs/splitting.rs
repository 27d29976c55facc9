use crate::bigrading::Bigrading;
use crate::error::{Error, Result};
use crate::hodge::Filtration;

use super::datum::LmhsDatum;
use super::weight::WeightFiltration;

/// The Deligne splitting `I^{p,q}` of `(W, F)`.
///
/// When `F^p ∩ conj F^q ∩ W_{p+q}` already reconstructs `W` and `F` (the
/// `R`-split case) that is the answer; otherwise the general formula
/// `F^p ∩ W_{p+q} ∩ (conj F^q ∩ W_{p+q} + Σ_{j≥1} conj F^{q−j} ∩ W_{p+q−j−1})`
/// is evaluated.
pub fn deligne_splitting(l: &LmhsDatum) -> Result<Bigrading> {
    splitting_of(l.f(), &l.w)
}

/// Splitting of an arbitrary pair of filtrations on the same space.
pub fn splitting_of(f: &Filtration, w: &WeightFiltration) -> Result<Bigrading> {
    let dim = f.ambient_dim();
    if w.ambient_dim() != dim {
        return Err(Error::AmbientMismatch { left: dim, right: w.ambient_dim() });
    }
    if dim == 0 {
        return Ok(Bigrading::new(0, vec![]));
    }
    let fbar = f.conj();
    let (plo, phi) = (f.lo() - 1, f.hi().max(f.lo() - 1));
    let (wlo, _) = w.range().expect("nonzero ambient");

    let fast = Bigrading::new(
        dim,
        grid(plo, phi).map(|(p, q)| {
            let space = f.get(p).intersect(&fbar.get(q)).intersect(&w.get(p + q));
            (p, q, space)
        }),
    );
    if reconstructs(&fast, f, w) {
        return Ok(fast);
    }

    let full = Bigrading::new(
        dim,
        grid(plo, phi).map(|(p, q)| {
            let wk = w.get(p + q);
            let mut inner = fbar.get(q).intersect(&wk);
            let mut j = 1;
            while p + q - j - 1 >= wlo {
                inner = inner.sum(&fbar.get(q - j).intersect(&w.get(p + q - j - 1)));
                j += 1;
            }
            (p, q, f.get(p).intersect(&wk).intersect(&inner))
        }),
    );
    if reconstructs(&full, f, w) {
        Ok(full)
    } else {
        Err(Error::NotMhs(
            "the Deligne pieces do not reconstruct W and F".to_string(),
        ))
    }
}

fn grid(lo: i64, hi: i64) -> impl Iterator<Item = (i64, i64)> {
    (lo..=hi).flat_map(move |p| (lo..=hi).map(move |q| (p, q)))
}

/// `⊕ I^{p,q} = V`, `W_k = ⊕_{p+q ≤ k} I^{p,q}` and `F^p = ⊕_{r ≥ p} I^{r,•}`.
pub fn reconstructs(b: &Bigrading, f: &Filtration, w: &WeightFiltration) -> bool {
    if !b.is_direct() {
        return false;
    }
    let Some((wlo, whi)) = w.range() else {
        return b.nodes().is_empty();
    };
    let w_ok = (wlo - 1..=whi).all(|k| b.sum_where(|p, q| p + q <= k) == w.get(k));
    let f_ok = (f.lo() - 1..=f.hi() + 1).all(|p| b.sum_where(|r, _| r >= p) == f.get(p));
    w_ok && f_ok
}

/// `N I^{p,q} ⊆ I^{p−1,q−1}` for every node.
pub fn n_type_violations(b: &Bigrading, n: &crate::linalg::MatrixGQ) -> Vec<String> {
    b.nodes()
        .iter()
        .filter(|node| !b.get(node.p - 1, node.q - 1).contains(&node.space.apply(n)))
        .map(|node| {
            format!(
                "N I^({},{}) not contained in I^({},{})",
                node.p,
                node.q,
                node.p - 1,
                node.q - 1
            )
        })
        .collect()
}

/// `F^p = ⊕_{r ≥ p} I^{r,•}` rebuilt from a bigrading.
pub fn hodge_filtration_of(b: &Bigrading) -> Filtration {
    let dim = b.ambient_dim();
    let (lo, hi) = p_range(b);
    Filtration::from_graded(dim, lo, hi, |p| b.sum_where(|r, _| r == p))
}

fn p_range(b: &Bigrading) -> (i64, i64) {
    let ps = b.nodes().iter().map(|n| n.p);
    (ps.clone().min().unwrap_or(0), ps.max().unwrap_or(-1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::{model_phs, HodgeNumbers};
    use crate::linalg::MatrixGQ;

    #[test]
    fn pure_structure_splits_into_hodge_pieces() {
        let h = model_phs(&HodgeNumbers::new(vec![1, 2, 1]).unwrap()).unwrap();
        let dim = h.dim;
        let l = LmhsDatum::new(h.clone(), MatrixGQ::zeros(dim, dim)).unwrap();
        let b = deligne_splitting(&l).unwrap();
        assert!(b.is_r_split());
        for (p, q, piece) in h.hodge_decomposition() {
            assert_eq!(b.get(p, q), piece);
        }
        assert_eq!(b.dims().total(), 4);
    }
}
