use crate::bigrading::BigradingDims;
use crate::degen::ht_construct;
use crate::error::Result;
use crate::hodge::HodgeNumbers;
use crate::linalg::{GaussianRational, MatrixGQ};
use crate::lmhs::{adjoint_lmhs_in, deligne_splitting, AdjointLmhs, LmhsDatum};

/// The closed-orbit row of `G_2` as an explicit nilpotent orbit.
#[derive(Clone, Debug)]
pub struct G2ClosedModel {
    pub lmhs: LmhsDatum,
    pub g2_basis: Vec<MatrixGQ>,
    pub adjoint_lmhs: AdjointLmhs,
    pub v: BigradingDims,
    pub adjoint: BigradingDims,
}

fn ad_power(e: &MatrixGQ, x: &MatrixGQ, j: usize) -> MatrixGQ {
    (0..j).fold(x.clone(), |acc, _| e.bracket(&acc))
}

/// `g_2 ⊂ so(7)` for the Hodge–Tate orbit with `h = (1^7)`.
///
/// The orbit is a single 7-string `e^0, …, e^6` with `N e^s = e^{s−1}` and
/// `Q(e^s, e^{6−s}) = (−1)^s`; `N` is principal in `so(7)`. With
/// `E e^s = (s+1)(6−s) e^{s+1}` the triple `(N, Y = [E, N], E)` is an
/// `sl_2`, under which `so(7)` decomposes as `3 ⊕ 7 ⊕ 11`. The summand
/// `3 ⊕ 11` is `g_2`: it is generated under `ad E` by `N` and by the
/// lowest vector `X = e_0 ⊗ e^5 + e_1 ⊗ e^6` of `ad Y`-weight `−10`.
pub fn g2_in_so7() -> Result<(LmhsDatum, Vec<MatrixGQ>)> {
    let l = ht_construct(&HodgeNumbers::new(vec![1; 7])?)?;
    let mut e = MatrixGQ::zeros(7, 7);
    for s in 0..6usize {
        e[(s + 1, s)] = GaussianRational::from_int(((s + 1) * (6 - s)) as i64);
    }
    let mut x = MatrixGQ::zeros(7, 7);
    x[(0, 5)] = GaussianRational::one();
    x[(1, 6)] = GaussianRational::one();
    let n = l.n.clone();
    let mut basis: Vec<MatrixGQ> = (0..3).map(|j| ad_power(&e, &n, j)).collect();
    basis.extend((0..11).map(|j| ad_power(&e, &x, j)));
    Ok((l, basis))
}

/// Deligne splittings of `V` and of `g_2` for the closed-orbit model.
pub fn g2_closed_model() -> Result<G2ClosedModel> {
    let (lmhs, g2_basis) = g2_in_so7()?;
    let adjoint_lmhs = adjoint_lmhs_in(&lmhs, &g2_basis)?;
    let v = deligne_splitting(&lmhs)?.dims();
    let adjoint = adjoint_lmhs.i_g.dims();
    Ok(G2ClosedModel { lmhs, g2_basis, adjoint_lmhs, v, adjoint })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Subspace;

    #[test]
    fn g2_basis_is_a_fourteen_dimensional_subalgebra() {
        let (l, basis) = g2_in_so7().unwrap();
        let flat: Vec<Vec<GaussianRational>> = basis.iter().map(|b| b.flatten()).collect();
        let span = Subspace::from_vectors(49, flat);
        assert_eq!(span.dim(), 14);
        for a in &basis {
            assert!(l.hodge.form.q.mul(a).add(&a.transpose().mul(&l.hodge.form.q)).is_zero());
            for b in &basis {
                assert!(span.contains_vec(&a.bracket(b).flatten()));
            }
        }
    }

    #[test]
    fn closed_model_is_hodge_tate_on_both_sides() {
        let m = g2_closed_model().unwrap();
        assert!(m.v.is_hodge_tate());
        assert!(m.adjoint.is_hodge_tate());
        assert_eq!(m.adjoint.total(), 14);
        assert_eq!(m.adjoint.get(0, 0), 2);
    }
}
