use crate::bigrading::Bigrading;
use crate::error::{Error, Result};
use crate::hodge::{Filtration, HodgeDatum};
use crate::linalg::GaussianRational;

use super::datum::LmhsDatum;

/// `F^p_∞ = ⊕_{q ≤ n−p} I^{•,q}`, the limit of `exp(iyN) F` as `y → ∞`.
///
/// On an `N`-string the limit keeps the bottom of the string, so on a
/// two-node string `I^{1,1} → I^{0,0}` of weight one the step `F^1_∞` is
/// `I^{0,0}`.
pub fn reduced_limit(b: &Bigrading, n: i64) -> Result<Filtration> {
    if !b.is_r_split() {
        return Err(Error::NonRSplit);
    }
    let dim = b.ambient_dim();
    let qs = b.nodes().iter().map(|node| node.q);
    let (qlo, qhi) = (qs.clone().min().unwrap_or(0), qs.max().unwrap_or(-1));
    if qhi < qlo {
        return Ok(Filtration::new(dim, 0, vec![]));
    }
    Ok(Filtration::from_graded(dim, n - qhi, n - qlo, |p| b.sum_where(|_, q| q == n - p)))
}

/// Postconditions of [`reduced_limit`]: `Q(F^p_∞, F^{n−p+1}_∞) = 0` and
/// `exp(N) F_∞ = F_∞`.
pub fn reduced_limit_violations(l: &LmhsDatum, f_inf: &Filtration) -> Result<Vec<String>> {
    let mut out = HodgeDatum::new(l.weight(), l.q().clone(), f_inf.clone()).isotropy_violations();
    let t = l.n.nilpotent_exp(&GaussianRational::one())?;
    if f_inf.apply(&t) != *f_inf {
        out.push("exp(N) does not fix F_inf".to_string());
    }
    Ok(out)
}

/// Every node has `p = q`.
pub fn is_hodge_tate(b: &Bigrading) -> bool {
    b.is_hodge_tate()
}
