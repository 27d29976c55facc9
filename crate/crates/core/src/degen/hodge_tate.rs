use serde::Serialize;

use crate::error::{Error, Result};
use crate::hodge::HodgeNumbers;
use crate::linalg::{GaussianRational, MatrixGQ};
use crate::lmhs::LmhsDatum;

use super::blocks::{assemble, unit, Block};

/// Multiplicities of the atomic Hodge–Tate blocks `V_{k,d_k}`,
/// `k = 0, …, ⌊n/2⌋`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HtPlan {
    pub n: i64,
    pub d: Vec<usize>,
}

/// `d_k = h^{n−k,k} − h^{n−k+1,k−1}` for `0 ≤ k ≤ ⌊n/2⌋`, as signed
/// integers (negative entries are exactly the gate failures).
fn plan_differences(h: &HodgeNumbers) -> Vec<i64> {
    let n = h.n;
    (0..=n / 2)
        .map(|k| {
            let prev = if k == 0 { 0 } else { h.get(n - k + 1, k - 1) };
            h.get(n - k, k) as i64 - prev as i64
        })
        .collect()
}

/// The Hodge-number gate `h^{n,0} ≤ h^{n−1,1} ≤ … ≤ h^{n−m,m}`.
pub fn ht_gate(h: &HodgeNumbers) -> bool {
    plan_differences(h).iter().all(|&d| d >= 0)
}

/// The atomic decomposition of `h`, or `GateFailed` with the indices `k`
/// at which `h^{n−k,k} < h^{n−k+1,k−1}`.
pub fn ht_plan(h: &HodgeNumbers) -> Result<HtPlan> {
    let diffs = plan_differences(h);
    let failing: Vec<usize> = (0..diffs.len()).filter(|&k| diffs[k] < 0).collect();
    if !failing.is_empty() {
        return Err(Error::GateFailed(failing));
    }
    Ok(HtPlan { n: h.n, d: diffs.into_iter().map(|x| x as usize).collect() })
}

/// The atomic block `V_{k,d}` of weight `n`: basis `e^s_a` (`k ≤ s ≤ n−k`,
/// `1 ≤ a ≤ d`) ordered by `a` then `s`, with `N e^s_a = e^{s−1}_a`
/// (`0` at `s = k`), `Q(e^s_a, e^t_b) = (−1)^{n−k−s} δ_ab δ_{s+t,n}` and
/// `F^p = span{e^s_a : s ≥ p}`.
pub fn atomic_block(n: i64, k: i64, d: usize) -> Block {
    let len = (n - 2 * k + 1) as usize;
    let dim = len * d;
    let idx = |a: usize, s: i64| a * len + (s - k) as usize;
    let mut q = MatrixGQ::zeros(dim, dim);
    let mut nm = MatrixGQ::zeros(dim, dim);
    let mut generators = Vec::with_capacity(dim);
    for a in 0..d {
        for s in k..=n - k {
            let sign = if (n - k - s).rem_euclid(2) == 0 { 1 } else { -1 };
            q[(idx(a, s), idx(a, n - s))] = GaussianRational::from_int(sign);
            if s > k {
                nm[(idx(a, s - 1), idx(a, s))] = GaussianRational::one();
            }
            generators.push((s, unit(dim, idx(a, s))));
        }
    }
    Block { q, n: nm, generators }
}

/// A Hodge–Tate nilpotent orbit with Hodge numbers `h`: the direct sum of
/// the atomic blocks of [`ht_plan`].
pub fn ht_construct(h: &HodgeNumbers) -> Result<LmhsDatum> {
    let plan = ht_plan(h)?;
    let blocks: Vec<Block> = plan
        .d
        .iter()
        .enumerate()
        .filter(|(_, &d)| d > 0)
        .map(|(k, &d)| atomic_block(plan.n, k as i64, d))
        .collect();
    assemble(plan.n, &blocks)
}
