use serde::Serialize;

use crate::bigrading::BigradingDims;
use crate::error::{Error, Result};
use crate::hodge::{model_phs, HodgeNumbers};
use crate::lmhs::LmhsDatum;
use crate::report::Report;

use super::blocks::{assemble, Block};
use super::hodge_tate::atomic_block;

/// An `N`-string: primitive top node `(p, q)` in weight `p + q ≥ center`,
/// running down to `(p − len + 1, q − len + 1)`, with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NString {
    pub top: (i64, i64),
    pub len: usize,
    pub mult: usize,
}

/// `i^{p,q}_prim = i^{p,q} − i^{p+1,q+1}` for `p + q ≥ center` (the
/// lowering map `I^{p+1,q+1} → I^{p,q}` is injective there).
pub fn primitive_dims(dims: &BigradingDims, center: i64) -> BigradingDims {
    BigradingDims::from_triples(
        dims.triples()
            .into_iter()
            .filter(|&(p, q, _)| p + q >= center)
            .map(|(p, q, d)| (p, q, d.saturating_sub(dims.get(p + 1, q + 1)))),
    )
}

/// The `N`-string decomposition of the bigrading of a limiting mixed Hodge
/// structure centred at `center`.
pub fn n_strings(dims: &BigradingDims, center: i64) -> Vec<NString> {
    primitive_dims(dims, center)
        .triples()
        .into_iter()
        .map(|(p, q, mult)| NString { top: (p, q), len: (p + q - center + 1) as usize, mult })
        .collect()
}

/// Necessary conditions on the adjoint bigrading `I_g` for a nilpotent
/// orbit to reach a closed orbit:
///
/// 1. `I^{p,q}_g = 0` when `p` and `q` have opposite signs and `|p| ≠ |q|`;
/// 2. `I^{p,−p}_g = 0` for odd `|p| ≥ 3`;
/// 3. `I^{p,q}_g = 0` for `p + q ≠ 0` and `|p − q| > 2`;
/// 4. every `N`-string through `q − p = ±2` has length `≡ 3 (mod 4)`.
pub fn cp_orb_check(ig: &BigradingDims) -> Report {
    let mut r = Report::new();
    let nodes = ig.support();
    let quadrant: Vec<String> = nodes
        .iter()
        .filter(|&&(p, q)| p * q < 0 && p.abs() != q.abs())
        .map(|(p, q)| format!("node ({p},{q})"))
        .collect();
    r.push_violations("cp_orb.clause1.quadrant", "no mixed-sign off-antidiagonal nodes", quadrant);
    let antidiagonal: Vec<String> = nodes
        .iter()
        .filter(|&&(p, q)| p + q == 0 && p.abs() >= 3 && p.abs() % 2 == 1)
        .map(|(p, q)| format!("node ({p},{q})"))
        .collect();
    r.push_violations("cp_orb.clause2.odd_antidiagonal", "no odd antidiagonal nodes beyond |p| = 1", antidiagonal);
    let band: Vec<String> = nodes
        .iter()
        .filter(|&&(p, q)| p + q != 0 && (p - q).abs() > 2)
        .map(|(p, q)| format!("node ({p},{q})"))
        .collect();
    r.push_violations("cp_orb.clause3.band", "off the antidiagonal every node has |p - q| <= 2", band);
    let mod4: Vec<String> = n_strings(ig, 0)
        .into_iter()
        .filter(|s| (s.top.1 - s.top.0).abs() == 2 && s.len % 4 != 3)
        .map(|s| format!("string from ({},{}) has length {}", s.top.0, s.top.1, s.len))
        .collect();
    r.push_violations("cp_orb.clause3.mod4", "strings through q - p = ±2 have length 3 mod 4", mod4);
    r
}


/// Checks the bigrading of a limiting mixed Hodge structure of weight `n` on
/// a period domain against the constraints for reaching a closed orbit.
///
/// Hodge–Tate bigradings pass directly. Otherwise `n` must be even
/// (`OddWeightNonHT`) and, with `m = n/2` and `k = p + q − n`:
///
/// * (a) for `k ≠ 0` the primitive pieces are Hodge–Tate;
/// * (b) every `k ≠ 0` carrying primitives has `k ≡ 2 (mod 4)`;
/// * (c) the middle row's primitives sit only at `(m±1, m∓1)`, and do;
/// * the diagram is the diagonal plus exactly `(m−1, m+1)`, `(m+1, m−1)`.
///
/// Passing is a necessary condition, reported as "consistent with closed
/// orbit".
pub fn period_closed_check(dims: &BigradingDims, n: i64) -> Result<Report> {
    let mut r = Report::new();
    if dims.is_hodge_tate() {
        r.push("period_closed.hodge_tate", true, "Hodge-Tate");
        return Ok(r);
    }
    if n % 2 != 0 {
        return Err(Error::OddWeightNonHT(n));
    }
    let m = n / 2;
    let prim = primitive_dims(dims, n);
    let clause_a: Vec<String> = prim
        .triples()
        .into_iter()
        .filter(|&(p, q, _)| p + q != n && p != q)
        .map(|(p, q, d)| format!("k={}: primitive ({p},{q}) of dim {d}", p + q - n))
        .collect();
    r.push_violations("period_closed.clause_a.graded_hodge_tate", "graded primitives off the middle row are Hodge-Tate", clause_a);
    let mut ks: Vec<i64> = prim.triples().into_iter().map(|(p, q, _)| p + q - n).filter(|&k| k != 0).collect();
    ks.dedup();
    let clause_b: Vec<String> =
        ks.iter().filter(|&&k| k.rem_euclid(4) != 2).map(|k| format!("primitives at k={k}")).collect();
    r.push_violations("period_closed.clause_b.k_mod4", "every nonzero k carrying primitives is 2 mod 4", clause_b);
    let middle: Vec<(i64, i64, usize)> = prim.triples().into_iter().filter(|&(p, q, _)| p + q == n).collect();
    let mut clause_c: Vec<String> = middle
        .iter()
        .filter(|&&(p, _, _)| (p - m).abs() != 1)
        .map(|(p, q, d)| format!("middle-row primitive ({p},{q}) of dim {d}"))
        .collect();
    if !middle.iter().any(|&(p, _, _)| (p - m).abs() == 1) {
        clause_c.push(format!("no primitives at ({},{})", m - 1, m + 1));
    }
    r.push_violations("period_closed.clause_c.middle_row", "middle-row primitives only at (m±1, m∓1)", clause_c);
    let shape: Vec<String> = dims
        .support()
        .into_iter()
        .filter(|&(p, q)| p != q && !((p - m).abs() == 1 && p + q == n))
        .map(|(p, q)| format!("node ({p},{q})"))
        .collect();
    r.push_violations("period_closed.shape", "diagonal plus (m-1,m+1), (m+1,m-1)", shape);
    if r.passed() {
        r.push("period_closed.verdict", true, "consistent with closed orbit");
    }
    Ok(r)
}

fn string_plus_model(n: i64, h: &[usize]) -> Result<LmhsDatum> {
    let rest = HodgeNumbers::new(h.to_vec())?;
    assemble(n, &[atomic_block(n, 0, 1), Block::pure(&model_phs(&rest)?)])
}

/// A weight-2 non-Hodge–Tate orbit of the closed-orbit shape: a 3-string
/// `(2,2) → (1,1) → (0,0)` plus a pure piece of type `(1,0,1)`, so
/// `h = (2,1,2)`, `i^{2,0}_prim = i^{2,2}_prim = 1`.
pub fn period_closed_weight_two() -> Result<LmhsDatum> {
    string_plus_model(2, &[1, 0, 1])
}

/// A weight-4 orbit with primitives at `k = 4`: a 5-string plus a pure
/// piece of type `(0,1,0,1,0)`.
pub fn period_closed_k4_violation() -> Result<LmhsDatum> {
    string_plus_model(4, &[0, 1, 0, 1, 0])
}

/// The adjoint diagram of the closed-orbit figure, in true `(p, q)`
/// coordinates (all nodes of dimension one).
pub fn c_orb_figure_pattern() -> BigradingDims {
    let columns: [(i64, i64, i64); 9] =
        [(0, -2, 2), (1, 0, 3), (2, 0, 4), (3, 1, 4), (4, 2, 4), (-1, -3, 0), (-2, -4, 0), (-3, -4, -1), (-4, -4, -2)];
    let mut d = BigradingDims::new();
    for (p, lo, hi) in columns {
        for q in lo..=hi {
            d.add(p, q, 1);
        }
    }
    for p in [-4, -2, -1, 1, 2, 4] {
        d.add(p, -p, 1);
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degen::hodge_tate::ht_construct;
    use crate::lmhs::{adjoint_lmhs, deligne_splitting, validate_lmhs};

    #[test]
    fn figure_pattern_passes_and_injection_fails() {
        let fig = c_orb_figure_pattern();
        assert_eq!(fig.get(0, 0), 1);
        assert!(fig.is_conj_symmetric());
        let r = cp_orb_check(&fig);
        assert!(r.passed(), "{:?}", r.first_failure());
        let strings = n_strings(&fig, 0);
        assert!(strings.iter().any(|s| s.top == (2, 4) && s.len == 7));
        let mut bad = fig.clone();
        bad.add(3, -3, 1);
        let r = cp_orb_check(&bad);
        assert!(!r.clause_passed("cp_orb.clause2.odd_antidiagonal"));
    }

    #[test]
    fn hodge_tate_adjoint_passes() {
        let l = ht_construct(&HodgeNumbers::new(vec![1, 2, 1]).unwrap()).unwrap();
        let a = adjoint_lmhs(&l).unwrap();
        assert!(cp_orb_check(&a.i_g.dims()).passed());
        let r = period_closed_check(&deligne_splitting(&l).unwrap().dims(), 2).unwrap();
        assert!(r.clause_passed("period_closed.hodge_tate"));
    }

    #[test]
    fn weight_two_instance_is_consistent() {
        let l = period_closed_weight_two().unwrap();
        assert!(validate_lmhs(&l).passed());
        let dims = deligne_splitting(&l).unwrap().dims();
        let prim = primitive_dims(&dims, 2);
        assert_eq!(prim.get(2, 0) + prim.get(2, 2), 2);
        let r = period_closed_check(&dims, 2).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
        assert_eq!(r.get("period_closed.verdict").unwrap().message, "consistent with closed orbit");
    }

    #[test]
    fn k4_strings_violate_mod4_clause() {
        let l = period_closed_k4_violation().unwrap();
        assert!(validate_lmhs(&l).passed());
        let r = period_closed_check(&deligne_splitting(&l).unwrap().dims(), 4).unwrap();
        assert!(!r.clause_passed("period_closed.clause_b.k_mod4"));
        assert!(r.clause_passed("period_closed.clause_c.middle_row"));
    }

    #[test]
    fn odd_weight_non_hodge_tate_is_flagged() {
        let d = BigradingDims::from_triples([(1, 0, 1), (0, 1, 1)]);
        assert_eq!(period_closed_check(&d, 1), Err(Error::OddWeightNonHT(1)));
    }
}
