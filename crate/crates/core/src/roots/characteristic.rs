use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::grading::GradingElement;
use super::system::RootSystem;

/// Moves `Y` into the dominant chamber by simple reflections, always
/// reflecting in the smallest index `i` with `α_i(Y) < 0`; returns the
/// values `α_i(Y)` of the dominant representative.
pub fn normalize_dominant(rs: &RootSystem, y: &GradingElement) -> Result<Vec<i64>> {
    let mut c = y.int_coords().ok_or(Error::NotNormalizable)?;
    // Each reflection strictly increases the height pairing with ρ, so the
    // descent is finite; the bound is a guard against malformed input.
    let bound = 4 * rs.roots.len() + 16;
    for _ in 0..bound {
        let Some(i) = (0..rs.rank).find(|&i| c[i] < 0) else {
            return Ok(c);
        };
        let ci = c[i];
        for j in 0..rs.rank {
            c[j] -= rs.cartan[j][i] * ci;
        }
    }
    Err(Error::NotNormalizable)
}

/// `(α_1(Y), …, α_r(Y))` for the dominant conjugate of `Y`; every entry
/// must lie in `{0, 1, 2}`.
pub fn characteristic_vector(rs: &RootSystem, y: &GradingElement) -> Result<Vec<i64>> {
    let c = normalize_dominant(rs, y)?;
    if let Some(&bad) = c.iter().find(|&&x| !(0..=2).contains(&x)) {
        return Err(Error::EntryOutOfRange(bad));
    }
    Ok(c)
}

/// The Jacobson–Morosov parabolic: `Σ = {α_i : α_i(Y) = 0}` (0-based) and
/// whether `Y` is even.
pub fn jm_parabolic(rs: &RootSystem, y: &GradingElement) -> Result<(Vec<usize>, bool)> {
    let c = characteristic_vector(rs, y)?;
    let sigma = (0..rs.rank).filter(|&i| c[i] == 0).collect();
    let even = c.iter().all(|x| x % 2 == 0);
    Ok((sigma, even))
}

/// `j ↦ dim g_j(Y)` including the Cartan at `j = 0`.
pub fn y_levels(rs: &RootSystem, chars: &[i64]) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    out.insert(0, rs.rank);
    for r in &rs.roots {
        let v: i64 = r.iter().zip(chars).map(|(a, b)| a * b).sum();
        *out.entry(v).or_insert(0) += 1;
    }
    out
}

/// Necessary condition for `chars` to be the characteristic vector of a
/// nilpotent: `ad N : g_j → g_{j+2}` must be onto for `j ≥ −1`, so
/// `dim g_j ≥ dim g_{j+2}` for all `j ≥ −1`.
pub fn passes_sl2_dimension_test(rs: &RootSystem, chars: &[i64]) -> bool {
    let levels = y_levels(rs, chars);
    let dim = |j: i64| levels.get(&j).copied().unwrap_or(0);
    let top = levels.keys().max().copied().unwrap_or(0);
    (-1..=top).all(|j| dim(j) >= dim(j + 2))
}

/// Even characteristic vectors `≠ 0` passing [`passes_sl2_dimension_test`].
pub fn even_jm_candidates(rs: &RootSystem) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let total = 1usize << rs.rank;
    for mask in 1..total {
        let chars: Vec<i64> = (0..rs.rank).map(|i| if mask >> i & 1 == 1 { 2 } else { 0 }).collect();
        if passes_sl2_dimension_test(rs, &chars) {
            out.push(chars);
        }
    }
    out.sort();
    out
}

/// Characteristic vector of a classical neutral element from its
/// eigenvalues on the standard representation.
///
/// The eigenvalues come in `±` pairs; the largest `⌊d/2⌋` of them (sorted
/// decreasingly) are the coordinates `t_1 ≥ … ≥ t_r` and the simple roots
/// are `t_i − t_{i+1}` together with `2 t_r` (`C`), `t_r` (`B`) or
/// `t_{r−1} + t_r` (`D`).
pub fn classical_characteristic_vector(letter: super::TypeLetter, eigenvalues: &[i64]) -> Result<Vec<i64>> {
    use super::TypeLetter::*;
    let mut e = eigenvalues.to_vec();
    e.sort_unstable_by(|a, b| b.cmp(a));
    let r = e.len() / 2;
    let t = &e[..r];
    if r == 0 {
        return Ok(vec![]);
    }
    let mut c: Vec<i64> = (0..r.saturating_sub(1)).map(|i| t[i] - t[i + 1]).collect();
    match letter {
        C => c.push(2 * t[r - 1]),
        B => c.push(t[r - 1]),
        D if r >= 2 => c.push(t[r - 2] + t[r - 1]),
        other => return Err(Error::UnsupportedType(format!("{other}{r}"))),
    }
    if let Some(&bad) = c.iter().find(|&&x| !(0..=2).contains(&x)) {
        return Err(Error::EntryOutOfRange(bad));
    }
    Ok(c)
}
