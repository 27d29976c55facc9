use std::collections::BTreeMap;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::bigrading::BigradingDims;
use crate::error::{Error, Result};

use super::system::RootSystem;

/// A semisimple element of the Cartan subalgebra given by its values
/// `α_i(L)` on the simple roots, i.e. coordinates over the dual basis
/// `L_1, …, L_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradingElement {
    pub coords: Vec<Rational64>,
}

impl GradingElement {
    pub fn new(coords: Vec<Rational64>) -> Self {
        GradingElement { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        GradingElement::new(coords.iter().map(|&x| Rational64::from(x)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        GradingElement::new(vec![Rational64::zero(); rank])
    }

    /// `λ(L)` for `λ` in simple-root coordinates.
    pub fn eval(&self, lambda: &[Rational64]) -> Rational64 {
        self.coords.iter().zip(lambda).map(|(c, l)| c * l).sum()
    }

    pub fn eval_root(&self, root: &[i64]) -> Rational64 {
        self.coords.iter().zip(root).map(|(c, &l)| c * Rational64::from(l)).sum()
    }

    /// `α(L)` as an integer, or `NonIntegralGrading`.
    pub fn eval_root_int(&self, root: &[i64]) -> Result<i64> {
        let v = self.eval_root(root);
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(Error::NonIntegralGrading)
        }
    }

    pub fn scaled(&self, k: i64) -> Self {
        GradingElement::new(self.coords.iter().map(|c| c * Rational64::from(k)).collect())
    }

    pub fn sub(&self, other: &GradingElement) -> Self {
        GradingElement::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    /// The values `α_i(L)` as integers, when integral.
    pub fn int_coords(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }
}

/// `L_Σ = Σ_{α_i ∉ Σ} L_i`.
pub fn grading_from_sigma(rs: &RootSystem, sigma: &[usize]) -> GradingElement {
    GradingElement::new(
        (0..rs.rank)
            .map(|i| if sigma.contains(&i) { Rational64::zero() } else { Rational64::one() })
            .collect(),
    )
}

/// `Σ_L = {α_i : α_i(L) = 0}` (0-based indices).
pub fn sigma_from_grading(l: &GradingElement) -> Vec<usize> {
    (0..l.coords.len()).filter(|&i| l.coords[i].is_zero()).collect()
}

/// `ℓ ↦ dim g_ℓ` with `g_ℓ = {ξ : [L, ξ] = ℓ ξ}`; the Cartan sits at `ℓ = 0`.
pub fn l_decomposition(rs: &RootSystem, l: &GradingElement) -> Result<BTreeMap<i64, usize>> {
    let mut out = BTreeMap::new();
    out.insert(0, rs.rank);
    for r in &rs.roots {
        *out.entry(l.eval_root_int(r)?).or_insert(0) += 1;
    }
    out.retain(|_, v| *v > 0);
    Ok(out)
}

/// Roots split by the parity of `α(L)`: `(compact, noncompact)`.
pub fn compactness(rs: &RootSystem, l: &GradingElement) -> Result<(Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    let mut compact = Vec::new();
    let mut noncompact = Vec::new();
    for r in &rs.roots {
        if l.eval_root_int(r)? % 2 == 0 {
            compact.push(r.clone());
        } else {
            noncompact.push(r.clone());
        }
    }
    Ok((compact, noncompact))
}

/// `g^{p,q} = {ξ : [L, ξ] = qξ, [Y, ξ] = (p+q)ξ}`: a root `α` sits at
/// `(α(Y) − α(L), α(L))` and the Cartan at `(0, 0)`.
pub fn adjoint_bigrading(rs: &RootSystem, l: &GradingElement, y: &GradingElement) -> Result<BigradingDims> {
    let mut d = BigradingDims::new();
    d.add(0, 0, rs.rank);
    for r in &rs.roots {
        let (a_l, a_y) = (l.eval_root_int(r)?, y.eval_root_int(r)?);
        d.add(a_y - a_l, a_l, 1);
    }
    Ok(d)
}

/// Weights of a representation, in simple-root coordinates, with
/// multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiset {
    pub weights: Vec<(Vec<Rational64>, usize)>,
}

impl WeightMultiset {
    pub fn dim(&self) -> usize {
        self.weights.iter().map(|(_, m)| m).sum()
    }

    /// The short roots together with the zero weight of multiplicity
    /// `zero_mult`: the 7-dimensional representation of `G_2` (`zero_mult =
    /// 1`) and the 26-dimensional representation of `F_4` (`zero_mult = 2`).
    pub fn short_roots_plus_zero(rs: &RootSystem, zero_mult: usize) -> Self {
        let mut weights: Vec<(Vec<Rational64>, usize)> = rs
            .roots
            .iter()
            .filter(|r| !rs.is_long(r))
            .map(|r| (r.iter().map(|&x| Rational64::from(x)).collect(), 1))
            .collect();
        if zero_mult > 0 {
            weights.push((vec![Rational64::zero(); rs.rank], zero_mult));
        }
        WeightMultiset { weights }
    }

    /// Largest `<λ, γ^∨>` over the weights, for a root `γ`; the `γ`-strings
    /// through the weights have at most this many steps.
    pub fn max_pairing(&self, rs: &RootSystem, gamma: &[i64]) -> Rational64 {
        let g_coroot = rs.coroot_grading(gamma);
        let y = GradingElement::new(g_coroot);
        self.weights.iter().map(|(w, _)| y.eval(w)).max().unwrap_or_default()
    }
}

/// `I^{p,q} = {v : Lv = (q − n/2) v, Yv = (p + q − n) v}`: a weight `λ` sits at
/// `(λ(Y) − λ(L) + n/2, λ(L) + n/2)`.
pub fn rep_bigrading(
    weights: &WeightMultiset,
    l: &GradingElement,
    y: &GradingElement,
    n: i64,
) -> Result<BigradingDims> {
    let shift = Rational64::new(n, 2);
    let mut d = BigradingDims::new();
    for (w, m) in &weights.weights {
        let (lv, yv) = (l.eval(w), y.eval(w));
        let p = yv - lv + shift;
        let q = lv + shift;
        if !p.is_integer() || !q.is_integer() {
            return Err(Error::HalfIntegralityViolation(format!(
                "weight {w:?}: lambda(L) = {lv}, lambda(Y) = {yv} with n = {n}"
            )));
        }
        d.add(p.to_integer(), q.to_integer(), *m);
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::system::{build_root_system, TypeLetter};

    #[test]
    fn sigma_round_trip() {
        let rs = build_root_system(TypeLetter::G, 2).unwrap();
        assert_eq!(grading_from_sigma(&rs, &[0, 1]), GradingElement::zero(2));
        assert_eq!(grading_from_sigma(&rs, &[]), GradingElement::from_ints(&[1, 1]));
        assert_eq!(grading_from_sigma(&rs, &[1]), GradingElement::from_ints(&[1, 0]));
        for s in [vec![], vec![0], vec![1], vec![0, 1]] {
            assert_eq!(sigma_from_grading(&grading_from_sigma(&rs, &s)), s);
        }
    }

    #[test]
    fn l_decomposition_of_zero_is_everything() {
        let rs = build_root_system(TypeLetter::F, 4).unwrap();
        let d = l_decomposition(&rs, &GradingElement::zero(4)).unwrap();
        assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![(0, 52)]);
    }

    #[test]
    fn half_integral_grading_is_rejected() {
        let rs = build_root_system(TypeLetter::A, 1).unwrap();
        let l = GradingElement::new(vec![Rational64::new(1, 2)]);
        assert_eq!(l_decomposition(&rs, &l), Err(Error::NonIntegralGrading));
    }
}
