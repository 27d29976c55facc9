use serde::Serialize;

use crate::error::{Error, Result};

use super::grading::GradingElement;
use super::system::RootSystem;

/// Complex conjugation `σ` and Cartan involution `θ` acting on roots, as
/// integer matrices on simple-root coordinates (columns are images of the
/// simple roots).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionDatum {
    pub sigma: Vec<Vec<i64>>,
    pub theta: Vec<Vec<i64>>,
}

fn apply(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

fn scalar(rank: usize, s: i64) -> Vec<Vec<i64>> {
    (0..rank).map(|i| (0..rank).map(|j| if i == j { s } else { 0 }).collect()).collect()
}

fn negate(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.iter().map(|x| -x).collect()).collect()
}

impl InvolutionDatum {
    /// `θ = −σ`, the relation `−α = θ ᾱ`.
    pub fn from_sigma(sigma: Vec<Vec<i64>>) -> Self {
        let theta = negate(&sigma);
        InvolutionDatum { sigma, theta }
    }

    /// Compact Cartan: every root imaginary (`σ = −1`, `θ = 1`).
    pub fn compact(rank: usize) -> Self {
        InvolutionDatum::from_sigma(scalar(rank, -1))
    }

    /// Split Cartan: every root real (`σ = 1`, `θ = −1`).
    pub fn split(rank: usize) -> Self {
        InvolutionDatum::from_sigma(scalar(rank, 1))
    }

    /// Cayley transform of the compact Cartan in the root `γ`:
    /// `σ = −s_γ`, `θ = s_γ`.
    pub fn cayley(rs: &RootSystem, gamma: &[i64]) -> Self {
        InvolutionDatum::from_sigma(negate(&rs.reflection_matrix(gamma)))
    }

    pub fn conj(&self, root: &[i64]) -> Vec<i64> {
        apply(&self.sigma, root)
    }

    pub fn cartan(&self, root: &[i64]) -> Vec<i64> {
        apply(&self.theta, root)
    }

    /// `σ² = θ² = 1`, `σθ = θσ`, both permute the roots and `θσ = −1`.
    pub fn violations(&self, rs: &RootSystem) -> Vec<String> {
        let mut out = Vec::new();
        for i in 0..rs.rank {
            let e = rs.simple_root(i);
            if self.conj(&self.conj(&e)) != e {
                out.push("sigma is not an involution".to_string());
            }
            if self.cartan(&self.cartan(&e)) != e {
                out.push("theta is not an involution".to_string());
            }
            if self.conj(&self.cartan(&e)) != self.cartan(&self.conj(&e)) {
                out.push("sigma and theta do not commute".to_string());
            }
            let neg: Vec<i64> = e.iter().map(|x| -x).collect();
            if self.cartan(&self.conj(&e)) != neg {
                out.push("theta(conj alpha) != -alpha".to_string());
            }
        }
        for r in &rs.roots {
            if !rs.is_root(&self.conj(r)) || !rs.is_root(&self.cartan(r)) {
                out.push(format!("involutions do not preserve the root {r:?}"));
                break;
            }
        }
        out.dedup();
        out
    }

    pub fn check(&self, rs: &RootSystem) -> Result<()> {
        let v = self.violations(rs);
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InconsistentInvolutions(v.join("; ")))
        }
    }
}

/// Root counts attached to the real orbit through the point with grading
/// element `L`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitDims {
    /// Real dimension of the `G_R`-orbit, `|Δ(O)|`.
    pub dim_r_orbit: usize,
    /// Real dimension of the `K_R`-orbit.
    pub dim_kr_orbit: usize,
    /// Complex dimension of the compact dual, `#{α(L) > 0}`.
    pub dim_c_dual: usize,
    /// `|Δ(≥0,≥0)^×|`, `|Δ(+,−)|`, `|Δ(−,+)|`.
    pub nonneg: usize,
    pub plus_minus: usize,
    pub minus_plus: usize,
}

/// `(α(L), ᾱ(L))` for every root.
fn bidegrees(rs: &RootSystem, l: &GradingElement, inv: &InvolutionDatum) -> Result<Vec<(i64, i64)>> {
    rs.roots
        .iter()
        .map(|r| Ok((l.eval_root_int(r)?, l.eval_root_int(&inv.conj(r))?)))
        .collect()
}

/// Orbit dimensions from root counts.
///
/// `Δ(O) = Δ \ Δ(≤0,≤0)` where a root `α` has coordinates
/// `(α(L), ᾱ(L))`. Each root of `Δ(O)` contributes one real dimension to
/// `g_R / (p ∩ p̄)_R` (`α` and `ᾱ` lie in `Δ(O)` together and span a real
/// plane, a real root spans a real line). The `K_R`-orbit has dimension
/// `dim k − dim(k ∩ p ∩ p̄)`: one per compact imaginary root with
/// `α(L) ≠ 0`, and one per `θ`-orbit `{α, θα}` (`θα ≠ α`) outside
/// `Δ(0,0)`. An imaginary root is compact when `α(L)` is even.
pub fn orbit_dims(rs: &RootSystem, l: &GradingElement, inv: &InvolutionDatum) -> Result<OrbitDims> {
    inv.check(rs)?;
    let bideg = bidegrees(rs, l, inv)?;
    let mut d = OrbitDims {
        dim_r_orbit: 0,
        dim_kr_orbit: 0,
        dim_c_dual: 0,
        nonneg: 0,
        plus_minus: 0,
        minus_plus: 0,
    };
    let mut complex_pairs = 0usize;
    for (r, &(a, b)) in rs.roots.iter().zip(&bideg) {
        if a > 0 {
            d.dim_c_dual += 1;
        }
        let in_o = !(a <= 0 && b <= 0);
        if in_o {
            d.dim_r_orbit += 1;
            if a >= 0 && b >= 0 {
                d.nonneg += 1;
            }
        }
        if a > 0 && b < 0 {
            d.plus_minus += 1;
        }
        if a < 0 && b > 0 {
            d.minus_plus += 1;
        }
        let imaginary = inv.cartan(r) == *r;
        if imaginary {
            if a != 0 && a % 2 == 0 {
                d.dim_kr_orbit += 1;
            }
        } else if !(a == 0 && b == 0) {
            complex_pairs += 1;
        }
    }
    d.dim_kr_orbit += complex_pairs / 2;
    Ok(d)
}

/// The closed-orbit criterion: every `α ∈ Δ(−,+)` is imaginary (`θα = α`)
/// and compact (`α(L)` even).
pub fn closed_orbit_criterion(rs: &RootSystem, l: &GradingElement, inv: &InvolutionDatum) -> Result<bool> {
    inv.check(rs)?;
    let bideg = bidegrees(rs, l, inv)?;
    Ok(rs
        .roots
        .iter()
        .zip(&bideg)
        .filter(|(_, &(a, b))| a < 0 && b > 0)
        .all(|(r, &(a, _))| inv.cartan(r) == *r && a % 2 == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::system::{build_root_system, TypeLetter};

    #[test]
    fn open_orbit_is_twice_the_dual() {
        let rs = build_root_system(TypeLetter::G, 2).unwrap();
        let l = GradingElement::from_ints(&[1, 1]);
        let d = orbit_dims(&rs, &l, &InvolutionDatum::compact(2)).unwrap();
        assert_eq!(d.dim_r_orbit, 2 * d.dim_c_dual);
    }

    #[test]
    fn g2_split_closed_orbit() {
        let rs = build_root_system(TypeLetter::G, 2).unwrap();
        let l = GradingElement::from_ints(&[1, 1]);
        let inv = InvolutionDatum::split(2);
        let d = orbit_dims(&rs, &l, &inv).unwrap();
        assert_eq!((d.dim_r_orbit, d.dim_kr_orbit), (6, 6));
        assert!(closed_orbit_criterion(&rs, &l, &inv).unwrap());
        let codim1 = InvolutionDatum::cayley(&rs, &[0, 1]);
        assert!(!closed_orbit_criterion(&rs, &l, &codim1).unwrap());
    }

    #[test]
    fn siegel_open_orbit_has_no_compact_directions() {
        // sp(4) with α_2 long: the Siegel grading L_2 has α(L) ∈ {0, ±1}, so
        // no compact root lies outside the isotropy.
        let rs = build_root_system(TypeLetter::C, 2).unwrap();
        let l = GradingElement::from_ints(&[0, 1]);
        let d = orbit_dims(&rs, &l, &InvolutionDatum::compact(2)).unwrap();
        assert_eq!(d.dim_c_dual, 3);
        assert_eq!(d.dim_r_orbit, 6);
        assert_eq!(d.dim_kr_orbit, 0);
    }

    #[test]
    fn inconsistent_involutions_are_rejected() {
        let rs = build_root_system(TypeLetter::A, 2).unwrap();
        let bad = InvolutionDatum { sigma: scalar(2, 1), theta: scalar(2, 1) };
        assert!(matches!(orbit_dims(&rs, &GradingElement::zero(2), &bad), Err(Error::InconsistentInvolutions(_))));
    }
}
