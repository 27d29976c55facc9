use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{GaussianRational, MatrixGQ};
use crate::lmhs::{deligne_splitting, LmhsDatum};
use crate::roots::{classical_characteristic_vector, TypeLetter};

use super::blocks::{assemble, unit, Block};

/// Families of Hodge–Tate orbits whose nilpotent is principal in the
/// symplectic or orthogonal algebra of `(V, Q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PrincipalFamily {
    /// `sp(2n)`: a single `2n`-string, weight `2n − 1`.
    Sp,
    /// `so(2m+1)`: a single `(2m+1)`-string, weight `2m`.
    SoOdd,
    /// `so(2m)`: a `(2m−1)`-string plus a fixed vector, weight `2m − 2`.
    SoEvenMm,
    /// `so(2m+2)`: a `(2m+1)`-string plus a fixed vector, weight `2m`.
    SoEvenM2m,
}

impl PrincipalFamily {
    pub const ALL: [PrincipalFamily; 4] =
        [PrincipalFamily::Sp, PrincipalFamily::SoOdd, PrincipalFamily::SoEvenMm, PrincipalFamily::SoEvenM2m];

    pub fn name(self) -> &'static str {
        match self {
            PrincipalFamily::Sp => "sp",
            PrincipalFamily::SoOdd => "so_odd",
            PrincipalFamily::SoEvenMm => "so_even_mm",
            PrincipalFamily::SoEvenM2m => "so_even_m2m",
        }
    }

    /// The Lie type of the algebra `N` is principal in, for parameter `size`.
    pub fn lie_type(self, size: usize) -> (TypeLetter, usize) {
        match self {
            PrincipalFamily::Sp => (TypeLetter::C, size),
            PrincipalFamily::SoOdd => (TypeLetter::B, size),
            PrincipalFamily::SoEvenMm => (TypeLetter::D, size),
            PrincipalFamily::SoEvenM2m => (TypeLetter::D, size + 1),
        }
    }
}

impl fmt::Display for PrincipalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PrincipalFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PrincipalFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnsupportedType(format!("unknown principal family '{s}'")))
    }
}

/// A string `v, Nv, …, N^{len−1}v` of weight `w = len − 1` with
/// `Q(N^a v, N^b v) = sign · (−1)^a δ_{a+b,w}`, `N^a v` at filtration index
/// `w − a`, optionally preceded by a fixed vector `u` with `Q(u, u) = 1`
/// at index `w/2`.
fn string_with_fixed(len: usize, sign: i64, fixed: bool) -> Block {
    let off = usize::from(fixed);
    let dim = len + off;
    let w = len as i64 - 1;
    let mut q = MatrixGQ::zeros(dim, dim);
    let mut n = MatrixGQ::zeros(dim, dim);
    let mut generators = Vec::with_capacity(dim);
    if fixed {
        q[(0, 0)] = GaussianRational::one();
        generators.push((w / 2, unit(dim, 0)));
    }
    for a in 0..len {
        let s = if a % 2 == 0 { sign } else { -sign };
        q[(off + a, off + len - 1 - a)] = GaussianRational::from_int(s);
        if a + 1 < len {
            n[(off + a + 1, off + a)] = GaussianRational::one();
        }
        generators.push((w - a as i64, unit(dim, off + a)));
    }
    Block { q, n, generators }
}

fn even_parameter(family: PrincipalFamily, m: usize) -> Result<()> {
    if m == 0 || m % 2 == 1 {
        return Err(Error::ParityViolation(format!("{family} needs a positive even m, got m = {m}")));
    }
    Ok(())
}

/// The principal-nilpotent Hodge–Tate orbit of the given family.
///
/// * `Sp`, size `n ≥ 1`: `V = R^{2n}` with basis `N^a v`,
///   `Q(N^a v, N^b v) = (−1)^a δ_{a+b,2n−1}`, weight `2n − 1`;
/// * `SoOdd`, size `m ≥ 1`: `V = R^{2m+1}`, `(−1)^a δ_{a+b,2m}`, weight `2m`;
/// * `SoEvenMm`, even `m ≥ 2`: basis `w, v, …, N^{2m−2}v`, `Q(w,w) = 1`,
///   `Q(N^a v, N^b v) = (−1)^{m+a} δ_{a+b,2m−2}`, weight `2m − 2`;
/// * `SoEvenM2m`, even `m ≥ 2`: basis `w, v, …, N^{2m}v`, `Q(w,w) = 1`,
///   `(−1)^{m+a} δ_{a+b,2m}`, weight `2m`.
///
/// In every case `F^p = span{N^a v : a ≤ weight − p}` plus `w` from the
/// middle index down.
pub fn principal_lmhs(family: PrincipalFamily, size: usize) -> Result<LmhsDatum> {
    if size == 0 {
        return Err(Error::ParityViolation(format!("{family} needs a positive size")));
    }
    let m_sign = |m: usize| if m % 2 == 0 { 1 } else { -1 };
    let (block, weight) = match family {
        PrincipalFamily::Sp => (string_with_fixed(2 * size, 1, false), 2 * size as i64 - 1),
        PrincipalFamily::SoOdd => (string_with_fixed(2 * size + 1, 1, false), 2 * size as i64),
        PrincipalFamily::SoEvenMm => {
            even_parameter(family, size)?;
            (string_with_fixed(2 * size - 1, m_sign(size), true), 2 * size as i64 - 2)
        }
        PrincipalFamily::SoEvenM2m => {
            even_parameter(family, size)?;
            (string_with_fixed(2 * size + 1, m_sign(size), true), 2 * size as i64)
        }
    };
    assemble(weight, &[block])
}

/// The characteristic vector of the neutral element `Y` of the orbit,
/// read off from its Deligne splitting (`Y = 2p − n` on `I^{p,p}`).
pub fn principal_characteristic_vector(family: PrincipalFamily, size: usize) -> Result<Vec<i64>> {
    let l = principal_lmhs(family, size)?;
    let n = l.weight();
    let b = deligne_splitting(&l)?;
    let eigenvalues: Vec<i64> = b
        .dims()
        .triples()
        .into_iter()
        .flat_map(|(p, q, d)| std::iter::repeat(p + q - n).take(d))
        .collect();
    classical_characteristic_vector(family.lie_type(size).0, &eigenvalues)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lmhs::validate_lmhs;

    #[test]
    fn families_validate_with_expected_hodge_numbers() {
        let cases = [
            (PrincipalFamily::Sp, 1, 1, vec![1, 1]),
            (PrincipalFamily::Sp, 3, 5, vec![1; 6]),
            (PrincipalFamily::SoOdd, 1, 2, vec![1, 1, 1]),
            (PrincipalFamily::SoOdd, 3, 6, vec![1; 7]),
            (PrincipalFamily::SoEvenMm, 2, 2, vec![1, 2, 1]),
            (PrincipalFamily::SoEvenM2m, 2, 4, vec![1, 1, 2, 1, 1]),
        ];
        for (fam, size, weight, h) in cases {
            let l = principal_lmhs(fam, size).unwrap();
            assert_eq!(l.weight(), weight);
            let rep = validate_lmhs(&l);
            assert!(rep.passed(), "{fam} {size}: {:?}", rep.first_failure());
            let dims = deligne_splitting(&l).unwrap().dims();
            let diag: Vec<usize> = (0..=weight).map(|p| dims.get(p, p)).collect();
            assert_eq!(diag, h, "{fam} {size}");
            let cv = principal_characteristic_vector(fam, size).unwrap();
            assert!(cv.iter().all(|&c| c == 2), "{fam} {size}: {cv:?}");
            assert_eq!(cv.len(), fam.lie_type(size).1);
        }
    }

    #[test]
    fn odd_orthogonal_parameter_is_rejected() {
        assert!(matches!(principal_lmhs(PrincipalFamily::SoEvenMm, 3), Err(Error::ParityViolation(_))));
        assert!(matches!(principal_lmhs(PrincipalFamily::SoEvenM2m, 1), Err(Error::ParityViolation(_))));
        assert_eq!("so_odd".parse::<PrincipalFamily>().unwrap(), PrincipalFamily::SoOdd);
    }
}
