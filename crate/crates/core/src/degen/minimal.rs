use std::fmt;

use serde::Serialize;

use crate::bigrading::BigradingDims;
use crate::error::{Error, Result};
use crate::hodge::{model_phs, HodgeNumbers};
use crate::linalg::{GaussianRational, MatrixGQ};
use crate::lmhs::LmhsDatum;

use super::blocks::{assemble, unit, Block};

/// The two shapes of a minimal degeneration of a period domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MinimalKind {
    /// `N ≠ 0`, `N² = 0`.
    I,
    /// `N² ≠ 0`, `N³ = 0` (even weight only).
    II,
}

impl fmt::Display for MinimalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinimalKind::I => write!(f, "I"),
            MinimalKind::II => write!(f, "II"),
        }
    }
}

/// A minimal degeneration type with its table `i^{p,q} = dim I^{p,q}`.
///
/// Kind I moves one class out of each of `V^{p_o,q_o}` and
/// `V^{p_o+1,q_o−1}` (and their conjugates) into `I^{p_o+1,q_o}` and
/// `I^{p_o,q_o−1}`. Kind II (`n = 2m`) moves one class out of each of
/// `V^{m∓1,m±1}` into `I^{m+1,m+1}` and `I^{m−1,m−1}`; for it `p_o = m − 1`,
/// `q_o = m + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalType {
    pub kind: MinimalKind,
    pub p_o: i64,
    pub q_o: i64,
    pub i_table: BigradingDims,
}

impl MinimalType {
    pub fn label(&self) -> String {
        match self.kind {
            MinimalKind::I => format!("I(p_o={},q_o={})", self.p_o, self.q_o),
            MinimalKind::II => format!("II(m={})", self.p_o + 1),
        }
    }
}

fn hodge_row(h: &HodgeNumbers) -> BigradingDims {
    BigradingDims::from_triples((0..=h.n).map(|p| (p, h.n - p, h.get(p, h.n - p))))
}

/// All minimal degeneration types for Hodge numbers `h`.
///
/// A kind-I type at `p_o < q_o` is listed exactly when the i-table it
/// prescribes is nonnegative: `h^{p_o,q_o} ≥ 1` and `h^{p_o+1,q_o−1} ≥ 1`,
/// with `h^{m,m} ≥ 2` when `p_o + 1 = q_o − 1 = m` (both conjugate strings
/// leave the middle piece) and only `h^{p_o,q_o} ≥ 1` when `q_o = p_o + 1`
/// (the two pieces are conjugate and one string suffices). A kind-II type
/// needs `n = 2m`, `h^{m,m}` odd and `h^{m−1,m+1} ≥ 1`.
pub fn minimal_types(h: &HodgeNumbers) -> Vec<MinimalType> {
    let n = h.n;
    let mut out = Vec::new();
    for p_o in 0..=n {
        let q_o = n - p_o;
        if p_o >= q_o {
            break;
        }
        let mut t = hodge_row(h);
        let ok = if q_o == p_o + 1 {
            t.remove(p_o, q_o, 1) && t.remove(q_o, p_o, 1)
        } else {
            t.remove(p_o, q_o, 1)
                && t.remove(q_o, p_o, 1)
                && t.remove(p_o + 1, q_o - 1, 1)
                && t.remove(q_o - 1, p_o + 1, 1)
        };
        if !ok {
            continue;
        }
        if q_o == p_o + 1 {
            t.add(q_o, q_o, 1);
            t.add(p_o, p_o, 1);
        } else {
            t.add(p_o + 1, q_o, 1);
            t.add(q_o, p_o + 1, 1);
            t.add(p_o, q_o - 1, 1);
            t.add(q_o - 1, p_o, 1);
        }
        out.push(MinimalType { kind: MinimalKind::I, p_o, q_o, i_table: t });
    }
    if n % 2 == 0 && n >= 2 {
        let m = n / 2;
        let mut t = hodge_row(h);
        if h.get(m, m) % 2 == 1 && t.remove(m - 1, m + 1, 1) && t.remove(m + 1, m - 1, 1) {
            t.add(m + 1, m + 1, 1);
            t.add(m - 1, m - 1, 1);
            out.push(MinimalType { kind: MinimalKind::II, p_o: m - 1, q_o: m + 1, i_table: t });
        }
    }
    out
}

fn gq(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_parts(re, 1, im, 1)
}

/// The string block carrying the degeneration: `(block, residual h)`.
fn string_block(t: &MinimalType, h: &HodgeNumbers) -> Result<(Block, Vec<usize>)> {
    let n = h.n;
    let (p_o, q_o) = (t.p_o, t.q_o);
    let mut residual: Vec<usize> = (0..=n).map(|p| t.i_table.get(p, n - p)).collect();
    let sign_n = if n % 2 == 0 { 1 } else { -1 };
    let block = match t.kind {
        MinimalKind::I if q_o == p_o + 1 => {
            // t ∈ I^{q_o,q_o}, Nt ∈ I^{p_o,p_o}; Q(t, Nt) = 1.
            let mut q = MatrixGQ::zeros(2, 2);
            q[(0, 1)] = gq(1, 0);
            q[(1, 0)] = gq(sign_n, 0);
            let mut nm = MatrixGQ::zeros(2, 2);
            nm[(1, 0)] = gq(1, 0);
            Block { q, n: nm, generators: vec![(q_o, unit(2, 0)), (p_o, unit(2, 1))] }
        }
        MinimalKind::I => {
            // Basis x, y, Nx, Ny with u = x + iy ∈ I^{p_o+1,q_o}; the form
            // B(s, t) = Q(s, Nt) is chosen with Q(u, N ū) = c, c = i^{q_o−p_o−1}.
            let (re, im) = match (q_o - p_o - 1).rem_euclid(4) {
                0 => (1, 0),
                1 => (0, 1),
                2 => (-1, 0),
                _ => (0, -1),
            };
            let half = |x: i64| GaussianRational::from_frac(x, 2);
            let b = [[half(re), half(-im)], [half(im), half(re)]];
            let mut q = MatrixGQ::zeros(4, 4);
            for s in 0..2 {
                for u in 0..2 {
                    q[(s, 2 + u)] = b[s][u].clone();
                    q[(2 + u, s)] = &b[s][u] * &gq(sign_n, 0);
                }
            }
            let mut nm = MatrixGQ::zeros(4, 4);
            nm[(2, 0)] = gq(1, 0);
            nm[(3, 1)] = gq(1, 0);
            let u = vec![gq(1, 0), gq(0, 1), gq(0, 0), gq(0, 0)];
            let ubar = vec![gq(1, 0), gq(0, -1), gq(0, 0), gq(0, 0)];
            let nu = vec![gq(0, 0), gq(0, 0), gq(1, 0), gq(0, 1)];
            let nubar = vec![gq(0, 0), gq(0, 0), gq(1, 0), gq(0, -1)];
            Block {
                q,
                n: nm,
                generators: vec![(p_o + 1, u), (q_o, ubar), (p_o, nu), (q_o - 1, nubar)],
            }
        }
        MinimalKind::II => {
            // t, Nt, N²t in I^{m+1,m+1}, I^{m,m}, I^{m−1,m−1}.
            let m = n / 2;
            let mut q = MatrixGQ::zeros(3, 3);
            q[(0, 2)] = gq(1, 0);
            q[(2, 0)] = gq(1, 0);
            q[(1, 1)] = gq(-1, 0);
            let mut nm = MatrixGQ::zeros(3, 3);
            nm[(1, 0)] = gq(1, 0);
            nm[(2, 1)] = gq(1, 0);
            residual[m as usize] = residual[m as usize]
                .checked_sub(1)
                .ok_or_else(|| Error::InfeasibleType(t.label()))?;
            Block {
                q,
                n: nm,
                generators: vec![(m + 1, unit(3, 0)), (m, unit(3, 1)), (m - 1, unit(3, 2))],
            }
        }
    };
    Ok((block, residual))
}

/// An explicit nilpotent orbit realising the minimal type `t`: the string
/// block direct sum a model structure carrying the remaining Hodge numbers.
pub fn minimal_witness(t: &MinimalType, h: &HodgeNumbers) -> Result<LmhsDatum> {
    if !minimal_types(h).contains(t) {
        return Err(Error::InfeasibleType(format!("{} is not a minimal type for h = {:?}", t.label(), h.h)));
    }
    let (block, residual) = string_block(t, h)?;
    let mut blocks = vec![block];
    if residual.iter().any(|&x| x > 0) {
        let rest = HodgeNumbers::new(residual)?;
        blocks.push(Block::pure(&model_phs(&rest)?));
    }
    assemble(h.n, &blocks)
}
