use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Cartan type letters supported by [`build_root_system`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    G,
    F,
}

impl TypeLetter {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(TypeLetter::A),
            "B" => Ok(TypeLetter::B),
            "C" => Ok(TypeLetter::C),
            "D" => Ok(TypeLetter::D),
            "G" => Ok(TypeLetter::G),
            "F" => Ok(TypeLetter::F),
            other => Err(Error::UnsupportedType(other.to_string())),
        }
    }
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A reduced root system given by its Cartan matrix.
///
/// Conventions: `cartan[i][j] = <α_i, α_j^∨>`; roots are integer vectors in
/// simple-root coordinates; `B_r` has `α_r` short, `C_r` has `α_r` long,
/// `G_2` has `α_1` short, `F_4` has `α_1, α_2` long.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub letter: TypeLetter,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// All roots, positive ones first (sorted by height, then
    /// lexicographically), followed by their negatives in the same order.
    pub roots: Vec<Vec<i64>>,
    /// `(α_i, α_i) / 2`, normalised so that the short roots have value 1.
    pub half_lengths: Vec<Rational64>,
    /// Fundamental weights `ω_i` in simple-root coordinates (rows of `A^{-1}`).
    pub fundamental_weights: Vec<Vec<Rational64>>,
    index: HashMap<Vec<i64>, usize>,
}

/// Builds the root system of the given type and rank.
pub fn build_root_system(letter: TypeLetter, rank: usize) -> Result<RootSystem> {
    let cartan = cartan_matrix(letter, rank)?;
    Ok(RootSystem::from_cartan(letter, cartan))
}

fn cartan_matrix(letter: TypeLetter, r: usize) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::UnsupportedType(format!("{letter}{r}"));
    let chain = |r: usize| {
        let mut a = vec![vec![0i64; r]; r];
        for i in 0..r {
            a[i][i] = 2;
            if i + 1 < r {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        a
    };
    Ok(match letter {
        TypeLetter::A if r >= 1 => chain(r),
        TypeLetter::B if r >= 2 => {
            let mut a = chain(r);
            a[r - 2][r - 1] = -2;
            a
        }
        TypeLetter::C if r >= 2 => {
            let mut a = chain(r);
            a[r - 1][r - 2] = -2;
            a
        }
        TypeLetter::D if r >= 3 => {
            let mut a = chain(r);
            a[r - 2][r - 1] = 0;
            a[r - 1][r - 2] = 0;
            a[r - 3][r - 1] = -1;
            a[r - 1][r - 3] = -1;
            a
        }
        TypeLetter::G if r == 2 => vec![vec![2, -1], vec![-3, 2]],
        TypeLetter::F if r == 4 => vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -2, 0],
            vec![0, -1, 2, -1],
            vec![0, 0, -1, 2],
        ],
        _ => return Err(bad()),
    })
}

impl RootSystem {
    pub fn from_cartan(letter: TypeLetter, cartan: Vec<Vec<i64>>) -> Self {
        let rank = cartan.len();
        let half_lengths = half_lengths(&cartan);
        let positive = positive_roots(&cartan);
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let fundamental_weights = inverse_rows(&cartan);
        RootSystem {
            letter,
            rank,
            cartan,
            roots,
            half_lengths,
            fundamental_weights,
            index,
        }
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.letter, self.rank)
    }

    /// Dimension of the Lie algebra: `|Δ| + rank`.
    pub fn dim(&self) -> usize {
        self.roots.len() + self.rank
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots[..self.roots.len() / 2]
    }

    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        v
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(v)
    }

    pub fn root_index(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn height(v: &[i64]) -> i64 {
        v.iter().sum()
    }

    pub fn highest_root(&self) -> Vec<i64> {
        self.positive_roots().last().cloned().unwrap_or_default()
    }

    /// Symmetric form `(β, γ) = Σ β_i γ_j d_j A_ij` with `d_j = (α_j,α_j)/2`.
    pub fn inner(&self, b: &[i64], c: &[i64]) -> Rational64 {
        let mut s = Rational64::zero();
        for i in 0..self.rank {
            if b[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if c[j] != 0 && self.cartan[i][j] != 0 {
                    s += Rational64::from(b[i] * c[j] * self.cartan[i][j]) * self.half_lengths[j];
                }
            }
        }
        s
    }

    pub fn is_long(&self, root: &[i64]) -> bool {
        let max = self.roots.iter().map(|r| self.inner(r, r)).max().unwrap_or_default();
        self.inner(root, root) == max
    }

    /// `<β, γ^∨> = 2(β, γ) / (γ, γ)`; integral for roots.
    pub fn pairing(&self, b: &[i64], c: &[i64]) -> i64 {
        let v = Rational64::from(2) * self.inner(b, c) / self.inner(c, c);
        assert!(v.is_integer(), "non-integral root pairing");
        v.to_integer()
    }

    /// Coordinates `c_j = α_j(γ^∨)` of the coroot of `γ` as a grading element.
    pub fn coroot_grading(&self, gamma: &[i64]) -> Vec<Rational64> {
        (0..self.rank)
            .map(|j| Rational64::from(self.pairing(&self.simple_root(j), gamma)))
            .collect()
    }

    /// Reflection `s_γ(β) = β − <β, γ^∨> γ`.
    pub fn reflect(&self, beta: &[i64], gamma: &[i64]) -> Vec<i64> {
        let k = self.pairing(beta, gamma);
        beta.iter().zip(gamma).map(|(b, g)| b - k * g).collect()
    }

    /// Matrix of `s_γ` acting on simple-root coordinates (columns are the
    /// images of the simple roots).
    pub fn reflection_matrix(&self, gamma: &[i64]) -> Vec<Vec<i64>> {
        let cols: Vec<Vec<i64>> = (0..self.rank).map(|i| self.reflect(&self.simple_root(i), gamma)).collect();
        (0..self.rank).map(|r| (0..self.rank).map(|c| cols[c][r]).collect()).collect()
    }

    /// Sanity invariants: negation closure, Cartan diagonal, expected count.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.roots {
            let neg: Vec<i64> = r.iter().map(|x| -x).collect();
            if !self.is_root(&neg) {
                out.push(format!("{r:?} has no negative"));
            }
        }
        if (0..self.rank).any(|i| self.cartan[i][i] != 2) {
            out.push("Cartan diagonal".into());
        }
        if let Some(expected) = expected_root_count(self.letter, self.rank) {
            if self.roots.len() != expected {
                out.push(format!("{} roots, expected {expected}", self.roots.len()));
            }
        }
        out
    }
}

/// Standard root counts `|Δ|`.
pub fn expected_root_count(letter: TypeLetter, r: usize) -> Option<usize> {
    Some(match letter {
        TypeLetter::A => r * (r + 1),
        TypeLetter::B | TypeLetter::C => 2 * r * r,
        TypeLetter::D => 2 * r * (r - 1),
        TypeLetter::G => 12,
        TypeLetter::F => 48,
    })
}

fn half_lengths(a: &[Vec<i64>]) -> Vec<Rational64> {
    // d_j A_ij = d_i A_ji along every edge of the (connected) diagram.
    let r = a.len();
    let mut d: Vec<Option<Rational64>> = vec![None; r];
    if r == 0 {
        return vec![];
    }
    d[0] = Some(Rational64::from(1));
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..r {
            for j in 0..r {
                if i != j && a[i][j] != 0 {
                    if let (Some(di), None) = (d[i], d[j]) {
                        d[j] = Some(di * Rational64::from(a[j][i]) / Rational64::from(a[i][j]));
                        changed = true;
                    }
                }
            }
        }
    }
    let d: Vec<Rational64> = d.into_iter().map(|x| x.unwrap_or(Rational64::from(1))).collect();
    let min = d.iter().copied().min().unwrap_or(Rational64::from(1));
    d.into_iter().map(|x| x / min).collect()
}

/// Positive roots by the string algorithm: for β positive and α_i simple,
/// `β + α_i` is a root iff `p − <β, α_i^∨> > 0`, where `p` is the largest
/// integer with `β − p α_i` a root.
fn positive_roots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = a.len();
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect();
    all.extend(layer.iter().cloned());
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..r {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..r).map(|j| beta[j] * a[j][i]).sum();
                if p - pair > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !all.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }
    let mut out: Vec<Vec<i64>> = all.into_iter().collect();
    out.sort_by(|x, y| RootSystem::height(x).cmp(&RootSystem::height(y)).then(y.cmp(x)));
    out
}

fn inverse_rows(a: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let r = a.len();
    let mut m: Vec<Vec<Rational64>> = (0..r)
        .map(|i| {
            let mut row: Vec<Rational64> = a[i].iter().map(|&x| Rational64::from(x)).collect();
            row.extend((0..r).map(|j| Rational64::from(i64::from(i == j))));
            row
        })
        .collect();
    for c in 0..r {
        let piv = (c..r).find(|&k| !m[k][c].is_zero()).expect("Cartan matrices are invertible");
        m.swap(c, piv);
        let inv = Rational64::from(1) / m[c][c];
        for x in m[c].iter_mut() {
            *x *= inv;
        }
        for k in 0..r {
            if k != c && !m[k][c].is_zero() {
                let f = m[k][c];
                let pivot_row = m[c].clone();
                for (x, y) in m[k].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    m.into_iter().map(|row| row[r..].to_vec()).collect()
}
