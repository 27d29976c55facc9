use serde::Serialize;

use crate::hodge::HodgeNumbers;
use crate::linalg::{GaussianRational, MatrixGQ};
use crate::report::Report;

use super::minimal::MinimalKind;

/// The three lists of root-vector normal forms for `N` on a period domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NormalFormFamily {
    /// Odd weight, `d = 2c`, `Q` symplectic.
    Symplectic,
    /// Even weight, root vectors of `so(2c)` (also used when `d = 2c + 1`).
    Orthogonal,
    /// Even weight, `d = 2c + 1`: the root vectors through `e_d`.
    OrthogonalOdd,
}

/// A normal-form nilpotent with its label in terms of `e^i_j = e_j ⊗ e^i`
/// (1-based indices).
#[derive(Clone, Debug)]
pub struct NormalForm {
    pub family: NormalFormFamily,
    pub label: String,
    pub n: MatrixGQ,
}

/// Outcome of checking one normal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalFormCheck {
    pub label: String,
    pub in_algebra: bool,
    pub rank: usize,
    /// Smallest `k` with `N^k = 0`.
    pub nilpotency: Option<usize>,
    pub kind: Option<MinimalKind>,
}

/// The standard form in the normal-form basis: `Q(e_i, e_{c+i}) = 1` and
/// `Q(e_{c+i}, e_i) = ∓1` (`−` for odd weight), plus `Q(e_d, e_d) = 1` when
/// `d` is odd.
pub fn normal_form_q(weight: i64, d: usize) -> MatrixGQ {
    let c = d / 2;
    let back = if weight % 2 == 0 { 1 } else { -1 };
    let mut q = MatrixGQ::zeros(d, d);
    for i in 0..c {
        q[(i, c + i)] = GaussianRational::one();
        q[(c + i, i)] = GaussianRational::from_int(back);
    }
    if d % 2 == 1 {
        q[(d - 1, d - 1)] = GaussianRational::one();
    }
    q
}

/// `Σ s · e^{from}_{to}` (1-based indices: `e_from ↦ s·e_to`).
fn elementary(d: usize, terms: &[(usize, usize, i64)]) -> MatrixGQ {
    let mut m = MatrixGQ::zeros(d, d);
    for &(from, to, s) in terms {
        let cur = m[(to - 1, from - 1)].clone();
        m[(to - 1, from - 1)] = &cur + &GaussianRational::from_int(s);
    }
    m
}

/// Every nonzero, non-semisimple normal form for weight parity `weight` and
/// dimension `d`. Forms `e^i_i − e^{c+i}_{c+i}` are Cartan elements and are
/// skipped, as are forms that vanish identically (`i = j` with a minus sign).
pub fn normal_forms(weight: i64, d: usize) -> Vec<NormalForm> {
    let c = d / 2;
    let mut out = Vec::new();
    let mut push = |family, label: String, terms: &[(usize, usize, i64)]| {
        let n = elementary(d, terms);
        if !n.is_zero() {
            out.push(NormalForm { family, label, n });
        }
    };
    if weight % 2 != 0 {
        let f = NormalFormFamily::Symplectic;
        for i in 1..=c {
            for j in 1..=c {
                if i != j {
                    push(f, format!("e^{i}_{j} - e^{}_{}", c + j, c + i), &[(i, j, 1), (c + j, c + i, -1)]);
                }
                push(f, format!("e^{}_{j} + e^{}_{i}", c + i, c + j), &[(c + i, j, 1), (c + j, i, 1)]);
                push(f, format!("e^{i}_{} + e^{j}_{}", c + j, c + i), &[(i, c + j, 1), (j, c + i, 1)]);
            }
            push(f, format!("e^{i}_{}", c + i), &[(i, c + i, 1)]);
            push(f, format!("e^{}_{i}", c + i), &[(c + i, i, 1)]);
        }
        return out;
    }
    let f = NormalFormFamily::Orthogonal;
    for i in 1..=c {
        for j in 1..=c {
            if i != j {
                push(f, format!("e^{i}_{j} - e^{}_{}", c + j, c + i), &[(i, j, 1), (c + j, c + i, -1)]);
            }
            push(f, format!("e^{}_{j} - e^{}_{i}", c + i, c + j), &[(c + i, j, 1), (c + j, i, -1)]);
            push(f, format!("e^{i}_{} - e^{j}_{}", c + j, c + i), &[(i, c + j, 1), (j, c + i, -1)]);
        }
    }
    if d % 2 == 1 {
        let f = NormalFormFamily::OrthogonalOdd;
        for i in 1..=c {
            push(f, format!("e^{d}_{i} - e^{}_{d}", c + i), &[(d, i, 1), (c + i, d, -1)]);
            push(f, format!("e^{d}_{} - e^{i}_{d}", c + i), &[(d, c + i, 1), (i, d, -1)]);
        }
    }
    out
}

pub fn check_normal_form(q: &MatrixGQ, f: &NormalForm) -> NormalFormCheck {
    let skew = &f.n.transpose().mul(q).add(&q.mul(&f.n));
    let nilpotency = f.n.nilpotency_index();
    let kind = match nilpotency {
        Some(2) => Some(MinimalKind::I),
        Some(3) => Some(MinimalKind::II),
        _ => None,
    };
    NormalFormCheck { label: f.label.clone(), in_algebra: skew.is_zero(), rank: f.n.rank(), nilpotency, kind }
}

/// Symmetric Hodge vectors of weight `1 ≤ n ≤ max_weight` with
/// `h^{n,0} ≥ 1` and total dimension at most `max_dim`.
pub fn period_domains(max_dim: usize, max_weight: i64) -> Vec<HodgeNumbers> {
    fn extend(prefix: &mut Vec<usize>, len: usize, budget: usize, odd: bool, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let last = prefix.len() + 1 == len;
        // Every entry but the middle one of an even weight is counted twice.
        let weight = if last && !odd { 1 } else { 2 };
        let lo = usize::from(prefix.is_empty());
        for x in lo..=budget / weight {
            prefix.push(x);
            extend(prefix, len, budget - weight * x, odd, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for n in 1..=max_weight {
        let odd = n % 2 != 0;
        let mut halves = Vec::new();
        extend(&mut Vec::new(), (n / 2 + 1) as usize, max_dim, odd, &mut halves);
        for half in halves {
            let mut h = half.clone();
            h.extend(half.iter().rev().skip(usize::from(!odd)));
            out.push(HodgeNumbers::new(h).expect("symmetric by construction"));
        }
    }
    out
}

/// Checks every normal form on every period domain of
/// [`period_domains`]`(max_dim, max_weight)`: membership in the algebra of
/// `Q`, `rank ≤ 2`, `N³ = 0`, the two-step forms being of kind I, the
/// three-step forms having `N² ≠ 0`, rank two, even weight and `h^{m,m}`
/// odd.
pub fn basic_boundary_exhaustion(max_dim: usize, max_weight: i64) -> Report {
    let mut r = Report::new();
    let mut checked = 0usize;
    let mut three_step = 0usize;
    let mut violations = Vec::new();
    for h in period_domains(max_dim, max_weight) {
        let d = h.dim();
        let q = normal_form_q(h.n, d);
        for f in normal_forms(h.n, d) {
            let c = check_normal_form(&q, &f);
            checked += 1;
            let ctx = format!("h={:?} {}", h.h, c.label);
            if !c.in_algebra {
                violations.push(format!("{ctx}: not in the algebra of Q"));
            }
            if c.rank > 2 {
                violations.push(format!("{ctx}: rank {}", c.rank));
            }
            match c.kind {
                None => violations.push(format!("{ctx}: nilpotency {:?}", c.nilpotency)),
                Some(MinimalKind::I) if f.family == NormalFormFamily::OrthogonalOdd => {
                    violations.push(format!("{ctx}: expected N^2 != 0"))
                }
                Some(MinimalKind::II) => {
                    three_step += 1;
                    let m = h.n / 2;
                    if f.family != NormalFormFamily::OrthogonalOdd
                        || c.rank != 2
                        || h.n % 2 != 0
                        || h.get(m, m) % 2 != 1
                    {
                        violations.push(format!("{ctx}: three-step form outside odd h^(m,m)"));
                    }
                }
                _ => {}
            }
        }
    }
    r.push_violations(
        "basic_boundary.normal_forms",
        &format!("{checked} forms checked, {three_step} three-step"),
        violations,
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_small_period_domains() {
        let ds = period_domains(3, 2);
        let hs: Vec<Vec<usize>> = ds.iter().map(|h| h.h.clone()).collect();
        assert!(hs.contains(&vec![1, 1]));
        assert!(hs.contains(&vec![1, 1, 1]));
        assert!(hs.contains(&vec![1, 0, 1]));
        assert!(!hs.contains(&vec![0, 1, 0]));
        assert!(hs.iter().all(|h| h.iter().sum::<usize>() <= 3));
    }

    #[test]
    fn form_counts() {
        // sp(4), c = 2: two forms with i != j, four of each symmetric\n        // shape, and two each of e^i_(c+i), e^(c+i)_i (listed with repeats).
        assert_eq!(normal_forms(1, 4).len(), 2 + 4 + 4 + 4);
        assert!(normal_forms(2, 5).iter().any(|f| f.family == NormalFormFamily::OrthogonalOdd));
    }

    #[test]
    fn exhaustion_passes_small() {
        let r = basic_boundary_exhaustion(5, 2);
        assert!(r.passed(), "{:?}", r.first_failure());
    }
}
