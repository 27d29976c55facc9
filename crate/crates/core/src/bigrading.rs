use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::Subspace;

/// One node `I^{p,q}` of a bigrading together with its subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub p: i64,
    pub q: i64,
    pub space: Subspace,
}

/// A direct-sum decomposition `⊕ I^{p,q}` of `C^ambient` into nonzero
/// pieces, sorted by `(p, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bigrading {
    ambient: usize,
    nodes: Vec<Node>,
}

impl Bigrading {
    /// Drops zero pieces and sorts; directness is the caller's contract and
    /// is checked by [`Bigrading::is_direct`].
    pub fn new(ambient: usize, nodes: impl IntoIterator<Item = (i64, i64, Subspace)>) -> Self {
        let mut nodes: Vec<Node> = nodes
            .into_iter()
            .filter(|(_, _, s)| !s.is_zero())
            .map(|(p, q, space)| {
                assert_eq!(space.ambient_dim(), ambient, "bigrading node ambient");
                Node { p, q, space }
            })
            .collect();
        nodes.sort_by_key(|n| (n.p, n.q));
        Bigrading { ambient, nodes }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn get(&self, p: i64, q: i64) -> Subspace {
        self.nodes
            .iter()
            .find(|n| n.p == p && n.q == q)
            .map(|n| n.space.clone())
            .unwrap_or_else(|| Subspace::zero(self.ambient))
    }

    pub fn dims(&self) -> BigradingDims {
        BigradingDims::from_triples(self.nodes.iter().map(|n| (n.p, n.q, n.space.dim())))
    }

    /// Sum of the pieces selected by `keep`.
    pub fn sum_where(&self, keep: impl Fn(i64, i64) -> bool) -> Subspace {
        Subspace::sum_all(
            self.ambient,
            self.nodes.iter().filter(|n| keep(n.p, n.q)).map(|n| &n.space),
        )
    }

    /// Dimensions add up and the pieces span: the sum is direct and total.
    pub fn is_direct(&self) -> bool {
        let total: usize = self.nodes.iter().map(|n| n.space.dim()).sum();
        total == self.ambient && self.sum_where(|_, _| true).is_full()
    }

    /// `conj I^{p,q} = I^{q,p}` for every node.
    pub fn is_r_split(&self) -> bool {
        self.nodes.iter().all(|n| n.space.conj() == self.get(n.q, n.p))
    }

    pub fn is_hodge_tate(&self) -> bool {
        self.nodes.iter().all(|n| n.p == n.q)
    }

    /// Concatenated node bases, in node order, as rows.
    pub fn adapted_basis(&self) -> Vec<(i64, i64, Vec<crate::GaussianRational>)> {
        self.nodes
            .iter()
            .flat_map(|n| n.space.basis_vectors().into_iter().map(move |v| (n.p, n.q, v)))
            .collect()
    }
}

/// A finite multiset of nodes `(p, q) ↦ dim`, the currency of diagrams and
/// reports. Zero entries are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<[i64; 3]>", into = "Vec<[i64; 3]>")]
pub struct BigradingDims(BTreeMap<(i64, i64), usize>);

impl BigradingDims {
    pub fn new() -> Self {
        BigradingDims::default()
    }

    pub fn from_triples(triples: impl IntoIterator<Item = (i64, i64, usize)>) -> Self {
        let mut d = BigradingDims::new();
        for (p, q, k) in triples {
            d.add(p, q, k);
        }
        d
    }

    /// Nodes listed with multiplicity one each (repeats accumulate).
    pub fn from_nodes(nodes: &[(i64, i64)]) -> Self {
        BigradingDims::from_triples(nodes.iter().map(|&(p, q)| (p, q, 1)))
    }

    pub fn add(&mut self, p: i64, q: i64, k: usize) {
        if k > 0 {
            *self.0.entry((p, q)).or_insert(0) += k;
        }
    }

    /// Subtracts `k` from a node; returns `false` (leaving the node at zero)
    /// when it would go negative.
    pub fn remove(&mut self, p: i64, q: i64, k: usize) -> bool {
        let have = self.get(p, q);
        if have < k {
            self.0.remove(&(p, q));
            return false;
        }
        if have == k {
            self.0.remove(&(p, q));
        } else {
            self.0.insert((p, q), have - k);
        }
        true
    }

    pub fn get(&self, p: i64, q: i64) -> usize {
        self.0.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sorted `(p, q, dim)` triples (p ascending, then q).
    pub fn triples(&self) -> Vec<(i64, i64, usize)> {
        self.0.iter().map(|(&(p, q), &d)| (p, q, d)).collect()
    }

    pub fn support(&self) -> Vec<(i64, i64)> {
        self.0.keys().copied().collect()
    }

    pub fn is_hodge_tate(&self) -> bool {
        self.0.keys().all(|&(p, q)| p == q)
    }

    /// `dim(p,q) = dim(q,p)`.
    pub fn is_conj_symmetric(&self) -> bool {
        self.0.iter().all(|(&(p, q), &d)| self.get(q, p) == d)
    }

    /// `dim(p,q) = dim(−p,−q)`.
    pub fn is_origin_symmetric(&self) -> bool {
        self.0.iter().all(|(&(p, q), &d)| self.get(-p, -q) == d)
    }

    /// `(p,q) ↦ (p + dp, q + dq)`.
    pub fn shifted(&self, dp: i64, dq: i64) -> Self {
        BigradingDims::from_triples(self.triples().into_iter().map(|(p, q, d)| (p + dp, q + dq, d)))
    }

    /// Sum of node dimensions along each weight `p + q`.
    pub fn weight_dims(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for (&(p, q), &d) in &self.0 {
            *out.entry(p + q).or_insert(0) += d;
        }
        out
    }

    /// `p ↦ Σ_q dim(p,q)` — the Hodge numbers of the limiting filtration.
    pub fn p_marginals(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for (&(p, _), &d) in &self.0 {
            *out.entry(p).or_insert(0) += d;
        }
        out
    }

    /// Difference listing for golden comparisons: entries `(p, q, left, right)`
    /// where the two multisets disagree.
    pub fn diff(&self, other: &BigradingDims) -> Vec<(i64, i64, usize, usize)> {
        let mut keys: Vec<(i64, i64)> = self.support();
        keys.extend(other.support());
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|(p, q)| {
                let (a, b) = (self.get(p, q), other.get(p, q));
                (a != b).then_some((p, q, a, b))
            })
            .collect()
    }
}

impl From<Vec<[i64; 3]>> for BigradingDims {
    fn from(v: Vec<[i64; 3]>) -> Self {
        BigradingDims::from_triples(v.into_iter().map(|[p, q, d]| (p, q, d.max(0) as usize)))
    }
}

impl From<BigradingDims> for Vec<[i64; 3]> {
    fn from(d: BigradingDims) -> Self {
        d.triples().into_iter().map(|(p, q, k)| [p, q, k as i64]).collect()
    }
}

impl fmt::Debug for BigradingDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .triples()
            .into_iter()
            .map(|(p, q, d)| if d == 1 { format!("({p},{q})") } else { format!("({p},{q})x{d}") })
            .collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_accumulate_and_sort() {
        let d = BigradingDims::from_nodes(&[(1, 0), (0, 1), (0, 0), (0, 0)]);
        assert_eq!(d.triples(), vec![(0, 0, 2), (0, 1, 1), (1, 0, 1)]);
        assert!(d.is_conj_symmetric());
        assert!(!d.is_hodge_tate());
        assert_eq!(serde_json::to_string(&d).unwrap(), "[[0,0,2],[0,1,1],[1,0,1]]");
    }

    #[test]
    fn empty_bigrading_is_hodge_tate() {
        assert!(Bigrading::new(0, vec![]).is_hodge_tate());
        assert!(BigradingDims::new().is_hodge_tate());
    }
}
