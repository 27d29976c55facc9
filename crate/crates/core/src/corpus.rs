//! The invariant corpus: every constructor output in a bounded range, run
//! through every module invariant.
//!
//! Cases are minimal-degeneration witnesses for all symmetric `h` of weight
//! `1..=4` with entries at most two, Hodge–Tate constructions for every
//! gate-passing `h` with `dim V ≤ 8`, and principal-nilpotent orbits for
//! parameters up to four. The seed fixes the (shuffled) case order, so the
//! first failing invariant reported is deterministic; cases are checked in
//! parallel.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bigrading::Bigrading;
use crate::degen::{
    ht_construct, ht_gate, minimal_types, minimal_witness, period_closed_check, period_domains,
    principal_characteristic_vector, principal_lmhs, cp_orb_check, MinimalKind, MinimalType,
    PrincipalFamily,
};
use crate::error::Result;
use crate::hodge::HodgeNumbers;
use crate::json::{lmhs_to_json, parse_datum};
use crate::linalg::GaussianRational;
use crate::lmhs::{
    adjoint_lmhs, deligne_splitting, diagonal_levi, disc_sample, reconstructs, reduced_limit,
    reduced_limit_violations, validate_lmhs_with, epsilon, LmhsDatum,
};
use crate::report::Report;

pub const DEFAULT_SEED: u64 = 0;
pub const DISC_SAMPLES: [i64; 3] = [1, 2, 10];

/// Which constructor produced a case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CaseKind {
    Minimal(String),
    HodgeTate,
    Principal(String, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    pub h: Vec<usize>,
    pub kind: CaseKind,
}

impl Case {
    pub fn label(&self) -> String {
        match &self.kind {
            CaseKind::Minimal(t) => format!("minimal {t} h={:?}", self.h),
            CaseKind::HodgeTate => format!("hodge-tate h={:?}", self.h),
            CaseKind::Principal(f, s) => format!("principal {f}({s})"),
        }
    }
}

/// Deliberate defects used to check that the corpus notices them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mutation {
    #[default]
    None,
    /// Validate with `ε_k = −1` for every `k ≥ 1`.
    EpsilonFlip,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub case: String,
    pub report: Report,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub seed: u64,
    pub cases: usize,
    pub invariants: usize,
    pub pass: bool,
    /// `"<case>: <invariant id>"` of the first failure in case order.
    pub first_failure: Option<String>,
    pub results: Vec<CaseResult>,
}

impl CorpusReport {
    pub fn summary_json(&self) -> serde_json::Value {
        serde_json::json!({
            "seed": self.seed,
            "cases": self.cases,
            "invariants": self.invariants,
            "pass": self.pass,
            "first_failure": self.first_failure,
        })
    }
}

fn symmetric_vectors(n: i64, max_entry: usize) -> Vec<Vec<usize>> {
    let half = (n as usize) / 2 + 1;
    let mut out = vec![vec![]];
    for _ in 0..half {
        out = out.into_iter().flat_map(|p: Vec<usize>| (0..=max_entry).map(move |e| [p.clone(), vec![e]].concat())).collect();
    }
    out.into_iter()
        .map(|mut v| {
            let mirror: Vec<usize> = v.iter().rev().skip(if n % 2 == 0 { 1 } else { 0 }).copied().collect();
            v.extend(mirror);
            v
        })
        .filter(|v| v.iter().sum::<usize>() >= 1)
        .collect()
}

/// The full, unshuffled case list.
pub fn corpus_cases() -> Vec<Case> {
    let mut cases = Vec::new();
    for n in 1..=4 {
        for h in symmetric_vectors(n, 2) {
            let hn = HodgeNumbers::new(h.clone()).expect("symmetric by construction");
            for t in minimal_types(&hn) {
                cases.push(Case { h: h.clone(), kind: CaseKind::Minimal(t.label()) });
            }
        }
    }
    for hn in period_domains(8, 7).into_iter().filter(ht_gate) {
        cases.push(Case { h: hn.h, kind: CaseKind::HodgeTate });
    }
    let principal: [(PrincipalFamily, &[usize]); 4] = [
        (PrincipalFamily::Sp, &[1, 2, 3, 4]),
        (PrincipalFamily::SoOdd, &[1, 2, 3, 4]),
        (PrincipalFamily::SoEvenMm, &[2, 4]),
        (PrincipalFamily::SoEvenM2m, &[2, 4]),
    ];
    for (family, sizes) in principal {
        for &s in sizes {
            cases.push(Case { h: vec![], kind: CaseKind::Principal(family.name().to_string(), s) });
        }
    }
    cases
}

fn find_minimal_type(h: &HodgeNumbers, label: &str) -> Option<MinimalType> {
    minimal_types(h).into_iter().find(|t| t.label() == label)
}

fn build(case: &Case) -> Result<(LmhsDatum, Option<MinimalType>)> {
    match &case.kind {
        CaseKind::Minimal(label) => {
            let h = HodgeNumbers::new(case.h.clone())?;
            let t = find_minimal_type(&h, label).expect("label comes from minimal_types");
            Ok((minimal_witness(&t, &h)?, Some(t)))
        }
        CaseKind::HodgeTate => Ok((ht_construct(&HodgeNumbers::new(case.h.clone())?)?, None)),
        CaseKind::Principal(family, size) => {
            Ok((principal_lmhs(family.parse().expect("known family"), *size)?, None))
        }
    }
}

/// `conj I^{p,q} ⊆ I^{q,p} ⊕ ⊕_{r<q, s<p} I^{r,s}`, with equality of the
/// leading term when the splitting is real.
fn conjugation_violations(b: &Bigrading) -> Vec<String> {
    let mut out = Vec::new();
    for node in b.nodes() {
        let (p, q) = (node.p, node.q);
        let target = b.sum_where(|r, s| (r, s) == (q, p) || (r < q && s < p));
        if !target.contains(&node.space.conj()) {
            out.push(format!("conj I^{{{p},{q}}} escapes I^{{{q},{p}}} mod lower terms"));
        }
        if b.get(q, p).dim() != node.space.dim() {
            out.push(format!("i^{{{p},{q}}} != i^{{{q},{p}}}"));
        }
    }
    out
}

/// `N^k : I^{p,q} → I^{p−k,q−k}` is an isomorphism for `k = p + q − c > 0`,
/// and every string steps by `(−1, −1)`.
fn n_string_violations(l: &LmhsDatum, b: &Bigrading) -> Vec<String> {
    let c = l.center();
    let mut out = Vec::new();
    for node in b.nodes() {
        let (p, q) = (node.p, node.q);
        let step = node.space.apply(&l.n);
        if !b.get(p - 1, q - 1).contains(&step) {
            out.push(format!("N I^{{{p},{q}}} not in I^{{{},{}}}", p - 1, q - 1));
        }
        let k = p + q - c;
        if k > 0 {
            let img = node.space.apply(&l.n.pow(k as usize));
            if img != b.get(p - k, q - k) {
                out.push(format!("N^{k}: I^{{{p},{q}}} -> I^{{{},{}}} is not onto", p - k, q - k));
            }
            if img.dim() != node.space.dim() {
                out.push(format!("N^{k} is not injective on I^{{{p},{q}}}"));
            }
        }
    }
    out
}

fn check_case(case: &Case, mutation: Mutation) -> Report {
    let mut r = Report::new();
    let (l, minimal) = match build(case) {
        Ok(x) => x,
        Err(e) => {
            r.push("construct", false, e.to_string());
            return r;
        }
    };
    r.push("construct", true, "built");

    let eps = move |k: i64| match mutation {
        Mutation::EpsilonFlip if k >= 1 => -1,
        _ => epsilon(k),
    };
    let validation = validate_lmhs_with(&l, eps);
    let lmhs_ok = validation.passed();
    r.extend_prefixed("lmhs.", validation);
    if !lmhs_ok {
        return r;
    }

    let ys: Vec<GaussianRational> = DISC_SAMPLES.iter().map(|&y| GaussianRational::from_int(y)).collect();
    match disc_sample(&l, &ys) {
        Ok(rep) => r.extend_prefixed("disc_sample.", rep),
        Err(e) => r.push("disc_sample", false, e.to_string()),
    }

    let b = match deligne_splitting(&l) {
        Ok(b) => b,
        Err(e) => {
            r.push("deligne.splitting", false, e.to_string());
            return r;
        }
    };
    r.push("deligne.reconstruction", reconstructs(&b, l.f(), &l.w), "I^{p,q} rebuilds W and F");
    r.push_violations("lefschetz", "N^k: Gr_{c+k} -> Gr_{c-k} is an isomorphism", l.w.lefschetz_violations(&l.n));
    r.push_violations("n_string", "strings step by (-1,-1) and N^k is an isomorphism", n_string_violations(&l, &b));
    r.push_violations("r_split.conjugation", "conj I^{p,q} = I^{q,p} mod lower terms", conjugation_violations(&b));

    if b.is_r_split() {
        match reduced_limit(&b, l.weight()).and_then(|f| reduced_limit_violations(&l, &f)) {
            Ok(v) => r.push_violations("reduced_limit", "F_inf is isotropic and exp(N)-fixed", v),
            Err(e) => r.push("reduced_limit", false, e.to_string()),
        }
    } else {
        r.push("reduced_limit", true, "not R-split; reduced limit not formed");
    }

    let dims = b.dims();
    match adjoint_lmhs(&l) {
        Ok(a) => {
            let ig = a.i_g.dims();
            r.push(
                "adjoint.hodge_tate",
                dims.is_hodge_tate() == ig.is_hodge_tate(),
                format!("V Hodge-Tate: {}, g Hodge-Tate: {}", dims.is_hodge_tate(), ig.is_hodge_tate()),
            );
            match diagonal_levi(&a) {
                Ok(_) => r.push("diagonal_levi", true, "bracket-closed, Hodge-Tate, contains N"),
                Err(e) => r.push("diagonal_levi", false, e.to_string()),
            }
            if dims.is_hodge_tate() {
                r.extend_prefixed("hodge_tate.", cp_orb_check(&ig));
            }
        }
        Err(e) => r.push("adjoint", false, e.to_string()),
    }

    match (&case.kind, minimal) {
        (CaseKind::Minimal(_), Some(t)) => {
            r.push("minimal.i_table", dims == t.i_table, format!("splitting {:?}", dims.triples()));
            let (rank, index) = (l.n.rank(), l.n.nilpotency_index());
            // A kind-I type on the middle row (`q_o = p_o + 1`) is a single
            // 2-string; otherwise two conjugate 2-strings or one 3-string.
            let (want_rank, want_index) = match t.kind {
                MinimalKind::I if t.q_o == t.p_o + 1 => (1, 2),
                MinimalKind::I => (2, 2),
                MinimalKind::II => (2, 3),
            };
            r.push(
                "minimal.normal_form",
                rank == want_rank && index == Some(want_index),
                format!("rank {rank}, nilpotency {index:?} (expected rank {want_rank}, nilpotency {want_index})"),
            );
        }
        (CaseKind::HodgeTate, _) => {
            r.push("hodge_tate", dims.is_hodge_tate(), "I^{p,q} = 0 for p != q");
            match period_closed_check(&dims, l.weight()) {
                Ok(rep) => r.push(
                    "period_closed.hodge_tate",
                    rep.clause_passed("period_closed.hodge_tate"),
                    "Hodge-Tate passes the closed-orbit check",
                ),
                Err(e) => r.push("period_closed.hodge_tate", false, e.to_string()),
            }
        }
        (CaseKind::Principal(family, size), _) => {
            let family: PrincipalFamily = family.parse().expect("known family");
            match principal_characteristic_vector(family, *size) {
                Ok(v) => r.push(
                    "principal.characteristic_vector",
                    v.iter().all(|&x| x == 2),
                    format!("{v:?}"),
                ),
                Err(e) => r.push("principal.characteristic_vector", false, e.to_string()),
            }
        }
        _ => {}
    }

    let text = lmhs_to_json(&l).to_string();
    match parse_datum(&text).and_then(|raw| raw.lmhs()) {
        Ok(back) => {
            let same = back.q() == l.q() && back.n == l.n && back.f() == l.f() && back.center() == l.center();
            let revalidates = validate_lmhs_with(&back, eps) == validate_lmhs_with(&l, eps);
            r.push("json.round_trip", same && revalidates, "re-parses and re-validates identically");
        }
        Err(e) => r.push("json.round_trip", false, e.to_string()),
    }
    r
}

/// Runs the corpus: cases shuffled by `seed`, truncated to `limit`.
pub fn verify_corpus(seed: u64, limit: Option<usize>, mutation: Mutation) -> CorpusReport {
    let mut cases = corpus_cases();
    cases.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    if let Some(limit) = limit {
        cases.truncate(limit);
    }
    let results: Vec<CaseResult> = cases
        .par_iter()
        .map(|c| CaseResult { case: c.label(), report: check_case(c, mutation) })
        .collect();
    let first_failure = results
        .iter()
        .find_map(|res| res.report.first_failure().map(|f| format!("{}: {}", res.case, f.id)));
    CorpusReport {
        seed,
        cases: results.len(),
        invariants: results.iter().map(|res| res.report.clauses.len()).sum(),
        pass: first_failure.is_none(),
        first_failure,
        results,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_vectors_are_symmetric_and_nonzero() {
        let v = symmetric_vectors(2, 2);
        assert_eq!(v.len(), 8);
        assert!(v.iter().all(|h| h.len() == 3 && h[0] == h[2]));
        assert_eq!(symmetric_vectors(1, 2).len(), 2);
    }

    #[test]
    fn corpus_covers_every_constructor() {
        let cases = corpus_cases();
        assert!(cases.iter().any(|c| matches!(c.kind, CaseKind::Minimal(_))));
        assert!(cases.iter().any(|c| c.kind == CaseKind::HodgeTate && c.h.iter().sum::<usize>() == 8));
        assert_eq!(cases.iter().filter(|c| matches!(c.kind, CaseKind::Principal(..))).count(), 12);
    }

    #[test]
    fn empty_corpus_passes_vacuously() {
        let r = verify_corpus(7, Some(0), Mutation::None);
        assert!(r.pass);
        assert_eq!(r.cases, 0);
    }

    #[test]
    fn small_corpus_passes_and_is_deterministic() {
        let a = verify_corpus(3, Some(12), Mutation::None);
        assert!(a.pass, "{:?}", a.first_failure);
        let b = verify_corpus(3, Some(12), Mutation::None);
        assert_eq!(a.summary_json(), b.summary_json());
    }

    #[test]
    fn epsilon_flip_breaks_polarization() {
        let r = verify_corpus(0, Some(20), Mutation::EpsilonFlip);
        assert!(!r.pass);
        assert!(r.first_failure.unwrap().ends_with("lmhs.d.polarization"));
    }
}
