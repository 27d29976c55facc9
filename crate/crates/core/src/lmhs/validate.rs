use crate::error::Result;
use crate::hodge::{Filtration, HodgeDatum};
use crate::linalg::{GaussianRational, MatrixGQ, QuotientMap, Subspace};
use crate::report::Report;

use super::datum::LmhsDatum;
use super::splitting::{deligne_splitting, n_type_violations};
use super::weight::weight_filtration;

/// Sign `ε_k` in `Q_k(u, v) = ε_k Q(u, N^k v)`.
///
/// With real `N`, `Q`-skew, the Hodge–Riemann relations on the primitive
/// pieces are satisfied by every nilpotent orbit with `ε_k = +1` under the
/// Weil-form convention `i^{p−q} Q(u, ū) > 0` used throughout this crate
/// (a string `v, Nv, …, N^k v` with `v ∈ I^{p,q}` pairs through
/// `Q(v, N^k v̄)` and the factor `i^{p−q}` already absorbs the parity of
/// `k`). Alternating choices are rejected by the atomic Hodge–Tate blocks.
pub fn epsilon(_k: i64) -> i64 {
    1
}

/// Primitive pieces `Gr_{c+k,prim} = ker(N^{k+1} : Gr_{c+k} → Gr_{c−k−2})`
/// for `k = 0 ..= half_width`.
///
/// Each entry is the subspace of `V` spanned by the lowest-echelon lifts of
/// a basis of the primitive quotient: the canonical coset representatives
/// modulo `W_{c+k−1}` (their classes, not the vectors, are meaningful).
pub fn primitives(l: &LmhsDatum) -> Vec<(i64, Subspace)> {
    (0..=l.w.half_width())
        .map(|k| {
            let (qm, prim) = primitive_quotient(l, k);
            (k, qm.lift(&prim))
        })
        .collect()
}

/// The quotient map killing `W_{c+k−1}` together with the primitive
/// subspace in quotient coordinates.
pub fn primitive_quotient(l: &LmhsDatum, k: i64) -> (QuotientMap, Subspace) {
    let c = l.center();
    let nk1 = l.n.pow((k + 1) as usize);
    let lift_space = l
        .w
        .get(c + k)
        .intersect(&Subspace::preimage(&nk1, &l.w.get(c - k - 3)));
    let qm = QuotientMap::new(&l.w.get(c + k - 1));
    let prim = qm.project(&lift_space);
    (qm, prim)
}

/// Gram matrix of `Q_k` on the canonical basis of `Gr_{c+k}` (lifted
/// coset representatives).
pub fn qk_form(l: &LmhsDatum, k: i64) -> MatrixGQ {
    qk_form_with(l, k, epsilon)
}

pub fn qk_form_with(l: &LmhsDatum, k: i64, eps: impl Fn(i64) -> i64) -> MatrixGQ {
    let (qm, gr) = l.w.graded(l.center() + k);
    gram_on(l, k, &qm, &gr, eps(k))
}

fn gram_on(l: &LmhsDatum, k: i64, qm: &QuotientMap, space: &Subspace, eps: i64) -> MatrixGQ {
    let lifts: Vec<Vec<GaussianRational>> =
        space.basis_vectors().iter().map(|x| qm.lift_vec(x)).collect();
    let nk = l.n.pow(k as usize);
    let a = MatrixGQ::from_rows(l.dim(), lifts);
    let b = a.mul(&nk.transpose());
    l.hodge.form.gram(&a, &b).scale(&GaussianRational::from_int(eps))
}

/// The polarized Hodge structure induced on `Gr_{c+k,prim}`: coordinates
/// are those of the echelon basis of the primitive quotient, the form is
/// `Q_k` and `F^p` is the image of `F^p ∩ W_{c+k}`.
pub fn primitive_hodge_datum(l: &LmhsDatum, k: i64, eps: impl Fn(i64) -> i64) -> HodgeDatum {
    let (qm, prim) = primitive_quotient(l, k);
    let gram = gram_on(l, k, &qm, &prim, eps(k));
    let wk = l.w.get(l.center() + k);
    let f = l.f();
    let r = prim.dim();
    let lo = f.lo() - 1;
    let steps: Vec<Subspace> = (lo..=f.hi().max(lo))
        .map(|p| {
            let img = qm.project(&f.get(p).intersect(&wk)).intersect(&prim);
            Subspace::from_vectors(r, img.basis_vectors().iter().map(|v| prim.coords(v)).collect())
        })
        .collect();
    HodgeDatum::new(l.center() + k, gram, Filtration::new(r, lo, steps))
}

/// The nilpotent-orbit validator with the default `ε_k`.
pub fn validate_lmhs(l: &LmhsDatum) -> Report {
    validate_lmhs_with(l, epsilon)
}

/// The nilpotent-orbit validator with a caller-supplied sign convention.
///
/// Clauses: `form`, `filtration`, `structure.*`, `a.weight_filtration`,
/// `lefschetz`, `b.graded_hodge`, `c.n_type`, `d.polarization`.
pub fn validate_lmhs_with(l: &LmhsDatum, eps: impl Fn(i64) -> i64 + Copy) -> Report {
    let mut r = Report::new();
    let pure = l.hodge.validate();
    for id in ["form", "filtration"] {
        if let Some(c) = pure.get(id) {
            r.push(id, c.pass, c.message.clone());
        }
    }
    let structure = l.structure_violations();
    for id in ["structure.real", "structure.nilpotent", "structure.skew", "structure.griffiths"] {
        let v: Vec<String> =
            structure.iter().filter(|(i, _)| *i == id).map(|(_, m)| m.clone()).collect();
        r.push_violations(id, "ok", v);
    }
    if !r.passed() {
        for id in ["a.weight_filtration", "lefschetz", "b.graded_hodge", "c.n_type", "d.polarization"] {
            r.push(id, false, "skipped: structural invariants fail");
        }
        return r;
    }

    match weight_filtration(&l.n, l.center()) {
        Ok(w) if w == l.w => r.push("a.weight_filtration", true, "W = W(N)"),
        Ok(_) => r.push("a.weight_filtration", false, "W differs from the weight filtration of N"),
        Err(e) => r.push("a.weight_filtration", false, e.to_string()),
    }
    r.push_violations(
        "lefschetz",
        "N^k: Gr_{c+k} -> Gr_{c-k} is bijective",
        l.w.defining_violations(&l.n),
    );
    r.push_violations(
        "b.graded_hodge",
        "F induces a Hodge structure of weight k on every Gr_k",
        graded_hodge_violations(l),
    );
    match deligne_splitting(l) {
        Ok(b) => r.push_violations("c.n_type", "N I^{p,q} in I^{p-1,q-1}", n_type_violations(&b, &l.n)),
        Err(e) => r.push("c.n_type", false, e.to_string()),
    }
    r.push_violations(
        "d.polarization",
        "Q_k polarizes every primitive piece",
        polarization_violations(l, eps),
    );
    r
}

/// `F^p Gr_k ⊕ conj F^{k−p+1} Gr_k = Gr_k` for all `p`.
fn graded_hodge_violations(l: &LmhsDatum) -> Vec<String> {
    let mut out = Vec::new();
    let Some((lo, hi)) = l.w.range() else { return out };
    let f = l.f();
    for k in lo..=hi {
        let (qm, gr) = l.w.graded(k);
        if gr.is_zero() {
            continue;
        }
        let wk = l.w.get(k);
        let induced = |p: i64| qm.project(&f.get(p).intersect(&wk));
        for p in f.lo() - 1..=f.hi() + 1 {
            let a = induced(p);
            let b = induced(k - p + 1).conj();
            if a.dim() + b.dim() != gr.dim() || !a.intersect(&b).is_zero() {
                out.push(format!("Gr_{k}: F^{p} + conj F^{} is not a direct sum", k - p + 1));
            }
        }
    }
    out
}

fn polarization_violations(l: &LmhsDatum, eps: impl Fn(i64) -> i64 + Copy) -> Vec<String> {
    let mut out = Vec::new();
    for k in 0..=l.w.half_width() {
        let datum = primitive_hodge_datum(l, k, eps);
        if datum.dim == 0 {
            continue;
        }
        let rep = datum.validate();
        for c in rep.failures() {
            out.push(format!("k={k}: {}: {}", c.id, c.message));
        }
    }
    out
}

/// Checks the pure structure `exp(iyN) F` at every sample `y`; one clause
/// `y=<y>` per sample.
pub fn disc_sample(l: &LmhsDatum, ys: &[GaussianRational]) -> Result<Report> {
    let mut r = Report::new();
    for y in ys {
        let g = l.n.nilpotent_exp(&y.mul_i())?;
        let fy = l.f().apply(&g);
        let datum = HodgeDatum::new(l.weight(), l.q().clone(), fy);
        let rep = datum.validate();
        let id = format!("y={y}");
        match rep.first_failure() {
            None => r.push(id, true, "exp(iyN)F is a polarized Hodge structure"),
            Some(c) => r.push(id, false, format!("{}: {}", c.id, c.message)),
        }
    }
    Ok(r)
}
