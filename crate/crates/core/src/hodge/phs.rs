use super::filtration::Filtration;
use crate::error::{Error, Result};
use crate::linalg::{GaussianRational, MatrixGQ, Subspace};
use crate::report::Report;

/// A bilinear form `Q(u, v) = uᵀ Q v` of weight `n`, i.e. `Qᵀ = (−1)ⁿ Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationForm {
    pub weight: i64,
    pub q: MatrixGQ,
}

impl PolarizationForm {
    pub fn new(weight: i64, q: MatrixGQ) -> Self {
        PolarizationForm { weight, q }
    }

    /// Violations of: square, real, nondegenerate, `Qᵀ = (−1)ⁿ Q`.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.q.is_square() {
            out.push("Q is not square".to_string());
            return out;
        }
        if !self.q.is_real() {
            out.push("Q has non-real entries".to_string());
        }
        let expected = if self.weight.rem_euclid(2) == 0 {
            self.q.clone()
        } else {
            self.q.neg()
        };
        if self.q.transpose() != expected {
            out.push(format!("Q^T != (-1)^{} Q", self.weight));
        }
        if self.q.rank() != self.q.rows() {
            out.push("Q is degenerate".to_string());
        }
        out
    }

    /// `Q(u, v)` for column vectors.
    pub fn eval(&self, u: &[GaussianRational], v: &[GaussianRational]) -> GaussianRational {
        let qv = self.q.apply_vec(v);
        let mut acc = GaussianRational::zero();
        for (a, b) in u.iter().zip(&qv) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    /// Gram matrix `A Q Bᵀ` between the rows of `a` and `b`.
    pub fn gram(&self, a: &MatrixGQ, b: &MatrixGQ) -> MatrixGQ {
        a.mul(&self.q).mul(&b.transpose())
    }
}

/// Hodge numbers `h^{n,0}, …, h^{0,n}` of a weight-`n` Hodge structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HodgeNumbers {
    pub n: i64,
    pub h: Vec<usize>,
}

impl HodgeNumbers {
    /// Takes `h` listed as `h^{n,0}, …, h^{0,n}`; the weight is `len − 1`.
    pub fn new(h: Vec<usize>) -> Result<Self> {
        if h.is_empty() {
            return Err(Error::InadmissibleHodgeNumbers("empty Hodge vector".into()));
        }
        let hn = HodgeNumbers {
            n: h.len() as i64 - 1,
            h,
        };
        if !hn.is_symmetric() {
            return Err(Error::InadmissibleHodgeNumbers(format!(
                "h = {:?} is not symmetric",
                hn.h
            )));
        }
        Ok(hn)
    }

    pub fn is_symmetric(&self) -> bool {
        self.h.iter().eq(self.h.iter().rev())
    }

    pub fn dim(&self) -> usize {
        self.h.iter().sum()
    }

    /// `h^{p,q}` (zero off the line `p + q = n` or outside `0..=n`).
    pub fn get(&self, p: i64, q: i64) -> usize {
        if p + q != self.n || p < 0 || q < 0 {
            return 0;
        }
        self.h[(self.n - p) as usize]
    }

    /// `f^p = Σ_{r ≥ p} h^{r, n−r}`.
    pub fn f(&self, p: i64) -> usize {
        (p.max(0)..=self.n).map(|r| self.get(r, self.n - r)).sum()
    }
}

/// `(V, Q, F•)` with `V = C^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeDatum {
    pub dim: usize,
    pub form: PolarizationForm,
    pub filtration: Filtration,
}

impl HodgeDatum {
    pub fn new(weight: i64, q: MatrixGQ, filtration: Filtration) -> Self {
        HodgeDatum {
            dim: q.rows(),
            form: PolarizationForm::new(weight, q),
            filtration,
        }
    }

    pub fn weight(&self) -> i64 {
        self.form.weight
    }

    pub fn q(&self) -> &MatrixGQ {
        &self.form.q
    }

    pub fn f(&self, p: i64) -> Subspace {
        self.filtration.get(p)
    }

    /// Range of `p` outside of which both `F^p` and `F^{n−p+1}` are trivial.
    fn relevant_range(&self) -> (i64, i64) {
        let n = self.weight();
        let (lo, hi) = (self.filtration.lo(), self.filtration.hi());
        (lo.min(n - hi) - 1, hi.max(n - lo + 1) + 1)
    }

    /// `V^{p,q} = F^p ∩ conj F^q` for `p + q = n`, `0 ≤ p ≤ n`, including
    /// zero pieces.
    pub fn hodge_decomposition(&self) -> Vec<(i64, i64, Subspace)> {
        let n = self.weight();
        (0..=n.max(0))
            .rev()
            .map(|p| {
                let q = n - p;
                (p, q, self.f(p).intersect(&self.f(q).conj()))
            })
            .collect()
    }

    fn structure_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.q().rows() != self.dim || self.filtration.ambient_dim() != self.dim {
            out.push("dimension mismatch between Q, F and dim".to_string());
        }
        if self.weight() < 0 {
            out.push("negative weight".to_string());
        }
        if !self.filtration.is_decreasing() {
            out.push("F is not decreasing".to_string());
        }
        if !self.f(0).is_full() {
            out.push("F^0 != V".to_string());
        }
        if self.filtration.lo() < 0 {
            out.push("F has a proper step at a negative index".to_string());
        }
        out
    }

    /// Violations of the first bilinear relation: isotropy
    /// `Q(F^p, F^{n−p+1}) = 0` and directness `F^p ⊕ conj F^{n−p+1} = V`.
    pub fn hr1_violations(&self) -> Vec<String> {
        let n = self.weight();
        let (lo, hi) = self.relevant_range();
        let mut out = Vec::new();
        for p in lo..=hi {
            let a = self.f(p);
            let b = self.f(n - p + 1);
            if !a.is_zero() && !b.is_zero() && !self.form.gram(a.basis(), b.basis()).is_zero() {
                out.push(format!("Q(F^{p}, F^{}) != 0", n - p + 1));
            }
            let b_bar = b.conj();
            if a.dim() + b_bar.dim() != self.dim || !a.intersect(&b_bar).is_zero() {
                out.push(format!("F^{p} + conj F^{} is not a direct sum equal to V", n - p + 1));
            }
        }
        out
    }

    /// Only the isotropy half of the first relation.
    pub fn isotropy_violations(&self) -> Vec<String> {
        let n = self.weight();
        let (lo, hi) = self.relevant_range();
        (lo..=hi)
            .filter_map(|p| {
                let a = self.f(p);
                let b = self.f(n - p + 1);
                (!a.is_zero() && !b.is_zero() && !self.form.gram(a.basis(), b.basis()).is_zero())
                    .then(|| format!("Q(F^{p}, F^{}) != 0", n - p + 1))
            })
            .collect()
    }

    pub fn check_hr1(&self) -> bool {
        self.hr1_violations().is_empty()
    }

    /// Hermitian matrix `i^{p−q} B Q conj(B)ᵀ` of the Weil-twisted form on
    /// the rows `B` of a basis of `V^{p,q}`.
    pub fn weil_hermitian(&self, p: i64, q: i64, piece: &Subspace) -> MatrixGQ {
        let b = piece.basis();
        self.form.gram(b, &b.conj()).scale(&GaussianRational::i_pow(p - q))
    }

    /// Violations of the second relation, assuming the first holds.
    pub fn hr2_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (p, q, piece) in self.hodge_decomposition() {
            if piece.is_zero() {
                continue;
            }
            let h = self.weil_hermitian(p, q, &piece);
            match h.hermitian_pd_failure() {
                Ok(None) => {}
                Ok(Some(k)) => out.push(format!(
                    "i^(p-q) Q(u, conj u) not positive on V^{{{p},{q}}}: leading minor {k} fails"
                )),
                Err(_) => out.push(format!("Weil form on V^{{{p},{q}}} is not Hermitian")),
            }
        }
        out
    }

    pub fn check_hr2(&self) -> Result<bool> {
        let hr1 = self.hr1_violations();
        if !hr1.is_empty() {
            return Err(Error::Hr1Prerequisite(hr1.join("; ")));
        }
        Ok(self.hr2_violations().is_empty())
    }

    pub fn spans_violations(&self) -> Vec<String> {
        let pieces = self.hodge_decomposition();
        let total: usize = pieces.iter().map(|(_, _, s)| s.dim()).sum();
        let sum = Subspace::sum_all(self.dim, pieces.iter().map(|(_, _, s)| s));
        if total == self.dim && sum.is_full() {
            Vec::new()
        } else {
            vec![format!(
                "sum of V^(p,q) has dimension {} (total {total}) in V of dimension {}",
                sum.dim(),
                self.dim
            )]
        }
    }

    /// Full validation with clauses `form`, `filtration`, `hr1`, `hr2`, `spans`.
    pub fn validate(&self) -> Report {
        let mut r = Report::new();
        let form = self.form.violations();
        let structure = self.structure_violations();
        let shapes_ok = !structure.iter().any(|s| s.contains("dimension mismatch"));
        r.push_violations("form", "Q is real, nondegenerate, (-1)^n-symmetric", form);
        r.push_violations("filtration", "F is a decreasing filtration with F^0 = V", structure);
        if !shapes_ok {
            r.push("hr1", false, "skipped: inconsistent shapes");
            r.push("hr2", false, "skipped: inconsistent shapes");
            r.push("spans", false, "skipped: inconsistent shapes");
            return r;
        }
        let hr1 = self.hr1_violations();
        let hr1_ok = hr1.is_empty();
        r.push_violations("hr1", "Q(F^p, F^{n-p+1}) = 0 and F^p + conj F^{n-p+1} = V", hr1);
        if hr1_ok {
            r.push_violations("hr2", "i^{p-q} Q(u, conj u) > 0 on every V^{p,q}", self.hr2_violations());
        } else {
            r.push("hr2", false, "skipped: requires hr1");
        }
        r.push_violations("spans", "V = direct sum of the V^{p,q}", self.spans_violations());
        r
    }

    pub fn hodge_numbers(&self) -> Result<HodgeNumbers> {
        let n = self.weight();
        let h: Vec<usize> = self.hodge_decomposition().iter().map(|(_, _, s)| s.dim()).collect();
        let hn = HodgeNumbers { n, h };
        for p in 0..=n {
            if self.f(p).dim() != hn.f(p) {
                return Err(Error::InconsistentFiltration(format!(
                    "dim F^{p} = {} but sum of h^(q,n-q) for q >= {p} is {}",
                    self.f(p).dim(),
                    hn.f(p)
                )));
            }
        }
        Ok(hn)
    }
}

/// The canonical model of a polarized Hodge structure with Hodge numbers `h`.
///
/// Basis: for each pair `p > q` and each `a`, two real vectors `x, y` with
/// `u^{p,q} = x + i y` and `u^{q,p} = x − i y`; for `p = q` one real vector.
/// `Q` pairs `u^{p,q}` only with `u^{q,p}` and is normalised so that the Weil
/// form `i^{p−q} Q(u, ū)` equals 2 on `u^{p,q}` (1 on middle vectors).
pub fn model_phs(h: &HodgeNumbers) -> Result<HodgeDatum> {
    if !h.is_symmetric() {
        return Err(Error::InadmissibleHodgeNumbers(format!("h = {:?} is not symmetric", h.h)));
    }
    let n = h.n;
    let dim = h.dim();
    let mut q = MatrixGQ::zeros(dim, dim);
    // (p, vector) pairs generating F^p = span{u^{r,s} : r >= p}
    let mut pieces: Vec<(i64, Vec<GaussianRational>)> = Vec::new();
    let unit = |idx: usize| {
        let mut v = vec![GaussianRational::zero(); dim];
        v[idx] = GaussianRational::one();
        v
    };
    let mut next = 0usize;
    for p in (0..=n).rev() {
        let qq = n - p;
        if p < qq {
            break;
        }
        for _ in 0..h.get(p, qq) {
            if p == qq {
                let x = next;
                next += 1;
                q[(x, x)] = GaussianRational::one();
                pieces.push((p, unit(x)));
                continue;
            }
            let (x, y) = (next, next + 1);
            next += 2;
            if n % 2 == 1 {
                let s = if ((p - qq + 1) / 2) % 2 == 0 { 1 } else { -1 };
                q[(y, x)] = GaussianRational::from_int(s);
                q[(x, y)] = GaussianRational::from_int(-s);
            } else {
                let eps = if ((p - qq) / 2) % 2 == 0 { 1 } else { -1 };
                q[(x, x)] = GaussianRational::from_int(eps);
                q[(y, y)] = GaussianRational::from_int(eps);
            }
            let mut u = unit(x);
            u[y] = GaussianRational::i();
            let u_bar: Vec<GaussianRational> = u.iter().map(GaussianRational::conj).collect();
            pieces.push((p, u));
            pieces.push((qq, u_bar));
        }
    }
    let filtration = Filtration::from_graded(dim, 0, n, |p| {
        Subspace::from_vectors(
            dim,
            pieces.iter().filter(|(r, _)| *r == p).map(|(_, v)| v.clone()).collect(),
        )
    });
    Ok(HodgeDatum::new(n, q, filtration))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn weight_one(f1: Vec<GaussianRational>) -> HodgeDatum {
        let q = MatrixGQ::from_ints(&[&[0, 1], &[-1, 0]]);
        let f = Filtration::new(2, 1, vec![Subspace::from_vectors(2, vec![f1])]);
        HodgeDatum::new(1, q, f)
    }

    #[test]
    fn weight_one_examples() {
        let good = weight_one(vec![g("1"), g("i")]);
        assert!(good.check_hr1());
        assert_eq!(good.check_hr2(), Ok(true));
        assert!(good.validate().passed());
        let dec = good.hodge_decomposition();
        assert_eq!(dec[0].2, Subspace::from_vectors(2, vec![vec![g("1"), g("i")]]));
        assert_eq!(dec[1].2, Subspace::from_vectors(2, vec![vec![g("1"), g("-i")]]));

        let flipped = weight_one(vec![g("1"), g("-i")]);
        assert!(flipped.check_hr1());
        assert_eq!(flipped.check_hr2(), Ok(false));

        let real_line = weight_one(vec![g("1"), g("0")]);
        assert!(!real_line.check_hr1());
        assert!(matches!(real_line.check_hr2(), Err(Error::Hr1Prerequisite(_))));
        let report = real_line.validate();
        assert!(!report.clause_passed("hr1"));
        assert!(!report.clause_passed("hr2"));
    }

    #[test]
    fn weight_zero_is_vacuous() {
        let d = HodgeDatum::new(0, MatrixGQ::identity(2), Filtration::new(2, 1, vec![]));
        assert!(d.check_hr1());
        assert_eq!(d.hodge_decomposition().len(), 1);
        assert_eq!(d.hodge_decomposition()[0].2, Subspace::full(2));
    }

    #[test]
    fn model_round_trips() {
        for h in [vec![1, 1], vec![1, 2, 1], vec![2, 1, 2], vec![1, 0, 0, 1], vec![0, 3, 0]] {
            let hn = HodgeNumbers::new(h.clone()).unwrap();
            let d = model_phs(&hn).unwrap();
            assert!(d.validate().passed(), "{h:?}: {:?}", d.validate());
            assert_eq!(d.hodge_numbers().unwrap().h, h);
        }
        assert!(HodgeNumbers::new(vec![1, 2]).is_err());
    }
}
