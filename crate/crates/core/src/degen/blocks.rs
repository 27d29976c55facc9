use crate::error::Result;
use crate::hodge::{Filtration, HodgeDatum};
use crate::linalg::{GaussianRational, MatrixGQ, Subspace};
use crate::lmhs::LmhsDatum;

/// A summand `(Q, N, F)` of an assembled limiting mixed Hodge structure, with
/// `F` given by generating vectors tagged by their filtration index:
/// `F^p = span{v : index(v) ≥ p}`.
#[derive(Clone, Debug)]
pub struct Block {
    pub q: MatrixGQ,
    pub n: MatrixGQ,
    pub generators: Vec<(i64, Vec<GaussianRational>)>,
}

impl Block {
    pub fn dim(&self) -> usize {
        self.q.rows()
    }

    /// A pure polarized Hodge structure as a block with `N = 0`.
    pub fn pure(h: &HodgeDatum) -> Block {
        let dim = h.dim;
        let f = &h.filtration;
        let mut generators = Vec::new();
        // Tag the basis of F^p by p, from the top step down; lower steps
        // only need the vectors they add, but repeating is harmless.
        for (p, step) in f.steps() {
            for v in step.basis_vectors() {
                generators.push((p, v));
            }
        }
        for v in Subspace::full(dim).basis_vectors() {
            generators.push((f.lo() - 1, v));
        }
        Block { q: h.q().clone(), n: MatrixGQ::zeros(dim, dim), generators }
    }

    fn filtration_step(&self, p: i64) -> Subspace {
        Subspace::from_vectors(
            self.dim(),
            self.generators.iter().filter(|(i, _)| *i >= p).map(|(_, v)| v.clone()).collect(),
        )
    }
}

/// Real unit vector `e_idx` in `C^dim`.
pub fn unit(dim: usize, idx: usize) -> Vec<GaussianRational> {
    let mut v = vec![GaussianRational::zero(); dim];
    v[idx] = GaussianRational::one();
    v
}

/// Direct sum of blocks as a limiting mixed Hodge structure of weight `n`.
pub fn assemble(weight: i64, blocks: &[Block]) -> Result<LmhsDatum> {
    let qs: Vec<&MatrixGQ> = blocks.iter().map(|b| &b.q).collect();
    let ns: Vec<&MatrixGQ> = blocks.iter().map(|b| &b.n).collect();
    let q = MatrixGQ::block_diag(&qs);
    let n = MatrixGQ::block_diag(&ns);
    let dim = q.rows();
    let indices = blocks.iter().flat_map(|b| b.generators.iter().map(|(p, _)| *p));
    let lo = indices.clone().min().unwrap_or(0);
    let hi = indices.max().unwrap_or(0);
    let steps: Vec<Subspace> = (lo..=hi)
        .map(|p| {
            let mut offset = 0;
            let mut vectors = Vec::new();
            for b in blocks {
                for v in b.filtration_step(p).basis_vectors() {
                    let mut w = vec![GaussianRational::zero(); dim];
                    for (k, x) in v.into_iter().enumerate() {
                        w[offset + k] = x;
                    }
                    vectors.push(w);
                }
                offset += b.dim();
            }
            Subspace::from_vectors(dim, vectors)
        })
        .collect();
    // Indices below `lo` are the whole space; make that explicit.
    let mut all = vec![Subspace::full(dim)];
    all.extend(steps);
    LmhsDatum::from_parts(weight, q, Filtration::new(dim, lo - 1, all), n)
}
