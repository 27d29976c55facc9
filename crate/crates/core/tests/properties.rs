use std::collections::BTreeMap;

use proptest::prelude::*;

use hodge_degen::degen::{ht_construct, ht_gate, minimal_types, minimal_witness};
use hodge_degen::diagram::DiagramSpec;
use hodge_degen::json::{lmhs_to_json, parse_datum};
use hodge_degen::linalg::{image, kernel};
use hodge_degen::lmhs::{deligne_splitting, validate_lmhs, weight_filtration};
use hodge_degen::{BigradingDims, GaussianRational, HodgeNumbers, MatrixGQ, Subspace};

fn scalar() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| GaussianRational::from_parts(a, b, c, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = MatrixGQ> {
    prop::collection::vec(scalar(), rows * cols).prop_map(move |v| MatrixGQ::from_flat(rows, cols, v))
}

fn small_matrix() -> impl Strategy<Value = MatrixGQ> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c))
}

/// An upper unitriangular matrix: invertible over Z.
fn unitriangular(n: usize) -> impl Strategy<Value = MatrixGQ> {
    prop::collection::vec(-2i64..=2, n * n).prop_map(move |v| {
        MatrixGQ::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Equal => GaussianRational::one(),
            std::cmp::Ordering::Less => GaussianRational::from_int(v[i * n + j]),
            std::cmp::Ordering::Greater => GaussianRational::zero(),
        })
    })
}

fn jordan(blocks: &[usize]) -> MatrixGQ {
    let n: usize = blocks.iter().sum();
    let mut m = MatrixGQ::zeros(n, n);
    let mut start = 0;
    for &b in blocks {
        for i in 0..b.saturating_sub(1) {
            m[(start + i, start + i + 1)] = GaussianRational::one();
        }
        start += b;
    }
    m
}

fn symmetric_h() -> impl Strategy<Value = Vec<usize>> {
    (0usize..=4).prop_flat_map(|n| {
        prop::collection::vec(0usize..=2, n / 2 + 1).prop_map(move |half| {
            let mut h = half.clone();
            h.extend(half.iter().rev().skip(usize::from(n % 2 == 0)));
            h
        })
    })
    .prop_filter("nonzero", |h| h.iter().sum::<usize>() >= 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(a.conj().conj(), a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv()).is_one());
        }
    }

    #[test]
    fn scalar_display_round_trips(a in scalar()) {
        let back: GaussianRational = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn rank_nullity(m in small_matrix()) {
        prop_assert_eq!(m.rank() + kernel(&m).dim(), m.cols());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(image(&m).dim(), m.rank());
    }

    #[test]
    fn kernel_is_annihilated(m in small_matrix()) {
        for v in kernel(&m).basis_vectors() {
            prop_assert!(m.apply_vec(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn transpose_reverses_products(a in matrix(3, 2), b in matrix(2, 3)) {
        prop_assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
    }

    #[test]
    fn inverse_of_unitriangular(p in unitriangular(4)) {
        let inv = p.inverse().unwrap();
        prop_assert_eq!(p.mul(&inv), MatrixGQ::identity(4));
        prop_assert!(p.determinant().is_one());
    }

    #[test]
    fn subspace_dimension_formula(a in matrix(2, 4), b in matrix(2, 4)) {
        let (u, w) = (Subspace::span(&a), Subspace::span(&b));
        prop_assert_eq!(u.sum(&w).dim() + u.intersect(&w).dim(), u.dim() + w.dim());
        prop_assert!(u.sum(&w).contains(&u) && u.contains(&u.intersect(&w)));
        prop_assert_eq!(u.conj().conj(), u.clone());
    }

    /// Graded dimensions of `W(N)` follow from the Jordan type alone: a block
    /// of size `s` contributes one dimension to each of `Gr_{c+s−1}`,
    /// `Gr_{c+s−3}`, …, `Gr_{c−s+1}`.
    #[test]
    fn weight_filtration_matches_jordan_type(
        blocks in prop::collection::vec(1usize..=4, 1..=3),
        seed in unitriangular(12),
        center in -2i64..=2,
    ) {
        let n: usize = blocks.iter().sum();
        let p = MatrixGQ::from_fn(n, n, |i, j| seed[(i, j)].clone());
        let nil = p.mul(&jordan(&blocks)).mul(&p.inverse().unwrap());
        let w = weight_filtration(&nil, center).unwrap();
        let mut want: BTreeMap<i64, usize> = BTreeMap::new();
        for &s in &blocks {
            let s = s as i64;
            for j in 0..s {
                *want.entry(center + s - 1 - 2 * j).or_insert(0) += 1;
            }
        }
        for (&k, &d) in &want {
            prop_assert_eq!(w.graded_dim(k), d, "Gr_{}", k);
        }
        prop_assert_eq!(want.values().sum::<usize>(), n);
        prop_assert!(w.defining_violations(&nil).is_empty());
    }

    #[test]
    fn minimal_witnesses_validate(h in symmetric_h()) {
        let hn = HodgeNumbers::new(h).unwrap();
        for t in minimal_types(&hn) {
            let l = minimal_witness(&t, &hn).unwrap();
            prop_assert!(validate_lmhs(&l).passed());
            prop_assert_eq!(deligne_splitting(&l).unwrap().dims(), t.i_table.clone());
        }
    }

    #[test]
    fn hodge_tate_json_round_trip(h in symmetric_h()) {
        let hn = HodgeNumbers::new(h).unwrap();
        prop_assume!(ht_gate(&hn));
        let l = ht_construct(&hn).unwrap();
        let back = parse_datum(&lmhs_to_json(&l).to_string()).unwrap().lmhs().unwrap();
        prop_assert_eq!(validate_lmhs(&back), validate_lmhs(&l));
        prop_assert_eq!(deligne_splitting(&back).unwrap().dims(), deligne_splitting(&l).unwrap().dims());
    }

    #[test]
    fn ascii_marks_every_node_once(triples in prop::collection::vec((-3i64..=3, -3i64..=3, 1usize..=3), 0..8)) {
        let dims = BigradingDims::from_triples(triples);
        let text = DiagramSpec::new(dims.clone()).ascii();
        let marks = text.chars().filter(|&c| c == '*' || c == '@').count();
        prop_assert_eq!(marks, dims.support().len());
        prop_assert_eq!(text.chars().filter(|&c| c == '@').count(), dims.triples().iter().filter(|t| t.2 >= 2).count());
        prop_assert_eq!(DiagramSpec::new(dims.clone()).svg(), DiagramSpec::new(dims).svg());
    }
}
