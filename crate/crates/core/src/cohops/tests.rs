use proptest::prelude::*;

use super::*;
use crate::fdalgebra::{carlson_module, stable_hom_dim, syzygy_module, CIAlgebra, FDModule, MinimalResolution};
use crate::field::{DenseMatrix, Field};
use crate::poly::{Ideal, Polynomial};

fn kc2() -> CIAlgebra {
    CIAlgebra::elementary_abelian(2, 1).unwrap()
}

fn kv4() -> CIAlgebra {
    CIAlgebra::elementary_abelian(2, 2).unwrap()
}

fn l_class(a: &CIAlgebra, v: &[i64]) -> FDModule {
    let f = a.field();
    carlson_module(a, 1, &v.iter().map(|&c| f.from_i64(c)).collect::<Vec<_>>()).unwrap()
}

#[test]
fn kc2_operator_is_one() {
    let a = kc2();
    let res = MinimalResolution::new(&FDModule::trivial(&a), 4).unwrap();
    let ops = eisenbud_operators(&res).unwrap();
    assert_eq!(ops.stages.len(), 3);
    let ring = &ops.lifted.ring;
    let x = Polynomial::parse(ring, "x1").unwrap();
    assert_eq!(ops.lifted.lifted[0].get(0, 0), &x);
    let dd = ops.lifted.lifted[0].mul(&ops.lifted.lifted[1]).unwrap();
    assert_eq!(dd.get(0, 0), &Polynomial::parse(ring, "x1^2").unwrap());
    for n in 0..3 {
        assert_eq!(ops.operator(0, n).get(0, 0), &Polynomial::one(ring));
    }
    assert!(ops.reassembles().unwrap());
    assert!(ops.lifted.reduces_to_original());
}

#[test]
fn free_module_has_no_operators() {
    let a = kv4();
    let res = MinimalResolution::new(&FDModule::free(&a, 1), 3).unwrap();
    let ops = eisenbud_operators(&res).unwrap();
    assert!(ops.stages.iter().all(|ts| ts.iter().all(|t| t.rows() * t.cols() == 0 || t.is_zero())));
}

#[test]
fn kv4_reassembly_and_reduction() {
    let a = kv4();
    for m in [FDModule::trivial(&a), l_class(&a, &[1, 0]), syzygy_module(&FDModule::trivial(&a), 1).unwrap()] {
        let res = MinimalResolution::new(&m, 12).unwrap();
        let ops = eisenbud_operators(&res).unwrap();
        assert!(ops.reassembles().unwrap());
        assert!(ops.lifted.reduces_to_original());
    }
}

#[test]
fn odd_prime_and_mixed_exponents_reassemble() {
    let a = CIAlgebra::new(Field::prime(3).unwrap(), vec![3, 2]).unwrap();
    let res = MinimalResolution::new(&FDModule::trivial(&a), 6).unwrap();
    let ops = eisenbud_operators(&res).unwrap();
    assert!(ops.reassembles().unwrap());
    let e = ext_to_trivial(&FDModule::trivial(&a), 6).unwrap();
    assert!(chi_commutativity_check(&e));
    assert_eq!(e.dims, vec![1, 2, 3, 4, 5, 6, 7]);
}

#[test]
fn kc2_ext_is_periodic() {
    let a = kc2();
    let k = FDModule::trivial(&a);
    let e = ext_module(&k, &k, 8).unwrap();
    assert_eq!(e.dims, vec![1; 9]);
    for m in &e.chi[0] {
        assert_eq!(*m, DenseMatrix::identity(a.field(), 1));
    }
    let ann = ann_to_bound(&e, 4).unwrap();
    assert!(ann.is_zero());
    assert!(chi_commutativity_check(&e));
}

#[test]
fn kv4_ext_dims() {
    let a = kv4();
    let k = FDModule::trivial(&a);
    let e = ext_module(&k, &k, 8).unwrap();
    assert_eq!(e.dims, (1..=9).collect::<Vec<_>>());
    assert!(chi_commutativity_check(&e));
    assert!(ann_to_bound(&e, 4).unwrap().is_zero());
    let diffs = hilbert_differences(&e.dims, 2);
    assert!(diffs[2].iter().all(|&d| d == 0));
}

#[test]
fn rank_three_commutativity() {
    let a = CIAlgebra::elementary_abelian(2, 3).unwrap();
    let k = FDModule::trivial(&a);
    let e = ext_to_trivial(&k, 6).unwrap();
    assert!(chi_commutativity_check(&e));
    assert_eq!(e.dims, vec![1, 3, 6, 10, 15, 21, 28]);
}

#[test]
fn trivial_and_general_routes_agree() {
    let a = kv4();
    let k = FDModule::trivial(&a);
    for m in [k.clone(), l_class(&a, &[1, 0]), l_class(&a, &[1, 1]), FDModule::free(&a, 1)] {
        let e1 = ext_module(&m, &k, 8).unwrap();
        let e2 = ext_to_trivial(&m, 8).unwrap();
        assert_eq!(e1.dims, e2.dims);
        // bases may differ, but the χ-annihilators must agree
        assert_eq!(ann_to_bound(&e1, 4).unwrap(), ann_to_bound(&e2, 4).unwrap());
    }
}

#[test]
fn ext_of_free_module() {
    let a = kv4();
    let e = ext_module(&FDModule::free(&a, 1), &FDModule::trivial(&a), 6).unwrap();
    assert_eq!(e.dims, vec![1, 0, 0, 0, 0, 0, 0]);
    let ann = ann_to_bound(&e, 2).unwrap();
    let want = Ideal::parse(&e.ring(), &["chi1", "chi2"]).unwrap();
    assert_eq!(ann, want);
}

#[test]
fn carlson_module_annihilator() {
    let a = kv4();
    let lx = l_class(&a, &[1, 0]);
    let e = ext_module(&lx, &FDModule::trivial(&a), 12).unwrap();
    let ann = ann_to_bound(&e, default_cap(12)).unwrap();
    let ring = e.ring();
    let chi1 = Polynomial::parse(&ring, "chi1").unwrap();
    let chi2 = Polynomial::parse(&ring, "chi2").unwrap();
    assert!(ann.radical_contains(&chi1).unwrap());
    assert!(!ann.radical_contains(&chi2).unwrap());
    assert_eq!(e.dims, vec![1; 13]);
}

#[test]
fn bound_too_small() {
    let a = kc2();
    let k = FDModule::trivial(&a);
    let e = ext_module(&k, &k, 6).unwrap();
    assert!(matches!(ann_to_bound(&e, 4), Err(crate::Error::BoundTooSmall { .. })));
    assert!(ext_module(&k, &k, 1).is_err());
}

#[test]
fn chi_raises_degree_by_two() {
    let a = kv4();
    let e = ext_to_trivial(&FDModule::trivial(&a), 8).unwrap();
    for i in 0..2 {
        for (n, m) in e.chi[i].iter().enumerate() {
            assert_eq!((m.rows(), m.cols()), (e.dims[n + 2], e.dims[n]));
        }
    }
}

#[test]
fn ext_matches_stable_hom_of_syzygies() {
    // Ext^n(M, N) ≅ stable Hom(Ω^n M, N) for n ≥ 1
    let a = kv4();
    let k = FDModule::trivial(&a);
    let omega = syzygy_module(&k, 1).unwrap();
    let lx = l_class(&a, &[1, 0]);
    for (m, n) in [(&k, &omega), (&lx, &lx), (&omega, &lx)] {
        let e = ext_module(m, n, 4).unwrap();
        for deg in 1..=4 {
            let oracle = stable_hom_dim(&syzygy_module(m, deg).unwrap(), n).unwrap();
            assert_eq!(e.dims[deg], oracle, "degree {deg}");
        }
        assert!(chi_commutativity_check(&e));
    }
}

fn curated(a: &CIAlgebra, pick: u8) -> FDModule {
    let k = FDModule::trivial(a);
    match pick % 5 {
        0 => k,
        1 => syzygy_module(&k, 1).unwrap(),
        2 => l_class(a, &[1, 0]),
        3 => l_class(a, &[1, 1]),
        _ => l_class(a, &[1, 0]).direct_sum(&l_class(a, &[0, 1])).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]
    #[test]
    fn annihilator_decreases_with_bound(pick in 0u8..5, cap in 0usize..3) {
        let a = kv4();
        let m = curated(&a, pick);
        let e_small = ext_to_trivial(&m, 8).unwrap();
        let e_big = ext_to_trivial(&m, 10).unwrap();
        let small = ann_to_bound(&e_small, 2 * cap).unwrap();
        let big = ann_to_bound(&e_big, 2 * cap).unwrap();
        prop_assert!(small.contains_ideal(&big));
    }

    #[test]
    fn ext_dims_eventually_polynomial(pick in 0u8..5) {
        let a = kv4();
        let e = ext_to_trivial(&curated(&a, pick), 10).unwrap();
        let diffs = hilbert_differences(&e.dims, 2);
        // degree < c = 2: second differences vanish after the first few terms
        prop_assert!(diffs[2][2..].iter().all(|&d| d == 0));
    }
}
