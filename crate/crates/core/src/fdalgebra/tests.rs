use proptest::prelude::*;

use super::*;
use crate::field::{DenseMatrix, Field, Scalar};

fn kc2() -> CIAlgebra {
    CIAlgebra::elementary_abelian(2, 1).unwrap()
}

fn kv4() -> CIAlgebra {
    CIAlgebra::elementary_abelian(2, 2).unwrap()
}

fn class(f: Field, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&c| f.from_i64(c)).collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn algebra_basics() {
    let a = CIAlgebra::new(Field::prime(3).unwrap(), vec![3, 2]).unwrap();
    assert_eq!(a.dim(), 6);
    assert!(!a.group_mode());
    assert!(kv4().group_mode());
    let x = a.var(0);
    let x3 = a.mul(&a.mul(&x, &x), &x);
    assert!(CIAlgebra::is_zero_elem(&x3));
}

#[test]
fn kc2_resolution_of_k_is_periodic() {
    let a = kc2();
    let res = MinimalResolution::new(&FDModule::trivial(&a), 6).unwrap();
    assert_eq!(res.betti, vec![1; 7]);
    assert!(res.is_exact());
    for n in 1..=6 {
        let d = res.differential(n);
        assert_eq!((d.rows, d.cols), (1, 1));
        assert_eq!(d.entries[0][0], a.var(0));
    }
}

#[test]
fn kv4_betti_numbers_grow_linearly() {
    let a = kv4();
    let res = MinimalResolution::new(&FDModule::trivial(&a), 10).unwrap();
    assert_eq!(res.betti, (1..=11).collect::<Vec<usize>>());
    assert!(res.is_exact());
}

#[test]
fn elementary_abelian_betti_match_polynomial_hilbert_function() {
    for c in 1..=3usize {
        let a = CIAlgebra::elementary_abelian(2, c).unwrap();
        let top = if c == 3 { 7 } else { 10 };
        let res = MinimalResolution::new(&FDModule::trivial(&a), top).unwrap();
        for n in 0..=top {
            assert_eq!(res.betti[n] as u64, binomial(n as u64 + c as u64 - 1, c as u64 - 1), "c={c} n={n}");
        }
    }
}

#[test]
fn odd_characteristic_resolution() {
    let a = CIAlgebra::elementary_abelian(3, 1).unwrap();
    let res = MinimalResolution::new(&FDModule::trivial(&a), 4).unwrap();
    assert_eq!(res.betti, vec![1; 5]);
    assert!(res.is_exact());
    // differentials alternate x and x^2
    assert_eq!(res.differential(1).entries[0][0], a.var(0));
    assert_eq!(res.differential(2).entries[0][0], a.mul(&a.var(0), &a.var(0)));
}

#[test]
fn free_modules_resolve_trivially() {
    let a = kv4();
    let res = MinimalResolution::new(&FDModule::free(&a, 1), 3).unwrap();
    assert_eq!(res.betti, vec![1, 0, 0, 0]);
    assert!(is_projective(&FDModule::free(&a, 2)).unwrap());
    assert!(!is_projective(&FDModule::trivial(&a)).unwrap());
}

#[test]
fn syzygies_of_k_over_kv4() {
    let a = kv4();
    let k = FDModule::trivial(&a);
    assert_eq!(syzygy_module(&k, 1).unwrap().dim(), 3);
    assert_eq!(syzygy_module(&k, 2).unwrap().dim(), 5);
    assert_eq!(syzygy_module(&k, 0).unwrap().dim(), 1);
}

#[test]
fn tensor_with_trivial_is_identity() {
    let a = kv4();
    let k = FDModule::trivial(&a);
    let m = syzygy_module(&k, 1).unwrap();
    let t = k.tensor(&m).unwrap();
    assert_eq!(t.actions(), m.actions());
}

#[test]
fn tensor_with_free_is_free() {
    let a = kv4();
    let m = syzygy_module(&FDModule::trivial(&a), 1).unwrap();
    let t = FDModule::free(&a, 1).tensor(&m).unwrap();
    assert_eq!(t.dim(), 12);
    assert!(is_projective(&t).unwrap());
    let res = MinimalResolution::new(&t, 0).unwrap();
    assert_eq!(res.betti[0], 3);
}

#[test]
fn tensor_requires_group_mode() {
    let a = CIAlgebra::new(Field::prime(2).unwrap(), vec![4]).unwrap();
    let k = FDModule::trivial(&a);
    assert!(matches!(k.tensor(&k), Err(crate::Error::NotAGroupAlgebra)));
    assert!(matches!(k.dual(), Err(crate::Error::NotAGroupAlgebra)));
}

#[test]
fn duals_and_homs() {
    let a = kv4();
    let k = FDModule::trivial(&a);
    assert_eq!(k.dual().unwrap().actions(), k.actions());
    let m = syzygy_module(&k, 1).unwrap();
    assert_eq!(k.hom(&m).unwrap().actions(), m.actions());
    let dd = m.dual().unwrap().dual().unwrap();
    assert_eq!(dd.dim(), m.dim());
    // isomorphic: hom_space contains an invertible map
    let iso = hom_space(&m, &dd).unwrap().into_iter().any(|f| f.rank() == m.dim());
    assert!(iso);
}

#[test]
fn carlson_modules() {
    let a = kv4();
    let f = a.field();
    let lx = carlson_module(&a, 1, &class(f, &[1, 0])).unwrap();
    assert_eq!(lx.dim(), 2);
    assert!(!is_projective(&lx).unwrap());
    let lxy = carlson_module(&a, 1, &class(f, &[1, 1])).unwrap();
    assert_eq!(lxy.dim(), 2);
    let l2 = carlson_module(&a, 2, &class(f, &[1, 0, 0])).unwrap();
    assert_eq!(l2.dim(), 4);

    let c2 = kc2();
    let l = carlson_module(&c2, 1, &class(c2.field(), &[1])).unwrap();
    assert_eq!(l.dim(), 0);
    assert!(matches!(
        carlson_module(&a, 1, &class(f, &[0, 0])),
        Err(crate::Error::ZeroClass)
    ));
    assert!(matches!(
        carlson_module(&a, 1, &class(f, &[1])),
        Err(crate::Error::DimensionMismatch(_))
    ));
}

#[test]
fn stable_homs() {
    let c2 = kc2();
    let k = FDModule::trivial(&c2);
    assert_eq!(stable_hom_dim(&k, &k).unwrap(), 1);
    let a = kv4();
    let kk = FDModule::trivial(&a);
    let free = FDModule::free(&a, 1);
    let m = syzygy_module(&kk, 1).unwrap();
    assert_eq!(stable_hom_dim(&free, &m).unwrap(), 0);
    assert_eq!(stable_hom_dim(&m, &free).unwrap(), 0);
    assert!(stable_hom_dim(&m, &m).unwrap() >= 1);
    // stable Hom(k, k) over kV4 is k
    assert_eq!(stable_hom_dim(&kk, &kk).unwrap(), 1);
}

#[test]
fn decompositions() {
    let a = kv4();
    let f = a.field();
    let k = FDModule::trivial(&a);
    let kk = k.direct_sum(&k).unwrap();
    let parts = decompose_indecomposables(&kk, 0).unwrap();
    assert_eq!(parts.iter().map(FDModule::dim).collect::<Vec<_>>(), vec![1, 1]);
    assert!(end_ring_is_local(&k, 0).unwrap());
    assert!(!end_ring_is_local(&kk, 0).unwrap());

    let lx = carlson_module(&a, 1, &class(f, &[1, 0])).unwrap();
    let ly = carlson_module(&a, 1, &class(f, &[0, 1])).unwrap();
    let s = lx.direct_sum(&ly).unwrap();
    let parts = decompose_indecomposables(&s, 7).unwrap();
    assert_eq!(parts.len(), 2);
    for p in &parts {
        assert_eq!(p.dim(), 2);
        assert!(end_ring_is_local(p, 0).unwrap());
    }
    let omega = syzygy_module(&k, 2).unwrap();
    assert_eq!(decompose_indecomposables(&omega, 0).unwrap().len(), 1);
}

fn small_module(a: &CIAlgebra, pick: u8) -> FDModule {
    let k = FDModule::trivial(a);
    match pick % 4 {
        0 => k,
        1 => syzygy_module(&k, 1).unwrap(),
        2 => carlson_module(a, 1, &class(a.field(), &[1, 1])).unwrap(),
        _ => FDModule::free(a, 1),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]
    #[test]
    fn tensor_hom_adjunction(i in 0u8..4, j in 0u8..4, l in 0u8..4) {
        let a = kv4();
        let m = small_module(&a, i);
        let n = small_module(&a, j);
        let p = small_module(&a, l);
        let lhs = hom_space(&m.tensor(&n).unwrap(), &p).unwrap().len();
        let rhs = hom_space(&m, &n.hom(&p).unwrap()).unwrap().len();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn stable_hom_vanishes_on_projectives(i in 0u8..4) {
        let a = kv4();
        let m = small_module(&a, i);
        let free = FDModule::free(&a, 1);
        prop_assert_eq!(stable_hom_dim(&free, &m).unwrap(), 0);
        prop_assert_eq!(stable_hom_dim(&m, &free).unwrap(), 0);
    }

    #[test]
    fn change_of_basis_preserves_resolution(seed in 0u64..50) {
        use rand::{Rng, SeedableRng};
        let a = kv4();
        let f = a.field();
        let m = syzygy_module(&FDModule::trivial(&a), 2).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = m.dim();
        let p = loop {
            let rows: Vec<Vec<Scalar>> = (0..n)
                .map(|_| (0..n).map(|_| f.from_i64(rng.gen_range(0..2))).collect())
                .collect();
            let p = DenseMatrix::from_rows(f, rows).unwrap();
            if p.rank() == n { break p; }
        };
        let q = m.change_basis(&p).unwrap();
        let r1 = MinimalResolution::new(&m, 3).unwrap();
        let r2 = MinimalResolution::new(&q, 3).unwrap();
        prop_assert_eq!(r1.betti, r2.betti);
    }
}
