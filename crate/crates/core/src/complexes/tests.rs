use std::collections::HashMap;

use super::*;
use crate::field::Field;
use crate::poly::{Ideal, PolyMatrix, Polynomial, Ring};

fn ring(vars: &[&str]) -> Ring {
    Ring::standard(Field::Prime(2), vars)
}

fn p(r: &Ring, s: &str) -> Polynomial {
    Polynomial::parse(r, s).unwrap()
}

/// Graded dimensions of H^n over an internal-degree window, computed from
/// the presentation (standard monomials).
fn presentation_dims(x: &FreeComplex, n: i64, lo: i64, hi: i64) -> Vec<usize> {
    let h = x.cohomology(n).unwrap();
    (lo..=hi).map(|d| h.dim(d).unwrap()).collect()
}

/// Same dimensions by linear algebra on graded pieces.
fn piece_dims(x: &FreeComplex, n: i64, lo: i64, hi: i64) -> Vec<usize> {
    (lo..=hi).map(|d| x.graded_piece(d).cohomology_dim(n)).collect()
}

fn all_zero(x: &FreeComplex, lo: i64, hi: i64) -> bool {
    (-4..=4).all(|n| piece_dims(x, n, lo, hi).iter().all(|&d| d == 0))
}

#[test]
fn cone_of_identity_is_acyclic() {
    let r = ring(&["x", "y"]);
    let x = koszul_complex(&r, &[p(&r, "x")]).unwrap();
    let mut maps = HashMap::new();
    for n in 0..=1 {
        maps.insert(n, PolyMatrix::identity(&r, x.rank(n)));
    }
    let c = cone(&ChainMap {
        source: x.clone(),
        target: x,
        maps,
    })
    .unwrap();
    assert!(all_zero(&c, -3, 6));
    for n in -2..=2 {
        assert!(c.cohomology(n).unwrap().is_zero().unwrap());
    }
}

#[test]
fn cone_of_zero_map_is_shift() {
    let r = ring(&["x", "y"]);
    let x = koszul_complex(&r, &[p(&r, "x")]).unwrap();
    let c = cone(&ChainMap {
        source: x.clone(),
        target: FreeComplex::zero(&r),
        maps: HashMap::new(),
    })
    .unwrap();
    assert_eq!(c, x.shift(1));
}

#[test]
fn cone_of_x_on_k_x() {
    let r = ring(&["x"]);
    let c = FreeComplex::unit(&r).koszul_object(&p(&r, "x")).unwrap();
    assert_eq!(c.range(), Some((-1, 0)));
    assert!(c.cohomology(-1).unwrap().is_zero().unwrap());
    // H^0 ≅ R/(x), generated in internal degree −1
    let h0 = c.cohomology(0).unwrap();
    assert_eq!(h0.annihilator().unwrap(), Ideal::parse(&r, &["x"]).unwrap());
    assert_eq!(presentation_dims(&c, 0, -3, 3), vec![0, 0, 1, 0, 0, 0, 0]);
    assert_eq!(piece_dims(&c, 0, -3, 3), vec![0, 0, 1, 0, 0, 0, 0]);
    // the shifted complex moves cohomology down one step
    let s = c.shift(1);
    for n in -3..=2 {
        assert_eq!(piece_dims(&s, n, -3, 3), piece_dims(&c, n + 1, -3, 3));
    }
    assert_eq!(s.shift(-1), c);
    assert_eq!(c.shift(0), c);
}

#[test]
fn koszul_on_regular_sequence() {
    let r = ring(&["x", "y"]);
    let k = koszul_complex(&r, &[p(&r, "x"), p(&r, "y")]).unwrap();
    assert_eq!(k.range(), Some((0, 2)));
    assert_eq!((k.rank(0), k.rank(1), k.rank(2)), (1, 2, 1));
    for n in 0..2 {
        assert!(k.cohomology(n).unwrap().is_zero().unwrap());
        assert!(piece_dims(&k, n, -6, 6).iter().all(|&d| d == 0));
    }
    // H^2 = k, in internal degree −2 under the degree-0 twist convention
    let expect: Vec<usize> = (-6..=6).map(|d| usize::from(d == -2)).collect();
    assert_eq!(presentation_dims(&k, 2, -6, 6), expect);
    assert_eq!(piece_dims(&k, 2, -6, 6), expect);
    let ann = k.cohomology(2).unwrap().annihilator().unwrap();
    assert_eq!(ann, Ideal::irrelevant(&r));
}

#[test]
fn unit_element_gives_acyclic_koszul_object() {
    let r = ring(&["x", "y"]);
    let x = koszul_complex(&r, &[p(&r, "x")]).unwrap();
    let c = x.koszul_object(&Polynomial::one(&r)).unwrap();
    assert!(all_zero(&c, -4, 4));
}

#[test]
fn tensor_products() {
    let r = ring(&["x", "y"]);
    let kx = koszul_complex(&r, &[p(&r, "x")]).unwrap();
    let ky = koszul_complex(&r, &[p(&r, "y")]).unwrap();
    let kxy = koszul_complex(&r, &[p(&r, "x"), p(&r, "y")]).unwrap();
    let t = kx.tensor(&ky).unwrap();
    for n in 0..=2 {
        assert_eq!(t.rank(n), kxy.rank(n));
        assert_eq!(piece_dims(&t, n, -4, 4), piece_dims(&kxy, n, -4, 4));
    }
    let u = kxy.tensor(&FreeComplex::unit(&r)).unwrap();
    assert_eq!(u, kxy);
    // signs: d∘d = 0 is enforced by the constructor
    let big = t.tensor(&kx).unwrap().tensor(&ky.shift(1)).unwrap();
    assert!(big.range().is_some());
}

#[test]
fn not_a_chain_map_is_rejected() {
    let r = ring(&["x"]);
    let x = koszul_complex(&r, &[p(&r, "x")]).unwrap();
    let mut maps = HashMap::new();
    maps.insert(0, PolyMatrix::identity(&r, 1));
    let err = cone(&ChainMap {
        source: x.clone(),
        target: x,
        maps,
    })
    .unwrap_err();
    assert!(matches!(err, crate::Error::NotAChainMap(_)));
    assert!(matches!(
        FreeComplex::unit(&r).koszul_object(&p(&r, "x+1")),
        Err(crate::Error::NotHomogeneous)
    ));
}

#[test]
fn long_exact_sequences() {
    let r = ring(&["x"]);
    assert!(koszul_les_check(&FreeComplex::unit(&r), &p(&r, "x"), (-10, 10)).unwrap());
    assert!(koszul_les_check(&FreeComplex::unit(&r), &Polynomial::one(&r), (-10, 10)).unwrap());
    let r2 = ring(&["x", "y"]);
    let kx = koszul_complex(&r2, &[p(&r2, "x")]).unwrap();
    assert!(koszul_les_check(&kx, &p(&r2, "y"), (0, 6)).unwrap());
    assert!(koszul_les_check(&kx, &p(&r2, "x^2+x*y"), (-6, 6)).unwrap());
}

#[test]
fn koszul_cohomology_killed_by_square() {
    let r = ring(&["x", "y"]);
    let x = resolve_quotient(&Ideal::parse(&r, &["x*y", "y^2"]).unwrap()).unwrap();
    let f = p(&r, "x+y");
    let c = x.koszul_object(&f).unwrap();
    let (lo, hi) = c.range().unwrap();
    for n in lo..=hi {
        let ann = c.cohomology(n).unwrap().annihilator().unwrap();
        assert!(ann.contains(&f.pow(2)));
    }
}

#[test]
fn resolution_of_monomial_quotient() {
    let r = ring(&["x", "y"]);
    let i = Ideal::parse(&r, &["x^2", "x*y", "y^3"]).unwrap();
    let x = resolve_quotient(&i).unwrap();
    assert_eq!(x.range(), Some((-2, 0)));
    assert_eq!((x.rank(-2), x.rank(-1), x.rank(0)), (2, 3, 1));
    assert!(x.cohomology(-1).unwrap().is_zero().unwrap());
    assert!(x.cohomology(-2).unwrap().is_zero().unwrap());
    assert_eq!(x.cohomology(0).unwrap().annihilator().unwrap(), i);
    // Hilbert function of R/I: 1, x y, y^2, then nothing
    assert_eq!(presentation_dims(&x, 0, 0, 4), vec![1, 2, 1, 0, 0]);
    assert_eq!(piece_dims(&x, 0, 0, 4), vec![1, 2, 1, 0, 0]);
}
