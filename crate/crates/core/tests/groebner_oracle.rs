mod support;

use proptest::prelude::*;
use suppkit::field::Field;
use suppkit::poly::{buchberger, Monomial, MonomialOrder, Polynomial, Ring};
use support::macaulay::macaulay_member;

const P: u64 = 5;

fn ring() -> Ring {
    Ring::standard(Field::prime(P).unwrap(), &["x", "y", "z"])
}

fn poly(r: &Ring, terms: &[(Vec<u32>, i64)]) -> Polynomial {
    let f = r.field();
    Polynomial::from_terms(r, terms.iter().map(|(e, c)| (Monomial(e.clone()), f.from_i64(*c))))
}

fn term() -> impl Strategy<Value = (Vec<u32>, i64)> {
    (prop::collection::vec(0u32..3, 3), 1i64..5).prop_filter("degree ≤ 3", |(e, _)| e.iter().sum::<u32>() <= 3)
}

/// Terms of one fixed degree d.
fn homogeneous_term(d: u32) -> impl Strategy<Value = (Vec<u32>, i64)> {
    (0..=d, 0..=d, 1i64..5)
        .prop_filter("fits", move |(a, b, _)| a + b <= d)
        .prop_map(move |(a, b, c)| (vec![a, b, d - a - b], c))
}

fn homogeneous_poly() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    (1u32..=3).prop_flat_map(|d| prop::collection::vec(homogeneous_term(d), 1..4))
}

fn degree(f: &Polynomial) -> u32 {
    f.degree().unwrap_or(0).max(0) as u32
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn homogeneous_membership_matches_macaulay(
        gens in prop::collection::vec(homogeneous_poly(), 1..4),
        probe in homogeneous_poly(),
        mult in homogeneous_poly(),
    ) {
        let r = ring();
        let gens: Vec<Polynomial> = gens.iter().map(|g| poly(&r, g)).collect();
        let gb = buchberger(&r, &gens, MonomialOrder::Grevlex).unwrap();
        let f = poly(&r, &probe);
        // homogeneous membership is decided in degree deg f
        prop_assert_eq!(gb.contains(&f), macaulay_member(&gens, &f, degree(&f), P));
        let member = poly(&r, &mult).mul(&gens[0]).unwrap();
        prop_assert!(gb.contains(&member));
        for g in gb.polys() {
            prop_assert!(macaulay_member(&gens, g, degree(g), P));
        }
    }

    #[test]
    fn membership_is_sound_against_macaulay(
        gens in prop::collection::vec(prop::collection::vec(term(), 1..4), 1..4),
        probe in prop::collection::vec(term(), 1..4),
    ) {
        let r = ring();
        let gens: Vec<Polynomial> = gens.iter().map(|g| poly(&r, g)).collect();
        let gb = buchberger(&r, &gens, MonomialOrder::Grevlex).unwrap();
        let f = poly(&r, &probe);
        if macaulay_member(&gens, &f, degree(&f) + 4, P) {
            prop_assert!(gb.contains(&f));
        }
        for g in &gens {
            prop_assert!(gb.contains(g));
        }
    }

    #[test]
    fn basis_ignores_generator_order(
        gens in prop::collection::vec(prop::collection::vec(term(), 1..4), 1..4),
        rot in 0usize..3,
        lex in any::<bool>(),
    ) {
        let r = ring();
        let order = if lex { MonomialOrder::Lex } else { MonomialOrder::Grevlex };
        let mut gens: Vec<Polynomial> = gens.iter().map(|g| poly(&r, g)).collect();
        let a = buchberger(&r, &gens, order).unwrap();
        let k = rot % gens.len();
        gens.rotate_left(k);
        gens.reverse();
        let b = buchberger(&r, &gens, order).unwrap();
        let mut pa: Vec<String> = a.polys().iter().map(ToString::to_string).collect();
        let mut pb: Vec<String> = b.polys().iter().map(ToString::to_string).collect();
        pa.sort();
        pb.sort();
        prop_assert_eq!(pa, pb);
    }

    #[test]
    fn hilbert_function_ignores_variable_names(gens in prop::collection::vec(homogeneous_poly(), 1..4)) {
        // swapping x and z relabels the ideal; the quotient dimensions stay put
        let r = ring();
        let swapped: Vec<Vec<(Vec<u32>, i64)>> = gens
            .iter()
            .map(|g| g.iter().map(|(e, c)| (vec![e[2], e[1], e[0]], *c)).collect())
            .collect();
        let a = buchberger(&r, &gens.iter().map(|g| poly(&r, g)).collect::<Vec<_>>(), MonomialOrder::Grevlex).unwrap();
        let b = buchberger(&r, &swapped.iter().map(|g| poly(&r, g)).collect::<Vec<_>>(), MonomialOrder::Grevlex).unwrap();
        for d in 0..6 {
            prop_assert_eq!(a.quotient_dim(d), b.quotient_dim(d));
        }
    }
}

#[test]
fn macaulay_oracle_examples() {
    let r = ring();
    let p = |s: &str| Polynomial::parse(&r, s).unwrap();
    // x*y - 1 and x generate the unit ideal, certificate of degree 2
    let gens = vec![p("x*y - 1"), p("x")];
    assert!(macaulay_member(&gens, &p("1"), 2, P));
    assert!(!macaulay_member(&gens, &p("1"), 1, P));
    assert!(!macaulay_member(&[p("x^2")], &p("x"), 5, P));
}
