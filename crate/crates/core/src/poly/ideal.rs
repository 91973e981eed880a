use std::fmt;
use std::sync::OnceLock;

use super::groebner::{buchberger, GroebnerBasis};
use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

/// An ideal given by generators, with a lazily computed grevlex Gröbner basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl PartialEq for Ideal {
    /// Equality as ideals (same reduced Gröbner basis).
    fn eq(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.gb().polys() == other.gb().polys()
    }
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(Error::MixedRings);
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        })
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Ideal> {
        let ps = gens
            .iter()
            .map(|s| Polynomial::parse(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, ps)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![]).expect("same ring")
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    /// The ideal generated by the variables with the given indices.
    pub fn variables(ring: &Ring, idx: &[usize]) -> Ideal {
        Ideal::new(ring, idx.iter().map(|&i| Polynomial::var(ring, i)).collect()).expect("same ring")
    }

    /// The irrelevant ideal (all variables).
    pub fn irrelevant(ring: &Ring) -> Ideal {
        Ideal::variables(ring, &(0..ring.nvars()).collect::<Vec<_>>())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            buchberger(&self.ring, &self.gens, MonomialOrder::Grevlex).expect("generators share a ring")
        })
    }

    pub fn gb_with(&self, order: MonomialOrder) -> GroebnerBasis {
        buchberger(&self.ring, &self.gens, order).expect("generators share a ring")
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        f.ring() == &self.ring && self.gb().contains(f)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(Polynomial::is_monomial)
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::MixedRings);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.mul(b)?);
            }
        }
        Ideal::new(&self.ring, g)
    }

    /// I ∩ J, by eliminating t from t·I + (1 − t)·J.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let big = self.ring.extend(&["t"], &[1]);
        let t = Polynomial::var(&big, self.ring.nvars());
        let one_minus_t = Polynomial::one(&big).sub(&t)?;
        let mut g = Vec::new();
        for a in &self.gens {
            g.push(t.mul(&a.embed(&big))?);
        }
        for b in &other.gens {
            g.push(one_minus_t.mul(&b.embed(&big))?);
        }
        let gb = buchberger(&big, &g, MonomialOrder::Elimination(1))?;
        let kept = gb
            .polys()
            .iter()
            .filter_map(|p| p.restrict(&self.ring))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// (I : f) = {g : g·f ∈ I}.
    pub fn quotient(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::ZeroDivisorArgument);
        }
        if f.ring() != &self.ring {
            return Err(Error::MixedRings);
        }
        let fi = Ideal::new(&self.ring, vec![f.clone()])?;
        let cap = self.intersection(&fi)?;
        let gens = cap
            .gb()
            .polys()
            .iter()
            .map(|g| g.div_exact(f))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// (I : J) = ∩ (I : g) over generators g of J.
    pub fn quotient_ideal(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut acc = Ideal::unit(&self.ring);
        for g in &other.gens {
            acc = acc.intersection(&self.quotient(g)?)?;
        }
        Ok(acc)
    }

    /// f ∈ √I, decided by whether 1 ∈ I + (1 − t·f).
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::MixedRings);
        }
        if f.is_zero() {
            return Ok(true);
        }
        let big = self.ring.extend(&["t"], &[1]);
        let t = Polynomial::var(&big, self.ring.nvars());
        let mut g: Vec<Polynomial> = self.gens.iter().map(|p| p.embed(&big)).collect();
        g.push(Polynomial::one(&big).sub(&t.mul(&f.embed(&big))?)?);
        Ok(buchberger(&big, &g, MonomialOrder::Grevlex)?.is_unit())
    }

    /// √J ⊆ √I, i.e. every generator of `other` lies in √self.
    pub fn radical_contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.radical_contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minimal primes of a monomial ideal, each returned as the sorted list
    /// of indices of the variables generating it. The zero ideal gives [[]].
    pub fn monomial_minimal_primes(&self) -> Result<Vec<Vec<usize>>> {
        if !self.is_monomial() {
            return Err(Error::NotMonomial);
        }
        let supports: Vec<Vec<usize>> = self
            .gens
            .iter()
            .map(|g| g.terms().next().expect("nonzero").0.support())
            .collect();
        if supports.iter().any(Vec::is_empty) {
            return Ok(vec![]);
        }
        Ok(minimal_hitting_sets(self.ring.nvars(), &supports))
    }

    /// I ⊆ p for the prime generated by the variables `vars`.
    pub fn inside_variable_prime(&self, vars: &[usize]) -> bool {
        self.gens.iter().all(|g| in_variable_prime(g, vars))
    }
}

/// f ∈ (x_i : i ∈ vars): every term involves one of the variables.
pub fn in_variable_prime(f: &Polynomial, vars: &[usize]) -> bool {
    f.terms().all(|(m, _)| vars.iter().any(|&i| m.0[i] > 0))
}

/// Minimal subsets of 0..n meeting every set in `sets`, sorted by size then
/// lexicographically.
pub fn minimal_hitting_sets(n: usize, sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    assert!(n < 24, "hitting-set search over too many variables");
    let masks: Vec<u32> = sets
        .iter()
        .map(|s| s.iter().fold(0u32, |m, &i| m | (1 << i)))
        .collect();
    let mut hits: Vec<u32> = (0u32..(1 << n))
        .filter(|&h| masks.iter().all(|&m| m & h != 0))
        .collect();
    hits.sort_by_key(|h| (h.count_ones(), h.reverse_bits()));
    let mut minimal: Vec<u32> = Vec::new();
    for h in hits {
        if !minimal.iter().any(|&m| m & !h == 0) {
            minimal.push(h);
        }
    }
    let mut out: Vec<Vec<usize>> = minimal
        .into_iter()
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "({})", g.join(", "))
    }
}

/// Monomial x^e in `ring`.
pub fn monomial_poly(ring: &Ring, exps: &[u32]) -> Polynomial {
    Polynomial::monomial(ring, Monomial(exps.to_vec()))
}
