use std::collections::BTreeMap;
use std::fmt;

use super::monomial::{Monomial, MonomialOrder};
use super::ring::{Grading, Ring};
use crate::error::{Error, Result};
use crate::field::Scalar;

/// A polynomial: a finite map from monomials to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Polynomial {
        Polynomial::term(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn var(ring: &Ring, i: usize) -> Polynomial {
        Polynomial::monomial(ring, Monomial::var(ring.nvars(), i))
    }

    pub fn monomial(ring: &Ring, m: Monomial) -> Polynomial {
        Polynomial::term(ring, ring.field().one(), m)
    }

    pub fn term(ring: &Ring, c: Scalar, m: Monomial) -> Polynomial {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Sum of the given terms; repeated monomials are combined.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.ring.field().zero())
    }

    /// Constant term.
    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one(self.ring.nvars()))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m);
        match e {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::MixedRings);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), c);
        }
        Ok(p)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), &-c);
        }
        Ok(p)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut p = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                p.add_term(m.mul(n), &(c * d));
            }
        }
        Ok(p)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            base = base.mul(&base).expect("same ring");
            e >>= 1;
        }
        acc
    }

    /// Largest weighted degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms
            .keys()
            .map(|m| m.degree(self.ring.weights()))
            .max()
    }

    /// Weighted degree shared by all terms, if there is one. Zero is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let w = self.ring.weights();
        let mut it = self.terms.keys().map(|m| m.degree(w));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Common exponent vector of all terms, for multigraded homogeneity.
    pub fn multidegree(&self) -> Option<&Monomial> {
        let mut it = self.terms.keys();
        let m = it.next()?;
        if self.terms.len() == 1 {
            Some(m)
        } else {
            None
        }
    }

    /// Homogeneity in the ring's own grading mode.
    pub fn is_graded_homogeneous(&self) -> bool {
        match self.ring.grading() {
            Grading::Single => self.is_homogeneous(),
            Grading::Multi => self.terms.len() <= 1,
        }
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        let w = self.ring.weights();
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0, w))
    }

    /// Terms sorted from largest to smallest in `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, Scalar)> {
        let w = self.ring.weights();
        let mut t: Vec<(Monomial, Scalar)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        t.sort_by(|a, b| order.cmp(&b.0, &a.0, w));
        t
    }

    /// Divide by the leading coefficient in `order`.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
            None => self.clone(),
        }
    }

    /// Exact quotient `self / d`; fails when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Polynomial> {
        self.check(d)?;
        let order = MonomialOrder::Grevlex;
        let (lm, lc) = d.leading_term(order).ok_or(Error::DivisionByZero)?;
        let (lm, lc_inv) = (lm.clone(), lc.inv()?);
        let mut q = Polynomial::zero(&self.ring);
        let mut r = self.clone();
        while let Some((m, c)) = r.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
            let Some(u) = lm.quotient_of(&m) else {
                return Err(Error::Precondition("polynomial division is not exact".into()));
            };
            let t = Polynomial::term(&self.ring, &c * &lc_inv, u);
            r = r.sub(&t.mul(d)?)?;
            q = q.add(&t)?;
        }
        Ok(q)
    }

    /// Re-express in `target`, which must have at least as many variables
    /// (extra variables get exponent 0) over the same field.
    pub fn embed(&self, target: &Ring) -> Polynomial {
        assert!(target.nvars() >= self.ring.nvars());
        let extra = target.nvars() - self.ring.nvars();
        Polynomial {
            ring: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.extend(extra), c.clone()))
                .collect(),
        }
    }

    /// Drop trailing variables; `None` if one of them occurs.
    pub fn restrict(&self, target: &Ring) -> Option<Polynomial> {
        let n = target.nvars();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0[n..].iter().any(|&e| e > 0) {
                return None;
            }
            terms.insert(Monomial(m.0[..n].to_vec()), c.clone());
        }
        Some(Polynomial {
            ring: target.clone(),
            terms,
        })
    }

    /// Same coefficients and exponents, viewed in another ring with the same
    /// number of variables and field.
    pub fn rename_ring(&self, target: &Ring) -> Result<Polynomial> {
        if target.nvars() != self.ring.nvars() || target.field() != self.ring.field() {
            return Err(Error::VariableMismatch(format!(
                "cannot identify {} with {}",
                self.ring, target
            )));
        }
        Ok(Polynomial {
            ring: target.clone(),
            terms: self.terms.clone(),
        })
    }

    /// Substitute `values[i]` for variable i.
    pub fn eval(&self, values: &[Scalar]) -> Scalar {
        let mut acc = self.ring.field().zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, v) in m.0.iter().zip(values) {
                t = &t * &v.pow(*e as u64);
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Substitute polynomials (over a common ring) for the variables.
    pub fn substitute(&self, images: &[Polynomial], target: &Ring) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (e, img) in m.0.iter().zip(images) {
                if *e > 0 {
                    t = t.mul(&img.pow(*e))?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        for (k, (m, c)) in self.sorted_terms(MonomialOrder::Grevlex).iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if k > 0 {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(f, "-")?;
            }
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        vars[i].clone()
                    } else {
                        format!("{}^{}", vars[i], e)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}
