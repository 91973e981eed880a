//! Buchberger's algorithm over free modules R^r with a position-over-term
//! order. Ideals are the rank-one case.

use std::cmp::Ordering;
use std::collections::HashSet;

use super::monomial::{monomials_of_degree, Monomial, MonomialOrder};
use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};
use crate::field::Scalar;

/// Module element as a list of `(position, monomial, coefficient)` sorted
/// from the largest term down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct MVec {
    pub(crate) terms: Vec<(usize, Monomial, Scalar)>,
}

impl MVec {
    fn lead(&self) -> Option<&(usize, Monomial, Scalar)> {
        self.terms.first()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Ctx {
    pub(crate) order: MonomialOrder,
    pub(crate) weights: Vec<u32>,
    pub(crate) shifts: Vec<i64>,
}

impl Ctx {
    /// Smaller position is larger; within a position the monomial order decides.
    fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        b.0.cmp(&a.0)
            .then_with(|| self.order.cmp(a.1, b.1, &self.weights))
    }

    fn degree(&self, pos: usize, m: &Monomial) -> i64 {
        m.degree(&self.weights) + self.shifts[pos]
    }

    fn to_mvec(&self, v: &[Polynomial]) -> MVec {
        let mut terms = Vec::new();
        for (pos, p) in v.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push((pos, m.clone(), c.clone()));
            }
        }
        terms.sort_by(|a, b| self.cmp((b.0, &b.1), (a.0, &a.1)));
        MVec { terms }
    }

    fn to_vec(&self, ring: &Ring, v: &MVec) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(ring); self.shifts.len()];
        for (pos, m, c) in &v.terms {
            out[*pos].add_term(m.clone(), c);
        }
        out
    }

    /// `p − c·m·g`.
    fn sub_mul(&self, p: &MVec, c: &Scalar, m: &Monomial, g: &MVec) -> MVec {
        let mut out = Vec::with_capacity(p.terms.len() + g.terms.len());
        let mut i = 0;
        let mut gi = g
            .terms
            .iter()
            .map(|(pos, n, d)| (*pos, n.mul(m), -&(d * c)))
            .peekable();
        while i < p.terms.len() || gi.peek().is_some() {
            let ord = match (p.terms.get(i), gi.peek()) {
                (Some(a), Some(b)) => self.cmp((a.0, &a.1), (b.0, &b.1)),
                (Some(_), None) => Ordering::Greater,
                (None, _) => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(p.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => out.push(gi.next().expect("peeked")),
                Ordering::Equal => {
                    let (pos, n, d) = gi.next().expect("peeked");
                    let s = &p.terms[i].2 + &d;
                    if !s.is_zero() {
                        out.push((pos, n, s));
                    }
                    i += 1;
                }
            }
        }
        MVec { terms: out }
    }

    fn monic(&self, mut v: MVec) -> MVec {
        if let Some(l) = v.lead() {
            if !l.2.is_one() {
                let inv = l.2.inv().expect("nonzero lead");
                for t in &mut v.terms {
                    t.2 = &t.2 * &inv;
                }
            }
        }
        v
    }

    fn find_reducer<'a>(&self, pos: usize, m: &Monomial, basis: &'a [MVec]) -> Option<&'a MVec> {
        basis.iter().find(|g| {
            let l = g.lead().expect("basis elements are nonzero");
            l.0 == pos && l.1.divides(m)
        })
    }

    /// Reduce `p` by monic `basis`. With `full`, every term is reduced;
    /// otherwise only until the leading term is irreducible.
    fn reduce(&self, mut p: MVec, basis: &[MVec], full: bool) -> MVec {
        let mut done = Vec::new();
        while let Some((pos, m, c)) = p.lead().cloned() {
            match self.find_reducer(pos, &m, basis) {
                Some(g) => {
                    let q = g.lead().expect("nonzero").1.quotient_of(&m).expect("divides");
                    p = self.sub_mul(&p, &c, &q, g);
                }
                None if full => {
                    done.push(p.terms.remove(0));
                }
                None => break,
            }
        }
        done.extend(p.terms);
        MVec { terms: done }
    }

    fn spoly(&self, f: &MVec, g: &MVec) -> MVec {
        let (_, fm, _) = f.lead().expect("nonzero");
        let (_, gm, _) = g.lead().expect("nonzero");
        let l = fm.lcm(gm);
        let a = fm.quotient_of(&l).expect("lcm");
        let b = gm.quotient_of(&l).expect("lcm");
        let fa = MVec {
            terms: f
                .terms
                .iter()
                .map(|(p, m, c)| (*p, m.mul(&a), c.clone()))
                .collect(),
        };
        let one = f.lead().expect("nonzero").2.field().one();
        self.sub_mul(&fa, &one, &b, g)
    }

    /// Reduced Gröbner basis of the submodule spanned by `gens`, sorted by
    /// increasing leading term.
    pub(crate) fn groebner(&self, gens: Vec<MVec>) -> Vec<MVec> {
        let rank_one = self.shifts.len() == 1;
        let mut basis: Vec<MVec> = Vec::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();

        let insert = |v: MVec, basis: &mut Vec<MVec>, pending: &mut HashSet<(usize, usize)>| {
            let v = self.reduce(v, basis, false);
            if v.is_zero() {
                return;
            }
            let v = self.monic(v);
            let pos = v.lead().expect("nonzero").0;
            let k = basis.len();
            for (i, g) in basis.iter().enumerate() {
                if g.lead().expect("nonzero").0 == pos {
                    pending.insert((i, k));
                }
            }
            basis.push(v);
        };

        let mut sorted = gens;
        sorted.sort_by(|a, b| match (a.lead(), b.lead()) {
            (Some(x), Some(y)) => self
                .degree(x.0, &x.1)
                .cmp(&self.degree(y.0, &y.1))
                .then_with(|| self.cmp((x.0, &x.1), (y.0, &y.1))),
            (None, _) => Ordering::Less,
            (_, None) => Ordering::Greater,
        });
        for g in sorted {
            insert(g, &mut basis, &mut pending);
        }

        while !pending.is_empty() {
            let (i, j) = *pending
                .iter()
                .min_by(|a, b| self.pair_key(&basis, **a, **b))
                .expect("nonempty");
            pending.remove(&(i, j));
            let (pos, mi, _) = basis[i].lead().expect("nonzero").clone();
            let mj = basis[j].lead().expect("nonzero").1.clone();
            if rank_one && mi.coprime(&mj) {
                continue;
            }
            let l = mi.lcm(&mj);
            let chain = (0..basis.len()).any(|k| {
                if k == i || k == j {
                    return false;
                }
                let lk = basis[k].lead().expect("nonzero");
                lk.0 == pos
                    && lk.1.divides(&l)
                    && !pending.contains(&(i.min(k), i.max(k)))
                    && !pending.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            let s = self.spoly(&basis[i], &basis[j]);
            insert(s, &mut basis, &mut pending);
        }

        // Minimalize, then tail-reduce.
        let mut keep: Vec<MVec> = Vec::new();
        for (i, g) in basis.iter().enumerate() {
            let (p, m, _) = g.lead().expect("nonzero");
            let redundant = basis.iter().enumerate().any(|(j, h)| {
                let (q, n, _) = h.lead().expect("nonzero");
                j != i && q == p && n.divides(m) && (n != m || j < i)
            });
            if !redundant {
                keep.push(g.clone());
            }
        }
        let mut out = Vec::with_capacity(keep.len());
        for i in 0..keep.len() {
            let others: Vec<MVec> = keep
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            out.push(self.monic(self.reduce(keep[i].clone(), &others, true)));
        }
        out.sort_by(|a, b| {
            let (x, y) = (a.lead().expect("nonzero"), b.lead().expect("nonzero"));
            self.cmp((x.0, &x.1), (y.0, &y.1))
        });
        out
    }

    fn pair_key(&self, basis: &[MVec], a: (usize, usize), b: (usize, usize)) -> Ordering {
        let key = |(i, j): (usize, usize)| {
            let (p, m, _) = basis[i].lead().expect("nonzero");
            let l = m.lcm(&basis[j].lead().expect("nonzero").1);
            (*p, l)
        };
        let (ka, kb) = (key(a), key(b));
        self.degree(ka.0, &ka.1)
            .cmp(&self.degree(kb.0, &kb.1))
            .then_with(|| self.cmp((ka.0, &ka.1), (kb.0, &kb.1)))
            .then_with(|| a.cmp(&b))
    }
}

/// Gröbner basis of a submodule of the graded free module ⊕ R(−shift_i).
#[derive(Clone, Debug)]
pub struct ModuleGb {
    ring: Ring,
    ctx: Ctx,
    basis: Vec<MVec>,
}

impl ModuleGb {
    /// Submodule of R^rank spanned by `gens` (each of length `shifts.len()`).
    pub fn new(
        ring: &Ring,
        shifts: &[i64],
        gens: &[Vec<Polynomial>],
        order: MonomialOrder,
    ) -> Result<ModuleGb> {
        for g in gens {
            if g.len() != shifts.len() {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} in a free module of rank {}",
                    g.len(),
                    shifts.len()
                )));
            }
            if g.iter().any(|p| p.ring() != ring) {
                return Err(Error::MixedRings);
            }
        }
        let ctx = Ctx {
            order,
            weights: ring.weights().to_vec(),
            shifts: shifts.to_vec(),
        };
        let basis = ctx.groebner(gens.iter().map(|g| ctx.to_mvec(g)).collect());
        Ok(ModuleGb {
            ring: ring.clone(),
            ctx,
            basis,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.ctx.shifts.len()
    }

    pub fn shifts(&self) -> &[i64] {
        &self.ctx.shifts
    }

    pub fn order(&self) -> MonomialOrder {
        self.ctx.order
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn elements(&self) -> Vec<Vec<Polynomial>> {
        self.basis.iter().map(|b| self.ctx.to_vec(&self.ring, b)).collect()
    }

    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.basis
            .iter()
            .map(|b| {
                let l = b.lead().expect("nonzero");
                (l.0, l.1.clone())
            })
            .collect()
    }

    /// Fully reduced normal form.
    pub fn normal_form(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        let r = self.ctx.reduce(self.ctx.to_mvec(v), &self.basis, true);
        self.ctx.to_vec(&self.ring, &r)
    }

    pub fn contains(&self, v: &[Polynomial]) -> bool {
        self.ctx
            .reduce(self.ctx.to_mvec(v), &self.basis, false)
            .is_zero()
    }

    /// True when the submodule is the whole free module.
    pub fn is_everything(&self) -> bool {
        (0..self.rank()).all(|i| {
            self.basis.iter().any(|b| {
                let l = b.lead().expect("nonzero");
                l.0 == i && l.1.is_one()
            })
        })
    }

    /// Dimension of the degree-`d` part of the cokernel R^r / submodule,
    /// counted as standard monomials. Requires a homogeneous submodule.
    pub fn quotient_dim(&self, d: i64) -> usize {
        let lts = self.leading_terms();
        let mut n = 0;
        for pos in 0..self.rank() {
            for m in monomials_of_degree(&self.ctx.weights, d - self.ctx.shifts[pos]) {
                if !lts.iter().any(|(p, l)| *p == pos && l.divides(&m)) {
                    n += 1;
                }
            }
        }
        n
    }
}

/// Degree of a homogeneous vector in ⊕ R(−shift_i); `None` when it is zero
/// or not homogeneous.
pub fn vector_degree(v: &[Polynomial], shifts: &[i64]) -> Option<i64> {
    let mut d = None;
    for (p, s) in v.iter().zip(shifts) {
        if p.is_zero() {
            continue;
        }
        let e = p.homogeneous_degree()? + s;
        match d {
            None => d = Some(e),
            Some(x) if x == e => {}
            Some(_) => return None,
        }
    }
    d
}

/// Generators of the syzygy module {a : Σ a_j·gens_j = 0} of vectors in
/// ⊕ R(−shift_i). Each syzygy has one entry per generator.
pub fn syzygies(ring: &Ring, shifts: &[i64], gens: &[Vec<Polynomial>]) -> Result<Vec<Vec<Polynomial>>> {
    let r = shifts.len();
    let k = gens.len();
    let mut all_shifts = shifts.to_vec();
    for g in gens {
        if g.len() != r {
            return Err(Error::DimensionMismatch("syzygy input length".into()));
        }
        all_shifts.push(vector_degree(g, shifts).unwrap_or(0));
    }
    let ext: Vec<Vec<Polynomial>> = gens
        .iter()
        .enumerate()
        .map(|(j, g)| {
            let mut v = g.clone();
            v.extend((0..k).map(|i| {
                if i == j {
                    Polynomial::one(ring)
                } else {
                    Polynomial::zero(ring)
                }
            }));
            v
        })
        .collect();
    let gb = ModuleGb::new(ring, &all_shifts, &ext, MonomialOrder::Grevlex)?;
    Ok(gb
        .elements()
        .into_iter()
        .filter(|v| v[..r].iter().all(Polynomial::is_zero))
        .map(|v| v[r..].to_vec())
        .collect())
}

/// Reduced Gröbner basis of a polynomial ideal.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    inner: ModuleGb,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn order(&self) -> MonomialOrder {
        self.inner.order()
    }

    pub fn ring(&self) -> &Ring {
        self.inner.ring()
    }

    pub fn is_unit(&self) -> bool {
        self.inner.is_everything()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.inner.leading_terms().into_iter().map(|t| t.1).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.inner
            .normal_form(std::slice::from_ref(f))
            .pop()
            .expect("rank one")
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.inner.contains(std::slice::from_ref(f))
    }

    /// Number of standard monomials of weighted degree `d` (Hilbert function
    /// of R/I for homogeneous I).
    pub fn quotient_dim(&self, d: i64) -> usize {
        self.inner.quotient_dim(d)
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(ring: &Ring, gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    let vecs: Vec<Vec<Polynomial>> = gens.iter().map(|g| vec![g.clone()]).collect();
    let inner = ModuleGb::new(ring, &[0], &vecs, order)?;
    let polys = inner.elements().into_iter().map(|mut v| v.pop().expect("rank one")).collect();
    Ok(GroebnerBasis { inner, polys })
}
