use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::fdalgebra::FDModule;
use crate::field::DenseMatrix;
use crate::poly::{Ideal, Monomial, PolyMatrix, Polynomial, Ring};

/// Largest number of row subsets expanded when forming minors.
const MINOR_ROW_SETS_CAP: u64 = 20_000;

#[derive(Clone, Debug)]
pub struct RankIdeal {
    pub ideal: Ideal,
    pub module_dim: usize,
    pub free_rank_target: usize,
}

/// k[a_1..a_c], the coordinate ring of the rank variety.
pub fn alpha_ring(m: &FDModule) -> Ring {
    Ring::numbered(m.algebra().field(), "a", m.algebra().c(), 1)
}

/// Σ a_i X_i as a matrix over k[a_1..a_c].
pub fn generic_operator(m: &FDModule, ring: &Ring) -> PolyMatrix {
    let mut out = PolyMatrix::zeros(ring, m.dim(), m.dim());
    for (i, x) in m.actions().iter().enumerate() {
        let a = Polynomial::var(ring, i);
        for r in 0..m.dim() {
            for c in 0..m.dim() {
                if !x[(r, c)].is_zero() {
                    let v = out.get(r, c).add(&a.scale(&x[(r, c)])).expect("same ring");
                    out.set(r, c, v);
                }
            }
        }
    }
    out
}

/// N(α) = Σ α_i X_i at a point of the prime field.
pub fn operator_at(m: &FDModule, alpha: &[i64]) -> DenseMatrix {
    let f = m.algebra().field();
    let mut acc = DenseMatrix::zeros(f, m.dim(), m.dim());
    for (x, &a) in m.actions().iter().zip(alpha) {
        acc = acc.add(&x.scale(&f.from_i64(a))).expect("square");
    }
    acc
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Determinant of the rows `rows[depth..]` against the column set `mask`,
/// by Laplace expansion along the first remaining row.
fn minor(
    m: &PolyMatrix,
    rows: &[usize],
    depth: usize,
    mask: u64,
    memo: &mut HashMap<(usize, u64), Polynomial>,
) -> Polynomial {
    if depth == rows.len() {
        return Polynomial::one(m.ring());
    }
    if let Some(p) = memo.get(&(depth, mask)) {
        return p.clone();
    }
    let mut acc = Polynomial::zero(m.ring());
    let mut sign_neg = false;
    for c in 0..m.cols() {
        if mask >> c & 1 == 0 {
            continue;
        }
        let a = m.get(rows[depth], c);
        if !a.is_zero() {
            let sub = minor(m, rows, depth + 1, mask & !(1 << c), memo);
            if !sub.is_zero() {
                let t = a.mul(&sub).expect("same ring");
                acc = if sign_neg { acc.sub(&t) } else { acc.add(&t) }.expect("same ring");
            }
        }
        sign_neg = !sign_neg;
    }
    memo.insert((depth, mask), acc.clone());
    acc
}

/// All k×k minors of a square polynomial matrix, as a deduplicated list.
pub fn minors(m: &PolyMatrix, k: usize) -> Result<Vec<Polynomial>> {
    let n = m.rows();
    if n > 64 || m.cols() > 64 {
        return Err(Error::Precondition("minors are limited to 64 columns".into()));
    }
    if binomial(n as u64, k as u64) > MINOR_ROW_SETS_CAP {
        return Err(Error::Precondition(format!(
            "{} row subsets of size {k} exceed the minor expansion cap",
            binomial(n as u64, k as u64)
        )));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let cols = subsets(m.cols(), k);
    for rows in subsets(n, k) {
        let mut memo = HashMap::new();
        for cs in &cols {
            let mask = cs.iter().fold(0u64, |acc, &c| acc | 1 << c);
            let d = minor(m, &rows, 0, mask, &mut memo);
            if !d.is_zero() && seen.insert(d.clone()) {
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// A basis of the k-span of a list of polynomials.
pub fn span_basis(ring: &Ring, polys: &[Polynomial]) -> Vec<Polynomial> {
    let monos: Vec<Monomial> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if monos.is_empty() {
        return vec![];
    }
    let field = ring.field();
    let cols: Vec<Vec<_>> = polys.iter().map(|p| monos.iter().map(|m| p.coeff(m)).collect()).collect();
    DenseMatrix::from_columns(field, monos.len(), &cols)
        .column_space()
        .into_iter()
        .map(|v| Polynomial::from_terms(ring, monos.iter().cloned().zip(v)))
        .collect()
}

/// Ideal of the non-free locus: the (dim/p)-minors of (Σ α_i X_i)^{p−1}
/// when p divides dim M, and (0) otherwise.
pub fn rank_variety_ideal(m: &FDModule) -> Result<RankIdeal> {
    let alg = m.algebra();
    if !alg.group_mode() {
        return Err(Error::NotAGroupAlgebra);
    }
    let ring = alpha_ring(m);
    let p = alg.field().characteristic() as usize;
    if !m.dim().is_multiple_of(p) || m.dim() == 0 {
        let ideal = if m.dim() == 0 { Ideal::unit(&ring) } else { Ideal::zero(&ring) };
        return Ok(RankIdeal {
            ideal,
            module_dim: m.dim(),
            free_rank_target: m.dim() / p,
        });
    }
    let n = generic_operator(m, &ring);
    let mut pow = n.clone();
    for _ in 1..p - 1 {
        pow = pow.mul(&n)?;
    }
    let r = m.dim() / p;
    let all = minors(&pow, r)?;
    let gens = span_basis(&ring, &all);
    Ok(RankIdeal {
        ideal: Ideal::new(&ring, gens)?,
        module_dim: m.dim(),
        free_rank_target: r,
    })
}

/// Brute-force check: is M restricted to ⟨1 + Σ α_i x_i⟩ free at this point?
pub fn free_at_point(m: &FDModule, alpha: &[i64]) -> bool {
    let p = m.algebra().field().characteristic() as usize;
    if !m.dim().is_multiple_of(p) {
        return false;
    }
    operator_at(m, alpha).pow((p - 1) as u32).rank() == m.dim() / p
}
