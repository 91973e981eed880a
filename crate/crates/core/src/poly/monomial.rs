use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Monomial {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self, weights: &[u32]) -> i64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w as i64)
            .sum()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other)
            .then(|| Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    /// Append `extra` zero exponents.
    pub fn extend(&self, extra: usize) -> Monomial {
        let mut e = self.0.clone();
        e.resize(e.len() + extra, 0);
        Monomial(e)
    }
}

/// Monomial orders on k[x_1..x_n].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    /// Weighted degree first, ties broken by reverse lexicographic order.
    Grevlex,
    /// Block order eliminating the trailing `k` variables: weighted grevlex
    /// on the trailing block decides first, then grevlex on the rest.
    Elimination(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Grevlex => grevlex(&a.0, &b.0, weights),
            MonomialOrder::Elimination(k) => {
                let n = a.0.len();
                let s = n.saturating_sub(k);
                grevlex(&a.0[s..], &b.0[s..], &weights[s..])
                    .then_with(|| grevlex(&a.0[..s], &b.0[..s], &weights[..s]))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32], w: &[u32]) -> Ordering {
    let da: i64 = a.iter().zip(w).map(|(&e, &w)| e as i64 * w as i64).sum();
    let db: i64 = b.iter().zip(w).map(|(&e, &w)| e as i64 * w as i64).sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}

/// All monomials in `n` variables of weighted degree exactly `d`, in
/// lexicographic order of exponent vectors.
pub fn monomials_of_degree(weights: &[u32], d: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    let mut cur = vec![0u32; weights.len()];
    fill(weights, 0, d, &mut cur, &mut out);
    out.sort();
    out
}

fn fill(w: &[u32], i: usize, rem: i64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if i == w.len() {
        if rem == 0 {
            out.push(Monomial(cur.clone()));
        }
        return;
    }
    let mut e = 0;
    while e as i64 * w[i] as i64 <= rem {
        cur[i] = e;
        fill(w, i + 1, rem - e as i64 * w[i] as i64, cur, out);
        e += 1;
    }
    cur[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_basics() {
        let w = [1, 1, 1];
        let m = |v: &[u32]| Monomial(v.to_vec());
        // x*z < y^2 in grevlex
        assert_eq!(
            MonomialOrder::Grevlex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0]), &w),
            Ordering::Less
        );
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0]), &w),
            Ordering::Greater
        );
        // anything with the eliminated variable beats everything without it
        assert_eq!(
            MonomialOrder::Elimination(1).cmp(&m(&[0, 0, 1]), &m(&[5, 5, 0]), &w),
            Ordering::Greater
        );
    }

    #[test]
    fn enumerate_degree() {
        assert_eq!(monomials_of_degree(&[1, 1], 2).len(), 3);
        assert_eq!(monomials_of_degree(&[2, 2], 3).len(), 0);
        assert_eq!(monomials_of_degree(&[1, 2], 4).len(), 3);
    }
}
