use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{DenseMatrix, Field, Scalar};
use crate::poly::{Monomial, Polynomial, Ring};

/// A = k[x_1..x_c]/(x_1^{e_1}, …, x_c^{e_c}).
///
/// Basis: monomials with exponent of x_i below e_i, indexed in mixed radix
/// with x_1 varying fastest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CIAlgebra {
    field: Field,
    exps: Vec<u32>,
}

/// Element of A as a coordinate vector in the monomial basis.
pub type AElem = Vec<Scalar>;

impl CIAlgebra {
    pub fn new(field: Field, exps: Vec<u32>) -> Result<CIAlgebra> {
        if exps.is_empty() {
            return Err(Error::Precondition("need at least one variable".into()));
        }
        if exps.iter().any(|&e| e < 2) {
            return Err(Error::Precondition("relation exponents must be ≥ 2".into()));
        }
        let dim: u64 = exps.iter().map(|&e| e as u64).product();
        if dim > 4096 {
            return Err(Error::Precondition(format!("algebra of dimension {dim} is too large")));
        }
        Ok(CIAlgebra { field, exps })
    }

    /// Group algebra of (Z/p)^c over F_p.
    pub fn elementary_abelian(p: u64, c: usize) -> Result<CIAlgebra> {
        CIAlgebra::new(Field::prime(p)?, vec![p as u32; c])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn c(&self) -> usize {
        self.exps.len()
    }

    pub fn dim(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).product()
    }

    /// True when every e_i equals the characteristic, i.e. A is the group
    /// algebra of an elementary abelian p-group.
    pub fn group_mode(&self) -> bool {
        let p = self.field.characteristic();
        p > 0 && self.exps.iter().all(|&e| e as u64 == p)
    }

    pub fn index(&self, m: &[u32]) -> Option<usize> {
        let mut idx = 0;
        let mut stride = 1;
        for (&a, &e) in m.iter().zip(&self.exps) {
            if a >= e {
                return None;
            }
            idx += a as usize * stride;
            stride *= e as usize;
        }
        Some(idx)
    }

    pub fn monomial(&self, mut idx: usize) -> Vec<u32> {
        self.exps
            .iter()
            .map(|&e| {
                let a = idx % e as usize;
                idx /= e as usize;
                a as u32
            })
            .collect()
    }

    pub fn basis(&self) -> Vec<Vec<u32>> {
        (0..self.dim()).map(|i| self.monomial(i)).collect()
    }

    pub fn zero(&self) -> AElem {
        vec![self.field.zero(); self.dim()]
    }

    pub fn one(&self) -> AElem {
        self.basis_elem(0)
    }

    pub fn basis_elem(&self, i: usize) -> AElem {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn var(&self, i: usize) -> AElem {
        let mut m = vec![0; self.c()];
        m[i] = 1;
        self.basis_elem(self.index(&m).expect("e_i ≥ 2"))
    }

    /// Index of the product of two basis monomials, or `None` if it is zero.
    pub fn mul_index(&self, a: usize, b: usize) -> Option<usize> {
        let (ma, mb) = (self.monomial(a), self.monomial(b));
        let m: Vec<u32> = ma.iter().zip(&mb).map(|(x, y)| x + y).collect();
        self.index(&m)
    }

    pub fn mul(&self, a: &AElem, b: &AElem) -> AElem {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                if let Some(k) = self.mul_index(i, j) {
                    out[k] = &out[k] + &(x * y);
                }
            }
        }
        out
    }

    /// Matrix of multiplication by x_i on A.
    pub fn regular_action(&self, i: usize) -> DenseMatrix {
        let n = self.dim();
        let mut m = DenseMatrix::zeros(self.field, n, n);
        let xi = self.index(&{
            let mut v = vec![0; self.c()];
            v[i] = 1;
            v
        });
        for b in 0..n {
            if let Some(k) = self.mul_index(b, xi.expect("e_i ≥ 2")) {
                m[(k, b)] = self.field.one();
            }
        }
        m
    }

    /// Polynomial ring k[x_1..x_c] holding canonical lifts.
    pub fn lift_ring(&self) -> Ring {
        Ring::numbered(self.field, "x", self.c(), 1)
    }

    /// Canonical lift: the polynomial with exponents below e_i.
    pub fn to_poly(&self, ring: &Ring, a: &AElem) -> Polynomial {
        Polynomial::from_terms(
            ring,
            a.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Monomial(self.monomial(i)), c.clone())),
        )
    }

    /// Reduction of a polynomial modulo the relations.
    pub fn from_poly(&self, p: &Polynomial) -> AElem {
        let mut out = self.zero();
        for (m, c) in p.terms() {
            if let Some(i) = self.index(m.exps()) {
                out[i] = &out[i] + c;
            }
        }
        out
    }

    pub fn is_zero_elem(a: &AElem) -> bool {
        a.iter().all(Scalar::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_and_products() {
        let a = CIAlgebra::elementary_abelian(2, 2).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.group_mode());
        assert_eq!(a.basis(), vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
        let x = a.var(0);
        let y = a.var(1);
        assert_eq!(a.mul(&x, &y), a.basis_elem(3));
        assert!(CIAlgebra::is_zero_elem(&a.mul(&x, &x)));
        let t = CIAlgebra::new(Field::Prime(3), vec![2]).unwrap();
        assert!(!t.group_mode());
    }
}
