use crate::field::{span_rank, DenseMatrix, Field, Scalar};

/// Bounded cochain complex of finite-dimensional vector spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VecComplex {
    pub field: Field,
    pub lo: i64,
    pub dims: Vec<usize>,
    /// `diffs[k]` maps degree `lo + k` to `lo + k + 1`.
    pub diffs: Vec<DenseMatrix>,
}

impl VecComplex {
    pub fn dim(&self, n: i64) -> usize {
        let k = n - self.lo;
        if k < 0 || k as usize >= self.dims.len() {
            0
        } else {
            self.dims[k as usize]
        }
    }

    /// d^n as a matrix (zero outside the stored range).
    pub fn differential(&self, n: i64) -> DenseMatrix {
        let k = n - self.lo;
        if k >= 0 && (k as usize) < self.diffs.len() {
            self.diffs[k as usize].clone()
        } else {
            DenseMatrix::zeros(self.field, self.dim(n + 1), self.dim(n))
        }
    }

    pub fn cycles(&self, n: i64) -> Vec<Vec<Scalar>> {
        let d = self.differential(n);
        if d.rows() == 0 {
            return (0..self.dim(n))
                .map(|i| unit(self.field, self.dim(n), i))
                .collect();
        }
        d.kernel_basis()
    }

    pub fn boundaries(&self, n: i64) -> Vec<Vec<Scalar>> {
        let d = self.differential(n - 1);
        if d.cols() == 0 || d.rows() == 0 {
            return vec![];
        }
        d.column_space()
    }

    pub fn cohomology_dim(&self, n: i64) -> usize {
        let z = self.dim(n) - self.differential(n).rank();
        z - self.differential(n - 1).rank()
    }

    /// Largest |d^{n+1}·d^n| check: true when every composite vanishes.
    pub fn is_complex(&self) -> bool {
        self.diffs
            .windows(2)
            .all(|w| w[1].mul(&w[0]).map(|m| m.is_zero()).unwrap_or(false))
    }
}

fn unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// Rank of the map H^n(a) → H^n(b) induced by the cochain map component
/// `f: a^n → b^n`.
pub fn induced_rank(a: &VecComplex, b: &VecComplex, n: i64, f: &DenseMatrix) -> usize {
    let len = b.dim(n);
    let bd = b.boundaries(n);
    let mut span = bd.clone();
    for z in a.cycles(n) {
        span.push(f.mul_vec(&z).expect("map shape"));
    }
    span_rank(b.field, len, &span) - span_rank(b.field, len, &bd)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_term_complex() {
        let f = Field::Prime(2);
        let c = VecComplex {
            field: f,
            lo: 0,
            dims: vec![2, 1],
            diffs: vec![DenseMatrix::from_i64(f, &[vec![1, 1]])],
        };
        assert_eq!(c.cohomology_dim(0), 1);
        assert_eq!(c.cohomology_dim(1), 0);
        assert_eq!(c.cohomology_dim(5), 0);
        let id = DenseMatrix::identity(f, 2);
        assert_eq!(induced_rank(&c, &c, 0, &id), 1);
    }
}
