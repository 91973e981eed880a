use crate::error::{Error, Result};
use crate::field::{DenseMatrix, Scalar};

use super::algebra::{AElem, CIAlgebra};

/// Finite-dimensional A-module: commuting nilpotent matrices X_i with
/// X_i^{e_i} = 0, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FDModule {
    alg: CIAlgebra,
    dim: usize,
    actions: Vec<DenseMatrix>,
}

impl FDModule {
    /// Validates shapes, commutation and the relations X_i^{e_i} = 0.
    pub fn new(alg: &CIAlgebra, actions: Vec<DenseMatrix>) -> Result<FDModule> {
        if actions.len() != alg.c() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for {} variables",
                actions.len(),
                alg.c()
            )));
        }
        let dim = actions.first().map_or(0, DenseMatrix::rows);
        for (i, x) in actions.iter().enumerate() {
            if x.rows() != dim || x.cols() != dim {
                return Err(Error::DimensionMismatch("action matrices must be square of one size".into()));
            }
            if x.field() != alg.field() {
                return Err(Error::MixedRings);
            }
            if !x.pow(alg.exps()[i]).is_zero() {
                return Err(Error::Precondition(format!("x{}^{} does not act as zero", i + 1, alg.exps()[i])));
            }
        }
        for i in 0..actions.len() {
            for j in i + 1..actions.len() {
                if actions[i].mul(&actions[j])? != actions[j].mul(&actions[i])? {
                    return Err(Error::Precondition(format!("x{} and x{} do not commute", i + 1, j + 1)));
                }
            }
        }
        Ok(FDModule {
            alg: alg.clone(),
            dim,
            actions,
        })
    }

    /// Integer action matrices reduced into the field.
    pub fn from_i64(alg: &CIAlgebra, actions: &[Vec<Vec<i64>>]) -> Result<FDModule> {
        let mats = actions
            .iter()
            .map(|a| {
                if a.iter().any(|r| r.len() != a.len()) {
                    return Err(Error::DimensionMismatch("action matrices must be square".into()));
                }
                Ok(DenseMatrix::from_i64(alg.field(), a))
            })
            .collect::<Result<Vec<_>>>()?;
        FDModule::new(alg, mats)
    }

    pub fn zero(alg: &CIAlgebra) -> FDModule {
        FDModule {
            alg: alg.clone(),
            dim: 0,
            actions: vec![DenseMatrix::zeros(alg.field(), 0, 0); alg.c()],
        }
    }

    /// The trivial module k.
    pub fn trivial(alg: &CIAlgebra) -> FDModule {
        FDModule {
            alg: alg.clone(),
            dim: 1,
            actions: vec![DenseMatrix::zeros(alg.field(), 1, 1); alg.c()],
        }
    }

    /// A^rank with basis (generator j, monomial m) at index j·dim A + m.
    pub fn free(alg: &CIAlgebra, rank: usize) -> FDModule {
        let f = alg.field();
        let actions = (0..alg.c())
            .map(|i| {
                let reg = alg.regular_action(i);
                DenseMatrix::identity(f, rank).kronecker(&reg)
            })
            .collect();
        FDModule {
            alg: alg.clone(),
            dim: rank * alg.dim(),
            actions,
        }
    }

    pub fn algebra(&self) -> &CIAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[DenseMatrix] {
        &self.actions
    }

    pub fn action(&self, i: usize) -> &DenseMatrix {
        &self.actions[i]
    }

    /// Matrix of a basis monomial x^m.
    pub fn monomial_action(&self, m: &[u32]) -> DenseMatrix {
        let f = self.alg.field();
        let mut acc = DenseMatrix::identity(f, self.dim);
        for (i, &e) in m.iter().enumerate() {
            if e > 0 {
                acc = acc.mul(&self.actions[i].pow(e)).expect("square");
            }
        }
        acc
    }

    /// Matrix of an algebra element.
    pub fn element_action(&self, a: &AElem) -> DenseMatrix {
        let f = self.alg.field();
        let mut acc = DenseMatrix::zeros(f, self.dim, self.dim);
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                let m = self.monomial_action(&self.alg.monomial(i));
                acc = acc.add(&m.scale(c)).expect("square");
            }
        }
        acc
    }

    /// Span of the images X_i·M, as a list of vectors.
    pub fn radical_span(&self) -> Vec<Vec<Scalar>> {
        let mut out = Vec::new();
        for x in &self.actions {
            out.extend(x.columns());
        }
        out
    }

    pub fn direct_sum(&self, other: &FDModule) -> Result<FDModule> {
        if self.alg != other.alg {
            return Err(Error::MixedRings);
        }
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        Ok(FDModule {
            alg: self.alg.clone(),
            dim: self.dim + other.dim,
            actions,
        })
    }

    fn require_group(&self) -> Result<()> {
        if self.alg.group_mode() {
            Ok(())
        } else {
            Err(Error::NotAGroupAlgebra)
        }
    }

    /// Diagonal action: x_i ↦ x_i⊗1 + 1⊗x_i + x_i⊗x_i, basis index a·dim N + b.
    pub fn tensor(&self, other: &FDModule) -> Result<FDModule> {
        self.require_group()?;
        if self.alg != other.alg {
            return Err(Error::MixedRings);
        }
        let f = self.alg.field();
        let (im, in_) = (DenseMatrix::identity(f, self.dim), DenseMatrix::identity(f, other.dim));
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(x, y)| {
                x.kronecker(&in_)
                    .add(&im.kronecker(y))?
                    .add(&x.kronecker(y))
            })
            .collect::<Result<Vec<_>>>()?;
        FDModule::new(&self.alg, actions)
    }

    /// Hom_k(M, N) with g·α = g α g⁻¹, g = 1 + x_i. An element α is stored
    /// row-major: index r·dim M + c for the entry (r, c) of the dim N × dim M matrix.
    pub fn hom(&self, target: &FDModule) -> Result<FDModule> {
        self.require_group()?;
        if self.alg != target.alg {
            return Err(Error::MixedRings);
        }
        let f = self.alg.field();
        let n = self.dim * target.dim;
        let actions = (0..self.alg.c())
            .map(|i| {
                let g_n = DenseMatrix::identity(f, target.dim).add(&target.actions[i])?;
                let g_m_inv = unipotent_inverse(&self.actions[i], self.alg.exps()[i]);
                g_n.kronecker(&g_m_inv.transpose())
                    .sub(&DenseMatrix::identity(f, n))
            })
            .collect::<Result<Vec<_>>>()?;
        FDModule::new(&self.alg, actions)
    }

    /// Hom_k(M, k).
    pub fn dual(&self) -> Result<FDModule> {
        self.hom(&FDModule::trivial(&self.alg))
    }

    /// The submodule spanned by `vectors` (which must span an invariant
    /// subspace), in the basis given by the reduced row-echelon form.
    pub fn submodule(&self, vectors: &[Vec<Scalar>]) -> Result<(FDModule, DenseMatrix)> {
        let f = self.alg.field();
        let basis: Vec<Vec<Scalar>> = if vectors.is_empty() {
            vec![]
        } else {
            DenseMatrix::from_columns(f, self.dim, vectors).column_space()
        };
        let b = DenseMatrix::from_columns(f, self.dim, &basis);
        let k = basis.len();
        let mut actions = Vec::new();
        for x in &self.actions {
            let mut m = DenseMatrix::zeros(f, k, k);
            for (j, v) in basis.iter().enumerate() {
                let img = x.mul_vec(v)?;
                let coords = b
                    .solve(&img)?
                    .ok_or_else(|| Error::Precondition("subspace is not a submodule".into()))?;
                for (i, c) in coords.into_iter().enumerate() {
                    m[(i, j)] = c;
                }
            }
            actions.push(m);
        }
        Ok((
            FDModule {
                alg: self.alg.clone(),
                dim: k,
                actions,
            },
            b,
        ))
    }

    /// Spanning vectors of the submodule A·vectors.
    pub fn generated_span(&self, vectors: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
        let mut out = Vec::new();
        for m in self.alg.basis() {
            let act = self.monomial_action(&m);
            for v in vectors {
                out.push(act.mul_vec(v)?);
            }
        }
        Ok(out)
    }

    /// The submodule generated by `vectors`.
    pub fn generated_submodule(&self, vectors: &[Vec<Scalar>]) -> Result<(FDModule, DenseMatrix)> {
        self.submodule(&self.generated_span(vectors)?)
    }

    /// M / U for the submodule U generated by `vectors`; returns the quotient
    /// and the matrix of the projection M → M/U.
    pub fn quotient(&self, vectors: &[Vec<Scalar>]) -> Result<(FDModule, DenseMatrix)> {
        let f = self.alg.field();
        let gens = self.generated_span(vectors)?;
        let u: Vec<Vec<Scalar>> = if gens.is_empty() {
            vec![]
        } else {
            DenseMatrix::from_columns(f, self.dim, &gens).column_space()
        };
        let mut cols = u.clone();
        for i in 0..self.dim {
            let mut e = vec![f.zero(); self.dim];
            e[i] = f.one();
            cols.push(e);
        }
        let r = DenseMatrix::from_columns(f, self.dim, &cols).rref();
        let comp: Vec<usize> = r.pivots.iter().filter(|&&p| p >= u.len()).map(|p| p - u.len()).collect();
        let mut basis = u.clone();
        for &i in &comp {
            basis.push(cols[u.len() + i].clone());
        }
        let full = DenseMatrix::from_columns(f, self.dim, &basis);
        let q = comp.len();
        // projection: coordinates in [U | C], keep the C part
        let mut proj = DenseMatrix::zeros(f, q, self.dim);
        for i in 0..self.dim {
            let mut e = vec![f.zero(); self.dim];
            e[i] = f.one();
            let c = full.solve(&e)?.expect("basis of the whole space");
            for t in 0..q {
                proj[(t, i)] = c[u.len() + t].clone();
            }
        }
        let mut actions = Vec::new();
        for x in &self.actions {
            let mut m = DenseMatrix::zeros(f, q, q);
            for (j, &ci) in comp.iter().enumerate() {
                let img = x.mul_vec(&cols[u.len() + ci])?;
                let c = proj.mul_vec(&img)?;
                for (t, s) in c.into_iter().enumerate() {
                    m[(t, j)] = s;
                }
            }
            actions.push(m);
        }
        Ok((
            FDModule {
                alg: self.alg.clone(),
                dim: q,
                actions,
            },
            proj,
        ))
    }

    /// The same module in the basis given by the columns of `p` (invertible).
    pub fn change_basis(&self, p: &DenseMatrix) -> Result<FDModule> {
        let f = self.alg.field();
        if p.rank() != self.dim || p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::Precondition("change of basis must be invertible".into()));
        }
        let inv_cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|i| {
                let mut e = vec![f.zero(); self.dim];
                e[i] = f.one();
                p.solve(&e).map(|x| x.expect("invertible"))
            })
            .collect::<Result<_>>()?;
        let pinv = DenseMatrix::from_columns(f, self.dim, &inv_cols);
        let actions = self
            .actions
            .iter()
            .map(|x| pinv.mul(&x.mul(p)?))
            .collect::<Result<Vec<_>>>()?;
        FDModule::new(&self.alg, actions)
    }
}

/// (1 + X)⁻¹ = Σ_k (−X)^k for X with X^e = 0.
fn unipotent_inverse(x: &DenseMatrix, e: u32) -> DenseMatrix {
    let f = x.field();
    let n = x.rows();
    let neg = x.scale(&-f.one());
    let mut acc = DenseMatrix::identity(f, n);
    let mut pw = DenseMatrix::identity(f, n);
    for _ in 1..e {
        pw = pw.mul(&neg).expect("square");
        acc = acc.add(&pw).expect("square");
    }
    acc
}

/// Basis of Hom_A(M, N) as dim N × dim M matrices.
pub fn hom_space(m: &FDModule, n: &FDModule) -> Result<Vec<DenseMatrix>> {
    if m.algebra() != n.algebra() {
        return Err(Error::MixedRings);
    }
    let f = m.algebra().field();
    let (dm, dn) = (m.dim(), n.dim());
    let unknowns = dm * dn;
    if unknowns == 0 {
        return Ok(vec![]);
    }
    let c = m.algebra().c();
    let mut eq = DenseMatrix::zeros(f, c * unknowns, unknowns);
    for i in 0..c {
        let (xm, xn) = (m.action(i), n.action(i));
        for r in 0..dn {
            for col in 0..dm {
                let row = i * unknowns + r * dm + col;
                // (X^N φ)[r][col] = Σ_k XN[r][k] φ[k][col]
                for k in 0..dn {
                    let a = &xn[(r, k)];
                    if !a.is_zero() {
                        let u = k * dm + col;
                        eq[(row, u)] = &eq[(row, u)] + a;
                    }
                }
                // − (φ X^M)[r][col] = − Σ_k φ[r][k] XM[k][col]
                for k in 0..dm {
                    let a = &xm[(k, col)];
                    if !a.is_zero() {
                        let u = r * dm + k;
                        eq[(row, u)] = &eq[(row, u)] - a;
                    }
                }
            }
        }
    }
    Ok(eq
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let rows: Vec<Vec<Scalar>> = v.chunks(dm).map(<[Scalar]>::to_vec).collect();
            DenseMatrix::from_rows(f, rows).expect("rectangular")
        })
        .collect())
}
