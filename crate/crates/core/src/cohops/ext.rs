use serde::Serialize;

use crate::error::{Error, Result};
use crate::fdalgebra::{AMatrix, FDModule, MinimalResolution};
use crate::field::{DenseMatrix, Field, Scalar};
use crate::poly::{monomials_of_degree, Ideal, Monomial, Polynomial, Ring};

use super::operators::{eisenbud_operators, OperatorFamily};

/// Weight of each χ_i.
pub const CHI_WEIGHT: u32 = 2;

/// Ext*_A(M, N) in degrees 0..=bound with the action of χ_1..χ_c.
#[derive(Clone, Debug)]
pub struct ExtModule {
    pub field: Field,
    pub c: usize,
    pub bound: usize,
    pub dims: Vec<usize>,
    /// `chi[i][n]`: Ext^n → Ext^{n+2}, defined for n + 2 ≤ bound.
    pub chi: Vec<Vec<DenseMatrix>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtReport {
    pub dims: Vec<usize>,
    pub chi: Vec<Vec<Vec<Vec<i64>>>>,
    pub hilbert_differences: Vec<Vec<i64>>,
}

impl ExtModule {
    /// k[χ_1..χ_c] with every χ_i of degree 2.
    pub fn ring(&self) -> Ring {
        Ring::numbered(self.field, "chi", self.c, CHI_WEIGHT)
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    /// Matrix of a χ-monomial Ext^n → Ext^{n + 2|m|}, or None past the bound.
    pub fn monomial_map(&self, m: &[u32], n: usize) -> Option<DenseMatrix> {
        let total: u32 = m.iter().sum();
        let top = n + 2 * total as usize;
        if top > self.bound {
            return None;
        }
        let mut acc = DenseMatrix::identity(self.field, self.dim(n));
        let mut deg = n;
        for (i, &e) in m.iter().enumerate() {
            for _ in 0..e {
                acc = self.chi[i][deg].mul(&acc).expect("chained degrees");
                deg += 2;
            }
        }
        Some(acc)
    }

    pub fn report(&self) -> ExtReport {
        let chi = self
            .chi
            .iter()
            .map(|maps| {
                maps.iter()
                    .map(|m| {
                        (0..m.rows())
                            .map(|r| m.row(r).iter().map(|s| s.to_i64().unwrap_or(0)).collect())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        ExtReport {
            dims: self.dims.clone(),
            chi,
            hilbert_differences: hilbert_differences(&self.dims, self.c),
        }
    }
}

/// Iterated finite differences of a dimension sequence, orders 0..=depth.
pub fn hilbert_differences(dims: &[usize], depth: usize) -> Vec<Vec<i64>> {
    let mut rows = vec![dims.iter().map(|&d| d as i64).collect::<Vec<i64>>()];
    for _ in 0..depth {
        let last = rows.last().expect("nonempty");
        let next: Vec<i64> = last.windows(2).map(|w| w[1] - w[0]).collect();
        rows.push(next);
    }
    rows
}

/// Hom_A(F_n, N) → Hom_A(F_m, N) induced by precomposition with an A-matrix
/// F_m → F_n; coordinates (generator j, basis vector of N).
fn precompose(a: &AMatrix, n_mod: &FDModule) -> DenseMatrix {
    let f = n_mod.algebra().field();
    let dn = n_mod.dim();
    let mut out = DenseMatrix::zeros(f, a.cols * dn, a.rows * dn);
    for i in 0..a.cols {
        for j in 0..a.rows {
            let block = n_mod.element_action(&a.entries[j][i]);
            if !block.is_zero() {
                out.set_block(i * dn, j * dn, &block);
            }
        }
    }
    out
}

struct Cohomology {
    reps: Vec<Vec<Scalar>>,
    /// columns: boundary basis then reps; used to read off coordinates
    frame: DenseMatrix,
    boundary_len: usize,
}

impl Cohomology {
    fn coords(&self, z: &[Scalar]) -> Result<Vec<Scalar>> {
        let sol = self
            .frame
            .solve(z)?
            .ok_or_else(|| Error::Invariant("χ image is not a cycle".into()))?;
        Ok(sol[self.boundary_len..].to_vec())
    }
}

fn cohomology(field: Field, len: usize, delta_out: &DenseMatrix, delta_in: Option<&DenseMatrix>) -> Cohomology {
    let cycles = delta_out.kernel_basis();
    let boundaries: Vec<Vec<Scalar>> = match delta_in {
        Some(d) => d.column_space(),
        None => vec![],
    };
    let mut cols = boundaries.clone();
    cols.extend(cycles.iter().cloned());
    let reps: Vec<Vec<Scalar>> = if cols.is_empty() {
        vec![]
    } else {
        let r = DenseMatrix::from_columns(field, len, &cols).rref();
        r.pivots
            .iter()
            .filter(|&&p| p >= boundaries.len())
            .map(|&p| cols[p].clone())
            .collect()
    };
    let mut frame_cols = boundaries.clone();
    frame_cols.extend(reps.iter().cloned());
    Cohomology {
        frame: DenseMatrix::from_columns(field, len, &frame_cols),
        boundary_len: boundaries.len(),
        reps,
    }
}

/// Ext*_A(M, N) to degree `bound`, via the minimal resolution of M and
/// the Eisenbud operators.
pub fn ext_module(m: &FDModule, n: &FDModule, bound: usize) -> Result<ExtModule> {
    if bound < 2 {
        return Err(Error::Precondition("Ext bound must be at least 2".into()));
    }
    if m.algebra() != n.algebra() {
        return Err(Error::MixedRings);
    }
    let res = MinimalResolution::new(m, bound + 1)?;
    let ops = eisenbud_operators(&res)?;
    ext_from_operators(&res, &ops, n, bound)
}

pub fn ext_from_operators(res: &MinimalResolution, ops: &OperatorFamily, n: &FDModule, bound: usize) -> Result<ExtModule> {
    let alg = res.algebra();
    let field = alg.field();
    let dn = n.dim();
    if res.len() < bound + 1 || ops.stages.len() + 1 < bound {
        return Err(Error::Precondition("resolution shorter than the Ext bound".into()));
    }
    // δ^k: Hom(F_k, N) → Hom(F_{k+1}, N) is precomposition with d_{k+1}
    let deltas: Vec<DenseMatrix> = (0..=bound).map(|k| precompose(res.differential(k + 1), n)).collect();
    let parts: Vec<Cohomology> = (0..=bound)
        .map(|k| {
            let delta_in = if k > 0 { Some(&deltas[k - 1]) } else { None };
            cohomology(field, res.betti[k] * dn, &deltas[k], delta_in)
        })
        .collect();
    let dims: Vec<usize> = parts.iter().map(|p| p.reps.len()).collect();
    let mut chi = vec![Vec::new(); alg.c()];
    for (i, maps) in chi.iter_mut().enumerate() {
        for k in 0..=bound.saturating_sub(2) {
            let t = precompose(&ops.reduced(i, k), n);
            let mut mat = DenseMatrix::zeros(field, dims[k + 2], dims[k]);
            for (col, r) in parts[k].reps.iter().enumerate() {
                let img = t.mul_vec(r)?;
                for (row, s) in parts[k + 2].coords(&img)?.into_iter().enumerate() {
                    mat[(row, col)] = s;
                }
            }
            maps.push(mat);
        }
    }
    Ok(ExtModule {
        field,
        c: alg.c(),
        bound,
        dims,
        chi,
    })
}

/// Ext*_A(M, k) read directly off the minimal resolution: Ext^n = k^{b_n}
/// and χ_i is the transposed constant term of T_i.
pub fn ext_to_trivial(m: &FDModule, bound: usize) -> Result<ExtModule> {
    if bound < 2 {
        return Err(Error::Precondition("Ext bound must be at least 2".into()));
    }
    let alg = m.algebra();
    let field = alg.field();
    let res = MinimalResolution::new(m, bound)?;
    let ops = eisenbud_operators(&res)?;
    let dims = res.betti[..=bound].to_vec();
    let mut chi = vec![Vec::new(); alg.c()];
    for (i, maps) in chi.iter_mut().enumerate() {
        for k in 0..=bound - 2 {
            let t = ops.reduced(i, k);
            let mut mat = DenseMatrix::zeros(field, t.cols, t.rows);
            for r in 0..t.rows {
                for s in 0..t.cols {
                    mat[(s, r)] = t.entries[r][s][0].clone();
                }
            }
            maps.push(mat);
        }
    }
    Ok(ExtModule {
        field,
        c: alg.c(),
        bound,
        dims,
        chi,
    })
}

/// Polynomials in χ of weighted degree ≤ `deg_cap` killing Ext^n for every
/// n with n + deg ≤ bound; the ideal they generate.
pub fn ann_to_bound(e: &ExtModule, deg_cap: usize) -> Result<Ideal> {
    let ring = e.ring();
    if deg_cap + 2 * CHI_WEIGHT as usize > e.bound {
        return Err(Error::BoundTooSmall {
            cap: deg_cap as i64,
            bound: e.bound,
        });
    }
    let weights = vec![1u32; e.c];
    let mut gens = Vec::new();
    for m in 0..=deg_cap / CHI_WEIGHT as usize {
        let monos = monomials_of_degree(&weights, m as i64);
        let deg = CHI_WEIGHT as usize * m;
        // stack the vectorized maps Ext^n → Ext^{n+deg} for all n
        let mut rows: Vec<Vec<Scalar>> = vec![Vec::new(); monos.len()];
        for n in 0..=e.bound - deg {
            for (k, mono) in monos.iter().enumerate() {
                let map = e.monomial_map(mono.exps(), n).expect("within bound");
                for r in 0..map.rows() {
                    rows[k].extend(map.row(r).iter().cloned());
                }
            }
        }
        let len = rows.first().map(Vec::len).unwrap_or(0);
        let kernel = if len == 0 {
            (0..monos.len())
                .map(|i| {
                    let mut v = vec![e.field.zero(); monos.len()];
                    v[i] = e.field.one();
                    v
                })
                .collect()
        } else {
            DenseMatrix::from_columns(e.field, len, &rows).kernel_basis()
        };
        for v in kernel {
            let p = Polynomial::from_terms(
                &ring,
                monos.iter().zip(v).map(|(mono, c)| (Monomial(mono.exps().to_vec()), c)),
            );
            if !p.is_zero() {
                gens.push(p);
            }
        }
    }
    Ideal::new(&ring, gens)
}

/// Default annihilator degree cap for a given Ext bound.
pub fn default_cap(bound: usize) -> usize {
    bound.saturating_sub(2 * CHI_WEIGHT as usize)
}

/// χ_i χ_j = χ_j χ_i on Ext^n → Ext^{n+4} wherever both sides are defined.
pub fn chi_commutativity_check(e: &ExtModule) -> bool {
    for i in 0..e.c {
        for j in i + 1..e.c {
            for n in 0..=e.bound.saturating_sub(4) {
                let a = e.chi[j][n + 2].mul(&e.chi[i][n]).expect("shapes");
                let b = e.chi[i][n + 2].mul(&e.chi[j][n]).expect("shapes");
                if a != b {
                    return false;
                }
            }
        }
    }
    true
}
