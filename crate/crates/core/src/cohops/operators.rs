use crate::error::{Error, Result};
use crate::fdalgebra::{AElem, AMatrix, CIAlgebra, MinimalResolution};
use crate::poly::{Monomial, PolyMatrix, Polynomial, Ring};

/// A minimal resolution together with the canonical lifts of its
/// differentials to k[x_1..x_c].
#[derive(Clone, Debug)]
pub struct LiftedResolution {
    pub resolution: MinimalResolution,
    pub ring: Ring,
    /// `lifted[n − 1]` lifts d_n.
    pub lifted: Vec<PolyMatrix>,
}

impl LiftedResolution {
    pub fn new(res: &MinimalResolution) -> LiftedResolution {
        let alg = res.algebra();
        let ring = alg.lift_ring();
        let lifted = res.diffs.iter().map(|d| d.to_poly(alg, &ring)).collect();
        LiftedResolution {
            resolution: res.clone(),
            ring,
            lifted,
        }
    }

    /// Reducing every lift modulo the relations gives back the differentials.
    pub fn reduces_to_original(&self) -> bool {
        let alg = self.resolution.algebra();
        self.lifted.iter().zip(&self.resolution.diffs).all(|(l, d)| reduce(alg, l) == *d)
    }
}

/// Entrywise reduction of a polynomial matrix modulo (x_i^{e_i}).
pub fn reduce(alg: &CIAlgebra, m: &PolyMatrix) -> AMatrix {
    let entries: Vec<Vec<AElem>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| alg.from_poly(m.get(i, j))).collect())
        .collect();
    AMatrix {
        rows: m.rows(),
        cols: m.cols(),
        entries,
    }
}

/// Eisenbud operators: `stages[n][i]` is T_i^{(n)}: F_{n+2} → F_n with
/// d̃_{n+1} d̃_{n+2} = Σ_i x_i^{e_i} T_i^{(n)}.
#[derive(Clone, Debug)]
pub struct OperatorFamily {
    pub lifted: LiftedResolution,
    pub stages: Vec<Vec<PolyMatrix>>,
}

impl OperatorFamily {
    pub fn c(&self) -> usize {
        self.lifted.resolution.algebra().c()
    }

    pub fn operator(&self, i: usize, n: usize) -> &PolyMatrix {
        &self.stages[n][i]
    }

    /// Σ x_i^{e_i} T_i^{(n)} recomputed and compared with d̃ d̃ at every stage.
    pub fn reassembles(&self) -> Result<bool> {
        let alg = self.lifted.resolution.algebra();
        let ring = &self.lifted.ring;
        for (n, ts) in self.stages.iter().enumerate() {
            let dd = self.lifted.lifted[n].mul(&self.lifted.lifted[n + 1])?;
            let mut acc = PolyMatrix::zeros(ring, dd.rows(), dd.cols());
            for (i, t) in ts.iter().enumerate() {
                let mut e = vec![0; alg.c()];
                e[i] = alg.exps()[i];
                let xe = Polynomial::monomial(ring, Monomial(e));
                let term = t.scale(&xe)?;
                for r in 0..dd.rows() {
                    for s in 0..dd.cols() {
                        acc.set(r, s, acc.get(r, s).add(term.get(r, s))?);
                    }
                }
            }
            if acc != dd {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// T_i^{(n)} reduced to a matrix over A.
    pub fn reduced(&self, i: usize, n: usize) -> AMatrix {
        reduce(self.lifted.resolution.algebra(), &self.stages[n][i])
    }
}

/// Greedy decomposition of d̃ d̃ at each stage: every monomial goes to the
/// smallest i whose exponent reaches e_i.
pub fn eisenbud_operators(res: &MinimalResolution) -> Result<OperatorFamily> {
    let lifted = LiftedResolution::new(res);
    let alg = res.algebra();
    let exps = alg.exps();
    let ring = lifted.ring.clone();
    let mut stages = Vec::new();
    for n in 0..lifted.lifted.len().saturating_sub(1) {
        let dd = lifted.lifted[n].mul(&lifted.lifted[n + 1])?;
        let mut ts = vec![PolyMatrix::zeros(&ring, dd.rows(), dd.cols()); alg.c()];
        for r in 0..dd.rows() {
            for s in 0..dd.cols() {
                let mut parts = vec![Polynomial::zero(&ring); alg.c()];
                for (m, coef) in dd.get(r, s).terms() {
                    let i = (0..alg.c()).find(|&i| m.exps()[i] >= exps[i]).ok_or_else(|| {
                        Error::DecompositionFailure(format!("monomial {:?} of d̃d̃ at stage {n} is not in the relation ideal", m.exps()))
                    })?;
                    let mut q = m.exps().to_vec();
                    q[i] -= exps[i];
                    parts[i] = parts[i].add(&Polynomial::term(&ring, coef.clone(), Monomial(q)))?;
                }
                for (t, p) in ts.iter_mut().zip(parts) {
                    t.set(r, s, p);
                }
            }
        }
        stages.push(ts);
    }
    Ok(OperatorFamily { lifted, stages })
}
