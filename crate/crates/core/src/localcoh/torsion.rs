use crate::error::{Error, Result};
use crate::field::{span_rank, Scalar};
use crate::poly::{same_submodule, submodule_colon, submodule_intersection, Ideal, Polynomial};

use super::module::MultigradedModule;

/// Γ_a M = {m : a^n m = 0 for some n}, as a submodule of the ambient free
/// module F (containing the relations N).
#[derive(Clone, Debug)]
pub struct TorsionSubmodule {
    pub module: MultigradedModule,
    /// Generators of the preimage C ⊆ F of Γ_a M.
    pub generators: Vec<Vec<Polynomial>>,
    /// Per generator of a, the power at which (N : g^t) stopped growing.
    pub stabilized_at: Vec<u32>,
}

impl TorsionSubmodule {
    /// dim_k (Γ_a M)_β.
    pub fn dim(&self, beta: &[i64]) -> Result<usize> {
        let m = &self.module;
        let f = m.field();
        let cell = m.cell(beta);
        let len = cell.gens.len();
        let mut rel: Vec<Vec<Scalar>> = Vec::new();
        for (k, d) in m.rel_degrees().iter().enumerate() {
            if d.iter().zip(beta).all(|(a, b)| a <= b) {
                rel.push(
                    cell.gens
                        .iter()
                        .map(|&j| m.relations().get(j, k).terms().next().map(|(_, c)| c.clone()).unwrap_or_else(|| f.zero()))
                        .collect(),
                );
            }
        }
        let mut all = rel.clone();
        for g in &self.generators {
            let deg = vector_multidegree(m, g)?;
            if deg.iter().zip(beta).all(|(a, b)| a <= b) {
                all.push(
                    cell.gens
                        .iter()
                        .map(|&j| g[j].terms().next().map(|(_, c)| c.clone()).unwrap_or_else(|| f.zero()))
                        .collect(),
                );
            }
        }
        Ok(span_rank(f, len, &all) - span_rank(f, len, &rel))
    }

    /// Γ_a M = M.
    pub fn is_everything(&self) -> Result<bool> {
        let m = &self.module;
        let r = m.gen_degrees().len();
        let ring = m.ring();
        let unit: Vec<Vec<Polynomial>> = (0..r)
            .map(|i| (0..r).map(|j| if i == j { Polynomial::one(ring) } else { Polynomial::zero(ring) }).collect())
            .collect();
        same_submodule(ring, &m.total_shifts(), &self.generators, &unit)
    }

    /// Γ_a M = 0.
    pub fn is_zero(&self) -> Result<bool> {
        let m = &self.module;
        let mut with_rel = self.generators.clone();
        with_rel.extend(m.relations().columns());
        same_submodule(m.ring(), &m.total_shifts(), &with_rel, &m.relations().columns())
    }
}

/// Multidegree of a homogeneous vector of F.
pub fn vector_multidegree(m: &MultigradedModule, v: &[Polynomial]) -> Result<Vec<i64>> {
    let mut out: Option<Vec<i64>> = None;
    for (j, p) in v.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let mono = p.multidegree().ok_or(Error::NotHomogeneous)?;
        let d: Vec<i64> = m.gen_degrees()[j].iter().zip(mono.exps()).map(|(g, &e)| g + e as i64).collect();
        match &out {
            Some(prev) if *prev != d => return Err(Error::NotHomogeneous),
            _ => out = Some(d),
        }
    }
    out.ok_or_else(|| Error::Precondition("zero vector has no degree".into()))
}

/// Γ_a M = ∩_i ∪_t (N : g_i^t) / N, each colon chain stopped when two
/// consecutive colons agree.
pub fn torsion_submodule(m: &MultigradedModule, a: &Ideal) -> Result<TorsionSubmodule> {
    if !a.is_monomial() && !a.is_zero() {
        return Err(Error::NotMonomial);
    }
    let ring = m.ring();
    let shifts = m.total_shifts();
    let rels = m.relations().columns();
    if a.is_zero() {
        // 0·m = 0 for every m, so everything is (0)-torsion
        let r = shifts.len();
        let unit = (0..r)
            .map(|i| (0..r).map(|j| if i == j { Polynomial::one(ring) } else { Polynomial::zero(ring) }).collect())
            .collect();
        return Ok(TorsionSubmodule {
            module: m.clone(),
            generators: unit,
            stabilized_at: vec![],
        });
    }
    let mut result: Option<Vec<Vec<Polynomial>>> = None;
    let mut stabilized_at = Vec::new();
    for g in a.gens() {
        let mut t = 1u32;
        let mut prev = submodule_colon(ring, &shifts, &rels, &g.pow(t))?;
        loop {
            let next = submodule_colon(ring, &shifts, &rels, &g.pow(t + 1))?;
            if same_submodule(ring, &shifts, &prev, &next)? {
                break;
            }
            prev = next;
            t += 1;
            if t > 64 {
                return Err(Error::Invariant("colon chain did not stabilize".into()));
            }
        }
        stabilized_at.push(t);
        result = Some(match result {
            None => prev,
            Some(acc) => submodule_intersection(ring, &shifts, &acc, &prev)?,
        });
    }
    Ok(TorsionSubmodule {
        module: m.clone(),
        generators: result.unwrap_or_default(),
        stabilized_at,
    })
}
