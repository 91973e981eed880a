use crate::error::{Error, Result};
use crate::fdalgebra::{decompose_indecomposables, FDModule};
use crate::poly::Ideal;

use super::rank::rank_variety_ideal;
use super::support::{connectivity, ClosedSet, Connectivity};

#[derive(Clone, Debug)]
pub struct Summand {
    pub module: FDModule,
    pub rank_ideal: Ideal,
    pub projective: bool,
    pub connectivity: Connectivity,
}

/// Summands sharing a connected piece of the punctured variety.
#[derive(Clone, Debug)]
pub struct KrsGroup {
    pub summands: Vec<Summand>,
    /// Intersection of the summands' rank ideals (the union of varieties).
    pub ideal: Ideal,
    /// True for the group collecting projective summands.
    pub projective: bool,
}

/// Decompose M and group the indecomposable summands by the connected
/// components of their punctured rank varieties.
pub fn krs_partition(m: &FDModule, seed: u64) -> Result<Vec<KrsGroup>> {
    let alg = m.algebra();
    if !alg.group_mode() {
        return Err(Error::NotAGroupAlgebra);
    }
    let mut summands = Vec::new();
    for s in decompose_indecomposables(m, seed)? {
        let ideal = rank_variety_ideal(&s)?.ideal;
        let closed = ClosedSet::new(ideal.clone());
        let projective = closed.punctured_is_empty()?;
        summands.push(Summand {
            connectivity: connectivity(&ideal)?,
            module: s,
            rank_ideal: ideal,
            projective,
        });
    }
    let n = summands.len();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let proj: Vec<usize> = (0..n).filter(|&i| summands[i].projective).collect();
    let rest: Vec<usize> = (0..n).filter(|&i| !summands[i].projective).collect();
    let meets = |a: &Ideal, b: &Ideal| -> Result<bool> {
        let sum = a.sum(b)?;
        Ok(!sum.radical_contains_ideal(&Ideal::irrelevant(sum.ring()))?)
    };
    // merge into every group the new summand meets
    for &i in &rest {
        let mut hits: Vec<usize> = Vec::new();
        for (g, members) in groups.iter().enumerate() {
            for &j in members {
                if meets(&summands[i].rank_ideal, &summands[j].rank_ideal)? {
                    hits.push(g);
                    break;
                }
            }
        }
        if hits.is_empty() {
            groups.push(vec![i]);
        } else {
            let keep = hits[0];
            for &g in hits[1..].iter().rev() {
                let moved = std::mem::take(&mut groups[g]);
                groups[keep].extend(moved);
            }
            groups[keep].push(i);
        }
    }
    groups.retain(|g| !g.is_empty());
    for (a, ga) in groups.iter().enumerate() {
        for gb in &groups[a + 1..] {
            for &i in ga {
                for &j in gb {
                    if meets(&summands[i].rank_ideal, &summands[j].rank_ideal)? {
                        return Err(Error::Invariant("KRS groups are not disjoint".into()));
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    let build = |idx: &[usize], projective: bool| -> Result<KrsGroup> {
        let mut ideal = summands[idx[0]].rank_ideal.clone();
        for &i in &idx[1..] {
            ideal = ideal.intersection(&summands[i].rank_ideal)?;
        }
        Ok(KrsGroup {
            summands: idx.iter().map(|&i| summands[i].clone()).collect(),
            ideal,
            projective,
        })
    };
    for g in &groups {
        out.push(build(g, false)?);
    }
    if !proj.is_empty() {
        out.push(build(&proj, true)?);
    }
    Ok(out)
}
