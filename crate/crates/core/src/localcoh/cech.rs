use std::collections::BTreeMap;

use serde::Serialize;

use crate::complexes::VecComplex;
use crate::error::{Error, Result};
use crate::field::DenseMatrix;
use crate::poly::{Ideal, Monomial};

use super::module::{inclusion_map, Cell, MgComplex, Multidegree, MultigradedModule};

/// Default cap on the number of multidegrees in a query box.
pub const DEFAULT_BOX_CAP: usize = 200_000;

/// Integer box lo ≤ β ≤ hi.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeBox {
    pub lo: Multidegree,
    pub hi: Multidegree,
}

impl DegreeBox {
    pub fn new(lo: Multidegree, hi: Multidegree) -> Result<DegreeBox> {
        if lo.len() != hi.len() || lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(Error::Precondition("box corners must satisfy lo ≤ hi".into()));
        }
        Ok(DegreeBox { lo, hi })
    }

    /// [−r, r]^n.
    pub fn cube(n: usize, r: i64) -> DegreeBox {
        DegreeBox {
            lo: vec![-r; n],
            hi: vec![r; n],
        }
    }

    /// [−(B+2), B+2]^n with B the largest exponent in the input.
    pub fn default_for(x: &MgComplex) -> DegreeBox {
        DegreeBox::cube(x.ring.nvars(), x.max_exponent() + 2)
    }

    pub fn volume(&self) -> usize {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(a, b)| (b - a + 1) as usize)
            .fold(1usize, usize::saturating_mul)
    }

    pub fn check(&self, cap: usize) -> Result<()> {
        let cells = self.volume();
        if cells > cap {
            return Err(Error::BoxTooLarge { cells, cap });
        }
        Ok(())
    }

    pub fn cells(&self) -> Vec<Multidegree> {
        let mut out = vec![self.lo.clone()];
        for i in 0..self.lo.len() {
            out = out
                .into_iter()
                .flat_map(|b| {
                    (self.lo[i]..=self.hi[i]).map(move |v| {
                        let mut c = b.clone();
                        c[i] = v;
                        c
                    })
                })
                .collect();
        }
        out
    }
}

/// Degree β with the coordinates in `inverted` raised past every degree
/// appearing in the data, so that M_β' is the colimit (M_{x_U})_β.
fn raise(beta: &[i64], inverted: &[bool], ceiling: &[i64]) -> Multidegree {
    beta.iter()
        .zip(inverted)
        .zip(ceiling)
        .map(|((&b, &inv), &c)| if inv { b.max(c) } else { b })
        .collect()
}

/// The directed system M_β → M_{β+deg f} → … has settled at this degree:
/// the same generators and relations are present one step further.
pub fn localization_stable(m: &MultigradedModule, beta: &[i64], inverted: &[bool]) -> bool {
    let raised = raise(beta, inverted, &m.degree_ceiling());
    let next: Multidegree = raised.iter().zip(inverted).map(|(&b, &inv)| b + inv as i64).collect();
    let (a, b) = (m.cell(&raised), m.cell(&next));
    a.gens == b.gens && a.dim() == b.dim()
}

/// dim_k (M_f)_β for a monomial f.
pub fn localized_degree(m: &MultigradedModule, f: &Monomial, beta: &[i64]) -> usize {
    let inverted: Vec<bool> = f.exps().iter().map(|&e| e > 0).collect();
    m.cell(&raise(beta, &inverted, &m.degree_ceiling())).dim()
}

/// Which Čech cells enter a total complex.
#[derive(Clone, Debug)]
pub(crate) struct CechSpec {
    /// Supports of the Čech elements.
    pub supports: Vec<Vec<bool>>,
    /// Variables inverted everywhere (localization at a prime).
    pub inverted: Vec<bool>,
    /// If set, only subsets meeting this mask are kept and degrees drop by one.
    pub must_meet: Option<u64>,
}

impl CechSpec {
    pub fn new(gens: &[Monomial], nvars: usize) -> CechSpec {
        CechSpec {
            supports: gens.iter().map(|g| g.exps().iter().map(|&e| e > 0).collect()).collect(),
            inverted: vec![false; nvars],
            must_meet: None,
        }
    }

    fn localization(&self, s: u64) -> Vec<bool> {
        let mut u = self.inverted.clone();
        for (k, sup) in self.supports.iter().enumerate() {
            if s >> k & 1 == 1 {
                for (ui, &v) in u.iter_mut().zip(sup) {
                    *ui |= v;
                }
            }
        }
        u
    }

    fn keeps(&self, s: u64) -> bool {
        self.must_meet.is_none_or(|m| s & m != 0)
    }

    fn shift(&self) -> i64 {
        if self.must_meet.is_some() {
            -1
        } else {
            0
        }
    }
}

/// Degree-β piece of Tot(X ⊗ Č(f_1..f_m)) (or its subcomplex selected by
/// `must_meet`), as a complex of vector spaces.
pub(crate) fn cech_cell_complex(x: &MgComplex, spec: &CechSpec, beta: &[i64]) -> VecComplex {
    let field = x.ring.field();
    let m = spec.supports.len();
    assert!(m < 63, "too many Čech elements");
    let ceiling = x.degree_ceiling();
    // components (term k, subset S) with their cells, grouped by total degree
    let mut cells: BTreeMap<(usize, u64), Cell> = BTreeMap::new();
    let mut by_degree: BTreeMap<i64, Vec<(usize, u64)>> = BTreeMap::new();
    for (k, term) in x.terms.iter().enumerate() {
        for s in 0u64..1 << m {
            if !spec.keeps(s) {
                continue;
            }
            let c = term.cell(&raise(beta, &spec.localization(s), &ceiling));
            let deg = x.lo + k as i64 + s.count_ones() as i64 + spec.shift();
            by_degree.entry(deg).or_default().push((k, s));
            cells.insert((k, s), c);
        }
    }
    let Some((&lo, _)) = by_degree.iter().next() else {
        return VecComplex {
            field,
            lo: 0,
            dims: vec![],
            diffs: vec![],
        };
    };
    let hi = *by_degree.keys().last().expect("nonempty");
    let mut offsets: BTreeMap<(usize, u64), usize> = BTreeMap::new();
    let mut dims = Vec::new();
    for d in lo..=hi {
        let mut off = 0;
        for key in by_degree.get(&d).map(Vec::as_slice).unwrap_or(&[]) {
            offsets.insert(*key, off);
            off += cells[key].dim();
        }
        dims.push(off);
    }
    let mut diffs: Vec<DenseMatrix> = (lo..hi)
        .map(|d| DenseMatrix::zeros(field, dims[(d + 1 - lo) as usize], dims[(d - lo) as usize]))
        .collect();
    for d in lo..hi {
        let mat = &mut diffs[(d - lo) as usize];
        for &(k, s) in by_degree.get(&d).map(Vec::as_slice).unwrap_or(&[]) {
            let src = &cells[&(k, s)];
            if src.dim() == 0 {
                continue;
            }
            let col = offsets[&(k, s)];
            // internal differential of X
            if k < x.maps.len() {
                let tgt = &cells[&(k + 1, s)];
                if tgt.dim() > 0 {
                    let block = x.cell_map(k, src, tgt);
                    mat.set_block(offsets[&(k + 1, s)], col, &block);
                }
            }
            // Čech differential, sign (−1)^{n} (−1)^{#{s ∈ S : s < j}}
            let n = x.lo + k as i64;
            for j in 0..m {
                if s >> j & 1 == 1 {
                    continue;
                }
                let t = s | 1 << j;
                let tgt = &cells[&(k, t)];
                if tgt.dim() == 0 {
                    continue;
                }
                let below = (s & ((1u64 << j) - 1)).count_ones() as i64;
                let mut block = inclusion_map(field, src, tgt);
                if (n + below).rem_euclid(2) == 1 {
                    block = block.scale(&-field.one());
                }
                mat.set_block(offsets[&(k, t)], col, &block);
            }
        }
    }
    VecComplex { field, lo, dims, diffs }
}

/// Nonzero dimensions of H^i at each multidegree of the box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalCohReport {
    pub query_box: DegreeBox,
    /// `degrees[i]` lists (β, dim H^i_β) with nonzero dimension.
    pub degrees: BTreeMap<i64, Vec<(Multidegree, usize)>>,
}

impl LocalCohReport {
    pub fn dim(&self, i: i64, beta: &[i64]) -> usize {
        self.degrees
            .get(&i)
            .and_then(|v| v.iter().find(|(b, _)| b == beta).map(|(_, d)| *d))
            .unwrap_or(0)
    }

    pub fn vanishes(&self, i: i64) -> bool {
        self.degrees.get(&i).is_none_or(Vec::is_empty)
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.values().all(Vec::is_empty)
    }
}

fn monomial_gens(a: &Ideal) -> Result<Vec<Monomial>> {
    if !a.is_monomial() && !a.is_zero() {
        return Err(Error::NotMonomial);
    }
    Ok(a.gens()
        .iter()
        .map(|g| g.terms().next().expect("nonzero").0.clone())
        .collect())
}

pub(crate) fn report_for(x: &MgComplex, spec: &CechSpec, query_box: &DegreeBox, cap: usize) -> Result<LocalCohReport> {
    query_box.check(cap)?;
    if query_box.lo.len() != x.ring.nvars() {
        return Err(Error::DimensionMismatch("box dimension differs from the number of variables".into()));
    }
    let mut degrees: BTreeMap<i64, Vec<(Multidegree, usize)>> = BTreeMap::new();
    for beta in query_box.cells() {
        let c = cech_cell_complex(x, spec, &beta);
        if !c.is_complex() {
            return Err(Error::Invariant(format!("Čech differential squares to nonzero at {beta:?}")));
        }
        for (k, _) in c.dims.iter().enumerate() {
            let i = c.lo + k as i64;
            let h = c.cohomology_dim(i);
            let entry = degrees.entry(i).or_default();
            if h > 0 {
                entry.push((beta.clone(), h));
            }
        }
    }
    Ok(LocalCohReport {
        query_box: query_box.clone(),
        degrees,
    })
}

/// H^i_a(X)_β for β in the box, as Čech cohomology of X on a's generators.
pub fn local_cohomology_complex(x: &MgComplex, a: &Ideal, query_box: &DegreeBox) -> Result<LocalCohReport> {
    let spec = CechSpec::new(&monomial_gens(a)?, x.ring.nvars());
    report_for(x, &spec, query_box, DEFAULT_BOX_CAP)
}

pub fn local_cohomology(m: &MultigradedModule, a: &Ideal, query_box: &DegreeBox) -> Result<LocalCohReport> {
    local_cohomology_complex(&MgComplex::single(m), a, query_box)
}

/// Čech-side objects used by the triangle and fibre routines.
pub(crate) fn spec_for(x: &MgComplex, a: &Ideal) -> Result<CechSpec> {
    Ok(CechSpec::new(&monomial_gens(a)?, x.ring.nvars()))
}
