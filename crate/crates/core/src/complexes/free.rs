use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::DenseMatrix;
use crate::poly::{
    minimal_generators, module_annihilator, monomials_of_degree, syzygies, vector_degree, Ideal,
    ModuleGb, Monomial, MonomialOrder, PolyMatrix, Polynomial, Ring,
};

use super::vector::VecComplex;

/// Bounded cochain complex of graded free modules X^n = ⊕_j R(−a_j), with
/// d^n: X^n → X^{n+1} given by a matrix with rank(X^{n+1}) rows.
/// Differentials are homogeneous of degree 0: deg d_ij = a_j − b_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeComplex {
    ring: Ring,
    lo: i64,
    shifts: Vec<Vec<i64>>,
    diffs: Vec<PolyMatrix>,
}

/// Chain map between free complexes; `maps[&n]` is target^n × source^n.
/// Missing degrees are zero.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: FreeComplex,
    pub target: FreeComplex,
    pub maps: HashMap<i64, PolyMatrix>,
}

impl FreeComplex {
    /// Build and validate: shapes, homogeneity and d∘d = 0.
    pub fn new(ring: &Ring, lo: i64, shifts: Vec<Vec<i64>>, diffs: Vec<PolyMatrix>) -> Result<FreeComplex> {
        let c = FreeComplex {
            ring: ring.clone(),
            lo,
            shifts,
            diffs,
        };
        c.validate()?;
        Ok(c.trimmed())
    }

    fn validate(&self) -> Result<()> {
        let len = self.shifts.len();
        if self.diffs.len() != len.saturating_sub(1) {
            return Err(Error::DimensionMismatch(format!(
                "{} objects need {} differentials, got {}",
                len,
                len.saturating_sub(1),
                self.diffs.len()
            )));
        }
        for (k, d) in self.diffs.iter().enumerate() {
            if d.ring() != &self.ring {
                return Err(Error::MixedRings);
            }
            let (src, tgt) = (&self.shifts[k], &self.shifts[k + 1]);
            if d.cols() != src.len() || d.rows() != tgt.len() {
                return Err(Error::DimensionMismatch(format!(
                    "d^{} is {}x{}, objects have ranks {} → {}",
                    self.lo + k as i64,
                    d.rows(),
                    d.cols(),
                    src.len(),
                    tgt.len()
                )));
            }
            if !d.is_homogeneous(tgt, src) {
                return Err(Error::NotHomogeneous);
            }
        }
        for (k, w) in self.diffs.windows(2).enumerate() {
            if !w[1].mul(&w[0])?.is_zero() {
                return Err(Error::NotAComplex(self.lo + k as i64));
            }
        }
        Ok(())
    }

    /// Drop zero objects at both ends.
    fn trimmed(mut self) -> FreeComplex {
        while self.shifts.last().is_some_and(Vec::is_empty) {
            self.shifts.pop();
            self.diffs.pop();
        }
        while self.shifts.first().is_some_and(Vec::is_empty) {
            self.shifts.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.lo += 1;
        }
        if self.shifts.is_empty() {
            self.lo = 0;
            self.diffs.clear();
        }
        self
    }

    pub fn zero(ring: &Ring) -> FreeComplex {
        FreeComplex {
            ring: ring.clone(),
            lo: 0,
            shifts: vec![],
            diffs: vec![],
        }
    }

    /// A single free module ⊕ R(−shift) sitting in degree `n`.
    pub fn single(ring: &Ring, n: i64, shifts: Vec<i64>) -> FreeComplex {
        FreeComplex::new(ring, n, vec![shifts], vec![]).expect("valid")
    }

    /// R in degree 0.
    pub fn unit(ring: &Ring) -> FreeComplex {
        FreeComplex::single(ring, 0, vec![0])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.shifts.is_empty()
    }

    /// Lowest and highest degrees with nonzero objects (`None` for zero).
    pub fn range(&self) -> Option<(i64, i64)> {
        (!self.shifts.is_empty()).then(|| (self.lo, self.lo + self.shifts.len() as i64 - 1))
    }

    pub fn shifts(&self, n: i64) -> &[i64] {
        let k = n - self.lo;
        if k < 0 || k as usize >= self.shifts.len() {
            &[]
        } else {
            &self.shifts[k as usize]
        }
    }

    pub fn rank(&self, n: i64) -> usize {
        self.shifts(n).len()
    }

    pub fn differential(&self, n: i64) -> PolyMatrix {
        let k = n - self.lo;
        if k >= 0 && (k as usize) < self.diffs.len() {
            self.diffs[k as usize].clone()
        } else {
            PolyMatrix::zeros(&self.ring, self.rank(n + 1), self.rank(n))
        }
    }

    /// Σ^n X: objects X^{i+n}, differentials multiplied by (−1)^n.
    pub fn shift(&self, n: i64) -> FreeComplex {
        let diffs = if n.rem_euclid(2) == 1 {
            self.diffs.iter().map(PolyMatrix::neg).collect()
        } else {
            self.diffs.clone()
        };
        FreeComplex {
            ring: self.ring.clone(),
            lo: if self.shifts.is_empty() { 0 } else { self.lo - n },
            shifts: self.shifts.clone(),
            diffs,
        }
    }

    /// Internal twist: every generator degree lowered by `d`, so that X⟨d⟩_D ≅ X_{D+d}.
    pub fn twist(&self, d: i64) -> FreeComplex {
        FreeComplex {
            ring: self.ring.clone(),
            lo: self.lo,
            shifts: self
                .shifts
                .iter()
                .map(|s| s.iter().map(|a| a - d).collect())
                .collect(),
            diffs: self.diffs.clone(),
        }
    }

    /// Multiplication by a homogeneous r as a chain map X → X⟨deg r⟩.
    pub fn multiplication_map(&self, r: &Polynomial) -> Result<ChainMap> {
        if r.ring() != &self.ring {
            return Err(Error::MixedRings);
        }
        let d = if r.is_zero() {
            0
        } else {
            r.homogeneous_degree().ok_or(Error::NotHomogeneous)?
        };
        let target = self.twist(d);
        let mut maps = HashMap::new();
        if let Some((lo, hi)) = self.range() {
            for n in lo..=hi {
                maps.insert(n, PolyMatrix::identity(&self.ring, self.rank(n)).scale(r)?);
            }
        }
        Ok(ChainMap {
            source: self.clone(),
            target,
            maps,
        })
    }

    /// Koszul object X//r: the cone of r: X → X⟨deg r⟩.
    pub fn koszul_object(&self, r: &Polynomial) -> Result<FreeComplex> {
        cone(&self.multiplication_map(r)?)
    }

    /// Total complex of X ⊗ Y with differential d_X ⊗ 1 + (−1)^p 1 ⊗ d_Y.
    pub fn tensor(&self, other: &FreeComplex) -> Result<FreeComplex> {
        if self.ring != other.ring {
            return Err(Error::MixedRings);
        }
        let (Some((xl, xh)), Some((yl, yh))) = (self.range(), other.range()) else {
            return Ok(FreeComplex::zero(&self.ring));
        };
        let ring = &self.ring;
        let (lo, hi) = (xl + yl, xh + yh);
        // block offsets of X^p ⊗ Y^{n−p} inside the total degree n
        let layout = |n: i64| -> (Vec<(i64, usize)>, Vec<i64>) {
            let mut blocks = Vec::new();
            let mut shifts = Vec::new();
            for p in xl..=xh {
                let q = n - p;
                if q < yl || q > yh {
                    continue;
                }
                blocks.push((p, shifts.len()));
                for a in self.shifts(p) {
                    for b in other.shifts(q) {
                        shifts.push(a + b);
                    }
                }
            }
            (blocks, shifts)
        };
        let mut all_shifts = Vec::new();
        let mut diffs = Vec::new();
        for n in lo..=hi {
            let (src_blocks, src_shifts) = layout(n);
            all_shifts.push(src_shifts.clone());
            if n == hi {
                break;
            }
            let (tgt_blocks, tgt_shifts) = layout(n + 1);
            let mut d = PolyMatrix::zeros(ring, tgt_shifts.len(), src_shifts.len());
            let find = |blocks: &[(i64, usize)], p: i64| blocks.iter().find(|b| b.0 == p).map(|b| b.1);
            for &(p, off) in &src_blocks {
                let q = n - p;
                if let Some(t) = find(&tgt_blocks, p + 1) {
                    let m = self
                        .differential(p)
                        .kronecker(&PolyMatrix::identity(ring, other.rank(q)))?;
                    d.set_block(t, off, &m);
                }
                if let Some(t) = find(&tgt_blocks, p) {
                    let mut m = PolyMatrix::identity(ring, self.rank(p)).kronecker(&other.differential(q))?;
                    if p.rem_euclid(2) == 1 {
                        m = m.neg();
                    }
                    d.set_block(t, off, &m);
                }
            }
            diffs.push(d);
        }
        FreeComplex::new(ring, lo, all_shifts, diffs)
    }

    /// H^n(X) presented as a cokernel.
    pub fn cohomology(&self, n: i64) -> Result<CohomologyModule> {
        let ring = &self.ring;
        let src = self.shifts(n).to_vec();
        let r = src.len();
        let d = self.differential(n);
        let kernel: Vec<Vec<Polynomial>> = if d.rows() == 0 {
            (0..r)
                .map(|i| {
                    (0..r)
                        .map(|k| if k == i { Polynomial::one(ring) } else { Polynomial::zero(ring) })
                        .collect()
                })
                .collect()
        } else {
            let syz = syzygies(ring, self.shifts(n + 1), &d.columns())?;
            minimal_generators(ring, &src, &syz)?
        };
        let k = kernel.len();
        let shifts: Vec<i64> = kernel
            .iter()
            .map(|v| vector_degree(v, &src).ok_or(Error::NotHomogeneous))
            .collect::<Result<_>>()?;
        let mut gens = kernel.clone();
        gens.extend(self.differential(n - 1).columns());
        let rels: Vec<Vec<Polynomial>> = if k == 0 {
            vec![]
        } else {
            let syz = syzygies(ring, &src, &gens)?;
            let rel: Vec<Vec<Polynomial>> = syz
                .into_iter()
                .map(|s| s[..k].to_vec())
                .filter(|v| v.iter().any(|p| !p.is_zero()))
                .collect();
            minimal_generators(ring, &shifts, &rel)?
        };
        Ok(CohomologyModule {
            ring: ring.clone(),
            shifts,
            relations: PolyMatrix::from_columns(ring, k, &rels),
        })
    }

    /// The degree-D part as a complex of vector spaces.
    pub fn graded_piece(&self, internal: i64) -> VecComplex {
        let field = self.ring.field();
        let Some((lo, hi)) = self.range() else {
            return VecComplex {
                field,
                lo: 0,
                dims: vec![],
                diffs: vec![],
            };
        };
        let bases: Vec<Vec<(usize, Monomial)>> = (lo..=hi)
            .map(|n| piece_basis(&self.ring, self.shifts(n), internal))
            .collect();
        let diffs = (lo..hi)
            .map(|n| {
                let k = (n - lo) as usize;
                piece_matrix(&self.differential(n), &bases[k], &bases[k + 1])
            })
            .collect();
        VecComplex {
            field,
            lo,
            dims: bases.iter().map(Vec::len).collect(),
            diffs,
        }
    }
}

/// Basis of (⊕_j R(−a_j))_D as pairs (generator, monomial).
pub fn piece_basis(ring: &Ring, shifts: &[i64], d: i64) -> Vec<(usize, Monomial)> {
    let mut out = Vec::new();
    for (j, a) in shifts.iter().enumerate() {
        for m in monomials_of_degree(ring.weights(), d - a) {
            out.push((j, m));
        }
    }
    out
}

/// Matrix of a homogeneous degree-0 map between graded pieces.
pub fn piece_matrix(
    m: &PolyMatrix,
    src: &[(usize, Monomial)],
    tgt: &[(usize, Monomial)],
) -> DenseMatrix {
    let field = m.ring().field();
    let index: HashMap<&(usize, Monomial), usize> = tgt.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut out = DenseMatrix::zeros(field, tgt.len(), src.len());
    for (c, (j, mono)) in src.iter().enumerate() {
        for i in 0..m.rows() {
            for (t, coef) in m.get(i, *j).terms() {
                let key = (i, t.mul(mono));
                let r = *index
                    .get(&key)
                    .expect("degree-0 map lands in the same internal degree");
                out[(r, c)] = &out[(r, c)] + coef;
            }
        }
    }
    out
}

/// Mapping cone of f: X → Y, with C^n = Y^n ⊕ X^{n+1} and differential
/// [[d_Y, f], [0, −d_X]].
pub fn cone(f: &ChainMap) -> Result<FreeComplex> {
    let (x, y) = (&f.source, &f.target);
    if x.ring != y.ring {
        return Err(Error::MixedRings);
    }
    let ring = &x.ring;
    let fmap = |n: i64| -> PolyMatrix {
        f.maps
            .get(&n)
            .cloned()
            .unwrap_or_else(|| PolyMatrix::zeros(ring, y.rank(n), x.rank(n)))
    };
    // chain map and homogeneity checks
    let bounds = [x.range(), y.range()];
    let lo = bounds.iter().flatten().map(|r| r.0).min();
    let hi = bounds.iter().flatten().map(|r| r.1).max();
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Ok(FreeComplex::zero(ring));
    };
    for n in lo..=hi {
        let m = fmap(n);
        if m.rows() != y.rank(n) || m.cols() != x.rank(n) {
            return Err(Error::DimensionMismatch(format!("chain map component in degree {n}")));
        }
        if !m.is_homogeneous(y.shifts(n), x.shifts(n)) {
            return Err(Error::NotHomogeneous);
        }
        let left = y.differential(n).mul(&m)?;
        let right = fmap(n + 1).mul(&x.differential(n))?;
        if left != right {
            return Err(Error::NotAChainMap(n));
        }
    }
    let (clo, chi) = (lo - 1, hi);
    let mut shifts = Vec::new();
    let mut diffs = Vec::new();
    for n in clo..=chi {
        let mut s = y.shifts(n).to_vec();
        s.extend_from_slice(x.shifts(n + 1));
        shifts.push(s);
        if n == chi {
            break;
        }
        let (ry, rx) = (y.rank(n), x.rank(n + 1));
        let (ry1, rx1) = (y.rank(n + 1), x.rank(n + 2));
        let mut d = PolyMatrix::zeros(ring, ry1 + rx1, ry + rx);
        d.set_block(0, 0, &y.differential(n));
        d.set_block(0, ry, &fmap(n + 1));
        d.set_block(ry1, ry, &x.differential(n + 1).neg());
        diffs.push(d);
    }
    FreeComplex::new(ring, clo, shifts, diffs)
}

/// Successive Koszul objects X, X//r_1, (X//r_1)//r_2, ...
#[derive(Clone, Debug)]
pub struct KoszulTower {
    pub base: FreeComplex,
    pub elements: Vec<Polynomial>,
    pub stages: Vec<FreeComplex>,
}

impl KoszulTower {
    pub fn new(base: &FreeComplex, elements: &[Polynomial]) -> Result<KoszulTower> {
        let mut stages = vec![base.clone()];
        for r in elements {
            let next = stages.last().expect("nonempty").koszul_object(r)?;
            stages.push(next);
        }
        Ok(KoszulTower {
            base: base.clone(),
            elements: elements.to_vec(),
            stages,
        })
    }

    pub fn top(&self) -> &FreeComplex {
        self.stages.last().expect("nonempty")
    }
}

/// Koszul complex on `elems`, placed in degrees 0..s.
pub fn koszul_complex(ring: &Ring, elems: &[Polynomial]) -> Result<FreeComplex> {
    let t = KoszulTower::new(&FreeComplex::unit(ring), elems)?;
    Ok(t.top().shift(-(elems.len() as i64)))
}

/// Cokernel presentation of a cohomology module: generators of degrees
/// `shifts` and relation columns.
#[derive(Clone, Debug)]
pub struct CohomologyModule {
    pub ring: Ring,
    pub shifts: Vec<i64>,
    pub relations: PolyMatrix,
}

impl CohomologyModule {
    fn gb(&self) -> Result<ModuleGb> {
        ModuleGb::new(&self.ring, &self.shifts, &self.relations.columns(), MonomialOrder::Grevlex)
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.shifts.is_empty() || self.gb()?.is_everything())
    }

    /// dim_k of the degree-D part.
    pub fn dim(&self, d: i64) -> Result<usize> {
        if self.shifts.is_empty() {
            return Ok(0);
        }
        Ok(self.gb()?.quotient_dim(d))
    }

    pub fn annihilator(&self) -> Result<Ideal> {
        module_annihilator(&self.relations)
    }
}

/// Free resolution of coker(P) for homogeneous P: R^m → ⊕ R(−shifts),
/// placed in degrees −len..0 with F_0 in degree 0.
pub fn free_resolution(ring: &Ring, shifts: &[i64], p: &PolyMatrix) -> Result<FreeComplex> {
    let mut objs = vec![shifts.to_vec()];
    let mut maps: Vec<PolyMatrix> = Vec::new();
    let mut cols = minimal_generators(ring, shifts, &p.columns())?;
    let cap = ring.nvars() + 2;
    while !cols.is_empty() {
        if maps.len() > cap {
            return Err(Error::Invariant("resolution did not terminate".into()));
        }
        let src = objs.last().expect("nonempty").clone();
        let degs: Vec<i64> = cols
            .iter()
            .map(|c| vector_degree(c, &src).ok_or(Error::NotHomogeneous))
            .collect::<Result<_>>()?;
        maps.push(PolyMatrix::from_columns(ring, src.len(), &cols));
        let syz = syzygies(ring, &src, &cols)?;
        objs.push(degs.clone());
        cols = minimal_generators(ring, &degs, &syz)?;
    }
    let len = maps.len() as i64;
    objs.reverse();
    maps.reverse();
    FreeComplex::new(ring, -len, objs, maps)
}

/// Resolution of R/I for a homogeneous ideal I.
pub fn resolve_quotient(ideal: &Ideal) -> Result<FreeComplex> {
    let ring = ideal.ring();
    let p = PolyMatrix::from_columns(ring, 1, &ideal.gens().iter().map(|g| vec![g.clone()]).collect::<Vec<_>>());
    free_resolution(ring, &[0], &p)
}
