use crate::error::{Error, Result};
use crate::field::{DenseMatrix, Field, Scalar};
use crate::poly::{Ideal, ModuleGb, MonomialOrder, PolyMatrix, Polynomial, Ring};

pub type Multidegree = Vec<i64>;

fn leq(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// coker(P: ⊕R(−r_k) → ⊕R(−g_j)) for a Z^n-graded presentation; every
/// nonzero entry of P is a term c·x^{r_k − g_j}.
#[derive(Clone, Debug)]
pub struct MultigradedModule {
    ring: Ring,
    gen_degrees: Vec<Multidegree>,
    relations: PolyMatrix,
    rel_degrees: Vec<Multidegree>,
}

impl MultigradedModule {
    pub fn new(ring: &Ring, gen_degrees: Vec<Multidegree>, relations: PolyMatrix) -> Result<MultigradedModule> {
        let n = ring.nvars();
        if gen_degrees.iter().any(|g| g.len() != n) || relations.rows() != gen_degrees.len() {
            return Err(Error::DimensionMismatch("generator degrees and presentation disagree".into()));
        }
        let mut cols = Vec::new();
        let mut rel_degrees = Vec::new();
        for col in relations.columns() {
            let mut deg: Option<Multidegree> = None;
            for (j, p) in col.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let m = p.multidegree().ok_or(Error::NotHomogeneous)?;
                let d: Multidegree = gen_degrees[j].iter().zip(m.exps()).map(|(g, &e)| g + e as i64).collect();
                match &deg {
                    Some(prev) if *prev != d => return Err(Error::NotHomogeneous),
                    _ => deg = Some(d),
                }
            }
            if let Some(d) = deg {
                cols.push(col);
                rel_degrees.push(d);
            }
        }
        Ok(MultigradedModule {
            ring: ring.clone(),
            relations: PolyMatrix::from_columns(ring, gen_degrees.len(), &cols),
            gen_degrees,
            rel_degrees,
        })
    }

    /// R/I for a monomial ideal I.
    pub fn quotient(i: &Ideal) -> Result<MultigradedModule> {
        if !i.is_monomial() && !i.is_zero() {
            return Err(Error::NotMonomial);
        }
        let ring = i.ring();
        let cols: Vec<Vec<Polynomial>> = i.gens().iter().map(|g| vec![g.clone()]).collect();
        MultigradedModule::new(ring, vec![vec![0; ring.nvars()]], PolyMatrix::from_columns(ring, 1, &cols))
    }

    /// ⊕ R(−g_j).
    pub fn free(ring: &Ring, gen_degrees: Vec<Multidegree>) -> Result<MultigradedModule> {
        let r = gen_degrees.len();
        MultigradedModule::new(ring, gen_degrees, PolyMatrix::zeros(ring, r, 0))
    }

    pub fn zero(ring: &Ring) -> MultigradedModule {
        MultigradedModule::free(ring, vec![]).expect("empty presentation")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn gen_degrees(&self) -> &[Multidegree] {
        &self.gen_degrees
    }

    pub fn relations(&self) -> &PolyMatrix {
        &self.relations
    }

    pub fn rel_degrees(&self) -> &[Multidegree] {
        &self.rel_degrees
    }

    /// Total degrees of the generators, for single-graded Gröbner work.
    pub fn total_shifts(&self) -> Vec<i64> {
        self.gen_degrees.iter().map(|g| g.iter().sum()).collect()
    }

    /// Coordinate-wise maximum over generator and relation degrees.
    pub fn degree_ceiling(&self) -> Multidegree {
        let mut out = vec![i64::MIN; self.ring.nvars()];
        for d in self.gen_degrees.iter().chain(&self.rel_degrees) {
            for (o, &x) in out.iter_mut().zip(d) {
                *o = (*o).max(x);
            }
        }
        out
    }

    /// Largest absolute exponent or degree entry in the presentation.
    pub fn max_exponent(&self) -> i64 {
        self.gen_degrees
            .iter()
            .chain(&self.rel_degrees)
            .flat_map(|d| d.iter().map(|x| x.abs()))
            .max()
            .unwrap_or(0)
    }

    /// The degree-β piece M_β = F_β / N_β in generator coordinates.
    pub fn cell(&self, beta: &[i64]) -> Cell {
        let gens: Vec<usize> = (0..self.gen_degrees.len())
            .filter(|&j| leq(&self.gen_degrees[j], beta))
            .collect();
        let f = self.field();
        let rels: Vec<Vec<Scalar>> = (0..self.rel_degrees.len())
            .filter(|&k| leq(&self.rel_degrees[k], beta))
            .map(|k| {
                gens.iter()
                    .map(|&j| {
                        let p = self.relations.get(j, k);
                        p.terms().next().map(|(_, c)| c.clone()).unwrap_or_else(|| f.zero())
                    })
                    .collect()
            })
            .collect();
        Cell::new(f, gens, &rels)
    }

    /// dim_k M_β.
    pub fn dim(&self, beta: &[i64]) -> usize {
        self.cell(beta).dim()
    }

    /// M is zero: every generator lies in the relations.
    pub fn is_zero(&self) -> Result<bool> {
        if self.gen_degrees.is_empty() {
            return Ok(true);
        }
        let gb = ModuleGb::new(&self.ring, &self.total_shifts(), &self.relations.columns(), MonomialOrder::Grevlex)?;
        Ok(gb.is_everything())
    }
}

/// A quotient k^gens / span(rels) with a fixed complement basis.
#[derive(Clone, Debug)]
pub struct Cell {
    /// Generator indices present in this degree.
    pub gens: Vec<usize>,
    /// Positions (into `gens`) of the standard vectors completing the relations.
    reps: Vec<usize>,
    frame: DenseMatrix,
    rel_rank: usize,
}

impl Cell {
    fn new(field: Field, gens: Vec<usize>, rels: &[Vec<Scalar>]) -> Cell {
        let len = gens.len();
        let rel_basis: Vec<Vec<Scalar>> = if rels.is_empty() || len == 0 {
            vec![]
        } else {
            DenseMatrix::from_columns(field, len, rels).column_space()
        };
        let mut cols = rel_basis.clone();
        for i in 0..len {
            let mut e = vec![field.zero(); len];
            e[i] = field.one();
            cols.push(e);
        }
        let reps: Vec<usize> = if len == 0 {
            vec![]
        } else {
            DenseMatrix::from_columns(field, len, &cols)
                .rref()
                .pivots
                .iter()
                .filter(|&&p| p >= rel_basis.len())
                .map(|&p| p - rel_basis.len())
                .collect()
        };
        let mut frame_cols = rel_basis.clone();
        for &r in &reps {
            frame_cols.push(cols[rel_basis.len() + r].clone());
        }
        Cell {
            gens,
            frame: DenseMatrix::from_columns(field, len, &frame_cols),
            rel_rank: rel_basis.len(),
            reps,
        }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Generator index of the i-th basis vector of the quotient.
    pub fn basis_gen(&self, i: usize) -> usize {
        self.gens[self.reps[i]]
    }

    /// Quotient coordinates of a vector given on generator indices.
    pub fn coords(&self, field: Field, v: &[(usize, Scalar)]) -> Vec<Scalar> {
        let mut full = vec![field.zero(); self.gens.len()];
        for (j, c) in v {
            let pos = self.gens.binary_search(j).expect("generator present in target degree");
            full[pos] = &full[pos] + c;
        }
        let sol = self.frame.solve(&full).expect("shape").expect("frame spans the cell");
        sol[self.rel_rank..].to_vec()
    }
}

/// Bounded complex of multigraded modules; `maps[k]` goes from term k to
/// term k + 1 and is given on generators (rows = target generators).
#[derive(Clone, Debug)]
pub struct MgComplex {
    pub ring: Ring,
    pub lo: i64,
    pub terms: Vec<MultigradedModule>,
    pub maps: Vec<PolyMatrix>,
}

impl MgComplex {
    pub fn new(ring: &Ring, lo: i64, terms: Vec<MultigradedModule>, maps: Vec<PolyMatrix>) -> Result<MgComplex> {
        if maps.len() + 1 != terms.len().max(1) {
            return Err(Error::DimensionMismatch("need one map between consecutive terms".into()));
        }
        for (k, d) in maps.iter().enumerate() {
            let (src, tgt) = (&terms[k], &terms[k + 1]);
            if d.rows() != tgt.gen_degrees.len() || d.cols() != src.gen_degrees.len() {
                return Err(Error::DimensionMismatch(format!("map {k} has the wrong shape")));
            }
            for i in 0..d.rows() {
                for j in 0..d.cols() {
                    let p = d.get(i, j);
                    if p.is_zero() {
                        continue;
                    }
                    let m = p.multidegree().ok_or(Error::NotHomogeneous)?;
                    let want: Vec<i64> = tgt.gen_degrees[i].iter().zip(m.exps()).map(|(g, &e)| g + e as i64).collect();
                    if want != src.gen_degrees[j] {
                        return Err(Error::NotHomogeneous);
                    }
                }
            }
            // relations go to relations, and d∘d lands in the relations
            let gb = ModuleGb::new(ring, &tgt.total_shifts(), &tgt.relations.columns(), MonomialOrder::Grevlex)?;
            for col in src.relations.columns() {
                if !gb.contains(&d.mul_vec(&col)?) {
                    return Err(Error::NotAChainMap(lo + k as i64));
                }
            }
            if k + 1 < maps.len() {
                let tgt2 = &terms[k + 2];
                let gb2 = ModuleGb::new(ring, &tgt2.total_shifts(), &tgt2.relations.columns(), MonomialOrder::Grevlex)?;
                let dd = maps[k + 1].mul(d)?;
                if dd.columns().iter().any(|c| !gb2.contains(c)) {
                    return Err(Error::NotAComplex(lo + k as i64));
                }
            }
        }
        Ok(MgComplex {
            ring: ring.clone(),
            lo,
            terms,
            maps,
        })
    }

    /// M placed in degree 0.
    pub fn single(m: &MultigradedModule) -> MgComplex {
        MgComplex {
            ring: m.ring.clone(),
            lo: 0,
            terms: vec![m.clone()],
            maps: vec![],
        }
    }

    pub fn degree_ceiling(&self) -> Multidegree {
        let mut out = vec![i64::MIN; self.ring.nvars()];
        for t in &self.terms {
            for (o, x) in out.iter_mut().zip(t.degree_ceiling()) {
                *o = (*o).max(x);
            }
        }
        out
    }

    pub fn max_exponent(&self) -> i64 {
        self.terms.iter().map(MultigradedModule::max_exponent).max().unwrap_or(0)
    }

    /// Matrix of d^{lo+k} between the cells of terms k and k+1.
    pub(crate) fn cell_map(&self, k: usize, src: &Cell, tgt: &Cell) -> DenseMatrix {
        let f = self.ring.field();
        let d = &self.maps[k];
        let mut out = DenseMatrix::zeros(f, tgt.dim(), src.dim());
        for c in 0..src.dim() {
            let j = src.basis_gen(c);
            let img: Vec<(usize, Scalar)> = (0..d.rows())
                .filter_map(|i| d.get(i, j).terms().next().map(|(_, s)| (i, s.clone())))
                .collect();
            for (r, s) in tgt.coords(f, &img).into_iter().enumerate() {
                out[(r, c)] = s;
            }
        }
        out
    }
}

/// Map between two cells of the same module induced by inclusion of generators.
pub(crate) fn inclusion_map(field: Field, src: &Cell, tgt: &Cell) -> DenseMatrix {
    let mut out = DenseMatrix::zeros(field, tgt.dim(), src.dim());
    for c in 0..src.dim() {
        let v = [(src.basis_gen(c), field.one())];
        for (r, s) in tgt.coords(field, &v).into_iter().enumerate() {
            out[(r, c)] = s;
        }
    }
    out
}
