use std::fmt;

use super::groebner::{syzygies, vector_degree, ModuleGb};
use super::ideal::Ideal;
use super::monomial::MonomialOrder;
use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Matrix of polynomials. Columns are elements of the target free module, so
/// a `rows × cols` matrix is a map R^cols → R^rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ring));
        }
        m
    }

    pub fn from_columns(ring: &Ring, rows: usize, cols: &[Vec<Polynomial>]) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(ring, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, p) in c.iter().enumerate() {
                m.set(i, j, p.clone());
            }
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<PolyMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = PolyMatrix::zeros(ring, r, c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged matrix rows".into()));
            }
            for (j, p) in row.into_iter().enumerate() {
                if p.ring() != ring {
                    return Err(Error::MixedRings);
                }
                m.set(i, j, p);
            }
        }
        Ok(m)
    }

    /// Parse a grid of polynomial strings given row by row.
    pub fn parse(ring: &Ring, rows: usize, cols: usize, grid: &[Vec<String>]) -> Result<PolyMatrix> {
        if grid.len() != rows || grid.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse(format!("expected a {rows}x{cols} matrix")));
        }
        let mut m = PolyMatrix::zeros(ring, rows, cols);
        for (i, row) in grid.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                m.set(i, j, Polynomial::parse(ring, s)?);
            }
        }
        Ok(m)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.ring != other.ring {
            return Err(Error::MixedRings);
        }
        let mut out = PolyMatrix::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b)?)?;
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let col = PolyMatrix::from_columns(&self.ring, v.len(), &[v.to_vec()]);
        Ok(self.mul(&col)?.column(0))
    }

    pub fn scale(&self, p: &Polynomial) -> Result<PolyMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.mul(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn neg(&self) -> PolyMatrix {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(Polynomial::neg).collect(),
        }
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &PolyMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    pub fn kronecker(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        let mut out = PolyMatrix::zeros(&self.ring, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a.mul(other.get(k, l))?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Every nonzero entry (i, j) is homogeneous of degree col_shifts[j] − row_shifts[i].
    pub fn is_homogeneous(&self, row_shifts: &[i64], col_shifts: &[i64]) -> bool {
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                let p = self.get(i, j);
                p.is_zero() || p.homogeneous_degree() == Some(col_shifts[j] - row_shifts[i])
            })
        })
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_strings() {
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn unit_vector(ring: &Ring, n: usize, i: usize) -> Vec<Polynomial> {
    (0..n)
        .map(|k| if k == i { Polynomial::one(ring) } else { Polynomial::zero(ring) })
        .collect()
}

/// Annihilator of coker(P) for P: R^m → R^r, as ∩_i (im P : e_i).
pub fn module_annihilator(p: &PolyMatrix) -> Result<Ideal> {
    let ring = p.ring();
    let r = p.rows();
    let mut acc = Ideal::unit(ring);
    let cols = p.columns();
    for i in 0..r {
        let mut gens = vec![unit_vector(ring, r, i)];
        gens.extend(cols.iter().cloned());
        let syz = syzygies(ring, &vec![0; r], &gens)?;
        let colon = Ideal::new(ring, syz.into_iter().map(|s| s[0].clone()).collect())?;
        acc = acc.intersection(&colon)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// Minimal homogeneous generating set of the submodule spanned by `gens`
/// (graded Nakayama): scan by degree, dropping vectors already in the span
/// of those kept. Zero vectors are dropped. Order among survivors follows
/// (degree, input position).
pub fn minimal_generators(ring: &Ring, shifts: &[i64], gens: &[Vec<Polynomial>]) -> Result<Vec<Vec<Polynomial>>> {
    let mut idx: Vec<(i64, usize)> = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        if g.iter().all(Polynomial::is_zero) {
            continue;
        }
        let d = vector_degree(g, shifts).ok_or(Error::NotHomogeneous)?;
        idx.push((d, k));
    }
    idx.sort();
    let mut kept: Vec<Vec<Polynomial>> = Vec::new();
    for (_, k) in idx {
        let inside = !kept.is_empty()
            && ModuleGb::new(ring, shifts, &kept, MonomialOrder::Grevlex)?.contains(&gens[k]);
        if !inside {
            kept.push(gens[k].clone());
        }
    }
    Ok(kept)
}

/// Intersection of two submodules of R^r, via syzygies of [U | V].
pub fn submodule_intersection(
    ring: &Ring,
    shifts: &[i64],
    u: &[Vec<Polynomial>],
    v: &[Vec<Polynomial>],
) -> Result<Vec<Vec<Polynomial>>> {
    let mut all = u.to_vec();
    all.extend(v.iter().cloned());
    let syz = syzygies(ring, shifts, &all)?;
    let mut out = Vec::new();
    for s in syz {
        let mut w = vec![Polynomial::zero(ring); shifts.len()];
        for (a, g) in s[..u.len()].iter().zip(u) {
            for (wi, gi) in w.iter_mut().zip(g) {
                *wi = wi.add(&a.mul(gi)?)?;
            }
        }
        if w.iter().any(|p| !p.is_zero()) {
            out.push(w);
        }
    }
    Ok(out)
}

/// (U : f) = {v ∈ R^r : f·v ∈ U}.
pub fn submodule_colon(
    ring: &Ring,
    shifts: &[i64],
    u: &[Vec<Polynomial>],
    f: &Polynomial,
) -> Result<Vec<Vec<Polynomial>>> {
    let r = shifts.len();
    let mut gens: Vec<Vec<Polynomial>> = (0..r)
        .map(|i| {
            let mut e = unit_vector(ring, r, i);
            e[i] = f.clone();
            e
        })
        .collect();
    gens.extend(u.iter().cloned());
    let syz = syzygies(ring, shifts, &gens)?;
    Ok(syz
        .into_iter()
        .map(|s| s[..r].to_vec())
        .filter(|v| v.iter().any(|p| !p.is_zero()))
        .collect())
}

/// Do two sets of vectors span the same submodule?
pub fn same_submodule(
    ring: &Ring,
    shifts: &[i64],
    u: &[Vec<Polynomial>],
    v: &[Vec<Polynomial>],
) -> Result<bool> {
    let gu = ModuleGb::new(ring, shifts, u, MonomialOrder::Grevlex)?;
    let gv = ModuleGb::new(ring, shifts, v, MonomialOrder::Grevlex)?;
    Ok(v.iter().all(|w| gu.contains(w)) && u.iter().all(|w| gv.contains(w)))
}
