use serde::Serialize;

use crate::error::Result;
use crate::poly::{Ideal, Monomial, PolyMatrix, Polynomial};
use crate::varieties::{ClosedSet, PrimeSpec, SupportReport};

use super::cech::{report_for, spec_for, CechSpec, DegreeBox, LocalCohReport, DEFAULT_BOX_CAP};
use super::module::{MgComplex, MultigradedModule};

/// p ∈ supp Y for Y given by (X, Čech data): the local cohomology of Y_p
/// at p has a nonzero piece in the box.
fn in_support(x: &MgComplex, base: &CechSpec, p: &PrimeSpec, query_box: &DegreeBox) -> Result<bool> {
    let n = x.ring.nvars();
    let mut spec = base.clone();
    for i in 0..n {
        if p.vars.contains(&i) {
            spec.supports.push((0..n).map(|k| k == i).collect());
        } else {
            spec.inverted[i] = true;
        }
    }
    Ok(!report_for(x, &spec, query_box, DEFAULT_BOX_CAP)?.is_zero())
}

/// Membership of one prime in the supports of X, Γ_a X and L_a X.
#[derive(Clone, Debug, Serialize)]
pub struct PrimeRow {
    pub prime: String,
    pub in_closed_set: bool,
    pub in_x: bool,
    pub in_gamma: bool,
    pub in_ell: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TriangleReport {
    pub rows: Vec<PrimeRow>,
    /// supp Γ ⊆ V(a).
    pub gamma_inside: bool,
    /// supp L ∩ V(a) = ∅.
    pub ell_outside: bool,
    /// supp Γ ∪ supp L = supp X, with supp Γ = supp X ∩ V(a).
    pub union_recovers: bool,
    pub gamma_cohomology: LocalCohReport,
    pub ell_cohomology: LocalCohReport,
}

impl TriangleReport {
    pub fn passes(&self) -> bool {
        self.gamma_inside && self.ell_outside && self.union_recovers
    }
}

/// Γ_a X → X → L_a X with Γ = Tot(X ⊗ Č(a)) and L the part of the Čech
/// complex away from the empty subset, checked prime by prime.
pub fn localization_triangle(x: &MgComplex, a: &Ideal, query_box: &DegreeBox) -> Result<TriangleReport> {
    let gamma = spec_for(x, a)?;
    let mut ell = gamma.clone();
    ell.must_meet = Some((1u64 << ell.supports.len()) - 1);
    let plain = CechSpec::new(&[], x.ring.nvars());
    let mut rows = Vec::new();
    for p in PrimeSpec::all_monomial(&x.ring) {
        rows.push(PrimeRow {
            prime: p.label(),
            in_closed_set: a.inside_variable_prime(&p.vars),
            in_x: in_support(x, &plain, &p, query_box)?,
            in_gamma: in_support(x, &gamma, &p, query_box)?,
            in_ell: in_support(x, &ell, &p, query_box)?,
        });
    }
    let gamma_inside = rows.iter().all(|r| !r.in_gamma || r.in_closed_set);
    let ell_outside = rows.iter().all(|r| !(r.in_ell && r.in_closed_set));
    let union_recovers = rows
        .iter()
        .all(|r| r.in_x == (r.in_gamma || r.in_ell) && r.in_gamma == (r.in_x && r.in_closed_set));
    Ok(TriangleReport {
        gamma_inside,
        ell_outside,
        union_recovers,
        gamma_cohomology: report_for(x, &gamma, query_box, DEFAULT_BOX_CAP)?,
        ell_cohomology: report_for(x, &ell, query_box, DEFAULT_BOX_CAP)?,
        rows,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MvRow {
    pub prime: String,
    pub in_a: bool,
    pub in_b: bool,
    pub in_sum: bool,
    pub in_product: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MvReport {
    pub passes: bool,
    pub rows: Vec<MvRow>,
}

/// Support shadow of the Mayer–Vietoris triangles: Γ_{a+b} is supported
/// where both Γ_a and Γ_b are, Γ_{ab} where either is.
pub fn mayer_vietoris_check(x: &MgComplex, a: &Ideal, b: &Ideal, query_box: &DegreeBox) -> Result<MvReport> {
    let sum = a.sum(b)?;
    let product = a.product(b)?;
    let specs = [spec_for(x, a)?, spec_for(x, b)?, spec_for(x, &sum)?, spec_for(x, &product)?];
    let mut rows = Vec::new();
    for p in PrimeSpec::all_monomial(&x.ring) {
        let m: Vec<bool> = specs
            .iter()
            .map(|s| in_support(x, s, &p, query_box))
            .collect::<Result<_>>()?;
        rows.push(MvRow {
            prime: p.label(),
            in_a: m[0],
            in_b: m[1],
            in_sum: m[2],
            in_product: m[3],
        });
    }
    let passes = rows
        .iter()
        .all(|r| r.in_sum == (r.in_a && r.in_b) && r.in_product == (r.in_a || r.in_b));
    Ok(MvReport { passes, rows })
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberSupport {
    /// Monomial primes (and (0)) whose fibre has nonzero local cohomology.
    pub members: Vec<String>,
    pub minimal: Vec<String>,
    pub report: SupportReport,
}

/// supp X among monomial primes: p is in when H_p(X_p) ≠ 0 within the box.
pub fn support_via_fibers(x: &MgComplex, query_box: &DegreeBox) -> Result<(Vec<PrimeSpec>, FiberSupport)> {
    let plain = CechSpec::new(&[], x.ring.nvars());
    let mut members = Vec::new();
    for p in PrimeSpec::all_monomial(&x.ring) {
        if in_support(x, &plain, &p, query_box)? {
            members.push(p);
        }
    }
    let minimal: Vec<&PrimeSpec> = members
        .iter()
        .filter(|p| !members.iter().any(|q| q.vars.len() < p.vars.len() && q.vars.iter().all(|v| p.vars.contains(v))))
        .collect();
    let mut ideal = Ideal::unit(&x.ring);
    for p in &minimal {
        ideal = ideal.intersection(&p.ideal)?;
    }
    let report = SupportReport::new(&ClosedSet::new(ideal))?;
    let out = FiberSupport {
        members: members.iter().map(PrimeSpec::label).collect(),
        minimal: minimal.iter().map(|p| p.label()).collect(),
        report,
    };
    Ok((members, out))
}

/// Kos(g_1^t..g_m^t) ⊗ M for the monomial generators g_i of a, in
/// cohomological degrees −m..0.
pub fn koszul_power_complex(m: &MultigradedModule, a: &Ideal, t: u32) -> Result<MgComplex> {
    let ring = m.ring();
    let gens: Vec<Monomial> = a
        .gens()
        .iter()
        .map(|g| g.terms().next().expect("nonzero").0.pow(t))
        .collect();
    let k = gens.len();
    let r = m.gen_degrees().len();
    // subsets grouped by size: degree −|S|
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); k + 1];
    for s in 0u64..1 << k {
        by_size[s.count_ones() as usize].push(s);
    }
    let shifted = |s: u64| -> Result<MultigradedModule> {
        let mut extra = vec![0i64; ring.nvars()];
        for (j, g) in gens.iter().enumerate() {
            if s >> j & 1 == 1 {
                for (e, &x) in extra.iter_mut().zip(g.exps()) {
                    *e += x as i64;
                }
            }
        }
        let degs = m.gen_degrees().iter().map(|d| d.iter().zip(&extra).map(|(a, b)| a + b).collect()).collect();
        MultigradedModule::new(ring, degs, m.relations().clone())
    };
    let mut terms = Vec::new();
    for size in (0..=k).rev() {
        let mut parts = Vec::new();
        for &s in &by_size[size] {
            parts.push(shifted(s)?);
        }
        terms.push(direct_sum(ring, &parts)?);
    }
    let mut maps = Vec::new();
    for size in (1..=k).rev() {
        let src = &by_size[size];
        let tgt = &by_size[size - 1];
        let mut d = PolyMatrix::zeros(ring, tgt.len() * r, src.len() * r);
        for (c, &s) in src.iter().enumerate() {
            for (j, gen) in gens.iter().enumerate() {
                if s >> j & 1 == 0 {
                    continue;
                }
                let t_set = s & !(1 << j);
                let row = tgt.iter().position(|&u| u == t_set).expect("subset present");
                let below = (s & ((1u64 << j) - 1)).count_ones();
                let mut g = Polynomial::monomial(ring, gen.clone());
                if below % 2 == 1 {
                    g = g.neg();
                }
                for q in 0..r {
                    d.set(row * r + q, c * r + q, g.clone());
                }
            }
        }
        maps.push(d);
    }
    MgComplex::new(ring, -(k as i64), terms, maps)
}

fn direct_sum(ring: &crate::poly::Ring, parts: &[MultigradedModule]) -> Result<MultigradedModule> {
    let rows: usize = parts.iter().map(|p| p.gen_degrees().len()).sum();
    let cols: usize = parts.iter().map(|p| p.relations().cols()).sum();
    let mut rel = PolyMatrix::zeros(ring, rows, cols);
    let mut degs = Vec::new();
    let (mut r0, mut c0) = (0, 0);
    for p in parts {
        rel.set_block(r0, c0, p.relations());
        r0 += p.gen_degrees().len();
        c0 += p.relations().cols();
        degs.extend(p.gen_degrees().iter().cloned());
    }
    MultigradedModule::new(ring, degs, rel)
}

/// Monomial primes in supp H*(Kos(a^t) ⊗ M), for t = 1, 2, ….
pub fn koszul_power_support(m: &MultigradedModule, a: &Ideal, t: u32, query_box: &DegreeBox) -> Result<Vec<String>> {
    let k = koszul_power_complex(m, a, t)?;
    Ok(support_via_fibers(&k, query_box)?.1.members)
}
