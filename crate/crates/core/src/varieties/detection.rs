use serde::Serialize;

use crate::cohops::{ann_to_bound, default_cap, ext_module};
use crate::complexes::{FreeComplex, KoszulTower};
use crate::error::{Error, Result};
use crate::fdalgebra::{carlson_from_resolution, CIAlgebra, FDModule, MinimalResolution};
use crate::field::Scalar;
use crate::poly::{Ideal, Polynomial, Ring};

use super::support::{identify, PrimeSpec, Provenance};

/// p ∈ supp X, decided on X//p: some H^n(X//p) has annihilator inside p.
pub fn koszul_detection_membership(x: &FreeComplex, p: &PrimeSpec) -> Result<bool> {
    if p.provenance == Provenance::UserAsserted {
        return Err(Error::Precondition("Koszul detection needs a zero or monomial prime".into()));
    }
    if p.ring() != x.ring() {
        return Err(Error::MixedRings);
    }
    let tower = KoszulTower::new(x, p.ideal.gens())?;
    let top = tower.top();
    let Some((lo, hi)) = top.range() else {
        return Ok(false);
    };
    for n in lo..=hi {
        let h = top.cohomology(n)?;
        if h.is_zero()? {
            continue;
        }
        if p.contains_ideal(&h.annihilator()?) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A cohomology class in Ext^degree(k, k), as values on the generators of
/// F_degree in the minimal resolution of k.
#[derive(Clone, Debug)]
pub struct CohomologyClass {
    pub degree: usize,
    pub values: Vec<Scalar>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BensonOutcome {
    pub member: bool,
    /// Whether √(ζ's) = p was checked; false for classes the check cannot read.
    pub radical_verified: bool,
    pub maximal: bool,
    pub annihilator: Vec<String>,
    pub warnings: Vec<String>,
}

/// Coefficients c_i with g ≡ Σ c_i x_i modulo rad², for each generator g
/// of F_1 in the minimal resolution of k.
fn linear_parts(alg: &CIAlgebra, res: &MinimalResolution) -> Vec<Vec<Scalar>> {
    let d1 = res.differential(1);
    (0..d1.cols)
        .map(|j| {
            (0..alg.c())
                .map(|i| {
                    let mut e = vec![0; alg.c()];
                    e[i] = 1;
                    d1.entries[0][j][alg.index(&e).expect("e_i ≥ 2")].clone()
                })
                .collect()
        })
        .collect()
}

/// The degree-one class x_i dual to the variable X_i.
pub fn degree_one_class(alg: &CIAlgebra, i: usize) -> Result<CohomologyClass> {
    let res = MinimalResolution::new(&FDModule::trivial(alg), 1)?;
    let values = linear_parts(alg, &res).into_iter().map(|row| row[i].clone()).collect();
    Ok(CohomologyClass { degree: 1, values })
}

/// Default classes for a monomial prime (χ_i : i ∈ S): the x_i for i ∈ S.
pub fn default_zetas(alg: &CIAlgebra, p: &PrimeSpec) -> Result<Vec<CohomologyClass>> {
    if p.provenance == Provenance::UserAsserted {
        return Err(Error::Precondition("classes must be supplied for a non-monomial prime".into()));
    }
    if alg.field().characteristic() != 2 {
        return Err(Error::Precondition("default classes are only provided in characteristic 2".into()));
    }
    p.vars.iter().map(|&i| degree_one_class(alg, i)).collect()
}

/// In characteristic 2, ζ² for a degree-one class ζ = Σ ζ(X_i) x_i is the
/// linear form Σ ζ(X_i) χ_i. None for classes this cannot read.
fn chi_form(alg: &CIAlgebra, res: &MinimalResolution, z: &CohomologyClass, ring: &Ring) -> Option<Polynomial> {
    if z.degree != 1 || alg.field().characteristic() != 2 || alg.exps().iter().any(|&e| e != 2) {
        return None;
    }
    let lin = linear_parts(alg, res);
    // solve for ζ(X_i): the values on generators are ζ(g_j) = Σ_i lin[j][i] ζ(X_i)
    let f = alg.field();
    let m = crate::field::DenseMatrix::from_rows(f, lin).ok()?;
    let sol = m.solve(&z.values).ok()??;
    let mut out = Polynomial::zero(ring);
    for (i, c) in sol.iter().enumerate() {
        out = out.add(&Polynomial::var(ring, i).scale(c)).ok()?;
    }
    Some(out)
}

/// Is p in the support of M, tested on Ext*(L_ζ1 ⊗ … ⊗ L_ζs, M) whose
/// truncated χ-annihilator must lie inside p.
pub fn benson_support_membership(
    m: &FDModule,
    p: &PrimeSpec,
    zetas: &[CohomologyClass],
    bound: usize,
) -> Result<BensonOutcome> {
    let alg = m.algebra();
    if !alg.group_mode() {
        return Err(Error::NotAGroupAlgebra);
    }
    if p.ring().nvars() != alg.c() {
        return Err(Error::VariableMismatch(format!(
            "prime lives in {} variables, algebra has {}",
            p.ring().nvars(),
            alg.c()
        )));
    }
    let k = FDModule::trivial(alg);
    let top = zetas.iter().map(|z| z.degree).max().unwrap_or(0);
    let res = MinimalResolution::new(&k, top.max(1))?;
    let mut warnings = Vec::new();
    let maximal = p.is_irrelevant();
    if maximal {
        warnings.push("irrelevant ideal: the answer is module-category support, not stable support".into());
    }

    // radical check
    let forms: Vec<Option<Polynomial>> = zetas.iter().map(|z| chi_form(alg, &res, z, p.ring())).collect();
    let radical_verified = p.provenance != Provenance::UserAsserted && forms.iter().all(Option::is_some);
    if radical_verified {
        let l = Ideal::new(p.ring(), forms.into_iter().flatten().collect())?;
        let ok = l.radical_contains_ideal(&p.ideal)? && p.contains_ideal(&l);
        if !ok {
            return Err(Error::NotRadicalGenerators);
        }
    } else {
        warnings.push("radical of the supplied classes was not verified".into());
    }

    let mut t = k.clone();
    for z in zetas {
        let l = carlson_from_resolution(&res, z.degree, &z.values)?;
        t = t.tensor(&l)?;
    }
    let e = ext_module(&t, m, bound)?;
    let ann = ann_to_bound(&e, default_cap(bound))?;
    let ann = identify(&ann, p.ring())?;
    Ok(BensonOutcome {
        member: p.contains_ideal(&ann),
        radical_verified,
        maximal,
        annihilator: ann.gens().iter().map(ToString::to_string).collect(),
        warnings,
    })
}
