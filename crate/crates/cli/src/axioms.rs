//! The four support axioms checked over every file of a corpus directory.

use std::path::{Path, PathBuf};

use serde::Serialize;
use suppkit::fdalgebra::{is_projective, stable_hom_dim, syzygy_module, CIAlgebra, FDModule};
use suppkit::field::Scalar;
use suppkit::localcoh::{local_cohomology_complex, localization_triangle, mayer_vietoris_check, support_via_fibers};
use suppkit::poly::{module_annihilator, Ideal};
use suppkit::varieties::{
    identify, rank_variety_ideal, support_of_quotient, variety_equal_up_to_radical, ClosedSet, PrimeSpec,
};
use suppkit::{Error, Result};

use crate::commands::{complex_data, ext_annihilator, fd_data, query_box, Options};
use crate::input::{parse_ideal, resolve_field, standard_ring, Input};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Cohomology,
    Orthogonality,
    Exactness,
    Separation,
}

const AXIOMS: [Axiom; 4] = [Axiom::Cohomology, Axiom::Orthogonality, Axiom::Exactness, Axiom::Separation];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomRow {
    pub file: String,
    pub axiom: Axiom,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub files: usize,
    pub all_pass: bool,
    pub rows: Vec<AxiomRow>,
}

type Check = (Status, String);

fn verdict(ok: bool, detail: impl Into<String>) -> Check {
    (if ok { Status::Pass } else { Status::Fail }, detail.into())
}

fn skipped(detail: &str) -> Check {
    (Status::NotApplicable, detail.into())
}

/// A/(x_j : j ∉ keep), whose rank variety is the coordinate subspace on `keep`.
fn coordinate_module(alg: &CIAlgebra, keep: &[usize]) -> Result<FDModule> {
    let kill: Vec<Vec<Scalar>> = (0..alg.c()).filter(|i| !keep.contains(i)).map(|i| alg.var(i)).collect();
    Ok(FDModule::free(alg, 1).quotient(&kill)?.0)
}

fn meets_punctured(a: &Ideal, b: &Ideal) -> Result<bool> {
    let sum = a.sum(b)?;
    Ok(!sum.radical_contains_ideal(&Ideal::irrelevant(sum.ring()))?)
}

fn fd_checks(input: &Input, opts: &Options) -> Result<Vec<Check>> {
    let data = fd_data(input, opts)?;
    let (alg, m) = (&data.alg, &data.module);
    if !alg.group_mode() {
        return Ok(AXIOMS.iter().map(|_| skipped("not a group algebra")).collect());
    }
    let rank = rank_variety_ideal(m)?.ideal;

    let (_, ann) = ext_annihilator(m, opts.bound)?;
    let ann_alpha = identify(&ann, rank.ring())?;
    let cohomology = verdict(
        variety_equal_up_to_radical(&rank, &ann_alpha)?,
        format!("rank ideal {} against Ext annihilator {}", rank, ann),
    );

    let mut pairs = 0;
    let mut bad = Vec::new();
    for i in 0..alg.c() {
        let c = coordinate_module(alg, &[i])?;
        let c_rank = rank_variety_ideal(&c)?.ideal;
        if meets_punctured(&rank, &c_rank)? {
            continue;
        }
        pairs += 1;
        if stable_hom_dim(m, &c)? != 0 || stable_hom_dim(&c, m)? != 0 {
            bad.push(format!("x{}-line", i + 1));
        }
    }
    let orthogonality = verdict(
        bad.is_empty(),
        if bad.is_empty() {
            format!("stable Hom vanishes against {pairs} disjoint coordinate lines")
        } else {
            format!("nonzero stable Hom against {}", bad.join(", "))
        },
    );

    let omega = syzygy_module(m, 1)?;
    let omega_rank = rank_variety_ideal(&omega)?.ideal;
    // projective modules and their zero syzygy both have empty punctured variety
    let both_trivial =
        ClosedSet::new(rank.clone()).punctured_is_empty()? && ClosedSet::new(omega_rank.clone()).punctured_is_empty()?;
    let exactness = verdict(
        both_trivial || variety_equal_up_to_radical(&rank, &omega_rank)?,
        "0 → ΩM → F → M → 0 leaves the variety unchanged",
    );

    let projective = is_projective(m)?;
    let punctured_empty = ClosedSet::new(rank).punctured_is_empty()?;
    let separation = verdict(
        projective == punctured_empty,
        format!("projective = {projective}, punctured variety empty = {punctured_empty}"),
    );
    Ok(vec![cohomology, orthogonality, exactness, separation])
}

fn complex_checks(input: &Input, opts: &Options) -> Result<Vec<Check>> {
    let data = complex_data(input, opts)?;
    let (ring, x) = (&data.ring, &data.complex);
    let bx = query_box(x, opts);
    let n = ring.nvars();
    let (members, _) = support_via_fibers(x, &bx)?;

    let cohomology = if x.terms.len() == 1 {
        let ann = module_annihilator(x.terms[0].relations())?;
        let all = PrimeSpec::all_monomial(ring);
        let expected: Vec<&PrimeSpec> = all.iter().filter(|p| ann.inside_variable_prime(&p.vars)).collect();
        let same = expected.len() == members.len() && expected.iter().zip(&members).all(|(p, q)| p.vars == q.vars);
        verdict(same, format!("fibre support {} primes, annihilator support {}", members.len(), expected.len()))
    } else {
        skipped("annihilator route needs a single module")
    };

    let mut ideals: Vec<Ideal> = (0..n).map(|i| Ideal::variables(ring, &[i])).collect();
    ideals.push(Ideal::irrelevant(ring));
    if let Some(a) = &data.a {
        if a.is_monomial() && !ideals.contains(a) {
            ideals.push(a.clone());
        }
    }
    let mut orth_ok = true;
    let mut exact_ok = true;
    for a in &ideals {
        let t = localization_triangle(x, a, &bx)?;
        orth_ok &= t.gamma_inside && t.ell_outside;
        exact_ok &= t.union_recovers;
    }
    let orthogonality = verdict(orth_ok, format!("Γ inside and L outside V(a) for {} ideals", ideals.len()));
    let mv = match (&data.a, &data.b) {
        (Some(a), Some(b)) => Some((a.clone(), b.clone())),
        _ if n >= 2 => Some((Ideal::variables(ring, &[0]), Ideal::variables(ring, &[1]))),
        _ => None,
    };
    if let Some((a, b)) = &mv {
        exact_ok &= mayer_vietoris_check(x, a, b, &bx)?.passes;
    }
    let exactness = verdict(exact_ok, "triangles recover supp X; Mayer–Vietoris shadow holds");

    let acyclic = local_cohomology_complex(x, &Ideal::zero(ring), &bx)?.is_zero();
    let separation = verdict(
        acyclic == members.is_empty(),
        format!("acyclic in box = {acyclic}, support empty = {}", members.is_empty()),
    );
    Ok(vec![cohomology, orthogonality, exactness, separation])
}

fn ideal_checks(input: &Input, opts: &Options) -> Result<Vec<Check>> {
    let Input::Ideal { char, vars, generators, .. } = input else { unreachable!() };
    let ring = standard_ring(resolve_field(*char, opts.char)?, vars)?;
    let i = parse_ideal(&ring, generators)?;
    let (closed, _) = support_of_quotient(&i)?;
    Ok(vec![
        skipped("plain ideal"),
        skipped("plain ideal"),
        skipped("plain ideal"),
        verdict(closed.is_empty() == i.is_unit(), "V(I) empty iff R/I = 0"),
    ])
}

fn checks(input: &Input, opts: &Options) -> Result<Vec<Check>> {
    match input {
        Input::FdModule { .. } => fd_checks(input, opts),
        Input::Complex { .. } => complex_checks(input, opts),
        Input::Ideal { .. } => ideal_checks(input, opts),
        Input::Presentation { .. } => Ok(AXIOMS.iter().map(|_| skipped("presentation")).collect()),
    }
}

pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let entries = std::fs::read_dir(dir).map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files)
}

/// Parse a corpus file and build its object, so malformed files are
/// rejected before any axiom runs.
pub fn load(path: &Path, opts: &Options) -> Result<Input> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let input = Input::parse(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let built = match &input {
        Input::FdModule { .. } => fd_data(&input, opts).map(|_| ()),
        Input::Complex { .. } => complex_data(&input, opts).map(|_| ()),
        _ => Ok(()),
    };
    built.map_err(|e| match e {
        Error::Parse(_) => e,
        e if e.is_internal() => e,
        e => Error::Parse(format!("{}: {e}", path.display())),
    })?;
    Ok(input)
}

/// Runs every file in its own thread; rows come back in file order.
pub fn run_suite(dir: &Path, opts: &Options) -> Result<(SuiteReport, Vec<String>)> {
    let files = corpus_files(dir)?;
    let mut warnings = Vec::new();
    if files.is_empty() {
        warnings.push(format!("corpus {} is empty; nothing to check", dir.display()));
    }
    let inputs = files.iter().map(|f| load(f, opts)).collect::<Result<Vec<_>>>()?;
    let results: Vec<Result<Vec<Check>>> = std::thread::scope(|s| {
        let handles: Vec<_> = inputs.iter().map(|i| s.spawn(move || checks(i, opts))).collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err(Error::Invariant("axiom worker panicked".into()))))
            .collect()
    });
    let mut rows = Vec::new();
    for (file, res) in files.iter().zip(results) {
        let name = file.file_name().map_or_else(String::new, |n| n.to_string_lossy().into_owned());
        for (axiom, (status, detail)) in AXIOMS.iter().zip(res?) {
            rows.push(AxiomRow {
                file: name.clone(),
                axiom: *axiom,
                status,
                detail,
            });
        }
    }
    let all_pass = rows.iter().all(|r| r.status != Status::Fail);
    Ok((
        SuiteReport {
            files: files.len(),
            all_pass,
            rows,
        },
        warnings,
    ))
}
