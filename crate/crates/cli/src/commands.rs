use serde::Serialize;
use serde_json::{json, Value};
use suppkit::cohops::{
    ann_to_bound, chi_commutativity_check, default_cap, eisenbud_operators, ext_module, ext_to_trivial, ExtModule,
    CHI_WEIGHT,
};
use suppkit::fdalgebra::{decompose_indecomposables, end_ring_is_local, CIAlgebra, FDModule, MinimalResolution};
use suppkit::field::{DenseMatrix, Field};
use suppkit::localcoh::{
    local_cohomology_complex, localization_triangle, mayer_vietoris_check, support_via_fibers, DegreeBox, MgComplex,
};
use suppkit::poly::{buchberger, Ideal, MonomialOrder, Polynomial, Ring};
use suppkit::varieties::{
    benson_support_membership, connectivity, default_zetas, identify, krs_partition, rank_variety_ideal,
    support_of_module, support_of_quotient, variety_equal_up_to_radical, ClosedSet, PrimeSpec, SupportReport,
};
use suppkit::{Error, Result};

use crate::input::{
    algebra, build_complex, multigraded_ring, parse_ideal, parse_polys, presentation_matrix, resolve_field,
    standard_ring, Input, ModuleSpec,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Gb,
    Support,
    Rankvar,
    Ext,
    Carlson,
    Benson,
    Localcoh,
    Triangle,
    MvCheck,
    Decompose,
    Axioms,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Gb => "gb",
            Command::Support => "support",
            Command::Rankvar => "rankvar",
            Command::Ext => "ext",
            Command::Carlson => "carlson",
            Command::Benson => "benson",
            Command::Localcoh => "localcoh",
            Command::Triangle => "triangle",
            Command::MvCheck => "mv-check",
            Command::Decompose => "decompose",
            Command::Axioms => "axioms",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Options {
    pub char: Option<u64>,
    pub order: MonomialOrder,
    pub bound: usize,
    #[serde(rename = "box")]
    pub box_radius: Option<i64>,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Options {
        Options {
            char: None,
            order: MonomialOrder::Grevlex,
            bound: 12,
            box_radius: None,
            seed: 0,
        }
    }
}

/// Results payload plus warnings of one command.
pub struct Outcome {
    pub results: Value,
    pub warnings: Vec<String>,
}

fn to_value<T: Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Invariant(format!("serialisation failed: {e}")))
}

fn wrong_kind(cmd: Command, input: &Input) -> Error {
    Error::Precondition(format!("`{}` does not accept `{}` input", cmd.name(), input.kind()))
}

fn ideal_strings(i: &Ideal) -> Vec<String> {
    i.gens().iter().map(ToString::to_string).collect()
}

pub fn matrix_value(m: &DenseMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| {
                Value::Array(
                    m.row(r)
                        .iter()
                        .map(|s| s.to_i64().map_or_else(|| Value::String(s.to_string()), Value::from))
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn module_value(m: &FDModule) -> Value {
    json!({
        "dim": m.dim(),
        "actions": m.actions().iter().map(matrix_value).collect::<Vec<_>>(),
    })
}

pub struct FdData {
    pub alg: CIAlgebra,
    pub module: FDModule,
}

pub fn fd_data(input: &Input, opts: &Options) -> Result<FdData> {
    let Input::FdModule { char, exponents, module, .. } = input else {
        return Err(Error::Precondition(format!("expected fd_module input, got {}", input.kind())));
    };
    let field = resolve_field(*char, opts.char)?;
    let alg = algebra(field, exponents)?;
    let module = module.build(&alg)?;
    Ok(FdData { alg, module })
}

pub struct ComplexData {
    pub ring: Ring,
    pub complex: MgComplex,
    pub a: Option<Ideal>,
    pub b: Option<Ideal>,
}

pub fn complex_data(input: &Input, opts: &Options) -> Result<ComplexData> {
    let Input::Complex { char, vars, lo, terms, maps, a, b, .. } = input else {
        return Err(Error::Precondition(format!("expected complex input, got {}", input.kind())));
    };
    let field = resolve_field(*char, opts.char)?;
    let ring = multigraded_ring(field, vars)?;
    let complex = build_complex(&ring, *lo, terms, maps)?;
    let a = a.as_ref().map(|g| parse_ideal(&ring, g)).transpose()?;
    let b = b.as_ref().map(|g| parse_ideal(&ring, g)).transpose()?;
    Ok(ComplexData { ring, complex, a, b })
}

pub fn query_box(x: &MgComplex, opts: &Options) -> DegreeBox {
    match opts.box_radius {
        Some(r) => DegreeBox::cube(x.ring.nvars(), r),
        None => DegreeBox::default_for(x),
    }
}

pub fn chi_ring(field: Field, c: usize) -> Ring {
    Ring::numbered(field, "chi", c, CHI_WEIGHT)
}

/// The truncated χ-annihilator of Ext*(M, k) at the default cap.
pub fn ext_annihilator(m: &FDModule, bound: usize) -> Result<(ExtModule, Ideal)> {
    let e = ext_to_trivial(m, bound)?;
    let ann = ann_to_bound(&e, default_cap(bound))?;
    Ok((e, ann))
}

fn truncation_warning(bound: usize) -> String {
    format!("ann truncated at bound {bound}")
}

pub fn run(cmd: Command, input: &Input, opts: &Options) -> Result<Outcome> {
    match cmd {
        Command::Gb => gb(input, opts),
        Command::Support => support(input, opts),
        Command::Rankvar => rankvar(input, opts),
        Command::Ext => ext(input, opts),
        Command::Carlson => carlson(input, opts),
        Command::Benson => benson(input, opts),
        Command::Localcoh => localcoh(input, opts),
        Command::Triangle => triangle(input, opts),
        Command::MvCheck => mv_check(input, opts),
        Command::Decompose => decompose(input, opts),
        Command::Axioms => Err(Error::Precondition("axioms takes a corpus directory".into())),
    }
}

fn gb(input: &Input, opts: &Options) -> Result<Outcome> {
    let Input::Ideal { char, vars, generators, probes, .. } = input else {
        return Err(wrong_kind(Command::Gb, input));
    };
    let ring = standard_ring(resolve_field(*char, opts.char)?, vars)?;
    let gens = parse_polys(&ring, generators)?;
    let basis = buchberger(&ring, &gens, opts.order)?;
    let membership: Vec<Value> = parse_polys(&ring, probes)?
        .iter()
        .zip(probes)
        .map(|(p, s)| json!({"probe": s, "member": basis.contains(p)}))
        .collect();
    let leading: Vec<String> = basis
        .leading_monomials()
        .into_iter()
        .map(|m| Polynomial::monomial(&ring, m).to_string())
        .collect();
    Ok(Outcome {
        results: json!({
            "order": opts.order,
            "basis": basis.polys().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "leading_monomials": leading,
            "zero_ideal": basis.polys().is_empty(),
            "unit_ideal": basis.is_unit(),
            "membership": membership,
        }),
        warnings: vec![],
    })
}

fn support(input: &Input, opts: &Options) -> Result<Outcome> {
    let mut warnings = vec![];
    let results = match input {
        Input::Ideal { char, vars, generators, .. } => {
            let ring = standard_ring(resolve_field(*char, opts.char)?, vars)?;
            to_value(&support_of_quotient(&parse_ideal(&ring, generators)?)?.1)?
        }
        Input::Presentation { char, vars, rows, columns, .. } => {
            let ring = standard_ring(resolve_field(*char, opts.char)?, vars)?;
            to_value(&support_of_module(&presentation_matrix(&ring, *rows, columns)?)?.1)?
        }
        Input::Complex { .. } => {
            let data = complex_data(input, opts)?;
            let bx = query_box(&data.complex, opts);
            warnings.push(format!("fibre supports read in the box {:?}..{:?}", bx.lo, bx.hi));
            to_value(&support_via_fibers(&data.complex, &bx)?.1)?
        }
        Input::FdModule { .. } => {
            let data = fd_data(input, opts)?;
            let rank = rank_variety_ideal(&data.module)?;
            warnings.push("support given by the rank variety".into());
            to_value(&SupportReport::new(&ClosedSet::new(rank.ideal))?)?
        }
    };
    Ok(Outcome { results, warnings })
}

fn rankvar(input: &Input, opts: &Options) -> Result<Outcome> {
    let data = fd_data(input, opts)?;
    let rank = rank_variety_ideal(&data.module)?;
    let report = SupportReport::new(&ClosedSet::new(rank.ideal.clone()))?;
    let mut results = json!({
        "ring": rank.ideal.ring().vars(),
        "ideal": ideal_strings(&rank.ideal),
        "module_dim": rank.module_dim,
        "free_rank_target": rank.free_rank_target,
        "support": to_value(&report)?,
    });
    let mut warnings = vec![];
    if data.alg.group_mode() {
        let (_, ann) = ext_annihilator(&data.module, opts.bound)?;
        let ann_alpha = identify(&ann, rank.ideal.ring())?;
        results["ext_annihilator"] = json!(ideal_strings(&ann));
        results["routes_agree"] = json!(variety_equal_up_to_radical(&rank.ideal, &ann_alpha)?);
        warnings.push(truncation_warning(opts.bound));
    } else {
        warnings.push("not a group algebra: no cohomological cross-check".into());
    }
    Ok(Outcome { results, warnings })
}

fn ext(input: &Input, opts: &Options) -> Result<Outcome> {
    let data = fd_data(input, opts)?;
    let Input::FdModule { target, .. } = input else { unreachable!() };
    let e = match target {
        Some(spec) => ext_module(&data.module, &spec.build(&data.alg)?, opts.bound)?,
        None => ext_to_trivial(&data.module, opts.bound)?,
    };
    let ann = ann_to_bound(&e, default_cap(opts.bound))?;
    let res = MinimalResolution::new(&data.module, opts.bound + 2)?;
    let ops = eisenbud_operators(&res)?;
    Ok(Outcome {
        results: json!({
            "bound": opts.bound,
            "ext": to_value(&e.report())?,
            "annihilator": ideal_strings(&ann),
            "annihilator_degree_cap": default_cap(opts.bound),
            "chi_commute": chi_commutativity_check(&e),
            "operators_reassemble": ops.reassembles()?,
            "betti": res.betti,
        }),
        warnings: vec![truncation_warning(opts.bound)],
    })
}

fn carlson(input: &Input, opts: &Options) -> Result<Outcome> {
    let Input::FdModule { module: ModuleSpec::Carlson { degree, class }, .. } = input else {
        return Err(Error::Precondition("carlson needs an fd_module whose module is a carlson class".into()));
    };
    let data = fd_data(input, opts)?;
    let rank = rank_variety_ideal(&data.module)?;
    let omega = suppkit::fdalgebra::syzygy_module(&FDModule::trivial(&data.alg), *degree)?;
    Ok(Outcome {
        results: json!({
            "degree": degree,
            "class": class,
            "module": module_value(&data.module),
            "syzygy_dim": omega.dim(),
            "rank_ideal": ideal_strings(&rank.ideal),
            "connectivity": to_value(&connectivity(&rank.ideal)?)?,
        }),
        warnings: vec![],
    })
}

fn benson(input: &Input, opts: &Options) -> Result<Outcome> {
    let data = fd_data(input, opts)?;
    let Input::FdModule { prime, zetas, .. } = input else { unreachable!() };
    let field = data.alg.field();
    let ring = chi_ring(field, data.alg.c());
    let primes = match prime {
        Some(p) => vec![p.build(&ring)?],
        None => PrimeSpec::all_monomial(&ring),
    };
    let rank = rank_variety_ideal(&data.module)?;
    let rank_chi = identify(&rank.ideal, &ring)?;
    let mut warnings = vec![truncation_warning(opts.bound)];
    let mut rows = Vec::new();
    for p in &primes {
        let classes = if zetas.is_empty() {
            default_zetas(&data.alg, p)?
        } else {
            zetas.iter().map(|z| z.build(field)).collect()
        };
        let out = benson_support_membership(&data.module, p, &classes, opts.bound)?;
        for w in &out.warnings {
            let w = format!("{}: {w}", p.label());
            if !warnings.contains(&w) {
                warnings.push(w);
            }
        }
        rows.push(json!({
            "prime": p.label(),
            "provenance": to_value(&p.provenance)?,
            "outcome": to_value(&out)?,
            "rank_variety_member": p.contains_ideal(&rank_chi),
        }));
    }
    Ok(Outcome {
        results: json!({"rank_ideal": ideal_strings(&rank_chi), "primes": rows}),
        warnings,
    })
}

fn required<'a>(i: &'a Option<Ideal>, what: &str) -> Result<&'a Ideal> {
    i.as_ref().ok_or_else(|| Error::Precondition(format!("input needs the ideal `{what}`")))
}

fn localcoh(input: &Input, opts: &Options) -> Result<Outcome> {
    let data = complex_data(input, opts)?;
    let a = required(&data.a, "a")?;
    let bx = query_box(&data.complex, opts);
    let report = local_cohomology_complex(&data.complex, a, &bx)?;
    Ok(Outcome {
        results: json!({"ideal": ideal_strings(a), "ring": data.ring.vars(), "cohomology": to_value(&report)?}),
        warnings: vec![],
    })
}

fn triangle(input: &Input, opts: &Options) -> Result<Outcome> {
    let data = complex_data(input, opts)?;
    let a = required(&data.a, "a")?;
    let bx = query_box(&data.complex, opts);
    let report = localization_triangle(&data.complex, a, &bx)?;
    Ok(Outcome {
        results: json!({"ideal": ideal_strings(a), "passes": report.passes(), "triangle": to_value(&report)?}),
        warnings: vec![],
    })
}

fn mv_check(input: &Input, opts: &Options) -> Result<Outcome> {
    let data = complex_data(input, opts)?;
    let a = required(&data.a, "a")?;
    let b = required(&data.b, "b")?;
    let bx = query_box(&data.complex, opts);
    let report = mayer_vietoris_check(&data.complex, a, b, &bx)?;
    Ok(Outcome {
        results: json!({"a": ideal_strings(a), "b": ideal_strings(b), "report": to_value(&report)?}),
        warnings: vec![],
    })
}

fn decompose(input: &Input, opts: &Options) -> Result<Outcome> {
    let data = fd_data(input, opts)?;
    let mut summands = Vec::new();
    for s in decompose_indecomposables(&data.module, opts.seed)? {
        let rank = rank_variety_ideal(&s)?;
        summands.push(json!({
            "module": module_value(&s),
            "local_endomorphisms": end_ring_is_local(&s, opts.seed)?,
            "rank_ideal": ideal_strings(&rank.ideal),
            "connectivity": to_value(&connectivity(&rank.ideal)?)?,
        }));
    }
    let mut results = json!({"seed": opts.seed, "summands": summands});
    let mut warnings = vec!["splittings are found along eigenvalues in the prime field".to_string()];
    if data.alg.group_mode() {
        let groups: Vec<Value> = krs_partition(&data.module, opts.seed)?
            .iter()
            .map(|g| {
                json!({
                    "dims": g.summands.iter().map(|s| s.module.dim()).collect::<Vec<_>>(),
                    "ideal": ideal_strings(&g.ideal),
                    "projective": g.projective,
                })
            })
            .collect();
        results["krs_groups"] = Value::Array(groups);
    } else {
        warnings.push("not a group algebra: no KRS grouping".into());
    }
    Ok(Outcome { results, warnings })
}
