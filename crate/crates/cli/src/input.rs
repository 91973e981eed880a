//! JSON input files. Every file carries a `kind` tag; commands accept the
//! kinds they can work on.

use serde::{Deserialize, Serialize};
use suppkit::fdalgebra::{carlson_module, syzygy_module, CIAlgebra, FDModule};
use suppkit::field::Field;
use suppkit::localcoh::{MgComplex, MultigradedModule};
use suppkit::poly::{Ideal, PolyMatrix, Polynomial, Ring};
use suppkit::varieties::{CohomologyClass, PrimeSpec};
use suppkit::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Input {
    /// An ideal of k[vars], with optional membership probes.
    Ideal {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        char: Option<u64>,
        vars: Vec<String>,
        generators: Vec<String>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        probes: Vec<String>,
    },
    /// coker of a matrix over k[vars], given by its columns.
    Presentation {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        char: Option<u64>,
        vars: Vec<String>,
        rows: usize,
        columns: Vec<Vec<String>>,
    },
    /// A module over k[x_1..x_c]/(x_i^{e_i}).
    FdModule {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        char: Option<u64>,
        exponents: Vec<u32>,
        module: ModuleSpec,
        /// Second argument of Ext; the trivial module when absent.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        target: Option<ModuleSpec>,
        /// Prime of k[chi1..chic] for membership queries.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        prime: Option<PrimeInput>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        zetas: Vec<ClassInput>,
        /// Set when the module is known to be indecomposable.
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        indecomposable: bool,
    },
    /// A cochain complex of multigraded modules over k[vars].
    Complex {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        char: Option<u64>,
        vars: Vec<String>,
        #[serde(default)]
        lo: i64,
        terms: Vec<TermSpec>,
        /// `maps[i]`: terms[i] → terms[i+1] as a grid of rows.
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        maps: Vec<Vec<Vec<String>>>,
        /// Monomial ideals for local cohomology and the triangles.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        a: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        b: Option<Vec<String>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleSpec {
    /// Integer action matrices, one per variable.
    Actions { actions: Vec<Vec<Vec<i64>>> },
    Trivial,
    Free { rank: usize },
    /// A^1 modulo the ideal generated by polynomials in x1..xc.
    Cyclic { relations: Vec<String> },
    Syzygy { of: Box<ModuleSpec>, n: usize },
    /// L_ζ for ζ given by its values on the generators of F_degree.
    Carlson { degree: usize, class: Vec<i64> },
    DirectSum { summands: Vec<ModuleSpec> },
    Tensor { factors: Vec<ModuleSpec> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub struct PrimeInput {
    /// Variable indices of a monomial prime (0-based); empty is (0).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<usize>>,
    /// Generators of a prime asserted by the user.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub asserted: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassInput {
    pub degree: usize,
    pub values: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    /// Generator multidegrees.
    #[serde(default)]
    pub generators: Vec<Vec<i64>>,
    /// Relation columns, one entry per generator, each a single term.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<Vec<String>>,
    /// Shortcut: the cyclic module R/(ideal) generated in degree 0.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<String>>,
}

impl Input {
    pub fn parse(text: &str) -> Result<Input> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Input::Ideal { .. } => "ideal",
            Input::Presentation { .. } => "presentation",
            Input::FdModule { .. } => "fd_module",
            Input::Complex { .. } => "complex",
        }
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            Input::Ideal { name, .. }
            | Input::Presentation { name, .. }
            | Input::FdModule { name, .. }
            | Input::Complex { name, .. } => name.as_deref(),
        }
    }

    pub fn char(&self) -> Option<u64> {
        match self {
            Input::Ideal { char, .. }
            | Input::Presentation { char, .. }
            | Input::FdModule { char, .. }
            | Input::Complex { char, .. } => *char,
        }
    }
}

/// The file's characteristic wins over the default; an explicit flag that
/// disagrees with the file is rejected.
pub fn resolve_field(file: Option<u64>, flag: Option<u64>) -> Result<Field> {
    let c = match (file, flag) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::Precondition(format!(
                "--char {b} conflicts with characteristic {a} in the input"
            )))
        }
        (Some(a), _) => a,
        (None, Some(b)) => b,
        (None, None) => 2,
    };
    Field::from_characteristic(c)
}

fn var_refs(vars: &[String]) -> Vec<&str> {
    vars.iter().map(String::as_str).collect()
}

pub fn standard_ring(field: Field, vars: &[String]) -> Result<Ring> {
    let refs = var_refs(vars);
    Ring::new(field, &refs, &vec![1; refs.len()], suppkit::poly::Grading::Single)
}

pub fn multigraded_ring(field: Field, vars: &[String]) -> Result<Ring> {
    let refs = var_refs(vars);
    Ring::new(field, &refs, &vec![1; refs.len()], suppkit::poly::Grading::Multi)
}

pub fn parse_polys(ring: &Ring, gens: &[String]) -> Result<Vec<Polynomial>> {
    gens.iter().map(|g| Polynomial::parse(ring, g)).collect()
}

pub fn parse_ideal(ring: &Ring, gens: &[String]) -> Result<Ideal> {
    Ideal::new(ring, parse_polys(ring, gens)?)
}

pub fn presentation_matrix(ring: &Ring, rows: usize, columns: &[Vec<String>]) -> Result<PolyMatrix> {
    let mut cols = Vec::with_capacity(columns.len());
    for c in columns {
        if c.len() != rows {
            return Err(Error::DimensionMismatch(format!("column of length {} for {rows} rows", c.len())));
        }
        cols.push(parse_polys(ring, c)?);
    }
    Ok(PolyMatrix::from_columns(ring, rows, &cols))
}

pub fn algebra(field: Field, exponents: &[u32]) -> Result<CIAlgebra> {
    CIAlgebra::new(field, exponents.to_vec())
}

impl ModuleSpec {
    pub fn build(&self, alg: &CIAlgebra) -> Result<FDModule> {
        match self {
            ModuleSpec::Actions { actions } => FDModule::from_i64(alg, actions),
            ModuleSpec::Trivial => Ok(FDModule::trivial(alg)),
            ModuleSpec::Free { rank } => Ok(FDModule::free(alg, *rank)),
            ModuleSpec::Cyclic { relations } => {
                let ring = alg.lift_ring();
                let kill = parse_polys(&ring, relations)?
                    .iter()
                    .map(|p| alg.from_poly(p))
                    .collect::<Vec<_>>();
                Ok(FDModule::free(alg, 1).quotient(&kill)?.0)
            }
            ModuleSpec::Syzygy { of, n } => syzygy_module(&of.build(alg)?, *n),
            ModuleSpec::Carlson { degree, class } => {
                let f = alg.field();
                carlson_module(alg, *degree, &class.iter().map(|&v| f.from_i64(v)).collect::<Vec<_>>())
            }
            ModuleSpec::DirectSum { summands } => {
                let mut out = FDModule::zero(alg);
                for s in summands {
                    out = out.direct_sum(&s.build(alg)?)?;
                }
                Ok(out)
            }
            ModuleSpec::Tensor { factors } => {
                let mut out = FDModule::trivial(alg);
                for s in factors {
                    out = out.tensor(&s.build(alg)?)?;
                }
                Ok(out)
            }
        }
    }
}

impl PrimeInput {
    /// The prime inside `ring` (k[chi1..chic] or similar).
    pub fn build(&self, ring: &Ring) -> Result<PrimeSpec> {
        match (&self.vars, &self.asserted) {
            (Some(vars), None) => {
                if let Some(&v) = vars.iter().find(|&&v| v >= ring.nvars()) {
                    return Err(Error::Precondition(format!("variable index {v} out of range")));
                }
                Ok(PrimeSpec::monomial(ring, vars))
            }
            (None, Some(gens)) => Ok(PrimeSpec::asserted(parse_ideal(ring, gens)?)),
            _ => Err(Error::Precondition("a prime needs exactly one of `vars` or `asserted`".into())),
        }
    }
}

impl ClassInput {
    pub fn build(&self, field: Field) -> CohomologyClass {
        CohomologyClass {
            degree: self.degree,
            values: self.values.iter().map(|&v| field.from_i64(v)).collect(),
        }
    }
}

impl TermSpec {
    pub fn build(&self, ring: &Ring) -> Result<MultigradedModule> {
        if let Some(gens) = &self.ideal {
            if !self.generators.is_empty() || !self.relations.is_empty() {
                return Err(Error::Precondition("a term gives either `ideal` or generators and relations".into()));
            }
            return MultigradedModule::quotient(&parse_ideal(ring, gens)?);
        }
        let rel = presentation_matrix(ring, self.generators.len(), &self.relations)?;
        MultigradedModule::new(ring, self.generators.clone(), rel)
    }
}

/// The complex described by a `complex` input.
pub fn build_complex(ring: &Ring, lo: i64, terms: &[TermSpec], maps: &[Vec<Vec<String>>]) -> Result<MgComplex> {
    let modules = terms.iter().map(|t| t.build(ring)).collect::<Result<Vec<_>>>()?;
    if maps.len() + 1 != modules.len().max(1) {
        return Err(Error::DimensionMismatch(format!(
            "{} maps for {} terms",
            maps.len(),
            modules.len()
        )));
    }
    let mut mats = Vec::with_capacity(maps.len());
    for (i, grid) in maps.iter().enumerate() {
        let rows = modules[i + 1].gen_degrees().len();
        let cols = modules[i].gen_degrees().len();
        if grid.len() != rows || grid.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!("map {i} must be {rows}×{cols}")));
        }
        mats.push(PolyMatrix::parse(ring, rows, cols, grid)?);
    }
    MgComplex::new(ring, lo, modules, mats)
}
