use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::poly::{module_annihilator, Ideal, PolyMatrix, Polynomial, Ring};

/// Where a prime came from; only zero and monomial primes are known prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Zero,
    Monomial,
    UserAsserted,
}

#[derive(Clone, Debug)]
pub struct PrimeSpec {
    pub ideal: Ideal,
    pub provenance: Provenance,
    /// Generating variables for monomial primes.
    pub vars: Vec<usize>,
}

impl PrimeSpec {
    pub fn zero(ring: &Ring) -> PrimeSpec {
        PrimeSpec {
            ideal: Ideal::zero(ring),
            provenance: Provenance::Zero,
            vars: vec![],
        }
    }

    /// The prime generated by the given variables (sorted, deduplicated).
    pub fn monomial(ring: &Ring, vars: &[usize]) -> PrimeSpec {
        let mut vars = vars.to_vec();
        vars.sort_unstable();
        vars.dedup();
        if vars.is_empty() {
            return PrimeSpec::zero(ring);
        }
        PrimeSpec {
            ideal: Ideal::variables(ring, &vars),
            provenance: Provenance::Monomial,
            vars,
        }
    }

    /// A prime supplied by the caller; primality is not checked. Ideals
    /// generated by variables are recognised as monomial primes.
    pub fn asserted(ideal: Ideal) -> PrimeSpec {
        if ideal.is_zero() {
            return PrimeSpec::zero(ideal.ring());
        }
        let vars: Option<Vec<usize>> = ideal
            .gens()
            .iter()
            .map(|g| {
                let (m, _) = g.terms().next()?;
                (g.num_terms() == 1 && m.total_degree() == 1).then(|| m.support()[0])
            })
            .collect();
        match vars {
            Some(v) => PrimeSpec::monomial(ideal.ring(), &v),
            None => PrimeSpec {
                ideal,
                provenance: Provenance::UserAsserted,
                vars: vec![],
            },
        }
    }

    /// All primes generated by subsets of the variables, smallest first.
    pub fn all_monomial(ring: &Ring) -> Vec<PrimeSpec> {
        let n = ring.nvars();
        let mut subsets: Vec<Vec<usize>> = (0u32..1 << n)
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
            .collect();
        subsets.sort_by_key(|s: &Vec<usize>| (s.len(), s.clone()));
        subsets.iter().map(|s| PrimeSpec::monomial(ring, s)).collect()
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        match self.provenance {
            Provenance::Zero => f.is_zero(),
            Provenance::Monomial => crate::poly::in_variable_prime(f, &self.vars),
            Provenance::UserAsserted => self.ideal.contains(f),
        }
    }

    /// I ⊆ p, i.e. p ∈ V(I).
    pub fn contains_ideal(&self, i: &Ideal) -> bool {
        i.gens().iter().all(|g| self.contains(g))
    }

    pub fn is_irrelevant(&self) -> bool {
        self.provenance == Provenance::Monomial && self.vars.len() == self.ring().nvars()
    }

    pub fn label(&self) -> String {
        if self.provenance == Provenance::Zero {
            return "(0)".into();
        }
        let gens: Vec<String> = self.ideal.gens().iter().map(ToString::to_string).collect();
        format!("({})", gens.join(","))
    }
}

/// V(I), compared up to radical.
#[derive(Clone, Debug)]
pub struct ClosedSet {
    pub ideal: Ideal,
}

impl ClosedSet {
    pub fn new(ideal: Ideal) -> ClosedSet {
        ClosedSet { ideal }
    }

    pub fn contains(&self, p: &PrimeSpec) -> bool {
        p.contains_ideal(&self.ideal)
    }

    /// V(I) ⊆ {irrelevant ideal}: every variable lies in √I.
    pub fn punctured_is_empty(&self) -> Result<bool> {
        self.ideal.radical_contains_ideal(&Ideal::irrelevant(self.ideal.ring()))
    }

    pub fn is_empty(&self) -> bool {
        self.ideal.is_unit()
    }

    pub fn same_as(&self, other: &ClosedSet) -> Result<bool> {
        variety_equal_up_to_radical(&self.ideal, &other.ideal)
    }
}

/// Every generator of each ideal lies in the radical of the other. Ideals
/// over different rings with matching variable counts are compared after
/// identifying the i-th variables.
pub fn variety_equal_up_to_radical(i: &Ideal, j: &Ideal) -> Result<bool> {
    let j = identify(j, i.ring())?;
    Ok(i.radical_contains_ideal(&j)? && j.radical_contains_ideal(i)?)
}

/// Move an ideal into `target` by identifying variables in order.
pub fn identify(i: &Ideal, target: &Ring) -> Result<Ideal> {
    if i.ring() == target {
        return Ok(i.clone());
    }
    if i.ring().nvars() != target.nvars() || i.ring().field() != target.field() {
        return Err(Error::VariableMismatch(format!("cannot identify {} with {}", i.ring(), target)));
    }
    let gens = i.gens().iter().map(|g| g.rename_ring(target)).collect::<Result<Vec<_>>>()?;
    Ideal::new(target, gens)
}

/// How the punctured variety V(I) ∖ {m} splits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "components")]
pub enum Connectivity {
    Empty,
    Connected,
    Disconnected(usize),
    Undetermined,
}

#[derive(Clone, Debug, Serialize)]
pub struct SupportReport {
    pub ring: Vec<String>,
    pub defining_ideal: Vec<String>,
    /// Minimal primes, when the ideal is monomial.
    pub components: Option<Vec<String>>,
    pub component_provenance: Option<Vec<Provenance>>,
    pub empty: bool,
    pub punctured_empty: bool,
    pub connectivity_partition: Option<Vec<Vec<usize>>>,
    pub connectivity: Connectivity,
}

impl SupportReport {
    pub fn new(closed: &ClosedSet) -> Result<SupportReport> {
        let ideal = &closed.ideal;
        let ring = ideal.ring();
        let primes: Option<Vec<PrimeSpec>> = if ideal.is_monomial() || ideal.is_zero() {
            Some(
                ideal
                    .monomial_minimal_primes()?
                    .iter()
                    .map(|v| PrimeSpec::monomial(ring, v))
                    .collect(),
            )
        } else {
            None
        };
        let partition = match &primes {
            Some(ps) => Some(connected_components(ps, true)?),
            None => None,
        };
        Ok(SupportReport {
            ring: ring.vars().to_vec(),
            defining_ideal: ideal.gens().iter().map(ToString::to_string).collect(),
            components: primes.as_ref().map(|ps| ps.iter().map(PrimeSpec::label).collect()),
            component_provenance: primes.as_ref().map(|ps| ps.iter().map(|p| p.provenance.clone()).collect()),
            empty: closed.is_empty(),
            punctured_empty: closed.punctured_is_empty()?,
            connectivity_partition: partition,
            connectivity: connectivity(ideal)?,
        })
    }
}

/// supp coker(P) = V(ann coker P).
pub fn support_of_module(p: &PolyMatrix) -> Result<(ClosedSet, SupportReport)> {
    let closed = ClosedSet::new(module_annihilator(p)?);
    let report = SupportReport::new(&closed)?;
    Ok((closed, report))
}

/// supp R/I = V(I).
pub fn support_of_quotient(i: &Ideal) -> Result<(ClosedSet, SupportReport)> {
    let closed = ClosedSet::new(i.clone());
    let report = SupportReport::new(&closed)?;
    Ok((closed, report))
}

/// Connected components of a union of pairwise incomparable closed
/// subsets V(P_i). With `puncture`, the irrelevant ideal is removed and
/// P_i, P_j are joined when √(P_i + P_j) is not the irrelevant ideal;
/// without it everything meets there.
pub fn connected_components(primes: &[PrimeSpec], puncture: bool) -> Result<Vec<Vec<usize>>> {
    for (i, a) in primes.iter().enumerate() {
        for b in &primes[i + 1..] {
            if a.ideal.contains_ideal(&b.ideal) || b.ideal.contains_ideal(&a.ideal) {
                return Err(Error::NotIncomparable);
            }
        }
    }
    let mut parent: Vec<usize> = (0..primes.len()).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        parent[i] = r;
        r
    }
    for i in 0..primes.len() {
        for j in i + 1..primes.len() {
            let joined = if puncture {
                let sum = primes[i].ideal.sum(&primes[j].ideal)?;
                !sum.radical_contains_ideal(&Ideal::irrelevant(sum.ring()))?
            } else {
                true
            };
            if joined {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut root_of: Vec<Option<usize>> = vec![None; primes.len()];
    for i in 0..primes.len() {
        let r = find(&mut parent, i);
        match root_of[r] {
            Some(g) => groups[g].push(i),
            None => {
                root_of[r] = Some(groups.len());
                groups.push(vec![i]);
            }
        }
    }
    Ok(groups)
}

/// Connectivity of the punctured variety of a homogeneous ideal, decided
/// when I is zero, monomial, or has a radical cut out by F_p-rational
/// linear forms.
pub fn connectivity(i: &Ideal) -> Result<Connectivity> {
    let closed = ClosedSet::new(i.clone());
    if closed.punctured_is_empty()? {
        return Ok(Connectivity::Empty);
    }
    if i.is_zero() {
        return Ok(Connectivity::Connected);
    }
    if i.is_monomial() {
        let primes: Vec<PrimeSpec> = i
            .monomial_minimal_primes()?
            .iter()
            .map(|v| PrimeSpec::monomial(i.ring(), v))
            .collect();
        let parts = connected_components(&primes, true)?;
        return Ok(if parts.len() == 1 {
            Connectivity::Connected
        } else {
            Connectivity::Disconnected(parts.len())
        });
    }
    if let Some(l) = linear_radical(i)? {
        // a linear subspace minus the origin; nonempty since it is proper
        debug_assert!(!l.is_unit());
        return Ok(Connectivity::Connected);
    }
    Ok(Connectivity::Undetermined)
}

/// If √I is generated by linear forms with coefficients in F_p, that ideal.
pub fn linear_radical(i: &Ideal) -> Result<Option<Ideal>> {
    let ring = i.ring();
    let field = ring.field();
    let p = field.characteristic();
    let n = ring.nvars();
    if p == 0 || (p as f64).powi(n as i32) > 65536.0 {
        return Ok(None);
    }
    let mut forms = Vec::new();
    let total = p.pow(n as u32);
    for code in 1..total {
        let mut c = code;
        let coeffs: Vec<Scalar> = (0..n)
            .map(|_| {
                let v = field.from_i64((c % p) as i64);
                c /= p;
                v
            })
            .collect();
        // one representative per projective point: leading coefficient 1
        if !coeffs.iter().find(|s| !s.is_zero()).is_some_and(Scalar::is_one) {
            continue;
        }
        let mut f = Polynomial::zero(ring);
        for (k, s) in coeffs.iter().enumerate() {
            f = f.add(&Polynomial::var(ring, k).scale(s))?;
        }
        if i.radical_contains(&f)? {
            forms.push(f);
        }
    }
    let l = Ideal::new(ring, forms)?;
    // L ⊆ √I by construction; L prime, so √I ⊆ L iff I ⊆ L
    if i.gens().iter().all(|g| l.contains(g)) {
        Ok(Some(l))
    } else {
        Ok(None)
    }
}
