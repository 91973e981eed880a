//! Acceptance criteria AC-1..AC-10, one pass/fail line each with its
//! runtime against the limit. Exits nonzero if any criterion fails.

#[path = "../../core/tests/support/macaulay.rs"]
mod macaulay;

use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use suppkit::cohops::{ann_to_bound, chi_commutativity_check, eisenbud_operators, ext_to_trivial};
use suppkit::complexes::resolve_quotient;
use suppkit::fdalgebra::{carlson_module, end_ring_is_local, syzygy_module, CIAlgebra, FDModule, MinimalResolution};
use suppkit::field::Field;
use suppkit::localcoh::{
    local_cohomology, localization_triangle, mayer_vietoris_check, DegreeBox, MgComplex, MultigradedModule,
};
use suppkit::poly::{buchberger, Ideal, Monomial, MonomialOrder, Polynomial, Ring};
use suppkit::varieties::{
    benson_support_membership, connectivity, default_zetas, identify, koszul_detection_membership, krs_partition,
    rank_variety_ideal, variety_equal_up_to_radical, Connectivity, PrimeSpec,
};
use suppkit_cli::commands::{fd_data, Options};
use suppkit_cli::input::Input;

type Verdict = Result<(), String>;

/// Id, description, check, time limit in seconds.
type Criterion = (&'static str, &'static str, fn() -> Verdict, u64);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Verdict {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn f2() -> Field {
    Field::prime(2).unwrap()
}

fn kv4() -> CIAlgebra {
    CIAlgebra::elementary_abelian(2, 2).unwrap()
}

fn kc2() -> CIAlgebra {
    CIAlgebra::elementary_abelian(2, 1).unwrap()
}

fn carlson(alg: &CIAlgebra, class: &[i64]) -> FDModule {
    let f = alg.field();
    carlson_module(alg, 1, &class.iter().map(|&c| f.from_i64(c)).collect::<Vec<_>>()).unwrap()
}

/// k, A, L_x, L_y, L_{x+y}, Ωk, L_x ⊕ L_y over kV4.
fn curated() -> Vec<(&'static str, FDModule)> {
    let a = kv4();
    let k = FDModule::trivial(&a);
    let lx = carlson(&a, &[1, 0]);
    let ly = carlson(&a, &[0, 1]);
    vec![
        ("k", k.clone()),
        ("A", FDModule::free(&a, 1)),
        ("L_x", lx.clone()),
        ("L_y", ly.clone()),
        ("L_x+y", carlson(&a, &[1, 1])),
        ("Ωk", syzygy_module(&k, 1).unwrap()),
        ("L_x⊕L_y", lx.direct_sum(&ly).unwrap()),
    ]
}

fn chi_ring(c: usize) -> Ring {
    Ring::numbered(f2(), "chi", c, 2)
}

fn ac1() -> Verdict {
    let e = ext_to_trivial(&FDModule::trivial(&kv4()), 10).map_err(err)?;
    for n in 0..=10 {
        ensure(e.dim(n) == n + 1, || format!("dim Ext^{n}(k,k) = {}, want {}", e.dim(n), n + 1))?;
    }
    // independent count: ranks in the minimal resolution of k
    let res = MinimalResolution::new(&FDModule::trivial(&kv4()), 10).map_err(err)?;
    ensure(res.betti == (1..=11).collect::<Vec<_>>(), || format!("betti {:?}", res.betti))
}

fn ac2() -> Verdict {
    for (gname, alg) in [("kC2", kc2()), ("kV4", kv4())] {
        let k = FDModule::trivial(&alg);
        let lx = carlson(&alg, &vec![1; 1].into_iter().chain(vec![0; alg.c() - 1]).collect::<Vec<_>>());
        for (mname, m) in [("k", k.clone()), ("Ωk", syzygy_module(&k, 1).unwrap()), ("L_x", lx)] {
            let res = MinimalResolution::new(&m, 14).map_err(err)?;
            let ops = eisenbud_operators(&res).map_err(err)?;
            ensure(ops.stages.len() >= 13, || format!("{gname} {mname}: {} stages", ops.stages.len()))?;
            ensure(ops.reassembles().map_err(err)?, || format!("{gname} {mname}: d̃² ≠ Σ x_i^e T_i"))?;
            let e = ext_to_trivial(&m, 12).map_err(err)?;
            ensure(chi_commutativity_check(&e), || format!("{gname} {mname}: χ operators do not commute"))?;
        }
    }
    Ok(())
}

fn ac3() -> Verdict {
    for (name, m) in curated() {
        let rank = rank_variety_ideal(&m).map_err(err)?.ideal;
        let e = ext_to_trivial(&m, 12).map_err(err)?;
        let ann = ann_to_bound(&e, 8).map_err(err)?;
        let ann_alpha = identify(&ann, rank.ring()).map_err(err)?;
        ensure(variety_equal_up_to_radical(&rank, &ann_alpha).map_err(err)?, || {
            format!("{name}: rank ideal {rank} vs annihilator {ann}")
        })?;
    }
    Ok(())
}

fn ac4() -> Verdict {
    let ring = chi_ring(2);
    for (name, m) in curated() {
        let rank = rank_variety_ideal(&m).map_err(err)?.ideal;
        let rank_chi = identify(&rank, &ring).map_err(err)?;
        for p in PrimeSpec::all_monomial(&ring) {
            let zetas = default_zetas(m.algebra(), &p).map_err(err)?;
            let out = benson_support_membership(&m, &p, &zetas, 12).map_err(err)?;
            let expected = p.contains_ideal(&rank_chi);
            ensure(out.member == expected, || {
                format!("{name} at {}: Benson {} vs rank variety {expected}", p.label(), out.member)
            })?;
        }
    }
    Ok(())
}

fn plane() -> Ring {
    Ring::multigraded(f2(), &["x", "y"])
}

fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
    Ideal::parse(r, gens).unwrap()
}

fn ac5() -> Verdict {
    let r = plane();
    let m = MultigradedModule::quotient(&Ideal::zero(&r)).map_err(err)?;
    let bx = DegreeBox::cube(2, 4);
    let max = local_cohomology(&m, &ideal(&r, &["x", "y"]), &bx).map_err(err)?;
    ensure(max.vanishes(0) && max.vanishes(1), || "H^0, H^1 at (x,y) do not vanish".into())?;
    let axis = local_cohomology(&m, &ideal(&r, &["x"]), &bx).map_err(err)?;
    for beta in bx.cells() {
        let corner = beta[0] <= -1 && beta[1] <= -1;
        ensure(max.dim(2, &beta) == usize::from(corner), || format!("H^2_(x,y) at {beta:?}"))?;
        let strip = beta[0] <= -1 && beta[1] >= 0;
        ensure(axis.dim(1, &beta) == usize::from(strip), || format!("H^1_(x) at {beta:?}"))?;
    }
    for (i, cells) in &axis.degrees {
        ensure(*i == 1 || cells.is_empty(), || format!("H^{i}_(x) nonzero"))?;
    }
    for (i, cells) in &max.degrees {
        ensure(*i == 2 || cells.is_empty(), || format!("H^{i}_(x,y) nonzero"))?;
    }
    Ok(())
}

fn ac6() -> Verdict {
    let r = plane();
    for xg in [vec![], vec!["x"], vec!["x*y"]] {
        let x = MgComplex::single(&MultigradedModule::quotient(&ideal(&r, &xg)).map_err(err)?);
        let bx = DegreeBox::default_for(&x);
        for ag in [vec!["x"], vec!["x", "y"], vec!["x*y"]] {
            let t = localization_triangle(&x, &ideal(&r, &ag), &bx).map_err(err)?;
            ensure(t.rows.len() == 4, || format!("{} primes checked", t.rows.len()))?;
            ensure(t.gamma_inside && t.ell_outside && t.union_recovers, || {
                format!("R/{xg:?} with a = {ag:?}: {:?}", t.rows)
            })?;
        }
    }
    Ok(())
}

fn ac7() -> Verdict {
    let r = plane();
    for xg in [vec![], vec!["x"]] {
        let x = MgComplex::single(&MultigradedModule::quotient(&ideal(&r, &xg)).map_err(err)?);
        let report =
            mayer_vietoris_check(&x, &ideal(&r, &["x"]), &ideal(&r, &["y"]), &DegreeBox::default_for(&x)).map_err(err)?;
        ensure(report.passes, || format!("R/{xg:?}: {:?}", report.rows))?;
    }
    Ok(())
}

fn ac8() -> Verdict {
    let r = Ring::standard(f2(), &["x", "y"]);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for case in 0..50 {
        let count = rng.gen_range(0..=4);
        let exps: Vec<[u32; 2]> = (0..count).map(|_| [rng.gen_range(0..=3), rng.gen_range(0..=3)]).collect();
        let gens: Vec<Polynomial> = exps.iter().map(|e| Polynomial::monomial(&r, Monomial(e.to_vec()))).collect();
        let i = Ideal::new(&r, gens).map_err(err)?;
        let x = resolve_quotient(&i).map_err(err)?;
        let mut support = Vec::new();
        for p in PrimeSpec::all_monomial(&r) {
            let detected = koszul_detection_membership(&x, &p).map_err(err)?;
            // ann R/I = I for a cyclic module
            let ann_inside = exps.iter().all(|e| p.vars.iter().any(|&v| e[v] > 0));
            ensure(detected == ann_inside, || format!("case {case} {exps:?} at {}", p.label()))?;
            if detected {
                support.push(p.label());
            }
        }
        let zero = exps.iter().any(|e| e == &[0, 0]);
        ensure(support.is_empty() == zero, || format!("case {case} {exps:?}: support {support:?}"))?;
    }
    Ok(())
}

fn corpus() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn ac9() -> Verdict {
    let a = kv4();
    let m = carlson(&a, &[1, 0]).direct_sum(&carlson(&a, &[0, 1])).unwrap();
    let groups = krs_partition(&m, 0).map_err(err)?;
    ensure(groups.len() == 2, || format!("{} groups", groups.len()))?;
    let alpha = groups[0].ideal.ring().clone();
    let lines = [ideal(&alpha, &["a1"]), ideal(&alpha, &["a2"])];
    for line in &lines {
        let hits = groups
            .iter()
            .filter(|g| variety_equal_up_to_radical(&g.ideal, line).unwrap_or(false))
            .count();
        ensure(hits == 1, || format!("{hits} groups with variety V({line})"))?;
    }
    let mut checked = 0;
    for entry in std::fs::read_dir(corpus()).map_err(err)? {
        let path = entry.map_err(err)?.path();
        let text = std::fs::read_to_string(&path).map_err(err)?;
        let input = Input::parse(&text).map_err(err)?;
        let Input::FdModule { indecomposable: true, .. } = &input else { continue };
        let data = fd_data(&input, &Options::default()).map_err(err)?;
        ensure(end_ring_is_local(&data.module, 0).map_err(err)?, || format!("{} is decomposable", path.display()))?;
        let rank = rank_variety_ideal(&data.module).map_err(err)?.ideal;
        let c = connectivity(&rank).map_err(err)?;
        ensure(matches!(c, Connectivity::Connected | Connectivity::Empty), || {
            format!("{}: punctured variety {c:?}", path.display())
        })?;
        checked += 1;
    }
    ensure(checked > 0, || "no indecomposable modules in the corpus".into())
}

/// Random polynomial over F_5 with up to four terms; `exact` fixes every
/// term's degree, otherwise degrees range up to `max_deg`.
fn random_poly(r: &Ring, rng: &mut ChaCha8Rng, max_deg: u32, exact: bool) -> Polynomial {
    let f5 = r.field();
    let n = r.nvars();
    let top = rng.gen_range(0..=max_deg);
    let mut f = Polynomial::zero(r);
    for _ in 0..rng.gen_range(1..=4) {
        let d = if exact { top } else { rng.gen_range(0..=max_deg) };
        let mut e = vec![0u32; n];
        for _ in 0..d {
            e[rng.gen_range(0..n)] += 1;
        }
        let c = f5.from_i64(rng.gen_range(1..5));
        f = f.add(&Polynomial::term(r, c, Monomial(e))).unwrap();
    }
    f
}

/// Half the probes are combinations Σ h_i g_i with deg h_i ≤ 1, half random.
fn probe(r: &Ring, rng: &mut ChaCha8Rng, gens: &[Polynomial], i: usize, exact: bool) -> Polynomial {
    if i % 2 == 1 {
        return random_poly(r, rng, 3, false);
    }
    let d = rng.gen_range(0..=1);
    let mut f = Polynomial::zero(r);
    for g in gens {
        f = f.add(&random_poly(r, rng, d, exact).mul(g).unwrap()).unwrap();
    }
    f
}

fn ac10() -> Verdict {
    const P: u64 = 5;
    let f5 = Field::prime(P).unwrap();
    let names = ["x", "y", "z"];
    let cap_for = |f: &Polynomial| f.degree().unwrap_or(0).max(0) as u32 + 4;
    // homogeneous generators: the capped Macaulay matrix decides membership exactly
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for case in 0..100 {
        let n = rng.gen_range(1..=3);
        let r = Ring::standard(f5, &names[..n]);
        let count = rng.gen_range(1..=3);
        let gens: Vec<Polynomial> = (0..count).map(|_| random_poly(&r, &mut rng, 3, true)).collect();
        let gb = buchberger(&r, &gens, MonomialOrder::Grevlex).map_err(err)?;
        for i in 0..10 {
            let f = probe(&r, &mut rng, &gens, i, true);
            let oracle = macaulay::macaulay_member(&gens, &f, cap_for(&f), P);
            ensure(gb.contains(&f) == oracle, || {
                format!("case {case}: {f} in ({}) by GB {} vs Macaulay {oracle}", join(&gens), gb.contains(&f))
            })?;
        }
        let mut reordered = gens.clone();
        reordered.reverse();
        reordered.rotate_left(case % count);
        let other = buchberger(&r, &reordered, MonomialOrder::Grevlex).map_err(err)?;
        ensure(other.polys() == gb.polys(), || format!("case {case}: basis depends on generator order"))?;
    }
    // arbitrary generators: the capped oracle is only one-sided, so a GB
    // membership it misses must show up once the cap is raised
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut raised = 0;
    for case in 0..100 {
        let n = rng.gen_range(1..=3);
        let r = Ring::standard(f5, &names[..n]);
        let count = rng.gen_range(1..=3);
        let gens: Vec<Polynomial> = (0..count).map(|_| random_poly(&r, &mut rng, 3, false)).collect();
        let gb = buchberger(&r, &gens, MonomialOrder::Grevlex).map_err(err)?;
        for i in 0..10 {
            let f = probe(&r, &mut rng, &gens, i, false);
            let cap = cap_for(&f);
            let member = gb.contains(&f);
            let oracle = macaulay::macaulay_member(&gens, &f, cap, P);
            ensure(!oracle || member, || format!("case {case}: GB misses {f} in ({})", join(&gens)))?;
            if member && !oracle {
                let found = (cap + 1..=cap + 12).any(|c| macaulay::macaulay_member(&gens, &f, c, P));
                ensure(found, || format!("case {case}: no certificate for {f} in ({})", join(&gens)))?;
                raised += 1;
            }
        }
        let mut reordered = gens.clone();
        reordered.reverse();
        reordered.rotate_left(case % count);
        let other = buchberger(&r, &reordered, MonomialOrder::Grevlex).map_err(err)?;
        ensure(other.polys() == gb.polys(), || format!("case {case}: basis depends on generator order"))?;
    }
    println!("      inhomogeneous probes needing a cap above deg f + 4: {raised} of 1000");
    Ok(())
}

fn join(ps: &[Polynomial]) -> String {
    ps.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC-1", "Ext^n(k,k) over kV4 has dimension n+1", ac1, 5),
        ("AC-2", "Eisenbud operators reassemble and commute", ac2, 10),
        ("AC-3", "rank variety = Ext annihilator variety", ac3, 60),
        ("AC-4", "Benson membership = rank-variety membership", ac4, 60),
        ("AC-5", "local cohomology of the plane", ac5, 5),
        ("AC-6", "localization triangle separates supports", ac6, 20),
        ("AC-7", "Mayer–Vietoris support shadow", ac7, 10),
        ("AC-8", "Koszul detection = annihilator support", ac8, 120),
        ("AC-9", "KRS groups and connected indecomposables", ac9, 30),
        ("AC-10", "Buchberger membership = Macaulay oracle", ac10, 120),
    ];
    let mut failures = 0;
    for (id, what, check, limit) in criteria {
        let start = Instant::now();
        let verdict = check();
        let took = start.elapsed();
        let verdict = verdict.and_then(|()| {
            ensure(took < Duration::from_secs(limit), || format!("took {:.2}s", took.as_secs_f64()))
        });
        match verdict {
            Ok(()) => println!("{id} PASS {what} ({:.2}s, limit {limit}s)", took.as_secs_f64()),
            Err(e) => {
                failures += 1;
                println!("{id} FAIL {what} ({:.2}s, limit {limit}s): {e}", took.as_secs_f64());
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
