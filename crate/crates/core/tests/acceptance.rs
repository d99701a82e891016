//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! A criterion listed in `KNOWN_FAILURES` prints FAIL without failing the
//! run, provided it fails for the documented reason; any other failure
//! exits nonzero.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use fusion_cert::census::{build_figure3, figure3_tsv, CensusReport};
use fusion_cert::center::*;
use fusion_cert::cyclotomic::units::kernel_identities;
use fusion_cert::fixtures::{self, data_lines, FixtureSet};
use fusion_cert::fusion::{builtin_r, fpdim_data_r};
use fusion_cert::obstruction::run_obstruction;
use fusion_cert::pipeline::{run_pipeline, Config};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// Criteria expected to fail, with the reason they are allowed to.
const KNOWN_FAILURES: [(u32, &str); 1] = [(7, "rank-24 cover elimination not reproduced")];

fn c1() -> Outcome {
    let t0 = Instant::now();
    let (d, _) = fpdim_data_r().unwrap();
    let rep = run_obstruction(&builtin_r(), &d, false).unwrap();
    let secs = t0.elapsed().as_secs_f64();
    let exps: BTreeSet<Vec<u8>> = rep.survivors.iter().map(|s| s.theta_exponents.clone()).collect();
    let want = BTreeSet::from([vec![0, 1, 1, 3, 6, 1], vec![0, 8, 8, 6, 3, 8]]);
    let witness = rep
        .survivors
        .iter()
        .all(|s| s.witness_111.is_one() && s.mismatches.iter().any(|m| (m.i, m.j, m.k) == (1, 1, 1)));
    outcome(
        rep.tuples == 297 && rep.survivors.len() == 2 && exps == want && witness && rep.certified(),
        format!("{} tuples, {} survivors, exponents {:?}, (1,1,1) residual 1 vs 0: {witness}, {secs:.2}s", rep.tuples, rep.survivors.len(), exps),
    )
}

fn c2() -> Outcome {
    let t0 = Instant::now();
    let ids = kernel_identities();
    let failed: Vec<_> = ids.iter().filter(|(_, ok)| !ok).map(|(k, _)| *k).collect();
    outcome(failed.is_empty(), format!("{} identities, failed {:?}, {:.3}s", ids.len(), failed, t0.elapsed().as_secs_f64()))
}

fn c3(census: &CensusReport, secs: f64, fx: &FixtureSet) -> Outcome {
    let text = fx.read(fixtures::FIGURE3).unwrap();
    let fixture: Vec<&str> = data_lines(&text).into_iter().map(|(_, l)| l).collect();
    let computed = figure3_tsv(&census.rows);
    let computed: Vec<&str> = computed.lines().collect();
    outcome(
        fixture == computed && census.rows.len() == 21,
        format!("{} rows, {} distinct dims, fixture identical: {}, {secs:.2}s", census.rows.len(), census.distinct_dims, fixture == computed),
    )
}

fn c4() -> Outcome {
    let r = builtin_r();
    let want: [[u32; 6]; 6] = [
        [6, 3, 3, 6, 3, 3],
        [3, 15, 6, 12, 15, 6],
        [3, 6, 15, 12, 15, 6],
        [6, 12, 12, 24, 21, 12],
        [3, 15, 15, 21, 33, 15],
        [3, 6, 6, 12, 15, 15],
    ];
    let bad: Vec<usize> = (0..6).filter(|&j| induction_image(&r, j) != want[j].to_vec()).collect();
    outcome(bad.is_empty(), format!("mismatching j: {bad:?}"))
}

fn c5(c: &Constraints, fx: &FixtureSet) -> Outcome {
    let f = fixtures::parse_constants(&fx.read(fixtures::CONSTANTS).unwrap()).unwrap();
    let lit = c.orbit.ir33 == vec![5, 2, 2, 2, 1, 0, 18, 6, 0]
        && c.orbit.ir44 == vec![5, 2, 5, 5, 0, 1, 18, 6, 9]
        && c.rhs == [15, 12, 12, 15];
    let fix = f.ir33 == c.orbit.ir33 && f.ir44 == c.orbit.ir44 && f.k == c.k && f.rhs == c.rhs.to_vec();
    outcome(lit && fix && c.k.iter().all(|r| r.len() == 29), format!("literals: {lit}, K 4x{} and fixture: {fix}", c.k[0].len()))
}

fn c6(vectors: &[OrbitVector], fx: &FixtureSet) -> Outcome {
    let f: BTreeSet<OrbitVector> = fixtures::parse_orbit_vectors(&fx.read(fixtures::ORBIT45).unwrap()).unwrap().into_iter().collect();
    let got: BTreeSet<OrbitVector> = vectors.iter().copied().collect();
    let o6 = vectors.iter().all(|o| o[6] == 0);
    outcome(vectors.len() == 45 && got == f && o6, format!("{} vectors, equal to fixture: {}, o6 = 0: {o6}", vectors.len(), got == f))
}

/// Returns the outcome and whether the only failing part is the documented one.
fn c7(census: &CensusReport, c: &Constraints, vectors: &[OrbitVector], fx: &FixtureSet) -> (Outcome, bool, Option<Vec<Column>>) {
    let ring = builtin_r();
    let t0 = Instant::now();
    let s = run_search(c, vectors, &orbit_sizes(&census.orbit_types)).unwrap();
    let secs = t0.elapsed().as_secs_f64();
    let ranks: Vec<u32> = s.solutions.iter().map(|x| x.rank).collect();
    let search_ok = s.total_warnings() == 0 && ranks == vec![24, 36];

    let mut elim_ok = false;
    let mut printed_infeasible = false;
    let mut derived_coverable = false;
    let mut profiles = BTreeSet::new();
    let mut table = None;
    let mut table_ok = false;
    for sol in &s.solutions {
        if sol.rank == 24 {
            let e = eliminate_candidate(c, &census.rows, &ring, sol).unwrap();
            elim_ok = e.certified();
            printed_infeasible = e.printed_target_infeasible();
            derived_coverable = e.cases.iter().all(|x| x.derived.feasible());
            profiles = e.cases.iter().map(|x| x.distinct_profiles).collect();
        }
        if sol.rank == 36 {
            let cols = emit_center_table(c, &census.rows, sol).unwrap();
            let f2 = fixtures::parse_figure2(&fx.read(fixtures::FIGURE2).unwrap()).unwrap();
            let (d, _) = fpdim_data_r().unwrap();
            table_ok = cols.len() == 36 && same_by_orbit(&cols, &f2) && dimension_audit(&census.rows, &d, &cols).unwrap();
            table = Some(cols);
        }
    }
    // (2,4,2,1,5,2) in the order (1, A1, A2, A3, B, C) is PRINTED_TARGET in X-order
    let sub_order = [2u32, 4, 2, 1, 5, 2];
    let mut in_x = [0u32; 6];
    for (i, x) in STATED_ASSIGNMENT.iter().enumerate() {
        in_x[*x] = sub_order[i];
    }
    let pass = search_ok && elim_ok && table_ok;
    let known = search_ok && table_ok && !elim_ok && printed_infeasible && derived_coverable && in_x == PRINTED_TARGET;
    let detail = format!(
        "{} triples, {} warnings, ranks {ranks:?}, script reading ranks {:?}; rank-24: stated target {:?} infeasible: {printed_infeasible}, derived targets coverable: {derived_coverable}, distinct profiles {:?}, eliminated: {elim_ok}; rank-36 table = fixture: {table_ok}; {secs:.2}s",
        s.total_triples(),
        s.total_warnings(),
        s.solutions_script.iter().map(|x| x.rank).collect::<Vec<_>>(),
        PRINTED_TARGET,
        profiles,
    );
    (outcome(pass, detail), known, table)
}

fn c8(table: Option<&[Column]>) -> Outcome {
    let Some(table) = table else {
        return outcome(false, "no rank-36 table");
    };
    let rep = verify_subcategory(&builtin_r(), table).unwrap();
    let counts: Vec<u32> = rep.hom_counts.iter().map(|h| h.value).collect();
    outcome(rep.ok(), format!("matches ring: {}, hom counts {counts:?}", rep.matches_ring))
}

fn c9() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    let mut note = |name: &str, r: Result<String, String>| {
        ok &= r.is_ok();
        parts.push(format!("{name}: {}", r.unwrap_or_else(|e| format!("FAILED {e}"))));
    };
    note("field axioms", common::field_axioms(1000).map(|_| "1000 cases".into()));
    note("group law", common::galois_group_law(300).map(|_| "300 cases".into()));
    note("norm", common::norm_multiplicative(300).map(|_| "300 cases".into()));
    note("parity", common::parity_sweep().map(|n| format!("{n} units")));
    note("orbit max", common::orbit_max_oracle().map(|n| format!("{n} grid points")));
    note("mutants", common::mutants_caught().and_then(|n| if n >= 50 { Ok(format!("{n} caught")) } else { Err(format!("only {n}")) }));
    outcome(ok, parts.join("; "))
}

fn c10() -> Outcome {
    let run = |jobs| {
        let r = run_pipeline(&Config { jobs, ..Config::default() }).unwrap();
        (r.render_text(), r.render_markdown())
    };
    let a = run(1);
    let b = run(4);
    outcome(a == b, format!("--jobs 1 vs 4: text {} bytes, markdown {} bytes, identical: {}", a.0.len(), a.1.len(), a == b))
}

fn main() {
    let fx = FixtureSet::new(fixtures::default_dir());
    let t0 = Instant::now();
    let census = build_figure3().unwrap();
    let census_secs = t0.elapsed().as_secs_f64();
    let ring = builtin_r();
    let consts = derive_orbit_constants(&census.rows, &ring);
    let vectors = enumerate_orbit_vectors(&census.orbit_types, &consts).unwrap();
    let c = derive_constraint_matrices(&census.rows, &ring, &vectors).unwrap();

    let (o7, known7, table) = c7(&census, &c, &vectors, &fx);
    let results: Vec<(u32, Outcome, bool)> = vec![
        (1, c1(), false),
        (2, c2(), false),
        (3, c3(&census, census_secs, &fx), false),
        (4, c4(), false),
        (5, c5(&c, &fx), false),
        (6, c6(&vectors, &fx), false),
        (7, o7, known7),
        (8, c8(table.as_deref()), false),
        (9, c9(), false),
        (10, c10(), false),
    ];

    let mut unexpected = 0;
    for (n, o, known) in &results {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        let mut line = format!("criterion {n:>2}: {tag}  {}", o.detail);
        if !o.pass {
            match KNOWN_FAILURES.iter().find(|(k, _)| k == n) {
                Some((_, why)) if *known => line.push_str(&format!("  [documented: {why}]")),
                _ => unexpected += 1,
            }
        }
        println!("{line}");
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed unexpectedly");
        std::process::exit(1);
    }
}
