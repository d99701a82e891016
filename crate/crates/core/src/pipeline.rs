//! Stage orchestration: run the selected stages in order, compare fixtures
//! and assemble a [`CertificateReport`].

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use crate::census::{build_figure3, figure3_tsv, CensusReport, FIGURE3_HEADER};
use crate::center::{
    derive_constraint_matrices, derive_orbit_constants, dimension_audit, eliminate_candidate, emit_center_table,
    enumerate_orbit_vectors, induction_image, orbit_sizes, run_search, same_by_orbit, verify_subcategory,
    assignment_audit, Column, LemmaSlots, OrbitVector,
};
use crate::cyclotomic::units::kernel_identities;
use crate::error::{CertError, Result};
use crate::fixtures::{self, diff_data, sha256_hex, FixtureDiff, FixtureSet};
use crate::fusion::{builtin_r, fpdim_data_r, FusionRing};
use crate::obstruction::run_obstruction;
use crate::report::{CertificateReport, FixtureRecord, Section, Status, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    Cyclotomic,
    Ring,
    Obstruction,
    Census,
    Center,
    Subcat,
}

impl Stage {
    pub const ALL: [Stage; 6] =
        [Stage::Cyclotomic, Stage::Ring, Stage::Obstruction, Stage::Census, Stage::Center, Stage::Subcat];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Cyclotomic => "cyclotomic",
            Stage::Ring => "ring",
            Stage::Obstruction => "obstruction",
            Stage::Census => "census",
            Stage::Center => "center",
            Stage::Subcat => "subcat",
        }
    }

    /// Stages that accept a user-supplied ring.
    pub fn ring_generic(self) -> bool {
        matches!(self, Stage::Cyclotomic | Stage::Ring | Stage::Obstruction)
    }
}

/// `all` or a single stage.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Only(Stage),
}

impl Selection {
    pub fn includes(self, s: Stage) -> bool {
        match self {
            Selection::All => true,
            Selection::Only(t) => s == t,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Selection::All => "all",
            Selection::Only(s) => s.name(),
        }
    }
}

impl FromStr for Selection {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "all" {
            return Ok(Selection::All);
        }
        Stage::ALL
            .iter()
            .find(|t| t.name() == s)
            .map(|t| Selection::Only(*t))
            .ok_or_else(|| format!("unknown stage {s:?}"))
    }
}

/// Orbit vectors searched in smoke mode by default: the two that carry
/// solutions.
pub const DEFAULT_SMOKE_VECTORS: [OrbitVector; 2] = [[1, 0, 0, 2, 3, 6, 0, 2, 0], [1, 6, 2, 0, 3, 6, 0, 0, 0]];

#[derive(Clone, Debug)]
pub struct Config {
    pub stage: Selection,
    pub jobs: usize,
    pub smoke: bool,
    pub smoke_vectors: Vec<OrbitVector>,
    pub fixtures: PathBuf,
    pub audit: bool,
    /// Ring override and the path it was read from.
    pub ring: Option<(FusionRing, String)>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            stage: Selection::All,
            jobs: 1,
            smoke: false,
            smoke_vectors: DEFAULT_SMOKE_VECTORS.to_vec(),
            fixtures: fixtures::default_dir(),
            audit: false,
            ring: None,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), String> {
        if self.jobs == 0 {
            return Err("--jobs must be at least 1".into());
        }
        if self.ring.is_some() {
            let bad = match self.stage {
                Selection::All => true,
                Selection::Only(s) => !s.ring_generic(),
            };
            if bad {
                return Err(format!("--ring is only accepted by the cyclotomic, ring and obstruction stages, not {}", self.stage.name()));
            }
        }
        Ok(())
    }

    /// Configuration echoed into the certificate. The worker count is left
    /// out so that certificates do not depend on it.
    fn echo(&self) -> Vec<(String, String)> {
        let mut v = vec![
            ("stage".to_string(), self.stage.name().to_string()),
            ("smoke".to_string(), self.smoke.to_string()),
            ("audit".to_string(), self.audit.to_string()),
        ];
        if self.smoke {
            let s: Vec<String> = self.smoke_vectors.iter().map(|o| fmt_vec(o)).collect();
            v.push(("smoke_vectors".to_string(), s.join(" ")));
        }
        if let Some((_, p)) = &self.ring {
            v.push(("ring".to_string(), p.clone()));
        }
        v
    }
}

fn fmt_vec<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Process exit code for a finished report.
pub fn exit_code(report: &CertificateReport) -> i32 {
    if report.verdict() {
        0
    } else if report.fixtures.iter().any(|f| f.status == "missing") {
        3
    } else {
        1
    }
}

/// Exit code for a hard error.
pub fn error_exit_code(e: &CertError) -> i32 {
    match e {
        CertError::FixtureMissing { .. } => 3,
        CertError::Parse { .. } | CertError::InvalidRing(_) | CertError::RingNotSupported { .. } => 2,
        _ => 1,
    }
}

struct Run<'a> {
    cfg: &'a Config,
    set: FixtureSet,
    fixtures: Vec<FixtureRecord>,
    diffs: Vec<FixtureDiff>,
}

impl Run<'_> {
    /// Read a fixture for a selected stage; `None` if it is missing.
    fn load(&mut self, name: &str) -> Result<Option<String>> {
        match self.set.read(name) {
            Ok(t) => {
                self.record(name, sha256_hex(t.as_bytes()), "match");
                Ok(Some(t))
            }
            Err(CertError::FixtureMissing { .. }) => {
                self.record(name, "-".into(), "missing");
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }

    fn record(&mut self, name: &str, sha256: String, status: &str) {
        if let Some(r) = self.fixtures.iter_mut().find(|r| r.name == name) {
            r.sha256 = sha256;
            r.status = status.into();
        }
    }

    fn mismatch(&mut self, name: &str) {
        if let Some(r) = self.fixtures.iter_mut().find(|r| r.name == name) {
            r.status = "mismatch".into();
        }
    }
}

struct CenterOutcome {
    table: Option<Vec<Column>>,
}

/// Run the configured stages on a rayon pool of `cfg.jobs` workers.
pub fn run_pipeline(cfg: &Config) -> Result<CertificateReport> {
    cfg.validate().map_err(|m| CertError::Parse { what: "config".into(), line: 0, msg: m })?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CertError::Parse { what: "config".into(), line: 0, msg: e.to_string() })?;
    pool.install(|| run_stages(cfg))
}

fn run_stages(cfg: &Config) -> Result<CertificateReport> {
    let mut run = Run {
        cfg,
        set: FixtureSet::new(&cfg.fixtures),
        fixtures: fixtures::ALL
            .iter()
            .map(|n| FixtureRecord { name: n.to_string(), sha256: "-".into(), status: "unused".into() })
            .collect(),
        diffs: Vec::new(),
    };
    let mut sections = Vec::new();
    let mut timings = Vec::new();
    let sel = cfg.stage;
    let ring = cfg.ring.as_ref().map(|(r, _)| r.clone()).unwrap_or_else(builtin_r);

    let mut timed = |name: &'static str, f: &mut dyn FnMut() -> Result<Section>| -> Result<Section> {
        let t0 = Instant::now();
        let s = f()?;
        timings.push((name, t0.elapsed()));
        Ok(s)
    };

    sections.push(if sel.includes(Stage::Cyclotomic) {
        timed("cyclotomic", &mut || Ok(cyclotomic_section()))?
    } else {
        Section::skipped("cyclotomic")
    });
    sections.push(if sel.includes(Stage::Ring) {
        timed("ring", &mut || ring_section(&mut run, &ring))?
    } else {
        Section::skipped("ring")
    });
    sections.push(if sel.includes(Stage::Obstruction) {
        timed("obstruction", &mut || obstruction_section(&ring, cfg.audit))?
    } else {
        Section::skipped("obstruction")
    });

    let needs_census = sel.includes(Stage::Census) || sel.includes(Stage::Center) || sel.includes(Stage::Subcat);
    let census = if needs_census {
        let t0 = Instant::now();
        let c = build_figure3()?;
        timings.push(("census", t0.elapsed()));
        Some(c)
    } else {
        None
    };
    sections.push(match (&census, sel.includes(Stage::Census)) {
        (Some(c), true) => census_section(&mut run, c)?,
        _ => Section::skipped("census"),
    });

    let needs_center = sel.includes(Stage::Center) || sel.includes(Stage::Subcat);
    let mut center_table = None;
    if needs_center {
        let census = census.as_ref().expect("census runs before center");
        let t0 = Instant::now();
        let (section, outcome) = center_section(&mut run, census, sel.includes(Stage::Center))?;
        timings.push(("center", t0.elapsed()));
        center_table = outcome.table;
        sections.push(if sel.includes(Stage::Center) { section } else { Section::skipped("center") });
    } else {
        sections.push(Section::skipped("center"));
    }

    sections.push(if sel.includes(Stage::Subcat) {
        subcat_section(center_table.as_deref())?
    } else {
        Section::skipped("subcat")
    });

    Ok(CertificateReport {
        tool: format!("certify {}", env!("CARGO_PKG_VERSION")),
        config: cfg.echo(),
        sections,
        fixtures: run.fixtures,
        diffs: run.diffs,
        timings,
    })
}

fn cyclotomic_section() -> Section {
    let mut s = Section::new("cyclotomic");
    for (k, ok) in kernel_identities() {
        s.check(k, ok);
    }
    s
}

fn ring_section(run: &mut Run, ring: &FusionRing) -> Result<Section> {
    let mut s = Section::new("ring");
    let is_builtin = *ring == builtin_r();
    s.entry("rank", ring.rank());
    s.entry("builtin", is_builtin);
    let v = ring.validate();
    s.entry("violations", v.violations.len());
    for (i, x) in v.violations.iter().take(10).enumerate() {
        s.entry(&format!("violation.{i}"), x);
    }
    s.check("axioms", v.is_valid());
    s.entry("commutative", ring.is_commutative());
    if !is_builtin {
        s.notes.push("fixture and dimension checks apply to the built-in ring only".into());
        return Ok(s);
    }
    let (d, total) = fpdim_data_r()?;
    s.entry("fpdims", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
    s.entry("global_dimension", &total);
    s.check("dimension_homomorphism", crate::fusion::check_dim_hom(ring, &d));
    let codegrees = crate::fusion::formal_codegrees_r()?;
    s.entry("formal_codegrees", codegrees.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
    let z = crate::fusion::center_unit_dims_r()?;
    let z3 = crate::census::DimMonomial::recognize(&z[3])?;
    s.entry("dim_z3", z3.map(|m| m.to_string()).unwrap_or_else(|| z[3].to_string()));
    s.check("dim_z3_is_u1^2u2^2", z[3] == crate::cyclotomic::units::monomial(0, 2, 2, 0));
    s.notes.push("dim(Z3) is taken from the codegree relation, u1^2*u2^2; a printed u2^2*u2^2 would contradict it".into());
    let chars = crate::fusion::characters_r()?;
    let mut ctx = crate::certified::SignContext::new();
    let mut positive = 0;
    for chi in &chars {
        let mut pos = true;
        for x in chi {
            pos &= ctx.sign(x, crate::certified::Embedding::Identity)? == crate::certified::Sign::Positive;
        }
        positive += pos as usize;
    }
    s.entry("characters", chars.len());
    s.entry("positive_characters", positive);
    s.check("unique_positive_character", positive == 1 && chars.contains(&d));
    if let Some(text) = run.load(fixtures::RING)? {
        let same = FusionRing::parse_fring(&text).map(|r| r == *ring).unwrap_or(false);
        if !same {
            run.mismatch(fixtures::RING);
            run.diffs.push(FixtureDiff {
                fixture: fixtures::RING.into(),
                index: 0,
                expected: "fixture ring".into(),
                computed: "built-in ring differs".into(),
            });
        }
        s.check("fixture_ring", same);
    } else {
        s.check("fixture_ring", false);
    }
    Ok(s)
}

fn obstruction_section(ring: &FusionRing, audit: bool) -> Result<Section> {
    let mut s = Section::new("obstruction");
    if *ring != builtin_r() {
        s.status = Status::Skipped;
        s.entry("applicable", false);
        s.notes.push("the twist family is specific to the built-in ring".into());
        return Ok(s);
    }
    let (d, _) = fpdim_data_r()?;
    let rep = run_obstruction(ring, &d, audit)?;
    s.entry("tuples", rep.tuples);
    s.entry("gauss_passing", rep.gauss_passing);
    s.entry("survivors", rep.survivors.len());
    s.entry("verlinde_consistent", rep.verlinde_consistent());
    for (i, sv) in rep.survivors.iter().enumerate() {
        s.entry(&format!("survivor.{i}.theta_exponents"), fmt_vec(&sv.theta_exponents));
        s.entry(
            &format!("survivor.{i}.theta"),
            sv.theta.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
        );
        s.entry(&format!("survivor.{i}.s_symmetric"), sv.s_symmetric);
        s.entry(&format!("survivor.{i}.verlinde_mismatches"), sv.mismatches.len());
        s.entry(&format!("survivor.{i}.witness_111"), &sv.witness_111);
        if let Some(m) = sv.mismatches.first() {
            s.entry(&format!("survivor.{i}.first_mismatch"), format!("({},{},{})", m.i, m.j, m.k));
        }
    }
    let exps: BTreeSet<Vec<u8>> = rep.survivors.iter().map(|x| x.theta_exponents.clone()).collect();
    s.check("tuple_count", rep.tuples == 297);
    s.check("gauss_survivors", rep.survivors.len() == 2);
    s.check("twist_values", exps == BTreeSet::from([vec![0, 1, 1, 3, 6, 1], vec![0, 8, 8, 6, 3, 8]]));
    s.check(
        "witness_111",
        rep.survivors.iter().all(|x| x.witness_111.is_one() && x.mismatches.iter().any(|m| (m.i, m.j, m.k) == (1, 1, 1))),
    );
    s.check("no_modular_structure", rep.certified());
    if let Some(a) = &rep.audit {
        s.entry("audit.coherent_tuples", a.coherent);
        s.entry("audit.matches_family", a.matches_family);
        s.entry("audit.unrestricted_gauss_survivors", a.unrestricted_gauss_survivors);
    }
    Ok(s)
}

fn figure3_table(c: &CensusReport) -> Table {
    let header: Vec<&str> = FIGURE3_HEADER.split('\t').collect();
    let mut t = Table::new("figure3", &header);
    for r in &c.rows {
        t.push(r.to_tsv_row().split('\t').map(String::from).collect());
    }
    t
}

fn census_section(run: &mut Run, c: &CensusReport) -> Result<Section> {
    let mut s = Section::new("census");
    s.entry("grid_size", c.grid_size);
    s.entry("candidates", c.candidates.len());
    s.entry("candidate_list", c.candidates.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
    s.entry("small_dims", c.small.len());
    s.entry("orbit_types", c.orbit_types.len());
    s.entry("rows", c.rows.len());
    s.entry("distinct_dims", c.distinct_dims);
    s.check("row_count", c.rows.len() == 21);
    s.notes.push(format!("{} rows including the unit; {} distinct dimensions", c.rows.len(), c.distinct_dims));
    let computed: Vec<String> = figure3_tsv(&c.rows).lines().map(String::from).collect();
    match run.load(fixtures::FIGURE3)? {
        Some(text) => {
            let d = diff_data(fixtures::FIGURE3, &text, &computed);
            if !d.is_empty() {
                run.mismatch(fixtures::FIGURE3);
            }
            s.check("figure3_fixture", d.is_empty());
            run.diffs.extend(d);
        }
        None => s.check("figure3_fixture", false),
    }
    s.tables.push(figure3_table(c));
    Ok(s)
}

fn figure2_table(cols: &[Column]) -> Table {
    let mut sorted: Vec<(usize, [u32; 6])> = cols.iter().map(|c| (c.orbit, c.f)).collect();
    sorted.sort();
    let mut header = vec!["row".to_string()];
    header.extend((0..sorted.len()).map(|i| i.to_string()));
    let mut t = Table { name: "figure2".into(), header, rows: Vec::new() };
    let mut orbit = vec!["orbit".to_string()];
    orbit.extend(sorted.iter().map(|c| c.0.to_string()));
    t.push(orbit);
    for k in 0..6 {
        let mut r = vec![format!("X{k}")];
        r.extend(sorted.iter().map(|c| c.1[k].to_string()));
        t.push(r);
    }
    t
}

fn center_section(run: &mut Run, census: &CensusReport, selected: bool) -> Result<(Section, CenterOutcome)> {
    let mut s = Section::new("center");
    let ring = builtin_r();
    let rows = &census.rows;
    let sizes = orbit_sizes(&census.orbit_types);

    let want_images: [[u32; 6]; 6] = [
        [6, 3, 3, 6, 3, 3],
        [3, 15, 6, 12, 15, 6],
        [3, 6, 15, 12, 15, 6],
        [6, 12, 12, 24, 21, 12],
        [3, 15, 15, 21, 33, 15],
        [3, 6, 6, 12, 15, 15],
    ];
    let mut images_ok = true;
    for (j, w) in want_images.iter().enumerate() {
        let img = induction_image(&ring, j);
        s.entry(&format!("induction_image.{j}"), fmt_vec(&img));
        images_ok &= img == w.to_vec();
    }
    s.check("induction_images", images_ok);

    let consts = derive_orbit_constants(rows, &ring);
    s.entry("ir33", fmt_vec(&consts.ir33));
    s.entry("ir44", fmt_vec(&consts.ir44));
    let all_vectors = enumerate_orbit_vectors(&census.orbit_types, &consts)?;
    let c = derive_constraint_matrices(rows, &ring, &all_vectors)?;
    s.entry("slots", c.layout.len());
    s.entry("rhs", fmt_vec(&c.rhs));
    s.entry("orbit_vectors", all_vectors.len());
    s.check("o6_zero", all_vectors.iter().all(|o| o[6] == 0));

    if selected {
        match run.load(fixtures::CONSTANTS)? {
            Some(text) => {
                let f = fixtures::parse_constants(&text)?;
                let ok = f.ir33 == consts.ir33.to_vec()
                    && f.ir44 == consts.ir44.to_vec()
                    && f.k == c.k
                    && f.rhs == c.rhs.to_vec();
                if !ok {
                    run.mismatch(fixtures::CONSTANTS);
                }
                s.check("constants_fixture", ok);
            }
            None => s.check("constants_fixture", false),
        }
        match run.load(fixtures::ORBIT45)? {
            Some(text) => {
                let f: BTreeSet<OrbitVector> = fixtures::parse_orbit_vectors(&text)?.into_iter().collect();
                let got: BTreeSet<OrbitVector> = all_vectors.iter().copied().collect();
                let ok = f == got && all_vectors.len() == 45;
                if !ok {
                    run.mismatch(fixtures::ORBIT45);
                }
                s.check("orbit_vectors_fixture", ok);
            }
            None => s.check("orbit_vectors_fixture", false),
        }
    }

    let vectors: Vec<OrbitVector> = if run.cfg.smoke {
        s.entry("mode", "smoke");
        all_vectors.iter().copied().filter(|o| run.cfg.smoke_vectors.contains(o)).collect()
    } else {
        s.entry("mode", "full");
        all_vectors.clone()
    };
    s.entry("searched_vectors", vectors.len());
    let search = run_search(&c, &vectors, &sizes)?;
    let ranks: Vec<u32> = search.solutions.iter().map(|x| x.rank).collect();
    let script_ranks: Vec<u32> = search.solutions_script.iter().map(|x| x.rank).collect();
    s.entry("triples", search.total_triples());
    s.entry("note_warnings", search.total_warnings());
    s.entry("solutions", search.solutions.len());
    s.entry("solution_ranks", fmt_vec(&ranks));
    for (i, sol) in search.solutions.iter().enumerate() {
        s.entry(&format!("solution.{i}.orbit_vector"), fmt_vec(&sol.o));
        s.entry(&format!("solution.{i}.rank"), sol.rank);
    }
    s.entry("script_reading_ranks", fmt_vec(&script_ranks));
    if !run.cfg.smoke {
        s.check("triple_count", search.total_triples() == 413);
    }
    s.check("note_assumption", search.total_warnings() == 0);
    s.check("solution_ranks", ranks == vec![24, 36]);
    s.check("script_reading_agrees", script_ranks == ranks);

    let (d, _) = fpdim_data_r()?;
    let mut eliminated = Vec::new();
    let mut table = None;
    for sol in &search.solutions {
        let e = eliminate_candidate(&c, rows, &ring, sol)?;
        let key = format!("rank{}", sol.rank);
        s.entry(&format!("{key}.elimination.applicable"), e.applicable);
        if e.applicable {
            let covers: Vec<usize> = e.cases.iter().map(|x| x.derived.covers).collect();
            let profiles: BTreeSet<usize> = e.cases.iter().map(|x| x.distinct_profiles).collect();
            s.entry(&format!("{key}.elimination.cases"), e.cases.len());
            s.entry(&format!("{key}.elimination.distinct_profiles"), fmt_vec(&profiles.into_iter().collect::<Vec<_>>()));
            let targets: BTreeSet<[u32; 6]> = e.cases.iter().map(|x| x.target).collect();
            s.entry(
                &format!("{key}.elimination.targets"),
                targets.iter().map(|t| fmt_vec(t)).collect::<Vec<_>>().join(" "),
            );
            s.entry(&format!("{key}.elimination.covers"), fmt_vec(&covers));
            if let Some(w) = e.cases.iter().find_map(|x| x.derived.witnesses.first()) {
                let w: Vec<String> = w.iter().map(|(p, n)| format!("{n}x[{}]", fmt_vec(p))).collect();
                s.entry(&format!("{key}.elimination.witness"), w.join(" "));
            }
            s.entry(&format!("{key}.elimination.printed_target_infeasible"), e.printed_target_infeasible());
            s.entry(&format!("{key}.elimination.printed_target_consistent"), e.printed_matches_derived());
            s.entry(&format!("{key}.elimination.certified"), e.certified());
            if e.certified() {
                eliminated.push(sol.rank);
            }
        }
        if sol.rank == 36 {
            let cols = emit_center_table(&c, rows, sol)?;
            let audit = dimension_audit(rows, &d, &cols)?;
            s.entry("rank36.columns", cols.len());
            s.check("rank36.dimension_audit", audit);
            if selected {
                match run.load(fixtures::FIGURE2)? {
                    Some(text) => {
                        let f = fixtures::parse_figure2(&text)?;
                        let ok = same_by_orbit(&cols, &f);
                        if !ok {
                            run.mismatch(fixtures::FIGURE2);
                        }
                        s.check("figure2_fixture", ok);
                    }
                    None => s.check("figure2_fixture", false),
                }
                s.tables.push(figure2_table(&cols));
            }
            table = Some(cols);
        }
    }
    let surviving: Vec<u32> = ranks.iter().copied().filter(|r| !eliminated.contains(r)).collect();
    s.entry("eliminated_ranks", fmt_vec(&eliminated));
    s.entry("surviving_ranks", fmt_vec(&surviving));
    let final_rank = match surviving.as_slice() {
        [r] => r.to_string(),
        _ => "unresolved".to_string(),
    };
    s.entry("final_rank", &final_rank);
    s.check("rank24_eliminated", eliminated.contains(&24));
    if final_rank != "36" {
        s.notes.push(
            "the rank-24 candidate admits covers of its derived target, so it is not eliminated by the cover argument"
                .into(),
        );
    }

    if run.cfg.audit && selected {
        let a = assignment_audit(&c, &LemmaSlots::resolve(&c)?, &vectors);
        s.entry("audit.both_models", a.both);
        s.entry("audit.fractional_only", a.fractional_only);
        s.entry("audit.explicit_only", a.explicit_only);
        s.entry("audit.explicit_only_surviving", a.explicit_only_surviving.len());
        let mut by_rank: BTreeSet<u32> = BTreeSet::new();
        for (o, _) in &a.explicit_only_surviving {
            by_rank.insert(crate::center::rank_of(o, &sizes));
        }
        s.entry("audit.explicit_only_ranks", fmt_vec(&by_rank.into_iter().collect::<Vec<_>>()));
    }
    Ok((s, CenterOutcome { table }))
}

fn subcat_section(table: Option<&[Column]>) -> Result<Section> {
    let mut s = Section::new("subcat");
    let Some(table) = table else {
        s.fail("no rank-36 table available");
        return Ok(s);
    };
    let rep = verify_subcategory(&builtin_r(), table)?;
    s.check("rules_are_fusion_ring", rep.ring_valid);
    s.check("matches_ring", rep.matches_ring);
    if let Some(m) = &rep.mismatch {
        s.entry("mismatch", m);
    }
    let good: Vec<String> = rep
        .assignments
        .iter()
        .filter(|(_, ok)| *ok)
        .map(|(a, _)| format!("[{}]", fmt_vec(&a[1..4])))
        .collect();
    s.entry("valid_a_assignments", good.join(" "));
    s.check("images_present", rep.images_present);
    s.check("dimension_consistent", rep.dimension_consistent);
    for h in &rep.hom_counts {
        s.entry(&format!("hom {}", h.name), format!("{} (expected {})", h.value, h.expected));
    }
    s.check("hom_counts", rep.hom_counts.iter().all(|h| h.value == h.expected));
    Ok(s)
}
