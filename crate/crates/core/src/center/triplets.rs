use std::collections::HashMap;

use num_rational::Ratio;
use rayon::prelude::*;

use super::{Constraints, OrbitVector};
use crate::error::{CertError, Result};

/// Multiplicities `n_{L,m}` for one `j ∈ {1,2,5}`, in layout order.
pub type MultVec = Vec<u8>;

/// Component vectors for `j = 1, 2, 5` up to order, stored `z ≤ y ≤ x`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub x: MultVec,
    pub y: MultVec,
    pub z: MultVec,
}

impl Triple {
    pub fn components(&self) -> [&MultVec; 3] {
        [&self.x, &self.y, &self.z]
    }
}

/// Component vectors satisfying `K·n = rhs`, the unit-orbit budget and the
/// per-orbit capacities.
pub fn single_candidates(c: &Constraints, o: &OrbitVector) -> Vec<MultVec> {
    let n = c.layout.len();
    let mut out = Vec::new();
    let mut cur = vec![0u8; n];
    let mut sums = [0u32; 5];
    rec(c, o, 0, &mut cur, &mut sums, &mut out);
    out.sort();
    out
}

fn rec(c: &Constraints, o: &OrbitVector, g: usize, cur: &mut MultVec, sums: &mut [u32; 5], out: &mut Vec<MultVec>) {
    let limits = [c.rhs[0], c.rhs[1], c.rhs[2], c.rhs[3], c.budget_rhs];
    if sums.iter().zip(&limits).any(|(s, l)| s > l) {
        return;
    }
    let Some(group) = c.layout.groups.get(g) else {
        if *sums == limits {
            out.push(cur.clone());
        }
        return;
    };
    let cap = o[group.orbit];
    // all tuples of length `len` with sum at most the orbit capacity
    fn fill(
        c: &Constraints,
        o: &OrbitVector,
        g: usize,
        i: usize,
        left: u32,
        cur: &mut MultVec,
        sums: &mut [u32; 5],
        out: &mut Vec<MultVec>,
    ) {
        let group = c.layout.groups[g];
        if i == group.len {
            rec(c, o, g + 1, cur, sums, out);
            return;
        }
        let s = group.start + i;
        for v in 0..=left {
            cur[s] = v as u8;
            let add = |r: &[u32]| r[s] * v;
            let delta = [add(&c.k[0]), add(&c.k[1]), add(&c.k[2]), add(&c.k[3]), add(&c.budget)];
            for (a, d) in sums.iter_mut().zip(delta) {
                *a += d;
            }
            fill(c, o, g, i + 1, left - v, cur, sums, out);
            for (a, d) in sums.iter_mut().zip(delta) {
                *a -= d;
            }
        }
        cur[s] = 0;
    }
    fill(c, o, g, 0, cap, cur, sums, out);
}

/// The per-label count conditions: for a label with `t` slots,
/// `Σₘ s(m)/(t − m + 1) = o(orbit)` where `s` sums the three components.
pub fn consistent(c: &Constraints, o: &OrbitVector, t: &Triple) -> bool {
    c.layout.groups.iter().all(|g| {
        let mut acc = Ratio::<i64>::from_integer(0);
        for m in 1..=g.len {
            let s = g.start + m - 1;
            let total = t.x[s] as i64 + t.y[s] as i64 + t.z[s] as i64;
            acc += Ratio::new(total, (g.len - m + 1) as i64);
        }
        acc == Ratio::from_integer(o[g.orbit] as i64)
    })
}

fn lcm_of_lengths(c: &Constraints) -> i64 {
    let mut l = 1i64;
    for g in &c.layout.groups {
        for d in 1..=g.len as i64 {
            l = num_integer::lcm(l, d);
        }
    }
    l
}

/// Consistency sums scaled to integers, so that matching `z` for a given
/// `(x, y)` can be looked up directly.
fn scaled_key(c: &Constraints, scale: i64, v: &MultVec) -> Vec<i64> {
    c.layout
        .groups
        .iter()
        .map(|g| {
            (1..=g.len)
                .map(|m| v[g.start + m - 1] as i64 * scale / (g.len - m + 1) as i64)
                .sum()
        })
        .collect()
}

/// All consistent triples `z ≤ y ≤ x` of single candidates, sorted.
pub fn enumerate_triplets(c: &Constraints, o: &OrbitVector) -> (usize, Vec<Triple>) {
    let singles = single_candidates(c, o);
    let scale = lcm_of_lengths(c);
    let keys: Vec<Vec<i64>> = singles.iter().map(|v| scaled_key(c, scale, v)).collect();
    let target: Vec<i64> = c.layout.groups.iter().map(|g| o[g.orbit] as i64 * scale).collect();
    let mut index: HashMap<&[i64], Vec<usize>> = HashMap::new();
    for (i, k) in keys.iter().enumerate() {
        index.entry(k.as_slice()).or_default().push(i);
    }
    let mut out: Vec<Triple> = (0..singles.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut found = Vec::new();
            for j in 0..=i {
                let need: Vec<i64> = target
                    .iter()
                    .zip(&keys[i])
                    .zip(&keys[j])
                    .map(|((t, a), b)| t - a - b)
                    .collect();
                if let Some(ks) = index.get(need.as_slice()) {
                    for &k in ks.iter().take_while(|&&k| k <= j) {
                        let t = Triple { x: singles[i].clone(), y: singles[j].clone(), z: singles[k].clone() };
                        debug_assert!(consistent(c, o, &t));
                        found.push(t);
                    }
                }
            }
            found
        })
        .collect();
    out.sort();
    (singles.len(), out)
}

/// Resolved positions of the slots used by the technical lemmas.
#[derive(Clone, Copy, Debug)]
pub struct LemmaSlots {
    pub n11: usize,
    pub n21: usize,
    pub n31: usize,
    pub n41: usize,
    pub n51: usize,
    pub n91: usize,
    pub n101: usize,
    pub n112: usize,
    pub n131: usize,
}

impl LemmaSlots {
    pub fn resolve(c: &Constraints) -> Result<Self> {
        let at = |label, m| {
            c.layout
                .slot(label, m)
                .ok_or_else(|| CertError::mismatch("center", format!("no slot n_{{{label},{m}}}")))
        };
        Ok(LemmaSlots {
            n11: at(1, 1)?,
            n21: at(2, 1)?,
            n31: at(3, 1)?,
            n41: at(4, 1)?,
            n51: at(5, 1)?,
            n91: at(9, 1)?,
            n101: at(10, 1)?,
            n112: at(11, 2)?,
            n131: at(13, 1)?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NoteCheck {
    Verified,
    Warning,
}

/// Every component has `n_{1,1} = n_{2,1} = 1`, i.e. the assumed images of
/// the distinguished simples.
pub fn note_assumption_check(s: &LemmaSlots, t: &Triple) -> NoteCheck {
    if t.components().iter().all(|v| v[s.n11] == 1 && v[s.n21] == 1) {
        NoteCheck::Verified
    } else {
        NoteCheck::Warning
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Lemma {
    /// `n_{3,1} < 3`, with the required companions when it is 1 or 2.
    ThreeOneCases,
    /// `n_{3,1} > 0` forces `n_{13,1}, n_{5,1} > 0` or `n_{4,1}, n_{10,1} > 0`.
    ThreeOneSupport,
    /// `n_{3,1} ≥ 2` forces `n_{9,1} + o₂ ≥ 2`.
    ThreeOnePair,
    /// Two components with `n_{3,1} > 0` force `n_{9,1} > 0` in a third
    /// with `n_{3,1} = 0`.
    CrossComponent,
}

impl Lemma {
    pub const ALL: [Lemma; 4] = [Lemma::ThreeOneCases, Lemma::ThreeOneSupport, Lemma::ThreeOnePair, Lemma::CrossComponent];

    pub fn key(self) -> &'static str {
        match self {
            Lemma::ThreeOneCases => "n31_cases",
            Lemma::ThreeOneSupport => "n31_support",
            Lemma::ThreeOnePair => "n31_pair",
            Lemma::CrossComponent => "cross_component",
        }
    }
}

/// How the filters are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FilterReading {
    /// The lemma statements.
    Stated,
    /// The reference script's filter block, with its undefined orbit
    /// variable read as `o₂`; the cross-component test only checks the
    /// components in stored order.
    Script,
}

fn component_ok(lemma: Lemma, s: &LemmaSlots, o: &OrbitVector, v: &MultVec) -> bool {
    let n31 = v[s.n31];
    match lemma {
        Lemma::ThreeOneCases => match n31 {
            0 => true,
            1 => v[s.n91] > 0 && v[s.n131] > 0,
            2 => (v[s.n41] > 0 && v[s.n131] > 0) || v[s.n112] > 0,
            _ => false,
        },
        Lemma::ThreeOneSupport => n31 == 0 || (v[s.n131] > 0 && v[s.n51] > 0) || (v[s.n41] > 0 && v[s.n101] > 0),
        Lemma::ThreeOnePair => n31 < 2 || v[s.n91] as u32 + o[2] >= 2,
        Lemma::CrossComponent => true,
    }
}

fn cross_ok(s: &LemmaSlots, t: &Triple, reading: FilterReading) -> bool {
    let c = t.components();
    match reading {
        FilterReading::Stated => {
            const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            PERMS.iter().all(|&[i, j, k]| {
                !(c[i][s.n31] > 0 && c[j][s.n31] > 0 && c[k][s.n31] == 0 && c[k][s.n91] == 0)
            })
        }
        FilterReading::Script => {
            let (x0, x1, x2) = (c[0][s.n31], c[1][s.n31], c[2][s.n31]);
            x0 * x1 != 1 || x2 != 0 || c[2][s.n91] > 0
        }
    }
}

/// The first lemma rejecting the triple, if any.
pub fn first_rejection(s: &LemmaSlots, o: &OrbitVector, t: &Triple, reading: FilterReading) -> Option<Lemma> {
    for lemma in Lemma::ALL {
        let ok = match lemma {
            Lemma::CrossComponent => cross_ok(s, t, reading),
            _ => t.components().iter().all(|v| component_ok(lemma, s, o, v)),
        };
        if !ok {
            return Some(lemma);
        }
    }
    None
}

pub fn lemma_filters(s: &LemmaSlots, o: &OrbitVector, t: &Triple) -> bool {
    first_rejection(s, o, t, FilterReading::Stated).is_none()
}

/// Outcome of the search for one orbit vector.
#[derive(Clone, Debug)]
pub struct OrbitSearch {
    pub o: OrbitVector,
    pub singles: usize,
    pub triples: Vec<Triple>,
    pub warnings: usize,
    pub rejected_by: [usize; 4],
    pub survivors: Vec<Triple>,
    /// Survivors under [`FilterReading::Script`].
    pub survivors_script: Vec<Triple>,
}

pub fn search_orbit(c: &Constraints, s: &LemmaSlots, o: &OrbitVector) -> OrbitSearch {
    let (singles, triples) = enumerate_triplets(c, o);
    let mut warnings = 0;
    let mut rejected_by = [0; 4];
    let mut survivors = Vec::new();
    let mut survivors_script = Vec::new();
    for t in &triples {
        if note_assumption_check(s, t) == NoteCheck::Warning {
            warnings += 1;
            continue;
        }
        match first_rejection(s, o, t, FilterReading::Stated) {
            Some(l) => rejected_by[l as usize] += 1,
            None => survivors.push(t.clone()),
        }
        if first_rejection(s, o, t, FilterReading::Script).is_none() {
            survivors_script.push(t.clone());
        }
    }
    OrbitSearch { o: *o, singles, triples, warnings, rejected_by, survivors, survivors_script }
}

/// A surviving orbit vector with its component triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterSolution {
    pub o: OrbitVector,
    pub triple: Triple,
    pub rank: u32,
}

#[derive(Clone, Debug)]
pub struct CenterSearch {
    pub per_orbit: Vec<OrbitSearch>,
    pub solutions: Vec<CenterSolution>,
    pub solutions_script: Vec<CenterSolution>,
}

impl CenterSearch {
    pub fn total_triples(&self) -> usize {
        self.per_orbit.iter().map(|p| p.triples.len()).sum()
    }

    pub fn total_warnings(&self) -> usize {
        self.per_orbit.iter().map(|p| p.warnings).sum()
    }
}

/// Search every orbit vector in parallel; results keep the input order.
pub fn run_search(c: &Constraints, vectors: &[OrbitVector], sizes: &[u32]) -> Result<CenterSearch> {
    let s = LemmaSlots::resolve(c)?;
    let per_orbit: Vec<OrbitSearch> = vectors.par_iter().map(|o| search_orbit(c, &s, o)).collect();
    let collect = |script: bool| {
        per_orbit
            .iter()
            .flat_map(|p| {
                let list = if script { &p.survivors_script } else { &p.survivors };
                list.iter().map(|t| CenterSolution { o: p.o, triple: t.clone(), rank: super::rank_of(&p.o, sizes) })
            })
            .collect::<Vec<_>>()
    };
    let solutions = collect(false);
    let solutions_script = collect(true);
    Ok(CenterSearch { per_orbit, solutions, solutions_script })
}
