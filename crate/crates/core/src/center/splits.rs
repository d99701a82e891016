//! Assigning the `X₁/X₂/X₅` split to individual simples, the resulting
//! table of forgetful images, and the cover search used against the
//! rank-24 candidate.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use rayon::prelude::*;

use super::{consistent, first_rejection, note_assumption_check, Constraints, FilterReading, LemmaSlots, NoteCheck};
use super::{single_candidates, CenterSolution, OrbitVector, Triple};
use crate::census::ForgetfulProfile;
use crate::cyclotomic::CycNum;
use crate::error::{CertError, Result};
use crate::fusion::FusionRing;

/// Simples `X₁, X₂, X₅` that the three components stand for.
pub const SPLIT_SIMPLES: [usize; 3] = [1, 2, 5];

/// `(a, b, c)` with `a + b + c = t`: multiplicities of the three split
/// simples in one forgetful image.
pub type Split = [u32; 3];

fn splits_of(t: u32) -> Vec<Split> {
    let mut out = Vec::new();
    for a in 0..=t {
        for b in 0..=t - a {
            out.push([a, b, t - a - b]);
        }
    }
    out
}

/// Multisets of `count` splits of `t` whose per-component value counts
/// reproduce the three sub-vectors `n_{L,1..t}`.
pub fn label_split_choices(t: u32, count: u32, parts: [&[u8]; 3]) -> Vec<Vec<Split>> {
    if count == 0 {
        return if parts.iter().all(|p| p.iter().all(|&v| v == 0)) { vec![vec![]] } else { vec![] };
    }
    splits_of(t)
        .into_iter()
        .combinations_with_replacement(count as usize)
        .filter(|ms| {
            (0..3).all(|ci| {
                (1..=t).all(|m| {
                    let have = ms.iter().filter(|s| s[ci] == m).count();
                    have == parts[ci].get(m as usize - 1).copied().unwrap_or(0) as usize
                })
            })
        })
        .collect()
}

/// One simple of the center: its table row and forgetful image.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Column {
    pub orbit: usize,
    pub label: usize,
    pub f: [u32; 6],
}

/// Per-label split choices for a solution (labels in table order).
pub fn joint_split_choices(
    c: &Constraints,
    rows: &[ForgetfulProfile],
    sol: &CenterSolution,
) -> Result<Vec<(usize, Vec<Vec<Split>>)>> {
    let comps = sol.triple.components();
    let mut out = Vec::new();
    for r in rows {
        let count = sol.o[r.orbit];
        if count == 0 {
            continue;
        }
        let choices = match c.layout.group(r.label) {
            Some(g) => {
                let parts = [0, 1, 2].map(|ci| &comps[ci][g.start..g.start + g.len]);
                label_split_choices(r.m125, count, parts)
            }
            None if r.m125 == 0 => vec![vec![[0, 0, 0]; count as usize]],
            None => {
                return Err(CertError::mismatch(
                    "center",
                    format!("label {} is present but has no multiplicity slots", r.label),
                ))
            }
        };
        out.push((r.label, choices));
    }
    Ok(out)
}

/// Columns for one choice per label, with components sent to
/// `X_{perm[0]}, X_{perm[1]}, X_{perm[2]}`.
pub fn columns_for(rows: &[ForgetfulProfile], picks: &[(usize, &Vec<Split>)], perm: [usize; 3]) -> Vec<Column> {
    let mut out = Vec::new();
    for (label, splits) in picks {
        let r = &rows[*label];
        for s in splits.iter() {
            let mut f = [0u32; 6];
            f[0] = r.m0;
            f[3] = r.m3;
            f[4] = r.m4;
            for ci in 0..3 {
                f[perm[ci]] += s[ci];
            }
            out.push(Column { orbit: r.orbit, label: *label, f });
        }
    }
    out.sort();
    out
}

/// Every column set a solution admits, over all split choices and all
/// assignments of components to `X₁, X₂, X₅`.
pub fn all_column_sets(c: &Constraints, rows: &[ForgetfulProfile], sol: &CenterSolution) -> Result<Vec<Vec<Column>>> {
    let choices = joint_split_choices(c, rows, sol)?;
    let mut out = Vec::new();
    for perm in SPLIT_SIMPLES.iter().copied().permutations(3) {
        let perm = [perm[0], perm[1], perm[2]];
        for pick in choices.iter().map(|(_, v)| v.iter()).multi_cartesian_product() {
            let picks: Vec<(usize, &Vec<Split>)> = choices.iter().map(|(l, _)| *l).zip(pick).collect();
            out.push(columns_for(rows, &picks, perm));
        }
    }
    if choices.is_empty() {
        out.push(Vec::new());
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// The table of forgetful images for a solution, which must be unique.
pub fn emit_center_table(c: &Constraints, rows: &[ForgetfulProfile], sol: &CenterSolution) -> Result<Vec<Column>> {
    let mut sets = all_column_sets(c, rows, sol)?;
    match sets.len() {
        1 => Ok(sets.pop().unwrap_or_default()),
        n => Err(CertError::mismatch("center", format!("{n} distinct tables for rank {}", sol.rank))),
    }
}

/// Compare two tables as multisets of columns within each orbit block.
pub fn same_by_orbit(a: &[Column], b: &[(usize, [u32; 6])]) -> bool {
    let key = |o: usize, f: [u32; 6]| (o, f);
    let mut x: Vec<_> = a.iter().map(|c| key(c.orbit, c.f)).collect();
    let mut y: Vec<_> = b.to_vec();
    x.sort();
    y.sort();
    x == y
}

/// Dimension checks on a table: each image has the dimension of its label
/// and the squared dimensions add up to `dim(𝒞)²`.
pub fn dimension_audit(rows: &[ForgetfulProfile], d: &[CycNum], cols: &[Column]) -> Result<bool> {
    let mut total = CycNum::zero();
    for col in cols {
        let dim = rows[col.label].dim.value();
        let image: CycNum = col.f.iter().zip(d).map(|(m, x)| x.scale_int(*m as i64)).sum();
        if image != dim {
            return Ok(false);
        }
        total = &total + &dim.pow(2)?;
    }
    let dim_c: CycNum = d.iter().map(|x| x * x).sum();
    Ok(total == dim_c.pow(2)?)
}

/// Counts from the alternative model that assigns splits simple by simple
/// instead of using the fractional count conditions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AssignmentAudit {
    pub both: usize,
    pub fractional_only: usize,
    pub explicit_only: usize,
    /// Triples only the explicit model admits that also pass the note
    /// check and every lemma.
    pub explicit_only_surviving: Vec<(OrbitVector, Triple)>,
}

/// Run both models over every `z ≤ y ≤ x` of single candidates.
pub fn assignment_audit(c: &Constraints, s: &LemmaSlots, vectors: &[OrbitVector]) -> AssignmentAudit {
    let parts: Vec<AssignmentAudit> = vectors
        .par_iter()
        .map(|o| {
            let singles = single_candidates(c, o);
            let mut memo: HashMap<(usize, Vec<u8>), bool> = HashMap::new();
            let mut a = AssignmentAudit::default();
            for i in 0..singles.len() {
                for j in 0..=i {
                    for k in 0..=j {
                        let t = Triple { x: singles[i].clone(), y: singles[j].clone(), z: singles[k].clone() };
                        let frac = consistent(c, o, &t);
                        let explicit = c.layout.groups.iter().enumerate().all(|(gi, g)| {
                            let key: Vec<u8> = [&t.x, &t.y, &t.z]
                                .iter()
                                .flat_map(|v| v[g.start..g.start + g.len].iter().copied())
                                .collect();
                            *memo.entry((gi, key)).or_insert_with(|| {
                                let p = [0, 1, 2].map(|ci| &t.components()[ci][g.start..g.start + g.len]);
                                !label_split_choices(g.len as u32, o[g.orbit], p).is_empty()
                            })
                        });
                        match (frac, explicit) {
                            (true, true) => a.both += 1,
                            (true, false) => a.fractional_only += 1,
                            (false, true) => {
                                a.explicit_only += 1;
                                if note_assumption_check(s, &t) == NoteCheck::Verified
                                    && first_rejection(s, o, &t, FilterReading::Stated).is_none()
                                {
                                    a.explicit_only_surviving.push((*o, t));
                                }
                            }
                            (false, false) => {}
                        }
                    }
                }
            }
            a
        })
        .collect();
    let mut out = AssignmentAudit::default();
    for p in parts {
        out.both += p.both;
        out.fractional_only += p.fractional_only;
        out.explicit_only += p.explicit_only;
        out.explicit_only_surviving.extend(p.explicit_only_surviving);
    }
    out
}

/// Result of an exact multiset-cover search.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoverResult {
    pub covers: usize,
    pub witnesses: Vec<Vec<([u32; 6], u32)>>,
    pub nodes: u64,
}

impl CoverResult {
    pub fn feasible(&self) -> bool {
        self.covers > 0
    }
}

const MAX_WITNESSES: usize = 4;

/// All ways to write `target` as a sum of `items`, each profile used at most
/// its listed number of times.
pub fn cover_search(target: [u32; 6], items: &[([u32; 6], u32)]) -> CoverResult {
    let mut items: Vec<([u32; 6], u32)> = items.iter().filter(|(p, _)| p.iter().any(|&v| v > 0)).cloned().collect();
    items.sort_by(|a, b| b.cmp(a));
    let mut res = CoverResult::default();
    let mut acc = Vec::new();
    fn rec(i: usize, rem: [u32; 6], items: &[([u32; 6], u32)], acc: &mut Vec<([u32; 6], u32)>, res: &mut CoverResult) {
        res.nodes += 1;
        if rem.iter().all(|&r| r == 0) {
            res.covers += 1;
            if res.witnesses.len() < MAX_WITNESSES {
                res.witnesses.push(acc.clone());
            }
            return;
        }
        let Some(&(p, max)) = items.get(i) else { return };
        let mut r = rem;
        let mut k = 0;
        loop {
            if k > 0 {
                acc.push((p, k));
            }
            rec(i + 1, r, items, acc, res);
            if k > 0 {
                acc.pop();
            }
            if k == max || p.iter().zip(&r).any(|(a, b)| a > b) {
                break;
            }
            for (x, a) in r.iter_mut().zip(&p) {
                *x -= a;
            }
            k += 1;
        }
    }
    rec(0, target, &items, &mut acc, &mut res);
    res
}

fn unit(k: usize) -> [u32; 6] {
    let mut v = [0; 6];
    v[k] = 1;
    v
}

fn tensor(ring: &FusionRing, a: &[u32; 6], b: &[u32; 6]) -> [u32; 6] {
    let v = ring.multiply(a, b);
    let mut out = [0; 6];
    out.copy_from_slice(&v);
    out
}

fn hom(a: &[u32; 6], b: &[u32; 6]) -> u32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn dual(ring: &FusionRing, a: &[u32; 6]) -> [u32; 6] {
    let mut out = [0; 6];
    for (i, v) in a.iter().enumerate() {
        out[ring.dual(i)] += v;
    }
    out
}

/// `2X₀ ⊕ 4X₁ ⊕ 2X₂ ⊕ 5X₃ ⊕ 2X₄ ⊕ X₅`, the decomposition of `F(X⊗Z₁)` as
/// printed in the source argument.
pub const PRINTED_TARGET: [u32; 6] = [2, 4, 2, 5, 2, 1];

/// One case of the elimination argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationCase {
    pub perm: [usize; 3],
    pub j: usize,
    pub target: [u32; 6],
    pub distinct_profiles: usize,
    pub derived: CoverResult,
    pub printed: CoverResult,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationReport {
    pub applicable: bool,
    pub cases: Vec<EliminationCase>,
}

impl EliminationReport {
    /// No case admits a cover of `F(X) ⊗ F(Zⱼ)`.
    pub fn certified(&self) -> bool {
        self.applicable && self.cases.iter().all(|c| !c.derived.feasible())
    }

    pub fn printed_target_infeasible(&self) -> bool {
        self.applicable && self.cases.iter().all(|c| !c.printed.feasible())
    }

    pub fn printed_matches_derived(&self) -> bool {
        self.cases.iter().all(|c| c.j != 1 || c.target == PRINTED_TARGET)
    }
}

/// Try to decompose `X ⊗ Zⱼ` for a simple `X` with `F(X) = Xⱼ ⊕ X₃` into
/// simples of the candidate, for every split assignment.
///
/// The target is `F(X) ⊗ F(Zⱼ)` computed from the fusion tensor. A simple
/// `Y` can occur at most `[F(X), F(Y) ⊗ F(Zⱼ)*]` times, and the unit never
/// occurs since `X ≇ Zⱼ*`.
pub fn eliminate_candidate(
    c: &Constraints,
    rows: &[ForgetfulProfile],
    ring: &FusionRing,
    sol: &CenterSolution,
) -> Result<EliminationReport> {
    let mut cases = Vec::new();
    let choices = joint_split_choices(c, rows, sol)?;
    for perm in SPLIT_SIMPLES.iter().copied().permutations(3) {
        let perm = [perm[0], perm[1], perm[2]];
        for pick in choices.iter().map(|(_, v)| v.iter()).multi_cartesian_product() {
            let picks: Vec<(usize, &Vec<Split>)> = choices.iter().map(|(l, _)| *l).zip(pick).collect();
            let cols = columns_for(rows, &picks, perm);
            let mut counts: BTreeMap<[u32; 6], u32> = BTreeMap::new();
            for col in &cols {
                *counts.entry(col.f).or_default() += 1;
            }
            for j in SPLIT_SIMPLES {
                let fx = {
                    let mut v = unit(j);
                    v[3] += 1;
                    v
                };
                let fz = {
                    let mut v = fx;
                    v[0] += 1;
                    v
                };
                if !counts.contains_key(&fx) || !counts.contains_key(&fz) {
                    continue;
                }
                let target = tensor(ring, &fx, &fz);
                let items: Vec<([u32; 6], u32)> = counts
                    .iter()
                    .filter(|(p, _)| **p != unit(0))
                    .map(|(p, n)| (*p, n * hom(&fx, &tensor(ring, p, &dual(ring, &fz)))))
                    .filter(|(_, m)| *m > 0)
                    .collect();
                let derived = cover_search(target, &items);
                let printed = cover_search(PRINTED_TARGET, &items);
                cases.push(EliminationCase { perm, j, target, distinct_profiles: counts.len(), derived, printed });
            }
        }
    }
    Ok(EliminationReport { applicable: !cases.is_empty(), cases })
}
