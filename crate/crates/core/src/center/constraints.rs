use num_traits::ToPrimitive;

use super::{induction_image, OrbitVector};
use crate::census::{ForgetfulProfile, OrbitType};
use crate::certified::SignContext;
use crate::cyclotomic::CycNum;
use crate::error::{CertError, Result};
use crate::fusion::{center_unit_dims_r, fpdim_data_r, FusionRing};

/// Simples per dimensional Galois orbit of each type (3 unless the orbit
/// is a singleton).
pub fn orbit_sizes(types: &[OrbitType]) -> Vec<u32> {
    types.iter().map(|t| t.members.len() as u32).collect()
}

pub fn rank_of(o: &OrbitVector, sizes: &[u32]) -> u32 {
    o.iter().zip(sizes).map(|(a, b)| a * b).sum()
}

/// Per-type coefficients of `[X₃, F(I(X₃))]` and `[X₄, F(I(X₄))]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitConstants {
    pub ir33: Vec<u32>,
    pub ir44: Vec<u32>,
    pub target33: u32,
    pub target44: u32,
}

fn n_types(rows: &[ForgetfulProfile]) -> usize {
    rows.iter().map(|r| r.orbit + 1).max().unwrap_or(0)
}

pub fn derive_orbit_constants(rows: &[ForgetfulProfile], ring: &FusionRing) -> OrbitConstants {
    let n = n_types(rows);
    let mut ir33 = vec![0; n];
    let mut ir44 = vec![0; n];
    for r in rows {
        ir33[r.orbit] += r.m3 * r.m3;
        ir44[r.orbit] += r.m4 * r.m4;
    }
    OrbitConstants {
        ir33,
        ir44,
        target33: induction_image(ring, 3)[3],
        target44: induction_image(ring, 4)[4],
    }
}

/// Orbit multiplicities fixed in advance: the unit orbit once and one
/// singleton orbit per `Zⱼ` of dimension `u₂²`.
pub fn fixed_orbit_counts(types: &[OrbitType]) -> Result<Vec<Option<u32>>> {
    let z = center_unit_dims_r()?;
    let mut out = vec![None; types.len()];
    for (i, t) in types.iter().enumerate() {
        if !t.has_unit {
            continue;
        }
        let hits = z
            .iter()
            .filter(|v| t.members.iter().any(|m| &m.value() == *v))
            .count() as u32;
        let size = t.members.len() as u32;
        if !hits.is_multiple_of(size) {
            return Err(CertError::mismatch("center", "distinguished simples split an orbit"));
        }
        out[i] = Some(hits / size);
    }
    Ok(out)
}

/// Sum of squared dimensions over the members of each orbit type.
pub fn orbit_squared_dims(types: &[OrbitType]) -> Vec<CycNum> {
    types
        .iter()
        .map(|t| t.members.iter().map(|m| m.value().pow(2).expect("nonzero")).sum())
        .collect()
}

/// Budget left after the fixed orbits, and the resulting per-type bound
/// `⌊B / orbit dim²⌋` (inclusive).
pub fn orbit_bounds(types: &[OrbitType], fixed: &[Option<u32>]) -> Result<(CycNum, Vec<u32>)> {
    let (_, dim_c) = fpdim_data_r()?;
    let total = dim_c.pow(2)?;
    let ods = orbit_squared_dims(types);
    let mut b = total;
    for (f, od) in fixed.iter().zip(&ods) {
        if let Some(c) = f {
            b = &b - &od.scale_int(*c as i64);
        }
    }
    let mut ctx = SignContext::new();
    let mut bounds = Vec::with_capacity(types.len());
    for (f, od) in fixed.iter().zip(&ods) {
        bounds.push(match f {
            Some(c) => *c,
            None => ctx
                .floor_ratio(&b, od)?
                .to_u32()
                .ok_or_else(|| CertError::mismatch("center", "negative orbit budget"))?,
        });
    }
    Ok((b, bounds))
}

/// All orbit vectors within the certified bounds satisfying
/// `ir33·o = [X₃,F(I(X₃))]` and `ir44·o = [X₄,F(I(X₄))]`, sorted.
pub fn enumerate_orbit_vectors(types: &[OrbitType], consts: &OrbitConstants) -> Result<Vec<OrbitVector>> {
    if types.len() != 9 {
        return Err(CertError::mismatch("center", format!("expected 9 orbit types, got {}", types.len())));
    }
    let fixed = fixed_orbit_counts(types)?;
    let (_, bounds) = orbit_bounds(types, &fixed)?;
    let mut out = Vec::new();
    let mut cur = [0u32; 9];
    fn rec(
        i: usize,
        cur: &mut OrbitVector,
        s33: u32,
        s44: u32,
        fixed: &[Option<u32>],
        bounds: &[u32],
        c: &OrbitConstants,
        out: &mut Vec<OrbitVector>,
    ) {
        if s33 > c.target33 || s44 > c.target44 {
            return;
        }
        if i == cur.len() {
            if s33 == c.target33 && s44 == c.target44 {
                out.push(*cur);
            }
            return;
        }
        let range = match fixed[i] {
            Some(v) => v..=v,
            None => 0..=bounds[i],
        };
        for v in range {
            cur[i] = v;
            let (a, b) = (s33 + v * c.ir33[i], s44 + v * c.ir44[i]);
            if a > c.target33 || b > c.target44 {
                break;
            }
            rec(i + 1, cur, a, b, fixed, bounds, c, out);
        }
        cur[i] = 0;
    }
    rec(0, &mut cur, 0, 0, &fixed, &bounds, consts, &mut out);
    out.sort();
    Ok(out)
}

/// One multiplicity slot `n_{L,m}` of a component vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slot {
    pub label: usize,
    pub m: u32,
}

/// Consecutive slots belonging to one label.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Group {
    pub label: usize,
    pub orbit: usize,
    pub start: usize,
    pub len: usize,
}

/// Layout of a component vector: every label with `m125 > 0` whose orbit
/// type occurs in some orbit vector, with slots `m = 1..=m125`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlotLayout {
    pub slots: Vec<Slot>,
    pub groups: Vec<Group>,
}

impl SlotLayout {
    pub fn derive(rows: &[ForgetfulProfile], vectors: &[OrbitVector]) -> Self {
        let mut slots = Vec::new();
        let mut groups = Vec::new();
        for r in rows {
            let present = vectors.iter().any(|o| o[r.orbit] > 0);
            if r.m125 == 0 || !present {
                continue;
            }
            groups.push(Group { label: r.label, orbit: r.orbit, start: slots.len(), len: r.m125 as usize });
            for m in 1..=r.m125 {
                slots.push(Slot { label: r.label, m });
            }
        }
        SlotLayout { slots, groups }
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn slot(&self, label: usize, m: u32) -> Option<usize> {
        self.slots.iter().position(|s| s.label == label && s.m == m)
    }

    pub fn group(&self, label: usize) -> Option<&Group> {
        self.groups.iter().find(|g| g.label == label)
    }
}

/// Linear constraints on one component vector `n_{·,·,j}` (`j ∈ {1,2,5}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraints {
    pub orbit: OrbitConstants,
    pub layout: SlotLayout,
    /// Rows `m²`, `m·(m125 − m)`, `m·m3`, `m·m4` per slot.
    pub k: [Vec<u32>; 4],
    pub rhs: [u32; 4],
    /// `m·m0` per slot; must sum to `[X₁, F(I(X₀))]`.
    pub budget: Vec<u32>,
    pub budget_rhs: u32,
}

pub fn derive_constraint_matrices(
    rows: &[ForgetfulProfile],
    ring: &FusionRing,
    vectors: &[OrbitVector],
) -> Result<Constraints> {
    if ring.rank() != 6 {
        return Err(CertError::RingNotSupported { stage: "center" });
    }
    let layout = SlotLayout::derive(rows, vectors);
    let mut k: [Vec<u32>; 4] = Default::default();
    let mut budget = Vec::new();
    for s in &layout.slots {
        let r = &rows[s.label];
        let m = s.m;
        k[0].push(m * m);
        k[1].push(m * (r.m125 - m));
        k[2].push(m * r.m3);
        k[3].push(m * r.m4);
        budget.push(m * r.m0);
    }
    let i1 = induction_image(ring, 1);
    let i0 = induction_image(ring, 0);
    Ok(Constraints {
        orbit: derive_orbit_constants(rows, ring),
        layout,
        k,
        rhs: [i1[1], i1[2] + i1[5], i1[3], i1[4]],
        budget,
        budget_rhs: i0[1],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::build_figure3;
    use crate::fusion::builtin_r;

    #[test]
    fn constants_and_vectors() {
        let f = build_figure3().unwrap();
        let r = builtin_r();
        let c = derive_orbit_constants(&f.rows, &r);
        assert_eq!(c.ir33, vec![5, 2, 2, 2, 1, 0, 18, 6, 0]);
        assert_eq!(c.ir44, vec![5, 2, 5, 5, 0, 1, 18, 6, 9]);
        let v = enumerate_orbit_vectors(&f.orbit_types, &c).unwrap();
        assert_eq!(v.len(), 45);
        assert!(v.contains(&[1, 6, 2, 0, 3, 6, 0, 0, 0]));
        let k = derive_constraint_matrices(&f.rows, &r, &v).unwrap();
        assert_eq!(k.layout.len(), 29);
        assert_eq!(&k.k[0][..3], &[1, 4, 9]);
        assert_eq!(k.rhs, [15, 12, 12, 15]);
        assert_eq!(k.budget_rhs, 3);
        assert_eq!(k.layout.slot(13, 1), Some(19));
    }
}
