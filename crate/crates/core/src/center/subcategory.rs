//! The fusion subcategory `{𝟙, A₁, A₂, A₃, B, C}` of the surviving center.

use super::Column;
use crate::error::Result;
use crate::fusion::FusionRing;

pub const SUB_LABELS: [&str; 6] = ["1", "A1", "A2", "A3", "B", "C"];
const ONE: usize = 0;
const B: usize = 4;
const C: usize = 5;

/// `A_j` for `j = 1, 2, 3` read cyclically (`A₄ = A₁`).
fn a(j: usize) -> usize {
    1 + (j - 1) % 3
}

/// Fusion coefficients of the subcategory, `n[x][y][z] = [z, x⊗y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcategoryRules {
    pub n: [[[u32; 6]; 6]; 6],
}

impl SubcategoryRules {
    /// The rules derived in the reconstruction argument.
    pub fn derived() -> Self {
        let mut n = [[[0u32; 6]; 6]; 6];
        let mut set = |x: usize, y: usize, terms: &[(usize, u32)]| {
            let mut v = [0u32; 6];
            for &(z, m) in terms {
                v[z] += m;
            }
            n[x][y] = v;
            n[y][x] = v;
        };
        for x in 0..6 {
            set(ONE, x, &[(x, 1)]);
        }
        for j in 1..=3 {
            set(a(j), a(j), &[(ONE, 1), (a(j + 1), 1), (B, 1)]);
            set(a(j), a(j + 1), &[(a(j), 1), (C, 1)]);
            set(a(j), B, &[(a(j), 1), (B, 1), (C, 1)]);
            set(a(j), C, &[(a(j + 1), 1), (a(j + 2), 1), (B, 1), (C, 1)]);
        }
        set(B, B, &[(ONE, 1), (a(1), 1), (a(2), 1), (a(3), 1), (B, 1), (C, 1)]);
        set(B, C, &[(a(1), 1), (a(2), 1), (a(3), 1), (B, 1), (C, 2)]);
        set(C, C, &[(ONE, 1), (a(1), 1), (a(2), 1), (a(3), 1), (B, 2), (C, 2)]);
        SubcategoryRules { n }
    }

    pub fn product(&self, x: &[u32; 6], y: &[u32; 6]) -> [u32; 6] {
        let mut out = [0u32; 6];
        for i in 0..6 {
            for j in 0..6 {
                let c = x[i] * y[j];
                if c == 0 {
                    continue;
                }
                for (o, m) in out.iter_mut().zip(&self.n[i][j]) {
                    *o += c * m;
                }
            }
        }
        out
    }

    pub fn to_ring(&self) -> Result<FusionRing> {
        let n = self.n.iter().map(|r| r.iter().map(|c| c.to_vec()).collect()).collect();
        FusionRing::new(SUB_LABELS.iter().map(|s| s.to_string()).collect(), n, (0..6).collect())
    }
}

fn basis(i: usize) -> [u32; 6] {
    let mut v = [0; 6];
    v[i] = 1;
    v
}

fn hom(x: &[u32; 6], y: &[u32; 6]) -> u32 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// `𝟙 ↦ X₀, A₁ ↦ X₁, A₂ ↦ X₂, A₃ ↦ X₅, B ↦ X₃, C ↦ X₄`.
pub const STATED_ASSIGNMENT: [usize; 6] = [0, 1, 2, 5, 3, 4];

/// First product where the rules and the ring disagree under `assign`.
pub fn assignment_mismatch(rules: &SubcategoryRules, ring: &FusionRing, assign: &[usize; 6]) -> Option<String> {
    for x in 0..6 {
        for y in x..6 {
            for z in 0..6 {
                let want = ring.n(assign[x], assign[y], assign[z]);
                if rules.n[x][y][z] != want {
                    return Some(format!(
                        "[{}, {}⊗{}] = {} but [X{}, X{}⊗X{}] = {}",
                        SUB_LABELS[z], SUB_LABELS[x], SUB_LABELS[y], rules.n[x][y][z], assign[z], assign[x], assign[y], want
                    ));
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCount {
    pub name: String,
    pub value: u32,
    pub expected: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcategoryReport {
    pub ring_valid: bool,
    pub matches_ring: bool,
    pub mismatch: Option<String>,
    /// Assignments of `A₁, A₂, A₃` to `X₁, X₂, X₅` (with `𝟙, B, C` fixed)
    /// and whether each reproduces the ring.
    pub assignments: Vec<([usize; 6], bool)>,
    pub images_present: bool,
    pub dimension_consistent: bool,
    pub hom_counts: Vec<HomCount>,
}

impl SubcategoryReport {
    pub fn ok(&self) -> bool {
        self.ring_valid
            && self.matches_ring
            && self.images_present
            && self.dimension_consistent
            && self.hom_counts.iter().all(|h| h.value == h.expected)
    }
}

/// Intermediate multiplicities used while pinning down the rules.
pub fn hom_counts(rules: &SubcategoryRules) -> Vec<HomCount> {
    let p = |x: usize, y: usize| rules.product(&basis(x), &basis(y));
    let mut out = Vec::new();
    for j in 1..=2 {
        let t = p(a(j), a(j + 1));
        out.push(HomCount { name: format!("[A{j}⊗A{}, A{j}⊗A{}]", j + 1, j + 1), value: hom(&t, &t), expected: 2 });
    }
    for j in 1..=3 {
        let t = p(a(j), B);
        out.push(HomCount { name: format!("[A{j}⊗B, A{j}⊗B]"), value: hom(&t, &t), expected: 3 });
    }
    for j in 1..=3 {
        out.push(HomCount {
            name: format!("[A{j}⊗B, B⊗C]"),
            value: hom(&p(a(j), B), &p(B, C)),
            expected: 4,
        });
    }
    out.push(HomCount { name: "[A1⊗A2, C⊗C]".into(), value: hom(&p(a(1), a(2)), &p(C, C)), expected: 3 });
    out
}

/// Check the rules against the ring and the table of the surviving
/// candidate.
pub fn verify_subcategory_with(rules: &SubcategoryRules, ring: &FusionRing, table: &[Column]) -> Result<SubcategoryReport> {
    let ring_valid = rules.to_ring().map(|r| r.validate().is_valid()).unwrap_or(false);
    let mismatch = assignment_mismatch(rules, ring, &STATED_ASSIGNMENT);
    let mut assignments = Vec::new();
    for p in [[1, 2, 5], [1, 5, 2], [2, 1, 5], [2, 5, 1], [5, 1, 2], [5, 2, 1]] {
        let assign = [0, p[0], p[1], p[2], 3, 4];
        assignments.push((assign, assignment_mismatch(rules, ring, &assign).is_none()));
    }
    // F of each subcategory simple, read off the assignment
    let image = |x: usize| basis(STATED_ASSIGNMENT[x]);
    let images_present = (0..6).all(|x| table.iter().any(|c| c.f == image(x)));
    let mut dimension_consistent = true;
    for x in 0..6 {
        for y in x..6 {
            let lhs = {
                let v = ring.multiply(&image(x), &image(y));
                let mut a = [0u32; 6];
                a.copy_from_slice(&v);
                a
            };
            let mut rhs = [0u32; 6];
            for z in 0..6 {
                for (r, f) in rhs.iter_mut().zip(image(z)) {
                    *r += rules.n[x][y][z] * f;
                }
            }
            dimension_consistent &= lhs == rhs;
        }
    }
    Ok(SubcategoryReport {
        ring_valid,
        matches_ring: mismatch.is_none(),
        mismatch,
        assignments,
        images_present,
        dimension_consistent,
        hom_counts: hom_counts(rules),
    })
}

pub fn verify_subcategory(ring: &FusionRing, table: &[Column]) -> Result<SubcategoryReport> {
    verify_subcategory_with(&SubcategoryRules::derived(), ring, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::builtin_r;

    fn table() -> Vec<Column> {
        (0..6)
            .map(|k| Column { orbit: 0, label: 0, f: basis(k) })
            .collect()
    }

    #[test]
    fn derived_rules_match_r() {
        let rep = verify_subcategory(&builtin_r(), &table()).unwrap();
        assert!(rep.ok(), "{rep:?}");
        let good: Vec<_> = rep.assignments.iter().filter(|(_, ok)| *ok).map(|(a, _)| a[1..4].to_vec()).collect();
        assert_eq!(good, vec![vec![1, 2, 5], vec![2, 5, 1], vec![5, 1, 2]]);
    }

    #[test]
    fn perturbed_cc_is_caught() {
        let mut rules = SubcategoryRules::derived();
        rules.n[C][C][C] = 1;
        let rep = verify_subcategory_with(&rules, &builtin_r(), &table()).unwrap();
        assert!(!rep.ok());
        assert!(rep.mismatch.unwrap().contains("[C, C⊗C]"));
        assert_eq!(rep.hom_counts.last().unwrap().value, 2);
    }
}
