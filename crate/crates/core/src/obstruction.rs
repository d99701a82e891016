//! The braided obstruction: no normalized twist assignment on K(𝓡) yields
//! modular data satisfying the Verlinde formula.

use rayon::prelude::*;

use crate::cyclotomic::{Automorphism, CycNum};
use crate::error::{CertError, Result};
use crate::fusion::{check_dim_hom, global_dimension, FusionRing};

/// Normalized twists `t₀..t₅` (ninth roots of unity).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwistTuple {
    pub t: [CycNum; 6],
}

impl TwistTuple {
    /// `θⱼ = tⱼ / t₀`, i.e. the twists with `γ = t₀⁻¹`.
    pub fn theta(&self) -> Result<[CycNum; 6]> {
        let gamma = self.t[0].inv()?;
        Ok(std::array::from_fn(|j| &self.t[j] * &gamma))
    }

    pub fn gamma(&self) -> Result<CycNum> {
        Ok(self.t[0].inv()?)
    }
}

/// Exponents `e` with `x = ζ₉ᵉ`, for a slice of ninth roots of unity.
pub fn root_exponents(xs: &[CycNum]) -> Option<Vec<u8>> {
    xs.iter().map(|x| x.ninth_root_exponent()).collect()
}

fn galois_triple(x: &CycNum) -> [CycNum; 3] {
    // (x, τ²(x), τ⁴(x)) where τ² = σ² restricted from the full group
    let s = Automorphism::sigma();
    [x.clone(), s.pow(2).apply(x), s.pow(4).apply(x)]
}

/// Galois-coherent triples for the `(t₀, t₃, t₄)` positions.
pub fn unit_orbit_triples() -> Vec<[CycNum; 3]> {
    (0..9).map(|a| galois_triple(&CycNum::zeta_pow(a))).collect()
}

/// Triples for the `(t₁, t₂, t₅)` positions: six primitive-root orbits plus
/// all 27 triples of cube roots of unity.
pub fn primitive_triples() -> Vec<[CycNum; 3]> {
    let mut out: Vec<[CycNum; 3]> = [1, 2, 4, 5, 7, 8]
        .iter()
        .map(|&a| galois_triple(&CycNum::zeta_pow(a)))
        .collect();
    for x in 0..3 {
        for y in 0..3 {
            for z in 0..3 {
                out.push([
                    CycNum::zeta_pow(3 * x),
                    CycNum::zeta_pow(3 * y),
                    CycNum::zeta_pow(3 * z),
                ]);
            }
        }
    }
    out
}

/// All `9 × (6 + 27) = 297` candidate normalized twist tuples.
pub fn enumerate_twist_tuples() -> Vec<TwistTuple> {
    let outer = unit_orbit_triples();
    let inner = primitive_triples();
    let mut out = Vec::with_capacity(outer.len() * inner.len());
    for x in &outer {
        for y in &inner {
            out.push(TwistTuple {
                t: [
                    x[0].clone(),
                    y[0].clone(),
                    y[1].clone(),
                    x[1].clone(),
                    x[2].clone(),
                    y[2].clone(),
                ],
            });
        }
    }
    out
}

/// `g = Σ dⱼ² θⱼ`.
pub fn gauss_sum(theta: &[CycNum], d: &[CycNum]) -> CycNum {
    theta.iter().zip(d).map(|(t, x)| &(x * x) * t).sum()
}

/// `g·ḡ == Σ dⱼ²`.
pub fn passes_gauss(theta: &[CycNum], d: &[CycNum]) -> bool {
    let g = gauss_sum(theta, d);
    &g * &Automorphism::conjugation().apply(&g) == global_dimension(d)
}

#[derive(Clone, Debug)]
pub struct GaussFilterOutcome {
    /// Tuples passing the test before deduplication.
    pub passing: usize,
    /// Distinct twist vectors θ, canonically sorted.
    pub survivors: Vec<[CycNum; 6]>,
}

/// Keep tuples whose Gauss sum satisfies `g·ḡ = dim(𝒞)`, deduplicated by θ.
pub fn gauss_filter(tuples: &[TwistTuple], d: &[CycNum]) -> Result<GaussFilterOutcome> {
    let thetas: Vec<[CycNum; 6]> = tuples
        .par_iter()
        .map(|t| t.theta())
        .collect::<Result<_>>()?;
    let mut pass: Vec<[CycNum; 6]> = thetas
        .into_par_iter()
        .filter(|th| passes_gauss(th, d))
        .collect();
    let passing = pass.len();
    pass.sort();
    pass.dedup();
    Ok(GaussFilterOutcome {
        passing,
        survivors: pass,
    })
}

pub type SMatrix = Vec<Vec<CycNum>>;

/// Unnormalized S-matrix from the balancing equation
/// `Sᵢⱼ = θᵢ⁻¹θⱼ⁻¹ Σₖ Nᵢⱼᵏ dₖ θₖ`.
pub fn balancing_s_matrix(theta: &[CycNum], d: &[CycNum], ring: &FusionRing) -> Result<SMatrix> {
    let r = ring.rank();
    let inv: Vec<CycNum> = theta.iter().map(|t| t.inv()).collect::<std::result::Result<_, _>>()?;
    let dt: Vec<CycNum> = d.iter().zip(theta).map(|(x, t)| x * t).collect();
    Ok((0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let s: CycNum = (0..r)
                        .filter(|&k| ring.n(i, j, k) != 0)
                        .map(|k| dt[k].scale_int(ring.n(i, j, k) as i64))
                        .sum();
                    &(&inv[i] * &inv[j]) * &s
                })
                .collect()
        })
        .collect())
}

pub fn is_symmetric(s: &SMatrix) -> bool {
    (0..s.len()).all(|i| (0..i).all(|j| s[i][j] == s[j][i]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerlindeMismatch {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub computed: CycNum,
    pub expected: u32,
}

/// Verlinde right-hand side `(1/D) Σₗ SᵢₗSⱼₗSₖₗ / S₀ₗ` for one triple.
pub fn verlinde_value(s: &SMatrix, total: &CycNum, i: usize, j: usize, k: usize) -> Result<CycNum> {
    let inv_total = total.inv()?;
    let mut acc = CycNum::zero();
    for l in 0..s.len() {
        let t = &(&s[i][l] * &s[j][l]) * &s[k][l];
        acc += &t.checked_div(&s[0][l])?;
    }
    Ok(&acc * &inv_total)
}

/// Evaluate the Verlinde formula on every triple and return all mismatches.
///
/// A zero entry in row 0 is a structural failure and is returned as an error.
pub fn verlinde_residuals(
    s: &SMatrix,
    ring: &FusionRing,
    d: &[CycNum],
) -> Result<Vec<VerlindeMismatch>> {
    let r = ring.rank();
    if let Some(l) = (0..r).find(|&l| s[0][l].is_zero()) {
        return Err(CertError::mismatch(
            "obstruction",
            format!("S[0][{l}] vanishes, so S is degenerate"),
        ));
    }
    let total = global_dimension(d);
    let triples: Vec<(usize, usize, usize)> = (0..r)
        .flat_map(|i| (0..r).flat_map(move |j| (0..r).map(move |k| (i, j, k))))
        .collect();
    let mut out: Vec<VerlindeMismatch> = triples
        .par_iter()
        .map(|&(i, j, k)| -> Result<Option<VerlindeMismatch>> {
            let v = verlinde_value(s, &total, i, j, k)?;
            let expected = ring.n(i, j, k);
            Ok((v != CycNum::from_integer(expected as i64)).then_some(VerlindeMismatch {
                i,
                j,
                k,
                computed: v,
                expected,
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    out.sort_by_key(|m| (m.i, m.j, m.k));
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct SurvivorReport {
    pub theta: [CycNum; 6],
    pub theta_exponents: Vec<u8>,
    pub s_symmetric: bool,
    pub row0_is_dims: bool,
    pub mismatches: Vec<VerlindeMismatch>,
    /// Value of the Verlinde right-hand side at `(1,1,1)`.
    pub witness_111: CycNum,
}

#[derive(Clone, Debug)]
pub struct CoherenceAudit {
    /// Tuples among all `9⁶` satisfying the coherence predicate.
    pub coherent: usize,
    /// Whether that set equals the generated family.
    pub matches_family: bool,
    /// Distinct θ passing the Gauss test with no coherence restriction.
    pub unrestricted_gauss_survivors: usize,
}

#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub applicable: bool,
    pub tuples: usize,
    pub gauss_passing: usize,
    pub survivors: Vec<SurvivorReport>,
    pub audit: Option<CoherenceAudit>,
}

impl ObstructionReport {
    /// Survivors whose S-matrix satisfies Verlinde everywhere.
    pub fn verlinde_consistent(&self) -> usize {
        self.survivors.iter().filter(|s| s.mismatches.is_empty()).count()
    }

    /// True when every surviving twist tuple violates Verlinde.
    pub fn certified(&self) -> bool {
        self.applicable && self.verlinde_consistent() == 0
    }
}

fn ring_is_builtin(ring: &FusionRing) -> bool {
    *ring == crate::fusion::builtin_r()
}

/// Run the obstruction for `ring` with dimension vector `d`.
///
/// The twist family is specific to K(𝓡); other rings are reported as not
/// applicable (the rank-1 ring passes vacuously).
pub fn run_obstruction(ring: &FusionRing, d: &[CycNum], audit: bool) -> Result<ObstructionReport> {
    if !check_dim_hom(ring, d) {
        return Err(CertError::NotADimensionHomomorphism);
    }
    if !ring_is_builtin(ring) {
        return Ok(ObstructionReport {
            applicable: false,
            tuples: 0,
            gauss_passing: 0,
            survivors: Vec::new(),
            audit: None,
        });
    }
    let tuples = enumerate_twist_tuples();
    let filtered = gauss_filter(&tuples, d)?;
    let total = global_dimension(d);
    let mut survivors = Vec::with_capacity(filtered.survivors.len());
    for theta in filtered.survivors {
        let s = balancing_s_matrix(&theta, d, ring)?;
        let mismatches = verlinde_residuals(&s, ring, d)?;
        let witness_111 = verlinde_value(&s, &total, 1, 1, 1)?;
        survivors.push(SurvivorReport {
            theta_exponents: root_exponents(&theta).ok_or_else(|| {
                CertError::mismatch("obstruction", "twist is not a ninth root of unity")
            })?,
            s_symmetric: is_symmetric(&s),
            row0_is_dims: s[0].as_slice() == d,
            theta,
            mismatches,
            witness_111,
        });
    }
    let audit = if audit {
        Some(coherence_audit(d, &tuples))
    } else {
        None
    };
    Ok(ObstructionReport {
        applicable: true,
        tuples: tuples.len(),
        gauss_passing: filtered.passing,
        survivors,
        audit,
    })
}

/// Coherence predicate on exponent tuples `tⱼ = ζ₉^{eⱼ}`: `t₃, t₄` are the
/// σ², σ⁴ images of `t₀`, and `(t₁, t₂, t₅)` is either such an orbit of a
/// primitive root or consists of cube roots.
pub fn is_coherent(e: &[u8; 6]) -> bool {
    let s2 = Automorphism::sigma().pow(2).exponent() as u16;
    let s4 = Automorphism::sigma().pow(4).exponent() as u16;
    let img = |x: u8, k: u16| ((x as u16 * k) % 9) as u8;
    let outer = e[3] == img(e[0], s2) && e[4] == img(e[0], s4);
    let cube = e[1].is_multiple_of(3) && e[2].is_multiple_of(3) && e[5].is_multiple_of(3);
    let prim = !e[1].is_multiple_of(3) && e[2] == img(e[1], s2) && e[5] == img(e[1], s4);
    outer && (cube || prim)
}

/// Scan all `9⁶` exponent tuples: count coherent ones, compare with the
/// generated family, and count Gauss survivors with no restriction.
pub fn coherence_audit(d: &[CycNum], family: &[TwistTuple]) -> CoherenceAudit {
    let mut fam: Vec<[u8; 6]> = family
        .iter()
        .filter_map(|t| root_exponents(&t.t).map(|v| v.try_into().expect("six entries")))
        .collect();
    fam.sort();
    let all: Vec<[u8; 6]> = (0..9u32.pow(6))
        .map(|mut n| {
            std::array::from_fn(|_| {
                let v = (n % 9) as u8;
                n /= 9;
                v
            })
        })
        .collect();
    let mut coherent: Vec<[u8; 6]> = all.iter().copied().filter(is_coherent).collect();
    coherent.sort();

    // θ depends only on eⱼ − e₀, so the unrestricted scan runs over θ directly
    let weighted: Vec<Vec<CycNum>> = d
        .iter()
        .map(|x| {
            let sq = x * x;
            (0..9).map(|e| &sq * &CycNum::zeta_pow(e)).collect()
        })
        .collect();
    let total = global_dimension(d);
    let conj = Automorphism::conjugation();
    let unrestricted = (0..9u32.pow(5))
        .into_par_iter()
        .filter(|&n| {
            let mut m = n;
            let mut g = weighted[0][0].clone();
            for w in weighted.iter().skip(1) {
                g += &w[(m % 9) as usize];
                m /= 9;
            }
            &g * &conj.apply(&g) == total
        })
        .count();
    CoherenceAudit {
        coherent: coherent.len(),
        matches_family: coherent == fam,
        unrestricted_gauss_survivors: unrestricted,
    }
}
