//! Fusion rings: storage, axiom validation, dimension homomorphisms and the
//! built-in rank-6 ring.

use std::fmt;
use std::fmt::Write as _;

use crate::cyclotomic::units::{u1, u2};
use crate::cyclotomic::{Automorphism, CycNum};
use crate::error::{CertError, Result};

/// A commutative-or-not fusion ring with basis `0..rank`, basis 0 the unit.
///
/// `n(i, j, k)` is the multiplicity of basis element `k` in `i ⊗ j`.
#[derive(Clone, PartialEq, Eq)]
pub struct FusionRing {
    rank: usize,
    labels: Vec<String>,
    n: Vec<u32>,
    dual: Vec<usize>,
}

/// One failed axiom instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    UnitLeft { j: usize, k: usize, found: u32 },
    UnitRight { i: usize, k: usize, found: u32 },
    Associativity { i: usize, j: usize, k: usize, l: usize, lhs: u32, rhs: u32 },
    DualNotInvolution { i: usize },
    DualOfUnit,
    DualPairing { i: usize, j: usize, found: u32 },
    Reciprocity { i: usize, j: usize, k: usize },
    Commutativity { i: usize, j: usize, k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnitLeft { j, k, found } => write!(f, "unit: N(0,{j},{k}) = {found}"),
            Violation::UnitRight { i, k, found } => write!(f, "unit: N({i},0,{k}) = {found}"),
            Violation::Associativity { i, j, k, l, lhs, rhs } => {
                write!(f, "associativity at ({i},{j},{k},{l}): {lhs} != {rhs}")
            }
            Violation::DualNotInvolution { i } => write!(f, "dual is not an involution at {i}"),
            Violation::DualOfUnit => write!(f, "dual(0) != 0"),
            Violation::DualPairing { i, j, found } => {
                write!(f, "duality: N({i},{j},0) = {found}")
            }
            Violation::Reciprocity { i, j, k } => {
                write!(f, "reciprocity: N({i},{j},{k}) != N(dual {i},{k},{j})")
            }
            Violation::Commutativity { i, j, k } => {
                write!(f, "commutativity: N({i},{j},{k}) != N({j},{i},{k})")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl FusionRing {
    /// Build a ring from nested matrices `n[i][j][k]`. Only shapes are
    /// checked here; call [`FusionRing::validate`] for the axioms.
    pub fn new(labels: Vec<String>, n: Vec<Vec<Vec<u32>>>, dual: Vec<usize>) -> Result<Self> {
        let rank = n.len();
        if rank == 0 {
            return Err(CertError::InvalidRing("rank must be positive".into()));
        }
        if labels.len() != rank || dual.len() != rank {
            return Err(CertError::InvalidRing("labels/dual length differs from rank".into()));
        }
        if dual.iter().any(|&p| p >= rank) {
            return Err(CertError::InvalidRing("dual entry out of range".into()));
        }
        let mut flat = Vec::with_capacity(rank * rank * rank);
        for (i, m) in n.iter().enumerate() {
            if m.len() != rank || m.iter().any(|row| row.len() != rank) {
                return Err(CertError::InvalidRing(format!("matrix {i} is not {rank}x{rank}")));
            }
            for row in m {
                flat.extend_from_slice(row);
            }
        }
        Ok(FusionRing {
            rank,
            labels,
            n: flat,
            dual,
        })
    }

    fn default_labels(rank: usize) -> Vec<String> {
        (0..rank).map(|i| format!("X{i}")).collect()
    }

    /// The rank-1 ring ℤ.
    pub fn trivial() -> Self {
        FusionRing {
            rank: 1,
            labels: vec!["X0".into()],
            n: vec![1],
            dual: vec![0],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        self.n[(i * self.rank + j) * self.rank + k]
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    /// Copy with a single structure constant replaced.
    pub fn with_entry(&self, i: usize, j: usize, k: usize, value: u32) -> Self {
        let mut out = self.clone();
        out.n[(i * self.rank + j) * self.rank + k] = value;
        out
    }

    /// Product of two objects given as multiplicity vectors.
    pub fn multiply(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let r = self.rank;
        let mut out = vec![0u32; r];
        for i in (0..r).filter(|&i| a[i] != 0) {
            for j in (0..r).filter(|&j| b[j] != 0) {
                let c = a[i] * b[j];
                for (k, o) in out.iter_mut().enumerate() {
                    *o += c * self.n(i, j, k);
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank;
        (0..r).all(|i| (0..r).all(|j| (0..r).all(|k| self.n(i, j, k) == self.n(j, i, k))))
    }

    /// Check every axiom family and collect the failing instances.
    pub fn validate(&self) -> ValidationReport {
        let r = self.rank;
        let mut v = Vec::new();
        for j in 0..r {
            for k in 0..r {
                let expect = u32::from(j == k);
                if self.n(0, j, k) != expect {
                    v.push(Violation::UnitLeft { j, k, found: self.n(0, j, k) });
                }
                if self.n(j, 0, k) != expect {
                    v.push(Violation::UnitRight { i: j, k, found: self.n(j, 0, k) });
                }
            }
        }
        if self.dual[0] != 0 {
            v.push(Violation::DualOfUnit);
        }
        for i in 0..r {
            if self.dual[self.dual[i]] != i {
                v.push(Violation::DualNotInvolution { i });
            }
            for j in 0..r {
                let expect = u32::from(j == self.dual[i]);
                if self.n(i, j, 0) != expect {
                    v.push(Violation::DualPairing { i, j, found: self.n(i, j, 0) });
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    if self.n(i, j, k) != self.n(self.dual[i], k, j) {
                        v.push(Violation::Reciprocity { i, j, k });
                    }
                    if self.n(i, j, k) != self.n(j, i, k) {
                        v.push(Violation::Commutativity { i, j, k });
                    }
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for l in 0..r {
                        // (i ⊗ j) ⊗ k versus i ⊗ (j ⊗ k), coefficient of l
                        let lhs: u32 = (0..r).map(|m| self.n(i, j, m) * self.n(m, k, l)).sum();
                        let rhs: u32 = (0..r).map(|m| self.n(j, k, m) * self.n(i, m, l)).sum();
                        if lhs != rhs {
                            v.push(Violation::Associativity { i, j, k, l, lhs, rhs });
                        }
                    }
                }
            }
        }
        ValidationReport { violations: v }
    }

    /// Serialize in the `.fring` text format.
    pub fn to_fring(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "rank {}", self.rank);
        let dual: Vec<String> = self.dual.iter().map(|d| d.to_string()).collect();
        let _ = writeln!(s, "dual {}", dual.join(" "));
        for i in 0..self.rank {
            let _ = writeln!(s, "# {}", self.labels[i]);
            for j in 0..self.rank {
                let row: Vec<String> = (0..self.rank).map(|k| self.n(i, j, k).to_string()).collect();
                let _ = writeln!(s, "{}", row.join(" "));
            }
        }
        s
    }

    /// Parse the `.fring` format: `rank r`, `dual p0 .. p(r-1)`, then `r`
    /// blocks of `r` rows of `r` integers. `#` starts a comment.
    pub fn parse_fring(text: &str) -> Result<Self> {
        let err = |line: usize, msg: &str| CertError::Parse {
            what: "fusion ring".into(),
            line,
            msg: msg.into(),
        };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (ln, first) = lines.next().ok_or_else(|| err(0, "empty input"))?;
        let rank: usize = first
            .strip_prefix("rank")
            .and_then(|r| r.trim().parse().ok())
            .filter(|&r| r > 0)
            .ok_or_else(|| err(ln, "expected 'rank <r>'"))?;

        let (ln, second) = lines.next().ok_or_else(|| err(ln, "missing dual line"))?;
        let dual: Vec<usize> = second
            .strip_prefix("dual")
            .ok_or_else(|| err(ln, "expected 'dual ...'"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| err(ln, "bad dual entry")))
            .collect::<Result<_>>()?;
        if dual.len() != rank {
            return Err(err(ln, "dual has wrong length"));
        }

        let mut n = vec![vec![vec![0u32; rank]; rank]; rank];
        for (i, mat) in n.iter_mut().enumerate() {
            for (j, row) in mat.iter_mut().enumerate() {
                let (ln, text) = lines
                    .next()
                    .ok_or_else(|| err(0, &format!("missing row {j} of matrix {i}")))?;
                let vals: Vec<u32> = text
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| err(ln, "bad integer")))
                    .collect::<Result<_>>()?;
                if vals.len() != rank {
                    return Err(err(ln, "row has wrong length"));
                }
                *row = vals;
            }
        }
        if let Some((ln, _)) = lines.next() {
            return Err(err(ln, "trailing data"));
        }
        FusionRing::new(Self::default_labels(rank), n, dual)
    }
}

impl fmt::Debug for FusionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_fring())
    }
}

const R_MATRICES: [[[u32; 6]; 6]; 6] = [
    [
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
    ],
    [
        [0, 1, 0, 0, 0, 0],
        [1, 0, 1, 1, 0, 0],
        [0, 1, 0, 0, 1, 0],
        [0, 1, 0, 1, 1, 0],
        [0, 0, 1, 1, 1, 1],
        [0, 0, 0, 0, 1, 1],
    ],
    [
        [0, 0, 1, 0, 0, 0],
        [0, 1, 0, 0, 1, 0],
        [1, 0, 0, 1, 0, 1],
        [0, 0, 1, 1, 1, 0],
        [0, 1, 0, 1, 1, 1],
        [0, 0, 1, 0, 1, 0],
    ],
    [
        [0, 0, 0, 1, 0, 0],
        [0, 1, 0, 1, 1, 0],
        [0, 0, 1, 1, 1, 0],
        [1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 2, 1],
        [0, 0, 0, 1, 1, 1],
    ],
    [
        [0, 0, 0, 0, 1, 0],
        [0, 0, 1, 1, 1, 1],
        [0, 1, 0, 1, 1, 1],
        [0, 1, 1, 1, 2, 1],
        [1, 1, 1, 2, 2, 1],
        [0, 1, 1, 1, 1, 0],
    ],
    [
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 1],
        [0, 0, 1, 0, 1, 0],
        [0, 0, 0, 1, 1, 1],
        [0, 1, 1, 1, 1, 0],
        [1, 1, 0, 1, 0, 0],
    ],
];

/// The built-in ring K(𝓡), self-dual, basis `X0..X5`.
///
/// Panics if the table fails validation, which would be a transcription bug.
pub fn builtin_r() -> FusionRing {
    let n = R_MATRICES
        .iter()
        .map(|m| m.iter().map(|r| r.to_vec()).collect())
        .collect();
    let ring = FusionRing::new(FusionRing::default_labels(6), n, (0..6).collect())
        .expect("built-in table has the right shape");
    let report = ring.validate();
    assert!(report.is_valid(), "built-in ring is invalid: {:?}", report.violations);
    ring
}

/// True iff `i ↦ d[i]` respects the fusion rules: `dᵢdⱼ = Σₖ Nᵢⱼᵏ dₖ`.
pub fn check_dim_hom(ring: &FusionRing, d: &[CycNum]) -> bool {
    let r = ring.rank();
    if d.len() != r || !d[0].is_one() {
        return false;
    }
    (0..r).all(|i| {
        (i..r).all(|j| {
            let rhs: CycNum = (0..r)
                .filter(|&k| ring.n(i, j, k) != 0)
                .map(|k| d[k].scale_int(ring.n(i, j, k) as i64))
                .sum();
            &d[i] * &d[j] == rhs
        })
    })
}

/// Σ dᵢ².
pub fn global_dimension(d: &[CycNum]) -> CycNum {
    d.iter().map(|x| x * x).sum()
}

/// The Frobenius–Perron dimensions of K(𝓡) and their squared sum,
/// `(1, u₂, u₂, u₁u₂, u₁⁻¹u₂², u₂)` and `9u₂²`, both verified exactly.
pub fn fpdim_data_r() -> Result<(Vec<CycNum>, CycNum)> {
    let (a, b) = (u1(), u2());
    let d = vec![
        CycNum::one(),
        b.clone(),
        b.clone(),
        &a * &b,
        &a.inv()? * &b.pow(2)?,
        b.clone(),
    ];
    if !check_dim_hom(&builtin_r(), &d) {
        return Err(CertError::NotADimensionHomomorphism);
    }
    let total = global_dimension(&d);
    if total != b.pow(2)?.scale_int(9) {
        return Err(CertError::mismatch("ring", "FPdim total is not 9u2^2"));
    }
    Ok((d, total))
}

/// Formal codegrees `dim(𝒞)/dᵢ²` of K(𝓡), in basis order.
pub fn formal_codegrees_r() -> Result<Vec<CycNum>> {
    let (d, total) = fpdim_data_r()?;
    d.iter()
        .map(|x| Ok(total.checked_div(&(x * x))?))
        .collect()
}

/// Dimensions of the distinguished center simples `Z₀..Z₅`,
/// `dim(Zⱼ) = dim(𝒞) / codegreeⱼ`.
pub fn center_unit_dims_r() -> Result<Vec<CycNum>> {
    let (_, total) = fpdim_data_r()?;
    formal_codegrees_r()?
        .iter()
        .map(|c| Ok(total.checked_div(c)?))
        .collect()
}

/// The Deligne-product ring `A ⊠ B`, basis `(a, b) ↦ a·rank(B) + b`.
pub fn product_ring(a: &FusionRing, b: &FusionRing) -> Result<FusionRing> {
    for (name, ring) in [("left", a), ("right", b)] {
        let rep = ring.validate();
        if !rep.is_valid() {
            return Err(CertError::InvalidRing(format!(
                "{name} factor: {}",
                rep.violations[0]
            )));
        }
    }
    let (ra, rb) = (a.rank(), b.rank());
    let r = ra * rb;
    let idx = |x: usize, y: usize| x * rb + y;
    let mut n = vec![vec![vec![0u32; r]; r]; r];
    for (i1, i2) in (0..ra).flat_map(|i| (0..rb).map(move |j| (i, j))) {
        for (j1, j2) in (0..ra).flat_map(|i| (0..rb).map(move |j| (i, j))) {
            for (k1, k2) in (0..ra).flat_map(|i| (0..rb).map(move |j| (i, j))) {
                n[idx(i1, i2)][idx(j1, j2)][idx(k1, k2)] = a.n(i1, j1, k1) * b.n(i2, j2, k2);
            }
        }
    }
    let mut labels = Vec::with_capacity(r);
    let mut dual = Vec::with_capacity(r);
    for x in 0..ra {
        for y in 0..rb {
            labels.push(format!("{}*{}", a.labels()[x], b.labels()[y]));
            dual.push(idx(a.dual(x), b.dual(y)));
        }
    }
    let out = FusionRing::new(labels, n, dual)?;
    let rep = out.validate();
    if !rep.is_valid() {
        return Err(CertError::InvalidRing(format!("product: {}", rep.violations[0])));
    }
    Ok(out)
}

/// Dimensions of the product ring from the factor dimensions.
pub fn product_dims(da: &[CycNum], db: &[CycNum]) -> Vec<CycNum> {
    da.iter()
        .flat_map(|x| db.iter().map(move |y| x * y))
        .collect()
}

/// For each simple `i`, every simple `j` with
/// `d_j² = g(d_i²) · D / g(D)` where `D = Σ d²`.
pub fn galois_candidates(d: &[CycNum], g: Automorphism) -> Result<Vec<Vec<usize>>> {
    let total = global_dimension(d);
    let ratio = total.checked_div(&g.apply(&total))?;
    let squares: Vec<CycNum> = d.iter().map(|x| x * x).collect();
    Ok(squares
        .iter()
        .map(|s| {
            let image = &g.apply(s) * &ratio;
            squares
                .iter()
                .enumerate()
                .filter(|(_, t)| **t == image)
                .map(|(j, _)| j)
                .collect()
        })
        .collect())
}

/// The permutation `ĝ` of simples induced by `g`, read off from dimensions.
///
/// The identity automorphism (and complex conjugation, which fixes real
/// dimensions) gives the identity permutation. Otherwise every simple must
/// have exactly one candidate image.
pub fn galois_perm_on_simples(d: &[CycNum], g: Automorphism) -> Result<Vec<usize>> {
    if g.is_trivial_on_real() {
        return Ok((0..d.len()).collect());
    }
    let cands = galois_candidates(d, g)?;
    let mut perm = Vec::with_capacity(d.len());
    for (i, c) in cands.iter().enumerate() {
        match c.as_slice() {
            [j] => perm.push(*j),
            [] => {
                return Err(CertError::AmbiguousGaloisMatch(format!(
                    "no simple carries the image of {i}"
                )))
            }
            many => {
                return Err(CertError::AmbiguousGaloisMatch(format!(
                    "simple {i} has {} candidate images {many:?}",
                    many.len()
                )))
            }
        }
    }
    Ok(perm)
}

/// Kernel vector of `m` normalized to `v[0] = 1`, if the kernel is a line
/// not orthogonal to the first coordinate.
fn normalized_kernel_line(mut m: Vec<Vec<CycNum>>) -> Result<Option<Vec<CycNum>>> {
    let n = m.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv()?;
        for c in 0..n {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..n {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..n {
                    let t = &f * &m[row][c];
                    m[r][c] -= &t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free.len() != 1 {
        return Ok(None);
    }
    let f = free[0];
    let mut v = vec![CycNum::zero(); n];
    v[f] = CycNum::one();
    for (r, &c) in pivots.iter().enumerate() {
        v[c] = -&m[r][f];
    }
    if v[0].is_zero() {
        return Ok(None);
    }
    let s = v[0].inv()?;
    Ok(Some(v.iter().map(|x| x * &s).collect()))
}

/// All characters of K(𝓡), found exactly.
///
/// Every character of K(𝓡) takes values in ℤ[a] and is separated by its
/// value on `X₁`, so each one is the normalized kernel of `N₁ᵀ − t` for
/// some small `t = c₀ + c₁a + c₂a²`. The scan stops once six are found,
/// which is all of them since the ring is commutative of rank 6.
pub fn characters_r() -> Result<Vec<Vec<CycNum>>> {
    let ring = builtin_r();
    let a = crate::cyclotomic::units::a();
    let a2 = &a * &a;
    let mut out: Vec<Vec<CycNum>> = Vec::new();
    for c0 in -3i64..=3 {
        for c1 in -3i64..=3 {
            for c2 in -3i64..=3 {
                let t = &(&CycNum::from_integer(c0) + &a.scale_int(c1)) + &a2.scale_int(c2);
                // row j: χ(X₁)χ(X_j) = Σₖ N(1, j, k) χ(X_k)
                let m: Vec<Vec<CycNum>> = (0..6)
                    .map(|j| {
                        (0..6)
                            .map(|k| {
                                let mut e = CycNum::from_integer(ring.n(1, j, k) as i64);
                                if j == k {
                                    e -= &t;
                                }
                                e
                            })
                            .collect()
                    })
                    .collect();
                let Some(chi) = normalized_kernel_line(m)? else {
                    continue;
                };
                if chi[1] == t && check_dim_hom(&ring, &chi) && !out.contains(&chi) {
                    out.push(chi);
                }
            }
        }
    }
    if out.len() != 6 {
        return Err(CertError::mismatch("ring", format!("found {} characters, expected 6", out.len())));
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::units::*;

    #[test]
    fn only_the_fp_character_is_positive() {
        use crate::certified::{Embedding, Sign, SignContext};
        let chars = characters_r().unwrap();
        let (d, total) = fpdim_data_r().unwrap();
        let mut ctx = SignContext::new();
        let mut positive = Vec::new();
        for chi in &chars {
            let mut pos = true;
            for x in chi {
                pos &= ctx.sign(x, Embedding::Identity).unwrap() == Sign::Positive;
            }
            if pos {
                positive.push(chi.clone());
            }
        }
        assert_eq!(positive, vec![d]);
        // Σ χ(Xᵢ)² are the formal codegrees
        let mut norms: Vec<CycNum> = chars.iter().map(|c| global_dimension(c)).collect();
        let mut want = formal_codegrees_r().unwrap();
        norms.sort();
        want.sort();
        assert_eq!(norms, want);
        assert!(norms.contains(&total));
    }

    #[test]
    fn builtin_entries() {
        let r = builtin_r();
        assert_eq!(r.n(3, 4, 4), 2);
        assert_eq!(r.n(5, 5, 0), 1);
        assert!(r.is_commutative());
    }

    #[test]
    fn trivial_ring_is_valid() {
        let t = FusionRing::trivial();
        assert!(t.validate().is_valid());
        assert!(check_dim_hom(&t, &[CycNum::one()]));
        assert_eq!(global_dimension(&[CycNum::one()]), CycNum::one());
    }

    #[test]
    fn associativity_mutation_detected() {
        let bad = builtin_r().with_entry(1, 1, 1, 1);
        let rep = bad.validate();
        assert!(rep
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Associativity { .. })));
    }

    #[test]
    fn fring_round_trip() {
        let r = builtin_r();
        let back = FusionRing::parse_fring(&r.to_fring()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn fring_errors() {
        assert!(FusionRing::parse_fring("").is_err());
        assert!(FusionRing::parse_fring("rank 1\ndual 0\n").is_err());
        assert!(FusionRing::parse_fring("rank 1\ndual 0\n1 2\n").is_err());
        assert!(FusionRing::parse_fring("rank 1\ndual 0\n1\n1\n").is_err());
        assert!(FusionRing::parse_fring("rank 1 # c\ndual 0\n1 # x\n").is_ok());
    }

    #[test]
    fn fpdims_and_total() {
        let (d, total) = fpdim_data_r().unwrap();
        assert_eq!(total, u2().pow(2).unwrap().scale_int(9));
        assert_eq!(d[3], &u1() * &u2());
    }

    #[test]
    fn all_ones_is_not_a_homomorphism() {
        assert!(!check_dim_hom(&builtin_r(), &vec![CycNum::one(); 6]));
    }

    #[test]
    fn codegrees() {
        let c = formal_codegrees_r().unwrap();
        let nine = CycNum::from_integer(9);
        assert_eq!(c[0], u2().pow(2).unwrap().scale_int(9));
        assert_eq!(c[1], nine);
        assert_eq!(c[3], u1().pow(-2).unwrap().scale_int(9));
        assert_eq!(c[4], (&u1().pow(2).unwrap() * &u2().pow(-2).unwrap()).scale_int(9));
        let z = center_unit_dims_r().unwrap();
        assert_eq!(z[3], monomial(0, 2, 2, 0));
        assert_eq!(z[4], monomial(0, -2, 4, 0));
        assert_eq!(z[1], monomial(0, 0, 2, 0));
    }

    #[test]
    fn product_with_trivial() {
        let r = builtin_r();
        let p = product_ring(&r, &FusionRing::trivial()).unwrap();
        assert_eq!(p.rank(), 6);
        for i in 0..6 {
            for j in 0..6 {
                for k in 0..6 {
                    assert_eq!(p.n(i, j, k), r.n(i, j, k));
                }
            }
        }
    }

    #[test]
    fn product_square_total() {
        let r = builtin_r();
        let p = product_ring(&r, &r).unwrap();
        assert_eq!(p.rank(), 36);
        let (d, total) = fpdim_data_r().unwrap();
        let dp = product_dims(&d, &d);
        assert!(check_dim_hom(&p, &dp));
        assert_eq!(global_dimension(&dp), &total * &total);
    }

    #[test]
    fn product_rejects_invalid() {
        let bad = builtin_r().with_entry(1, 1, 1, 1);
        assert!(product_ring(&bad, &FusionRing::trivial()).is_err());
    }

    #[test]
    fn sigma_permutes_x0_x3_x4() {
        let (d, _) = fpdim_data_r().unwrap();
        let c = galois_candidates(&d, Automorphism::sigma()).unwrap();
        assert_eq!(c[0], vec![3]);
        assert_eq!(c[3], vec![4]);
        assert_eq!(c[4], vec![0]);
        assert_eq!(c[1], vec![1, 2, 5]);
        assert!(galois_perm_on_simples(&d, Automorphism::sigma()).is_err());
        assert_eq!(
            galois_perm_on_simples(&d, Automorphism::identity()).unwrap(),
            (0..6).collect::<Vec<_>>()
        );
    }
}
