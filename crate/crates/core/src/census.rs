//! Census of totally positive d-numbers in ℚ(ζ₉)⁺ and the table of
//! candidate center dimensions with their forgetful profiles.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::certified::{Embedding, Sign, SignContext};
use crate::cyclotomic::units::{beta, monomial, u1, u2};
use crate::cyclotomic::{Automorphism, CycNum};
use crate::error::{CertError, Result};
use crate::fusion::center_unit_dims_r;

/// `3ᵃ (u₁ᵇ u₂ᶜ)² βᵈ`, a candidate squared dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DNumber {
    pub a: u32,
    pub b: i64,
    pub c: i64,
    pub d: u32,
}

impl DNumber {
    pub fn new(a: u32, b: i64, c: i64, d: u32) -> Self {
        DNumber { a, b, c, d }.normalized()
    }

    /// Fold `β³ = 3u₁²u₂²` so that `d ∈ {0,1,2}`.
    fn normalized(mut self) -> Self {
        while self.d >= 3 {
            self.d -= 3;
            self.a += 1;
            self.b += 1;
            self.c += 1;
        }
        self
    }

    pub fn value(&self) -> CycNum {
        monomial(self.a, 2 * self.b, 2 * self.c, self.d as i64)
    }

    pub fn mul(&self, o: &DNumber) -> DNumber {
        DNumber::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }

    /// Exponents of the Galois orbit `(n, σ(n), σ²(n))`.
    pub fn orbit_conjugates(&self) -> [DNumber; 3] {
        let s = -(self.b + self.c + self.d as i64);
        [
            *self,
            DNumber { b: s, c: self.b, ..*self },
            DNumber { b: self.c, c: s, ..*self },
        ]
    }

    /// Squared dimension of `σ̂(X)` when `self` is `dim(X)²`, normalized by
    /// the center's global dimension `81u₂⁴`.
    pub fn gaal_sigma(&self) -> DNumber {
        let [_, s, _] = self.orbit_conjugates();
        DNumber {
            b: s.b + 2,
            c: s.c + 2,
            ..s
        }
    }

    /// The three squared dimensions of a dimensional Galois orbit.
    pub fn gaal_orbit(&self) -> [DNumber; 3] {
        let s1 = self.gaal_sigma();
        [*self, s1, s1.gaal_sigma()]
    }

    /// `a ≡ d (mod 2)`.
    pub fn is_perfect_square(&self) -> bool {
        self.a % 2 == self.d % 2
    }

    /// The positive square root as a dimension monomial, when it exists.
    pub fn sqrt(&self) -> Option<DimMonomial> {
        if !self.is_perfect_square() {
            return None;
        }
        Some(match self.d {
            0 => DimMonomial::new(self.a / 2, self.b, self.c, 0),
            2 => DimMonomial::new(self.a / 2, self.b, self.c, 1),
            // √(3β) = u₁⁻¹u₂⁻¹β²
            _ => DimMonomial::new((self.a - 1) / 2, self.b - 1, self.c - 1, 2),
        })
    }
}

impl fmt::Display for DNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.b, self.c, self.d)
    }
}

/// A positive real monomial `3ᵖ u₁ˣ u₂ʸ βᶻ` with `z ∈ {0,1,2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimMonomial {
    pub p: u32,
    pub x: i64,
    pub y: i64,
    pub z: u32,
}

impl DimMonomial {
    pub fn new(p: u32, x: i64, y: i64, z: u32) -> Self {
        let mut m = DimMonomial { p, x, y, z };
        while m.z >= 3 {
            m.z -= 3;
            m.p += 1;
            m.x += 2;
            m.y += 2;
        }
        m
    }

    pub const ONE: DimMonomial = DimMonomial { p: 0, x: 0, y: 0, z: 0 };

    pub fn value(&self) -> CycNum {
        monomial(self.p, self.x, self.y, self.z as i64)
    }

    pub fn square(&self) -> DNumber {
        // (3ᵖ u₁ˣ u₂ʸ βᶻ)² = 3^{2p} (u₁ˣu₂ʸ)² β^{2z}
        DNumber::new(2 * self.p, self.x, self.y, 2 * self.z)
    }

    /// `dim(σ̂(X))` for `dim(X) = self`: `σ(dim)·u₁²u₂²` up to sign.
    pub fn gaal_sigma(&self) -> DimMonomial {
        DimMonomial {
            p: self.p,
            x: 2 - self.x - self.y - 2 * self.z as i64,
            y: self.x + 2,
            z: self.z,
        }
    }

    pub fn gaal_orbit(&self) -> [DimMonomial; 3] {
        let s1 = self.gaal_sigma();
        [*self, s1, s1.gaal_sigma()]
    }

    /// Write a real element as a monomial, if it is one.
    ///
    /// The norm fixes `3p + z`; the remaining unit is matched exactly
    /// against `±u₁ˣu₂ʸ` over a bounded exponent window.
    pub fn recognize(v: &CycNum) -> Result<Option<DimMonomial>> {
        let n = v.norm_real()?;
        if n.is_zero() || !n.denom().is_one() {
            return Ok(None);
        }
        let Some(k) = three_adic_power(n.numer()) else {
            return Ok(None);
        };
        let (p, z) = (k / 3, k % 3);
        let base = monomial(p, 0, 0, z as i64);
        let unit = v.checked_div(&base)?;
        const WINDOW: i64 = 16;
        for x in -WINDOW..=WINDOW {
            let ux = u1().pow(x)?;
            for y in -WINDOW..=WINDOW {
                let w = &ux * &u2().pow(y)?;
                if w == unit {
                    return Ok(Some(DimMonomial { p, x, y, z }));
                }
            }
        }
        Ok(None)
    }
}

impl fmt::Display for DimMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.p {
            0 => {}
            1 => parts.push("3".to_string()),
            p => parts.push(format!("3^{p}")),
        }
        for (name, e) in [("u1", self.x), ("u2", self.y), ("beta", self.z as i64)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

impl std::str::FromStr for DimMonomial {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut m = DimMonomial::ONE;
        if s == "1" {
            return Ok(m);
        }
        for part in s.split('*') {
            let (name, exp) = match part.split_once('^') {
                Some((n, e)) => (n, e.parse::<i64>().map_err(|_| format!("bad exponent in {part}"))?),
                None => (part, 1),
            };
            match name {
                "3" if exp >= 0 => m.p += exp as u32,
                "u1" => m.x += exp,
                "u2" => m.y += exp,
                "beta" if exp >= 0 => m.z += exp as u32,
                _ => return Err(format!("unknown factor {part}")),
            }
        }
        Ok(DimMonomial::new(m.p, m.x, m.y, m.z))
    }
}

fn three_adic_power(n: &BigInt) -> Option<u32> {
    let three = BigInt::from(3);
    let mut m = n.abs();
    let mut k = 0;
    while m > BigInt::one() {
        let (q, r) = m.div_rem(&three);
        if !r.is_zero() {
            return None;
        }
        m = q;
        k += 1;
    }
    (m == BigInt::one()).then_some(k)
}

/// Whether `±u₁ˣu₂ʸ` is totally positive, decided by the parity rule and by
/// certified signs at all three embeddings; the two must agree.
pub fn totally_positive_unit_classify(
    ctx: &mut SignContext,
    positive: bool,
    x: i64,
    y: i64,
) -> Result<bool> {
    let parity = positive && x % 2 == 0 && y % 2 == 0;
    let mut v = monomial(0, x, y, 0);
    if !positive {
        v = -v;
    }
    let signs = ctx.is_totally_positive(&v)?;
    if parity != signs {
        return Err(CertError::mismatch(
            "census",
            format!("parity rule and certified signs disagree on {}u1^{x}u2^{y}", if positive { "+" } else { "-" }),
        ));
    }
    Ok(signs)
}

/// Orbit conjugates of `n`, checked against the Galois action on values.
pub fn orbit_conjugates(n: &DNumber) -> Result<[DNumber; 3]> {
    let conj = n.orbit_conjugates();
    let s = Automorphism::sigma();
    let v = n.value();
    if s.apply(&v) != conj[1].value() || s.pow(2).apply(&v) != conj[2].value() {
        return Err(CertError::mismatch("census", format!("orbit formula fails for {n}")));
    }
    Ok(conj)
}

/// `n ≥ σ(n)` and `n ≥ σ²(n)` under the identity embedding, decided exactly.
pub fn is_orbit_max(ctx: &mut SignContext, n: &DNumber) -> Result<bool> {
    let conj = n.orbit_conjugates();
    let v = n.value();
    for c in &conj[1..] {
        if ctx.compare(&v, &c.value())? == Ordering::Less {
            return Ok(false);
        }
    }
    Ok(true)
}

pub const UPPER_BOUND: i64 = 3938;
pub const LOWER_BOUND: i64 = 49;

/// Grid scanned by the census: `a ∈ 0..=4, b ∈ −2..=4, c ∈ 0..=6, d ∈ 0..=2`.
pub fn census_grid() -> Vec<DNumber> {
    let mut out = Vec::new();
    for a in 0..=4 {
        for b in -2..=4 {
            for c in 0..=6 {
                for d in 0..=2 {
                    out.push(DNumber { a, b, c, d });
                }
            }
        }
    }
    out
}

fn census_accepts(ctx: &mut SignContext, n: &DNumber) -> Result<bool> {
    if !n.is_perfect_square() {
        return Ok(false);
    }
    let orbit = n.gaal_orbit();
    for m in &orbit {
        if !is_orbit_max(ctx, m)? {
            return Ok(false);
        }
    }
    let hi = CycNum::from_integer(UPPER_BOUND);
    let lo = CycNum::from_integer(LOWER_BOUND);
    for m in &orbit {
        let v = m.value();
        if ctx.compare(&v, &hi)? != Ordering::Less || ctx.compare(&v, &lo)? != Ordering::Greater {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All grid points that are perfect squares, orbit-maximal along their
/// dimensional Galois orbit, and whose orbit lies in `(49, 3938)`.
pub fn enumerate_candidate_squared_dims() -> Result<Vec<DNumber>> {
    let grid = census_grid();
    let flags: Vec<bool> = grid
        .par_iter()
        .map_init(SignContext::new, census_accepts)
        .collect::<Result<_>>()?;
    Ok(grid
        .into_iter()
        .zip(flags)
        .filter_map(|(n, ok)| ok.then_some(n))
        .collect())
}

/// `x·u₂ + y·u₁u₂ + z·u₁⁻¹u₂²`, the dimension of a profile without `X₀`.
pub fn profile_value(x: u32, y: u32, z: u32) -> CycNum {
    let (a, b) = (u1(), u2());
    let d1 = b.clone();
    let d3 = &a * &b;
    let d4 = &a.inv().expect("unit") * &b.pow(2).expect("unit");
    &(&d1.scale_int(x as i64) + &d3.scale_int(y as i64)) + &d4.scale_int(z as i64)
}

#[derive(Clone, Debug)]
pub struct SmallDim {
    pub x: u32,
    pub y: u32,
    pub z: u32,
    pub value: CycNum,
    pub norm: BigRational,
}

/// Nonzero `(x,y,z) ∈ {0,1,2}³` whose value has norm `±3ⁿ`, sorted by value.
pub fn small_dimension_scan(ctx: &mut SignContext) -> Result<Vec<SmallDim>> {
    let mut out = Vec::new();
    for x in 0..3 {
        for y in 0..3 {
            for z in 0..3 {
                if x + y + z == 0 {
                    continue;
                }
                let value = profile_value(x, y, z);
                let norm = value.norm_real()?;
                if norm.denom().is_one() && three_adic_power(norm.numer()).is_some() {
                    out.push(SmallDim { x, y, z, value, norm });
                }
            }
        }
    }
    let mut err = None;
    out.sort_by(|p, q| match ctx.compare(&p.value, &q.value) {
        Ok(o) => o.then((p.x, p.y, p.z).cmp(&(q.x, q.y, q.z))),
        Err(e) => {
            err = Some(e);
            Ordering::Equal
        }
    });
    if let Some(e) = err {
        return Err(e.into());
    }
    Ok(out)
}

/// Multiplicities `(m0, m125, m3, m4)` of `F(X)` in the basis
/// `(X₀, X₁⊕X₂⊕X₅, X₃, X₄)`.
pub type Profile = [u32; 4];

/// All `(m0, x, y, z)` with `m0 + x·u₂ + y·u₁u₂ + z·u₁⁻¹u₂² = dim`;
/// `m0 = 1` is considered only when `allow_m0`.
pub fn profile_solutions(ctx: &mut SignContext, dim: &CycNum, allow_m0: bool) -> Result<Vec<Profile>> {
    let (a, b) = (u1(), u2());
    let basis = [b.clone(), &a * &b, &a.inv()? * &b.pow(2)?];
    let bound = |ctx: &mut SignContext, x: &CycNum| -> Result<u32> {
        let f = ctx.floor_ratio(dim, x)?;
        Ok(f.max(BigInt::zero()).to_u32().unwrap_or(u32::MAX))
    };
    let bx = bound(ctx, &basis[0])?;
    let by = bound(ctx, &basis[1])?;
    let bz = bound(ctx, &basis[2])?;
    let mut out = Vec::new();
    for m0 in 0..=u32::from(allow_m0) {
        for x in 0..=bx {
            for y in 0..=by {
                for z in 0..=bz {
                    let v = &profile_value(x, y, z) + &CycNum::from_integer(m0 as i64);
                    if &v == dim {
                        out.push([m0, x, y, z]);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// A row of the candidate-dimension table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForgetfulProfile {
    pub label: usize,
    pub orbit: usize,
    pub dim: DimMonomial,
    pub m0: u32,
    pub m125: u32,
    pub m3: u32,
    pub m4: u32,
}

impl ForgetfulProfile {
    pub fn profile(&self) -> Profile {
        [self.m0, self.m125, self.m3, self.m4]
    }

    pub fn to_tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.orbit, self.label, self.dim, self.m0, self.m125, self.m3, self.m4
        )
    }
}

/// Header line of the table in TSV form.
pub const FIGURE3_HEADER: &str = "orbit\tlabel\tdim\tm0\tm125\tm3\tm4";

pub fn figure3_tsv(rows: &[ForgetfulProfile]) -> String {
    let mut s = String::from(FIGURE3_HEADER);
    s.push('\n');
    for r in rows {
        s.push_str(&r.to_tsv_row());
        s.push('\n');
    }
    s
}

/// A dimensional Galois orbit type: its members in `(rep, σ̂, σ̂²)` order
/// (deduplicated) and whether `F(X)` contains `X₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitType {
    pub members: Vec<DimMonomial>,
    pub has_unit: bool,
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub grid_size: usize,
    pub candidates: Vec<DNumber>,
    pub small: Vec<SmallDim>,
    pub orbit_types: Vec<OrbitType>,
    pub rows: Vec<ForgetfulProfile>,
    pub distinct_dims: usize,
}

fn orbit_from_rep(ctx: &mut SignContext, any: DimMonomial) -> Result<Vec<DimMonomial>> {
    let orbit = any.gaal_orbit();
    // start from the smallest member
    let mut rep = orbit[0];
    for m in &orbit[1..] {
        if ctx.compare(&m.value(), &rep.value())? == Ordering::Less {
            rep = *m;
        }
    }
    let mut out: Vec<DimMonomial> = Vec::new();
    for m in rep.gaal_orbit() {
        if !out.contains(&m) {
            out.push(m);
        }
    }
    Ok(out)
}

/// Check `dim(σ̂X)² = σ(dim(X)²)·D/σ(D)` with `D = 81u₂⁴`, and positivity.
fn check_gaal(ctx: &mut SignContext, m: &DimMonomial) -> Result<()> {
    let s = Automorphism::sigma();
    let dz = monomial(4, 0, 4, 0);
    let ratio = dz.checked_div(&s.apply(&dz))?;
    let img = m.gaal_sigma();
    let lhs = img.value();
    let sq = m.value();
    let rhs = &s.apply(&(&sq * &sq)) * &ratio;
    if &lhs * &lhs != rhs || ctx.sign(&lhs, Embedding::Identity)? != Sign::Positive {
        return Err(CertError::mismatch("census", format!("galois normalization fails at {m}")));
    }
    Ok(())
}

/// Build the 21-row table of candidate center dimensions.
///
/// Orbit types are: the unit orbit (dimensions of `Z₀, Z₃, Z₄`), the
/// `u₂²` singleton of `Z₁, Z₂, Z₅`, and for every dimensional orbit found
/// by the small scan or the census a type without `X₀`. Types are sorted by
/// smallest member, ties putting the `X₀` type first.
pub fn build_figure3() -> Result<CensusReport> {
    let mut ctx = SignContext::new();
    let grid_size = census_grid().len();
    let candidates = enumerate_candidate_squared_dims()?;
    let small = small_dimension_scan(&mut ctx)?;

    let z = center_unit_dims_r()?;
    let recog = |v: &CycNum| -> Result<DimMonomial> {
        DimMonomial::recognize(v)?
            .ok_or_else(|| CertError::mismatch("census", format!("{v} is not a monomial")))
    };
    let unit_orbit = orbit_from_rep(&mut ctx, recog(&z[0])?)?;
    for (i, m) in [0usize, 3, 4].iter().zip(&unit_orbit) {
        if recog(&z[*i])? != *m {
            return Err(CertError::mismatch("census", "Z0, Z3, Z4 do not form a galois orbit"));
        }
    }
    let z_orbit = orbit_from_rep(&mut ctx, recog(&z[1])?)?;

    // the three smallest values from the scan, then the census orbits
    let mut seeds: Vec<DimMonomial> = Vec::new();
    for s in small.iter().take(3) {
        seeds.push(recog(&s.value)?);
    }
    for n in &candidates {
        seeds.push(n.sqrt().ok_or_else(|| CertError::mismatch("census", "non-square candidate"))?);
    }

    let mut types: Vec<OrbitType> = vec![
        OrbitType { members: unit_orbit.clone(), has_unit: true },
        OrbitType { members: z_orbit, has_unit: true },
    ];
    for s in seeds {
        let members = orbit_from_rep(&mut ctx, s)?;
        if members == unit_orbit {
            continue;
        }
        let t = OrbitType { members, has_unit: false };
        if !types.contains(&t) {
            types.push(t);
        }
    }
    for t in &types {
        for m in &t.members {
            check_gaal(&mut ctx, m)?;
        }
    }

    let mut err = None;
    types.sort_by(|p, q| {
        match ctx.compare(&p.members[0].value(), &q.members[0].value()) {
            Ok(o) => o.then(q.has_unit.cmp(&p.has_unit)),
            Err(e) => {
                err = Some(e);
                Ordering::Equal
            }
        }
    });
    if let Some(e) = err {
        return Err(e.into());
    }

    let mut rows = Vec::new();
    for (orbit, t) in types.iter().enumerate() {
        for m in &t.members {
            let sols = profile_solutions(&mut ctx, &m.value(), t.has_unit)?;
            let want = u32::from(t.has_unit);
            let pick: Vec<&Profile> = sols.iter().filter(|p| p[0] == want).collect();
            let [p] = pick.as_slice() else {
                return Err(CertError::mismatch(
                    "census",
                    format!("dimension {m} has {} profiles with m0={want}", pick.len()),
                ));
            };
            rows.push(ForgetfulProfile {
                label: rows.len(),
                orbit,
                dim: *m,
                m0: p[0],
                m125: p[1],
                m3: p[2],
                m4: p[3],
            });
        }
    }
    let mut dims: Vec<DimMonomial> = rows.iter().map(|r| r.dim).collect();
    dims.sort();
    dims.dedup();
    Ok(CensusReport {
        grid_size,
        candidates,
        small,
        orbit_types: types,
        distinct_dims: dims.len(),
        rows,
    })
}

/// Whether `dim(𝒵)/x` is an algebraic integer (integral `{1,a,a²}`
/// coordinates).
pub fn divides_center_dim(x: &CycNum) -> Result<bool> {
    let q = monomial(4, 0, 4, 0).checked_div(x)?;
    Ok(q.to_real_basis()?.iter().all(|c| c.denom().is_one()))
}

/// `β`, re-exported for tests that need the raw element.
pub fn beta_value() -> CycNum {
    beta()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dn(a: u32, b: i64, c: i64, d: u32) -> DNumber {
        DNumber::new(a, b, c, d)
    }

    #[test]
    fn unit_classification_examples() {
        let mut ctx = SignContext::new();
        assert!(totally_positive_unit_classify(&mut ctx, true, 2, 4).unwrap());
        assert!(!totally_positive_unit_classify(&mut ctx, true, 1, 0).unwrap());
        assert!(!totally_positive_unit_classify(&mut ctx, false, 0, 0).unwrap());
    }

    #[test]
    fn conjugates_examples() {
        let one = dn(0, 0, 0, 0);
        assert_eq!(orbit_conjugates(&one).unwrap(), [one; 3]);
        let b = dn(0, 0, 0, 1);
        let c = orbit_conjugates(&b).unwrap();
        assert_eq!(c[1].value(), &u1().pow(-2).unwrap() * &beta());
        assert_eq!(c[2].value(), &u2().pow(-2).unwrap() * &beta());
        let c = orbit_conjugates(&dn(0, 1, 1, 0)).unwrap();
        let bc: Vec<_> = c.iter().map(|n| (n.b, n.c)).collect();
        assert_eq!(bc, vec![(1, 1), (-2, 1), (1, -2)]);
    }

    #[test]
    fn orbit_max_examples() {
        let mut ctx = SignContext::new();
        assert!(is_orbit_max(&mut ctx, &dn(0, 0, 0, 1)).unwrap());
        assert!(!is_orbit_max(&mut ctx, &dn(0, -1, 0, 1)).unwrap());
        assert!(is_orbit_max(&mut ctx, &dn(1, 0, 0, 0)).unwrap());
    }

    #[test]
    fn perfect_squares() {
        let n = dn(1, 0, 0, 1);
        assert!(n.is_perfect_square());
        let r = n.sqrt().unwrap();
        assert_eq!(r, DimMonomial::new(0, -1, -1, 2));
        let v = r.value();
        assert_eq!(&v * &v, n.value());
        assert!(!dn(0, 0, 0, 1).is_perfect_square());
        let r = dn(0, 3, -1, 0).sqrt().unwrap();
        assert_eq!(r.value(), monomial(0, 3, -1, 0));
    }

    #[test]
    fn beta_cube_normalizes() {
        assert_eq!(dn(0, 0, 0, 3), dn(1, 1, 1, 0));
        assert_eq!(dn(0, 0, 0, 3).value(), beta().pow(3).unwrap());
    }

    #[test]
    fn gaal_formula_matches_exponents() {
        let n = dn(0, 1, 1, 0);
        assert_eq!(n.gaal_sigma(), DNumber::new(0, 2 - 2, 1 + 2, 0));
        let m = DimMonomial::new(0, 1, 1, 0);
        assert_eq!(m.gaal_sigma().square(), m.square().gaal_sigma());
    }

    #[test]
    fn monomial_display_round_trip() {
        for m in [
            DimMonomial::ONE,
            DimMonomial::new(0, -1, 1, 1),
            DimMonomial::new(1, -1, 3, 0),
            DimMonomial::new(0, -2, 1, 2),
        ] {
            let s = m.to_string();
            assert_eq!(s.parse::<DimMonomial>().unwrap(), m, "{s}");
        }
        assert_eq!(DimMonomial::new(0, -1, 1, 1).to_string(), "u1^-1*u2*beta");
        assert_eq!(DimMonomial::new(1, 0, 2, 0).to_string(), "3*u2^2");
    }

    #[test]
    fn recognize_monomials() {
        for m in [DimMonomial::new(0, -1, 1, 1), DimMonomial::new(1, 2, -3, 2), DimMonomial::ONE] {
            assert_eq!(DimMonomial::recognize(&m.value()).unwrap(), Some(m));
        }
        assert_eq!(DimMonomial::recognize(&CycNum::from_integer(2)).unwrap(), None);
    }

    #[test]
    fn profile_examples() {
        let mut ctx = SignContext::new();
        assert_eq!(profile_solutions(&mut ctx, &u2(), false).unwrap(), vec![[0, 1, 0, 0]]);
        let d9 = DimMonomial::new(0, -1, 1, 1).value();
        assert_eq!(profile_solutions(&mut ctx, &d9, false).unwrap(), vec![[0, 1, 1, 0]]);
        let d20 = DimMonomial::new(1, 0, 2, 0).value();
        assert_eq!(profile_solutions(&mut ctx, &d20, false).unwrap(), vec![[0, 3, 0, 3]]);
        let d12 = DimMonomial::new(0, 0, 2, 0).value();
        assert_eq!(
            profile_solutions(&mut ctx, &d12, true).unwrap(),
            vec![[0, 1, 0, 1], [1, 1, 1, 0]]
        );
    }

    #[test]
    fn small_scan_order() {
        let mut ctx = SignContext::new();
        let s = small_dimension_scan(&mut ctx).unwrap();
        let first: Vec<_> = s.iter().take(4).map(|d| (d.x, d.y, d.z)).collect();
        assert_eq!(first, vec![(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0)]);
        assert_eq!(s[3].value, DimMonomial::new(0, -1, 1, 1).value());
    }

    #[test]
    fn census_excludes_parity_violations() {
        let c = enumerate_candidate_squared_dims().unwrap();
        assert!(c.iter().all(|n| n.is_perfect_square()));
        assert!(!c.iter().any(|n| n.a == 1 && n.d == 0));
    }
}
