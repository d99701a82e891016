//! Exact arithmetic in the cyclotomic field ℚ(ζ₉).
//!
//! Elements are stored in the power basis `{1, ζ, ζ², ζ³, ζ⁴, ζ⁵}` and kept
//! fully reduced modulo Φ₉(x) = x⁶ + x³ + 1, so two elements are equal exactly
//! when their coordinates are equal. The real cubic subfield ℚ(ζ₉)⁺ is not a
//! separate type: real elements are the ones fixed by complex conjugation.
//!
//! The distinguished elements used throughout the crate live in [`units`].

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::error::CycError;

/// Degree of ℚ(ζ₉) over ℚ.
pub const DEGREE: usize = 6;

/// An element of ℚ(ζ₉) in reduced power-basis coordinates.
///
/// The derived `Ord` is the lexicographic order on coordinates. It is a
/// canonical sort key, not the numeric order (use
/// [`crate::certified::certified_compare`] for that).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycNum {
    coeffs: [BigRational; DEGREE],
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduce a coefficient vector of length ≤ 11 modulo Φ₉.
fn reduce(mut c: Vec<BigRational>) -> [BigRational; DEGREE] {
    // x^k = -x^(k-3) - x^(k-6) for k >= 6
    for k in (DEGREE..c.len()).rev() {
        if c[k].is_zero() {
            continue;
        }
        let v = std::mem::replace(&mut c[k], BigRational::zero());
        c[k - 3] -= &v;
        c[k - 6] -= &v;
    }
    c.truncate(DEGREE);
    while c.len() < DEGREE {
        c.push(BigRational::zero());
    }
    c.try_into().expect("length fixed above")
}

impl CycNum {
    pub fn zero() -> Self {
        CycNum {
            coeffs: std::array::from_fn(|_| BigRational::zero()),
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut x = Self::zero();
        x.coeffs[0] = q;
        x
    }

    /// Builds an element from power-basis coordinates `c₀ … c₅`.
    pub fn from_coeffs(coeffs: [BigRational; DEGREE]) -> Self {
        CycNum { coeffs }
    }

    /// Integer coordinates, mostly for tests and fixtures.
    pub fn from_int_coeffs(coeffs: [i64; DEGREE]) -> Self {
        CycNum {
            coeffs: coeffs.map(rat),
        }
    }

    /// ζ₉ᵏ for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let e = k.rem_euclid(9) as usize;
        let mut c = vec![BigRational::zero(); 9];
        c[e] = BigRational::one();
        CycNum { coeffs: reduce(c) }
    }

    pub fn coeffs(&self) -> &[BigRational; DEGREE] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then_some(&self.coeffs[0])
    }

    /// Fixed by complex conjugation, i.e. an element of ℚ(ζ₉)⁺.
    pub fn is_real(&self) -> bool {
        Automorphism::conjugation().apply(self) == *self
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CycNum {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * q),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&rat(n))
    }

    /// Product of all six Galois conjugates; always rational.
    pub fn norm_full(&self) -> BigRational {
        let mut p = self.clone();
        for g in Automorphism::all().filter(|g| !g.is_identity()) {
            p = &p * &g.apply(self);
        }
        p.as_rational()
            .cloned()
            .expect("full norm of a field element is rational")
    }

    /// Exact multiplicative inverse via the product of the other conjugates.
    pub fn inv(&self) -> Result<Self, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        let mut cofactor = CycNum::one();
        for g in Automorphism::all().filter(|g| !g.is_identity()) {
            cofactor = &cofactor * &g.apply(self);
        }
        let norm = (self * &cofactor)
            .as_rational()
            .cloned()
            .expect("product of all conjugates is rational");
        Ok(cofactor.scale(&norm.recip()))
    }

    pub fn checked_div(&self, rhs: &CycNum) -> Result<Self, CycError> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, exp: i64) -> Result<Self, CycError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = CycNum::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Coordinates `(c₀, c₁, c₂)` with `self = c₀ + c₁·a + c₂·a²`, where
    /// `a = −ζ⁴ − ζ⁵ = 2cos(π/9)`. Only real elements have such coordinates.
    pub fn to_real_basis(&self) -> Result<[BigRational; 3], CycError> {
        // a = (0,0,0,0,-1,-1), a^2 = (2,1,-1,0,0,-1): ζ only occurs in a^2.
        let c2 = self.coeffs[1].clone();
        let c1 = -self.coeffs[4].clone();
        let c0 = &self.coeffs[0] - &c2 * rat(2);
        let rebuilt = Self::from_real_basis([c0.clone(), c1.clone(), c2.clone()]);
        if rebuilt != *self {
            return Err(CycError::NotReal);
        }
        Ok([c0, c1, c2])
    }

    pub fn from_real_basis(c: [BigRational; 3]) -> Self {
        let a = units::a();
        let a2 = &a * &a;
        let [c0, c1, c2] = c;
        &(&CycNum::from_rational(c0) + &a.scale(&c1)) + &a2.scale(&c2)
    }

    /// Norm from ℚ(ζ₉)⁺ to ℚ: `x · σ(x) · σ²(x)`.
    pub fn norm_real(&self) -> Result<BigRational, CycError> {
        if !self.is_real() {
            return Err(CycError::NotReal);
        }
        let s = Automorphism::sigma();
        let p = &(self * &s.apply(self)) * &s.apply(&s.apply(self));
        p.as_rational().cloned().ok_or(CycError::NotReal)
    }

    /// Exponent `k` with `self = ζ₉ᵏ`, if the element is a ninth root of unity.
    pub fn ninth_root_exponent(&self) -> Option<u8> {
        (0..9u8).find(|&k| CycNum::zeta_pow(k as i64) == *self)
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum{self}")
    }
}

/// Prints the coordinates `(c₀, …, c₅)` as exact fractions.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<'b> Add<&'b CycNum> for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &'b CycNum) -> CycNum {
        CycNum {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
        }
    }
}

impl<'b> Sub<&'b CycNum> for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &'b CycNum) -> CycNum {
        CycNum {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]),
        }
    }
}

impl<'b> Mul<&'b CycNum> for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &'b CycNum) -> CycNum {
        let mut c = vec![BigRational::zero(); 2 * DEGREE - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] += x * y;
                }
            }
        }
        CycNum { coeffs: reduce(c) }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            coeffs: std::array::from_fn(|i| -self.coeffs[i].clone()),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
        impl<'b> $tr<&'b CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &'b CycNum) -> CycNum {
                (&self).$m(rhs)
            }
        }
        impl $tr<CycNum> for &CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += b;
        }
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a -= b;
        }
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for CycNum {
    fn sum<I: Iterator<Item = CycNum>>(iter: I) -> CycNum {
        iter.fold(CycNum::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for CycNum {
    fn product<I: Iterator<Item = CycNum>>(iter: I) -> CycNum {
        iter.fold(CycNum::one(), |acc, x| &acc * &x)
    }
}

/// A field automorphism `ζ ↦ ζᵏ` of ℚ(ζ₉), `k ∈ {1,2,4,5,7,8}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Automorphism(u8);

const UNITS_MOD_9: [u8; 6] = [1, 2, 4, 5, 7, 8];

static SIGMA: Lazy<Automorphism> = Lazy::new(|| {
    Automorphism::all()
        .filter(|g| g.order() == 6)
        .map(|g| g.compose(g))
        .find(|s| s.satisfies_unit_relations())
        .unwrap_or_else(|| {
            panic!("no square of a generator of Gal(Q(z9)/Q) satisfies the unit relations")
        })
});

impl Automorphism {
    pub fn new(k: i64) -> Result<Self, CycError> {
        let k = k.rem_euclid(9) as u8;
        if UNITS_MOD_9.contains(&k) {
            Ok(Automorphism(k))
        } else {
            Err(CycError::NotAnAutomorphism(k))
        }
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn identity() -> Self {
        Automorphism(1)
    }

    /// Complex conjugation `ζ ↦ ζ⁻¹`.
    pub fn conjugation() -> Self {
        Automorphism(8)
    }

    /// The generator σ of Gal(ℚ(ζ₉)⁺/ℚ), pinned by
    /// `σ(u₁) = −u₁⁻¹u₂` and `σ(u₂) = u₁⁻¹`.
    ///
    /// Chosen as the square of a generator of the full Galois group and
    /// checked against those relations on first use; a failed check panics.
    pub fn sigma() -> Self {
        *SIGMA
    }

    pub fn all() -> impl Iterator<Item = Automorphism> {
        UNITS_MOD_9.iter().map(|&k| Automorphism(k))
    }

    pub fn is_identity(self) -> bool {
        self.0 == 1
    }

    /// `self ∘ other`, i.e. multiplication of exponents mod 9.
    pub fn compose(self, other: Automorphism) -> Self {
        Automorphism(((self.0 as u16 * other.0 as u16) % 9) as u8)
    }

    pub fn pow(self, n: u32) -> Self {
        (0..n).fold(Automorphism::identity(), |acc, _| acc.compose(self))
    }

    pub fn inverse(self) -> Self {
        self.pow(self.order() - 1)
    }

    pub fn order(self) -> u32 {
        (1..=6).find(|&n| self.pow(n).is_identity()).unwrap_or(6)
    }

    /// True when the automorphism fixes ℚ(ζ₉)⁺ pointwise (`k = ±1`).
    pub fn is_trivial_on_real(self) -> bool {
        self.0 == 1 || self.0 == 8
    }

    pub fn apply(self, x: &CycNum) -> CycNum {
        let mut c = vec![BigRational::zero(); 9];
        for (i, v) in x.coeffs.iter().enumerate() {
            if !v.is_zero() {
                c[(i * self.0 as usize) % 9] += v;
            }
        }
        CycNum { coeffs: reduce(c) }
    }

    fn satisfies_unit_relations(self) -> bool {
        let (u1, u2) = (units::u1(), units::u2());
        let u1_inv = u1.inv().expect("u1 is a unit");
        self.apply(&u1) == -(&u1_inv * &u2) && self.apply(&u2) == u1_inv
    }
}

/// Distinguished elements of ℚ(ζ₉).
pub mod units {
    use super::*;

    static U1: Lazy<CycNum> = Lazy::new(|| CycNum::from_int_coeffs([0, 1, -1, 0, 0, -1]));
    static U2: Lazy<CycNum> = Lazy::new(|| CycNum::from_int_coeffs([1, 0, 0, 0, -1, -1]));
    static BETA: Lazy<CycNum> = Lazy::new(|| CycNum::from_int_coeffs([2, 0, 0, 0, -1, -1]));
    static A: Lazy<CycNum> = Lazy::new(|| CycNum::from_int_coeffs([0, 0, 0, 0, -1, -1]));

    /// ζ₉.
    pub fn zeta() -> CycNum {
        CycNum::zeta_pow(1)
    }

    /// `a = 2cos(π/9) = −ζ⁴ − ζ⁵`, the largest root of `x³ − 3x − 1`.
    pub fn a() -> CycNum {
        A.clone()
    }

    /// `u₁ = ζ − ζ² − ζ⁵ = a² − 2`.
    pub fn u1() -> CycNum {
        U1.clone()
    }

    /// `u₂ = 1 − ζ⁴ − ζ⁵`.
    pub fn u2() -> CycNum {
        U2.clone()
    }

    /// `β = 2 − ζ⁴ − ζ⁵`, the real cube root of `3u₁²u₂²`.
    pub fn beta() -> CycNum {
        BETA.clone()
    }

    /// `3^p · u₁^x · u₂^y · β^z`.
    pub fn monomial(p: u32, x: i64, y: i64, z: i64) -> CycNum {
        let three = CycNum::from_integer(3i64.pow(p));
        let unit = &U1.pow(x).expect("unit") * &U2.pow(y).expect("unit");
        &(&three * &unit) * &BETA.pow(z).expect("beta is nonzero")
    }

    /// The unit and Galois identities the later stages rely on, each
    /// checked exactly.
    pub fn kernel_identities() -> Vec<(&'static str, bool)> {
        let s = Automorphism::sigma();
        let (u1, u2, b, a) = (u1(), u2(), beta(), a());
        let u1_inv = u1.inv().expect("u1 is a unit");
        let u2_inv = u2.inv().expect("u2 is a unit");
        let three = CycNum::from_integer(3);
        let sqrt_3b = &(&u1_inv * &u2_inv) * &(&b * &b);
        vec![
            ("sigma_u1", s.apply(&u1) == -(&u1_inv * &u2)),
            ("sigma_u2", s.apply(&u2) == u1_inv),
            ("sigma_order_3", s.order() == 3),
            ("a_minimal_polynomial", (&(&(&(&a * &a) * &a) - &a.scale_int(3)) - &CycNum::one()).is_zero()),
            ("u1_is_a2_minus_2", u1 == &(&a * &a) - &CycNum::from_integer(2)),
            ("beta_cubed", &(&b * &b) * &b == &three * &(&(&u1 * &u1) * &(&u2 * &u2))),
            ("sqrt_3beta", &sqrt_3b * &sqrt_3b == &three * &b),
            ("zeta_order_9", zeta().pow(9).map(|x| x.is_one()).unwrap_or(false) && !zeta().pow(3).map(|x| x.is_one()).unwrap_or(true)),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::units::*;
    use super::*;
    use num_traits::Signed;

    #[test]
    fn zeta_cubed_squared_reduces() {
        let z3 = CycNum::zeta_pow(3);
        assert_eq!(&z3 * &z3, CycNum::from_int_coeffs([-1, 0, 0, -1, 0, 0]));
    }

    #[test]
    fn cyclotomic_polynomial_vanishes() {
        let z = zeta();
        let phi = &(&z.pow(6).unwrap() + &z.pow(3).unwrap()) + &CycNum::one();
        assert!(phi.is_zero());
        assert!(z.pow(9).unwrap().is_one());
        assert!(!z.pow(3).unwrap().is_one());
    }

    #[test]
    fn u1_u2_product_coordinates() {
        // frozen from an independent schoolbook-multiply-then-reduce oracle
        let expect = CycNum::from_int_coeffs([1, 1, -1, 0, -1, -2]);
        assert_eq!(&u1() * &u2(), expect);
    }

    #[test]
    fn beta_cubed() {
        let b3 = beta().pow(3).unwrap();
        let rhs = (u1().pow(2).unwrap() * u2().pow(2).unwrap()).scale_int(3);
        assert_eq!(b3, rhs);
    }

    #[test]
    fn a_is_root_of_cubic_and_u1_relation() {
        let a = a();
        let lhs = &(&a.pow(3).unwrap() - &a.scale_int(3)) - &CycNum::one();
        assert!(lhs.is_zero());
        assert_eq!(&a * &a - CycNum::from_integer(2), u1());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(CycNum::zero().inv(), Err(CycError::DivisionByZero));
        assert!(u1().checked_div(&CycNum::zero()).is_err());
    }

    #[test]
    fn sigma_relations_and_exponent() {
        let s = Automorphism::sigma();
        assert_eq!(s.order(), 3);
        let u1i = u1().inv().unwrap();
        assert_eq!(s.apply(&u1()), -(&u1i * &u2()));
        assert_eq!(s.apply(&u2()), u1i);
        // σ(β) = u₁⁻²β and σ²(β) = u₂⁻²β
        assert_eq!(s.apply(&beta()), monomial(0, -2, 0, 1));
        assert_eq!(s.pow(2).apply(&beta()), monomial(0, 0, -2, 1));
    }

    #[test]
    fn identity_and_group_law() {
        let x = CycNum::from_int_coeffs([3, -1, 4, 1, -5, 9]);
        assert_eq!(Automorphism::identity().apply(&x), x);
        for g in Automorphism::all() {
            for h in Automorphism::all() {
                assert_eq!(g.apply(&h.apply(&x)), g.compose(h).apply(&x));
            }
            assert!(g.compose(g.inverse()).is_identity());
        }
        assert_eq!(Automorphism::all().filter(|g| g.order() == 6).count(), 2);
    }

    #[test]
    fn conjugation_fixes_real_elements_only() {
        for x in [u1(), u2(), beta(), a(), CycNum::from_integer(7)] {
            assert!(x.is_real());
        }
        assert!(!zeta().is_real());
        assert!(!CycNum::zeta_pow(3).is_real());
    }

    #[test]
    fn norms() {
        let n = u2().norm_real().unwrap();
        assert_eq!(n.abs(), BigRational::one());
        assert_eq!(beta().norm_real().unwrap(), rat(3));
        assert_eq!(CycNum::from_integer(3).norm_real().unwrap(), rat(27));
        assert_eq!(zeta().norm_real(), Err(CycError::NotReal));
    }

    #[test]
    fn real_basis_round_trip() {
        let x = monomial(1, -1, 2, 1);
        let c = x.to_real_basis().unwrap();
        assert_eq!(CycNum::from_real_basis(c), x);
        assert_eq!(zeta().to_real_basis(), Err(CycError::NotReal));
    }

    #[test]
    fn automorphism_rejects_non_units() {
        assert!(Automorphism::new(3).is_err());
        assert!(Automorphism::new(0).is_err());
        assert_eq!(Automorphism::new(-1).unwrap(), Automorphism::conjugation());
    }

    #[test]
    fn ninth_root_exponents() {
        for k in 0..9 {
            assert_eq!(CycNum::zeta_pow(k).ninth_root_exponent(), Some(k as u8));
        }
        assert_eq!(u1().ninth_root_exponent(), None);
    }
}
