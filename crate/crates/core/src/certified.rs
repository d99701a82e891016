//! Certified sign, comparison and floor for real elements of ℚ(ζ₉).
//!
//! A real element is written as `c₀ + c₁a + c₂a²` with `a` a root of
//! `x³ − 3x − 1`. Each real embedding picks one of the three roots; we keep a
//! dyadic isolating interval for every root and evaluate the element with
//! rational interval arithmetic. Zero is detected from the coordinates, so a
//! nonzero element always has an interval that eventually excludes zero and
//! refinement terminates.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::{Automorphism, CycNum};
use crate::error::CycError;

/// Starting precision (bits) of the root intervals.
pub const INITIAL_PRECISION: u32 = 64;

/// One of the three real embeddings of ℚ(ζ₉)⁺.
///
/// `Identity` sends `a ↦ 2cos(π/9)`; `Sigma` is the identity embedding
/// precomposed with σ (`a ↦ 2cos(5π/9)`), and `SigmaSquared` with σ²
/// (`a ↦ 2cos(7π/9)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Embedding {
    Identity,
    Sigma,
    SigmaSquared,
}

impl Embedding {
    pub const ALL: [Embedding; 3] = [Embedding::Identity, Embedding::Sigma, Embedding::SigmaSquared];

    fn index(self) -> usize {
        match self {
            Embedding::Identity => 0,
            Embedding::Sigma => 1,
            Embedding::SigmaSquared => 2,
        }
    }

    /// The Galois power `k` with `self(x) = identity(σᵏ(x))`.
    pub fn sigma_power(self) -> u32 {
        self.index() as u32
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_rational(q: &BigRational) -> Sign {
        if q.is_zero() {
            Sign::Zero
        } else if q.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn to_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

/// A closed interval with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    fn point(q: BigRational) -> Self {
        Interval { lo: q.clone(), hi: q }
    }

    fn add(&self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    fn scale(&self, q: &BigRational) -> Interval {
        let (a, b) = (&self.lo * q, &self.hi * q);
        if q.is_negative() {
            Interval { lo: b, hi: a }
        } else {
            Interval { lo: a, hi: b }
        }
    }

    fn square(&self) -> Interval {
        let (a, b) = (&self.lo * &self.lo, &self.hi * &self.hi);
        if self.lo.is_positive() {
            Interval { lo: a, hi: b }
        } else if self.hi.is_negative() {
            Interval { lo: b, hi: a }
        } else {
            Interval {
                lo: BigRational::zero(),
                hi: a.max(b),
            }
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Sign of every point of the interval, if it is constant and nonzero.
    pub fn strict_sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Positive)
        } else if self.hi.is_negative() {
            Some(Sign::Negative)
        } else {
            None
        }
    }

    /// Midpoint as an `f64`, for display only.
    pub fn midpoint_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2));
        ratio_to_f64(&mid)
    }
}

fn ratio_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

fn cubic(x: &BigRational) -> BigRational {
    // x³ − 3x − 1
    let three = BigRational::from_integer(BigInt::from(3));
    x * x * x - three * x - BigRational::one()
}

fn dyadic(num: i64, log2_den: u32) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::one() << log2_den as usize)
}

/// Per-worker refinement state: isolating intervals for the three roots of
/// `x³ − 3x − 1` together with the precision they have been refined to.
#[derive(Clone, Debug)]
pub struct SignContext {
    roots: [Interval; 3],
    precision: u32,
}

impl Default for SignContext {
    fn default() -> Self {
        Self::new()
    }
}

impl SignContext {
    pub fn new() -> Self {
        // 2cos(π/9) ≈ 1.879, 2cos(5π/9) ≈ −0.347, 2cos(7π/9) ≈ −1.532
        let roots = [
            Interval {
                lo: dyadic(15, 3),
                hi: dyadic(2, 0),
            },
            Interval {
                lo: dyadic(-1, 1),
                hi: dyadic(0, 0),
            },
            Interval {
                lo: dyadic(-2, 0),
                hi: dyadic(-3, 1),
            },
        ];
        let mut ctx = SignContext { roots, precision: 0 };
        ctx.refine_to(INITIAL_PRECISION);
        ctx
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn root(&self, e: Embedding) -> &Interval {
        &self.roots[e.index()]
    }

    /// Bisect every root interval until its width is at most `2^-bits`.
    pub fn refine_to(&mut self, bits: u32) {
        if bits <= self.precision {
            return;
        }
        let target = BigRational::new(BigInt::one(), BigInt::one() << bits as usize);
        let two = BigRational::from_integer(BigInt::from(2));
        for iv in self.roots.iter_mut() {
            let lo_sign = Sign::of_rational(&cubic(&iv.lo));
            while iv.width() > target {
                let mid = (&iv.lo + &iv.hi) / &two;
                let s = Sign::of_rational(&cubic(&mid));
                if s == Sign::Zero {
                    // the roots are irrational; kept for completeness
                    *iv = Interval::point(mid);
                    break;
                }
                if s == lo_sign {
                    iv.lo = mid;
                } else {
                    iv.hi = mid;
                }
            }
        }
        self.precision = bits;
    }

    /// Interval enclosure of a real element under an embedding, at the
    /// current precision.
    pub fn enclose(&self, x: &CycNum, e: Embedding) -> Result<Interval, CycError> {
        let [c0, c1, c2] = x.to_real_basis()?;
        let a = self.root(e);
        let lin = a.scale(&c1);
        let quad = a.square().scale(&c2);
        Ok(Interval::point(c0).add(&lin).add(&quad))
    }

    /// Certified sign of a real element under an embedding.
    pub fn sign(&mut self, x: &CycNum, e: Embedding) -> Result<Sign, CycError> {
        if x.is_zero() {
            return Ok(Sign::Zero);
        }
        loop {
            if let Some(s) = self.enclose(x, e)?.strict_sign() {
                return Ok(s);
            }
            let next = self.precision.max(1) * 2;
            self.refine_to(next);
        }
    }

    /// Positive under all three real embeddings.
    pub fn is_totally_positive(&mut self, x: &CycNum) -> Result<bool, CycError> {
        for e in Embedding::ALL {
            if self.sign(x, e)? != Sign::Positive {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ordering of two real elements under the identity embedding.
    pub fn compare(&mut self, x: &CycNum, y: &CycNum) -> Result<Ordering, CycError> {
        Ok(self.sign(&(x - y), Embedding::Identity)?.to_ordering())
    }

    /// `⌊x / y⌋` under the identity embedding, certified exactly.
    ///
    /// `y` must be positive under the identity embedding.
    pub fn floor_ratio(&mut self, x: &CycNum, y: &CycNum) -> Result<BigInt, CycError> {
        if y.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        if self.sign(y, Embedding::Identity)? != Sign::Positive {
            return Err(CycError::NonPositiveDivisor);
        }
        let q = x.checked_div(y)?;
        let mut n = self.enclose(&q, Embedding::Identity)?.lo.floor().to_integer();
        // settle the guess with exact sign tests: 0 <= q - n < 1
        loop {
            let diff = &q - &CycNum::from_rational(BigRational::from_integer(n.clone()));
            if self.sign(&diff, Embedding::Identity)? == Sign::Negative {
                n -= 1;
                continue;
            }
            let above = &diff - &CycNum::one();
            if self.sign(&above, Embedding::Identity)? != Sign::Negative {
                n += 1;
                continue;
            }
            return Ok(n);
        }
    }

    /// Approximate value for display; never used for decisions.
    pub fn approx(&self, x: &CycNum, e: Embedding) -> Result<f64, CycError> {
        Ok(self.enclose(x, e)?.midpoint_f64())
    }
}

/// One-shot wrapper around [`SignContext::sign`].
pub fn certified_sign(x: &CycNum, e: Embedding) -> Result<Sign, CycError> {
    SignContext::new().sign(x, e)
}

/// One-shot wrapper around [`SignContext::compare`].
pub fn certified_compare(x: &CycNum, y: &CycNum) -> Result<Ordering, CycError> {
    SignContext::new().compare(x, y)
}

/// One-shot wrapper around [`SignContext::floor_ratio`].
pub fn certified_floor_ratio(x: &CycNum, y: &CycNum) -> Result<BigInt, CycError> {
    SignContext::new().floor_ratio(x, y)
}

/// Apply `σ^k` where `k` matches the embedding, so that
/// `sign(x, e) == sign(sigma_power(x, e), Identity)`.
pub fn pull_back(x: &CycNum, e: Embedding) -> CycNum {
    Automorphism::sigma().pow(e.sigma_power()).apply(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::units::*;

    #[test]
    fn zero_is_zero_everywhere() {
        for e in Embedding::ALL {
            assert_eq!(certified_sign(&CycNum::zero(), e).unwrap(), Sign::Zero);
        }
    }

    #[test]
    fn units_positive_at_identity() {
        assert_eq!(certified_sign(&u1(), Embedding::Identity).unwrap(), Sign::Positive);
        assert_eq!(certified_sign(&u2(), Embedding::Identity).unwrap(), Sign::Positive);
        assert_eq!(certified_compare(&u2(), &CycNum::one()).unwrap(), Ordering::Greater);
        assert_eq!(certified_compare(&u1(), &CycNum::one()).unwrap(), Ordering::Greater);
    }

    #[test]
    fn sigma_u1_is_negative() {
        let s = Automorphism::sigma().apply(&u1());
        assert_eq!(certified_sign(&s, Embedding::Identity).unwrap(), Sign::Negative);
    }

    #[test]
    fn embeddings_agree_with_galois_pullback() {
        let mut ctx = SignContext::new();
        let samples = [u1(), u2(), beta(), &u1() - &u2(), monomial(0, 1, -2, 0) - CycNum::one()];
        for x in &samples {
            for e in Embedding::ALL {
                let direct = ctx.sign(x, e).unwrap();
                let pulled = ctx.sign(&pull_back(x, e), Embedding::Identity).unwrap();
                assert_eq!(direct, pulled, "{x} under {e:?}");
            }
        }
    }

    #[test]
    fn rational_signs() {
        let mut ctx = SignContext::new();
        for n in [-7i64, -1, 0, 1, 5] {
            let q = CycNum::from_integer(n);
            let expect = Sign::of_rational(&BigRational::from_integer(BigInt::from(n)));
            for e in Embedding::ALL {
                assert_eq!(ctx.sign(&q, e).unwrap(), expect);
            }
        }
    }

    #[test]
    fn floor_ratio_equal_arguments() {
        let x = u2().pow(2).unwrap().scale_int(9);
        assert_eq!(certified_floor_ratio(&x, &x).unwrap(), BigInt::from(1));
    }

    #[test]
    fn floor_ratio_exact_integer_boundary() {
        // 3u₂ / u₂ = 3 exactly
        let x = u2().scale_int(3);
        assert_eq!(certified_floor_ratio(&x, &u2()).unwrap(), BigInt::from(3));
        // u₂ + u₁u₂ = u₁⁻¹u₂β sits strictly between multiples of u₂
        let y = &u2() + &(&u1() * &u2());
        assert_eq!(certified_floor_ratio(&y, &u2()).unwrap(), BigInt::from(2));
    }

    #[test]
    fn floor_ratio_rejects_bad_divisors() {
        assert_eq!(
            certified_floor_ratio(&u1(), &CycNum::zero()),
            Err(CycError::DivisionByZero)
        );
        assert_eq!(
            certified_floor_ratio(&u1(), &CycNum::from_integer(-2)),
            Err(CycError::NonPositiveDivisor)
        );
    }

    #[test]
    fn non_real_input_rejected() {
        assert_eq!(certified_sign(&zeta(), Embedding::Identity), Err(CycError::NotReal));
    }

    #[test]
    fn refinement_handles_tiny_values() {
        // a tiny positive element: u₁⁻²⁰ forces several refinements
        let tiny = u1().pow(-20).unwrap();
        let mut ctx = SignContext::new();
        assert_eq!(ctx.sign(&tiny, Embedding::Identity).unwrap(), Sign::Positive);
        let close = &tiny - &CycNum::from_rational(BigRational::new(1.into(), BigInt::from(10).pow(3)));
        assert_eq!(ctx.sign(&close, Embedding::Identity).unwrap(), Sign::Negative);
    }
}
