//! Scalar ground types: exact rationals, dual numbers and the trait that
//! lets quaternions range over all of them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar, the ground field of every algebraic decision.
pub type Rational = BigRational;

/// Shorthand for `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_to_f64(r: &Rational) -> f64 {
    r.to_f64()
        .unwrap_or_else(|| r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN))
}

/// Scalar semantics shared by the quaternion coefficient types: exact
/// rationals, complex doubles (numeric path only) and dual rationals.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
{
    /// Multiplicative inverse, `None` when the element is not a unit.
    fn try_inv(&self) -> Option<Self>;
}

impl Scalar for Rational {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Scalar for Complex64 {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.inv())
        }
    }
}

/// Dual number `re + eps*du` with `eps^2 = 0`, over exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Dual {
    pub re: Rational,
    pub du: Rational,
}

impl Dual {
    pub fn new(re: Rational, du: Rational) -> Self {
        Dual { re, du }
    }

    pub fn from_real(re: Rational) -> Self {
        Dual { re, du: Rational::zero() }
    }
}

impl fmt::Debug for Dual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + eps*{}", self.re, self.du)
    }
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, rhs: Dual) -> Dual {
        Dual::new(self.re + rhs.re, self.du + rhs.du)
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, rhs: Dual) -> Dual {
        Dual::new(self.re - rhs.re, self.du - rhs.du)
    }
}

impl Mul for Dual {
    type Output = Dual;
    fn mul(self, rhs: Dual) -> Dual {
        let du = &self.re * &rhs.du + &self.du * &rhs.re;
        Dual::new(self.re * rhs.re, du)
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual::new(-self.re, -self.du)
    }
}

impl Zero for Dual {
    fn zero() -> Self {
        Dual::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.du.is_zero()
    }
}

impl One for Dual {
    fn one() -> Self {
        Dual::new(Rational::one(), Rational::zero())
    }
}

impl Scalar for Dual {
    // (a + eps*b)^{-1} = 1/a - eps*b/a^2, defined iff a != 0.
    fn try_inv(&self) -> Option<Self> {
        if self.re.is_zero() {
            return None;
        }
        let inv = self.re.recip();
        let du = -(&self.du * &inv * &inv);
        Some(Dual::new(inv, du))
    }
}

/// Round a double to a nearby rational with bounded denominator via
/// continued fractions. Returns `None` when no convergent with denominator
/// at most `max_den` comes within `tol` of `x`.
pub fn rational_reconstruct(x: f64, max_den: u64, tol: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let neg = x < 0.0;
    let mut frac = x.abs();
    // Convergents p/q of the continued fraction expansion.
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (BigInt::from(frac.floor() as i64), BigInt::one());
    frac -= frac.floor();
    for _ in 0..64 {
        let cand = Rational::new(p1.clone(), q1.clone());
        let cand_f = rat_to_f64(&cand);
        if (cand_f - x.abs()).abs() <= tol * x.abs().max(1.0) {
            let r = if neg { -cand } else { cand };
            return Some(r);
        }
        if frac < 1e-15 {
            break;
        }
        frac = 1.0 / frac;
        let a = frac.floor();
        if a > 1e18 {
            break;
        }
        frac -= a;
        let a = BigInt::from(a as i64);
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        if q2 > BigInt::from(max_den) {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    let cand = Rational::new(p1, q1);
    let cand_f = rat_to_f64(&cand);
    if (cand_f - x.abs()).abs() <= tol * x.abs().max(1.0) {
        Some(if neg { -cand } else { cand })
    } else {
        None
    }
}

/// Exact square root of a rational, when it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}
