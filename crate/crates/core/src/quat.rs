//! Quaternions over a generic scalar, dual quaternions, and the projective
//! action on points of P^3.
//!
//! One quaternion type covers the three coefficient semantics used here:
//! exact rationals (the algebraic path), complex doubles (numeric ruling
//! checks) and dual rationals (rigid displacements). The multiplication
//! table is `i^2 = j^2 = k^2 = ijk = -1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::Zero;
use thiserror::Error;

use crate::scalar::{rat_to_f64, Dual, Rational, Scalar};

#[derive(Clone, PartialEq)]
pub struct Quaternion<S> {
    pub w: S,
    pub x: S,
    pub y: S,
    pub z: S,
}

/// Dual quaternion `primal + eps*dual` as a quaternion over dual scalars.
pub type DualQuaternion = Quaternion<Dual>;

#[derive(Debug, Error)]
pub enum QuatError {
    #[error("not invertible: zero divisor")]
    NotInvertible,
    #[error("singular displacement: primal part is a zero divisor")]
    SingularDisplacement,
}

impl<S: Scalar> Quaternion<S> {
    pub fn new(w: S, x: S, y: S, z: S) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn zero() -> Self {
        Quaternion::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    pub fn one() -> Self {
        Quaternion::new(S::one(), S::zero(), S::zero(), S::zero())
    }

    pub fn from_scalar(w: S) -> Self {
        Quaternion::new(w, S::zero(), S::zero(), S::zero())
    }

    pub fn i() -> Self {
        Quaternion::new(S::zero(), S::one(), S::zero(), S::zero())
    }

    pub fn j() -> Self {
        Quaternion::new(S::zero(), S::zero(), S::one(), S::zero())
    }

    pub fn k() -> Self {
        Quaternion::new(S::zero(), S::zero(), S::zero(), S::one())
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.w.is_one() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    /// `q * conj(q) = w^2 + x^2 + y^2 + z^2`, a scalar.
    pub fn norm(&self) -> S {
        let ww = self.w.clone() * self.w.clone();
        let xx = self.x.clone() * self.x.clone();
        let yy = self.y.clone() * self.y.clone();
        let zz = self.z.clone() * self.z.clone();
        ww + xx + yy + zz
    }

    pub fn scalar_part(&self) -> S {
        self.w.clone()
    }

    pub fn vector_part(&self) -> Self {
        Quaternion::new(S::zero(), self.x.clone(), self.y.clone(), self.z.clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        Quaternion::new(
            self.w.clone() * s.clone(),
            self.x.clone() * s.clone(),
            self.y.clone() * s.clone(),
            self.z.clone() * s.clone(),
        )
    }

    /// 4-dimensional dot product, the scalar part of `a * conj(b)`.
    pub fn dot(&self, other: &Self) -> S {
        self.w.clone() * other.w.clone()
            + self.x.clone() * other.x.clone()
            + self.y.clone() * other.y.clone()
            + self.z.clone() * other.z.clone()
    }

    /// Zero divisor test: the norm vanishes. Precisely the points of the
    /// null quadric for complex quaternions; for dual quaternions this is a
    /// vanishing primal norm.
    pub fn is_zero_divisor(&self) -> bool {
        self.norm().try_inv().is_none()
    }

    pub fn try_inv(&self) -> Result<Self, QuatError> {
        let inv = self.norm().try_inv().ok_or(QuatError::NotInvertible)?;
        Ok(self.conj().scale(&inv))
    }
}

impl<S: Scalar> Mul for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn mul(self, rhs: &Quaternion<S>) -> Quaternion<S> {
        let (a, b) = (self, rhs);
        Quaternion::new(
            a.w.clone() * b.w.clone()
                - a.x.clone() * b.x.clone()
                - a.y.clone() * b.y.clone()
                - a.z.clone() * b.z.clone(),
            a.w.clone() * b.x.clone() + a.x.clone() * b.w.clone() + a.y.clone() * b.z.clone()
                - a.z.clone() * b.y.clone(),
            a.w.clone() * b.y.clone() - a.x.clone() * b.z.clone()
                + a.y.clone() * b.w.clone()
                + a.z.clone() * b.x.clone(),
            a.w.clone() * b.z.clone() + a.x.clone() * b.y.clone() - a.y.clone() * b.x.clone()
                + a.z.clone() * b.w.clone(),
        )
    }
}

impl<S: Scalar> Add for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn add(self, rhs: &Quaternion<S>) -> Quaternion<S> {
        Quaternion::new(
            self.w.clone() + rhs.w.clone(),
            self.x.clone() + rhs.x.clone(),
            self.y.clone() + rhs.y.clone(),
            self.z.clone() + rhs.z.clone(),
        )
    }
}

impl<S: Scalar> Sub for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn sub(self, rhs: &Quaternion<S>) -> Quaternion<S> {
        Quaternion::new(
            self.w.clone() - rhs.w.clone(),
            self.x.clone() - rhs.x.clone(),
            self.y.clone() - rhs.y.clone(),
            self.z.clone() - rhs.z.clone(),
        )
    }
}

impl<S: Scalar> Neg for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn neg(self) -> Quaternion<S> {
        Quaternion::new(-self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl<S: Scalar> $trait for Quaternion<S> {
            type Output = Quaternion<S>;
            fn $method(self, rhs: Quaternion<S>) -> Quaternion<S> {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Mul, mul);
forward_owned!(Add, add);
forward_owned!(Sub, sub);

impl<S: Scalar> fmt::Debug for Quaternion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}i + {:?}j + {:?}k)", self.w, self.x, self.y, self.z)
    }
}

pub type QuatRational = Quaternion<Rational>;
pub type QuatComplex = Quaternion<Complex64>;

impl QuatRational {
    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(
            crate::scalar::rat_int(w),
            crate::scalar::rat_int(x),
            crate::scalar::rat_int(y),
            crate::scalar::rat_int(z),
        )
    }

    pub fn to_complex(&self) -> QuatComplex {
        Quaternion::new(
            Complex64::new(rat_to_f64(&self.w), 0.0),
            Complex64::new(rat_to_f64(&self.x), 0.0),
            Complex64::new(rat_to_f64(&self.y), 0.0),
            Complex64::new(rat_to_f64(&self.z), 0.0),
        )
    }
}

impl QuatComplex {
    /// Largest component magnitude.
    pub fn max_norm(&self) -> f64 {
        self.w.norm().max(self.x.norm()).max(self.y.norm()).max(self.z.norm())
    }

    /// Scaled to unit max component; `None` for (numerically) zero input.
    pub fn normalized(&self) -> Option<QuatComplex> {
        let m = self.max_norm();
        if m == 0.0 {
            return None;
        }
        let s = Complex64::new(1.0 / m, 0.0);
        Some(self.scale(&s))
    }
}

impl DualQuaternion {
    pub fn from_parts(primal: &QuatRational, dual: &QuatRational) -> Self {
        Quaternion::new(
            Dual::new(primal.w.clone(), dual.w.clone()),
            Dual::new(primal.x.clone(), dual.x.clone()),
            Dual::new(primal.y.clone(), dual.y.clone()),
            Dual::new(primal.z.clone(), dual.z.clone()),
        )
    }

    pub fn primal(&self) -> QuatRational {
        Quaternion::new(self.w.re.clone(), self.x.re.clone(), self.y.re.clone(), self.z.re.clone())
    }

    pub fn dual_part(&self) -> QuatRational {
        Quaternion::new(self.w.du.clone(), self.x.du.clone(), self.y.du.clone(), self.z.du.clone())
    }

    /// `p*conj(d) + d*conj(p)`; zero exactly on the Study quadric. Always a
    /// scalar quaternion, returned in full for reporting.
    pub fn study_defect(&self) -> QuatRational {
        let p = self.primal();
        let d = self.dual_part();
        &(&p * &d.conj()) + &(&d * &p.conj())
    }
}

/// Point of real projective 3-space, embedded as `x0 + x1*i + x2*j + x3*k`.
#[derive(Clone)]
pub struct ProjectivePoint3 {
    coords: [Rational; 4],
}

impl ProjectivePoint3 {
    pub fn new(coords: [Rational; 4]) -> Self {
        assert!(coords.iter().any(|c| !c.is_zero()), "projective point needs a nonzero coordinate");
        ProjectivePoint3 { coords }
    }

    pub fn from_ints(x0: i64, x1: i64, x2: i64, x3: i64) -> Self {
        ProjectivePoint3::new([
            crate::scalar::rat_int(x0),
            crate::scalar::rat_int(x1),
            crate::scalar::rat_int(x2),
            crate::scalar::rat_int(x3),
        ])
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.coords
    }

    /// Representative with first nonzero coordinate scaled to 1.
    pub fn normalized(&self) -> [Rational; 4] {
        let pivot = self.coords.iter().find(|c| !c.is_zero()).unwrap();
        let inv = pivot.recip();
        [
            &self.coords[0] * &inv,
            &self.coords[1] * &inv,
            &self.coords[2] * &inv,
            &self.coords[3] * &inv,
        ]
    }

    pub fn as_quaternion(&self) -> QuatRational {
        Quaternion::new(
            self.coords[0].clone(),
            self.coords[1].clone(),
            self.coords[2].clone(),
            self.coords[3].clone(),
        )
    }

    pub fn from_quaternion(q: &QuatRational) -> Self {
        ProjectivePoint3::new([q.w.clone(), q.x.clone(), q.y.clone(), q.z.clone()])
    }

    /// Affine coordinates `(x1/x0, x2/x0, x3/x0)`, `None` on the plane at
    /// infinity.
    pub fn dehomogenize(&self) -> Option<[Rational; 3]> {
        if self.coords[0].is_zero() {
            return None;
        }
        let inv = self.coords[0].recip();
        Some([
            &self.coords[1] * &inv,
            &self.coords[2] * &inv,
            &self.coords[3] * &inv,
        ])
    }
}

impl PartialEq for ProjectivePoint3 {
    fn eq(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }
}

impl Eq for ProjectivePoint3 {}

impl fmt::Debug for ProjectivePoint3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} : {} : {} : {}]",
            self.coords[0], self.coords[1], self.coords[2], self.coords[3]
        )
    }
}

/// The displacement map of a dual quaternion on a projective point:
/// `[x0 + x] -> [p(x0 + x)conj(p) + 2*x0*p*conj(d)]`.
pub fn act_on_point(g: &DualQuaternion, pt: &ProjectivePoint3) -> Result<ProjectivePoint3, QuatError> {
    let p = g.primal();
    let d = g.dual_part();
    if p.norm().is_zero() {
        return Err(QuatError::SingularDisplacement);
    }
    let xq = pt.as_quaternion();
    let rotated = &(&p * &xq) * &p.conj();
    let two_x0 = &pt.coords()[0] + &pt.coords()[0];
    let translated = (&p * &d.conj()).scale(&two_x0);
    let image = &rotated + &translated;
    Ok(ProjectivePoint3::from_quaternion(&image))
}
