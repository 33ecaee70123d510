//! Polynomials with quaternion and dual quaternion coefficients over a
//! central indeterminate: non-commutative multiplication, conjugate and norm
//! polynomials, right evaluation, right division, greatest common right
//! divisors, maximal real polynomial factors and linear right factor
//! extraction.
//!
//! All conventions are right-sided: right evaluation substitutes the
//! indeterminate to the right of the coefficients, `t - r` is a right factor
//! of `P` exactly when `r` is a right zero of `P`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::Zero;
use thiserror::Error;

use crate::quat::{DualQuaternion, QuatComplex, QuatRational, Quaternion};
use crate::realpoly::{real_gcd_many, QuadraticFactor, RealPoly};
use crate::scalar::Rational;

/// Polynomial in `H[t]`: quaternion coefficients indexed by power of `t`,
/// trailing zeros trimmed.
#[derive(Clone, PartialEq)]
pub struct QuatPoly {
    coeffs: Vec<QuatRational>,
}

/// Polynomial in `DH[t]` as a primal/dual pair `P + eps*D`.
#[derive(Clone, PartialEq)]
pub struct DualQuatPoly {
    pub primal: QuatPoly,
    pub dual: QuatPoly,
}

#[derive(Debug, Error)]
pub enum QPolyError {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("gcrd undefined for two zero polynomials")]
    GcrdOfZeros,
    #[error("right factor extraction failed: {0}")]
    ExtractionFailed(String),
    #[error("singular parameter transformation")]
    SingularTransform,
}

impl QuatPoly {
    pub fn new(mut coeffs: Vec<QuatRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QuatPoly { coeffs }
    }

    pub fn zero() -> Self {
        QuatPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QuatPoly::constant(QuatRational::one())
    }

    pub fn constant(q: QuatRational) -> Self {
        QuatPoly::new(vec![q])
    }

    /// `t - r`
    pub fn linear_from_root(r: &QuatRational) -> Self {
        QuatPoly::new(vec![-r, QuatRational::one()])
    }

    pub fn from_real(p: &RealPoly) -> Self {
        QuatPoly::new(p.coeffs().iter().map(|c| QuatRational::from_scalar(c.clone())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[QuatRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QuatRational {
        self.coeffs.get(k).cloned().unwrap_or_else(QuatRational::zero)
    }

    pub fn leading(&self) -> Option<&QuatRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// The four real component polynomials `(w, x, y, z)`.
    pub fn components(&self) -> [RealPoly; 4] {
        [
            RealPoly::new(self.coeffs.iter().map(|c| c.w.clone()).collect()),
            RealPoly::new(self.coeffs.iter().map(|c| c.x.clone()).collect()),
            RealPoly::new(self.coeffs.iter().map(|c| c.y.clone()).collect()),
            RealPoly::new(self.coeffs.iter().map(|c| c.z.clone()).collect()),
        ]
    }

    pub fn from_components(w: &RealPoly, x: &RealPoly, y: &RealPoly, z: &RealPoly) -> Self {
        let n = [w, x, y, z].iter().filter_map(|p| p.degree()).max().map_or(0, |d| d + 1);
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(QuatRational::new(w.coeff(k), x.coeff(k), y.coeff(k), z.coeff(k)));
        }
        QuatPoly::new(coeffs)
    }

    pub fn conj(&self) -> Self {
        QuatPoly::new(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    /// `P * conj(P)`, a real polynomial (the vector components cancel).
    pub fn norm_poly(&self) -> RealPoly {
        let prod = self * &self.conj();
        let [w, x, y, z] = prod.components();
        debug_assert!(x.is_zero() && y.is_zero() && z.is_zero(), "norm polynomial must be real");
        w
    }

    /// Right evaluation `sum p_l * q^l` with powers of `q` on the right.
    pub fn right_eval(&self, q: &QuatRational) -> QuatRational {
        let mut acc = QuatRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + c;
        }
        acc
    }

    /// Evaluation at a central complex scalar (componentwise).
    pub fn eval_complex(&self, z: Complex64) -> QuatComplex {
        let [w, x, y, z_] = self.components();
        Quaternion::new(w.eval_complex(z), x.eval_complex(z), y.eval_complex(z), z_.eval_complex(z))
    }

    pub fn eval_rational(&self, t: &Rational) -> QuatRational {
        let [w, x, y, z] = self.components();
        Quaternion::new(w.eval(t), x.eval(t), y.eval(t), z.eval(t))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        QuatPoly::new(self.coeffs.iter().map(|c| c.scale(s)).collect())
    }

    pub fn mul_real(&self, p: &RealPoly) -> Self {
        if self.is_zero() || p.is_zero() {
            return QuatPoly::zero();
        }
        let mut out = vec![QuatRational::zero(); self.coeffs.len() + p.coeffs().len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in p.coeffs().iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &a.scale(b);
            }
        }
        QuatPoly::new(out)
    }

    /// Exact componentwise quotient by a real polynomial.
    pub fn div_real_exact(&self, p: &RealPoly) -> Self {
        let [w, x, y, z] = self.components();
        let div = |c: &RealPoly| if c.is_zero() { RealPoly::zero() } else { c.exact_div(p) };
        QuatPoly::from_components(&div(&w), &div(&x), &div(&y), &div(&z))
    }

    /// Left multiplication by a constant quaternion.
    pub fn lmul_quat(&self, q: &QuatRational) -> Self {
        QuatPoly::new(self.coeffs.iter().map(|c| q * c).collect())
    }

    /// Right multiplication by a constant quaternion.
    pub fn rmul_quat(&self, q: &QuatRational) -> Self {
        QuatPoly::new(self.coeffs.iter().map(|c| c * q).collect())
    }

    /// Right division: `self = quot * div + rem`, `deg rem < deg div`.
    /// Unique because leading coefficients of nonzero polynomials in `H[t]`
    /// are invertible.
    pub fn right_divide(&self, div: &QuatPoly) -> Result<(QuatPoly, QuatPoly), QPolyError> {
        let dd = div.degree().ok_or(QPolyError::DivisionByZero)?;
        let lc_inv = div.leading().unwrap().try_inv().expect("leading coefficient invertible in H");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![QuatRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() * &lc_inv;
            if !factor.is_zero() {
                for (i, c) in div.coeffs.iter().enumerate() {
                    let delta = &factor * c;
                    rem[k + i] = &rem[k + i] - &delta;
                }
                quot[k] = factor;
            }
            rem.pop();
        }
        Ok((QuatPoly::new(quot), QuatPoly::new(rem)))
    }

    pub fn right_divides(&self, other: &QuatPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.right_divide(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// Monic leading-coefficient normalization (left multiplication by the
    /// inverse of the leading coefficient).
    pub fn monic(&self) -> QuatPoly {
        match self.leading() {
            None => QuatPoly::zero(),
            Some(lc) => {
                let inv = lc.try_inv().expect("leading coefficient invertible in H");
                self.lmul_quat(&inv)
            }
        }
    }

    /// Maximal real polynomial factor: monic gcd of the four component
    /// polynomials.
    pub fn mrpf(&self) -> RealPoly {
        assert!(!self.is_zero(), "mrpf of the zero polynomial");
        real_gcd_many(self.components().iter())
    }
}

/// Monic greatest common right divisor via the Euclidean chain of right
/// divisions.
pub fn gcrd(a: &QuatPoly, b: &QuatPoly) -> Result<QuatPoly, QPolyError> {
    if a.is_zero() && b.is_zero() {
        return Err(QPolyError::GcrdOfZeros);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = x.right_divide(&y)?;
        x = y;
        y = r;
    }
    Ok(x.monic())
}

/// Extract a monic linear right factor `t - r` of `G` whose norm is the
/// given irreducible quadratic. Requires that the quadratic divides
/// `norm_poly(G)` and that `mrpf(G) = 1`; then the linear remainder
/// `a*t + b` of division by the quadratic yields `r = -a^{-1} b`.
pub fn extract_right_factor(g: &QuatPoly, q: &QuadraticFactor) -> Result<QuatPoly, QPolyError> {
    let quad = QuatPoly::from_real(&q.as_poly());
    let (_, rem) = g.right_divide(&quad)?;
    let a = rem.coeff(1);
    let b = rem.coeff(0);
    if a.is_zero() {
        return Err(QPolyError::ExtractionFailed(
            "linear remainder degenerated; input not consistent with mrpf = 1".into(),
        ));
    }
    let a_inv = a.try_inv().expect("nonzero quaternion invertible");
    let r = -&(&a_inv * &b);
    let factor = QuatPoly::linear_from_root(&r);
    if !g.right_eval(&r).is_zero() || factor.norm_poly() != q.as_poly() {
        return Err(QPolyError::ExtractionFailed(
            "candidate root does not certify; quadratic does not divide the norm".into(),
        ));
    }
    Ok(factor)
}

impl Mul for &QuatPoly {
    type Output = QuatPoly;
    fn mul(self, rhs: &QuatPoly) -> QuatPoly {
        if self.is_zero() || rhs.is_zero() {
            return QuatPoly::zero();
        }
        let mut out = vec![QuatRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        QuatPoly::new(out)
    }
}

impl Add for &QuatPoly {
    type Output = QuatPoly;
    fn add(self, rhs: &QuatPoly) -> QuatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QuatPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &QuatPoly {
    type Output = QuatPoly;
    fn sub(self, rhs: &QuatPoly) -> QuatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QuatPoly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Neg for &QuatPoly {
    type Output = QuatPoly;
    fn neg(self) -> QuatPoly {
        QuatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for QuatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{:?}", c),
                1 => format!("{:?}*t", c),
                _ => format!("{:?}*t^{}", c, k),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl DualQuatPoly {
    pub fn new(primal: QuatPoly, dual: QuatPoly) -> Self {
        DualQuatPoly { primal, dual }
    }

    pub fn zero() -> Self {
        DualQuatPoly::new(QuatPoly::zero(), QuatPoly::zero())
    }

    pub fn from_primal(primal: QuatPoly) -> Self {
        DualQuatPoly::new(primal, QuatPoly::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.primal.is_zero() && self.dual.is_zero()
    }

    /// `max(deg P, deg D)`
    pub fn degree(&self) -> Option<usize> {
        match (self.primal.degree(), self.dual.degree()) {
            (None, d) => d,
            (d, None) => d,
            (Some(a), Some(b)) => Some(a.max(b)),
        }
    }

    pub fn coeff(&self, k: usize) -> DualQuaternion {
        DualQuaternion::from_parts(&self.primal.coeff(k), &self.dual.coeff(k))
    }

    /// Leading dual quaternion coefficient at `degree()`.
    pub fn leading(&self) -> Option<DualQuaternion> {
        self.degree().map(|n| self.coeff(n))
    }

    pub fn conj(&self) -> Self {
        DualQuatPoly::new(self.primal.conj(), self.dual.conj())
    }

    /// Study defect polynomial `P*conj(D) + D*conj(P)`; identically zero
    /// exactly for motion polynomials.
    pub fn study_defect(&self) -> QuatPoly {
        &(&self.primal * &self.dual.conj()) + &(&self.dual * &self.primal.conj())
    }

    /// Norm polynomial as a dual-number pair `(norm(P), study defect)`.
    pub fn norm_poly(&self) -> (RealPoly, QuatPoly) {
        (self.primal.norm_poly(), self.study_defect())
    }

    /// Real content: monic gcd of all eight component polynomials.
    pub fn content(&self) -> RealPoly {
        let pc = self.primal.components();
        let dc = self.dual.components();
        real_gcd_many(pc.iter().chain(dc.iter()))
    }

    pub fn div_real_exact(&self, p: &RealPoly) -> Self {
        DualQuatPoly::new(self.primal.div_real_exact(p), self.dual.div_real_exact(p))
    }

    /// Left multiplication by a constant dual quaternion.
    pub fn lmul_dq(&self, g: &DualQuaternion) -> Self {
        let gp = g.primal();
        let gd = g.dual_part();
        let primal = self.primal.lmul_quat(&gp);
        let dual = &self.dual.lmul_quat(&gp) + &self.primal.lmul_quat(&gd);
        DualQuatPoly::new(primal, dual)
    }

    pub fn eval_rational(&self, t: &Rational) -> DualQuaternion {
        DualQuaternion::from_parts(&self.primal.eval_rational(t), &self.dual.eval_rational(t))
    }

    /// Fractional linear parameter transformation `t -> (a*t + b)/(c*t + d)`
    /// with denominators cleared by `(c*t + d)^deg`. Preserves degree and the
    /// evaluated point set (including `t = infinity`) for reduced inputs.
    pub fn reparameterize(
        &self,
        a: &Rational,
        b: &Rational,
        c: &Rational,
        d: &Rational,
    ) -> Result<Self, QPolyError> {
        if (a * d - b * c).is_zero() {
            return Err(QPolyError::SingularTransform);
        }
        let Some(n) = self.degree() else { return Ok(Self::zero()) };
        let num = RealPoly::new(vec![b.clone(), a.clone()]);
        let den = RealPoly::new(vec![d.clone(), c.clone()]);
        let transform = |p: &QuatPoly| {
            let mut out = QuatPoly::zero();
            for (l, q) in p.coeffs().iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                let weight = &num.pow(l as u32) * &den.pow((n - l) as u32);
                out = &out + &QuatPoly::constant(q.clone()).mul_real(&weight);
            }
            out
        };
        Ok(DualQuatPoly::new(transform(&self.primal), transform(&self.dual)))
    }

    /// The point reached at `t = infinity`: the vector of degree-n
    /// coefficients of a reduced representation.
    pub fn eval_at_infinity(&self) -> DualQuaternion {
        self.leading().unwrap_or_else(|| DualQuaternion::from_parts(&QuatRational::zero(), &QuatRational::zero()))
    }
}

impl Mul for &DualQuatPoly {
    type Output = DualQuatPoly;
    fn mul(self, rhs: &DualQuatPoly) -> DualQuatPoly {
        let primal = &self.primal * &rhs.primal;
        let dual = &(&self.primal * &rhs.dual) + &(&self.dual * &rhs.primal);
        DualQuatPoly::new(primal, dual)
    }
}

impl Add for &DualQuatPoly {
    type Output = DualQuatPoly;
    fn add(self, rhs: &DualQuatPoly) -> DualQuatPoly {
        DualQuatPoly::new(&self.primal + &rhs.primal, &self.dual + &rhs.dual)
    }
}

impl fmt::Debug for DualQuatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) + eps*({:?})", self.primal, self.dual)
    }
}
