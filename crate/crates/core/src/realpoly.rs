//! Univariate polynomials over exact rationals: arithmetic, Euclidean gcd,
//! square-free decomposition and factorization into real-irreducible parts.
//!
//! The factorization strategy is hybrid. Square-free decomposition is exact;
//! square-free parts of degree at most two split exactly; higher degrees are
//! split numerically and conjugate root pairs are re-paired into candidate
//! quadratics that are confirmed by exact trial division (denominator bound
//! `10^6`). Factors that fail confirmation stay approximate and are flagged
//! numeric. Every divisibility decision downstream rests on the exact side.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::scalar::{rat_int, rat_to_f64, rational_reconstruct, rational_sqrt, Rational};

/// Polynomial in `R[t]`, coefficients indexed by power, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct RealPoly {
    coeffs: Vec<Rational>,
}

/// Monic irreducible real quadratic `t^2 + p*t + q` with negative
/// discriminant, so its roots are a conjugate pair `z`, `conj(z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticFactor {
    pub p: Rational,
    pub q: Rational,
    pub multiplicity: u32,
}

/// A real root of a factored polynomial, exact when trial division confirmed
/// a rational value.
#[derive(Clone, Debug, PartialEq)]
pub enum RootValue {
    Exact(Rational),
    Approx(f64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinearFactor {
    pub root: RootValue,
    pub multiplicity: u32,
}

/// Conjugate-pair quadratic that could not be confirmed as exact rational.
#[derive(Clone, Debug, PartialEq)]
pub struct ApproxQuadratic {
    pub p: f64,
    pub q: f64,
    pub multiplicity: u32,
}

/// Output of [`factor_real`].
#[derive(Clone, Debug, PartialEq)]
pub struct RealFactorization {
    pub leading: Rational,
    pub linear: Vec<LinearFactor>,
    pub quadratics: Vec<QuadraticFactor>,
    /// Factors only known numerically; never used for exact decisions.
    pub approx_quadratics: Vec<ApproxQuadratic>,
}

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("gcd undefined for two zero polynomials")]
    GcdOfZeros,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("numeric root finding failed to converge on square-free part of degree {0}")]
    RootFindingFailed(usize),
}

impl RealPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RealPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        RealPoly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn zero() -> Self {
        RealPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        RealPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RealPoly::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        RealPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> RealPoly {
        match self.leading() {
            None => RealPoly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                RealPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn scale(&self, s: &Rational) -> RealPoly {
        RealPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> RealPoly {
        if self.coeffs.len() <= 1 {
            return RealPoly::zero();
        }
        RealPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat_int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(rat_to_f64(c), 0.0);
        }
        acc
    }

    /// Euclidean division, `self = quot * div + rem` with `deg rem < deg div`.
    pub fn div_rem(&self, div: &RealPoly) -> Result<(RealPoly, RealPoly), PolyError> {
        let dd = div.degree().ok_or(PolyError::DivisionByZero)?;
        let lc_inv = div.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() * &lc_inv;
            if !factor.is_zero() {
                for (i, c) in div.coeffs.iter().enumerate() {
                    let delta = c * &factor;
                    rem[k + i] -= delta;
                }
                quot[k] = factor;
            }
            rem.pop();
        }
        Ok((RealPoly::new(quot), RealPoly::new(rem)))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, div: &RealPoly) -> RealPoly {
        let (q, r) = self.div_rem(div).expect("exact_div by zero");
        assert!(r.is_zero(), "exact_div left a remainder");
        q
    }

    pub fn divides(&self, other: &RealPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// Largest `k` with `q^k | self` (0 when `q` does not divide).
    pub fn multiplicity_of(&self, q: &RealPoly) -> u32 {
        assert!(!q.is_constant(), "multiplicity of a constant factor");
        let mut k = 0;
        let mut cur = self.clone();
        while !cur.is_zero() {
            match cur.div_rem(q) {
                Ok((quot, rem)) if rem.is_zero() => {
                    k += 1;
                    cur = quot;
                }
                _ => break,
            }
        }
        k
    }

    pub fn pow(&self, mut n: u32) -> RealPoly {
        let mut base = self.clone();
        let mut acc = RealPoly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Square-free decomposition by Yun's algorithm: returns `(s_i, i)` pairs
    /// with each `s_i` monic square-free and `self = lc * prod s_i^i`.
    pub fn square_free_decomposition(&self) -> Vec<(RealPoly, u32)> {
        let f = self.monic();
        if f.is_constant() {
            return vec![];
        }
        let df = f.derivative();
        let mut a = real_gcd(&f, &df).expect("nonzero input");
        let mut b = f.exact_div(&a);
        let mut c = df.exact_div(&a) - b.derivative();
        let mut out = Vec::new();
        let mut i = 1u32;
        while b.degree().is_some_and(|d| d > 0) {
            a = real_gcd(&b, &c).expect("nonzero chain");
            if a.degree().is_some_and(|d| d > 0) {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a);
            c = c.exact_div(&a) - b.derivative();
            i += 1;
        }
        out
    }
}

impl fmt::Display for RealPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 || !mag.is_one() {
                write!(f, "{}", mag)?;
                if k > 0 {
                    write!(f, "*")?;
                }
            }
            if k == 1 {
                write!(f, "t")?;
            } else if k > 1 {
                write!(f, "t^{}", k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RealPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &RealPoly {
    type Output = RealPoly;
    fn add(self, rhs: &RealPoly) -> RealPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        RealPoly::new(out)
    }
}

impl Sub for &RealPoly {
    type Output = RealPoly;
    fn sub(self, rhs: &RealPoly) -> RealPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        RealPoly::new(out)
    }
}

impl Mul for &RealPoly {
    type Output = RealPoly;
    fn mul(self, rhs: &RealPoly) -> RealPoly {
        if self.is_zero() || rhs.is_zero() {
            return RealPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RealPoly::new(out)
    }
}

impl Neg for &RealPoly {
    type Output = RealPoly;
    fn neg(self) -> RealPoly {
        RealPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RealPoly {
            type Output = RealPoly;
            fn $method(self, rhs: RealPoly) -> RealPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Monic greatest common divisor by the Euclidean algorithm.
pub fn real_gcd(a: &RealPoly, b: &RealPoly) -> Result<RealPoly, PolyError> {
    if a.is_zero() && b.is_zero() {
        return Err(PolyError::GcdOfZeros);
    }
    let mut x = a.monic();
    let mut y = b.monic();
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y)?;
        x = y;
        y = r.monic();
    }
    Ok(x.monic())
}

/// Gcd of a list, `1` when the list is empty or all zero entries are skipped.
pub fn real_gcd_many<'a>(polys: impl IntoIterator<Item = &'a RealPoly>) -> RealPoly {
    let mut acc = RealPoly::zero();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        if acc.is_zero() {
            acc = p.monic();
        } else {
            acc = real_gcd(&acc, p).expect("nonzero operand");
        }
        if acc.is_one() {
            break;
        }
    }
    if acc.is_zero() {
        RealPoly::one()
    } else {
        acc
    }
}

impl QuadraticFactor {
    /// Requires `p^2 - 4q < 0`.
    pub fn new(p: Rational, q: Rational, multiplicity: u32) -> Self {
        let disc = &p * &p - rat_int(4) * &q;
        assert!(disc.is_negative(), "quadratic factor must be irreducible over R");
        QuadraticFactor { p, q, multiplicity }
    }

    pub fn as_poly(&self) -> RealPoly {
        RealPoly::new(vec![self.q.clone(), self.p.clone(), Rational::one()])
    }

    /// Conjugate roots `(-p ± i*sqrt(4q - p^2))/2`, positive imaginary first.
    pub fn roots(&self) -> (Complex64, Complex64) {
        let p = rat_to_f64(&self.p);
        let q = rat_to_f64(&self.q);
        let im = (4.0 * q - p * p).sqrt() / 2.0;
        let re = -p / 2.0;
        (Complex64::new(re, im), Complex64::new(re, -im))
    }
}

/// Weierstrass / Durand-Kerner iteration on a monic square-free polynomial.
fn durand_kerner(coeffs: &[f64]) -> Option<Vec<Complex64>> {
    let deg = coeffs.len() - 1;
    debug_assert!((coeffs[deg] - 1.0).abs() < 1e-12);
    let radius = 1.0 + coeffs.iter().take(deg).map(|c| c.abs()).fold(0.0, f64::max);
    let mut roots: Vec<Complex64> = (0..deg)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / deg as f64 + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();
    let eval = |z: Complex64| {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    for _ in 0..800 {
        let mut max_step = 0.0f64;
        for k in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if j != k {
                    denom *= roots[k] - roots[j];
                }
            }
            if denom.norm() == 0.0 {
                return None;
            }
            let step = eval(roots[k]) / denom;
            roots[k] -= step;
            max_step = max_step.max(step.norm() / roots[k].norm().max(1.0));
        }
        if max_step < 1e-14 {
            return Some(roots);
        }
    }
    None
}

/// Factor a nonzero polynomial into its leading coefficient, real linear
/// factors and irreducible quadratics, with exact multiplicities.
pub fn factor_real(p: &RealPoly) -> Result<RealFactorization, PolyError> {
    assert!(!p.is_zero(), "factor_real on the zero polynomial");
    let leading = p.leading().unwrap().clone();
    let mut out = RealFactorization {
        leading,
        linear: vec![],
        quadratics: vec![],
        approx_quadratics: vec![],
    };
    for (part, mult) in p.square_free_decomposition() {
        split_square_free(&part, mult, &mut out)?;
    }
    Ok(out)
}

fn split_square_free(part: &RealPoly, mult: u32, out: &mut RealFactorization) -> Result<(), PolyError> {
    match part.degree() {
        None | Some(0) => Ok(()),
        Some(1) => {
            // monic t + c, root -c
            let root = -part.coeff(0);
            out.linear.push(LinearFactor { root: RootValue::Exact(root), multiplicity: mult });
            Ok(())
        }
        Some(2) => {
            let p1 = part.coeff(1);
            let q0 = part.coeff(0);
            let disc = &p1 * &p1 - rat_int(4) * &q0;
            if disc.is_negative() {
                out.quadratics.push(QuadraticFactor::new(p1, q0, mult));
            } else if let Some(sq) = rational_sqrt(&disc) {
                let half = crate::scalar::rat(1, 2);
                let r1 = (-&p1 + &sq) * &half;
                let r2 = (-&p1 - &sq) * &half;
                out.linear.push(LinearFactor { root: RootValue::Exact(r1), multiplicity: mult });
                out.linear.push(LinearFactor { root: RootValue::Exact(r2), multiplicity: mult });
            } else {
                // Real irrational pair.
                let p = rat_to_f64(&p1);
                let d = rat_to_f64(&disc).sqrt();
                out.linear.push(LinearFactor { root: RootValue::Approx((-p + d) / 2.0), multiplicity: mult });
                out.linear.push(LinearFactor { root: RootValue::Approx((-p - d) / 2.0), multiplicity: mult });
            }
            Ok(())
        }
        Some(deg) => {
            let coeffs: Vec<f64> = part.coeffs().iter().map(rat_to_f64).collect();
            let roots = durand_kerner(&coeffs).ok_or(PolyError::RootFindingFailed(deg))?;
            split_numeric_roots(part, &roots, mult, out);
            Ok(())
        }
    }
}

const DEN_BOUND: u64 = 1_000_000;
const RECONSTRUCT_TOL: f64 = 1e-9;

/// Pair numeric roots into real roots and conjugate pairs, confirm rational
/// candidates by exact trial division against the square-free part.
fn split_numeric_roots(part: &RealPoly, roots: &[Complex64], mult: u32, out: &mut RealFactorization) {
    let scale = roots.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let mut remaining = part.clone();
    let mut upper: Vec<Complex64> = vec![];
    for z in roots {
        if z.im.abs() < 1e-9 * scale {
            // Real root: try exact confirmation.
            let confirmed = rational_reconstruct(z.re, DEN_BOUND, RECONSTRUCT_TOL).and_then(|r| {
                let lin = RealPoly::new(vec![-r.clone(), Rational::one()]);
                lin.divides(&remaining).then_some((r, lin))
            });
            match confirmed {
                Some((r, lin)) => {
                    remaining = remaining.exact_div(&lin);
                    out.linear.push(LinearFactor { root: RootValue::Exact(r), multiplicity: mult });
                }
                None => out.linear.push(LinearFactor { root: RootValue::Approx(z.re), multiplicity: mult }),
            }
        } else if z.im > 0.0 {
            upper.push(*z);
        }
    }
    for z in upper {
        let p = -2.0 * z.re;
        let q = z.norm_sqr();
        let confirmed = rational_reconstruct(p, DEN_BOUND, RECONSTRUCT_TOL)
            .zip(rational_reconstruct(q, DEN_BOUND, RECONSTRUCT_TOL))
            .and_then(|(pr, qr)| {
                let quad = RealPoly::new(vec![qr.clone(), pr.clone(), Rational::one()]);
                (quad.divides(&remaining)
                    && (&pr * &pr - rat_int(4) * &qr).is_negative())
                .then_some((pr, qr, quad))
            });
        match confirmed {
            Some((pr, qr, quad)) => {
                remaining = remaining.exact_div(&quad);
                out.quadratics.push(QuadraticFactor::new(pr, qr, mult));
            }
            None => out.approx_quadratics.push(ApproxQuadratic { p, q, multiplicity: mult }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn t2_plus_1() -> RealPoly {
        RealPoly::from_ints(&[1, 0, 1])
    }

    #[test]
    fn gcd_shared_factor() {
        // gcd(t^2+1, (t^2+1)(t-2)) = t^2+1
        let a = t2_plus_1();
        let b = &a * &RealPoly::from_ints(&[-2, 1]);
        assert_eq!(real_gcd(&a, &b).unwrap(), a);
    }

    #[test]
    fn gcd_coprime() {
        let a = t2_plus_1();
        let b = RealPoly::from_ints(&[2, 0, 1]);
        assert_eq!(real_gcd(&a, &b).unwrap(), RealPoly::one());
    }

    #[test]
    fn gcd_sign_normalization() {
        let a = t2_plus_1();
        let b = -&t2_plus_1();
        assert_eq!(real_gcd(&a, &b).unwrap(), a);
    }

    #[test]
    fn gcd_of_zeros_is_error() {
        assert!(real_gcd(&RealPoly::zero(), &RealPoly::zero()).is_err());
    }

    #[test]
    fn factor_declared_square() {
        // (t^2+1)^2
        let p = t2_plus_1().pow(2);
        let f = factor_real(&p).unwrap();
        assert!(f.linear.is_empty() && f.approx_quadratics.is_empty());
        assert_eq!(f.quadratics, vec![QuadraticFactor::new(rat_int(0), rat_int(1), 2)]);
    }

    #[test]
    fn factor_mixed() {
        // t^3 + t = t(t^2+1)
        let p = RealPoly::from_ints(&[0, 1, 0, 1]);
        let f = factor_real(&p).unwrap();
        assert_eq!(f.linear, vec![LinearFactor { root: RootValue::Exact(rat_int(0)), multiplicity: 1 }]);
        assert_eq!(f.quadratics, vec![QuadraticFactor::new(rat_int(0), rat_int(1), 1)]);
    }

    #[test]
    fn factor_two_quadratics() {
        // (t^2+1)(t^2+4), verified by exact expansion
        let p = &t2_plus_1() * &RealPoly::from_ints(&[4, 0, 1]);
        assert_eq!(p, RealPoly::from_ints(&[4, 0, 5, 0, 1]));
        let f = factor_real(&p).unwrap();
        assert!(f.approx_quadratics.is_empty());
        let mut quads = f.quadratics.clone();
        quads.sort_by(|a, b| a.q.cmp(&b.q));
        assert_eq!(
            quads,
            vec![
                QuadraticFactor::new(rat_int(0), rat_int(1), 1),
                QuadraticFactor::new(rat_int(0), rat_int(4), 1),
            ]
        );
    }

    #[test]
    fn factor_reexpands_exactly() {
        // lc * linear * quadratics reproduces the input when all parts are exact
        let p = RealPoly::new(vec![rat(-1, 2), Rational::one()])
            .mul(RealPoly::from_ints(&[1, 1, 1]).pow(2))
            .scale(&rat(3, 7));
        let f = factor_real(&p).unwrap();
        let mut acc = RealPoly::constant(f.leading.clone());
        for lin in &f.linear {
            let RootValue::Exact(r) = &lin.root else { panic!("expected exact root") };
            let l = RealPoly::new(vec![-r.clone(), Rational::one()]);
            acc = &acc * &l.pow(lin.multiplicity);
        }
        for q in &f.quadratics {
            acc = &acc * &q.as_poly().pow(q.multiplicity);
        }
        assert!(f.approx_quadratics.is_empty());
        assert_eq!(acc, p);
    }

    #[test]
    fn factor_irreducible_quartic_stays_numeric() {
        // t^4 + 1 has no rational quadratic split
        let p = RealPoly::from_ints(&[1, 0, 0, 0, 1]);
        let f = factor_real(&p).unwrap();
        assert!(f.quadratics.is_empty() && f.linear.is_empty());
        assert_eq!(f.approx_quadratics.len(), 2);
        for aq in &f.approx_quadratics {
            // t^2 ± sqrt(2) t + 1
            assert!((aq.p.abs() - std::f64::consts::SQRT_2).abs() < 1e-9);
            assert!((aq.q - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn quadratic_roots_values() {
        let (z, zb) = QuadraticFactor::new(rat_int(0), rat_int(1), 1).roots();
        assert_eq!((z.re, z.im), (0.0, 1.0));
        assert_eq!((zb.re, zb.im), (0.0, -1.0));

        let (z, _) = QuadraticFactor::new(rat_int(0), rat_int(4), 1).roots();
        assert_eq!((z.re, z.im), (0.0, 2.0));

        // t^2 - 2t + 2 has roots 1 ± i; residual below 1e-12
        let q = QuadraticFactor::new(rat_int(-2), rat_int(2), 1);
        let (z, zb) = q.roots();
        assert!((z - Complex64::new(1.0, 1.0)).norm() < 1e-12);
        assert!((zb - Complex64::new(1.0, -1.0)).norm() < 1e-12);
        assert!(q.as_poly().eval_complex(z).norm() < 1e-12);
    }

    #[test]
    fn square_free_decomposition_multiplicities() {
        // t^2 (t^2+1)^3 (t-1)
        let p = RealPoly::from_ints(&[0, 0, 1])
            .mul(t2_plus_1().pow(3))
            .mul(RealPoly::from_ints(&[-1, 1]));
        let parts = p.square_free_decomposition();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], (RealPoly::from_ints(&[-1, 1]), 1));
        assert_eq!(parts[1], (RealPoly::from_ints(&[0, 1]), 2));
        assert_eq!(parts[2], (t2_plus_1(), 3));
    }

    #[test]
    fn multiplicity_by_trial_division() {
        let q = t2_plus_1();
        let p = q.pow(3).mul(RealPoly::from_ints(&[5, 1]));
        assert_eq!(p.multiplicity_of(&q), 3);
        assert_eq!(p.multiplicity_of(&RealPoly::from_ints(&[4, 0, 1])), 0);
    }
}
