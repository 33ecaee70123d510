//! Constructors for motions with prescribed exceptional degree reduction and
//! the named example families.
//!
//! The general recipe: given a monic motion polynomial `R + eps*E` and any
//! `H` in `H[t]`, the motion `c*Q + eps*D` with `c = norm(H)`, `Q = R*H`,
//! `D = E*H` has an exceptional degree reduction by `2*deg H`. The planar
//! variant keeps the primal part in the span of `{1, k}` and the dual part
//! in the span of `{i, j}`, which makes the Study condition automatic.

use thiserror::Error;

use crate::motion::{motion_from_parts, MotionError, MotionPolynomial};
use crate::qpoly::{DualQuatPoly, QuatPoly};
use crate::quat::QuatRational;
use crate::realpoly::RealPoly;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("seed motion invalid: {0}")]
    InvalidSeed(MotionError),
    #[error("not planar form: {0}")]
    NotPlanarForm(String),
    #[error("{0}")]
    BadInput(String),
    #[error(transparent)]
    Motion(#[from] MotionError),
}

/// `c*R*H + eps*E*H` with `c = norm(H)`, for a monic motion polynomial seed
/// `R + eps*E` and any nonzero `H`. The output has exceptional degree
/// reduction at least `2*deg H` and is returned in reduced monic normal
/// form.
pub fn exceptional(
    r: &QuatPoly,
    e: &QuatPoly,
    h: &QuatPoly,
) -> Result<MotionPolynomial, ConstructError> {
    if h.is_zero() {
        return Err(ConstructError::BadInput("H must be nonzero".into()));
    }
    let seed = motion_from_parts(r.clone(), e.clone()).map_err(ConstructError::InvalidSeed)?;
    if !seed.is_monic() {
        return Err(ConstructError::BadInput("seed motion must be monic".into()));
    }
    let c = h.norm_poly();
    let primal = (r * h).mul_real(&c);
    let dual = e * h;
    let motion = motion_from_parts(primal, dual)?;
    Ok(motion.normal_form())
}

fn in_span_1k(p: &QuatPoly) -> bool {
    let [_, x, y, _] = p.components();
    x.is_zero() && y.is_zero()
}

fn in_span_ij(p: &QuatPoly) -> bool {
    let [w, _, _, z] = p.components();
    w.is_zero() && z.is_zero()
}

/// Planar instance of the `c*R + eps*F*D` construction with `c = norm(R)`:
/// `R` and `F` in the span of `{1, k}`, `D` in the span of `{i, j}`. The
/// component split guarantees the Study condition.
pub fn planar(r: &QuatPoly, d: &QuatPoly, f: &QuatPoly) -> Result<MotionPolynomial, ConstructError> {
    if !in_span_1k(r) {
        return Err(ConstructError::NotPlanarForm("R must lie in the span of 1, k".into()));
    }
    if !in_span_1k(f) {
        return Err(ConstructError::NotPlanarForm("F must lie in the span of 1, k".into()));
    }
    if !in_span_ij(d) {
        return Err(ConstructError::NotPlanarForm("D must lie in the span of i, j".into()));
    }
    if r.is_zero() {
        return Err(ConstructError::BadInput("R must be nonzero".into()));
    }
    let c = r.norm_poly();
    let primal = r.mul_real(&c);
    let dual = f * d;
    let deg_p = primal.degree().expect("nonzero");
    if dual.degree().is_some_and(|dd| dd > deg_p) {
        return Err(ConstructError::BadInput("deg(F*D) must not exceed deg(c*R)".into()));
    }
    let motion = motion_from_parts(primal, dual)?;
    Ok(motion.normal_form())
}

/// Darboux motion `norm(Q)*Q + eps*D*Q` with `deg Q = 1`, `deg D = 2`.
/// Validity requires `D` vectorial; the vertical case has `[Q(z)] = [DQ(z)]`
/// at the roots of `norm(Q)`.
pub fn darboux(q: &QuatPoly, d: &QuatPoly) -> Result<MotionPolynomial, ConstructError> {
    if q.degree() != Some(1) {
        return Err(ConstructError::BadInput("Q must have degree 1".into()));
    }
    if d.degree() != Some(2) {
        return Err(ConstructError::BadInput("D must have degree 2".into()));
    }
    let primal = q.mul_real(&q.norm_poly());
    let dual = d * q;
    let motion = motion_from_parts(primal, dual)?;
    Ok(motion.normal_form())
}

/// Wunderlich composition `W = F*C` of a translation polynomial
/// `F = f + eps*G` (`f` real of degree 1, `G` vectorial of degree at most 1)
/// with a Darboux motion `C`. Degenerate compositions with a common real
/// factor are reduced, not rejected.
pub fn wunderlich(
    f: &RealPoly,
    g: &QuatPoly,
    c: &MotionPolynomial,
) -> Result<MotionPolynomial, ConstructError> {
    if f.degree() != Some(1) {
        return Err(ConstructError::BadInput("f must have degree 1".into()));
    }
    if g.degree().is_some_and(|d| d > 1) {
        return Err(ConstructError::BadInput("G must have degree at most 1".into()));
    }
    let factor = DualQuatPoly::new(QuatPoly::from_real(f), g.clone());
    MotionPolynomial::validate(factor.clone()).map_err(ConstructError::InvalidSeed)?;
    let product = &factor * c.poly();
    let motion = MotionPolynomial::validate(product)?;
    Ok(motion.normal_form())
}

/// The Cardan motion `(t^2+1)(t-k) + eps*(t*i + j)`: planar, quaternion
/// degree three, trajectories of degree two.
pub fn cardan() -> MotionPolynomial {
    let r = QuatPoly::linear_from_root(&QuatRational::k());
    let d = QuatPoly::new(vec![QuatRational::j(), QuatRational::i()]);
    planar(&r, &d, &QuatPoly::one()).expect("Cardan data is planar")
}

/// The Oldham motion, conjugate of the Cardan motion; trajectories of
/// degree four.
pub fn oldham() -> MotionPolynomial {
    cardan().inverse()
}

/// A Darboux instance with a generic oscillation: `Q = t - k`,
/// `D = t^2*i + t*j + k`.
pub fn darboux_default() -> MotionPolynomial {
    let q = QuatPoly::linear_from_root(&QuatRational::k());
    let d = QuatPoly::new(vec![QuatRational::k(), QuatRational::j(), QuatRational::i()]);
    darboux(&q, &d).expect("default Darboux data is valid")
}

/// A vertical Darboux instance: `Q = t - k`, `D = k + (t^2+1)*i`, so that
/// `[Q(i)] = [DQ(i)]` and the inverse motion keeps its degree reduction.
pub fn vertical_darboux_default() -> MotionPolynomial {
    let q = QuatPoly::linear_from_root(&QuatRational::k());
    let d = QuatPoly::new(vec![QuatRational::from_ints(0, 1, 0, 1), QuatRational::zero(), QuatRational::i()]);
    darboux(&q, &d).expect("vertical Darboux data is valid")
}

/// The Wunderlich composition of the default Darboux motion with the
/// translation `t + eps*i`: quaternion degree four, trajectories of degree
/// three.
pub fn wunderlich_default() -> MotionPolynomial {
    let f = RealPoly::from_ints(&[0, 1]);
    let g = QuatPoly::constant(QuatRational::i());
    wunderlich(&f, &g, &darboux_default()).expect("default Wunderlich data is valid")
}
