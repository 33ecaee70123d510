//! Validated motion polynomials, normal forms, trajectories and the sampling
//! oracle for the generic trajectory degree.
//!
//! A motion polynomial is a dual quaternion polynomial `P + eps*D` whose
//! Study defect `P*conj(D) + D*conj(P)` vanishes identically and whose norm
//! polynomial `P*conj(P)` is nonzero. The trajectory of a point
//! `[x0 + x]` is the rational curve
//! `x0*norm(P) + P*x*conj(P) + 2*x0*P*conj(D)`.

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::qpoly::{DualQuatPoly, QuatPoly};
use crate::quat::{ProjectivePoint3, QuatRational};
use crate::realpoly::{real_gcd_many, RealPoly};
use crate::scalar::{rat_int, Rational};

#[derive(Debug, Error)]
pub enum MotionError {
    #[error("Study condition violated; defect polynomial: {defect:?}")]
    StudyViolation { defect: QuatPoly },
    #[error("norm polynomial vanishes: zero primal part")]
    NullNorm,
    #[error("invalid input: {0}")]
    Invalid(String),
}

/// A dual quaternion polynomial validated as a motion polynomial, with its
/// degree and normalization flags cached.
#[derive(Clone, Debug, PartialEq)]
pub struct MotionPolynomial {
    poly: DualQuatPoly,
    degree: usize,
    reduced: bool,
    monic: bool,
}

/// Homogeneous trajectory of a point: four coordinate polynomials of degree
/// at most `2n`.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub coords: [RealPoly; 4],
    pub source: ProjectivePoint3,
}

impl MotionPolynomial {
    /// Accepts iff the Study identity holds coefficient-wise and the norm
    /// polynomial of the primal part does not vanish.
    pub fn validate(poly: DualQuatPoly) -> Result<Self, MotionError> {
        if poly.primal.is_zero() {
            return Err(MotionError::NullNorm);
        }
        let defect = poly.study_defect();
        if !defect.is_zero() {
            return Err(MotionError::StudyViolation { defect });
        }
        let degree = poly.degree().expect("nonzero polynomial");
        let reduced = poly.content().is_one();
        let monic = poly.leading().is_some_and(|lead| lead.is_one());
        Ok(MotionPolynomial { poly, degree, reduced, monic })
    }

    pub fn poly(&self) -> &DualQuatPoly {
        &self.poly
    }

    pub fn primal(&self) -> &QuatPoly {
        &self.poly.primal
    }

    pub fn dual(&self) -> &QuatPoly {
        &self.poly.dual
    }

    /// Quaternion degree `n = max(deg P, deg D)`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_monic(&self) -> bool {
        self.monic
    }

    /// Divide all eight components by their real gcd; same rational curve.
    pub fn reduce(&self) -> MotionPolynomial {
        if self.reduced {
            return self.clone();
        }
        let content = self.poly.content();
        let poly = self.poly.div_real_exact(&content);
        let mut out = MotionPolynomial::validate(poly).expect("reduction preserves validity");
        out.reduced = true;
        out
    }

    /// Normalize the leading coefficient to 1 by left multiplication with its
    /// inverse. When the leading coefficient is a zero divisor, a fractional
    /// linear parameter transformation `t -> (a*t + 1)/t` is applied first,
    /// with `a` the first of `0, 1, -1, 2, -2, ...` that is not a zero of the
    /// primal norm polynomial; only finitely many values are excluded.
    pub fn make_monic(&self) -> MotionPolynomial {
        if self.monic {
            return self.clone();
        }
        let lead = self.poly.leading().expect("nonzero polynomial");
        let poly = if !lead.primal().norm().is_zero() {
            self.poly.clone()
        } else {
            let norm = self.primal().norm_poly();
            let shift = (0i64..)
                .flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] })
                .find(|&a| !norm.eval(&rat_int(a)).is_zero())
                .expect("finitely many singular parameters");
            self.poly
                .reparameterize(&rat_int(shift), &rat_int(1), &rat_int(1), &rat_int(0))
                .expect("unimodular transform")
        };
        let lead = poly.leading().expect("nonzero polynomial");
        let inv = lead
            .try_inv()
            .expect("leading coefficient invertible after transform");
        let poly = poly.lmul_dq(&inv);
        let mut out = MotionPolynomial::validate(poly).expect("normalization preserves validity");
        out.monic = true;
        out
    }

    /// Reduced monic representative of the same rational motion.
    pub fn normal_form(&self) -> MotionPolynomial {
        self.reduce().make_monic()
    }

    /// Coefficient-wise conjugate: the inverse motion, interchanging the
    /// fixed and the moving frame.
    pub fn inverse(&self) -> MotionPolynomial {
        MotionPolynomial::validate(self.poly.conj()).expect("conjugate of a motion polynomial")
    }

    /// Exact homogeneous trajectory of `pt`. Meant for reduced motions; the
    /// analysis and CLI paths reduce first.
    pub fn trajectory(&self, pt: &ProjectivePoint3) -> Trajectory {
        let p = &self.poly.primal;
        let d = &self.poly.dual;
        let x0 = &pt.coords()[0];
        let x_vec = pt.as_quaternion().vector_part();

        // x0 * norm(P) is the scalar coordinate; the vector coordinates come
        // from P*x*conj(P) + 2*x0*P*conj(D).
        let scalar = self.primal().norm_poly().scale(x0);
        let rotated = &(p * &QuatPoly::constant(x_vec)) * &p.conj();
        let translated = (p * &d.conj()).scale(&(x0 + x0));
        let vector = &rotated + &translated;
        let [w, x, y, z] = vector.components();
        debug_assert!(w.is_zero(), "trajectory scalar part separates exactly");
        Trajectory {
            coords: [scalar, x, y, z],
            source: pt.clone(),
        }
    }

    /// Degree of the reduced trajectory of `pt`.
    pub fn trajectory_degree(&self, pt: &ProjectivePoint3) -> usize {
        self.trajectory(pt).degree()
    }

    /// Maximal trajectory degree over pseudorandom rational points;
    /// deterministic for a fixed seed.
    pub fn generic_degree_oracle(&self, trials: u32, seed: u64) -> usize {
        assert!(trials >= 1);
        (0..trials)
            .map(|trial| self.trajectory_degree(&random_point(seed, trial)))
            .max()
            .unwrap()
    }
}

/// Pseudorandom projective point with coordinates `n/d`, both uniform in
/// `[-97, 97]` excluding zero, derived from `(seed, trial)`.
pub fn random_point(seed: u64, trial: u32) -> ProjectivePoint3 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64 + 1);
    let coords = std::array::from_fn(|_| random_rational(&mut rng));
    ProjectivePoint3::new(coords)
}

pub(crate) fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let mut draw = || loop {
        let v = rng.gen_range(-97i64..=97);
        if v != 0 {
            return v;
        }
    };
    crate::scalar::rat(draw(), draw())
}

impl Trajectory {
    /// Real content of the four coordinates.
    pub fn content(&self) -> RealPoly {
        real_gcd_many(self.coords.iter())
    }

    /// Coordinates with the content divided out.
    pub fn reduced_coords(&self) -> [RealPoly; 4] {
        let content = self.content();
        std::array::from_fn(|i| {
            if self.coords[i].is_zero() {
                RealPoly::zero()
            } else {
                self.coords[i].exact_div(&content)
            }
        })
    }

    /// Degree of the underlying rational curve (content removed).
    pub fn degree(&self) -> usize {
        self.reduced_coords()
            .iter()
            .filter_map(|c| c.degree())
            .max()
            .expect("trajectory coordinates not all zero")
    }

    /// Exact evaluation; `None` when all coordinates vanish at `t`.
    pub fn eval(&self, t: &Rational) -> Option<ProjectivePoint3> {
        let vals: [Rational; 4] = std::array::from_fn(|i| self.coords[i].eval(t));
        if vals.iter().all(|v| v.is_zero()) {
            None
        } else {
            Some(ProjectivePoint3::new(vals))
        }
    }
}

/// `P + eps*D` from parts, validated.
pub fn motion_from_parts(primal: QuatPoly, dual: QuatPoly) -> Result<MotionPolynomial, MotionError> {
    MotionPolynomial::validate(DualQuatPoly::new(primal, dual))
}

/// Linear motion polynomial `t - h + eps*g`; valid iff `g` is vectorial and
/// orthogonal to `h` in the 4-dimensional sense.
pub fn linear_motion(h: &QuatRational, g: &QuatRational) -> Result<MotionPolynomial, MotionError> {
    let primal = QuatPoly::linear_from_root(h);
    let dual = QuatPoly::constant(g.clone());
    motion_from_parts(primal, dual)
}

/// Pure translation `1 + eps*v` with `v` vectorial.
pub fn translation(v: &QuatRational) -> Result<MotionPolynomial, MotionError> {
    motion_from_parts(QuatPoly::one(), QuatPoly::constant(v.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realpoly::RealPoly;

    fn cardan_poly() -> DualQuatPoly {
        let p = QuatPoly::linear_from_root(&QuatRational::k()).mul_real(&RealPoly::from_ints(&[1, 0, 1]));
        let d = QuatPoly::new(vec![QuatRational::j(), QuatRational::i()]);
        DualQuatPoly::new(p, d)
    }

    #[test]
    fn validate_cardan() {
        let m = MotionPolynomial::validate(cardan_poly()).unwrap();
        assert_eq!(m.degree(), 3);
        assert!(m.is_reduced());
        assert!(m.is_monic());
    }

    #[test]
    fn validate_study_violation_defect() {
        // t - k + eps has defect 2t
        let c = DualQuatPoly::new(QuatPoly::linear_from_root(&QuatRational::k()), QuatPoly::one());
        match MotionPolynomial::validate(c) {
            Err(MotionError::StudyViolation { defect }) => {
                let expect = QuatPoly::new(vec![QuatRational::zero(), QuatRational::from_ints(2, 0, 0, 0)]);
                assert_eq!(defect, expect);
            }
            other => panic!("expected StudyViolation, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn validate_null_norm() {
        let c = DualQuatPoly::new(QuatPoly::zero(), QuatPoly::constant(QuatRational::i()));
        assert!(matches!(MotionPolynomial::validate(c), Err(MotionError::NullNorm)));
    }

    #[test]
    fn reduce_strips_common_factor() {
        // (t^2+1) * (t - k + eps*j) reduces back to t - k + eps*j
        let c = RealPoly::from_ints(&[1, 0, 1]);
        let base = DualQuatPoly::new(
            QuatPoly::linear_from_root(&QuatRational::k()),
            QuatPoly::constant(QuatRational::j()),
        );
        let blown = DualQuatPoly::new(base.primal.mul_real(&c), base.dual.mul_real(&c));
        let m = MotionPolynomial::validate(blown).unwrap();
        assert!(!m.is_reduced());
        let r = m.reduce();
        assert!(r.is_reduced());
        assert_eq!(r.poly(), &base);
        // already reduced input is unchanged
        assert_eq!(r.reduce().poly(), &base);
    }

    #[test]
    fn cardan_is_already_reduced() {
        let m = MotionPolynomial::validate(cardan_poly()).unwrap();
        assert_eq!(m.reduce().poly(), m.poly());
    }

    #[test]
    fn make_monic_scalar_leading() {
        // 2t - 2k -> t - k
        let c = DualQuatPoly::new(
            QuatPoly::new(vec![QuatRational::from_ints(0, 0, 0, -2), QuatRational::from_ints(2, 0, 0, 0)]),
            QuatPoly::zero(),
        );
        let m = MotionPolynomial::validate(c).unwrap().make_monic();
        assert_eq!(m.primal(), &QuatPoly::linear_from_root(&QuatRational::k()));
    }

    #[test]
    fn make_monic_unit_leading() {
        // i*t + j -> t - k after left multiplication by -i
        let c = DualQuatPoly::new(QuatPoly::new(vec![QuatRational::j(), QuatRational::i()]), QuatPoly::zero());
        let m = MotionPolynomial::validate(c).unwrap().make_monic();
        assert_eq!(m.primal(), &QuatPoly::linear_from_root(&QuatRational::k()));
    }

    #[test]
    fn make_monic_zero_divisor_leading() {
        // dual-degree-dominant leading coefficient forces the parameter shift
        // 1 + eps*(t*i): leading coefficient eps*i is a zero divisor
        let c = DualQuatPoly::new(
            QuatPoly::one(),
            QuatPoly::new(vec![QuatRational::zero(), QuatRational::i()]),
        );
        let m = MotionPolynomial::validate(c).unwrap();
        assert!(!m.is_monic());
        let monic = m.make_monic();
        assert!(monic.is_monic());
        assert!(monic.poly().leading().unwrap().is_one());
    }

    #[test]
    fn trajectory_identity_is_constant() {
        let id = motion_from_parts(QuatPoly::one(), QuatPoly::zero()).unwrap();
        let pt = ProjectivePoint3::from_ints(1, 2, -3, 5);
        let tr = id.trajectory(&pt);
        assert_eq!(tr.degree(), 0);
        assert_eq!(tr.eval(&rat_int(7)).unwrap(), pt);
    }

    #[test]
    fn trajectory_rotation_circle() {
        // C = t - k acting on [1:1:0:0]: (t-k) i (t+k) = (t^2-1)i - 2t j
        let m = motion_from_parts(QuatPoly::linear_from_root(&QuatRational::k()), QuatPoly::zero()).unwrap();
        let pt = ProjectivePoint3::from_ints(1, 1, 0, 0);
        let tr = m.trajectory(&pt);
        assert_eq!(tr.coords[0], RealPoly::from_ints(&[1, 0, 1]));
        assert_eq!(tr.coords[1], RealPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(tr.coords[2], RealPoly::from_ints(&[0, -2]));
        assert!(tr.coords[3].is_zero());
        assert_eq!(tr.degree(), 2);
    }

    #[test]
    fn cardan_generic_point_degree_two() {
        let m = MotionPolynomial::validate(cardan_poly()).unwrap();
        let pt = ProjectivePoint3::from_ints(1, 2, 3, 5);
        assert_eq!(m.trajectory_degree(&pt), 2);
        assert_eq!(m.generic_degree_oracle(8, 42), 2);
    }

    #[test]
    fn oldham_generic_point_degree_four() {
        let m = MotionPolynomial::validate(cardan_poly()).unwrap().inverse();
        assert_eq!(m.generic_degree_oracle(8, 42), 4);
    }

    #[test]
    fn inverse_is_involution_and_translation_flips() {
        let m = MotionPolynomial::validate(cardan_poly()).unwrap();
        assert_eq!(m.inverse().inverse(), m);

        let v = QuatRational::from_ints(0, 3, -1, 2);
        let t = translation(&v).unwrap();
        let ti = t.inverse();
        assert_eq!(ti.dual(), &QuatPoly::constant(-&v));
    }

    #[test]
    fn oracle_is_deterministic() {
        let m = MotionPolynomial::validate(cardan_poly()).unwrap();
        assert_eq!(m.generic_degree_oracle(5, 7), m.generic_degree_oracle(5, 7));
    }

    #[test]
    fn trajectory_degree_bounded_by_2n() {
        let m = MotionPolynomial::validate(cardan_poly()).unwrap();
        for trial in 0..6 {
            let pt = random_point(99, trial);
            assert!(m.trajectory_degree(&pt) <= 2 * m.degree());
        }
    }
}
