//! Exact computer algebra for rational rigid-body motions in the dual
//! quaternion model.
//!
//! A rational motion is parameterized by a polynomial `P + eps*D` with dual
//! quaternion coefficients. Its trajectories are rational curves of degree at
//! most `2n` where `n` is the polynomial degree. This crate computes the two
//! reduction invariants that lower the trajectory degree — the ordinary
//! reduction `m` (a real factor of the primal part) and the exceptional
//! reduction `e` (a real factor shared by that factor and `Q * conj(D)`) —
//! together with the algebraic certificate (a common right factor of the
//! reduced primal and dual parts) and the geometric certificate (conjugate
//! root pairs whose evaluations lie on a left ruling of the null quadric).
//! The generic trajectory degree is `2n - m - e`.
//!
//! All algebraic decisions are made over exact rationals; floating point is
//! used only for root extraction and the numeric ruling cross-checks.

pub mod analysis;
pub mod construct;
pub mod motion;
pub mod qpoly;
pub mod quat;
pub mod realpoly;
pub mod scalar;

pub use analysis::{analyze, analyze_with_oracle, DegreeReport, RulingCertificate};
pub use motion::{MotionPolynomial, Trajectory};
pub use qpoly::{DualQuatPoly, QuatPoly};
pub use quat::{DualQuaternion, ProjectivePoint3, Quaternion};
pub use realpoly::{QuadraticFactor, RealPoly};
pub use scalar::{rat, rat_int, Dual, Rational};
