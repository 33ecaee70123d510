//! Degree reduction analysis: ordinary reduction `m`, exceptional reduction
//! `e`, the predicted generic trajectory degree `2n - m - e`, the algebraic
//! certificate (a common right factor `H` of `Q` and `D` with `norm(H)`
//! dividing `c`) and the geometric certificate (conjugate root pairs of `c`
//! at which `[Q(z)]` and `[D(z)]` lie on a common left ruling of the null
//! quadric, with exact multiplicities).
//!
//! Exact divisibility is authoritative throughout; the numeric residuals are
//! cross-checks evaluated in double precision at the quadratic roots.

use num_complex::Complex64;
use num_traits::Zero;
use thiserror::Error;

use crate::motion::MotionPolynomial;
use crate::qpoly::{extract_right_factor, gcrd, QPolyError, QuatPoly};
use crate::quat::{QuatComplex, Quaternion};
use crate::realpoly::{factor_real, real_gcd, PolyError, QuadraticFactor, RealPoly};
use crate::scalar::{Rational, Scalar};

/// Absolute tolerance for numeric residuals and projective coincidence,
/// applied after normalizing evaluated quaternions to unit max component.
pub const RESIDUAL_TOL: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("degree model violated: oracle degree {oracle} != predicted {predicted}")]
    DegreeModelViolated { oracle: usize, predicted: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("no ruling certificates: exceptional reduction is zero")]
    NoCertificates,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    QPoly(#[from] QPolyError),
}

/// Witness that a quadratic factor of `c` certifies exceptional reduction:
/// at its roots the evaluated reduced primal and dual parts annihilate,
/// i.e. lie on a common left ruling.
#[derive(Clone, Debug)]
pub struct RulingCertificate {
    pub quadratic: QuadraticFactor,
    pub multiplicity: u32,
    /// Root with positive imaginary part.
    pub z: Complex64,
    /// Max-norm of `Q(z) * conj(D)(z)` after normalization.
    pub left_ruling_residual: f64,
    /// `[Q(z)] = [D(z)]`: the points coincide instead of spanning the ruling.
    pub coincident: bool,
    /// Quadratic confirmed by exact trial division (false for factors only
    /// known numerically).
    pub exact: bool,
}

/// Full degree analysis of a motion polynomial.
#[derive(Clone, Debug)]
pub struct DegreeReport {
    /// Quaternion degree of the reduced monic normal form.
    pub n: usize,
    /// Ordinary degree reduction `deg mrpf(P)`.
    pub m: usize,
    /// Exceptional degree reduction `deg gcd(c, content(Q*conj(D)))`.
    pub e: usize,
    /// Generic trajectory degree `2n - m - e`.
    pub predicted: usize,
    /// Maximal real polynomial factor `c` of the primal part.
    pub c: RealPoly,
    /// `gcd(c, content(Q*conj(D)))`.
    pub common_gcd: RealPoly,
    pub certificates: Vec<RulingCertificate>,
    /// Common right factor of `Q` and `D` with norm `common_gcd`, absent
    /// when `e = 0`.
    pub algebraic_factor: Option<QuatPoly>,
    /// Sampled generic degree, when the oracle was run.
    pub oracle_degree: Option<usize>,
    pub oracle_seed: Option<u64>,
}

/// `c = mrpf(P)`, `Q = P/c`, `m = deg c` for a reduced monic motion.
pub fn ordinary_reduction(motion: &MotionPolynomial) -> (RealPoly, QuatPoly, usize) {
    let c = motion.primal().mrpf();
    let q = motion.primal().div_real_exact(&c);
    let m = c.degree().unwrap_or(0);
    (c, q, m)
}

/// `g = gcd(c, content(Q*conj(D)))`, `e = deg g`; `e = 0` when `D = 0` or
/// the gcd is trivial.
pub fn exceptional_reduction(motion: &MotionPolynomial) -> (usize, RealPoly) {
    let (c, q, _) = ordinary_reduction(motion);
    exceptional_reduction_from(&c, &q, motion.dual())
}

fn exceptional_reduction_from(c: &RealPoly, q: &QuatPoly, d: &QuatPoly) -> (usize, RealPoly) {
    if d.is_zero() || c.is_one() {
        return (0, RealPoly::one());
    }
    let qcd = q * &d.conj();
    let content = qcd.mrpf();
    let g = real_gcd(c, &content).expect("c nonzero");
    (g.degree().unwrap_or(0), g)
}

/// Decomposition of the common gcd `g` into certified factors: exact
/// irreducible quadratics and leftover parts with no rational quadratic
/// split, each with its exact multiplicity in `g`.
struct GcdSplit {
    /// Quadratics confirmed by exact trial division, multiplicity included.
    quadratics: Vec<QuadraticFactor>,
    /// Exact rational factor whose real-quadratic splitting is only known
    /// numerically: `(factor, multiplicity, upper-half-plane roots)`.
    leftovers: Vec<(RealPoly, u32, Vec<Complex64>)>,
}

fn split_common_gcd(g: &RealPoly) -> Result<GcdSplit, AnalysisError> {
    let mut split = GcdSplit { quadratics: vec![], leftovers: vec![] };
    if g.is_constant() {
        return Ok(split);
    }
    for (part, mult) in g.square_free_decomposition() {
        let f = factor_real(&part)?;
        if !f.linear.is_empty() {
            // A real root z of g would force Q(z) = 0 or D(z) = 0 against
            // reducedness; reaching this means the input was inconsistent.
            return Err(AnalysisError::InternalInconsistency(
                "common gcd has a real root".into(),
            ));
        }
        let mut leftover = part.clone();
        for quad in &f.quadratics {
            leftover = leftover.exact_div(&quad.as_poly());
            split.quadratics.push(QuadraticFactor { multiplicity: mult, ..quad.clone() });
        }
        if !leftover.is_constant() {
            let roots = f
                .approx_quadratics
                .iter()
                .map(|aq| {
                    let im = (4.0 * aq.q - aq.p * aq.p).sqrt() / 2.0;
                    Complex64::new(-aq.p / 2.0, im)
                })
                .collect();
            split.leftovers.push((leftover, mult, roots));
        }
    }
    Ok(split)
}

/// Builds the common right factor `H` with `Q = Q'H`, `D = D'H` and
/// `norm(H) = g`, by composing monic linear factors extracted from
/// `gcrd(Q, D)` right to left, one per quadratic factor of `g` counted with
/// multiplicity. Factors of `g` without a rational quadratic split are
/// extracted wholesale as `gcrd(G, w^mult)`.
fn build_algebraic_certificate(
    q: &QuatPoly,
    d: &QuatPoly,
    g: &RealPoly,
    split: &GcdSplit,
) -> Result<QuatPoly, AnalysisError> {
    let mut remaining = gcrd(q, d)?;
    let mut factor = QuatPoly::one();

    // The part of g without rational quadratic split is taken in one piece,
    // from the full gcrd where a common right factor of that norm exists.
    let wholesale = split
        .leftovers
        .iter()
        .fold(RealPoly::one(), |acc, (w, mult, _)| &acc * &w.pow(*mult));
    if !wholesale.is_constant() {
        let piece = gcrd(&remaining, &QuatPoly::from_real(&wholesale))?;
        if piece.norm_poly() != wholesale.monic() {
            return Err(AnalysisError::InternalInconsistency(
                "wholesale right factor does not have the expected norm".into(),
            ));
        }
        factor = piece.clone();
        let (quot, rem) = remaining.right_divide(&piece)?;
        if !rem.is_zero() {
            return Err(AnalysisError::InternalInconsistency(
                "wholesale right factor does not divide the gcrd".into(),
            ));
        }
        remaining = quot;
    }

    for quad in &split.quadratics {
        for _ in 0..quad.multiplicity {
            let linear = extract_right_factor(&remaining, quad)?;
            factor = &linear * &factor;
            let (quot, rem) = remaining.right_divide(&linear)?;
            debug_assert!(rem.is_zero());
            remaining = quot;
        }
    }

    if factor.norm_poly() != g.monic() {
        return Err(AnalysisError::InternalInconsistency(
            "certificate norm does not equal the common gcd".into(),
        ));
    }
    if !factor.right_divides(q) || !factor.right_divides(d) {
        return Err(AnalysisError::InternalInconsistency(
            "certificate does not right-divide Q and D".into(),
        ));
    }
    Ok(factor)
}

fn make_certificate(
    q: &QuatPoly,
    d: &QuatPoly,
    quadratic: QuadraticFactor,
    z: Complex64,
    exact: bool,
) -> RulingCertificate {
    let qz = q.eval_complex(z).normalized().expect("Q(z) nonzero for reduced motions");
    let dz = d.eval_complex(z).normalized().expect("D(z) nonzero for reduced motions");
    let residual = (&qz * &dz.conj()).max_norm();
    let coincident = projectively_close(&qz, &dz, RESIDUAL_TOL);
    RulingCertificate {
        multiplicity: quadratic.multiplicity,
        quadratic,
        z,
        left_ruling_residual: residual,
        coincident,
        exact,
    }
}

/// All ruling certificates of a motion. The certified multiplicities
/// satisfy `sum 2*mu = e`.
pub fn geometric_certificate(motion: &MotionPolynomial) -> Result<Vec<RulingCertificate>, AnalysisError> {
    let nf = motion.normal_form();
    let (c, q, _) = ordinary_reduction(&nf);
    let (_, g) = exceptional_reduction_from(&c, &q, nf.dual());
    geometric_certificate_from(&q, nf.dual(), &g)
}

fn geometric_certificate_from(
    q: &QuatPoly,
    d: &QuatPoly,
    g: &RealPoly,
) -> Result<Vec<RulingCertificate>, AnalysisError> {
    let split = split_common_gcd(g)?;
    let mut certs = Vec::new();
    for quad in &split.quadratics {
        let (z, _) = quad.roots();
        certs.push(make_certificate(q, d, quad.clone(), z, true));
    }
    for (_, mult, roots) in &split.leftovers {
        for &z in roots {
            // Best-effort rational display values; `exact = false` marks
            // them as numeric.
            let p = crate::scalar::rational_reconstruct(-2.0 * z.re, 1 << 30, 1e-6)
                .unwrap_or_else(Rational::zero);
            let qq = crate::scalar::rational_reconstruct(z.norm_sqr(), 1 << 30, 1e-6)
                .unwrap_or_else(Rational::zero);
            let quad = QuadraticFactor { p, q: qq, multiplicity: *mult };
            certs.push(make_certificate(q, d, quad, z, false));
        }
    }
    Ok(certs)
}

/// The common right factor of the reduced primal and dual parts whose norm
/// is the full common gcd; absent when `e = 0`.
pub fn algebraic_certificate(motion: &MotionPolynomial) -> Result<Option<QuatPoly>, AnalysisError> {
    let nf = motion.normal_form();
    let (c, q, _) = ordinary_reduction(&nf);
    let (e, g) = exceptional_reduction_from(&c, &q, nf.dual());
    if e == 0 {
        return Ok(None);
    }
    let split = split_common_gcd(&g)?;
    build_algebraic_certificate(&q, nf.dual(), &g, &split).map(Some)
}

/// Full analysis of a motion polynomial. The input is normalized (reduced,
/// monic) internally; all reported data refers to the normal form.
pub fn analyze(motion: &MotionPolynomial) -> Result<DegreeReport, AnalysisError> {
    analyze_impl(motion, None)
}

/// Analysis plus the sampling oracle; errors when the sampled generic degree
/// differs from `2n - m - e`.
pub fn analyze_with_oracle(
    motion: &MotionPolynomial,
    trials: u32,
    seed: u64,
) -> Result<DegreeReport, AnalysisError> {
    analyze_impl(motion, Some((trials, seed)))
}

fn analyze_impl(motion: &MotionPolynomial, oracle: Option<(u32, u64)>) -> Result<DegreeReport, AnalysisError> {
    let nf = motion.normal_form();
    let n = nf.degree();
    let (c, q, m) = ordinary_reduction(&nf);
    let (e, g) = exceptional_reduction_from(&c, &q, nf.dual());
    debug_assert_eq!(e % 2, 0, "exceptional reduction is even");
    let split = split_common_gcd(&g)?;
    let certificates = geometric_certificate_from(&q, nf.dual(), &g)?;
    debug_assert_eq!(
        certificates.iter().map(|cert| 2 * cert.multiplicity as usize).sum::<usize>(),
        e
    );
    let algebraic_factor = if e > 0 {
        Some(build_algebraic_certificate(&q, nf.dual(), &g, &split)?)
    } else {
        None
    };
    let predicted = 2 * n - m - e;
    let (oracle_degree, oracle_seed) = match oracle {
        Some((trials, seed)) => {
            let observed = nf.generic_degree_oracle(trials, seed);
            if observed != predicted {
                return Err(AnalysisError::DegreeModelViolated { oracle: observed, predicted });
            }
            (Some(observed), Some(seed))
        }
        None => (None, None),
    };
    Ok(DegreeReport {
        n,
        m,
        e,
        predicted,
        c,
        common_gcd: g,
        certificates,
        algebraic_factor,
        oracle_degree,
        oracle_seed,
    })
}

/// Line of projective 3-space through `[a]` and `[b]` in the dual quaternion
/// model: `a*conj(b) - conj(a)*b + eps*(conj(a)*b - b*conj(a))`. Primal and
/// dual parts have zero scalar part and satisfy the Pluecker condition.
#[derive(Clone, Debug)]
pub struct PlueckerLine<S: Scalar> {
    pub primal: Quaternion<S>,
    pub dual: Quaternion<S>,
}

#[derive(Debug, Error)]
#[error("line degenerate: points are projectively equal")]
pub struct DegenerateLine;

pub fn pluecker_line<S: Scalar>(
    a: &Quaternion<S>,
    b: &Quaternion<S>,
) -> Result<PlueckerLine<S>, DegenerateLine> {
    if proportional(a, b) {
        return Err(DegenerateLine);
    }
    let ab = a * &b.conj();
    let cab = &a.conj() * b;
    let bca = b * &a.conj();
    let primal = &ab - &cab;
    let dual = &cab - &bca;
    debug_assert!(primal.scalar_part().is_zero());
    debug_assert!(dual.scalar_part().is_zero());
    Ok(PlueckerLine { primal, dual })
}

impl<S: Scalar> PlueckerLine<S> {
    /// `x*conj(y) + y*conj(x)` with `x` the primal and `y` the dual part;
    /// zero for every well-formed line.
    pub fn pluecker_condition(&self) -> Quaternion<S> {
        &(&self.primal * &self.dual.conj()) + &(&self.dual * &self.primal.conj())
    }
}

fn proportional<S: Scalar>(a: &Quaternion<S>, b: &Quaternion<S>) -> bool {
    let av = [a.w.clone(), a.x.clone(), a.y.clone(), a.z.clone()];
    let bv = [b.w.clone(), b.x.clone(), b.y.clone(), b.z.clone()];
    for i in 0..4 {
        for j in (i + 1)..4 {
            let cross = av[i].clone() * bv[j].clone() - av[j].clone() * bv[i].clone();
            if !cross.is_zero() {
                return false;
            }
        }
    }
    true
}

fn projectively_close(a: &QuatComplex, b: &QuatComplex, tol: f64) -> bool {
    let av = [a.w, a.x, a.y, a.z];
    let bv = [b.w, b.x, b.y, b.z];
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in (i + 1)..4 {
            worst = worst.max((av[i] * bv[j] - av[j] * bv[i]).norm());
        }
    }
    worst < tol
}

/// Exact test that a rational line lies on the conic of left rulings:
/// projectively of the form `x - eps*x` with `scalar(x) = 0`, `norm(x) = 0`.
/// (Vacuous over the rationals away from zero since the norm is definite.)
pub fn on_left_ruling_conic_exact(line: &PlueckerLine<Rational>) -> bool {
    let sum = &line.primal + &line.dual;
    sum.is_zero() && line.primal.scalar_part().is_zero() && line.primal.norm().is_zero()
}

/// Numeric test of the left-ruling-conic condition for complex lines.
pub fn on_left_ruling_conic(line: &PlueckerLine<Complex64>) -> bool {
    let scale = line.primal.max_norm().max(line.dual.max_norm());
    if scale == 0.0 {
        return false;
    }
    let sum = &line.primal + &line.dual;
    sum.max_norm() < RESIDUAL_TOL * scale
        && line.primal.scalar_part().norm() < RESIDUAL_TOL * scale
        && line.primal.norm().norm() < RESIDUAL_TOL * scale * scale
}

/// Conjugation interchanges the two ruling families: for every certificate
/// root `z` of the motion, the conjugated evaluation points must satisfy the
/// right-ruling incidence `conj(p)*q = 0`. Errors when the motion has no
/// certificates.
pub fn ruling_swap_check(motion: &MotionPolynomial) -> Result<bool, AnalysisError> {
    let nf = motion.normal_form();
    let (c, q, _) = ordinary_reduction(&nf);
    let (e, g) = exceptional_reduction_from(&c, &q, nf.dual());
    if e == 0 {
        return Err(AnalysisError::NoCertificates);
    }
    let certs = geometric_certificate_from(&q, nf.dual(), &g)?;
    let qc = q.conj();
    let dc = nf.dual().conj();
    for cert in &certs {
        // Points of the inverse motion at z: [conj(Q)(z)], [conj(D)(z)].
        let a = qc.eval_complex(cert.z).normalized().expect("nonzero");
        let b = dc.eval_complex(cert.z).normalized().expect("nonzero");
        // Right ruling through [b] contains [a]: conj(b) * a = 0.
        let residual = (&b.conj() * &a).max_norm();
        if residual >= RESIDUAL_TOL {
            return Ok(false);
        }
    }
    Ok(true)
}
