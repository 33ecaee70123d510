//! Property-based tests for the algebraic invariants: conjugation is an
//! anti-homomorphism, norms are multiplicative, right division round-trips,
//! right factors correspond to right zeros, and the degree analysis agrees
//! with the sampling oracle on constructed motions.

use motionpoly::analysis::{analyze, pluecker_line, RESIDUAL_TOL};
use motionpoly::motion::{linear_motion, motion_from_parts, translation, MotionPolynomial};
use motionpoly::qpoly::{extract_right_factor, QuatPoly};
use motionpoly::quat::{act_on_point, ProjectivePoint3, QuatRational, Quaternion};
use motionpoly::realpoly::{factor_real, real_gcd, QuadraticFactor, RealPoly, RootValue};
use motionpoly::scalar::{rat, Dual, Rational};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn quat() -> impl Strategy<Value = QuatRational> {
    (rational(), rational(), rational(), rational())
        .prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
}

fn nonzero_quat() -> impl Strategy<Value = QuatRational> {
    quat().prop_filter("nonzero", |q| !q.is_zero())
}

fn dual_quat() -> impl Strategy<Value = Quaternion<Dual>> {
    (quat(), quat()).prop_map(|(p, d)| Quaternion::from_parts(&p, &d))
}

fn real_poly(max_deg: usize) -> impl Strategy<Value = RealPoly> {
    prop::collection::vec(rational(), 1..=max_deg + 1).prop_map(RealPoly::new)
}

fn nonzero_real_poly(max_deg: usize) -> impl Strategy<Value = RealPoly> {
    real_poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn quat_poly(max_deg: usize) -> impl Strategy<Value = QuatPoly> {
    prop::collection::vec(quat(), 1..=max_deg + 1).prop_map(QuatPoly::new)
}

fn nonzero_quat_poly(max_deg: usize) -> impl Strategy<Value = QuatPoly> {
    quat_poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

/// Vector quaternion orthogonal to `h`, via the 3-dimensional cross product
/// with the vector part of `h`.
fn orthogonal_vector(h: &QuatRational, w: &QuatRational) -> QuatRational {
    Quaternion::new(
        Rational::zero(),
        &h.y * &w.z - &h.z * &w.y,
        &h.z * &w.x - &h.x * &w.z,
        &h.x * &w.y - &h.y * &w.x,
    )
}

/// Linear motion polynomial `t - h + eps*g` with `g` orthogonal to `h`.
fn linear_motion_strategy() -> impl Strategy<Value = MotionPolynomial> {
    (quat(), quat())
        .prop_filter("vector part nonzero", |(h, _)| !h.vector_part().is_zero())
        .prop_map(|(h, w)| {
            let g = orthogonal_vector(&h, &w);
            linear_motion(&h, &g).expect("orthogonal dual part satisfies the Study condition")
        })
}

/// Product of `deg` random linear motion polynomials and a random
/// translation, filtered to reduced primal parts without real factors.
fn motion_strategy(deg: usize) -> impl Strategy<Value = MotionPolynomial> {
    (
        prop::collection::vec(linear_motion_strategy(), deg),
        quat(),
    )
        .prop_map(|(factors, v)| {
            let trans = translation(&v.vector_part()).expect("vector translation");
            let mut poly = trans.poly().clone();
            for f in &factors {
                poly = &poly * f.poly();
            }
            MotionPolynomial::validate(poly).expect("products of motion polynomials validate")
        })
        .prop_filter("reduced with trivial mrpf", |m| {
            m.is_reduced() && m.primal().mrpf().is_one()
        })
}

proptest! {
    #[test]
    fn gcd_of_common_multiples_contains_factor(
        a in nonzero_real_poly(3),
        b in nonzero_real_poly(3),
        g in nonzero_real_poly(2),
    ) {
        let gcd_ab = real_gcd(&a, &b).unwrap();
        prop_assume!(gcd_ab.is_one());
        let gcd = real_gcd(&(&a * &g), &(&b * &g)).unwrap();
        prop_assert!(g.monic().divides(&gcd));
    }

    #[test]
    fn factorization_reexpands(p in nonzero_real_poly(4)) {
        let f = factor_real(&p).unwrap();
        prop_assume!(f.approx_quadratics.is_empty());
        prop_assume!(f.linear.iter().all(|l| matches!(l.root, RootValue::Exact(_))));
        let mut acc = RealPoly::constant(f.leading.clone());
        for lin in &f.linear {
            let RootValue::Exact(r) = &lin.root else { unreachable!() };
            acc = &acc * &RealPoly::new(vec![-r.clone(), Rational::one()]).pow(lin.multiplicity);
        }
        for q in &f.quadratics {
            acc = &acc * &q.as_poly().pow(q.multiplicity);
        }
        prop_assert_eq!(acc, p);
    }

    #[test]
    fn quadratic_roots_reexpand(p in rational(), q in nonzero_rational()) {
        let disc = &p * &p - rat(4, 1) * &q;
        prop_assume!(disc.is_negative());
        let quad = QuadraticFactor::new(p.clone(), q.clone(), 1);
        let (z, zb) = quad.roots();
        // (t - z)(t - conj z) = t^2 + p t + q within 1e-10 per coefficient
        let sum = z + zb;
        let prod = z * zb;
        let pf = motionpoly::scalar::rat_to_f64(&p);
        let qf = motionpoly::scalar::rat_to_f64(&q);
        prop_assert!((sum.re + pf).abs() < 1e-10 && sum.im.abs() < 1e-10);
        prop_assert!((prod.re - qf).abs() < 1e-10 && prod.im.abs() < 1e-10);
    }

    #[test]
    fn conj_antihomomorphism(a in quat(), b in quat()) {
        prop_assert_eq!((&a * &b).conj(), &b.conj() * &a.conj());
    }

    #[test]
    fn conj_antihomomorphism_dual(a in dual_quat(), b in dual_quat()) {
        prop_assert_eq!((&a * &b).conj(), &b.conj() * &a.conj());
    }

    #[test]
    fn norm_multiplicative(a in quat(), b in quat()) {
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn norm_multiplicative_dual(a in dual_quat(), b in dual_quat()) {
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn zero_divisor_iff_inverse_fails(a in nonzero_quat()) {
        // over the rationals only zero is a zero divisor
        prop_assert!(!a.is_zero_divisor());
        prop_assert!(a.try_inv().is_ok());
    }

    #[test]
    fn displacement_preserves_distances(
        h in quat(),
        w in quat(),
        p1 in (rational(), rational(), rational()),
        p2 in (rational(), rational(), rational()),
    ) {
        prop_assume!(!h.is_zero());
        let g = orthogonal_vector(&h, &w);
        let disp = Quaternion::from_parts(&h, &g);
        prop_assume!(disp.study_defect().is_zero());
        let a = ProjectivePoint3::new([Rational::one(), p1.0, p1.1, p1.2]);
        let b = ProjectivePoint3::new([Rational::one(), p2.0, p2.1, p2.2]);
        let ia = act_on_point(&disp, &a).unwrap().dehomogenize().unwrap();
        let ib = act_on_point(&disp, &b).unwrap().dehomogenize().unwrap();
        let oa = a.dehomogenize().unwrap();
        let ob = b.dehomogenize().unwrap();
        let d2 = |u: &[Rational; 3], v: &[Rational; 3]| -> Rational {
            (0..3).map(|i| {
                let d = &u[i] - &v[i];
                &d * &d
            }).sum()
        };
        prop_assert_eq!(d2(&ia, &ib), d2(&oa, &ob));
    }

    #[test]
    fn right_division_round_trip(a in quat_poly(4), b in nonzero_quat_poly(2)) {
        let (q, r) = a.right_divide(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        if let Some(rd) = r.degree() {
            prop_assert!(rd < b.degree().unwrap());
        }
    }

    #[test]
    fn right_factor_iff_right_zero(f in quat_poly(2), r in quat()) {
        // t - r right-divides F*(t - r), and the right evaluation vanishes
        let lin = QuatPoly::linear_from_root(&r);
        let p = &f * &lin;
        prop_assert!(p.right_eval(&r).is_zero());
        prop_assert!(lin.right_divides(&p));

        // conversely a vanishing right evaluation gives a zero remainder
        if !p.is_zero() {
            let (_, rem) = p.right_divide(&lin).unwrap();
            prop_assert!(rem.is_zero());
        }
    }

    #[test]
    fn right_eval_nonzero_gives_remainder(p in nonzero_quat_poly(3), r in quat()) {
        let val = p.right_eval(&r);
        let lin = QuatPoly::linear_from_root(&r);
        let (_, rem) = p.right_divide(&lin).unwrap();
        // remainder of division by t - r is the right evaluation at r
        prop_assert_eq!(rem, QuatPoly::constant(val));
    }

    #[test]
    fn poly_conj_antihomomorphism(a in quat_poly(3), b in quat_poly(3)) {
        prop_assert_eq!((&a * &b).conj(), &b.conj() * &a.conj());
    }

    #[test]
    fn norm_poly_multiplicative(a in quat_poly(3), b in quat_poly(3)) {
        prop_assert_eq!((&a * &b).norm_poly(), &a.norm_poly() * &b.norm_poly());
    }

    #[test]
    fn mrpf_invariant_under_conjugation(p in nonzero_quat_poly(3), c in nonzero_real_poly(2)) {
        let blown = p.mul_real(&c);
        prop_assert_eq!(blown.mrpf(), blown.conj().mrpf());
    }

    #[test]
    fn extracted_factor_norm_matches(f in quat_poly(2), r in quat()) {
        prop_assume!(!r.vector_part().is_zero());
        let lin = QuatPoly::linear_from_root(&r);
        let norm = lin.norm_poly();
        let disc = &norm.coeff(1) * &norm.coeff(1) - rat(4, 1) * norm.coeff(0);
        prop_assume!(disc.is_negative());
        let quad = QuadraticFactor::new(norm.coeff(1), norm.coeff(0), 1);
        let g = &f * &lin;
        prop_assume!(!g.is_zero() && g.mrpf().is_one());
        let extracted = extract_right_factor(&g, &quad).unwrap();
        prop_assert_eq!(extracted.norm_poly(), quad.as_poly());
        prop_assert!(extracted.right_divides(&g));
    }

    #[test]
    fn pluecker_condition_holds(a in quat(), b in quat()) {
        if let Ok(line) = pluecker_line(&a, &b) {
            prop_assert!(line.pluecker_condition().is_zero());
            prop_assert!(line.primal.scalar_part().is_zero());
            prop_assert!(line.dual.scalar_part().is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_of_motions_is_motion(a in motion_strategy(1), b in motion_strategy(1)) {
        let prod = a.poly() * b.poly();
        prop_assert!(MotionPolynomial::validate(prod).is_ok());
    }

    #[test]
    fn trajectory_degree_at_most_2n(m in motion_strategy(2), seed in 0u64..1000) {
        let pt = motionpoly::motion::random_point(seed, 0);
        prop_assert!(m.trajectory_degree(&pt) <= 2 * m.degree());
    }

    #[test]
    fn full_degree_without_reduction(m in motion_strategy(2)) {
        // mrpf(P) = 1 by the strategy filter: no reduction at all
        let report = analyze(&m).unwrap();
        prop_assert_eq!(report.m, 0);
        prop_assert_eq!(report.e, 0);
        prop_assert_eq!(m.generic_degree_oracle(6, 31), 2 * m.degree());
    }

    #[test]
    fn reduce_preserves_curve_pointwise(m in motion_strategy(2), c in nonzero_real_poly(2)) {
        let blown = MotionPolynomial::validate(motionpoly::qpoly::DualQuatPoly::new(
            m.primal().mul_real(&c),
            m.dual().mul_real(&c),
        )).unwrap();
        let red = blown.reduce();
        for t in [rat(0, 1), rat(1, 1), rat(-1, 1), rat(2, 1), rat(1, 2)] {
            let u = red.poly().eval_rational(&t);
            let v = m.poly().eval_rational(&t);
            // projectively equal displacements: cross products vanish
            let up = u.primal();
            let ud = u.dual_part();
            let vp = v.primal();
            let vd = v.dual_part();
            let u8 = [up.w, up.x, up.y, up.z, ud.w, ud.x, ud.y, ud.z];
            let v8 = [vp.w, vp.x, vp.y, vp.z, vd.w, vd.x, vd.y, vd.z];
            for i in 0..8 {
                for j in (i + 1)..8 {
                    prop_assert_eq!(&u8[i] * &v8[j], &u8[j] * &v8[i]);
                }
            }
        }
    }

    #[test]
    fn normal_form_preserves_analysis(m in motion_strategy(2)) {
        let nf = m.normal_form();
        prop_assert!(nf.is_reduced() && nf.is_monic());
        let ra = analyze(&m).unwrap();
        let rb = analyze(&nf).unwrap();
        prop_assert_eq!((ra.n, ra.m, ra.e, ra.predicted), (rb.n, rb.m, rb.e, rb.predicted));
    }

    #[test]
    fn inverse_preserves_n_and_m(m in motion_strategy(2)) {
        let report = analyze(&m).unwrap();
        let inv_report = analyze(&m.inverse()).unwrap();
        prop_assert_eq!(report.n, inv_report.n);
        prop_assert_eq!(report.m, inv_report.m);
        // both directions agree with their own predicted degrees
        prop_assert_eq!(m.generic_degree_oracle(6, 77), report.predicted);
        prop_assert_eq!(m.inverse().generic_degree_oracle(6, 78), inv_report.predicted);
    }

    #[test]
    fn exceptional_construction_certified(
        m in motion_strategy(1),
        r1 in quat(),
        seed in 0u64..500,
    ) {
        prop_assume!(!r1.vector_part().is_zero());
        let h = QuatPoly::linear_from_root(&r1);
        let built = motionpoly::construct::exceptional(
            &m.normal_form().primal().clone(),
            &m.normal_form().dual().clone(),
            &h,
        );
        prop_assume!(built.is_ok());
        let built = built.unwrap();
        let report = analyze(&built).unwrap();
        prop_assume!(!built.dual().is_zero());
        prop_assert!(report.e >= 2);
        // exact certificate agrees with the numeric residuals
        for cert in &report.certificates {
            prop_assert!(cert.left_ruling_residual < RESIDUAL_TOL);
        }
        prop_assert_eq!(
            report.certificates.iter().map(|c| 2 * c.multiplicity as usize).sum::<usize>(),
            report.e
        );
        prop_assert_eq!(built.generic_degree_oracle(6, seed), report.predicted);
    }
}

#[test]
fn motion_from_parts_rejects_study_violation() {
    let p = QuatPoly::linear_from_root(&QuatRational::k());
    let d = QuatPoly::one();
    assert!(motion_from_parts(p, d).is_err());
}
