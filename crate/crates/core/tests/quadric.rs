use g2roll::exact::{int, q, Rational, Sampler, Subspace, Vec3};
use g2roll::g2::sample_group_element;
use g2roll::octonion::{ImOctonion, Quaternion};
use g2roll::quadric::*;
use g2roll::roots::{build_parabolic, derived_flag, root_decomposition};
use g2roll::Error;

#[test]
fn annihilator_of_e1() {
    let want = Subspace::span(
        7,
        &[ImOctonion::e(0).coords(), ImOctonion::f(1).coords(), ImOctonion::f(2).coords()],
    );
    assert_eq!(quadric_distribution(&NullRay::base()), want);
}

#[test]
fn chain_dimensions_at_samples() {
    let mut s = Sampler::new(11);
    for _ in 0..20 {
        let x = sample_null_point(&mut s);
        assert_eq!(annihilator_chain(&x).unwrap().dims(), [1, 3, 4, 6, 7]);
        // x itself lies in its annihilator
        assert!(left_mul_matrix(x.rep()).mul_vec(&x.rep().coords()).iter().all(|c| *c == int(0)));
    }
}

#[test]
fn non_null_rejected() {
    assert!(matches!(NullRay::new(ImOctonion::u()), Err(Error::NotNull(_))));
    assert!(matches!(NullRay::new(ImOctonion::zero()), Err(Error::NotNull(_))));
}

#[test]
fn distribution_is_group_invariant() {
    let mut s = Sampler::new(5);
    for _ in 0..10 {
        let g = sample_group_element(&mut s);
        let x = sample_null_point(&mut s);
        assert!(distribution_invariant_under(&g, &x));
    }
}

#[test]
fn isotropy_is_parabolic() {
    let rd = root_decomposition().unwrap();
    let p = build_parabolic(&rd).unwrap();
    assert_eq!(isotropy_algebra(&NullRay::base()), p);
    let mut s = Sampler::new(2);
    for _ in 0..5 {
        assert_eq!(isotropy_algebra(&sample_null_point(&mut s)).dim(), 9);
    }
}

#[test]
fn orbits_are_open_in_the_cone() {
    assert_eq!(infinitesimal_transitivity(NullRay::base().rep()), 6);
    let mut s = Sampler::new(9);
    for _ in 0..20 {
        assert_eq!(infinitesimal_transitivity(sample_null_point(&mut s).rep()), 6);
    }
    // control: U is not null and its orbit is the 6-dim level set, so the rank is also 6
    assert_eq!(infinitesimal_transitivity(&ImOctonion::u()), 6);
}

#[test]
fn quadric_data_has_growth_2_3_5() {
    let rd = root_decomposition().unwrap();
    let p = build_parabolic(&rd).unwrap();
    let d = distribution_data_of_quadric(&rd, &p).unwrap();
    assert_eq!(derived_flag(&d), vec![2, 3, 5]);
}

#[test]
fn unnormalized_cover_rejected() {
    let r = covering_map(&Vec3::from_i64([2, 0, 0]), &Quaternion::one());
    assert!(matches!(r, Err(Error::NotNormalized { .. })));
}

#[test]
fn cover_base_values() {
    let (g, x) = covering_map(&Vec3::e(0), &Quaternion::one()).unwrap();
    // R_i is the half turn about e1
    assert_eq!(g, Quaternion::unit(0).rotation());
    assert_eq!(x, Vec3::e(0));
}

// Oracle for the angular velocity of R_q: R is quadratic in q, so its
// derivative in direction d is (R(q+d) - R(q-d))/2 exactly.
#[test]
fn rotation_velocity_matches_polarization() {
    let mut s = Sampler::new(4);
    for _ in 0..10 {
        let q0 = s.unit_quaternion();
        let w = s.vec3();
        // tangent to S3 at q0: d = w q0 with w pure
        let d = &Quaternion::pure(&w) * &q0;
        let deriv = (&(&q0 + &d).rotation() - &(&q0 - &d).rotation()).scale(&q(1, 2));
        let omega = Vec3::unhat(&(&deriv * &q0.rotation().transpose())).unwrap();
        assert_eq!(omega, rotation_velocity(&q0, &d));
    }
}

#[test]
fn cover_is_two_to_one_and_equivariant() {
    let mut s = Sampler::new(8);
    for _ in 0..10 {
        let (v, h) = sample_sphere_point(&mut s);
        assert!(cover_is_two_to_one(&v, &h).unwrap());
        let (q1, q2) = (s.unit_quaternion(), s.unit_quaternion());
        assert!(cover_equivariant(&v, &h, &q1, &q2).unwrap());
    }
}

#[test]
fn pushforward_selects_ratio_three() {
    let mut s = Sampler::new(13);
    let pts: Vec<_> = (0..5).map(|_| sample_sphere_point(&mut s)).collect();
    let ratios: Vec<Rational> = vec![int(3), q(1, 3), int(1), int(2), int(5)];
    let rows = cover_ratio_scan(&pts, &ratios).unwrap();
    let counts: Vec<usize> = rows.iter().map(|r| r.matched_points).collect();
    assert_eq!(counts, vec![5, 0, 0, 0, 0]);
}
