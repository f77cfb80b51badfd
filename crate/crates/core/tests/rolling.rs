use g2roll::exact::{int, q, Matrix, Rational, Sampler, Subspace, Vec3};
use g2roll::roots::{derived_flag, Algebra};
use g2roll::rolling::*;
use proptest::prelude::*;

fn state(s: &mut Sampler, ratio: Rational) -> RollingState {
    RollingState::new(s.so3(), s.unit_vec3(), ratio).unwrap()
}

#[test]
fn zero_tangent_rolls() {
    assert!(is_rolling_tangent(&RollingState::base(int(3)), &RollingTangent::zero()));
}

#[test]
fn base_point_tangent_depends_on_ratio() {
    let t = RollingTangent::from_omegas(
        &RollingState::base(int(3)),
        &Vec3::from_i64([1, 0, 0]),
        &Vec3::from_i64([-3, 0, 0]),
    );
    assert!(is_rolling_tangent(&RollingState::base(int(3)), &t));
    assert!(!is_rolling_tangent(&RollingState::base(int(2)), &t));
}

#[test]
fn base_plane_at_three() {
    let want = Subspace::span(
        6,
        &[
            [1, 0, 0, -3, 0, 0].map(int).to_vec(),
            [0, 1, 0, 0, -3, 0].map(int).to_vec(),
        ],
    );
    assert_eq!(base_plane(&int(3)), want);
}

#[test]
fn base_plane_orthogonal_to_isotropy_and_invariant() {
    for r in [int(1), int(3), q(1, 3), int(2), q(7, 5)] {
        let p = base_plane(&r);
        assert_eq!(p.dim(), 2);
        let h = isotropy_generator();
        for w in p.basis() {
            let d: Rational = w.iter().zip(&h).map(|(a, b)| a * b).sum();
            assert_eq!(d, int(0));
            assert!(p.contains(&Algebra::So3So3.bracket(&h, w)));
        }
    }
}

// Oracle: every vector in the base plane, pushed to a tangent at (I, e3),
// satisfies the two defining conditions.
#[test]
fn base_plane_tangents_roll() {
    for r in [int(3), q(1, 3), int(2)] {
        let base = RollingState::base(r.clone());
        for w in base_plane(&r).basis() {
            let t = RollingTangent::from_omegas(&base, &Vec3::from_slice(&w[..3]), &Vec3::from_slice(&w[3..]));
            assert!(is_rolling_tangent(&base, &t));
        }
    }
}

#[test]
fn isotropy_fixes_base_point() {
    let base = RollingState::base(int(3));
    let t = RollingTangent::from_omegas(&base, &Vec3::e(2), &Vec3::e(2));
    assert_eq!(t, RollingTangent::zero());
}

#[test]
fn identity_action_is_trivial() {
    let mut s = Sampler::new(1);
    let st = state(&mut s, int(3));
    let i = Matrix::identity(3);
    assert_eq!(group_action(&i, &i, &st), st);
}

#[test]
fn first_field_at_e1() {
    let [v1, _] = spanning_fields(&int(3));
    let st = RollingState::new(Matrix::identity(3), Vec3::e(0), int(3)).unwrap();
    let t = eval_field(&v1, &st).unwrap();
    assert_eq!(t.g_dot, Vec3::e(1).hat());
    assert_eq!(t.x_dot, Vec3::e(1).cross(&Vec3::e(0)).scale(&q(1, 4)));
}

#[test]
fn fields_degenerate_at_poles() {
    let [v1, _] = spanning_fields(&int(3));
    assert_eq!(eval_field(&v1, &RollingState::base(int(3))), Err(g2roll::Error::DegeneratePoint));
}

#[test]
fn fields_roll_and_are_independent() {
    let mut s = Sampler::new(7);
    for r in [int(3), q(1, 3), int(2)] {
        let fields = spanning_fields(&r);
        for _ in 0..10 {
            let st = state(&mut s, r.clone());
            let ts: Vec<_> = fields.iter().map(|f| eval_field(f, &st).unwrap()).collect();
            assert!(ts.iter().all(|t| is_rolling_tangent(&st, t)));
            assert_eq!(Subspace::span(12, &[ts[0].coords(), ts[1].coords()]).dim(), 2);
        }
    }
}

#[test]
fn growth_vectors() {
    let mut s = Sampler::new(3);
    for (r, want) in [(int(3), vec![2, 3, 5]), (int(2), vec![2, 3, 5]), (int(1), vec![2, 2, 2])] {
        let gf = GrowthFields::new(&r);
        for _ in 0..3 {
            assert_eq!(gf.at(&state(&mut s, r.clone())).unwrap(), want);
        }
    }
}

#[test]
fn extracted_flag_matches_field_growth() {
    assert_eq!(derived_flag(&extract_data(&int(3))), vec![2, 3, 5]);
    assert_eq!(derived_flag(&extract_data(&int(1))), vec![2, 2, 2]);
}

#[test]
fn swapped_data_has_inverse_ratio() {
    let d = extract_data(&int(3));
    let swapped: Vec<_> = d.plane.iter().map(|v| swap_summands(v)).collect();
    assert_eq!(Subspace::span(6, &swapped), base_plane(&q(1, 3)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]
    #[test]
    fn action_preserves_rolling(seed in 0u64..1000, r in prop::sample::select(vec![(3, 1), (1, 3), (2, 1)])) {
        let mut s = Sampler::new(seed);
        let ratio = q(r.0, r.1);
        let st = state(&mut s, ratio.clone());
        let [v1, v2] = spanning_fields(&ratio);
        let (a, b) = (s.rational(), s.rational());
        let t1 = eval_field(&v1, &st).unwrap();
        let t2 = eval_field(&v2, &st).unwrap();
        let t = RollingTangent::from_coords(
            &t1.coords().iter().zip(t2.coords()).map(|(x, y)| &a * x + &b * &y).collect::<Vec<_>>(),
        );
        let (g1, g2) = (s.so3(), s.so3());
        let st2 = group_action(&g1, &g2, &st);
        prop_assert!(is_rolling_tangent(&st2, &push_tangent(&g1, &g2, &t)));
    }
}
