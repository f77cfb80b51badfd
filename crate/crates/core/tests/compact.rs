use g2roll::compact::*;
use g2roll::exact::{int, q, Sampler, Vec3};
use g2roll::g2::bracket;
use g2roll::octonion::{ImOctonion, Quaternion};
use g2roll::roots::{build_parabolic, root_decomposition, RootDatum};
use g2roll::rolling::extract_data;
use g2roll::serre::{serre_basis, symmetry_failures, SerreBasis};
use g2roll::Error;
use proptest::prelude::*;

fn setup() -> (RootDatum, SerreBasis, CompactBasis) {
    let rd = root_decomposition().unwrap();
    let sb = serre_basis(&rd).unwrap();
    let cb = compact_basis(&sb);
    (rd, sb, cb)
}

#[test]
fn bracket_relations() {
    let (_, _, cb) = setup();
    assert_eq!(verify_compact_relations(&cb).unwrap(), 27);
    assert_eq!(bracket(&cb.l[0], &cb.l[1]), cb.l[2]);
    assert_eq!(bracket(&cb.s[0], &cb.s[1]), &cb.l[2].scale(&q(3, 4)) - &cb.s[2]);
    assert!(bracket(&cb.l[0], &cb.s[0]).is_zero());
}

#[test]
fn ideals_and_quadratic() {
    let (_, _, cb) = setup();
    let split = split_into_ideals(&cb).unwrap();
    assert_eq!(split.quadratic, vec![q(-3, 4), int(1), int(1)]);
    assert_eq!(split.roots, vec![q(1, 2), q(-3, 2)]);
    assert!(bracket(&cb.e1[0], &cb.e2[1]).is_zero());
    assert_eq!(bracket(&cb.e2[0], &cb.e2[1]), cb.e2[2]);
}

// Oracle: S_i = a e'_i + b e''_i with L_i = e'_i + e''_i, solved directly.
#[test]
fn s_in_ideal_coordinates() {
    let (_, _, cb) = setup();
    for i in 0..3 {
        let s = &cb.e1[i].scale(&q(1, 2)) - &cb.e2[i].scale(&q(3, 2));
        assert_eq!(s, cb.s[i]);
        assert_eq!(&cb.e1[i] + &cb.e2[i], cb.l[i]);
    }
}

#[test]
fn images_under_the_isomorphism() {
    let (_, _, cb) = setup();
    let s1 = to_so3so3(&cb, &cb.s[0], false).unwrap();
    let (w1, w2) = (&s1[..3], &s1[3..]);
    assert!(w1.iter().zip(w2).all(|(a, b)| *b == -(int(3) * a)));
    let l3 = to_so3so3(&cb, &cb.l[2], false).unwrap();
    assert_eq!(l3, [0, 0, 1, 0, 0, 1].map(int).to_vec());
    let s1s = to_so3so3(&cb, &cb.s[0], true).unwrap();
    assert!(s1s[..3].iter().zip(&s1s[3..]).all(|(a, b)| *b == -(q(1, 3) * a)));
}

#[test]
fn compact_data_is_the_ratio_three_data() {
    let (rd, _, cb) = setup();
    let p = build_parabolic(&rd).unwrap();
    let d = compact_distribution_data(&cb, &rd, &p, false).unwrap();
    let ds = compact_distribution_data(&cb, &rd, &p, true).unwrap();
    assert!(d.same_as(&extract_data(&int(3))));
    assert!(ds.same_as(&extract_data(&q(1, 3))));
    assert!(!d.same_as(&extract_data(&int(2))));
    assert!(swap_consistent(&d, &ds));
}

#[test]
fn scan_selects_three_only() {
    let (rd, _, cb) = setup();
    let p = build_parabolic(&rd).unwrap();
    for row in ratio_scan(&cb, &rd, &p).unwrap() {
        assert_eq!(row.matches, row.ratio == "3", "{}", row.ratio);
        assert_eq!(row.matches_swapped, row.ratio == "1/3", "{}", row.ratio);
    }
}

#[test]
fn weyl_basis_form() {
    let (rd, sb, cb) = setup();
    assert!(weyl_form(&cb, &sb));
    assert!(symmetry_failures(&sb, &rd).unwrap().is_empty());
}

#[test]
fn pair_action_elements() {
    let one = Quaternion::one();
    let m1 = Quaternion::real(int(-1));
    let v = ImOctonion::from_slice(&[1, 2, 3, -1, 0, 5, 7].map(int));
    assert_eq!(ktilde_action(&one, &one, &v).unwrap(), v);
    assert_eq!(ktilde_action(&m1, &m1, &v).unwrap(), v);
    let (a, b) = v.to_pair();
    let w = ktilde_action(&m1, &one, &v).unwrap();
    assert_eq!(w.to_pair(), (a, -&b));
    assert_ne!(w, v);
}

#[test]
fn non_unit_rejected() {
    let two = Quaternion::real(int(2));
    let r = ktilde_action(&two, &Quaternion::one(), &ImOctonion::u());
    assert_eq!(r, Err(Error::NotUnit("4".into())));
}

#[test]
fn kernel_is_plus_minus_identity() {
    let k = representation_kernel().unwrap();
    let pairs: Vec<_> = k.iter().map(|(a, b)| (a.r.clone(), b.r.clone())).collect();
    assert_eq!(pairs, vec![(int(1), int(1)), (int(-1), int(-1))]);
    assert!(k.iter().all(|(a, b)| a.im().is_zero() && b.im().is_zero()));
}

#[test]
fn involutions_preserve_the_distribution() {
    let r = involution_checks(10, 0).unwrap();
    assert!(r.sigma_squared_identity && r.sigma_nontrivial);
    assert_eq!(r.sigma_preserves_d, 10);
    assert_eq!(r.minus_identity_preserves_d, 10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]
    #[test]
    fn pair_action_is_an_isometric_automorphism(seed in 0u64..10_000) {
        let mut s = Sampler::new(seed);
        let (q1, q2) = (s.unit_quaternion(), s.unit_quaternion());
        let x = ImOctonion::from_slice(&s.vector(7));
        let y = ImOctonion::from_slice(&s.vector(7));
        prop_assert!(ktilde_preserves_structure(&q1, &q2, &x, &y).unwrap());
    }

    #[test]
    fn first_slot_is_rotated(seed in 0u64..10_000) {
        let mut s = Sampler::new(seed);
        let (q1, q2) = (s.unit_quaternion(), s.unit_quaternion());
        let v: Vec3 = s.vec3();
        let x = ImOctonion::from_pair(&v, &Quaternion::zero());
        let (kv, kh) = ktilde_action(&q1, &q2, &x).unwrap().to_pair();
        prop_assert_eq!(kv, q1.rotation().mul_vec3(&v));
        prop_assert!(kh.is_zero());
    }
}
