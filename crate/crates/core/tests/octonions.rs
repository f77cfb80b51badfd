#![allow(clippy::needless_range_loop)]

use g2roll::exact::{inertia, int, q, Rational, Sampler};
use g2roll::octonion::*;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

fn quat() -> impl Strategy<Value = Quaternion> {
    (rat(), rat(), rat(), rat()).prop_map(|(r, i, j, k)| Quaternion::new(r, i, j, k))
}

fn octonion() -> impl Strategy<Value = SplitOctonion> {
    (quat(), quat()).prop_map(|(a, b)| SplitOctonion::new(a, b))
}

fn random_octonion(s: &mut Sampler) -> SplitOctonion {
    let v = s.vector(8);
    SplitOctonion::new(
        Quaternion::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()),
        Quaternion::new(v[4].clone(), v[5].clone(), v[6].clone(), v[7].clone()),
    )
}

fn random_cartan(s: &mut Sampler) -> CartanPoint {
    CartanPoint::from_coords(&s.vector(7))
}

fn im(o: &SplitOctonion) -> ImOctonion {
    ImOctonion::from_octonion(&o.im_part()).unwrap()
}

#[test]
fn all_49_products_match_table() {
    let t = basis_multiplication_table().unwrap();
    for a in 0..7 {
        for b in 0..7 {
            assert_eq!(t.entries[a][b], expected_entry(a, b), "{}*{}", BASIS_NAMES[a], BASIS_NAMES[b]);
        }
    }
}

#[test]
fn named_table_entries() {
    let prod = |a: &ImOctonion, b: &ImOctonion| oct_mul(&a.to_octonion(), &b.to_octonion());
    assert_eq!(prod(&ImOctonion::e(0), &ImOctonion::e(1)), ImOctonion::f(2).to_octonion());
    assert_eq!(prod(&ImOctonion::e(1), &ImOctonion::e(0)), ImOctonion::f(2).scale(&int(-1)).to_octonion());
    assert_eq!(prod(&ImOctonion::f(0), &ImOctonion::f(1)), ImOctonion::e(2).to_octonion());
    assert!(prod(&ImOctonion::e(0), &ImOctonion::e(0)).is_zero());
    let e1f1 = prod(&ImOctonion::e(0), &ImOctonion::f(0));
    assert_eq!(e1f1.re(), q(-1, 2));
    assert_eq!(im(&e1f1), ImOctonion::u().scale(&q(1, 2)));
}

#[test]
fn u_squares_to_one() {
    let u = SplitOctonion::new(Quaternion::zero(), Quaternion::one());
    assert_eq!(ImOctonion::u().to_octonion(), u);
    assert_eq!(oct_mul(&u, &u), SplitOctonion::one());
}

#[test]
fn printed_table_with_wrong_sign_is_rejected() {
    // the oracle is sensitive: flipping one entry must be caught
    let t = basis_multiplication_table().unwrap();
    let mut bad = expected_entry(0, 6);
    bad.im = bad.im.scale(&int(-1));
    assert_ne!(t.entries[0][6], bad);
}

#[test]
fn alternativity_and_composition_on_100_pairs() {
    let mut s = Sampler::new(1);
    for _ in 0..100 {
        let x = random_octonion(&mut s);
        let y = random_octonion(&mut s);
        let xx = oct_mul(&x, &x);
        assert_eq!(oct_mul(&x, &oct_mul(&x, &y)), oct_mul(&xx, &y));
        assert_eq!(oct_mul(&oct_mul(&y, &x), &x), oct_mul(&y, &xx));
        assert_eq!(oct_mul(&x, &y).norm_form(), x.norm_form() * y.norm_form());
    }
}

#[test]
fn not_associative() {
    let (a, b, c) = (ImOctonion::e(0), ImOctonion::f(0), ImOctonion::e(1));
    let (a, b, c) = (a.to_octonion(), b.to_octonion(), c.to_octonion());
    assert_ne!(oct_mul(&oct_mul(&a, &b), &c), oct_mul(&a, &oct_mul(&b, &c)));
}

proptest! {
    #[test]
    fn unit_law(x in octonion()) {
        prop_assert_eq!(oct_mul(&SplitOctonion::one(), &x), x.clone());
        prop_assert_eq!(oct_mul(&x, &SplitOctonion::one()), x);
    }

    #[test]
    fn alternative(x in octonion(), y in octonion()) {
        let xx = oct_mul(&x, &x);
        prop_assert_eq!(oct_mul(&x, &oct_mul(&x, &y)), oct_mul(&xx, &y));
        prop_assert_eq!(oct_mul(&oct_mul(&y, &x), &x), oct_mul(&y, &xx));
    }

    #[test]
    fn composition(x in octonion(), y in octonion()) {
        prop_assert_eq!(oct_mul(&x, &y).norm_form(), x.norm_form() * y.norm_form());
    }

    #[test]
    fn conjugation_reverses_order(x in octonion(), y in octonion()) {
        prop_assert_eq!(oct_mul(&x, &y).conj(), oct_mul(&y.conj(), &x.conj()));
    }

    #[test]
    fn chart_round_trip(c in proptest::collection::vec(rat(), 7)) {
        let v = ImOctonion::from_slice(&c);
        prop_assert_eq!(ImOctonion::from_octonion(&v.to_octonion()), Some(v.clone()));
        prop_assert_eq!(ImOctonion::from_cartan(&v.to_cartan()), v.clone());
        let (h, w) = v.to_pair();
        prop_assert_eq!(ImOctonion::from_pair(&h, &w), v);
    }
}

#[test]
fn printed_conjugation_rule_fails() {
    let x = ImOctonion::e(0).to_octonion();
    let y = ImOctonion::e(1).to_octonion();
    assert_ne!(oct_mul(&x, &y).conj(), oct_mul(&x.conj(), &y.conj()));
}

#[test]
fn inner_product_values() {
    assert_eq!(inner_product(&ImOctonion::e(0), &ImOctonion::f(0)), q(1, 2));
    assert_eq!(inner_product(&ImOctonion::e(0), &ImOctonion::e(0)), int(0));
    assert_eq!(inner_product(&ImOctonion::u(), &ImOctonion::u()), int(-1));
    let g = inner_product_gram();
    assert_eq!(g, g.transpose());
    let (p, n, z) = inertia(&g);
    assert_eq!((p.min(n), p.max(n), z), (3, 4, 0));
}

#[test]
fn inertia_oracle() {
    // diag(1,-1,0) under a congruence keeps its counts
    let m = g2roll::exact::Matrix::from_i64(3, 3, &[0, 1, 0, 1, 0, 0, 0, 0, 0]);
    assert_eq!(inertia(&m), (1, 1, 1));
    let m = g2roll::exact::Matrix::from_i64(2, 2, &[2, 1, 1, 2]);
    assert_eq!(inertia(&m), (2, 0, 0));
}

#[test]
fn norm_signs_on_v() {
    let mut s = Sampler::new(2);
    for _ in 0..20 {
        let v = ImOctonion::from_slice(&s.vector(7));
        let o = v.to_octonion();
        let n = inner_product(&v, &v);
        // literal evaluation: x x̄ = +⟨x,x⟩ and x² = −⟨x,x⟩
        assert_eq!(oct_mul(&o, &o.conj()), SplitOctonion::real(n.clone()));
        assert_eq!(oct_mul(&o, &o), SplitOctonion::real(-n.clone()));
        // and the form on pairs is |v|² − |h|²
        let (a, b) = v.to_pair();
        assert_eq!(n, a.norm2() - b.norm2());
    }
}

#[test]
fn j_is_minus_inner_square() {
    let mut s = Sampler::new(3);
    for _ in 0..100 {
        let p = random_cartan(&mut s);
        let v = ImOctonion::from_cartan(&p);
        assert_eq!(J(&p), -inner_product(&v, &v));
    }
    assert_eq!(J(&CartanPoint::from_i64([1, 0, 0, 0, 0, 0, 0])), int(0));
    assert_eq!(J(&CartanPoint::from_i64([1, 0, 0, 1, 0, 0, 0])), int(1));
}

#[test]
fn cartan_product_matches_pair_product() {
    let mut s = Sampler::new(4);
    for _ in 0..100 {
        let (p, r) = (random_cartan(&mut s), random_cartan(&mut s));
        let o = oct_mul(&ImOctonion::from_cartan(&p).to_octonion(), &ImOctonion::from_cartan(&r).to_octonion());
        let (imag, re) = cartan_coordinate_product(&p, &r);
        assert_eq!(re, o.re());
        assert_eq!(imag, im(&o).to_cartan());
        let (sq, sq_re) = cartan_coordinate_product(&p, &p);
        assert!(sq.is_zero());
        assert_eq!(sq_re, J(&p));
    }
}

#[test]
fn printed_cartan_product_differs_only_in_flagged_terms() {
    let mut s = Sampler::new(5);
    let mut real_failures = 0;
    for _ in 0..20 {
        let (p, r) = (random_cartan(&mut s), random_cartan(&mut s));
        let (a, _) = cartan_coordinate_product(&p, &r);
        let (b, _) = printed_cartan_product(&p, &r);
        assert_eq!((a.x.clone(), a.y.clone()), (b.x.clone(), b.y.clone()));
        assert_eq!(a.z, -b.z);
        let (_, sq) = printed_cartan_product(&p, &p);
        if sq != J(&p) {
            real_failures += 1;
        }
    }
    assert!(real_failures > 0);
}

#[test]
fn torus_scaling_is_an_automorphism() {
    let mut s = Sampler::new(6);
    for _ in 0..10 {
        let (a, b) = (s.nonzero_rational(), s.nonzero_rational());
        let lam = [a.clone(), b.clone(), (a * b).recip()];
        let x = ImOctonion::from_slice(&s.vector(7));
        let y = ImOctonion::from_slice(&s.vector(7));
        let xy = oct_mul(&x.to_octonion(), &y.to_octonion());
        let tx = torus_scaling(&lam, &x).to_octonion();
        let ty = torus_scaling(&lam, &y).to_octonion();
        let txy = oct_mul(&tx, &ty);
        assert_eq!(txy.re(), xy.re());
        assert_eq!(im(&txy), torus_scaling(&lam, &im(&xy)));
    }
}
