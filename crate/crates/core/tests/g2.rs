use g2roll::exact::{int, kernel_basis, q, zero, Matrix, Rational, Sampler, Subspace, Vec3};
use g2roll::g2::*;
use g2roll::octonion::{cartan_coordinate_product, j_gram, CartanPoint, J};
use g2roll::Error;
use proptest::prelude::*;

fn random_element(s: &mut Sampler) -> G2Element {
    G2Element::from_coords(&s.vector(DIM))
}

fn coeffs() -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((-5i64..=5, 1i64..=4).prop_map(|(n, d)| q(n, d)), DIM)
}

#[test]
fn fifteen_operators_span_fourteen() {
    let ops = cartan_operators();
    assert_eq!(ops.len(), 15);
    let cols: Vec<Vec<Rational>> = ops.iter().map(|o| flatten(&o.matrix)).collect();
    let m = Matrix::from_cols(&cols);
    assert_eq!(m.rank(), 14);
    // the only linear relation is X11 + X22 + X33 = 0
    let rel = kernel_basis(&m);
    assert_eq!(rel.len(), 1);
    let mut want = vec![zero(); 15];
    for (n, o) in ops.iter().enumerate() {
        if ["X11", "X22", "X33"].contains(&o.label.as_str()) {
            want[n] = rel[0][n].clone();
        }
    }
    assert_eq!(rel[0], want);
    assert!(!rel[0][0].eq(&zero()));
    assert_eq!(rel[0][0], rel[0][1]);
    assert_eq!(rel[0][1], rel[0][2]);
}

#[test]
fn operators_span_the_image_of_rho() {
    let vs: Vec<Vec<Rational>> = cartan_operators().iter().map(|o| flatten(&o.matrix)).collect();
    assert_eq!(Subspace::span(49, &vs), g2_matrix_space());
    assert_eq!(g2_matrix_space().dim(), 14);
}

#[test]
fn expansion_reproduces_rho() {
    for n in 0..DIM {
        let u = G2Element::basis(n);
        assert_eq!(operator_expansion(&u), u.rho(), "basis {n}");
    }
}

#[test]
fn trace_condition_enforced() {
    let a = Matrix::identity(3);
    assert!(matches!(G2Element::from_a(a.clone()), Err(Error::NonTraceless(_))));
    assert!(matches!(rho(&a, &Vec3::zero(), &Vec3::zero()), Err(Error::NonTraceless(_))));
}

#[test]
fn bracket_formula_matches_commutators() {
    let mut s = Sampler::new(1);
    for _ in 0..10 {
        let (u, v) = (random_element(&mut s), random_element(&mut s));
        let w = bracket_checked(&u, &v).unwrap();
        assert_eq!(w.rho(), u.rho().commutator(&v.rho()));
    }
}

#[test]
fn jacobi_on_50_triples() {
    let mut s = Sampler::new(2);
    for _ in 0..50 {
        let (a, b, c) = (random_element(&mut s), random_element(&mut s), random_element(&mut s));
        let t1 = bracket(&a, &bracket(&b, &c)).coords();
        let t2 = bracket(&b, &bracket(&c, &a)).coords();
        let t3 = bracket(&c, &bracket(&a, &b)).coords();
        for i in 0..DIM {
            assert_eq!(&t1[i] + &t2[i] + &t3[i], zero());
        }
    }
}

proptest! {
    #[test]
    fn bracket_is_antisymmetric(a in coeffs(), b in coeffs()) {
        let (u, v) = (G2Element::from_coords(&a), G2Element::from_coords(&b));
        prop_assert_eq!(bracket(&u, &v), bracket(&v, &u).scale(&int(-1)));
    }

    #[test]
    fn coords_round_trip(a in coeffs()) {
        let u = G2Element::from_coords(&a);
        prop_assert_eq!(u.coords(), a);
        prop_assert_eq!(G2Element::from_matrix(&u.rho()), Some(u));
    }
}

#[test]
fn every_element_is_j_antisymmetric() {
    for n in 0..DIM {
        assert!(is_j_antisymmetric(&G2Element::basis(n).rho()));
    }
    let so = j_antisymmetric_space();
    assert_eq!(so.dim(), 21);
    assert!(so.contains_space(&g2_matrix_space()));
    assert!(!is_j_antisymmetric(&Matrix::identity(7)));
}

#[test]
fn literal_anticommutator_reading_fails() {
    let g = j_gram();
    let m = G2Element::from_b(Vec3::e(0)).rho();
    assert!(!(&(&m * &g) + &(&g * &m)).is_zero());
    assert!(is_j_antisymmetric(&m));
}

#[test]
fn elements_are_derivations_of_the_product() {
    let mut s = Sampler::new(3);
    for _ in 0..20 {
        let u = random_element(&mut s);
        let p = CartanPoint::from_coords(&s.vector(7));
        let r = CartanPoint::from_coords(&s.vector(7));
        let (pr, _) = cartan_coordinate_product(&p, &r);
        let (a, ra) = cartan_coordinate_product(&u.act(&p), &r);
        let (b, rb) = cartan_coordinate_product(&p, &u.act(&r));
        assert_eq!(u.act(&pr).coords(), g2roll::exact::vadd(&a.coords(), &b.coords()));
        assert_eq!(ra + rb, zero());
    }
}

#[test]
fn group_elements_preserve_j_and_product() {
    let mut s = Sampler::new(4);
    let g = j_gram();
    for _ in 0..10 {
        let m = sample_group_element(&mut s);
        assert_eq!(&(&m.transpose() * &g) * &m, g);
        let p = CartanPoint::from_coords(&s.vector(7));
        let r = CartanPoint::from_coords(&s.vector(7));
        let (pr, re) = cartan_coordinate_product(&p, &r);
        let (gpr, gre) = cartan_coordinate_product(&apply(&m, &p), &apply(&m, &r));
        assert_eq!(gpr, apply(&m, &pr));
        assert_eq!(gre, re);
        assert_eq!(J(&apply(&m, &p)), J(&p));
    }
}

#[test]
fn exponential_needs_nilpotence() {
    let h = G2Element::diag([int(1), int(-1), int(0)]).unwrap();
    assert_eq!(exp_nilpotent(&h), Err(Error::NotNilpotent));
    let e = G2Element::from_b(Vec3::e(1));
    let g = exp_nilpotent(&e).unwrap();
    let back = exp_nilpotent(&e.scale(&int(-1))).unwrap();
    assert!((&g * &back).is_identity());
}

#[test]
fn ad_matrix_is_a_representation() {
    let mut s = Sampler::new(5);
    let (u, v) = (random_element(&mut s), random_element(&mut s));
    let lhs = ad_matrix(&bracket(&u, &v));
    assert_eq!(lhs, ad_matrix(&u).commutator(&ad_matrix(&v)));
}
