#![allow(clippy::needless_range_loop)]

use g2roll::exact::{int, q, Rational};
use g2roll::g2::bracket;
use g2roll::roots::{root_decomposition, RootDatum};
use g2roll::serre::*;
use proptest::prelude::*;

fn rd() -> RootDatum {
    root_decomposition().expect("decomposition")
}

#[test]
fn generators_satisfy_all_relations() {
    let rd = rd();
    let s = find_serre_generators(&rd).unwrap();
    for (name, ok) in serre_relations(s.x(), s.y(), s.big_x(), s.big_y()) {
        assert!(ok, "{name}");
    }
}

#[test]
fn table_matches_printed_values() {
    let rd = rd();
    let s = serre_basis(&rd).unwrap();
    let t = structure_constant_table(&s, &rd).unwrap();
    assert_eq!(t.c[0][4], int(12));
    assert_eq!(t.c[4][5], int(36));
    assert_eq!(t.diagonal[0], (int(8), int(12)));
}

// Independent oracle: the diagonal brackets are computed directly and
// solved against h, H by hand-coded 2x2 elimination.
#[test]
fn diagonal_by_direct_elimination() {
    let rd = rd();
    let s = serre_basis(&rd).unwrap();
    let hc = s.h.coords();
    let bc = s.big_h.coords();
    // pick two coordinates where (h, H) is invertible
    let mut pick = None;
    'outer: for i in 0..14 {
        for j in i + 1..14 {
            let d = &hc[i] * &bc[j] - &hc[j] * &bc[i];
            if d != int(0) {
                pick = Some((i, j, d));
                break 'outer;
            }
        }
    }
    let (i, j, d) = pick.unwrap();
    let want = expected_table().diagonal;
    for k in 0..6 {
        let v = bracket(&s.pos[k], &s.neg[k]).coords();
        let a = (&v[i] * &bc[j] - &v[j] * &bc[i]) / &d;
        let b = (&hc[i] * &v[j] - &hc[j] * &v[i]) / &d;
        assert_eq!((a, b), want[k], "{}", diag_name(k));
    }
}

#[test]
fn x1_x2_is_x3_big() {
    let rd = rd();
    let s = serre_basis(&rd).unwrap();
    assert_eq!(bracket(&s.pos[0], &s.pos[1]), s.pos[5]);
}

#[test]
fn symmetry_relations_hold() {
    let rd = rd();
    let s = serre_basis(&rd).unwrap();
    assert!(symmetry_failures(&s, &rd).unwrap().is_empty());
}

#[test]
fn eigentables_for_ad_h() {
    let rd = rd();
    let s = serre_basis(&rd).unwrap();
    ad_eigentables(&s).unwrap();
    // read literally as ad(x), ad(X) the tables cannot hold: both are nilpotent
    assert_eq!(literal_eigentables_hold(&s), (false, false));
}

#[test]
fn renderings_are_stable() {
    let rd = rd();
    let s = serre_basis(&rd).unwrap();
    let t = structure_constant_table(&s, &rd).unwrap();
    let text = render_text(&t);
    assert!(text.starts_with("[x1, x2] = X3\n"));
    assert!(text.contains("h1 = 8h + 12H"));
    assert!(render_latex(&t).contains("\\begin{array}"));
    let j: serde_json::Value = serde_json::from_str(&render_json(&t)).unwrap();
    assert_eq!(j["rows"][4][1][5], "36");
}

fn nonzero() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| q(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]
    #[test]
    fn table_independent_of_generator_scaling(a in nonzero(), b in nonzero()) {
        let rd = rd();
        let s = build_recursive_basis(&find_serre_generators_scaled(&rd, &a, &b).unwrap(), &rd).unwrap();
        prop_assert!(structure_constant_table(&s, &rd).is_ok());
    }
}
