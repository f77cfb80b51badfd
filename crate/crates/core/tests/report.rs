use g2roll::octonion::basis_multiplication_table;
use g2roll::report::*;
use g2roll::roots::root_decomposition;
use g2roll::serre::{serre_basis, structure_constant_table, render_text};

fn cfg(seed: u64) -> RunConfig {
    RunConfig {
        seed,
        ..RunConfig::default()
    }
}

#[test]
fn golden_files_match_rendering() {
    let t = basis_multiplication_table().unwrap();
    assert_eq!(t.to_text(), MULTIPLICATION_GOLDEN);
    let rd = root_decomposition().unwrap();
    let sb = serre_basis(&rd).unwrap();
    let c = structure_constant_table(&sb, &rd).unwrap();
    assert_eq!(render_text(&c), CONSTANTS_GOLDEN);
}

#[test]
fn golden_constants_carry_the_known_values() {
    for needle in ["[x1, x2] = X3", "8h + 12H", "36h + 36H", "36h + 72H"] {
        assert!(CONSTANTS_GOLDEN.contains(needle), "{needle}");
    }
}

#[test]
fn json_omits_durations_unless_asked() {
    let v = run_suite(Suite::Roots, &cfg(0));
    assert!(!to_json(&v).contains("duration_ms"));
    let timed = RunConfig {
        timings: true,
        ..cfg(0)
    };
    let v = run_suite(Suite::Roots, &timed);
    assert!(v.iter().all(|r| r.duration_ms.is_some()));
    assert!(to_json(&v).contains("duration_ms"));
}

#[test]
fn reports_are_sorted_and_unique() {
    let v = run_suites(&[Suite::Octonions, Suite::Pfaffian, Suite::Roots], &cfg(0));
    let ids: Vec<&str> = v.iter().map(|r| r.claim_id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(ids, sorted);
}

#[test]
fn same_seed_same_json_other_seed_still_clean() {
    let a = to_json(&run_suites(&[Suite::Quadric, Suite::Rolling], &cfg(5)));
    let b = to_json(&run_suites(&[Suite::Quadric, Suite::Rolling], &cfg(5)));
    assert_eq!(a, b);
    let c = run_suites(&[Suite::Quadric, Suite::Rolling], &cfg(6));
    assert_eq!(tally_reports(&c).fail, 0);
}

#[test]
fn sample_count_scales() {
    let c = RunConfig {
        samples: 40,
        ..RunConfig::default()
    };
    assert_eq!(c.count(10), 20);
    assert_eq!(RunConfig { samples: 1, ..c }.count(10), 1);
    assert_eq!(RunConfig::default().count(100), 100);
}

#[test]
fn flagged_set_is_exactly_the_printed_discrepancies() {
    let v = run_all(&cfg(0));
    let flagged: Vec<&str> = v
        .iter()
        .filter(|r| r.status == Status::Flagged)
        .map(|r| r.claim_id.as_str())
        .collect();
    assert_eq!(
        flagged,
        [
            "compact.ktilde.printed",
            "constants.eigen.printed",
            "g2.j_antisymmetric.printed",
            "octonions.cartan_product.printed_imaginary",
            "octonions.cartan_product.printed_real",
            "octonions.conjugation.printed",
            "octonions.norm.conjugate_sign",
            "octonions.norm.pair_form",
            "octonions.norm.square_sign",
            "pfaffian.cases.printed",
            "pfaffian.octonion_form.printed",
            "quadric.cover.printed",
        ]
    );
    let t = tally_reports(&v);
    assert_eq!((t.fail, t.flagged, t.pass + t.fail + t.flagged), (0, 12, v.len()));
}

#[test]
fn text_summary_ends_with_tally() {
    let v = run_suite(Suite::Roots, &cfg(0));
    let text = to_text(&v);
    let last = text.lines().last().unwrap();
    assert_eq!(last, format!("{} checks: {} pass, 0 fail, 0 flagged", v.len(), v.len()));
}

#[test]
fn rolling_helpers_agree_with_expected_growth() {
    let mut s = g2roll::exact::Sampler::new(9);
    let g = rolling_growth(&g2roll::exact::int(3), 3, &mut s).unwrap();
    assert!(g.iter().all(|x| x == &[2, 3, 5]));
    let g = rolling_growth(&g2roll::exact::int(1), 3, &mut s).unwrap();
    assert!(g.iter().all(|x| x == &[2, 2, 2]));
    assert_eq!(rolling_invariance(&g2roll::exact::q(1, 3), 4, &mut s).unwrap(), 4);
}
