//! Acceptance gate: one test per shipping criterion, every comparison
//! exact. Each test prints as its own pass/fail line in the harness
//! output.
//!
//! Criterion 12 exercises a conjectured identity: a violation there is
//! reported as a finding in the test output instead of failing the build,
//! since the statement itself is open.

use std::process::Command;

use qeuler_core::eulerian::{
    an_classical, coeff_recur, descent_counts, en_brute, en_recur, verify_star_shift,
    EulerianTable, DEFAULT_ENUM_CEILING,
};
use qeuler_core::golden::{golden_en, three_way_diff};
use qeuler_core::partitions::{
    check_reference_triangle, sweep_alternating_t, sweep_alternating_w, sweep_append_ones,
    sweep_enumeration, PartitionTable,
};
use qeuler_core::perm::verify_bijection;
use qeuler_core::stabilization::{
    verify_disparity, verify_shift, verify_stabilization, wd_prefix,
};
use qeuler_core::Nat;

#[test]
fn criterion_01_reference_polynomials_match_both_engines() {
    let mut table = EulerianTable::new();
    for n in 0..=7 {
        let reference = golden_en(n).unwrap();
        assert!(reference.notes.is_empty(), "reference text for n = {n} needed notes");
        let brute = en_brute(n, DEFAULT_ENUM_CEILING).unwrap();
        let recur = en_recur(n, &mut table);
        assert_eq!(brute, reference.poly, "enumeration vs reference at n = {n}");
        assert_eq!(recur, reference.poly, "recurrence vs reference at n = {n}");
    }
}

#[test]
fn criterion_02_engines_agree() {
    let mut table = EulerianTable::new();
    for n in 0..=9 {
        let brute = en_brute(n, DEFAULT_ENUM_CEILING).unwrap();
        let recur = en_recur(n, &mut table);
        assert_eq!(brute, recur, "engines disagree at n = {n}");
    }
    // The n = 10 enumeration walks 10! permutations; opt in where the
    // hardware makes that worthwhile.
    if std::env::var_os("QEULER_ACCEPT_BRUTE_TEN").is_some() {
        let brute = en_brute(10, DEFAULT_ENUM_CEILING).unwrap();
        let recur = en_recur(10, &mut table);
        assert_eq!(brute, recur, "engines disagree at n = 10");
    }
}

#[test]
fn criterion_03_worked_example_weight_command() {
    let output = Command::new(env!("CARGO_BIN_EXE_qeuler"))
        .arg("weight")
        .arg("781659243")
        .env_remove("QEULER_CACHE")
        .env_remove("QEULER_ENUM_CEILING")
        .output()
        .unwrap();
    assert!(output.status.success(), "weight command failed: {output:?}");
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("weight: 5"), "missing weight line in:\n{stdout}");
    assert!(stdout.contains("descents: 4"), "missing descent line in:\n{stdout}");
}

#[test]
fn criterion_04_coefficient_recurrence_matches_polynomials() {
    let mut table = EulerianTable::new();
    en_recur(12, &mut table);
    for n in 0..=12 {
        let poly = table.get(n).unwrap().clone();
        for (d, m, c) in poly.terms() {
            let direct = coeff_recur(n, d, m, &mut table);
            assert_eq!(&direct, c, "coefficient recurrence at n = {n}, d = {d}, m = {m}");
        }
        for d in 0..n.max(1) {
            let above = d * n.saturating_sub(d + 1) + 1;
            assert_eq!(
                coeff_recur(n, d, above, &mut table),
                Nat::from(0u32),
                "expected zero above the weight ceiling at n = {n}, d = {d}"
            );
        }
    }
}

#[test]
fn criterion_05_stabilization_sweep() {
    let mut table = EulerianTable::new();
    let report = verify_stabilization(10, &mut table);
    assert!(report.passed(), "{}", report.render_text());
}

#[test]
fn criterion_06_shift_sweep() {
    let mut table = EulerianTable::new();
    let report = verify_shift(10, &mut table);
    assert!(report.passed(), "{}", report.render_text());
}

#[test]
fn criterion_07_disparity_sweep() {
    let report = verify_disparity(8);
    assert!(report.passed(), "{}", report.render_text());
    assert!(report.cases >= 40320, "sweep did not reach the full n = 8 layer");
}

#[test]
fn criterion_08_bijection_sweep() {
    let report = verify_bijection(8);
    assert!(report.passed(), "{}", report.render_text());
}

#[test]
fn criterion_09_star_column_shift() {
    let report = verify_star_shift(8, DEFAULT_ENUM_CEILING).unwrap();
    assert!(report.passed(), "{}", report.render_text());
}

#[test]
fn criterion_10_series_prefixes() {
    let mut table = EulerianTable::new();
    let expected = [
        (1, "1,3,7,15,31,63"),
        (2, "1,4,11,31,65,157"),
        (3, "1,5,16,41,112,244"),
        (4, "1,6,22,63,155,393"),
        (5, "1,7,29,92,247,590"),
    ];
    for (d, csv) in expected {
        let prefix = wd_prefix(d, 5, &mut table).unwrap();
        assert_eq!(prefix.render_csv(), csv, "series prefix for d = {d}");
    }
}

#[test]
fn criterion_11_partition_identities() {
    let mut table = PartitionTable::new();
    let triangle = check_reference_triangle(&mut table);
    assert!(triangle.passed(), "{}", triangle.render_text());
    assert_eq!(triangle.cases, 55);
    let agreement = sweep_enumeration(12, &mut table);
    assert!(agreement.passed(), "{}", agreement.render_text());
    let append = sweep_append_ones(15, &mut table);
    assert!(append.passed(), "{}", append.render_text());
    let alternating = sweep_alternating_t(5, 20, &mut table);
    assert!(alternating.passed(), "{}", alternating.render_text());
}

#[test]
fn criterion_12_conjectured_series_identity() {
    let mut table = EulerianTable::new();
    let report = sweep_alternating_w(3, 10, &mut table).unwrap();
    // Full domain: k = 1 covers d = 2..=10, k = 2 covers 4..=10, k = 3
    // covers 6..=10.
    assert_eq!(report.cases, 21, "conjecture sweep did not cover its domain");
    if !report.passed() {
        println!("finding (conjecture severity, not a build failure):");
        println!("{}", report.render_text());
    }
}

#[test]
fn criterion_13_reference_table_diffs() {
    let mut table = EulerianTable::new();
    en_recur(10, &mut table);

    let clean = three_way_diff(
        table.get(8).unwrap(),
        Some(&en_brute(8, DEFAULT_ENUM_CEILING).unwrap()),
        &golden_en(8).unwrap(),
    );
    assert!(clean.engines_agree, "{}", clean.render());
    assert!(clean.reference_matches, "{}", clean.render());

    // The printed tables for n = 9 and n = 10 contain transcription
    // defects; the diff lists them without failing the build. The exact
    // defect locations are pinned so a regression in either engine or in
    // the transcription shows up as a change here.
    let nine = three_way_diff(table.get(9).unwrap(), None, &golden_en(9).unwrap());
    println!("{}", nine.render());
    let nine_rows: Vec<(usize, usize)> = nine.mismatches.iter().map(|r| (r.d, r.m)).collect();
    assert_eq!(nine_rows, [(2, 1)], "unexpected diff set for n = 9");

    let ten = three_way_diff(table.get(10).unwrap(), None, &golden_en(10).unwrap());
    println!("{}", ten.render());
    let ten_rows: Vec<(usize, usize)> = ten.mismatches.iter().map(|r| (r.d, r.m)).collect();
    assert_eq!(
        ten_rows,
        [(1, 6), (1, 7), (2, 0), (3, 6), (3, 7), (3, 8), (5, 18), (7, 10)],
        "unexpected diff set for n = 10"
    );
}

#[test]
fn criterion_14_classical_collapse() {
    let mut table = EulerianTable::new();
    for n in 0..=15 {
        let collapsed = en_recur(n, &mut table).eval_q1();
        assert_eq!(collapsed, an_classical(n), "q = 1 collapse at n = {n}");
    }
    for n in 0..=9 {
        let counts = descent_counts(n);
        let classical = an_classical(n);
        for (d, count) in counts.iter().enumerate() {
            assert_eq!(
                classical.coeff(d),
                Nat::from(*count),
                "descent histogram at n = {n}, d = {d}"
            );
        }
        assert!(classical.degree().map_or(0, |deg| deg + 1) <= counts.len().max(1));
    }
}
