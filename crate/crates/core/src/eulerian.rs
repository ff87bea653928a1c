//! The two-variable Eulerian polynomials `E_n(x, q)`: each permutation of
//! length `n` contributes `x^des q^w`, descents in `x` and weight in `q`.
//!
//! Two independent engines produce them. [`en_brute`] enumerates all of
//! `S_n` (parallelised over the first letter, exact merge, so thread count
//! never changes the result). [`en_recur`] runs the convolution recurrence
//!
//! ```text
//! E_n(x, q) = sum_{i=1}^{n-1} C(n-1, i) E_i(x, q) E_{n-i-1}(qx, q) x  +  E_{n-1}(qx, q)
//! ```
//!
//! grounded at `E_0 = 1`, filling an [`EulerianTable`] as it goes.
//! [`coeff_recur`] instead computes one coefficient at a time from the
//! coefficient-level form of the same recurrence, and [`an_classical`] runs
//! the `q = 1` collapse, giving the classical single-variable Eulerian
//! polynomials. Agreement between all of these routes is what the `verify`
//! sweeps and the acceptance suite pin down.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::numeric::{binomial, factorial};
use crate::perm::WeightMemo;
use crate::report::VerificationReport;
use crate::{Nat, Poly1, Poly2};

/// Largest `n` the enumeration engines accept unless told otherwise.
pub const DEFAULT_ENUM_CEILING: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EulerianError {
    #[error("n = {n} exceeds the enumeration ceiling {ceiling}; the recurrence engine handles large n")]
    CeilingExceeded { n: usize, ceiling: usize },
    #[error("table entry for n = {n} rejected: {reason}")]
    InvalidEntry { n: usize, reason: String },
}

/// How a table entry was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Enumerated,
    Recurrence,
    CacheFile,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub poly: Poly2,
    pub provenance: Provenance,
}

/// Stores `E_n` keyed by `n`. Entries are validated on insertion: the
/// coefficients of `E_n` must sum to `n!` and every term must satisfy
/// `d <= n - 1` (for `n >= 1`) and `m <= d(n - d - 1)`.
///
/// A filled table is read-only in use and shares freely across threads;
/// insertion happens through `&mut self` and is therefore serialized.
#[derive(Debug, Default)]
pub struct EulerianTable {
    entries: BTreeMap<usize, TableEntry>,
}

impl EulerianTable {
    pub fn new() -> Self {
        EulerianTable::default()
    }

    pub fn get(&self, n: usize) -> Option<&Poly2> {
        self.entries.get(&n).map(|e| &e.poly)
    }

    pub fn entry(&self, n: usize) -> Option<&TableEntry> {
        self.entries.get(&n)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_n(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &TableEntry)> {
        self.entries.iter().map(|(&n, e)| (n, e))
    }

    pub fn insert(&mut self, n: usize, poly: Poly2, provenance: Provenance) -> Result<(), EulerianError> {
        validate_en(n, &poly)?;
        self.entries.insert(n, TableEntry { poly, provenance });
        Ok(())
    }

    /// Returns `E_n`, running the recurrence to fill any gap below `n`.
    pub fn ensure(&mut self, n: usize) -> &Poly2 {
        for k in 0..=n {
            if self.entries.contains_key(&k) {
                continue;
            }
            let poly = recurrence_step(k, self);
            self.insert(k, poly, Provenance::Recurrence)
                .expect("recurrence output satisfies the table invariants");
        }
        self.get(n).expect("just ensured")
    }
}

/// Mass and degree-bound invariants every stored `E_n` must satisfy.
pub fn validate_en(n: usize, poly: &Poly2) -> Result<(), EulerianError> {
    let mass = poly.coeff_sum();
    if mass != factorial(n) {
        return Err(EulerianError::InvalidEntry {
            n,
            reason: format!("coefficient mass {mass} differs from n! = {}", factorial(n)),
        });
    }
    for (d, m, _) in poly.terms() {
        if d > n.saturating_sub(1) {
            return Err(EulerianError::InvalidEntry {
                n,
                reason: format!("term x^{d} exceeds the descent bound"),
            });
        }
        if m > d * n.saturating_sub(d + 1) {
            return Err(EulerianError::InvalidEntry {
                n,
                reason: format!("term x^{d} q^{m} exceeds the weight bound"),
            });
        }
    }
    Ok(())
}

fn distribution_to_poly(counts: HashMap<(usize, usize), u64>) -> Poly2 {
    let mut poly = Poly2::zero();
    for ((d, m), count) in counts {
        poly.add_term(d, m, Nat::from(count));
    }
    poly
}

fn merge_counts(
    mut a: HashMap<(usize, usize), u64>,
    b: HashMap<(usize, usize), u64>,
) -> HashMap<(usize, usize), u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// Joint distribution of (descents, weight) over words `first . rest` where
/// `rest` ranges over all arrangements of the remaining letters.
fn count_class(n: usize, first: u32, letters: &[u32]) -> HashMap<(usize, usize), u64> {
    let rest: Vec<u32> = letters.iter().copied().filter(|&v| v != first).collect();
    let mut memo = WeightMemo::new();
    let mut counts: HashMap<(usize, usize), u64> = HashMap::new();
    let mut word = Vec::with_capacity(n);
    for tail in rest.iter().copied().permutations(rest.len()) {
        word.clear();
        word.push(first);
        word.extend_from_slice(&tail);
        let p = crate::perm::Permutation::new(word.clone()).expect("distinct letters");
        let d = p.descents();
        let w = p.weight_with(&mut memo) as usize;
        *counts.entry((d, w)).or_insert(0) += 1;
    }
    counts
}

/// `E_n(x, q)` by full enumeration of `S_n`. Refuses `n > ceiling`; mass
/// grows factorially and the recurrence engine has no such limit.
pub fn en_brute(n: usize, ceiling: usize) -> Result<Poly2, EulerianError> {
    if n > ceiling {
        return Err(EulerianError::CeilingExceeded { n, ceiling });
    }
    if n == 0 {
        return Ok(Poly2::one());
    }
    let letters: Vec<u32> = (1..=n as u32).collect();
    let counts = letters
        .par_iter()
        .map(|&first| count_class(n, first, &letters))
        .reduce(HashMap::new, merge_counts);
    Ok(distribution_to_poly(counts))
}

/// `E*_n(x, q)`: the same sum restricted to permutations ending in 1.
pub fn en_star_brute(n: usize, ceiling: usize) -> Result<Poly2, EulerianError> {
    if n > ceiling {
        return Err(EulerianError::CeilingExceeded { n, ceiling });
    }
    if n == 0 {
        return Ok(Poly2::zero());
    }
    if n == 1 {
        return Ok(Poly2::one());
    }
    // Words are pi . 1 with pi an arrangement of 2..=n.
    let letters: Vec<u32> = (2..=n as u32).collect();
    let counts = letters
        .par_iter()
        .map(|&first| {
            let rest: Vec<u32> = letters.iter().copied().filter(|&v| v != first).collect();
            let mut memo = WeightMemo::new();
            let mut counts: HashMap<(usize, usize), u64> = HashMap::new();
            let mut word = Vec::with_capacity(n);
            for tail in rest.iter().copied().permutations(rest.len()) {
                word.clear();
                word.push(first);
                word.extend_from_slice(&tail);
                word.push(1);
                let p = crate::perm::Permutation::new(word.clone()).expect("distinct letters");
                let d = p.descents();
                let w = p.weight_with(&mut memo) as usize;
                *counts.entry((d, w)).or_insert(0) += 1;
            }
            counts
        })
        .reduce(HashMap::new, merge_counts);
    Ok(distribution_to_poly(counts))
}

/// One step of the convolution recurrence; the table must hold `E_0..E_{k-1}`.
fn recurrence_step(k: usize, table: &EulerianTable) -> Poly2 {
    if k == 0 {
        return Poly2::one();
    }
    let prev = table.get(k - 1).expect("table filled below k");
    let mut acc = prev.substitute_x_qx();
    for i in 1..k {
        let left = table.get(i).expect("table filled below k");
        let right = table.get(k - 1 - i).expect("table filled below k").substitute_x_qx();
        acc += &left.mul(&right).mul_x(1).scale(&binomial(k - 1, i));
    }
    acc
}

/// `E_n(x, q)` by the convolution recurrence, filling `table` up to `n`.
pub fn en_recur(n: usize, table: &mut EulerianTable) -> Poly2 {
    table.ensure(n).clone()
}

/// One coefficient `[x^d q^m] E_n` straight from the coefficient-level
/// recurrence, reading only inner polynomials `E_0..E_{n-1}` from the table
/// (filling them on demand). Exponent combinations that go negative
/// contribute nothing.
pub fn coeff_recur(n: usize, d: usize, m: usize, table: &mut EulerianTable) -> Nat {
    if n == 0 {
        return if d == 0 && m == 0 { Nat::one() } else { Nat::zero() };
    }
    table.ensure(n - 1);
    let mut acc = Nat::zero();
    for i in 1..n {
        let outer = table.get(n - 1 - i).expect("ensured").clone();
        let inner = table.get(i).expect("ensured");
        let mut sum = Nat::zero();
        for k in 1..=i.min(d) {
            for j in 0..=m {
                // outer term x^{d-k} q^{m-j}, inner term x^{k-1} q^{k+j-d}
                if k + j < d {
                    continue;
                }
                let left = outer.coeff_xq(d - k, m - j);
                if left.is_zero() {
                    continue;
                }
                let right = inner.coeff_xq(k - 1, k + j - d);
                if right.is_zero() {
                    continue;
                }
                sum += left * right;
            }
        }
        acc += binomial(n - 1, i) * sum;
    }
    if m >= d {
        acc += table.get(n - 1).expect("ensured").coeff_xq(d, m - d);
    }
    acc
}

/// Classical Eulerian polynomial `A_n(x)`, by the `q = 1` collapse of the
/// convolution recurrence.
pub fn an_classical(n: usize) -> Poly1 {
    let mut rows: Vec<Poly1> = vec![Poly1::one()];
    for k in 1..=n {
        let mut acc = rows[k - 1].clone();
        for i in 1..k {
            let prod = rows[i].mul(&rows[k - 1 - i]).shift(1).scale(&binomial(k - 1, i));
            acc += &prod;
        }
        rows.push(acc);
    }
    rows.truncate(n + 1);
    rows.pop().expect("n-th row built")
}

/// Descent histogram of `S_n` counted directly, no weights involved:
/// entry `d` is the number of permutations with `d` descents.
pub fn descent_counts(n: usize) -> Vec<u64> {
    if n == 0 {
        return vec![1];
    }
    let mut counts = vec![0u64; n];
    for word in (1..=n as u32).permutations(n) {
        let d = word.windows(2).filter(|w| w[0] > w[1]).count();
        counts[d] += 1;
    }
    while counts.len() > 1 && *counts.last().unwrap() == 0 {
        counts.pop();
    }
    counts
}

/// Compares the enumeration and recurrence engines coefficient by
/// coefficient for every `0 <= n <= n_max`.
pub fn verify_brute_recur(n_max: usize, ceiling: usize) -> Result<VerificationReport, EulerianError> {
    let mut report = VerificationReport::new("recurrence", format!("0 <= n <= {n_max}"));
    let mut table = EulerianTable::new();
    for n in 0..=n_max {
        let brute = en_brute(n, ceiling)?;
        let recur = en_recur(n, &mut table);
        compare_polys(&mut report, n, &brute, &recur);
    }
    report.sort_violations();
    Ok(report)
}

/// Checks that dropping to the words ending in 1 shifts the descent count by
/// one and nothing else: `[x^d] E_k = [x^{d+1}] E*_{k+1}` for `1 <= k <=
/// k_max` and every `d`.
pub fn verify_star_shift(k_max: usize, ceiling: usize) -> Result<VerificationReport, EulerianError> {
    let mut report =
        VerificationReport::new("star-shift", format!("1 <= k <= {k_max}, 0 <= d <= k"));
    for k in 1..=k_max {
        let plain = en_brute(k, ceiling)?;
        let star = en_star_brute(k + 1, ceiling)?;
        for d in 0..=k {
            let lhs = plain.coeff_x(d);
            let rhs = star.coeff_x(d + 1);
            report.record(
                vec![("n", k as i64), ("d", d as i64)],
                lhs.render_descending("q"),
                rhs.render_descending("q"),
                lhs == rhs,
            );
        }
    }
    report.sort_violations();
    Ok(report)
}

fn compare_polys(report: &mut VerificationReport, n: usize, expected: &Poly2, actual: &Poly2) {
    let mut keys: Vec<(usize, usize)> = expected.terms().map(|(d, m, _)| (d, m)).collect();
    keys.extend(actual.terms().map(|(d, m, _)| (d, m)));
    keys.sort_unstable();
    keys.dedup();
    for (d, m) in keys {
        let e = expected.coeff_xq(d, m);
        let a = actual.coeff_xq(d, m);
        report.record(
            vec![("n", n as i64), ("d", d as i64), ("m", m as i64)],
            &e,
            &a,
            e == a,
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn brute_small_polynomials() {
        assert_eq!(en_brute(0, 10).unwrap().render(), "1");
        assert_eq!(en_brute(1, 10).unwrap().render(), "1");
        assert_eq!(en_brute(2, 10).unwrap().render(), "1+x");
        assert_eq!(en_brute(3, 10).unwrap().render(), "1+x(q+3)+x^2");
        assert_eq!(
            en_brute(4, 10).unwrap().render(),
            "1+x(q^2+3q+7)+x^2(q^2+4q+6)+x^3"
        );
    }

    #[test]
    fn brute_refuses_above_ceiling() {
        assert_eq!(
            en_brute(25, 10),
            Err(EulerianError::CeilingExceeded { n: 25, ceiling: 10 })
        );
        assert!(en_star_brute(25, 10).is_err());
    }

    #[test]
    fn star_small_polynomials() {
        assert_eq!(en_star_brute(1, 10).unwrap().render(), "1");
        assert_eq!(en_star_brute(2, 10).unwrap().render(), "x");
        // S'_4 sorted by descents: one descent 2341-like, etc.
        let star4 = en_star_brute(4, 10).unwrap();
        assert_eq!(star4.coeff_x(2).render_descending("q"), "q+3");
        assert_eq!(star4.coeff_sum(), nat(6));
        assert_eq!(en_star_brute(0, 10).unwrap(), Poly2::zero());
    }

    #[test]
    fn recurrence_matches_enumeration_to_seven() {
        let report = verify_brute_recur(7, 10).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn recurrence_small_values() {
        let mut table = EulerianTable::new();
        assert_eq!(en_recur(2, &mut table).render(), "1+x");
        assert_eq!(en_recur(3, &mut table).render(), "1+x(q+3)+x^2");
        assert_eq!(table.entry(3).unwrap().provenance, Provenance::Recurrence);
    }

    #[test]
    fn table_validates_on_insert() {
        let mut table = EulerianTable::new();
        let bogus = Poly2::parse("1+x").unwrap();
        let err = table.insert(3, bogus, Provenance::Enumerated).unwrap_err();
        assert!(matches!(err, EulerianError::InvalidEntry { n: 3, .. }));

        // Right mass, wrong degree span.
        let bogus = Poly2::parse("x^5(6)").unwrap();
        assert!(table.insert(3, bogus, Provenance::Enumerated).is_err());
        let bogus = Poly2::parse("5+x(q^9)").unwrap();
        assert!(table.insert(3, bogus, Provenance::Enumerated).is_err());

        let good = en_brute(3, 10).unwrap();
        table.insert(3, good, Provenance::Enumerated).unwrap();
        assert_eq!(table.max_n(), Some(3));
    }

    #[test]
    fn coeff_recur_matches_polynomials() {
        let mut table = EulerianTable::new();
        assert_eq!(coeff_recur(3, 1, 0, &mut table), nat(3));
        assert_eq!(coeff_recur(4, 2, 1, &mut table), nat(4));
        assert_eq!(coeff_recur(5, 2, 4, &mut table), nat(1));
        assert_eq!(coeff_recur(5, 2, 9, &mut table), nat(0));
        assert_eq!(coeff_recur(0, 0, 0, &mut table), nat(1));
    }

    #[test]
    fn coeff_recur_full_agreement_to_eight() {
        let mut table = EulerianTable::new();
        let polys: Vec<Poly2> = (0..=8).map(|n| en_recur(n, &mut table)).collect();
        for (n, poly) in polys.iter().enumerate() {
            for d in 0..n.max(1) {
                let bound = if n == 0 { 0 } else { d * (n - d - 1) };
                for m in 0..=bound {
                    let mut fresh = EulerianTable::new();
                    let got = coeff_recur(n, d, m, &mut fresh);
                    assert_eq!(got, poly.coeff_xq(d, m), "n={n} d={d} m={m}");
                }
            }
        }
    }

    #[test]
    fn classical_polynomials() {
        assert_eq!(an_classical(0).render_ascending("x"), "1");
        assert_eq!(an_classical(1).render_ascending("x"), "1");
        assert_eq!(an_classical(3).render_ascending("x"), "1+4x+x^2");
        assert_eq!(an_classical(4).render_ascending("x"), "1+11x+11x^2+x^3");
        assert_eq!(an_classical(5).coeff_sum(), nat(120));
    }

    #[test]
    fn classical_symmetry() {
        for n in 2..=15usize {
            let a = an_classical(n);
            let deg = a.degree().unwrap();
            assert_eq!(deg, n - 1);
            for i in 0..=deg {
                assert_eq!(a.coeff(i), a.coeff(deg - i), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn descent_histogram_matches_classical() {
        for n in 0..=7usize {
            let hist = descent_counts(n);
            let a = an_classical(n);
            for (d, count) in hist.iter().enumerate() {
                assert_eq!(a.coeff(d), nat(*count), "n={n} d={d}");
            }
            assert_eq!(hist.iter().sum::<u64>(), (1..=n.max(1) as u64).product());
        }
    }

    #[test]
    fn star_shift_sweep_passes() {
        let report = verify_star_shift(6, 10).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn star_shift_fails_at_zero() {
        // The identity starts at k = 1: for k = 0 the left side is the
        // constant 1 while S'_1 carries no descent.
        let plain = en_brute(0, 10).unwrap();
        let star = en_star_brute(1, 10).unwrap();
        assert_ne!(plain.coeff_x(0), star.coeff_x(1));
    }

    #[test]
    fn leading_coefficients_are_one() {
        let mut table = EulerianTable::new();
        for n in 1..=9usize {
            let poly = en_recur(n, &mut table);
            for d in 0..n {
                let top = d * (n - d - 1);
                assert_eq!(poly.coeff_xq(d, top), nat(1), "n={n} d={d}");
            }
        }
    }
}
