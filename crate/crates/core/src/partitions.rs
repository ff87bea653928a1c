//! Partitions whose parts come in two types, and their ties to the
//! stabilized series `W_d(t)`.
//!
//! `T(n, k)` counts partitions of `n` with exactly `k` parts marked as a
//! second type (written with an ASCII prime: `2'1'1`). Marks live on part
//! slots: equal values with marks in different slots are different objects,
//! so a partition with `L` parts contributes `C(L, k)` objects.
//!
//! [`count_t`] runs a dynamic program over (remaining total, largest
//! allowed part, marks left), [`enumerate_ttp`] lists the objects
//! themselves in a documented canonical order, and [`partition_count`]
//! supplies the classical `p(n)` by the pentagonal-number recurrence as an
//! independent check of the `k = 0` column. The `check_*` sweeps drive the
//! alternating-sum identity for `T`, its conjectured twin for `W_d`, and
//! the cell-for-cell match between `W_d` coefficients and `T` entries on
//! the observed region `k <= d`.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::eulerian::EulerianTable;
use crate::numeric::binomial;
use crate::report::VerificationReport;
use crate::stabilization::{stabilized_coeff, StabilizationError};
use crate::{Int, Nat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("b = {b} outside the append range b <= 2k - n for n = {n}, k = {k}")]
    AppendRange { n: usize, k: usize, b: usize },
    #[error("alternating identity needs d >= 2k >= 2, got k = {k}, d = {d}")]
    AlternatingRange { k: usize, d: usize },
    #[error("correspondence is only checked for k <= d, got k = {k}, d = {d}")]
    CorrespondenceRange { k: usize, d: usize },
    #[error(transparent)]
    Stabilization(#[from] StabilizationError),
}

/// One partition with marked slots: `parts` weakly decreasing, `marked[i]`
/// true when slot `i` carries the second type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTypePartition {
    parts: Vec<u32>,
    marked: Vec<bool>,
}

impl TwoTypePartition {
    pub fn new(parts: Vec<u32>, marked: Vec<bool>) -> Option<Self> {
        if parts.len() != marked.len() {
            return None;
        }
        if parts.iter().any(|&p| p == 0) {
            return None;
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(TwoTypePartition { parts, marked })
    }

    pub fn total(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn marks(&self) -> usize {
        self.marked.iter().filter(|&&b| b).count()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn marked(&self) -> &[bool] {
        &self.marked
    }
}

impl fmt::Display for TwoTypePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        for (p, &m) in self.parts.iter().zip(&self.marked) {
            write!(f, "{p}")?;
            if m {
                f.write_str("'")?;
            }
        }
        Ok(())
    }
}

/// All two-type partitions of `n` with exactly `k` marks, in canonical
/// order: partitions by lexicographically decreasing part lists, then mark
/// patterns by lexicographic order of the marked slot positions.
pub fn enumerate_ttp(n: usize, k: usize) -> Vec<TwoTypePartition> {
    let mut out = Vec::new();
    let mut parts: Vec<u32> = Vec::new();
    fill(n, n, &mut parts, &mut |parts| {
        if parts.len() < k {
            return;
        }
        for slots in (0..parts.len()).combinations(k) {
            let mut marked = vec![false; parts.len()];
            for i in slots {
                marked[i] = true;
            }
            out.push(TwoTypePartition { parts: parts.to_vec(), marked });
        }
    });
    out
}

fn fill(rem: usize, max_part: usize, parts: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if rem == 0 {
        emit(parts);
        return;
    }
    for next in (1..=max_part.min(rem)).rev() {
        parts.push(next as u32);
        fill(rem - next, next, parts, emit);
        parts.pop();
    }
}

/// Memoized counting over (remaining total, largest allowed part, marks
/// left): choose the multiplicity of the largest part and how many of those
/// slots carry a mark.
#[derive(Default)]
pub struct PartitionTable {
    memo: HashMap<(usize, usize, usize), Nat>,
}

impl PartitionTable {
    pub fn new() -> Self {
        PartitionTable::default()
    }

    /// `T(n, k)`.
    pub fn count(&mut self, n: usize, k: usize) -> Nat {
        self.bounded(n, n, k)
    }

    fn bounded(&mut self, rem: usize, max_part: usize, k: usize) -> Nat {
        if rem == 0 {
            return if k == 0 { Nat::one() } else { Nat::zero() };
        }
        if max_part == 0 {
            return Nat::zero();
        }
        let key = (rem, max_part, k);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let mut total = Nat::zero();
        for mult in 0..=rem / max_part {
            for marks in 0..=mult.min(k) {
                let ways = binomial(mult, marks);
                if ways.is_zero() {
                    continue;
                }
                total += ways * self.bounded(rem - mult * max_part, max_part - 1, k - marks);
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `T(n, k)` with a throwaway memo table.
pub fn count_t(n: usize, k: usize) -> Nat {
    PartitionTable::new().count(n, k)
}

/// Classical partition numbers by the pentagonal-number recurrence,
/// independent of the two-type dynamic program.
pub fn partition_count(n: usize) -> Nat {
    let mut p: Vec<Int> = vec![Int::one()];
    for m in 1..=n {
        let mut acc = Int::zero();
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g1 > m && g2 > m {
                break;
            }
            let sign = if k % 2 == 0 { -Int::one() } else { Int::one() };
            if g1 <= m {
                acc += sign.clone() * p[m - g1].clone();
            }
            if g2 <= m {
                acc += sign * p[m - g2].clone();
            }
            k += 1;
        }
        p.push(acc);
    }
    p[n].to_biguint().expect("partition numbers are nonnegative")
}

/// The published ten-row table of `T(n, k)`, `0 <= k <= n <= 9`.
pub const REFERENCE_TRIANGLE: [&[u64]; 10] = [
    &[1],
    &[1, 1],
    &[2, 3, 1],
    &[3, 6, 4, 1],
    &[5, 12, 11, 5, 1],
    &[7, 20, 24, 16, 6, 1],
    &[11, 35, 49, 41, 22, 7, 1],
    &[15, 54, 89, 91, 63, 29, 8, 1],
    &[22, 86, 158, 186, 155, 92, 37, 9, 1],
    &[30, 128, 262, 351, 342, 247, 129, 46, 10, 1],
];

/// Checks the dynamic program against every published triangle entry.
pub fn check_reference_triangle(table: &mut PartitionTable) -> VerificationReport {
    let mut report =
        VerificationReport::new("partition-triangle", "0 <= k <= n <= 9 against the published rows");
    for (n, row) in REFERENCE_TRIANGLE.iter().enumerate() {
        for (k, &expected) in row.iter().enumerate() {
            let got = table.count(n, k);
            report.record(
                vec![("n", n as i64), ("d", k as i64)],
                expected,
                &got,
                got == Nat::from(expected),
            );
        }
    }
    report.sort_violations();
    report
}

fn append_sides(n: usize, k: usize, b: usize, table: &mut PartitionTable) -> (Nat, Nat) {
    let lhs = table.count(n, k);
    let mut rhs = Nat::zero();
    if b <= n {
        for j in 0..=k.min(b) {
            rhs += binomial(b, j) * table.count(n - b, k - j);
        }
    }
    (lhs, rhs)
}

/// Appending `b` extra parts of size 1 splits off a binomial convolution:
/// `T(n, k) = sum_j C(b, j) T(n - b, k - j)`, valid for `b <= 2k - n`.
pub fn check_append_ones(
    n: usize,
    k: usize,
    b: usize,
    table: &mut PartitionTable,
) -> Result<VerificationReport, PartitionError> {
    if 2 * k < n + b {
        return Err(PartitionError::AppendRange { n, k, b });
    }
    let mut report = VerificationReport::new(
        "append-ones",
        format!("T({n}, {k}) against the b = {b} expansion"),
    );
    let (lhs, rhs) = append_sides(n, k, b, table);
    report.record(
        vec![("n", n as i64), ("d", k as i64), ("m", b as i64)],
        &lhs,
        &rhs,
        lhs == rhs,
    );
    Ok(report)
}

/// [`check_append_ones`] over its whole domain: every `(n, k, b)` with
/// `n <= n_max`, `k <= n`, and `b <= 2k - n`.
pub fn sweep_append_ones(n_max: usize, table: &mut PartitionTable) -> VerificationReport {
    let mut report = VerificationReport::new(
        "append-ones",
        format!("n <= {n_max}, k <= n, 0 <= b <= 2k - n"),
    );
    for n in 0..=n_max {
        for k in 0..=n {
            if 2 * k < n {
                continue;
            }
            for b in 0..=2 * k - n {
                let (lhs, rhs) = append_sides(n, k, b, table);
                report.record(
                    vec![("n", n as i64), ("d", k as i64), ("m", b as i64)],
                    &lhs,
                    &rhs,
                    lhs == rhs,
                );
            }
        }
    }
    report.sort_violations();
    report
}

fn alternating_t_sides(k: usize, d: usize, table: &mut PartitionTable) -> (Int, Int) {
    let lhs: Int = table.count(d + k, d).into();
    let rhs = alternating_sum(k, |i| table.count(d + k - i, d - i).into());
    (lhs, rhs)
}

/// Alternating-sum identity for the triangle itself:
/// `T(d + k, d) = sum_{i=1}^{k} (-1)^{i+1} C(k, i) T(d + k - i, d - i) + 1`
/// for `d >= 2k`, `k >= 1`.
pub fn check_alternating_t(
    k: usize,
    d: usize,
    table: &mut PartitionTable,
) -> Result<VerificationReport, PartitionError> {
    if k == 0 || d < 2 * k {
        return Err(PartitionError::AlternatingRange { k, d });
    }
    let mut report =
        VerificationReport::new("alternating-t", format!("T({}, {d}) expansion", d + k));
    let (lhs, rhs) = alternating_t_sides(k, d, table);
    report.record(vec![("n", (d + k) as i64), ("d", d as i64)], &lhs, &rhs, lhs == rhs);
    Ok(report)
}

/// [`check_alternating_t`] for every `1 <= k <= k_max`, `2k <= d <= d_max`.
pub fn sweep_alternating_t(
    k_max: usize,
    d_max: usize,
    table: &mut PartitionTable,
) -> VerificationReport {
    let mut report = VerificationReport::new(
        "alternating-t",
        format!("1 <= k <= {k_max}, 2k <= d <= {d_max}"),
    );
    for k in 1..=k_max {
        for d in 2 * k..=d_max {
            let (lhs, rhs) = alternating_t_sides(k, d, table);
            report.record(
                vec![("n", (d + k) as i64), ("d", d as i64), ("m", k as i64)],
                &lhs,
                &rhs,
                lhs == rhs,
            );
        }
    }
    report.sort_violations();
    report
}

fn alternating_w_sides(
    k: usize,
    d: usize,
    table: &mut EulerianTable,
) -> Result<(Int, Int), PartitionError> {
    let lhs: Int = stabilized_coeff(d, k, table)?.into();
    let mut take = |i: usize| stabilized_coeff(d - i, k, table).map(Int::from);
    let mut terms = Vec::with_capacity(k);
    for i in 1..=k {
        terms.push(take(i)?);
    }
    let rhs = alternating_sum(k, |i| terms[i - 1].clone());
    Ok((lhs, rhs))
}

/// The conjectured twin of [`check_alternating_t`] with every `T` replaced
/// by a stabilized series coefficient:
/// `W_d[t^k] = sum_{i=1}^{k} (-1)^{i+1} C(k, i) W_{d-i}[t^k] + 1`.
pub fn check_alternating_w(
    k: usize,
    d: usize,
    table: &mut EulerianTable,
) -> Result<VerificationReport, PartitionError> {
    if k == 0 || d < 2 * k {
        return Err(PartitionError::AlternatingRange { k, d });
    }
    let mut report =
        VerificationReport::new("alternating-w", format!("W_{d}[t^{k}] expansion"));
    let (lhs, rhs) = alternating_w_sides(k, d, table)?;
    report.record(vec![("d", d as i64), ("m", k as i64)], &lhs, &rhs, lhs == rhs);
    Ok(report)
}

/// [`check_alternating_w`] for every `1 <= k <= k_max`, `2k <= d <= d_max`.
/// The identity is conjectural; a violation here is a finding about the
/// series, not necessarily a code defect.
pub fn sweep_alternating_w(
    k_max: usize,
    d_max: usize,
    table: &mut EulerianTable,
) -> Result<VerificationReport, PartitionError> {
    let mut report = VerificationReport::new(
        "alternating-w",
        format!("1 <= k <= {k_max}, 2k <= d <= {d_max}"),
    );
    for k in 1..=k_max {
        for d in 2 * k..=d_max {
            let (lhs, rhs) = alternating_w_sides(k, d, table)?;
            report.record(
                vec![("d", d as i64), ("m", k as i64)],
                &lhs,
                &rhs,
                lhs == rhs,
            );
        }
    }
    report.sort_violations();
    Ok(report)
}

fn alternating_sum(k: usize, mut term: impl FnMut(usize) -> Int) -> Int {
    let mut acc = Int::one();
    for i in 1..=k {
        let signed: Int = Int::from(binomial(k, i)) * term(i);
        if i % 2 == 1 {
            acc += signed;
        } else {
            acc -= signed;
        }
    }
    acc
}

/// Cell-for-cell match `W_d[t^k] = T(d + k, d)` on the observed region
/// `k <= d`.
pub fn check_series_partition_match(
    d: usize,
    k: usize,
    etable: &mut EulerianTable,
    ptable: &mut PartitionTable,
) -> Result<VerificationReport, PartitionError> {
    if k > d {
        return Err(PartitionError::CorrespondenceRange { k, d });
    }
    let mut report = VerificationReport::new(
        "series-partition-match",
        format!("W_{d}[t^{k}] against T({}, {d})", d + k),
    );
    let w = stabilized_coeff(d, k, etable)?;
    let t = ptable.count(d + k, d);
    report.record(vec![("n", (d + k) as i64), ("d", d as i64), ("m", k as i64)], &t, &w, w == t);
    Ok(report)
}

/// [`check_series_partition_match`] for every `k <= min(d, k_max)` with
/// `1 <= d <= d_max`. The region is where the published table marks the
/// overlap; outside it the match is not claimed.
pub fn sweep_series_partition_match(
    k_max: usize,
    d_max: usize,
    etable: &mut EulerianTable,
    ptable: &mut PartitionTable,
) -> Result<VerificationReport, PartitionError> {
    let mut report = VerificationReport::new(
        "series-partition-match",
        format!("1 <= d <= {d_max}, k <= min(d, {k_max})"),
    );
    for d in 1..=d_max {
        for k in 0..=d.min(k_max) {
            let w = stabilized_coeff(d, k, etable)?;
            let t = ptable.count(d + k, d);
            report.record(
                vec![("n", (d + k) as i64), ("d", d as i64), ("m", k as i64)],
                &t,
                &w,
                w == t,
            );
        }
    }
    report.sort_violations();
    Ok(report)
}

/// Checks that the listing and the dynamic program agree on every cell
/// with `n <= n_max`, `k <= n + 1` (the extra column checks the zero case).
pub fn sweep_enumeration(n_max: usize, table: &mut PartitionTable) -> VerificationReport {
    let mut report =
        VerificationReport::new("enumerate-count", format!("n <= {n_max}, k <= n + 1"));
    for n in 0..=n_max {
        for k in 0..=n + 1 {
            let listed = enumerate_ttp(n, k);
            let counted = table.count(n, k);
            let ok = counted == Nat::from(listed.len() as u64)
                && listed.iter().all(|p| p.total() == n && p.marks() == k);
            report.record(
                vec![("n", n as i64), ("d", k as i64)],
                listed.len(),
                &counted,
                ok,
            );
        }
    }
    report.sort_violations();
    report
}

/// Triangular text table of `T(n, k)` for `0 <= k <= n <= n_max`, columns
/// aligned.
pub fn render_triangle(n_max: usize, table: &mut PartitionTable) -> String {
    let rows: Vec<Vec<String>> = (0..=n_max)
        .map(|n| (0..=n).map(|k| table.count(n, k).to_string()).collect())
        .collect();
    let mut widths: Vec<usize> = Vec::new();
    for row in &rows {
        for (k, cell) in row.iter().enumerate() {
            if widths.len() <= k {
                widths.push(0);
            }
            widths[k] = widths[k].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in &rows {
        let line: Vec<String> =
            row.iter().enumerate().map(|(k, cell)| format!("{cell:>width$}", width = widths[k])).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// CSV rows `n,k,T` in row-by-row order.
pub fn triangle_csv(n_max: usize, table: &mut PartitionTable) -> String {
    let mut out = String::from("n,k,T\n");
    for n in 0..=n_max {
        for k in 0..=n {
            out.push_str(&format!("{n},{k},{}\n", table.count(n, k)));
        }
    }
    out
}

/// OEIS b-file style listing, `index value` per line, indexing the triangle
/// row by row from 0.
pub fn triangle_b_file(n_max: usize, table: &mut PartitionTable) -> String {
    let mut out = String::new();
    let mut index = 0usize;
    for n in 0..=n_max {
        for k in 0..=n {
            out.push_str(&format!("{index} {}\n", table.count(n, k)));
            index += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn enumeration_matches_published_listing() {
        let t30: Vec<String> = enumerate_ttp(3, 0).iter().map(|p| p.to_string()).collect();
        assert_eq!(t30, ["3", "21", "111"]);
        let t31: Vec<String> = enumerate_ttp(3, 1).iter().map(|p| p.to_string()).collect();
        assert_eq!(t31, ["3'", "2'1", "21'", "1'11", "11'1", "111'"]);
        let t32: Vec<String> = enumerate_ttp(3, 2).iter().map(|p| p.to_string()).collect();
        assert_eq!(t32, ["2'1'", "1'1'1", "1'11'", "11'1'"]);
        let t33: Vec<String> = enumerate_ttp(3, 3).iter().map(|p| p.to_string()).collect();
        assert_eq!(t33, ["1'1'1'"]);
    }

    #[test]
    fn enumeration_edge_cases() {
        let empty: Vec<String> = enumerate_ttp(0, 0).iter().map(|p| p.to_string()).collect();
        assert_eq!(empty, ["()"]);
        assert!(enumerate_ttp(0, 1).is_empty());
        assert!(enumerate_ttp(2, 3).is_empty());
    }

    #[test]
    fn counting_matches_enumeration() {
        let mut table = PartitionTable::new();
        for n in 0..=10 {
            for k in 0..=n + 1 {
                let listed = enumerate_ttp(n, k);
                assert_eq!(
                    table.count(n, k),
                    nat(listed.len() as u64),
                    "T({n}, {k})"
                );
                for obj in &listed {
                    assert_eq!(obj.total(), n);
                    assert_eq!(obj.marks(), k);
                }
            }
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_t(4, 2), nat(11));
        assert_eq!(count_t(9, 0), nat(30));
        assert_eq!(count_t(8, 4), nat(155));
        assert_eq!(count_t(0, 0), nat(1));
        assert_eq!(count_t(3, 5), nat(0));
    }

    #[test]
    fn reference_triangle_reproduced() {
        let mut table = PartitionTable::new();
        let report = check_reference_triangle(&mut table);
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(report.cases, 55);
    }

    #[test]
    fn zero_column_is_classical_partition_count() {
        let mut table = PartitionTable::new();
        for n in 0..=30 {
            assert_eq!(table.count(n, 0), partition_count(n), "p({n})");
        }
        assert_eq!(partition_count(30), nat(5604));
    }

    #[test]
    fn diagonal_and_overflow() {
        let mut table = PartitionTable::new();
        for n in 0..=12 {
            assert_eq!(table.count(n, n), nat(1), "T({n}, {n})");
            assert_eq!(table.count(n, n + 1), nat(0));
        }
    }

    #[test]
    fn append_ones_examples() {
        let mut table = PartitionTable::new();
        let r = check_append_ones(4, 3, 2, &mut table).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        let r = check_append_ones(3, 3, 3, &mut table).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        let r = check_append_ones(4, 2, 0, &mut table).unwrap();
        assert!(r.passed());
        assert!(check_append_ones(4, 2, 1, &mut table).is_err());
    }

    #[test]
    fn append_ones_full_domain_to_twelve() {
        let mut table = PartitionTable::new();
        for n in 0..=12usize {
            for k in 0..=n {
                if 2 * k < n {
                    continue;
                }
                for b in 0..=2 * k - n {
                    let r = check_append_ones(n, k, b, &mut table).unwrap();
                    assert!(r.passed(), "n={n} k={k} b={b}: {}", r.render_text());
                }
            }
        }
    }

    #[test]
    fn alternating_t_examples() {
        let mut table = PartitionTable::new();
        // T(5, 4) = T(4, 3) + 1 and T(10, 8) = T(9, 7) + 1 with k = 1.
        let r = check_alternating_t(1, 4, &mut table).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        let r = check_alternating_t(2, 4, &mut table).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        let r = check_alternating_t(3, 7, &mut table).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        assert!(check_alternating_t(0, 4, &mut table).is_err());
        assert!(check_alternating_t(3, 5, &mut table).is_err());
    }

    #[test]
    fn alternating_t_sweep() {
        let mut table = PartitionTable::new();
        for k in 1..=4 {
            for d in 2 * k..=14 {
                let r = check_alternating_t(k, d, &mut table).unwrap();
                assert!(r.passed(), "k={k} d={d}: {}", r.render_text());
            }
        }
    }

    #[test]
    fn alternating_w_examples() {
        let mut etable = EulerianTable::new();
        // W_2[t^1] = W_1[t^1] + 1: 4 = 3 + 1.
        let r = check_alternating_w(1, 2, &mut etable).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        let r = check_alternating_w(2, 4, &mut etable).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        assert!(check_alternating_w(2, 3, &mut etable).is_err());
    }

    #[test]
    fn series_partition_match_examples() {
        let mut etable = EulerianTable::new();
        let mut ptable = PartitionTable::new();
        // W_5[t^2] = 29 = T(7, 5) and W_5[t^4] = 247 = T(9, 5).
        let r = check_series_partition_match(5, 2, &mut etable, &mut ptable).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        let r = check_series_partition_match(5, 4, &mut etable, &mut ptable).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        assert!(check_series_partition_match(2, 3, &mut etable, &mut ptable).is_err());
    }

    #[test]
    fn triangle_renders_align() {
        let mut table = PartitionTable::new();
        let text = render_triangle(3, &mut table);
        assert_eq!(text, "1\n1  1\n2  3  1\n3  6  4  1\n");
        let csv = triangle_csv(2, &mut table);
        assert_eq!(csv, "n,k,T\n0,0,1\n1,0,1\n1,1,1\n2,0,2\n2,1,3\n2,2,1\n");
        let b = triangle_b_file(2, &mut table);
        assert_eq!(b, "0 1\n1 1\n2 1\n3 2\n4 3\n5 1\n");
    }
}
