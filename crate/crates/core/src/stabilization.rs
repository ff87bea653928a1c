//! The stabilization phenomenon: columns of `E_n` settle down as `n` grows.
//!
//! Measured from the top of a column, the coefficient
//! `[x^d q^{maxwt(n,d) - k}] E_n` stops depending on `n` once
//! `n >= d + k + 1`. Collecting those limits for a fixed `d` gives the
//! series `W_d(t)`, whose `k`-th coefficient is read off at the first
//! stabilized index, `[x^d q^{(d-1)k}] E_{d+k+1}`.
//!
//! The sweeps here drive three facts over finite ranges: the constancy
//! itself ([`verify_stabilization`]), the exact threshold where a column
//! entry equals its shifted predecessor `[x^d q^{m-d}] E_{n-1}`
//! ([`verify_shift`]), and the disparity bound forcing both, namely that
//! words not starting with their minimum stay at least `n - d - 1` below
//! the weight ceiling while words ending in 1 stay within
//! `(d - 1)(n - d - 1)` ([`verify_disparity`]).

use itertools::Itertools;
use num_traits::Zero;
use thiserror::Error;

use crate::eulerian::EulerianTable;
use crate::perm::{max_weight, Permutation, WeightMemo};
use crate::report::VerificationReport;
use crate::{Nat, Poly1};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StabilizationError {
    #[error("d = {d} out of range for length {n}")]
    DegreeRange { n: usize, d: usize },
    #[error("stabilized coefficients need d >= 1, got d = 0")]
    DegreeZero,
}

/// The limit coefficient `W_d[t^k]`, read at the first stabilized index:
/// `[x^d q^{(d-1)k}] E_{d+k+1}`.
pub fn stabilized_coeff(d: usize, k: usize, table: &mut EulerianTable) -> Result<Nat, StabilizationError> {
    if d == 0 {
        return Err(StabilizationError::DegreeZero);
    }
    let n = d + k + 1;
    table.ensure(n);
    Ok(table.get(n).expect("ensured").coeff_xq(d, (d - 1) * k))
}

/// First `terms + 1` coefficients of `W_d(t)`, constant term included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPrefix {
    pub d: usize,
    pub coeffs: Vec<Nat>,
}

impl SeriesPrefix {
    pub fn poly(&self) -> Poly1 {
        Poly1::from_coeffs(self.coeffs.clone())
    }

    pub fn render(&self) -> String {
        self.poly().render_ascending("t")
    }

    pub fn render_csv(&self) -> String {
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn wd_prefix(d: usize, terms: usize, table: &mut EulerianTable) -> Result<SeriesPrefix, StabilizationError> {
    let coeffs = (0..=terms)
        .map(|k| stabilized_coeff(d, k, table))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SeriesPrefix { d, coeffs })
}

/// Whether `[x^d q^m] E_n` already sits in the stabilized range: the column
/// entry equals all its successors under the `n -> n + 1` shift. The `d = 0`
/// column is the constant 1 (stabilized only at `m = 0`), the top column
/// `d = n - 1` is still growing, and in between the threshold is
/// `m >= (d - 1)(n - d - 1) + 1`.
pub fn is_stabilized(n: usize, d: usize, m: usize) -> Result<bool, StabilizationError> {
    if n == 0 || d > n - 1 {
        return Err(StabilizationError::DegreeRange { n, d });
    }
    if d == 0 {
        return Ok(m == 0);
    }
    if d == n - 1 {
        return Ok(false);
    }
    Ok(m >= (d - 1) * (n - d - 1) + 1)
}

/// Sweeps the equality `[x^d q^m] E_n = [x^d q^{m-d}] E_{n-1}` and its
/// failure below the threshold, for `2 <= n <= n_max`, `1 <= d <= n - 2`,
/// and every `m` up to the weight ceiling (plus a margin of `d` above it,
/// where both sides vanish).
pub fn verify_shift(n_max: usize, table: &mut EulerianTable) -> VerificationReport {
    let mut report = VerificationReport::new(
        "shift-threshold",
        format!("2 <= n <= {n_max}, 1 <= d <= n-2, 0 <= m <= maxwt+d"),
    );
    if n_max >= 2 {
        table.ensure(n_max);
    }
    for n in 2..=n_max {
        let current = table.get(n).expect("ensured").clone();
        let prev = table.get(n - 1).expect("ensured").clone();
        for d in 1..=n - 2 {
            let ceiling = max_weight(n, d).expect("d <= n-1") as usize;
            let threshold = (d - 1) * (n - d - 1);
            for m in 0..=ceiling + d {
                let lhs = current.coeff_xq(d, m);
                let rhs = if m >= d { prev.coeff_xq(d, m - d) } else { Nat::zero() };
                let should_match = m > threshold;
                let coords = vec![("n", n as i64), ("d", d as i64), ("m", m as i64)];
                if should_match {
                    report.record(coords, &lhs, &rhs, lhs == rhs);
                } else {
                    report.record(
                        coords,
                        format!("anything but {lhs}"),
                        &rhs,
                        lhs != rhs,
                    );
                }
            }
        }
    }
    report.sort_violations();
    report
}

/// Sweeps the constancy `[x^d q^{maxwt(n,d)-k}] E_n = W_d[t^k]` over every
/// `n` from the stabilization onset `d + k + 1` up to `n_max`.
pub fn verify_stabilization(n_max: usize, table: &mut EulerianTable) -> VerificationReport {
    let mut report = VerificationReport::new(
        "stabilization",
        format!("d >= 1, k >= 0, d + k + 1 <= n <= {n_max}"),
    );
    table.ensure(n_max);
    for d in 1..n_max {
        for k in 0..=n_max.saturating_sub(d + 1) {
            let onset = d + k + 1;
            if onset > n_max {
                continue;
            }
            let witness = table.get(onset).expect("ensured").coeff_xq(d, (d - 1) * k);
            for n in onset..=n_max {
                let ceiling = max_weight(n, d).expect("d <= n-1") as usize;
                let value = if ceiling >= k {
                    table.get(n).expect("ensured").coeff_xq(d, ceiling - k)
                } else {
                    Nat::zero()
                };
                report.record(
                    vec![("n", n as i64), ("d", d as i64), ("m", ceiling as i64 - k as i64)],
                    &witness,
                    &value,
                    value == witness,
                );
            }
        }
    }
    report.sort_violations();
    report
}

/// Exhaustively checks, for every word of length `n <= n_max`, that
/// disparity is at least `n - d - 1` unless the word starts with 1, and
/// that among words ending in 1 with `d` descents the weight tops out at
/// exactly `(d - 1)(n - d - 1)`.
pub fn verify_disparity(n_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        "disparity",
        format!("all words of length 1 <= n <= {n_max}"),
    );
    let mut memo = WeightMemo::new();
    for n in 1..=n_max {
        let mut anchored_best: Vec<Option<u64>> = vec![None; n];
        for word in (1..=n as u32).permutations(n) {
            let starts_with_one = word[0] == 1;
            let ends_in_one = *word.last().unwrap() == 1;
            let p = Permutation::new(word).expect("distinct letters");
            let d = p.descents();
            let w = p.weight_with(&mut memo);
            let ceiling = max_weight(n, d).expect("d <= n-1");
            if !starts_with_one {
                let gap = ceiling - w;
                report.record(
                    vec![("n", n as i64), ("d", d as i64), ("m", w as i64)],
                    format!("disparity >= {}", n - d - 1),
                    gap,
                    gap >= (n - d - 1) as u64,
                );
            }
            if ends_in_one && d >= 1 {
                let slot = &mut anchored_best[d];
                *slot = Some(slot.map_or(w, |old| old.max(w)));
            }
        }
        for d in 1..n {
            let bound = ((d - 1) * (n - d - 1)) as u64;
            let best = anchored_best[d];
            report.record(
                vec![("n", n as i64), ("d", d as i64)],
                format!("max weight {bound} among words ending in 1"),
                best.map_or("none".to_string(), |b| b.to_string()),
                best == Some(bound),
            );
        }
    }
    report.sort_violations();
    report
}

/// Consistency of [`is_stabilized`] with the shift equality: wherever it
/// answers true (and `1 <= d <= n - 2`), the shifted predecessor agrees.
pub fn verify_stabilized_flag(n_max: usize, table: &mut EulerianTable) -> VerificationReport {
    let mut report = VerificationReport::new(
        "stabilized-flag",
        format!("2 <= n <= {n_max}, 1 <= d <= n-2"),
    );
    table.ensure(n_max);
    for n in 2..=n_max {
        for d in 1..=n - 2 {
            let ceiling = max_weight(n, d).expect("d <= n-1") as usize;
            for m in 0..=ceiling {
                if !is_stabilized(n, d, m).expect("in range") {
                    continue;
                }
                let lhs = table.get(n).expect("ensured").coeff_xq(d, m);
                let rhs = if m >= d {
                    table.get(n - 1).expect("ensured").coeff_xq(d, m - d)
                } else {
                    Nat::zero()
                };
                report.record(
                    vec![("n", n as i64), ("d", d as i64), ("m", m as i64)],
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eulerian::en_recur;

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn stabilized_coeff_examples() {
        let mut table = EulerianTable::new();
        assert_eq!(stabilized_coeff(2, 1, &mut table).unwrap(), nat(4));
        assert_eq!(stabilized_coeff(5, 3, &mut table).unwrap(), nat(92));
        for d in 1..=6 {
            assert_eq!(stabilized_coeff(d, 0, &mut table).unwrap(), nat(1), "d={d}");
        }
        assert!(stabilized_coeff(0, 3, &mut table).is_err());
    }

    #[test]
    fn wd_prefix_examples() {
        let mut table = EulerianTable::new();
        let w1 = wd_prefix(1, 5, &mut table).unwrap();
        assert_eq!(w1.render_csv(), "1,3,7,15,31,63");
        assert_eq!(w1.render(), "1+3t+7t^2+15t^3+31t^4+63t^5");
        let w2 = wd_prefix(2, 5, &mut table).unwrap();
        assert_eq!(w2.render_csv(), "1,4,11,31,65,157");
    }

    #[test]
    fn is_stabilized_examples() {
        assert_eq!(is_stabilized(5, 2, 4), Ok(true));
        assert_eq!(is_stabilized(5, 2, 3), Ok(true));
        assert_eq!(is_stabilized(5, 2, 2), Ok(false));
        assert_eq!(is_stabilized(5, 0, 0), Ok(true));
        assert_eq!(is_stabilized(5, 0, 1), Ok(false));
        assert_eq!(is_stabilized(5, 4, 12), Ok(false));
        assert_eq!(is_stabilized(1, 0, 0), Ok(true));
        assert!(is_stabilized(5, 5, 0).is_err());
        assert!(is_stabilized(0, 0, 0).is_err());
    }

    #[test]
    fn stabilized_value_example() {
        let mut table = EulerianTable::new();
        let e5 = en_recur(5, &mut table);
        let e4 = table.get(4).unwrap();
        assert_eq!(e5.coeff_xq(2, 4), nat(1));
        assert_eq!(e4.coeff_xq(2, 2), nat(1));
    }

    #[test]
    fn shift_sweep_passes_to_eight() {
        let mut table = EulerianTable::new();
        let report = verify_shift(8, &mut table);
        assert!(report.passed(), "{}", report.render_text());
        assert!(report.cases > 0);
    }

    #[test]
    fn stabilization_sweep_passes_to_eight() {
        let mut table = EulerianTable::new();
        let report = verify_stabilization(8, &mut table);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn stabilized_flag_consistent_to_eight() {
        let mut table = EulerianTable::new();
        let report = verify_stabilized_flag(8, &mut table);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn disparity_sweep_passes_to_seven() {
        let report = verify_disparity(7);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn shift_threshold_is_sharp_at_five_two() {
        // At n = 5, d = 2 the threshold is m >= 3: entry (2, 3) of E_5 must
        // differ from entry (2, 1) of E_4, while (2, 4) matches (2, 2).
        let mut table = EulerianTable::new();
        table.ensure(5);
        let e5 = table.get(5).unwrap();
        let e4 = table.get(4).unwrap();
        assert_ne!(e5.coeff_xq(2, 2), e4.coeff_xq(2, 0));
        assert_eq!(e5.coeff_xq(2, 3), e4.coeff_xq(2, 1));
        assert_eq!(e5.coeff_xq(2, 4), e4.coeff_xq(2, 2));
    }
}
