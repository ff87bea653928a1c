//! Small exact-integer helpers shared by the counting engines.

use num_traits::{One, Zero};

use crate::Nat;

/// Binomial coefficient `C(n, k)` computed by the Pascal row recurrence.
pub fn binomial(n: usize, k: usize) -> Nat {
    if k > n {
        return Nat::zero();
    }
    let mut row: Vec<Nat> = vec![Nat::one()];
    for _ in 1..=n {
        row.push(Nat::one());
        for j in (1..row.len() - 1).rev() {
            let lower = row[j - 1].clone();
            row[j] += lower;
        }
    }
    row[k].clone()
}

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> Nat {
    let mut acc = Nat::one();
    for v in 2..=n {
        acc *= Nat::from(v);
    }
    acc
}
