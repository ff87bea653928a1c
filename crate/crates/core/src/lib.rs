//! Exact computation engines for a weight statistic on permutations and the
//! two-variable Eulerian polynomials it generates.
//!
//! The crate is organised around a pipeline:
//!
//! * [`perm`] defines permutations as words of distinct positive integers and
//!   computes their descent count, splitting decomposition, and weight.
//! * [`poly`] provides sparse exact polynomial arithmetic in one and two
//!   variables, generic over the coefficient scalar.
//! * [`eulerian`] builds the polynomials `E_n(x, q)` that enumerate
//!   permutations by descents (`x`) and weight (`q`), by direct enumeration
//!   and independently by a convolution recurrence.
//! * [`stabilization`] extracts the limiting coefficient series `W_d(t)` that
//!   the high end of each column of `E_n` settles into, and checks the
//!   equalities and inequalities governing when that happens.
//! * [`partitions`] counts partitions whose parts come in two types and
//!   checks the identities connecting them to the stabilized series.
//! * [`cache`], [`report`] hold the persistence format and the verification
//!   report type shared by the checking routines.
//!
//! Coefficient arithmetic is exact everywhere. Computations default to
//! arbitrary precision via the [`Nat`] and [`Int`] aliases; the polynomial
//! types also instantiate at machine integers for small scales.

pub mod cache;
pub mod eulerian;
pub mod golden;
pub mod numeric;
pub mod partitions;
pub mod perm;
pub mod poly;
pub mod report;
pub mod stabilization;

pub use num_bigint::{BigInt, BigUint};

/// Default unsigned scalar: arbitrary precision, coefficients never overflow.
pub type Nat = BigUint;

/// Signed companion scalar for alternating-sum identities.
pub type Int = BigInt;

/// Polynomial in one variable over [`Nat`].
pub type Poly1 = poly::UnivariatePoly<Nat>;

/// Polynomial in the variables `x` and `q` over [`Nat`].
pub type Poly2 = poly::BivariatePoly<Nat>;

pub use poly::Coefficient;
