//! Sparse exact polynomial arithmetic in one and two variables.
//!
//! [`BivariatePoly`] stores terms `c * x^d * q^m` in a sorted map keyed by
//! `(d, m)`, so iteration order, equality, and rendering are all canonical.
//! [`UnivariatePoly`] is a dense coefficient vector with trailing zeros
//! trimmed. Both are generic over the coefficient scalar through
//! [`Coefficient`]; the crate-level aliases instantiate them at arbitrary
//! precision integers, and the tests also run them at `u64`.
//!
//! The text form follows the convention used throughout this crate for
//! two-variable polynomials: groups in ascending powers of `x`, each group a
//! parenthesised polynomial in `q` with exponents descending, coefficient 1
//! left implicit. For example `1+x(q+3)+x^2`.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_traits::{FromPrimitive, One, Zero};
use thiserror::Error;

/// Scalars the polynomial engines accept: exact, ordered, displayable
/// integers in the `num-traits` sense. Implemented by every unsigned or
/// signed machine integer and by the arbitrary-precision types behind the
/// crate-root aliases.
pub trait Coefficient:
    Clone
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + AddAssign
    + Mul<Output = Self>
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Coefficient for T where
    T: Clone
        + Eq
        + Ord
        + Hash
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + AddAssign
        + Mul<Output = T>
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyParseError {
    #[error("empty polynomial text")]
    Empty,
    #[error("cannot parse term `{0}`")]
    BadTerm(String),
    #[error("unbalanced parentheses in `{0}`")]
    Unbalanced(String),
    #[error("cannot parse coefficient `{0}`")]
    BadCoefficient(String),
    #[error("cannot parse exponent `{0}`")]
    BadExponent(String),
}

/// Polynomial in `x` and `q` with exact coefficients, stored sparsely.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly<C: Coefficient> {
    terms: BTreeMap<(usize, usize), C>,
}

impl<C: Coefficient> BivariatePoly<C> {
    pub fn zero() -> Self {
        BivariatePoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, 0, c)
    }

    /// The single term `c * x^d * q^m` (the zero polynomial if `c` is zero).
    pub fn monomial(d: usize, m: usize, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(d, m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending `(d, m)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &C)> {
        self.terms.iter().map(|(&(d, m), c)| (d, m, c))
    }

    /// Adds `c * x^d * q^m` in place, dropping the key if it cancels to zero.
    pub fn add_term(&mut self, d: usize, m: usize, c: C) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((d, m)).or_insert_with(C::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(d, m));
        }
    }

    /// Coefficient of `x^d q^m`, zero when the term is absent.
    pub fn coeff_xq(&self, d: usize, m: usize) -> C {
        self.terms.get(&(d, m)).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficient of `x^d` as a polynomial in `q`.
    pub fn coeff_x(&self, d: usize) -> UnivariatePoly<C> {
        let mut coeffs: Vec<C> = Vec::new();
        for (&(dd, m), c) in self.terms.range((d, 0)..=(d, usize::MAX)) {
            debug_assert_eq!(dd, d);
            if coeffs.len() <= m {
                coeffs.resize_with(m + 1, C::zero);
            }
            coeffs[m] = c.clone();
        }
        UnivariatePoly::from_coeffs(coeffs)
    }

    /// Substitutes `q = 1`, collapsing to a polynomial in `x`.
    pub fn eval_q1(&self) -> UnivariatePoly<C> {
        let mut coeffs: Vec<C> = Vec::new();
        for (&(d, _), c) in &self.terms {
            if coeffs.len() <= d {
                coeffs.resize_with(d + 1, C::zero);
            }
            let slot = &mut coeffs[d];
            *slot += c.clone();
        }
        UnivariatePoly::from_coeffs(coeffs)
    }

    /// Substitutes `x -> q x`, shifting each term `(d, m)` to `(d, m + d)`.
    pub fn substitute_x_qx(&self) -> Self {
        let mut out = Self::zero();
        for (&(d, m), c) in &self.terms {
            out.add_term(d, m + d, c.clone());
        }
        out
    }

    /// Multiplies by `x^e`.
    pub fn mul_x(&self, e: usize) -> Self {
        let mut out = Self::zero();
        for (&(d, m), c) in &self.terms {
            out.add_term(d + e, m, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero();
        if k.is_zero() {
            return out;
        }
        for (&(d, m), c) in &self.terms {
            out.add_term(d, m, c.clone() * k.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(d1, m1), c1) in &self.terms {
            for (&(d2, m2), c2) in &other.terms {
                out.add_term(d1 + d2, m1 + m2, c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Sum of all coefficients, i.e. the value at `x = q = 1`.
    pub fn coeff_sum(&self) -> C {
        let mut acc = C::zero();
        for c in self.terms.values() {
            acc += c.clone();
        }
        acc
    }

    pub fn max_x_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(d, _)| d).max()
    }

    pub fn max_q_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(_, m)| m).max()
    }

    /// Canonical text: `x` groups ascending, `q` exponents descending.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut groups: BTreeMap<usize, Vec<(usize, &C)>> = BTreeMap::new();
        for (&(d, m), c) in &self.terms {
            groups.entry(d).or_default().push((m, c));
        }
        let mut parts: Vec<String> = Vec::new();
        for (d, mut terms) in groups {
            terms.sort_by(|a, b| b.0.cmp(&a.0));
            let body = render_qpoly(&terms);
            if d == 0 {
                parts.push(body);
            } else {
                let xs = if d == 1 { "x".to_string() } else { format!("x^{d}") };
                if body == "1" {
                    parts.push(xs);
                } else {
                    parts.push(format!("{xs}({body})"));
                }
            }
        }
        parts.join("+")
    }

    /// Line-based exchange form: one `d m coefficient` triple per line,
    /// sorted by `d` then `m`.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for (&(d, m), c) in &self.terms {
            out.push_str(&format!("{d} {m} {c}\n"));
        }
        out
    }

    /// CSV form with header `d,m,coefficient`, sorted by `d` then `m`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("d,m,coefficient\n");
        for (&(d, m), c) in &self.terms {
            out.push_str(&format!("{d},{m},{c}\n"));
        }
        out
    }
}

impl<C: Coefficient + FromStr> BivariatePoly<C> {
    /// Parses the canonical text form. Whitespace is ignored, groups may
    /// repeat an exponent (the coefficients are summed), and a bare `q`
    /// polynomial is read as the `x^0` group.
    pub fn parse(s: &str) -> Result<Self, PolyParseError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PolyParseError::Empty);
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut poly = Self::zero();
        for token in split_top_level(&compact)? {
            if token.is_empty() {
                return Err(PolyParseError::BadTerm(s.to_string()));
            }
            if let Some(rest) = token.strip_prefix('x') {
                let (d, group) = parse_x_part(token, rest)?;
                match group {
                    Some(body) => {
                        for (m, c) in parse_qpoly_terms::<C>(body)? {
                            poly.add_term(d, m, c);
                        }
                    }
                    None => poly.add_term(d, 0, C::one()),
                }
            } else {
                let (m, c) = parse_qmono::<C>(token)?;
                poly.add_term(0, m, c);
            }
        }
        Ok(poly)
    }
}

impl<C: Coefficient> fmt::Display for BivariatePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<C: Coefficient> fmt::Debug for BivariatePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariatePoly({})", self.render())
    }
}

impl<C: Coefficient> AddAssign<&BivariatePoly<C>> for BivariatePoly<C> {
    fn add_assign(&mut self, rhs: &BivariatePoly<C>) {
        for (&(d, m), c) in &rhs.terms {
            self.add_term(d, m, c.clone());
        }
    }
}

impl<C: Coefficient> Add for &BivariatePoly<C> {
    type Output = BivariatePoly<C>;

    fn add(self, rhs: Self) -> BivariatePoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

fn render_qpoly<C: Coefficient>(terms: &[(usize, &C)]) -> String {
    let one = C::one();
    let mut parts: Vec<String> = Vec::new();
    for &(m, c) in terms {
        let coeff = if *c == one && m > 0 { String::new() } else { c.to_string() };
        let var = match m {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{m}"),
        };
        parts.push(format!("{coeff}{var}"));
    }
    parts.join("+")
}

/// Splits on `+` outside parentheses.
fn split_top_level(s: &str) -> Result<Vec<&str>, PolyParseError> {
    let mut tokens = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| PolyParseError::Unbalanced(s.to_string()))?;
            }
            '+' if depth == 0 => {
                tokens.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(PolyParseError::Unbalanced(s.to_string()));
    }
    tokens.push(&s[start..]);
    Ok(tokens)
}

/// Parses the part after a leading `x`: optional `^d`, optional `(group)`.
fn parse_x_part<'a>(token: &'a str, rest: &'a str) -> Result<(usize, Option<&'a str>), PolyParseError> {
    let (d, rest) = if let Some(after) = rest.strip_prefix('^') {
        let digits_end = after.find(|c: char| !c.is_ascii_digit()).unwrap_or(after.len());
        if digits_end == 0 {
            return Err(PolyParseError::BadExponent(token.to_string()));
        }
        let d: usize = after[..digits_end]
            .parse()
            .map_err(|_| PolyParseError::BadExponent(token.to_string()))?;
        (d, &after[digits_end..])
    } else {
        (1, rest)
    };
    if rest.is_empty() {
        return Ok((d, None));
    }
    let body = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| PolyParseError::BadTerm(token.to_string()))?;
    Ok((d, Some(body)))
}

/// Parses a polynomial in `q` into its literal term list, duplicates kept.
pub(crate) fn parse_qpoly_terms<C: Coefficient + FromStr>(
    s: &str,
) -> Result<Vec<(usize, C)>, PolyParseError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(PolyParseError::Empty);
    }
    compact.split('+').map(parse_qmono::<C>).collect()
}

/// Parses a single `q` monomial: `15`, `q`, `3q`, `q^4`, or `3q^2`.
fn parse_qmono<C: Coefficient + FromStr>(s: &str) -> Result<(usize, C), PolyParseError> {
    if s.is_empty() {
        return Err(PolyParseError::BadTerm(s.to_string()));
    }
    let (digits, rest) = match s.find(|c: char| !c.is_ascii_digit()) {
        Some(i) => (&s[..i], &s[i..]),
        None => (s, ""),
    };
    let coeff = if digits.is_empty() {
        C::one()
    } else {
        digits
            .parse::<C>()
            .map_err(|_| PolyParseError::BadCoefficient(digits.to_string()))?
    };
    if rest.is_empty() {
        if digits.is_empty() {
            return Err(PolyParseError::BadTerm(s.to_string()));
        }
        return Ok((0, coeff));
    }
    let rest = rest
        .strip_prefix('q')
        .ok_or_else(|| PolyParseError::BadTerm(s.to_string()))?;
    if rest.is_empty() {
        return Ok((1, coeff));
    }
    let exp = rest
        .strip_prefix('^')
        .ok_or_else(|| PolyParseError::BadTerm(s.to_string()))?;
    let m: usize = exp
        .parse()
        .map_err(|_| PolyParseError::BadExponent(s.to_string()))?;
    Ok((m, coeff))
}

/// Dense polynomial in a single variable, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UnivariatePoly<C: Coefficient> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> UnivariatePoly<C> {
    pub fn zero() -> Self {
        UnivariatePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![C::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, k: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// Multiplies by the variable to the power `e`.
    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        UnivariatePoly { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a.clone() * b.clone();
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn coeff_sum(&self) -> C {
        let mut acc = C::zero();
        for c in &self.coeffs {
            acc += c.clone();
        }
        acc
    }

    /// `1+3t+7t^2` style: ascending exponents, coefficient 1 left implicit.
    pub fn render_ascending(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<(usize, &C)> =
            self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        render_terms(&terms, var)
    }

    /// `q^2+3q+7` style: descending exponents, coefficient 1 left implicit.
    pub fn render_descending(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<(usize, &C)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        render_terms(&terms, var)
    }
}

impl<C: Coefficient> AddAssign<&UnivariatePoly<C>> for UnivariatePoly<C> {
    fn add_assign(&mut self, rhs: &UnivariatePoly<C>) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize_with(rhs.coeffs.len(), C::zero);
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[i] += c.clone();
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl<C: Coefficient> fmt::Debug for UnivariatePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnivariatePoly({})", self.render_ascending("t"))
    }
}

fn render_terms<C: Coefficient>(terms: &[(usize, &C)], var: &str) -> String {
    let one = C::one();
    let mut parts = Vec::new();
    for &(e, c) in terms {
        let coeff = if *c == one && e > 0 { String::new() } else { c.to_string() };
        let v = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        parts.push(format!("{coeff}{v}"));
    }
    parts.join("+")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Nat, Poly2};

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn monomial_and_coeff_lookup() {
        let p = Poly2::monomial(1, 2, nat(5));
        assert_eq!(p.coeff_xq(1, 2), nat(5));
        assert_eq!(p.coeff_xq(0, 0), nat(0));
        assert!(Poly2::monomial(3, 1, nat(0)).is_zero());
    }

    #[test]
    fn addition_merges_and_cancels() {
        let mut p = Poly2::monomial(1, 1, nat(2));
        p += &Poly2::monomial(1, 1, nat(3));
        p += &Poly2::monomial(0, 0, nat(1));
        assert_eq!(p.render(), "1+x(5q)");
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn multiplication_small_product() {
        // (1 + x)(1 + qx) = 1 + x(q + 1) + x^2 q
        let a = Poly2::parse("1+x").unwrap();
        let b = &Poly2::one() + &Poly2::monomial(1, 1, nat(1));
        let prod = a.mul(&b);
        assert_eq!(prod.render(), "1+x(q+1)+x^2(q)");
        assert_eq!(prod.coeff_sum(), nat(4));
    }

    #[test]
    fn substitution_shifts_q_by_x_degree() {
        let p = Poly2::parse("1+x(q+3)+x^2").unwrap();
        assert_eq!(p.substitute_x_qx().render(), "1+x(q^2+3q)+x^2(q^2)");
    }

    #[test]
    fn substitution_is_multiplicative() {
        let a = Poly2::parse("1+x(q+3)+x^2").unwrap();
        let b = Poly2::parse("x(q^2+2)+x^3").unwrap();
        assert_eq!(
            a.mul(&b).substitute_x_qx(),
            a.substitute_x_qx().mul(&b.substitute_x_qx())
        );
    }

    #[test]
    fn coeff_x_extracts_q_polynomial() {
        let p = Poly2::parse("1+x(q+3)+x^2").unwrap();
        let g = p.coeff_x(1);
        assert_eq!(g.coeff(0), nat(3));
        assert_eq!(g.coeff(1), nat(1));
        assert_eq!(g.render_descending("q"), "q+3");
        assert!(p.coeff_x(5).is_zero());
    }

    #[test]
    fn eval_q1_collapses_columns() {
        let p = Poly2::parse("1+x(q+3)+x^2").unwrap();
        assert_eq!(p.eval_q1().render_ascending("x"), "1+4x+x^2");
    }

    #[test]
    fn render_examples() {
        assert_eq!(Poly2::zero().render(), "0");
        assert_eq!(Poly2::one().render(), "1");
        let p = Poly2::parse("1+x(q^2+3q+7)+x^2(q^2+4q+6)+x^3").unwrap();
        assert_eq!(p.render(), "1+x(q^2+3q+7)+x^2(q^2+4q+6)+x^3");
    }

    #[test]
    fn parse_accepts_whitespace_and_bare_groups() {
        let a = Poly2::parse("1 + x(q + 3) + x^2").unwrap();
        assert_eq!(a.render(), "1+x(q+3)+x^2");
        let b = Poly2::parse("q^2+3q+7").unwrap();
        assert_eq!(b.coeff_xq(0, 2), nat(1));
        assert_eq!(b.coeff_xq(0, 0), nat(7));
    }

    #[test]
    fn parse_merges_duplicate_exponents() {
        let p = Poly2::parse("x(3q^6+7q^6)").unwrap();
        assert_eq!(p.coeff_xq(1, 6), nat(10));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Poly2::parse("").is_err());
        assert!(Poly2::parse("1+x(q").is_err());
        assert!(Poly2::parse("x^").is_err());
        assert!(Poly2::parse("qq").is_err());
        assert!(Poly2::parse("x(3y)").is_err());
    }

    #[test]
    fn lines_and_csv_forms() {
        let p = Poly2::parse("1+x(q+3)+x^2").unwrap();
        assert_eq!(p.to_lines(), "0 0 1\n1 0 3\n1 1 1\n2 0 1\n");
        assert_eq!(p.to_csv(), "d,m,coefficient\n0,0,1\n1,0,3\n1,1,1\n2,0,1\n");
    }

    #[test]
    fn univariate_mul_and_shift() {
        let a = UnivariatePoly::from_coeffs(vec![nat(1), nat(1)]);
        let sq = a.mul(&a);
        assert_eq!(sq.coeffs(), &[nat(1), nat(2), nat(1)]);
        assert_eq!(sq.shift(2).coeff(2), nat(1));
        assert_eq!(sq.shift(2).coeff(0), nat(0));
        assert_eq!(a.mul(&UnivariatePoly::zero()), UnivariatePoly::zero());
    }

    #[test]
    fn univariate_trims_trailing_zeros() {
        let p = UnivariatePoly::from_coeffs(vec![nat(1), nat(0), nat(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(UnivariatePoly::<Nat>::from_coeffs(vec![nat(0)]).is_zero());
    }

    #[test]
    fn univariate_renders_both_directions() {
        let p = UnivariatePoly::from_coeffs(vec![nat(7), nat(3), nat(1)]);
        assert_eq!(p.render_ascending("t"), "7+3t+t^2");
        assert_eq!(p.render_descending("q"), "q^2+3q+7");
        assert_eq!(UnivariatePoly::<Nat>::zero().render_ascending("t"), "0");
    }

    #[test]
    fn machine_integer_instantiation_matches_bignum() {
        let a64 = BivariatePoly::<u64>::parse("1+x(q+3)+x^2").unwrap();
        let sq64 = a64.mul(&a64);
        let abig = Poly2::parse("1+x(q+3)+x^2").unwrap();
        let sqbig = abig.mul(&abig);
        for (d, m, c) in sq64.terms() {
            assert_eq!(sqbig.coeff_xq(d, m), nat(*c));
        }
        assert_eq!(sq64.num_terms(), sqbig.num_terms());
        assert_eq!(sq64.render(), sqbig.render());
    }
}
