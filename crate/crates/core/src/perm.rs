//! Permutations as words of distinct positive integers, their descent and
//! weight statistics, and the weight-preserving bijection onto permutations
//! ending in 1.
//!
//! The central statistic is the weight `w`. To compute it for a canonical
//! word of length `n`, append `n + 1`, split the completed word into pieces,
//! and sum each piece's descent count together with the weight of its
//! flattening. The split works as follows: the entries after the minimum
//! (there is at most one such piece, and it ends in the appended maximum)
//! form the last piece, the minimum itself stands alone, and the entries
//! before the minimum are cut repeatedly so that each piece ends at a
//! running maximum.
//!
//! The recursion terminates because every recursive step either shortens the
//! word or (when the word starts with its minimum) strictly grows the
//! ascending suffix that the appended maximum extends.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::report::VerificationReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("empty permutation")]
    Empty,
    #[error("duplicate entry {0}")]
    Duplicate(u32),
    #[error("entries must be positive")]
    NonPositive,
    #[error("cannot parse `{0}` as a permutation")]
    Parse(String),
    #[error("word is not a permutation of 1..=n")]
    NotCanonical,
    #[error("not in S': word does not end in 1")]
    NotAnchored,
    #[error("descent count {d} out of range for length {n}")]
    DescentRange { n: usize, d: usize },
}

/// A word of distinct positive integers. Canonical words use exactly the
/// letters `1..=n`; general words arise as pieces of a split and can always
/// be brought back to canonical form with [`Permutation::flatten`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self, PermError> {
        let mut seen = std::collections::HashSet::with_capacity(word.len());
        for &a in &word {
            if a == 0 {
                return Err(PermError::NonPositive);
            }
            if !seen.insert(a) {
                return Err(PermError::Duplicate(a));
            }
        }
        Ok(Permutation { word })
    }

    pub fn empty() -> Self {
        Permutation { word: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n as u32).collect() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// True when the word uses exactly the letters `1..=n`.
    pub fn is_canonical(&self) -> bool {
        self.word.iter().all(|&a| a as usize <= self.word.len())
    }

    pub fn is_ascending(&self) -> bool {
        is_ascending(&self.word)
    }

    /// Number of positions `i` with `word[i] > word[i + 1]`.
    pub fn descents(&self) -> usize {
        descents(&self.word)
    }

    /// Replaces each entry by its rank, giving the canonical word with the
    /// same relative order.
    ///
    /// ```
    /// use qeuler_core::perm::Permutation;
    /// let p: Permutation = "6,5,9,2,4,3,10".parse().unwrap();
    /// assert_eq!(p.flatten().to_string(), "5461327");
    /// ```
    pub fn flatten(&self) -> Permutation {
        Permutation { word: flatten_word(&self.word) }
    }

    /// Cuts the word into its split pieces. `min_index` locates the
    /// single-entry piece holding the minimum.
    ///
    /// ```
    /// use qeuler_core::perm::Permutation;
    /// let p: Permutation = "839562147".parse().unwrap();
    /// let s = p.split().unwrap();
    /// let pieces: Vec<String> = s.pieces.iter().map(|p| p.to_string()).collect();
    /// assert_eq!(pieces, ["839", "56", "2", "1", "47"]);
    /// assert_eq!(s.min_index, 3);
    /// ```
    pub fn split(&self) -> Result<SplitDecomposition, PermError> {
        if self.is_empty() {
            return Err(PermError::Empty);
        }
        let (ranges, min_index) = piece_ranges(&self.word);
        let pieces = ranges
            .iter()
            .map(|&(lo, hi)| Permutation { word: self.word[lo..hi].to_vec() })
            .collect();
        Ok(SplitDecomposition { pieces, min_index })
    }

    /// The weight statistic, memoized per thread on flattened words.
    pub fn weight(&self) -> u64 {
        THREAD_MEMO.with(|memo| self.weight_with(&mut memo.borrow_mut()))
    }

    /// The weight statistic, memoized in the supplied table. Useful when a
    /// caller enumerates many permutations and wants to control reuse.
    pub fn weight_with(&self, memo: &mut WeightMemo) -> u64 {
        if self.is_canonical() {
            weight_canonical(&self.word, memo)
        } else {
            weight_canonical(&flatten_word(&self.word), memo)
        }
    }

    /// Weight computed by the strip-leading-minimum rule: a canonical word
    /// `1 . p` has weight `w(p) + des(p)`, bypassing the completed-word split
    /// for that step. Unmemoized; serves as an independent cross-check of
    /// [`Permutation::weight`].
    pub fn weight_shortcut(&self) -> u64 {
        if self.is_canonical() {
            weight_shortcut(&self.word)
        } else {
            weight_shortcut(&flatten_word(&self.word))
        }
    }

    /// `max_weight(n, des) - weight`: how far the word falls short of the
    /// largest weight its descent count allows. Zero for the empty word.
    pub fn disparity(&self) -> u64 {
        if self.is_empty() {
            return 0;
        }
        let bound = max_weight(self.len(), self.descents())
            .expect("descent count is always at most n - 1");
        bound - self.weight()
    }

    pub fn stats(&self) -> PermStats {
        PermStats {
            length: self.len(),
            descents: self.descents(),
            weight: self.weight(),
            disparity: self.disparity(),
        }
    }

    /// The weight-preserving bijection onto length `n + 1` words ending in 1:
    /// `p = l . 1 . r` maps to `r . (n + 1) . l . 1`. Adds exactly one
    /// descent.
    ///
    /// ```
    /// use qeuler_core::perm::Permutation;
    /// let p: Permutation = "213".parse().unwrap();
    /// assert_eq!(p.anchor().unwrap().to_string(), "3421");
    /// ```
    pub fn anchor(&self) -> Result<Permutation, PermError> {
        if self.is_empty() {
            return Err(PermError::Empty);
        }
        if !self.is_canonical() {
            return Err(PermError::NotCanonical);
        }
        let n = self.len();
        let pos = self.word.iter().position(|&a| a == 1).expect("canonical words contain 1");
        let mut out = Vec::with_capacity(n + 1);
        out.extend_from_slice(&self.word[pos + 1..]);
        out.push(n as u32 + 1);
        out.extend_from_slice(&self.word[..pos]);
        out.push(1);
        Ok(Permutation { word: out })
    }

    /// Inverse of [`Permutation::anchor`]: `l . max . r . 1` maps back to
    /// `r . 1 . l`. Errors unless the word is canonical and ends in 1.
    pub fn unanchor(&self) -> Result<Permutation, PermError> {
        if self.is_empty() {
            return Err(PermError::Empty);
        }
        if !self.is_canonical() {
            return Err(PermError::NotCanonical);
        }
        if *self.word.last().unwrap() != 1 {
            return Err(PermError::NotAnchored);
        }
        let n = self.len();
        if n == 1 {
            return Ok(Permutation::empty());
        }
        let pos = self.word.iter().position(|&a| a as usize == n).expect("canonical words contain n");
        let mut out = Vec::with_capacity(n - 1);
        out.extend_from_slice(&self.word[pos + 1..n - 1]);
        out.push(1);
        out.extend_from_slice(&self.word[..pos]);
        Ok(Permutation { word: out })
    }

    /// Weight computation with a full recursion transcript, for display.
    pub fn weight_traced(&self) -> (u64, String) {
        let word = if self.is_canonical() { self.word.clone() } else { flatten_word(&self.word) };
        let mut out = String::new();
        let w = trace_weight(&word, 0, &mut out);
        (w, out)
    }
}

/// Length, descent count, weight, and disparity of one word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PermStats {
    pub length: usize,
    pub descents: usize,
    pub weight: u64,
    pub disparity: u64,
}

/// Result of [`Permutation::split`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitDecomposition {
    pub pieces: Vec<Permutation>,
    pub min_index: usize,
}

/// The largest weight a length `n` word with `d` descents can carry:
/// `d * (n - d - 1)`.
pub fn max_weight(n: usize, d: usize) -> Result<u64, PermError> {
    if n == 0 || d > n - 1 {
        return Err(PermError::DescentRange { n, d });
    }
    Ok((d * (n - d - 1)) as u64)
}

impl fmt::Display for Permutation {
    /// Digit string when every entry is a single digit, comma-separated
    /// otherwise: `213` but `6,5,9,2,4,3,10`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.iter().all(|&a| a <= 9) {
            for a in &self.word {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|a| a.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Accepts both display forms: `213` and `2,1,3`.
    fn from_str(s: &str) -> Result<Self, PermError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PermError::Empty);
        }
        let word: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u32>()
                        .map_err(|_| PermError::Parse(part.trim().to_string()))
                })
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|ch| match ch.to_digit(10) {
                    Some(v) if v > 0 => Ok(v),
                    _ => Err(PermError::Parse(ch.to_string())),
                })
                .collect::<Result<_, _>>()?
        };
        if word.iter().any(|&a| a == 0) {
            return Err(PermError::NonPositive);
        }
        Permutation::new(word)
    }
}

fn is_ascending(word: &[u32]) -> bool {
    word.windows(2).all(|w| w[0] < w[1])
}

fn descents(word: &[u32]) -> usize {
    word.windows(2).filter(|w| w[0] > w[1]).count()
}

fn flatten_word(word: &[u32]) -> Vec<u32> {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| word[i]);
    let mut out = vec![0u32; word.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    out
}

/// Piece boundaries of the split as half-open index ranges, plus the index
/// of the singleton piece holding the minimum.
fn piece_ranges(word: &[u32]) -> (Vec<(usize, usize)>, usize) {
    let min_pos = word
        .iter()
        .enumerate()
        .min_by_key(|&(_, &a)| a)
        .map(|(i, _)| i)
        .expect("nonempty word");
    let mut ranges = Vec::new();
    // Left of the minimum: cut after each running maximum.
    let mut start = 0;
    while start < min_pos {
        let mut best = start;
        for i in start + 1..min_pos {
            if word[i] > word[best] {
                best = i;
            }
        }
        ranges.push((start, best + 1));
        start = best + 1;
    }
    let min_index = ranges.len();
    ranges.push((min_pos, min_pos + 1));
    if min_pos + 1 < word.len() {
        ranges.push((min_pos + 1, word.len()));
    }
    (ranges, min_index)
}

const MEMO_MAX_LEN: usize = 9;

/// Weight cache keyed by flattened words. Words longer than a small cutoff
/// are not stored; they recur rarely while short pieces recur constantly.
#[derive(Default)]
pub struct WeightMemo {
    map: HashMap<Box<[u32]>, u64>,
}

impl WeightMemo {
    pub fn new() -> Self {
        WeightMemo::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

thread_local! {
    static THREAD_MEMO: RefCell<WeightMemo> = RefCell::new(WeightMemo::new());
}

fn weight_canonical(word: &[u32], memo: &mut WeightMemo) -> u64 {
    let n = word.len();
    if n <= 1 || is_ascending(word) {
        return 0;
    }
    let store = n <= MEMO_MAX_LEN;
    if store {
        if let Some(&w) = memo.map.get(word) {
            return w;
        }
    }
    let mut completed = Vec::with_capacity(n + 1);
    completed.extend_from_slice(word);
    completed.push(n as u32 + 1);
    let (ranges, _) = piece_ranges(&completed);
    let mut total = 0u64;
    for (lo, hi) in ranges {
        let piece = &completed[lo..hi];
        total += descents(piece) as u64;
        if piece.len() >= 2 && !is_ascending(piece) {
            total += weight_canonical(&flatten_word(piece), memo);
        }
    }
    if store {
        memo.map.insert(word.into(), total);
    }
    total
}

fn weight_shortcut(word: &[u32]) -> u64 {
    let n = word.len();
    if n <= 1 || is_ascending(word) {
        return 0;
    }
    if word[0] == 1 {
        // The tail is a word on 2..=n; flattening just lowers each entry.
        let tail: Vec<u32> = word[1..].iter().map(|&a| a - 1).collect();
        return descents(&tail) as u64 + weight_shortcut(&tail);
    }
    let mut completed = Vec::with_capacity(n + 1);
    completed.extend_from_slice(word);
    completed.push(n as u32 + 1);
    let (ranges, _) = piece_ranges(&completed);
    let mut total = 0u64;
    for (lo, hi) in ranges {
        let piece = &completed[lo..hi];
        total += descents(piece) as u64;
        if piece.len() >= 2 && !is_ascending(piece) {
            total += weight_shortcut(&flatten_word(piece));
        }
    }
    total
}

fn render_word(word: &[u32]) -> String {
    Permutation { word: word.to_vec() }.to_string()
}

fn trace_weight(word: &[u32], depth: usize, out: &mut String) -> u64 {
    let indent = "  ".repeat(depth);
    let n = word.len();
    if n <= 1 || is_ascending(word) {
        out.push_str(&format!("{indent}w({}) = 0 (ascending)\n", render_word(word)));
        return 0;
    }
    let mut completed = Vec::with_capacity(n + 1);
    completed.extend_from_slice(word);
    completed.push(n as u32 + 1);
    let (ranges, _) = piece_ranges(&completed);
    let mut memo = WeightMemo::new();
    let total = weight_canonical(word, &mut memo);
    let piece_list: Vec<String> =
        ranges.iter().map(|&(lo, hi)| render_word(&completed[lo..hi])).collect();
    out.push_str(&format!(
        "{indent}w({}) = {total}; complete -> {}; pieces: {}\n",
        render_word(word),
        render_word(&completed),
        piece_list.join(" . ")
    ));
    for (lo, hi) in ranges {
        let piece = &completed[lo..hi];
        let d = descents(piece);
        if piece.len() >= 2 && !is_ascending(piece) {
            let flat = flatten_word(piece);
            let w = weight_canonical(&flat, &mut memo);
            out.push_str(&format!(
                "{indent}  piece {}: des = {d}, flattens to {}, w = {w}\n",
                render_word(piece),
                render_word(&flat)
            ));
            trace_weight(&flat, depth + 2, out);
        } else {
            out.push_str(&format!(
                "{indent}  piece {}: des = {d}, w = 0\n",
                render_word(piece)
            ));
        }
    }
    total
}

/// Checks that anchoring is a weight-preserving, descent-incrementing
/// bijection from length `n` words onto length `n + 1` words ending in 1,
/// and that unanchoring inverts it, for every `1 <= n <= n_max`.
pub fn verify_bijection(n_max: usize) -> VerificationReport {
    use itertools::Itertools;

    let mut report =
        VerificationReport::new("bijection", format!("1 <= n <= {n_max}, all of S_n"));
    for n in 1..=n_max {
        let mut images = std::collections::HashSet::new();
        for word in (1..=n as u32).permutations(n) {
            let p = Permutation { word };
            let f = p.anchor().expect("canonical nonempty word anchors");
            let coords = || {
                vec![("n", n as i64), ("d", p.descents() as i64), ("m", p.weight() as i64)]
            };
            report.record(
                coords(),
                format!("w={} des={}", p.weight(), p.descents() + 1),
                format!("w={} des={}", f.weight(), f.descents()),
                f.weight() == p.weight() && f.descents() == p.descents() + 1,
            );
            let ends_in_one = *f.word().last().unwrap() == 1;
            report.record(coords(), "image ends in 1", format!("{f}"), ends_in_one);
            let back = f.unanchor().expect("image of anchor unanchors");
            report.record(coords(), format!("{p}"), format!("{back}"), back == p);
            images.insert(f);
        }
        let expected: usize = (1..=n).product();
        report.record(
            vec![("n", n as i64)],
            format!("{expected} distinct images"),
            format!("{}", images.len()),
            images.len() == expected,
        );
    }
    report.sort_violations();
    report
}
