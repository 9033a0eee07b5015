//! Finite binary words.
//!
//! Symbols are stored one per byte as `0` or `1`. Most operations are free
//! functions on `&[u8]` so that the streaming generators can call them on
//! their internal buffers; [`BitWord`] wraps an owned, validated buffer.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A finite word over `{0, 1}`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitWord {
    symbols: Vec<u8>,
}

impl BitWord {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a word from raw symbols, rejecting anything other than 0 or 1.
    pub fn from_symbols(symbols: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s > 1) {
            return Err(Error::InvalidSymbol(char::from(bad)));
        }
        Ok(BitWord { symbols })
    }

    /// The low `len` bits of `bits`, most significant first.
    pub fn from_bits(bits: u64, len: usize) -> Self {
        debug_assert!(len <= 64);
        let symbols = (0..len).rev().map(|i| ((bits >> i) & 1) as u8).collect();
        BitWord { symbols }
    }

    pub fn zeros(len: usize) -> Self {
        BitWord { symbols: alloc::vec![0; len] }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.symbols
    }

    pub fn push(&mut self, bit: bool) {
        self.symbols.push(bit as u8);
    }

    pub fn extend_from_word(&mut self, other: &BitWord) {
        self.symbols.extend_from_slice(&other.symbols);
    }

    /// Cyclic left rotation by `j` positions.
    pub fn rotated(&self, j: usize) -> BitWord {
        let mut symbols = self.symbols.clone();
        if !symbols.is_empty() {
            let j = j % symbols.len();
            symbols.rotate_left(j);
        }
        BitWord { symbols }
    }

    pub fn skew(&self) -> i64 {
        skew(&self.symbols)
    }

    pub fn discrepancy(&self) -> Result<DiscReport> {
        discrepancy(&self.symbols)
    }

    pub fn min_rotation(&self) -> Result<BitWord> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(self.rotated(least_rotation(&self.symbols)))
    }

    pub fn is_lyndon(&self) -> bool {
        is_lyndon(&self.symbols)
    }

    pub fn zero_run_stats(&self, cyclic: bool) -> RunStats {
        zero_run_stats(&self.symbols, cyclic)
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.symbols.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord(\"{self}\")")
    }
}

impl FromStr for BitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidSymbol(other)),
            })
            .collect::<Result<Vec<u8>>>()
            .map(|symbols| BitWord { symbols })
    }
}

impl AsRef<[u8]> for BitWord {
    fn as_ref(&self) -> &[u8] {
        &self.symbols
    }
}

/// `(#zeros - #ones)`, i.e. the sum of `(-1)^{w_i}`.
pub fn skew(w: &[u8]) -> i64 {
    w.iter().map(|&b| if b == 0 { 1 } else { -1 }).sum()
}

/// Prefix-sum extremes of a word or stream.
///
/// All extremes range over nonempty prefixes. `argmax_position` is the length
/// of the earliest prefix whose absolute sum equals `disc`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiscReport {
    pub disc: u64,
    pub max_signed: i64,
    pub min_signed: i64,
    pub argmax_position: u64,
}

/// Running prefix-sum tracker; feeds one symbol at a time.
#[derive(Debug, Clone, Default)]
pub struct DiscTracker {
    sum: i64,
    len: u64,
    max_signed: i64,
    min_signed: i64,
    disc: u64,
    argmax: u64,
}

impl DiscTracker {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn push(&mut self, symbol: u8) {
        self.sum += if symbol == 0 { 1 } else { -1 };
        self.len += 1;
        if self.len == 1 {
            self.max_signed = self.sum;
            self.min_signed = self.sum;
        } else {
            self.max_signed = self.max_signed.max(self.sum);
            self.min_signed = self.min_signed.min(self.sum);
        }
        let abs = self.sum.unsigned_abs();
        if abs > self.disc {
            self.disc = abs;
            self.argmax = self.len;
        }
    }

    pub fn extend<I: IntoIterator<Item = u8>>(&mut self, symbols: I) {
        for s in symbols {
            self.push(s);
        }
    }

    /// Current prefix sum.
    pub fn sum(&self) -> i64 {
        self.sum
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn report(&self) -> Option<DiscReport> {
        (self.len > 0).then_some(DiscReport {
            disc: self.disc,
            max_signed: self.max_signed,
            min_signed: self.min_signed,
            argmax_position: self.argmax,
        })
    }
}

pub fn discrepancy(w: &[u8]) -> Result<DiscReport> {
    let mut tracker = DiscTracker::new();
    tracker.extend(w.iter().copied());
    tracker.report().ok_or(Error::EmptyWord)
}

/// Start index of the lexicographically least rotation of `w`.
///
/// Two-candidate scan: linear time, no allocation. Returns 0 for the empty word.
pub fn least_rotation(w: &[u8]) -> usize {
    let n = w.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = w[(i + k) % n];
        let b = w[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// `true` iff `w` is nonempty, aperiodic and strictly smaller than each of
/// its proper rotations.
pub fn is_lyndon(w: &[u8]) -> bool {
    if w.is_empty() {
        return false;
    }
    // After the scan, `w` is a prenecklace with period `len - i`.
    let mut i = 0;
    for j in 1..w.len() {
        match w[i].cmp(&w[j]) {
            core::cmp::Ordering::Less => i = 0,
            core::cmp::Ordering::Equal => i += 1,
            core::cmp::Ordering::Greater => return false,
        }
    }
    i == 0
}

/// Statistics of the maximal zero runs of a word.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RunStats {
    /// Length of the longest zero run.
    pub max_run: usize,
    /// Number of maximal zero runs of length `max_run`.
    pub run_count: usize,
    /// Sorted start indices of those runs.
    pub run_print: Vec<usize>,
}

/// Maximal-zero-run statistics. In cyclic mode a run may wrap from the end of
/// the word to its start; its start index is then the index in the tail.
/// The all-zero word has a single run of length `|w|` starting at 0.
pub fn zero_run_stats(w: &[u8], cyclic: bool) -> RunStats {
    let n = w.len();
    if n > 0 && w.iter().all(|&b| b == 0) {
        return RunStats { max_run: n, run_count: 1, run_print: alloc::vec![0] };
    }
    // Collect maximal runs as (start, len) in linear order.
    let mut runs: Vec<(usize, usize)> = Vec::new();
    let mut i = 0;
    while i < n {
        if w[i] == 0 {
            let start = i;
            while i < n && w[i] == 0 {
                i += 1;
            }
            runs.push((start, i - start));
        } else {
            i += 1;
        }
    }
    if cyclic && runs.len() >= 2 {
        let first = runs[0];
        let last = runs[runs.len() - 1];
        if first.0 == 0 && last.0 + last.1 == n {
            runs.remove(0);
            let merged = runs.last_mut().expect("at least one run remains");
            merged.1 += first.1;
        }
    }
    let max_run = runs.iter().map(|r| r.1).max().unwrap_or(0);
    let mut run_print: Vec<usize> =
        runs.iter().filter(|r| max_run > 0 && r.1 == max_run).map(|r| r.0).collect();
    run_print.sort_unstable();
    RunStats { max_run, run_count: run_print.len(), run_print }
}
