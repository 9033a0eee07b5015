//! Brute-force reference implementations.
//!
//! Everything here enumerates and filters. None of the reference functions
//! call into the other modules; [`cross_checks`] is the only place where
//! oracle and implementation meet.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::blocks::{decompose, visit_block_words, DEFAULT_MAX_ORDER};
use crate::check::CheckReport;
use crate::counting::build_table;
use crate::error::{Error, Result};
use crate::sequence::fkm_word;
use crate::word::{self, BitWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Longest word length enumerated exhaustively.
    pub max_word_length: usize,
    /// Largest order for the exhaustive de Bruijn search.
    pub max_debruijn_order: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_word_length: 22, max_debruijn_order: 4 }
    }
}

impl OracleConfig {
    fn words(&self, m: usize) -> Result<()> {
        if m > self.max_word_length.min(30) {
            return Err(Error::Capacity {
                what: "word length",
                requested: m as u64,
                max: self.max_word_length as u64,
            });
        }
        Ok(())
    }
}

/// The `m` symbols of `bits`, most significant first.
fn spell(bits: u64, m: usize) -> Vec<u8> {
    (0..m).map(|i| ((bits >> (m - 1 - i)) & 1) as u8).collect()
}

fn has_zero_run(w: &[u8], k: usize) -> bool {
    (0..w.len()).any(|i| i + k <= w.len() && w[i..i + k].iter().all(|&s| s == 0))
}

fn naive_skew(w: &[u8]) -> i64 {
    let zeros = w.iter().filter(|&&s| s == 0).count() as i64;
    zeros - (w.len() as i64 - zeros)
}

/// Number of words of length `m` with no subword `0^k`.
pub fn alpha_brute(cfg: &OracleConfig, k: usize, m: usize) -> Result<u64> {
    cfg.words(m)?;
    Ok((0..1u64 << m).filter(|&x| !has_zero_run(&spell(x, m), k)).count() as u64)
}

/// Sum of skews over the words of length `m` with no subword `0^k`.
pub fn beta_brute(cfg: &OracleConfig, k: usize, m: usize) -> Result<i64> {
    cfg.words(m)?;
    Ok((0..1u64 << m)
        .map(|x| spell(x, m))
        .filter(|w| !has_zero_run(w, k))
        .map(|w| naive_skew(&w))
        .sum())
}

/// All rotations, compared directly.
pub fn min_rotation_naive(w: &[u8]) -> Vec<u8> {
    (0..w.len().max(1))
        .map(|j| {
            let mut r = w.to_vec();
            if !r.is_empty() {
                r.rotate_left(j);
            }
            r
        })
        .min()
        .unwrap_or_default()
}

/// Strictly smaller than every proper rotation.
pub fn is_lyndon_naive(w: &[u8]) -> bool {
    !w.is_empty()
        && (1..w.len()).all(|j| {
            let mut r = w.to_vec();
            r.rotate_left(j);
            w < r.as_slice()
        })
}

/// Longest cyclic zero run (the whole length for the all-zero word).
pub fn cyclic_max_zero_run_naive(w: &[u8]) -> usize {
    let n = w.len();
    (0..n)
        .map(|i| (0..n).take_while(|&d| w[(i + d) % n] == 0).count())
        .max()
        .unwrap_or(0)
}

/// The block `l_k` for prime `n`: every word with cyclic longest zero run
/// exactly `k`, reduced to its least rotation, deduplicated and concatenated
/// in lexicographic order.
pub fn ell_brute(cfg: &OracleConfig, n: usize, k: usize) -> Result<BitWord> {
    let prime = n >= 2 && (2..n).all(|d| !n.is_multiple_of(d));
    if !prime {
        return Err(Error::InvalidArgument("block oracle needs a prime order"));
    }
    if n > cfg.max_word_length.min(20) {
        return Err(Error::Capacity { what: "order", requested: n as u64, max: 20 });
    }
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument("block oracle needs 1 <= k <= n - 1"));
    }
    let reps: BTreeSet<Vec<u8>> = (0..1u64 << n)
        .map(|x| spell(x, n))
        .filter(|w| cyclic_max_zero_run_naive(w) == k)
        .map(|w| min_rotation_naive(&w))
        .collect();
    BitWord::from_symbols(reps.into_iter().flatten().collect())
}

/// Outcome of the exhaustive de Bruijn search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DebruijnCensus {
    /// Cycles, counted once each via the rotation that starts with `0^n`.
    pub cycles: u64,
    /// Lexicographically least de Bruijn word over all rotations.
    pub least: BitWord,
}

fn is_debruijn_naive(w: &[u8], n: usize) -> bool {
    let len = w.len();
    let windows: BTreeSet<Vec<u8>> =
        (0..len).map(|i| (0..n).map(|d| w[(i + d) % len]).collect()).collect();
    windows.len() == len
}

pub fn count_debruijn_exhaustive(cfg: &OracleConfig, n: usize) -> Result<DebruijnCensus> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be at least 1"));
    }
    if n > cfg.max_debruijn_order.min(4) {
        return Err(Error::Capacity {
            what: "order",
            requested: n as u64,
            max: cfg.max_debruijn_order.min(4) as u64,
        });
    }
    let len = 1usize << n;
    let mut cycles = 0;
    let mut least: Option<Vec<u8>> = None;
    for x in 0..1u64 << len {
        let w = spell(x, len);
        if !is_debruijn_naive(&w, n) {
            continue;
        }
        if w[..n].iter().all(|&s| s == 0) {
            cycles += 1;
        }
        if least.as_ref().is_none_or(|l| w < *l) {
            least = Some(w);
        }
    }
    let least = least.ok_or(Error::InvalidArgument("no de Bruijn word found"))?;
    Ok(DebruijnCensus { cycles, least: BitWord::from_symbols(least)? })
}

/// `2^{2^{n-1} - n}`, the number of binary de Bruijn cycles of order `n`.
pub fn debruijn_cycle_count(n: usize) -> u64 {
    1u64 << ((1u64 << (n - 1)) - n as u64)
}

/// Largest absolute prefix sum, one pass.
pub fn disc_brute(w: &[u8]) -> u64 {
    let mut sum = 0i64;
    let mut best = 0u64;
    for &s in w {
        sum += if s == 0 { 1 } else { -1 };
        best = best.max(sum.unsigned_abs());
    }
    best
}

/// Deterministic xorshift words for the discrepancy comparison.
fn pseudo_random_words(count: usize, max_len: usize) -> impl Iterator<Item = Vec<u8>> {
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    (0..count).map(move |_| {
        let len = 1 + (next() as usize) % max_len;
        (0..len).map(|_| (next() >> 33) as u8 & 1).collect()
    })
}

/// Runs every oracle equivalence at its default scale.
pub fn cross_checks(cfg: &OracleConfig) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();

    let m_max = cfg.max_word_length.min(20);
    let mut tables = CheckReport::new(
        "build_table = alpha_brute / beta_brute",
        format!("2<=k<=6, 0<=m<={m_max}"),
    );
    'tables: for k in 2..=6 {
        let table = build_table(k, m_max)?;
        for m in 0..=m_max {
            let (a, b) = (alpha_brute(cfg, k, m)?, beta_brute(cfg, k, m)?);
            if table.a(m) != &BigInt::from(a) || table.b(m) != &BigInt::from(b) {
                tables.fail(format!(
                    "k={k} m={m}: table ({}, {}) vs brute ({a}, {b})",
                    table.a(m),
                    table.b(m)
                ));
                break 'tables;
            }
        }
    }
    reports.push(tables);

    let mut blocks = CheckReport::new("decompose = ell_brute", "prime 3<=n<=17");
    for n in [3usize, 5, 7, 11, 13, 17] {
        let mut streamed: Vec<Vec<u8>> = Vec::new();
        let mut last_k = 0;
        visit_block_words(n, DEFAULT_MAX_ORDER, |k, w| {
            if k != last_k {
                streamed.push(Vec::new());
                last_k = k;
            }
            streamed.last_mut().expect("pushed").extend_from_slice(w);
        })?;
        let expected: Vec<Vec<u8>> = (1..n)
            .rev()
            .map(|k| ell_brute(cfg, n, k).map(BitWord::into_symbols))
            .collect::<Result<_>>()?;
        if streamed != expected {
            blocks.fail(format!("n={n}: streamed blocks differ from enumeration"));
        }
        let skews: Vec<i64> = decompose(n)?.iter().map(|b| b.skew).collect();
        let brute_skews: Vec<i64> = expected.iter().map(|w| naive_skew(w)).collect();
        if skews != brute_skews {
            blocks.fail(format!("n={n}: block skews {skews:?} vs {brute_skews:?}"));
        }
    }
    reports.push(blocks);

    let top = cfg.max_debruijn_order.min(4);
    let mut census = CheckReport::new(
        "de Bruijn cycles = 2^(2^(n-1)-n); least word = stream",
        format!("1<=n<={top}"),
    );
    for n in 1..=top {
        let c = count_debruijn_exhaustive(cfg, n)?;
        if c.cycles != debruijn_cycle_count(n) {
            census.fail(format!("n={n}: {} cycles, expected {}", c.cycles, debruijn_cycle_count(n)));
        }
        if c.least != fkm_word(n)? {
            census.fail(format!("n={n}: least word {} differs from stream", c.least));
        }
    }
    reports.push(census);

    let mut disc = CheckReport::new("discrepancy = disc_brute", "10^4 words, length <= 2^16");
    for w in pseudo_random_words(10_000, 1 << 16) {
        let fast = word::discrepancy(&w)?.disc;
        if fast != disc_brute(&w) {
            disc.fail(format!("length {}: {fast} vs {}", w.len(), disc_brute(&w)));
            break;
        }
    }
    reports.push(disc);

    Ok(reports)
}
