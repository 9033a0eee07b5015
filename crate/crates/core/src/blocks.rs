//! Block structure of the sequence for prime orders.
//!
//! For prime `n` the sequence is `0`, then every length-`n` Lyndon word, then
//! `1`. A length-`n` Lyndon word starting with `0^k 1` has cyclic maximal zero
//! run exactly `k`, and these words appear in decreasing `k`. The words of one
//! class form the block `l_k`; blocks run from `k = n-1` down to `k = 1`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::Ratio;

use crate::check::CheckReport;
use crate::counting::build_table;
use crate::error::{Error, Result};
use crate::is_prime;
use crate::sequence::{fkm_stream, LyndonStream, MAX_STREAM_ORDER};
use crate::word::{DiscReport, DiscTracker};

/// Default streaming cap for block analysis and the growth sweep.
pub const DEFAULT_MAX_ORDER: usize = 26;
/// The growth sweep never streams past this order.
pub const SCALING_HARD_MAX: usize = 30;

/// Summary of one block `l_k`.
///
/// Signed extremes are over nonempty prefixes of the block alone; `max_at`
/// and `min_at` are the lengths of the earliest such prefixes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockReport {
    pub k: usize,
    pub length: u64,
    pub skew: i64,
    pub max_signed: i64,
    pub min_signed: i64,
    pub max_at: u64,
    pub min_at: u64,
    pub word_count: u64,
}

impl BlockReport {
    fn start(k: usize) -> Self {
        BlockReport {
            k,
            length: 0,
            skew: 0,
            max_signed: i64::MIN,
            min_signed: i64::MAX,
            max_at: 0,
            min_at: 0,
            word_count: 0,
        }
    }

    fn push_word(&mut self, word: &[u8]) {
        self.word_count += 1;
        for &s in word {
            self.skew += if s == 0 { 1 } else { -1 };
            self.length += 1;
            if self.skew > self.max_signed {
                self.max_signed = self.skew;
                self.max_at = self.length;
            }
            if self.skew < self.min_signed {
                self.min_signed = self.skew;
                self.min_at = self.length;
            }
        }
    }

    /// Discrepancy of the block taken on its own.
    pub fn disc(&self) -> u64 {
        self.max_signed.unsigned_abs().max(self.min_signed.unsigned_abs())
    }
}

fn check_prime_order(n: usize, cap: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidArgument("block decomposition needs a prime order n >= 3"));
    }
    if !is_prime(n) {
        return Err(Error::InvalidArgument(
            "block decomposition needs a prime order; use the composite correction report",
        ));
    }
    let cap = cap.min(MAX_STREAM_ORDER);
    if n > cap {
        return Err(Error::Capacity { what: "order", requested: n as u64, max: cap as u64 });
    }
    Ok(())
}

/// Calls `visit(k, word)` for every length-`n` Lyndon word of a prime order,
/// in stream order. The leading `0` and trailing `1` are skipped.
pub fn visit_block_words<F>(n: usize, cap: usize, mut visit: F) -> Result<()>
where
    F: FnMut(usize, &[u8]),
{
    check_prime_order(n, cap)?;
    let mut stream = LyndonStream::new(n)?;
    while let Some(word) = stream.next_word() {
        if word.len() != n {
            continue;
        }
        let k = word.iter().take_while(|&&s| s == 0).count();
        visit(k, word);
    }
    Ok(())
}

/// Per-block reports for a prime order, with the default cap.
pub fn decompose(n: usize) -> Result<Vec<BlockReport>> {
    decompose_capped(n, DEFAULT_MAX_ORDER)
}

pub fn decompose_capped(n: usize, cap: usize) -> Result<Vec<BlockReport>> {
    let mut blocks: Vec<BlockReport> = Vec::with_capacity(n);
    visit_block_words(n, cap, |k, word| {
        match blocks.last() {
            Some(b) if b.k == k => {}
            Some(b) => {
                debug_assert!(k < b.k, "zero-run classes must not increase");
                blocks.push(BlockReport::start(k));
            }
            None => blocks.push(BlockReport::start(k)),
        }
        blocks.last_mut().expect("pushed above").push_word(word);
    })?;
    Ok(blocks)
}

/// Maximum length of `n` for [`block_skew_weighted`].
pub const WEIGHTED_MAX_ORDER: usize = 22;

/// Skew of `l_k` as a weighted sum over short words.
///
/// Each word of `S_k` with `t + 1` cyclic runs `0^k` has exactly `t + 1`
/// rotations of the form `0^k 1 w 1`, so
/// `sk(l_k) = sum_t 1/(t+1) sum_{w} (k - 2 + sk(w))` with `w` ranging over the
/// `0^{k+1}`-free words of length `n-k-2` having exactly `t` maximal runs `0^k`.
pub fn block_skew_weighted(n: usize, k: usize) -> Result<Ratio<i128>> {
    if !is_prime(n) {
        return Err(Error::InvalidArgument("weighted block skew needs a prime order"));
    }
    if n > WEIGHTED_MAX_ORDER {
        return Err(Error::Capacity {
            what: "order",
            requested: n as u64,
            max: WEIGHTED_MAX_ORDER as u64,
        });
    }
    if k < 4 || k + 3 > n {
        return Err(Error::InvalidArgument("weighted block skew needs 4 <= k <= n - 3"));
    }
    let m = n - k - 2;
    // by_runs[t] = sum of (k - 2 + sk(w)) over words with t runs of 0^k
    let mut by_runs: Vec<i128> = vec![0; m / (k + 1) + 2];
    'words: for bits in 0u32..(1u32 << m) {
        let (mut zeros, mut runs, mut skew) = (0usize, 0usize, 0i128);
        for i in 0..=m {
            let is_zero = i < m && (bits >> (m - 1 - i)) & 1 == 0;
            if i < m {
                skew += if is_zero { 1 } else { -1 };
            }
            if is_zero {
                zeros += 1;
                if zeros > k {
                    continue 'words;
                }
            } else {
                if zeros == k {
                    runs += 1;
                }
                zeros = 0;
            }
        }
        by_runs[runs] += k as i128 - 2 + skew;
    }
    Ok(by_runs
        .iter()
        .enumerate()
        .map(|(t, &s)| Ratio::new(s, t as i128 + 1))
        .fold(Ratio::from_integer(0), |acc, x| acc + x))
}

/// Checks `k/3 - 2 <= sk(l_k) / alpha_{k+1}(n-k-2) <= 2k - 3` by exact
/// cross-multiplication for `4 <= k <= n-3`.
pub fn sandwich_check(n: usize) -> Result<CheckReport> {
    sandwich_check_capped(n, DEFAULT_MAX_ORDER)
}

pub fn sandwich_check_capped(n: usize, cap: usize) -> Result<CheckReport> {
    if n < 11 || !is_prime(n) {
        return Err(Error::InvalidArgument("sandwich check needs a prime order n >= 11"));
    }
    let blocks = decompose_capped(n, cap)?;
    let mut report = CheckReport::new(
        "k/3 - 2 <= sk(l_k) / alpha_{k+1}(n-k-2) <= 2k - 3",
        format!("n={n}, 4<=k<={}", n - 3),
    );
    for block in blocks.iter().filter(|b| b.k >= 4 && b.k + 3 <= n) {
        let k = block.k;
        let alpha = build_table(k + 1, n - k - 2)?.a(n - k - 2).clone();
        let skew = BigInt::from(block.skew);
        let lower_ok = &alpha * (k as i64 - 6) <= &skew * 3;
        let upper_ok = skew <= &alpha * (2 * k as i64 - 3);
        if !(lower_ok && upper_ok) {
            report.fail(format!("n={n} k={k}: sk={skew}, alpha={alpha}"));
        }
    }
    report.observe(format!(
        "k in {{{}, {}}} unverifiable as stated: alpha of negative length",
        n - 2,
        n - 1
    ));
    Ok(report)
}

/// Exact discrepancy of the sequence assembled from block data, next to the
/// blockwise upper expression
/// `max_{1<=t<=n-2} (1 + sum_{i=1..t} sk(l_{n-i}) + disc(l_{n-t-1}))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockwiseDisc {
    pub blocks: Vec<BlockReport>,
    pub exact: DiscReport,
    pub blockwise_bound: i64,
    /// Running sums before each block and after the last one.
    pub boundary_sums: Vec<i64>,
}

pub fn disc_blockwise(n: usize) -> Result<BlockwiseDisc> {
    disc_blockwise_capped(n, DEFAULT_MAX_ORDER)
}

pub fn disc_blockwise_capped(n: usize, cap: usize) -> Result<BlockwiseDisc> {
    if n < 5 {
        return Err(Error::InvalidArgument("blockwise discrepancy needs a prime order n >= 5"));
    }
    let blocks = decompose_capped(n, cap)?;

    // Leading "0".
    let mut sum: i64 = 1;
    let mut pos: u64 = 1;
    let mut exact =
        DiscReport { disc: 1, max_signed: 1, min_signed: 1, argmax_position: 1 };
    let mut boundary_sums = Vec::with_capacity(blocks.len() + 1);
    for b in &blocks {
        boundary_sums.push(sum);
        let hi = (sum + b.max_signed, pos + b.max_at);
        let lo = (sum + b.min_signed, pos + b.min_at);
        exact.max_signed = exact.max_signed.max(hi.0);
        exact.min_signed = exact.min_signed.min(lo.0);
        let mut best = if hi.0.unsigned_abs() >= lo.0.unsigned_abs() { hi } else { lo };
        if hi.0.unsigned_abs() == lo.0.unsigned_abs() {
            best.1 = hi.1.min(lo.1);
        }
        if best.0.unsigned_abs() > exact.disc {
            exact.disc = best.0.unsigned_abs();
            exact.argmax_position = best.1;
        }
        sum += b.skew;
        pos += b.length;
    }
    boundary_sums.push(sum);
    // Trailing "1".
    sum -= 1;
    exact.min_signed = exact.min_signed.min(sum);
    exact.max_signed = exact.max_signed.max(sum);
    debug_assert_eq!(sum, 0);

    let mut blockwise_bound = i64::MIN;
    let mut running = 1;
    for t in 1..blocks.len() {
        running += blocks[t - 1].skew;
        blockwise_bound = blockwise_bound.max(running + blocks[t].disc() as i64);
    }
    Ok(BlockwiseDisc { blocks, exact, blockwise_bound, boundary_sums })
}

/// Symbols contributed by Lyndon words of proper-divisor length, against the
/// bounds `sum_{d|n, d<n} d 2^d < n^2 2^{n/2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompositeCorrection {
    pub n: usize,
    pub divisor_symbols: u64,
    pub divisor_bound: u128,
    /// `n^2 2^{n/2}` as a float; the comparison itself is exact.
    pub crude_bound: f64,
    pub within_divisor_bound: bool,
    pub divisor_bound_below_crude: bool,
}

impl CompositeCorrection {
    pub fn holds(&self) -> bool {
        self.within_divisor_bound && self.divisor_bound_below_crude
    }
}

pub fn composite_correction(n: usize) -> Result<CompositeCorrection> {
    if n < 4 || is_prime(n) {
        return Err(Error::InvalidArgument("divisor correction needs a composite order"));
    }
    if n > DEFAULT_MAX_ORDER {
        return Err(Error::Capacity {
            what: "order",
            requested: n as u64,
            max: DEFAULT_MAX_ORDER as u64,
        });
    }
    let mut stream = LyndonStream::new(n)?;
    let mut divisor_symbols = 0u64;
    while let Some(word) = stream.next_word() {
        if word.len() < n {
            divisor_symbols += word.len() as u64;
        }
    }
    let divisor_bound: u128 =
        (1..n).filter(|d| n.is_multiple_of(*d)).map(|d| (d as u128) << d).sum();
    // sum < n^2 2^{n/2}  <=>  sum^2 < n^4 2^n
    let n4 = (n as u128).pow(4);
    let divisor_bound_below_crude = divisor_bound * divisor_bound < n4 << n;
    Ok(CompositeCorrection {
        n,
        divisor_symbols,
        divisor_bound,
        crude_bound: (n * n) as f64 * libm::pow(2.0, n as f64 / 2.0),
        within_divisor_bound: u128::from(divisor_symbols) <= divisor_bound,
        divisor_bound_below_crude,
    })
}

/// One row of the growth sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingRow {
    pub n: usize,
    pub disc: u64,
    /// Length of the earliest prefix attaining `disc`.
    pub position: u64,
    /// `n disc / (2^n ln n)`.
    pub ratio: f64,
}

/// Streams the order-`n` sequence and records its discrepancy.
pub fn scaling_row(n: usize) -> Result<ScalingRow> {
    if n < 2 {
        return Err(Error::InvalidArgument("growth ratio needs n >= 2"));
    }
    if n > SCALING_HARD_MAX {
        return Err(Error::Capacity {
            what: "order",
            requested: n as u64,
            max: SCALING_HARD_MAX as u64,
        });
    }
    let mut tracker = DiscTracker::new();
    tracker.extend(fkm_stream(n)?);
    let report = tracker.report().ok_or(Error::EmptyWord)?;
    let ratio = (n as f64 * report.disc as f64)
        / (libm::ldexp(1.0, n as i32) * libm::log(n as f64));
    Ok(ScalingRow { n, disc: report.disc, position: report.argmax_position, ratio })
}

/// Validates a sweep range against `cap` (itself clamped to the hard max).
pub fn check_sweep_range(n_min: usize, n_max: usize, cap: usize) -> Result<()> {
    if n_min < 2 || n_min > n_max {
        return Err(Error::InvalidArgument("sweep range needs 2 <= min <= max"));
    }
    let cap = cap.min(SCALING_HARD_MAX);
    if n_max > cap {
        return Err(Error::Capacity { what: "order", requested: n_max as u64, max: cap as u64 });
    }
    Ok(())
}

/// Rows for `n_min..=n_max` in increasing `n`.
pub fn scaling_sweep(n_min: usize, n_max: usize, cap: usize) -> Result<Vec<ScalingRow>> {
    check_sweep_range(n_min, n_max, cap)?;
    (n_min..=n_max).map(scaling_row).collect()
}
