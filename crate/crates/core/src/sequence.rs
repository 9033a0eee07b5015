//! Generation of the lexicographically least de Bruijn sequence.
//!
//! The primary route concatenates, in lexicographic order, every Lyndon word
//! whose length divides the order `n`. Words are produced by the successor
//! rule on prenecklaces: extend the current word periodically to length `n`,
//! strip trailing ones and flip the last zero. The generator keeps one
//! length-`n` buffer, so memory does not depend on the stream position.
//!
//! The second route is the prefer-zero greedy construction seeded with `1^n`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::word::BitWord;

/// Largest order the streaming generator accepts.
pub const MAX_STREAM_ORDER: usize = 62;
/// Default cap for the greedy construction (2^26-bit window table).
pub const GREEDY_MAX_ORDER: usize = 26;
/// Cap for materialized Lyndon word lists.
pub const LYNDON_LIST_MAX_ORDER: usize = 24;

fn check_order(n: usize, max: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be at least 1"));
    }
    if n > max {
        return Err(Error::Capacity { what: "order", requested: n as u64, max: max as u64 });
    }
    Ok(())
}

/// Lending generator over the Lyndon words whose length divides `order`, in
/// lexicographic order, from `0` to `1`.
#[derive(Debug, Clone)]
pub struct LyndonStream {
    order: usize,
    buf: [u8; MAX_STREAM_ORDER],
    len: usize,
    started: bool,
    exhausted: bool,
}

impl LyndonStream {
    pub fn new(order: usize) -> Result<Self> {
        check_order(order, MAX_STREAM_ORDER)?;
        Ok(LyndonStream {
            order,
            buf: [0; MAX_STREAM_ORDER],
            len: 0,
            started: false,
            exhausted: false,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    /// Last word returned by [`next_word`](Self::next_word); empty before the first call.
    pub fn current(&self) -> &[u8] {
        &self.buf[..self.len]
    }

    /// Advances to the next Lyndon word of length dividing the order.
    pub fn next_word(&mut self) -> Option<&[u8]> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            self.len = 1;
            self.buf[0] = 0;
            return Some(&self.buf[..1]);
        }
        loop {
            if self.len == 1 && self.buf[0] == 1 {
                self.exhausted = true;
                return None;
            }
            self.advance_prenecklace();
            if self.order.is_multiple_of(self.len) {
                return Some(&self.buf[..self.len]);
            }
        }
    }

    fn advance_prenecklace(&mut self) {
        let n = self.order;
        for i in self.len..n {
            self.buf[i] = self.buf[i - self.len];
        }
        let mut len = n;
        while self.buf[len - 1] == 1 {
            len -= 1;
        }
        self.buf[len - 1] = 1;
        self.len = len;
    }
}

/// Symbol-by-symbol stream of the order-`n` sequence (2^n symbols).
#[derive(Debug, Clone)]
pub struct FordStream {
    words: LyndonStream,
    pos: usize,
    remaining: u64,
}

impl FordStream {
    pub fn new(order: usize) -> Result<Self> {
        let words = LyndonStream::new(order)?;
        Ok(FordStream { words, pos: 0, remaining: 1u64 << order })
    }

    pub fn order(&self) -> usize {
        self.words.order()
    }
}

impl Iterator for FordStream {
    type Item = u8;

    #[inline]
    fn next(&mut self) -> Option<u8> {
        if self.pos >= self.words.current().len() {
            self.words.next_word()?;
            self.pos = 0;
        }
        let s = self.words.current()[self.pos];
        self.pos += 1;
        self.remaining -= 1;
        Some(s)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, usize::try_from(self.remaining).ok())
    }
}

/// Streams the order-`n` sequence; see the module docs.
pub fn fkm_stream(n: usize) -> Result<FordStream> {
    FordStream::new(n)
}

/// Materializes the order-`n` sequence from the stream.
pub fn fkm_word(n: usize) -> Result<BitWord> {
    let symbols: Vec<u8> = fkm_stream(n)?.collect();
    BitWord::from_symbols(symbols)
}

/// Flat bitset indexed by window value.
struct WindowTable {
    bits: Vec<u64>,
}

impl WindowTable {
    fn new(order: usize) -> Self {
        let words = (1usize << order).div_ceil(64);
        WindowTable { bits: vec![0; words] }
    }

    /// Marks `v`; returns `false` if it was already present.
    #[inline]
    fn insert(&mut self, v: u64) -> bool {
        let (word, bit) = ((v / 64) as usize, v % 64);
        let mask = 1u64 << bit;
        let fresh = self.bits[word] & mask == 0;
        self.bits[word] |= mask;
        fresh
    }

    #[inline]
    fn contains(&self, v: u64) -> bool {
        self.bits[(v / 64) as usize] & (1u64 << (v % 64)) != 0
    }
}

/// Prefer-zero greedy construction with the default cap.
pub fn greedy_prefer_zero(n: usize) -> Result<BitWord> {
    greedy_prefer_zero_capped(n, GREEDY_MAX_ORDER)
}

/// Starting from the window `1^n` (not itself marked as seen), append 0 when
/// the new window is unseen, otherwise 1 when unseen, otherwise stop. The
/// appended symbols are returned; anything short of 2^n symbols is an error.
pub fn greedy_prefer_zero_capped(n: usize, cap: usize) -> Result<BitWord> {
    check_order(n, cap.min(MAX_STREAM_ORDER))?;
    let total = 1u64 << n;
    let mask = total - 1;
    let mut seen = WindowTable::new(n);
    let mut window = mask;
    let mut out = Vec::with_capacity(total as usize);
    loop {
        let zero = (window << 1) & mask;
        let one = zero | 1;
        if !seen.contains(zero) {
            window = zero;
            out.push(0);
        } else if !seen.contains(one) {
            window = one;
            out.push(1);
        } else {
            break;
        }
        seen.insert(window);
    }
    if out.len() as u64 != total {
        return Err(Error::Incomplete { emitted: out.len() as u64, expected: total });
    }
    BitWord::from_symbols(out)
}

/// `true` iff the 2^n cyclic windows of length `n` in `w` are pairwise distinct.
pub fn verify_debruijn(w: &[u8], n: usize) -> Result<bool> {
    check_order(n, 40)?;
    let total = 1u64 << n;
    if w.len() as u64 != total {
        return Err(Error::LengthMismatch { expected: total, actual: w.len() as u64 });
    }
    let mask = total - 1;
    let mut seen = WindowTable::new(n);
    let mut window = 0u64;
    for &s in &w[..n] {
        window = (window << 1) | u64::from(s);
    }
    // Windows start at 0..len; window i ends at symbol i + n - 1 (cyclic).
    for i in 0..w.len() {
        if !seen.insert(window) {
            return Ok(false);
        }
        let next = w[(i + n) % w.len()];
        window = ((window << 1) | u64::from(next)) & mask;
    }
    Ok(true)
}

/// All Lyndon words of length dividing `n`, in lexicographic order.
pub fn lyndon_words(n: usize) -> Result<Vec<BitWord>> {
    check_order(n, LYNDON_LIST_MAX_ORDER)?;
    let mut stream = LyndonStream::new(n)?;
    let mut words = Vec::new();
    while let Some(w) = stream.next_word() {
        words.push(BitWord::from_symbols(w.to_vec())?);
    }
    Ok(words)
}
