//! Construction and analysis of the lexicographically least binary de Bruijn
//! sequence (the Ford sequence) of order `n`.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`word`]: skew, discrepancy, rotations, Lyndon tests and zero-run
//!   statistics on finite binary words;
//! * [`sequence`]: constant-memory streaming generation of the Ford sequence
//!   from Lyndon words, the prefer-zero greedy construction and a de Bruijn
//!   checker;
//! * [`counting`]: exact tables of the number of `0^k`-free words and the sum
//!   of their skews, the dominant root of their characteristic polynomial,
//!   and finite-range checks of the inequalities built on them;
//! * [`blocks`]: decomposition of the sequence into blocks grouped by the
//!   leading zero run of each Lyndon word, blockwise discrepancy and the
//!   growth sweep;
//! * [`oracle`]: naive enumerate-and-filter reference implementations.

#![no_std]

extern crate alloc;

pub mod blocks;
pub mod check;
pub mod counting;
mod error;
pub mod oracle;
pub mod sequence;
pub mod word;

pub use check::{CheckReport, Outcome};
pub use error::{Error, Result};
pub use word::{BitWord, DiscReport, DiscTracker, RunStats};

/// `true` iff `n` is prime.
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
