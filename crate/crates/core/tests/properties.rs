use ford_disc_core::blocks::{decompose, disc_blockwise, visit_block_words, DEFAULT_MAX_ORDER};
use ford_disc_core::counting::{build_table, rho};
use ford_disc_core::oracle::{self, OracleConfig};
use ford_disc_core::sequence::{fkm_stream, fkm_word, greedy_prefer_zero, lyndon_words, verify_debruijn};
use ford_disc_core::word::{self, BitWord};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn bits(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..=1, 0..=max_len)
}

fn nonempty_bits(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..=1, 1..=max_len)
}

fn is_periodic(w: &[u8]) -> bool {
    (1..w.len()).any(|p| w.len().is_multiple_of(p) && (0..w.len()).all(|i| w[i] == w[i % p]))
}

proptest! {
    #[test]
    fn skew_is_additive(x in bits(32), y in bits(32)) {
        let xy: Vec<u8> = x.iter().chain(&y).copied().collect();
        prop_assert_eq!(word::skew(&xy), word::skew(&x) + word::skew(&y));
    }

    #[test]
    fn disc_bounded_by_length(w in nonempty_bits(40)) {
        let r = word::discrepancy(&w).unwrap();
        let constant = w.iter().all(|&s| s == w[0]);
        prop_assert!(r.disc <= w.len() as u64);
        prop_assert_eq!(r.disc == w.len() as u64, constant);
        prop_assert_eq!(r.disc, r.max_signed.unsigned_abs().max(r.min_signed.unsigned_abs()));
        prop_assert_eq!(r.disc, oracle::disc_brute(&w));
    }

    #[test]
    fn min_rotation_is_rotation_invariant(w in nonempty_bits(16), j in 0usize..16) {
        let word = BitWord::from_symbols(w.clone()).unwrap();
        let least = word.min_rotation().unwrap();
        let naive = oracle::min_rotation_naive(&w);
        prop_assert_eq!(least.as_slice(), naive.as_slice());
        prop_assert_eq!(&least.min_rotation().unwrap(), &least);
        prop_assert_eq!(word.rotated(j).min_rotation().unwrap(), least);
    }

    #[test]
    fn lyndon_agrees_with_naive(w in nonempty_bits(16)) {
        prop_assert_eq!(word::is_lyndon(&w), oracle::is_lyndon_naive(&w));
    }

    #[test]
    fn aperiodic_words_have_one_lyndon_rotation(w in nonempty_bits(16)) {
        prop_assume!(!is_periodic(&w));
        let word = BitWord::from_symbols(w).unwrap();
        let count = (0..word.len()).filter(|&j| word.rotated(j).is_lyndon()).count();
        prop_assert_eq!(count, 1);
    }

    #[test]
    fn cyclic_run_matches_doubled_word(w in nonempty_bits(16)) {
        prop_assume!(w.contains(&1));
        let cyclic = word::zero_run_stats(&w, true);
        let doubled: Vec<u8> = w.iter().chain(&w).copied().collect();
        let linear = word::zero_run_stats(&doubled, false);
        prop_assert_eq!(cyclic.max_run, linear.max_run);
        prop_assert_eq!(cyclic.max_run, oracle::cyclic_max_zero_run_naive(&w));
        prop_assert_eq!(cyclic.run_count, cyclic.run_print.len());
    }

    #[test]
    fn run_print_lists_runs(w in nonempty_bits(16), cyclic in any::<bool>()) {
        let s = word::zero_run_stats(&w, cyclic);
        prop_assert_eq!(s.max_run == 0, !w.contains(&0));
        let n = w.len();
        for &start in &s.run_print {
            for d in 0..s.max_run {
                prop_assert_eq!(w[(start + d) % n], 0);
            }
        }
    }
}

#[test]
fn constructions_agree_through_order_16() {
    for n in 1..=16 {
        let stream = fkm_word(n).unwrap();
        assert_eq!(greedy_prefer_zero(n).unwrap(), stream, "n = {n}");
        assert!(verify_debruijn(stream.as_slice(), n).unwrap());
    }
}

#[test]
fn lyndon_list_concatenates_to_stream() {
    for n in 1..=14 {
        let mut joined = BitWord::new();
        for w in lyndon_words(n).unwrap() {
            assert!(w.is_lyndon());
            assert_eq!(n % w.len(), 0);
            joined.extend_from_word(&w);
        }
        assert_eq!(joined, fkm_word(n).unwrap());
    }
}

#[test]
fn lyndon_words_strictly_increase() {
    let words = lyndon_words(12).unwrap();
    assert!(words.windows(2).all(|p| p[0] < p[1]));
}

#[test]
fn stream_prefix_sums_are_nonnegative() {
    for n in 1..=20 {
        let mut sum = 0i64;
        for s in fkm_stream(n).unwrap() {
            sum += if s == 0 { 1 } else { -1 };
            assert!(sum >= 0, "n = {n}");
        }
        assert_eq!(sum, 0);
    }
}

#[test]
fn stream_is_least_debruijn_word() {
    let cfg = OracleConfig::default();
    for n in 1..=4 {
        assert_eq!(oracle::count_debruijn_exhaustive(&cfg, n).unwrap().least, fkm_word(n).unwrap());
    }
}

#[test]
fn tables_match_enumeration() {
    let cfg = OracleConfig::default();
    for k in 2..=6 {
        let t = build_table(k, 16).unwrap();
        for m in 0..=16 {
            assert_eq!(t.a(m), &BigInt::from(oracle::alpha_brute(&cfg, k, m).unwrap()));
            assert_eq!(t.b(m), &BigInt::from(oracle::beta_brute(&cfg, k, m).unwrap()));
        }
    }
}

#[test]
fn tables_are_monotone_in_k() {
    let tables: Vec<_> = (2..=12).map(|k| build_table(k, 60).unwrap()).collect();
    for n in 0..=60 {
        let two_n = BigInt::from(1) << n;
        for pair in tables.windows(2) {
            assert!(pair[0].a(n) <= pair[1].a(n));
        }
        assert!(tables.iter().all(|t| t.a(n) <= &two_n));
    }
}

#[test]
fn root_is_consistent_with_both_polynomials() {
    for k in 2..=20 {
        let tol = 1e-12;
        let r = rho(k, tol).unwrap();
        assert!(r.residual_g <= 10.0 * tol);
        assert!(r.value > 1.5 && r.value < 2.0);
        // (z - 1) f(z) = g(z)
        assert!(((r.value - 1.0) * r.residual - r.residual_g).abs() < 1e-9);
    }
}

#[test]
fn growth_ratio_converges_to_root() {
    for k in 2..=8 {
        let t = build_table(k, 201).unwrap();
        let r = rho(k, 1e-12).unwrap();
        assert!((t.growth_ratio(200) - r.value).abs() < 1e-6, "k = {k}");
    }
}

#[test]
fn block_classes_never_increase_and_reassemble() {
    for n in [3, 5, 7, 11, 13, 17, 19] {
        let mut last = usize::MAX;
        let mut joined = vec![0u8];
        visit_block_words(n, DEFAULT_MAX_ORDER, |k, w| {
            assert!(k <= last);
            last = k;
            joined.extend_from_slice(w);
        })
        .unwrap();
        joined.push(1);
        assert_eq!(joined, fkm_word(n).unwrap().into_symbols(), "n = {n}");
    }
}

#[test]
fn blocks_match_block_oracle() {
    let cfg = OracleConfig::default();
    for n in [5, 7, 11, 13] {
        for b in decompose(n).unwrap() {
            let brute = oracle::ell_brute(&cfg, n, b.k).unwrap();
            assert_eq!(b.length, brute.len() as u64);
            assert_eq!(b.skew, brute.skew());
        }
    }
}

#[test]
fn blockwise_exact_matches_streamed_disc() {
    for n in [5, 7, 11, 13, 17] {
        let r = disc_blockwise(n).unwrap();
        let streamed = fkm_word(n).unwrap().discrepancy().unwrap();
        assert_eq!(r.exact, streamed, "n = {n}");
        assert!(r.blockwise_bound >= r.exact.disc as i64);
        assert!(r.boundary_sums.iter().all(|&s| s >= 0));
    }
}

#[test]
fn discrepancy_matches_brute_force_on_random_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let len = rng.gen_range(1..=1 << 16);
        let w: Vec<u8> = (0..len).map(|_| rng.gen_range(0..=1)).collect();
        assert_eq!(word::discrepancy(&w).unwrap().disc, oracle::disc_brute(&w));
    }
}
