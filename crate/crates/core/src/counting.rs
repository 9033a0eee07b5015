//! Exact counts of `0^k`-free words and the sum of their skews.
//!
//! For a fixed run length `k`, `a_n` is the number of words of length `n`
//! with no subword `0^k` and `b_n` is the sum of their skews. Both satisfy
//! order-`k` linear recurrences, kept here in arbitrary precision so the
//! inequalities built on them can be checked without rounding. Floating point
//! only appears in the tail-bound estimates.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::RangeInclusive;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::check::{CheckReport, Outcome};
use crate::error::{Error, Result};

/// Tables `a_0..=a_N` and `b_0..=b_N` for one run length `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    k: usize,
    a: Vec<BigInt>,
    b: Vec<BigInt>,
}

impl CountTable {
    /// Wraps externally supplied columns without validating the recurrences.
    /// Used to feed deliberately corrupted tables to the checks.
    pub fn from_parts(k: usize, a: Vec<BigInt>, b: Vec<BigInt>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidArgument("run length k must be at least 2"));
        }
        if a.len() != b.len() || a.is_empty() {
            return Err(Error::InvalidArgument("count columns must be nonempty and equally long"));
        }
        Ok(CountTable { k, a, b })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Largest tabulated length.
    pub fn n_max(&self) -> usize {
        self.a.len() - 1
    }

    /// `alpha_k(n)`; panics past `n_max`.
    pub fn a(&self, n: usize) -> &BigInt {
        &self.a[n]
    }

    /// `beta_k(n)`; panics past `n_max`.
    pub fn b(&self, n: usize) -> &BigInt {
        &self.b[n]
    }

    pub fn alphas(&self) -> &[BigInt] {
        &self.a
    }

    pub fn betas(&self) -> &[BigInt] {
        &self.b
    }

    pub fn a_mut(&mut self) -> &mut [BigInt] {
        &mut self.a
    }

    pub fn b_mut(&mut self) -> &mut [BigInt] {
        &mut self.b
    }

    /// `a_{n+1} / a_n` as a float.
    pub fn growth_ratio(&self, n: usize) -> f64 {
        big_ratio_f64(&self.a[n + 1], &self.a[n])
    }
}

/// Tabulates both recurrences up to `n_max`.
pub fn build_table(k: usize, n_max: usize) -> Result<CountTable> {
    if k < 2 {
        return Err(Error::InvalidArgument("run length k must be at least 2"));
    }
    let mut a: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    let mut b: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n < k {
            a.push(BigInt::one() << n);
            b.push(BigInt::zero());
            continue;
        }
        let mut an = BigInt::zero();
        let mut bn = BigInt::zero();
        for j in 1..=k {
            an += &a[n - j];
            bn += &a[n - j] * (j as i64 - 2) + &b[n - j];
        }
        a.push(an);
        b.push(bn);
    }
    Ok(CountTable { k, a, b })
}

/// `num / den` as `f64` for arbitrarily large operands.
pub fn big_ratio_f64(num: &BigInt, den: &BigInt) -> f64 {
    let shift = num.bits().max(den.bits()).saturating_sub(60);
    let n = (num >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (den >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// `num / 2^shift` as `f64`.
fn dyadic_to_f64(num: &BigInt, shift: u64) -> f64 {
    let drop = num.bits().saturating_sub(62);
    let head = (num >> drop).to_f64().unwrap_or(f64::NAN);
    let exp = drop as i64 - shift as i64;
    libm::scalbn(head, exp.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
}

/// The dominant root of `z^k - sum_{j<k} z^j`, bracketed by exact bisection.
///
/// The root is held as the dyadic rational `numerator / 2^scale_bits`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootEstimate {
    pub k: usize,
    pub numerator: BigInt,
    pub scale_bits: u64,
    /// Nearest `f64` to the dyadic value.
    pub value: f64,
    /// `|f(value)|` with `f(z) = z^k - sum_{j<k} z^j`, evaluated exactly.
    pub residual: f64,
    /// `|g(value)|` with `g(z) = z^{k+1} - 2 z^k + 1 = (z - 1) f(z)`.
    pub residual_g: f64,
    /// Upper bound on the distance to the true root.
    pub precision: f64,
}

impl RootEstimate {
    /// Exact comparison of the dyadic value with `num / den` (`den > 0`).
    pub fn cmp_rational(&self, num: i64, den: i64) -> Ordering {
        let lhs = &self.numerator * BigInt::from(den);
        let rhs = BigInt::from(num) << self.scale_bits;
        lhs.cmp(&rhs)
    }

    /// `ceil(value * 10^digits)` computed exactly.
    pub fn ceil_fixed(&self, digits: u32) -> BigInt {
        let scaled = &self.numerator * BigInt::from(10u64).pow(digits);
        let den = BigInt::one() << self.scale_bits;
        let (q, r) = scaled.div_mod_floor(&den);
        if r.is_zero() {
            q
        } else {
            q + 1
        }
    }
}

/// Exact `2^{s k} f(m / 2^s)`.
fn f_scaled(k: usize, m: &BigInt, s: u64) -> BigInt {
    let mut acc = m.pow(k as u32);
    let mut power = BigInt::one();
    for j in 0..k {
        acc -= &power << (s * (k - j) as u64);
        power *= m;
    }
    acc
}

/// Exact `2^{s (k+1)} g(m / 2^s)`.
fn g_scaled(k: usize, m: &BigInt, s: u64) -> BigInt {
    let mk = m.pow(k as u32);
    m * &mk - (mk << (s + 1)) + (BigInt::one() << (s * (k as u64 + 1)))
}

const RHO_MAX_ITERATIONS: u32 = 512;

/// Bisection on `[3/2, 2]` until the bracket is narrower than `tol` and the
/// residual `|g|` at the midpoint is below `tol`.
pub fn rho(k: usize, tol: f64) -> Result<RootEstimate> {
    if k < 2 {
        return Err(Error::InvalidArgument("run length k must be at least 2"));
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidArgument("tolerance must be positive and finite"));
    }
    // Bracket [lo, lo + 1] / 2^s, starting from [3, 4] / 2.
    let mut lo = BigInt::from(3);
    let mut s: u64 = 1;
    for _ in 0..RHO_MAX_ITERATIONS {
        let mid = (&lo << 1) + 1;
        let ms = s + 1;
        let half_width = libm::scalbn(1.0, -(ms as i32));
        let g = g_scaled(k, &mid, ms);
        let residual_g = dyadic_to_f64(&g.abs(), ms * (k as u64 + 1));
        if half_width <= tol && residual_g <= tol {
            let f = f_scaled(k, &mid, ms);
            return Ok(RootEstimate {
                k,
                value: dyadic_to_f64(&mid, ms),
                residual: dyadic_to_f64(&f.abs(), ms * k as u64),
                residual_g,
                precision: half_width,
                numerator: mid,
                scale_bits: ms,
            });
        }
        lo = if f_scaled(k, &mid, ms).sign() == Sign::Minus { mid } else { lo << 1 };
        s = ms;
    }
    Err(Error::NonConvergence { iterations: RHO_MAX_ITERATIONS })
}

/// Tolerance used for the root inside the recurrence checks.
pub const RHO_CHECK_TOL: f64 = 1e-12;

fn require_n_max(table: &CountTable, n_max: usize) -> Result<()> {
    if n_max > table.n_max() {
        return Err(Error::Capacity {
            what: "table length",
            requested: n_max as u64,
            max: table.n_max() as u64,
        });
    }
    Ok(())
}

/// `a_{n-1} = k + sum_{j=3..k} (j-2) a_{n-j} + (k-1) sum_{j=0..n-k-1} a_j`
/// for `k >= 3` and `k+1 <= n <= n_max`.
pub fn check_alpha_identity(k: usize, n_max: usize) -> Result<CheckReport> {
    check_alpha_identity_on(&build_table(k, n_max)?, n_max)
}

pub fn check_alpha_identity_on(table: &CountTable, n_max: usize) -> Result<CheckReport> {
    let k = table.k();
    if k < 3 {
        return Err(Error::InvalidArgument("identity stated for k >= 3"));
    }
    if n_max < k + 1 {
        return Err(Error::InvalidArgument("identity needs n_max >= k + 1"));
    }
    require_n_max(table, n_max)?;
    let a = table.alphas();
    let prefix = prefix_sums(a);
    let mut report = CheckReport::new(
        "a_{n-1} = k + sum_{j=3..k}(j-2)a_{n-j} + (k-1) sum_{j<=n-k-1} a_j",
        format!("k={k}, {}<=n<={n_max}", k + 1),
    );
    let k_big = BigInt::from(k);
    for n in k + 1..=n_max {
        let mut rhs = k_big.clone() + &prefix[n - k] * (k as i64 - 1);
        for j in 3..=k {
            rhs += &a[n - j] * (j as i64 - 2);
        }
        if rhs != a[n - 1] {
            report.fail(format!("k={k} n={n}: a_(n-1)={} but right side={rhs}", a[n - 1]));
            break;
        }
    }
    Ok(report)
}

/// `b_n < 0` for `k >= 3` and `k+1 <= n <= n_max`. For `k = 2` the report is
/// out-of-range and only lists observations.
pub fn check_beta_negative(k: usize, n_max: usize) -> Result<CheckReport> {
    check_beta_negative_on(&build_table(k, n_max)?, n_max)
}

pub fn check_beta_negative_on(table: &CountTable, n_max: usize) -> Result<CheckReport> {
    require_n_max(table, n_max)?;
    let k = table.k();
    let b = table.betas();
    let mut report = CheckReport::new("b_n < 0", format!("k={k}, {}<=n<={n_max}", k + 1));
    let first_scoped = if k >= 3 { k + 1 } else { n_max + 1 };
    let negative_outside: Vec<usize> =
        (0..first_scoped.min(n_max + 1)).filter(|&n| b[n].is_negative()).collect();
    if !negative_outside.is_empty() {
        report.observe(format!("outside stated range, b_n < 0 at n in {negative_outside:?}"));
    }
    if k < 3 {
        report.outcome = Outcome::OutOfRange;
        report.observe(format!("claim stated for k >= 3; k={k} not checked"));
        return Ok(report);
    }
    if let Some(n) = (k + 1..=n_max).find(|&n| !b[n].is_negative()) {
        report.fail(format!("k={k} n={n}: b_n={}", b[n]));
    }
    Ok(report)
}

/// `a_n >= rho_k a_{n-1}` for `1 <= n <= n_max`, checked as
/// `a_n * 10^9 >= ceil((rho_k - 1e-9) * 10^9) * a_{n-1}` in integers.
/// Violations are flagged, not failed.
pub fn check_growth_ratio(k: usize, n_max: usize) -> Result<CheckReport> {
    check_growth_ratio_on(&build_table(k, n_max)?, n_max)
}

pub fn check_growth_ratio_on(table: &CountTable, n_max: usize) -> Result<CheckReport> {
    require_n_max(table, n_max)?;
    let k = table.k();
    let root = rho(k, RHO_CHECK_TOL)?;
    let scale = BigInt::from(1_000_000_000u64);
    let factor = root.ceil_fixed(9) - 1;
    let a = table.alphas();
    let mut report = CheckReport::new("a_n >= rho_k a_{n-1}", format!("k={k}, 1<=n<={n_max}"));
    for n in 1..=n_max {
        if &a[n] * &scale < &factor * &a[n - 1] {
            let ratio = big_ratio_f64(&a[n], &a[n - 1]);
            report.violation(
                Outcome::Flagged,
                format!("k={k} n={n}: a_n/a_(n-1) = {ratio:.9} < rho_k = {:.9}", root.value),
            );
        }
    }
    Ok(report)
}

/// `3 b_n >= -2 k a_n` for `k >= 4` and `k <= n <= n_max`.
pub fn check_mean_skew_bound(k: usize, n_max: usize) -> Result<CheckReport> {
    check_mean_skew_bound_on(&build_table(k, n_max)?, n_max)
}

pub fn check_mean_skew_bound_on(table: &CountTable, n_max: usize) -> Result<CheckReport> {
    let k = table.k();
    if k < 4 {
        return Err(Error::InvalidArgument("bound stated for k >= 4"));
    }
    require_n_max(table, n_max)?;
    let mut report = CheckReport::new("3 b_n >= -2 k a_n", format!("k={k}, {k}<=n<={n_max}"));
    for n in k..=n_max {
        let lhs = table.b(n) * 3;
        let rhs = table.a(n) * -(2 * k as i64);
        if lhs < rhs {
            let mean = big_ratio_f64(table.b(n), table.a(n)) / k as f64;
            report.fail(format!("k={k} n={n}: b_n/(k a_n) = {mean:.6} < -2/3"));
            break;
        }
    }
    Ok(report)
}

/// `b_n = -k - (k-1) sum_{j=0..n-k-1} a_j + sum_{j=1..k} b_{n-j}` for
/// `k >= 3` and `k+1 <= n <= n_max`.
pub fn check_beta_identity(k: usize, n_max: usize) -> Result<CheckReport> {
    check_beta_identity_on(&build_table(k, n_max)?, n_max)
}

pub fn check_beta_identity_on(table: &CountTable, n_max: usize) -> Result<CheckReport> {
    let k = table.k();
    if k < 3 {
        return Err(Error::InvalidArgument("closed form stated for k >= 3"));
    }
    if n_max < k + 1 {
        return Err(Error::InvalidArgument("closed form needs n >= k + 1"));
    }
    require_n_max(table, n_max)?;
    let prefix = prefix_sums(table.alphas());
    let b = table.betas();
    let mut report = CheckReport::new(
        "b_n = -k - (k-1) sum_{j<=n-k-1} a_j + sum_{j=1..k} b_{n-j}",
        format!("k={k}, {}<=n<={n_max}", k + 1),
    );
    for n in k + 1..=n_max {
        let mut rhs = -BigInt::from(k) - &prefix[n - k] * (k as i64 - 1);
        for j in 1..=k {
            rhs += &b[n - j];
        }
        if rhs != b[n] {
            report.fail(format!("k={k} n={n}: b_n={} but closed form={rhs}", b[n]));
            break;
        }
    }
    Ok(report)
}

/// Boundary values of the tables: `a_k = 2^k - 1`, `a_{k+1} = 2^{k+1} - 3`,
/// `b_k = -k` and `b_{k+1} = 1 - 3k`.
pub fn check_endpoints(k: usize) -> Result<CheckReport> {
    let table = build_table(k, k + 1)?;
    let mut report = CheckReport::new(
        "a_k = 2^k-1, a_(k+1) = 2^(k+1)-3, b_k = -k, b_(k+1) = 1-3k",
        format!("k={k}"),
    );
    let two = |e: usize| BigInt::one() << e;
    let ki = k as i64;
    let expected = [
        ("a_k", table.a(k), two(k) - 1),
        ("a_(k+1)", table.a(k + 1), two(k + 1) - 3),
        ("b_k", table.b(k), BigInt::from(-ki)),
        ("b_(k+1)", table.b(k + 1), BigInt::from(1 - 3 * ki)),
    ];
    for (name, got, want) in expected {
        if *got != want {
            report.fail(format!("k={k}: {name}={got}, expected {want}"));
        }
    }
    Ok(report)
}

fn prefix_sums(a: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(a.len() + 1);
    out.push(BigInt::zero());
    for x in a {
        let next = out.last().expect("nonempty") + x;
        out.push(next);
    }
    out
}

/// `2^m exp(-(m-k+1) / (12 * 2^k))`, the tail estimate on `alpha_k(m)`.
pub fn janson_upper(k: usize, m: usize) -> Result<f64> {
    if k < 2 || m < k {
        return Err(Error::InvalidArgument("tail bound needs k >= 2 and m >= k"));
    }
    let exponent = -((m - k + 1) as f64) / (12.0 * libm::ldexp(1.0, k as i32));
    Ok(libm::ldexp(libm::exp(exponent), m as i32))
}

/// `2^m (1 - max(0, m-k+1) 2^{-k})`, the union-bound lower estimate on `alpha_k(m)`.
pub fn alpha_lower_union(k: usize, m: usize) -> Result<f64> {
    if k < 1 {
        return Err(Error::InvalidArgument("run length k must be at least 1"));
    }
    let windows = (m + 1).saturating_sub(k) as f64;
    Ok(libm::ldexp(1.0 - windows * libm::ldexp(1.0, -(k as i32)), m as i32))
}

/// Checks both tail estimates against the exact tables over
/// `k in ks`, `k <= m <= m_max`. Returns `(upper, lower)` reports.
pub fn check_tail_bounds(
    ks: RangeInclusive<usize>,
    m_max: usize,
) -> Result<(CheckReport, CheckReport)> {
    let range = format!("{}<=k<={}, k<=m<={m_max}", ks.start(), ks.end());
    let mut upper = CheckReport::new("alpha_k(m) <= 2^m exp(-(m-k+1)/(12*2^k))", range.clone());
    let mut lower = CheckReport::new("alpha_k(m) >= 2^m (1 - max(0,m-k+1) 2^-k)", range);
    for k in ks {
        let table = build_table(k, m_max)?;
        for m in k..=m_max {
            let alpha = table.a(m).to_f64().unwrap_or(f64::INFINITY);
            let ub = janson_upper(k, m)?;
            let lb = alpha_lower_union(k, m)?;
            if alpha > ub && upper.counterexample.is_none() {
                upper.fail(format!("k={k} m={m}: alpha={alpha} > {ub}"));
            }
            if alpha < lb && lower.counterexample.is_none() {
                lower.fail(format!("k={k} m={m}: alpha={alpha} < {lb}"));
            }
        }
    }
    Ok((upper, lower))
}

/// Runs every recurrence check whose precondition admits each `k` on one
/// table per `k`.
pub fn recurrence_suite(ks: RangeInclusive<usize>, n_max: usize) -> Result<Vec<CheckReport>> {
    let tables = ks.map(|k| build_table(k, n_max)).collect::<Result<Vec<_>>>()?;
    recurrence_suite_on(&tables)
}

pub fn recurrence_suite_on(tables: &[CountTable]) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    for table in tables {
        let (k, n_max) = (table.k(), table.n_max());
        if k >= 3 && n_max > k {
            reports.push(check_alpha_identity_on(table, n_max)?);
            reports.push(check_beta_identity_on(table, n_max)?);
        }
        reports.push(check_beta_negative_on(table, n_max)?);
        reports.push(check_growth_ratio_on(table, n_max)?);
        if k >= 4 {
            reports.push(check_mean_skew_bound_on(table, n_max)?);
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn fibonacci_shift_for_k2() {
        let t = build_table(2, 8).unwrap();
        assert_eq!(t.alphas(), ints(&[1, 2, 3, 5, 8, 13, 21, 34, 55]).as_slice());
        assert_eq!(&t.betas()[..4], ints(&[0, 0, -2, -5]).as_slice());
    }

    #[test]
    fn boundary_values() {
        assert_eq!(build_table(3, 3).unwrap().a(3), &BigInt::from(7));
        let t = build_table(4, 5).unwrap();
        assert_eq!(t.a(5), &BigInt::from(29));
        // Enumeration gives 1 - 3k here; see check_endpoints.
        assert_eq!(t.b(5), &BigInt::from(-11));
        assert!(build_table(1, 5).is_err());
        assert_eq!(build_table(5, 0).unwrap().n_max(), 0);
    }

    #[test]
    fn endpoints_hold() {
        for k in 2..=64 {
            assert!(check_endpoints(k).unwrap().passed(), "k = {k}");
        }
    }

    #[test]
    fn root_values() {
        let r2 = rho(2, 1e-12).unwrap();
        assert!((r2.value - (1.0 + libm::sqrt(5.0)) / 2.0).abs() < 1e-12);
        assert_eq!(r2.cmp_rational(5, 3), Ordering::Less);
        let r3 = rho(3, 1e-12).unwrap();
        assert!((r3.value - 1.839_286_755_2).abs() < 1e-10);
        assert!(r3.residual < 1e-12);
        let r10 = rho(10, 1e-12).unwrap();
        assert!(r10.value > 1.999 && r10.value < 2.0);
        assert_eq!(r10.cmp_rational(2, 1), Ordering::Less);
    }

    #[test]
    fn root_residual_is_below_tolerance_for_long_runs() {
        for k in [16, 32, 48] {
            let r = rho(k, 1e-12).unwrap();
            assert!(r.residual_g < 1e-12, "k = {k}: {}", r.residual_g);
            assert!(r.precision <= 1e-12);
        }
    }

    #[test]
    fn root_rejects_bad_input() {
        assert!(rho(1, 1e-6).is_err());
        assert!(rho(3, 0.0).is_err());
        assert!(rho(3, f64::NAN).is_err());
        assert_eq!(rho(3, 1e-300), Err(Error::NonConvergence { iterations: RHO_MAX_ITERATIONS }));
    }

    #[test]
    fn ceil_fixed_is_exact() {
        let r = RootEstimate {
            k: 2,
            numerator: BigInt::from(3),
            scale_bits: 1,
            value: 1.5,
            residual: 0.0,
            residual_g: 0.0,
            precision: 0.0,
        };
        assert_eq!(r.ceil_fixed(9), BigInt::from(1_500_000_000u64));
        let r = RootEstimate { numerator: BigInt::from(7), scale_bits: 2, ..r };
        assert_eq!(r.ceil_fixed(0), BigInt::from(2));
    }

    #[test]
    fn alpha_identity_examples() {
        assert!(check_alpha_identity(3, 50).unwrap().passed());
        assert!(check_alpha_identity(5, 6).unwrap().passed());
        assert!(check_alpha_identity(2, 10).is_err());
        assert!(check_alpha_identity(5, 5).is_err());
    }

    #[test]
    fn alpha_identity_k5_n6() {
        let t = build_table(5, 6).unwrap();
        let a = |i: usize| t.a(i).to_i64().unwrap();
        let rhs = 5 + a(3) + 2 * a(2) + 3 * a(1) + 4 * a(0);
        assert_eq!(rhs, 31);
        assert_eq!(a(5), 31);
    }

    #[test]
    fn cor3_examples() {
        assert!(check_beta_negative(3, 200).unwrap().passed());
        assert_eq!(build_table(3, 4).unwrap().b(4), &BigInt::from(-8));
        let r = check_beta_negative(2, 2).unwrap();
        assert_eq!(r.outcome, Outcome::OutOfRange);
        assert!(r.counterexample.is_none());
        assert!(r.observations[0].contains("[2]"));
    }

    #[test]
    fn growth_ratio_flags_small_n() {
        let r = check_growth_ratio(4, 40).unwrap();
        assert_eq!(r.outcome, Outcome::Flagged);
        assert!(r.counterexample.as_deref().unwrap().starts_with("k=4 n=4:"));
        assert!(!r.observations.iter().any(|o| o.starts_with("k=4 n=5:")));
        let r2 = check_growth_ratio(2, 5).unwrap();
        assert!(r2.counterexample.as_deref().unwrap().starts_with("k=2 n=2:"));
        assert!(!r2.is_gating_failure());
    }

    #[test]
    fn mean_skew_bound_examples() {
        assert!(check_mean_skew_bound(4, 22).unwrap().passed());
        let r = check_mean_skew_bound(4, 500).unwrap();
        assert_eq!(r.outcome, Outcome::Fail);
        assert!(r.counterexample.unwrap().starts_with("k=4 n=23:"));
        assert!(check_mean_skew_bound(9, 500).unwrap().passed());
        assert!(check_mean_skew_bound(3, 10).is_err());
        let t = build_table(4, 5).unwrap();
        assert!(t.b(5) * 3 >= t.a(5) * -8);
    }

    #[test]
    fn eq1_examples() {
        assert!(check_beta_identity(3, 100).unwrap().passed());
        assert!(check_beta_identity(4, 5).unwrap().passed());
        assert!(check_beta_identity(5, 5).is_err());
    }

    #[test]
    fn corrupted_table_is_caught() {
        let mut t = build_table(4, 30).unwrap();
        t.b_mut()[20] += 1;
        let r = check_beta_identity_on(&t, 30).unwrap();
        assert_eq!(r.outcome, Outcome::Fail);
        assert!(r.counterexample.unwrap().starts_with("k=4 n=20:"));
        let t = CountTable::from_parts(3, ints(&[1, 2, 4, 9, 13]), ints(&[0, 0, 0, -3, -8])).unwrap();
        assert!(check_alpha_identity_on(&t, 4).unwrap().is_gating_failure());
        assert!(CountTable::from_parts(3, vec![], vec![]).is_err());
    }

    #[test]
    fn tail_bound_examples() {
        assert!(build_table(3, 20).unwrap().a(20).to_f64().unwrap() <= janson_upper(3, 20).unwrap());
        let ub = janson_upper(2, 2).unwrap();
        assert!((ub - 4.0 * libm::exp(-1.0 / 48.0)).abs() < 1e-12);
        assert!(ub > 3.0 && ub < 3.92);
        assert!(janson_upper(3, 2).is_err());
        assert_eq!(alpha_lower_union(2, 3).unwrap(), 4.0);
        assert_eq!(alpha_lower_union(5, 5).unwrap(), 31.0);
        assert_eq!(alpha_lower_union(3, 2).unwrap(), 4.0);
        let (u, l) = check_tail_bounds(2..=10, 40).unwrap();
        assert!(u.passed() && l.passed());
    }

    #[test]
    fn big_ratio_handles_huge_values() {
        let a = BigInt::one() << 5000;
        let b = BigInt::from(3) << 4999;
        assert!((big_ratio_f64(&a, &b) - 2.0 / 3.0).abs() < 1e-15);
    }
}
