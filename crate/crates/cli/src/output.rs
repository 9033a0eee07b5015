//! CSV and JSON rendering. CSV is comma separated with a header row, LF line
//! endings and no quoting.

use std::fmt::Write as _;

use ford_disc_core::blocks::{BlockReport, CompositeCorrection, ScalingRow};
use ford_disc_core::counting::{CountTable, RootEstimate};
use ford_disc_core::CheckReport;
use serde_json::{json, Value};

/// `x` with `digits` significant digits in positional notation.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // Rounding may carry into a new leading digit (9.999995 -> 10.00000).
    let rounded: f64 = s.parse().unwrap_or(x);
    if rounded.abs().log10().floor() as i64 > magnitude && decimals > 0 {
        format!("{x:.prec$}", prec = decimals - 1)
    } else {
        s
    }
}

pub fn blocks_csv(blocks: &[BlockReport]) -> String {
    let mut out = String::from("k,length,word_count,skew,max_signed,min_signed\n");
    for b in blocks {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            b.k, b.length, b.word_count, b.skew, b.max_signed, b.min_signed
        );
    }
    out
}

pub fn blocks_json(blocks: &[BlockReport]) -> Value {
    Value::Array(
        blocks
            .iter()
            .map(|b| {
                json!({
                    "k": b.k,
                    "length": b.length,
                    "word_count": b.word_count,
                    "skew": b.skew,
                    "max_signed": b.max_signed,
                    "min_signed": b.min_signed,
                })
            })
            .collect(),
    )
}

pub fn counts_csv(table: &CountTable) -> String {
    let mut out = String::from("k,n,a,b\n");
    for n in 0..=table.n_max() {
        let _ = writeln!(out, "{},{},{},{}", table.k(), n, table.a(n), table.b(n));
    }
    out
}

pub fn root_csv(root: &RootEstimate) -> String {
    format!(
        "k,rho,residual\n{},{},{:.3e}\n",
        root.k,
        format_sig(root.value, 7),
        root.residual
    )
}

pub fn scaling_csv(rows: &[ScalingRow]) -> String {
    let mut out = String::from("n,disc,position,ratio\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{}", r.n, r.disc, r.position, format_sig(r.ratio, 6));
    }
    out
}

pub fn composite_csv(c: &CompositeCorrection) -> String {
    format!(
        "n,divisor_symbols,divisor_bound,crude_bound,holds\n{},{},{},{},{}\n",
        c.n,
        c.divisor_symbols,
        c.divisor_bound,
        format_sig(c.crude_bound, 6),
        c.holds()
    )
}

pub fn composite_json(c: &CompositeCorrection) -> Value {
    json!({
        "n": c.n,
        "divisor_symbols": c.divisor_symbols,
        "divisor_bound": c.divisor_bound.to_string(),
        "crude_bound": c.crude_bound,
        "within_divisor_bound": c.within_divisor_bound,
        "divisor_bound_below_crude": c.divisor_bound_below_crude,
    })
}

pub fn report_json(r: &CheckReport) -> Value {
    json!({
        "claim": r.claim,
        "range": r.range,
        "pass": r.passed(),
        "outcome": r.outcome.as_str(),
        "counterexample": r.counterexample,
        "observations": r.observations,
    })
}

pub fn reports_json(reports: &[CheckReport]) -> Value {
    Value::Array(reports.iter().map(report_json).collect())
}
