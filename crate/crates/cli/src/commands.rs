use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ford_disc_core::blocks::{
    check_sweep_range, composite_correction, decompose_capped, disc_blockwise_capped,
    sandwich_check_capped, scaling_row, ScalingRow, DEFAULT_MAX_ORDER,
};
use ford_disc_core::counting::{
    build_table, check_endpoints, check_tail_bounds, recurrence_suite_on, rho, CountTable,
};
use ford_disc_core::oracle::{cross_checks, OracleConfig};
use ford_disc_core::sequence::{fkm_stream, greedy_prefer_zero_capped, MAX_STREAM_ORDER};
use ford_disc_core::{is_prime, CheckReport, DiscTracker};
use serde_json::json;

use crate::format::{write_bits, write_packed, SequenceFormat};
use crate::output;
use crate::{CliError, MAX_ORDER_ENV};

type CliResult = Result<(), CliError>;

#[derive(Debug, Parser)]
#[command(name = "ford-disc", version, about = "Lexicographically least de Bruijn sequence: generation and discrepancy analysis")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the order-N sequence to a file or standard output.
    Generate(GenerateArgs),
    /// Block decomposition, blockwise discrepancy and divisor correction.
    Analyze(AnalyzeArgs),
    /// Exact count tables and the dominant root.
    Counts(CountsArgs),
    /// Run recurrence checks and oracle cross-checks.
    Verify(VerifyArgs),
    /// Discrepancy growth sweep over a range of orders.
    Scaling(ScalingArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Method {
    Fkm,
    Greedy,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BitsFormat {
    Bits,
    Packed,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ReportFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub order: usize,
    #[arg(long, value_enum, default_value = "fkm")]
    pub method: Method,
    #[arg(long, value_enum, default_value = "bits")]
    pub format: BitsFormat,
    /// Output file; standard output when omitted.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub order: usize,
    /// Per-block table (prime orders only).
    #[arg(long, conflicts_with = "composite")]
    pub blocks: bool,
    /// With --blocks, also check the block skew sandwich.
    #[arg(long, requires = "blocks")]
    pub check: bool,
    /// Divisor-length correction report (composite orders only).
    #[arg(long)]
    pub composite: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: ReportFormat,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CountsArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 20)]
    pub max_n: usize,
    /// Print the dominant root instead of the table.
    #[arg(long)]
    pub rho: bool,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Recurrence and tail-bound checks only.
    #[arg(long)]
    pub lemmas: bool,
    /// Oracle cross-checks only.
    #[arg(long)]
    pub oracles: bool,
    /// Restrict the recurrence checks to one run length.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 500)]
    pub max_n: usize,
    #[arg(long, default_value_t = 22)]
    pub max_word_length: usize,
    #[arg(long, default_value_t = 4)]
    pub max_debruijn_order: usize,
    /// Corrupt one table entry before checking.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScalingArgs {
    #[arg(long)]
    pub min: usize,
    #[arg(long)]
    pub max: usize,
    /// CSV output file; standard output when omitted.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

/// Streaming cap from the environment, defaulting to 26.
pub fn max_order() -> Result<usize, CliError> {
    match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_ORDER_ENV} must be an integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn open_output(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit(path: Option<&Path>, text: &str) -> CliResult {
    let mut out = open_output(path)?;
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

pub fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Generate(a) => generate(&a),
        Command::Analyze(a) => analyze(&a),
        Command::Counts(a) => counts(&a),
        Command::Verify(a) => verify(&a),
        Command::Scaling(a) => scaling(&a),
    }
}

fn generate(args: &GenerateArgs) -> CliResult {
    let n = args.order;
    if n == 0 {
        return Err(CliError::Usage("order must be at least 1".into()));
    }
    let cap = max_order()?.min(MAX_STREAM_ORDER);
    if n > cap {
        return Err(CliError::Capacity(format!("order {n} exceeds capacity {cap}")));
    }
    let symbols: Box<dyn Iterator<Item = u8>> = match args.method {
        Method::Fkm => Box::new(fkm_stream(n)?),
        Method::Greedy => Box::new(greedy_prefer_zero_capped(n, cap)?.into_symbols().into_iter()),
    };
    let mut tracker = DiscTracker::new();
    let tracked = symbols.inspect(|&s| tracker.push(s));
    let format = match args.format {
        BitsFormat::Bits => SequenceFormat::Bits,
        BitsFormat::Packed => SequenceFormat::Packed,
    };
    let mut out = open_output(args.output.as_deref())?;
    match format {
        SequenceFormat::Bits => write_bits(&mut out, tracked)?,
        SequenceFormat::Packed => write_packed(&mut out, n as u8, 1u64 << n, tracked)?,
    };
    out.flush()?;
    drop(out);
    let report = tracker.report().expect("sequence is nonempty");
    let summary = format!(
        "order={n} length={} disc={} position={}",
        tracker.len(),
        report.disc,
        report.argmax_position
    );
    if args.output.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(())
}

fn analyze(args: &AnalyzeArgs) -> CliResult {
    let n = args.order;
    let cap = max_order()?;
    let path = args.output.as_deref();
    if args.composite {
        if n > DEFAULT_MAX_ORDER {
            return Err(CliError::Capacity(format!("order {n} exceeds capacity {DEFAULT_MAX_ORDER}")));
        }
        let c = composite_correction(n)?;
        return match args.format {
            ReportFormat::Csv => emit(path, &output::composite_csv(&c)),
            ReportFormat::Json => emit(path, &format!("{:#}\n", output::composite_json(&c))),
        };
    }
    if args.blocks {
        if !is_prime(n) {
            return Err(CliError::Usage(format!(
                "order {n} is not prime; use `analyze --order {n} --composite` for composite orders"
            )));
        }
        let blocks = decompose_capped(n, cap)?;
        let check = if args.check { Some(sandwich_check_capped(n, cap)?) } else { None };
        let text = match args.format {
            ReportFormat::Csv => {
                let mut text = output::blocks_csv(&blocks);
                if let Some(r) = &check {
                    text.push_str(&format!("# sandwich {} ({})\n", r.outcome, r.range));
                }
                text
            }
            ReportFormat::Json => {
                let mut v = json!({ "order": n, "blocks": output::blocks_json(&blocks) });
                if let Some(r) = &check {
                    v["sandwich"] = output::report_json(r);
                }
                format!("{v:#}\n")
            }
        };
        emit(path, &text)?;
        return match check {
            Some(r) if r.is_gating_failure() => Err(CliError::Verification(
                r.counterexample.unwrap_or_default(),
            )),
            _ => Ok(()),
        };
    }
    // Plain summary: blockwise for primes >= 5, streamed otherwise.
    if n == 0 {
        return Err(CliError::Usage("order must be at least 1".into()));
    }
    if n > cap.min(MAX_STREAM_ORDER) {
        return Err(CliError::Capacity(format!("order {n} exceeds capacity {cap}")));
    }
    let text = if n >= 5 && is_prime(n) {
        let r = disc_blockwise_capped(n, cap)?;
        match args.format {
            ReportFormat::Csv => format!(
                "n,disc,position,blockwise_bound\n{n},{},{},{}\n",
                r.exact.disc, r.exact.argmax_position, r.blockwise_bound
            ),
            ReportFormat::Json => format!(
                "{:#}\n",
                json!({
                    "n": n,
                    "disc": r.exact.disc,
                    "position": r.exact.argmax_position,
                    "max_signed": r.exact.max_signed,
                    "min_signed": r.exact.min_signed,
                    "blockwise_bound": r.blockwise_bound,
                    "boundary_sums": r.boundary_sums,
                })
            ),
        }
    } else {
        let mut tracker = DiscTracker::new();
        tracker.extend(fkm_stream(n)?);
        let r = tracker.report().expect("nonempty");
        match args.format {
            ReportFormat::Csv => {
                format!("n,disc,position\n{n},{},{}\n", r.disc, r.argmax_position)
            }
            ReportFormat::Json => format!(
                "{:#}\n",
                json!({ "n": n, "disc": r.disc, "position": r.argmax_position })
            ),
        }
    };
    emit(path, &text)
}

fn counts(args: &CountsArgs) -> CliResult {
    if args.k < 2 {
        return Err(CliError::Usage("k must be at least 2".into()));
    }
    let path = args.output.as_deref();
    if args.rho {
        let root = rho(args.k, args.tol)?;
        return emit(path, &output::root_csv(&root));
    }
    let table = build_table(args.k, args.max_n)?;
    emit(path, &output::counts_csv(&table))
}

/// Recurrence grid used when no `--k` is given.
const DEFAULT_K_RANGE: std::ops::RangeInclusive<usize> = 2..=10;

fn verify(args: &VerifyArgs) -> CliResult {
    let run_lemmas = args.lemmas || !args.oracles;
    let run_oracles = args.oracles || !args.lemmas;
    let mut reports: Vec<CheckReport> = Vec::new();
    if run_lemmas {
        let ks = match args.k {
            Some(k) if k < 2 => return Err(CliError::Usage("k must be at least 2".into())),
            Some(k) => k..=k,
            None => DEFAULT_K_RANGE,
        };
        let mut tables: Vec<CountTable> =
            ks.clone().map(|k| build_table(k, args.max_n)).collect::<Result<_, _>>()?;
        if args.inject_fault {
            let table = &mut tables[0];
            let n = table.n_max();
            table.b_mut()[n] += 1;
            table.a_mut()[n] += 1;
        }
        reports.extend(recurrence_suite_on(&tables)?);
        if args.k.is_none() {
            let mut endpoints = CheckReport::new("endpoint values", "2<=k<=64".to_string());
            for k in 2..=64 {
                if let Some(c) = check_endpoints(k)?.counterexample {
                    endpoints.outcome = ford_disc_core::Outcome::Fail;
                    endpoints.counterexample.get_or_insert(c);
                }
            }
            reports.push(endpoints);
            let (upper, lower) = check_tail_bounds(2..=10, 40)?;
            reports.push(upper);
            reports.push(lower);
        }
    }
    if run_oracles {
        let cfg = OracleConfig {
            max_word_length: args.max_word_length,
            max_debruijn_order: args.max_debruijn_order,
        };
        reports.extend(cross_checks(&cfg)?);
    }
    emit(args.output.as_deref(), &format!("{:#}\n", output::reports_json(&reports)))?;
    match reports.iter().find(|r| r.is_gating_failure()) {
        Some(r) => Err(CliError::Verification(format!(
            "{} [{}]: {}",
            r.claim,
            r.range,
            r.counterexample.as_deref().unwrap_or("-")
        ))),
        None => Ok(()),
    }
}

fn scaling(args: &ScalingArgs) -> CliResult {
    let cap = max_order()?;
    check_sweep_range(args.min, args.max, cap)?;
    if args.threads == 0 {
        return Err(CliError::Usage("threads must be at least 1".into()));
    }
    let orders: Vec<usize> = (args.min..=args.max).collect();
    let rows = if args.threads == 1 {
        orders.iter().map(|&n| scaling_row(n)).collect::<Result<Vec<_>, _>>()?
    } else {
        parallel_rows(&orders, args.threads)?
    };
    emit(args.csv.as_deref(), &output::scaling_csv(&rows))
}

/// Per-order workers pulling from a shared counter; rows merged in order.
fn parallel_rows(orders: &[usize], threads: usize) -> Result<Vec<ScalingRow>, CliError> {
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Result<ScalingRow, ford_disc_core::Error>>>> =
        Mutex::new(vec![None; orders.len()]);
    std::thread::scope(|scope| {
        for _ in 0..threads.min(orders.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&n) = orders.get(i) else { break };
                let row = scaling_row(n);
                slots.lock().expect("poisoned")[i] = Some(row);
            });
        }
    });
    slots
        .into_inner()
        .expect("poisoned")
        .into_iter()
        .map(|slot| slot.expect("every order is processed").map_err(CliError::from))
        .collect()
}
