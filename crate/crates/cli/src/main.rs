//! `ccodes`: weight enumerators and sizes of binary linear congruence codes.

mod grid;
mod params;
mod record;
mod run;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use grid::{param_columns, CodeArgs, FamilyArg, Instance};
use params::{usage, UsageError};
use record::{Format, OutputRecord};
use run::{applicable, evaluate, verify, Evaluation, Method, Verdict};

#[derive(Debug, Parser)]
#[command(name = "ccodes", about = "Weight enumerators of binary linear congruence codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the weight enumerator and size of each selected code.
    Enum {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        /// Method to use; defaults to the first available of exact, closed, brute.
        #[arg(long, value_delimiter = ',')]
        methods: Vec<Method>,
    },
    /// Write a CSV table of one quantity over a parameter grid.
    Table {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value = "size")]
        quantity: Quantity,
        #[arg(long, value_delimiter = ',')]
        methods: Vec<Method>,
    },
    /// Cross-check computation methods over a parameter grid.
    Verify {
        #[command(flatten)]
        code: CodeArgs,
        /// Methods to compare (default: all that apply).
        #[arg(long, value_delimiter = ',')]
        methods: Vec<Method>,
        /// Verify N random BLCC specs instead of a grid.
        #[arg(long, value_name = "N")]
        random: Option<usize>,
        #[arg(long, value_name = "S", default_value_t = 0)]
        seed: u64,
        /// Suppress the banner.
        #[arg(long)]
        quiet: bool,
    },
    /// Print the version.
    Version,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Quantity {
    Size,
    Nt,
    Enumerator,
}

enum Failure {
    Usage(UsageError),
    Io(io::Error),
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

#[cfg(feature = "parallel")]
fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.iter().map(f).collect()
}

fn pick_method(inst: &Instance, methods: &[Method]) -> Result<Method, UsageError> {
    let candidates: &[Method] = if methods.is_empty() {
        &[Method::Exact, Method::Closed, Method::Brute]
    } else {
        methods
    };
    match candidates {
        [single] if !applicable(inst, *single) => Err(usage(format!(
            "method {} is not available for family {}",
            single.name(),
            inst.family.name()
        ))),
        [single] => Ok(*single),
        _ if !methods.is_empty() => Err(usage("enum and table take a single --methods value")),
        _ => candidates
            .iter()
            .copied()
            .find(|&m| applicable(inst, m))
            .ok_or_else(|| usage("no method available for this instance")),
    }
}

fn evaluate_all(instances: &[Instance], methods: &[Method]) -> Result<Vec<Evaluation>, UsageError> {
    par_map(instances, |inst| {
        let method = pick_method(inst, methods)?;
        evaluate(inst, method).map_err(|e| usage(e.to_string()))
    })
    .into_iter()
    .collect()
}

fn cmd_enum(code: &CodeArgs, format: Format, methods: &[Method], out: &mut impl Write) -> Result<(), Failure> {
    let instances = grid::expand(code)?;
    let evals = evaluate_all(&instances, methods)?;
    if format == Format::Csv {
        writeln!(out, "{}", OutputRecord::CSV_HEADER)?;
    }
    for (inst, eval) in instances.iter().zip(&evals) {
        writeln!(out, "{}", eval.record(inst).render(format))?;
    }
    Ok(())
}

fn cmd_table(code: &CodeArgs, quantity: Quantity, methods: &[Method], out: &mut impl Write) -> Result<(), Failure> {
    let qary = code.q.is_some();
    if qary && quantity != Quantity::Size {
        return Err(usage("q-ary tables only support --quantity size").into());
    }
    let mut header: Vec<&str> = param_columns(code.family, qary).to_vec();
    match quantity {
        Quantity::Size => header.push("size"),
        Quantity::Nt => header.extend(["t", "count"]),
        Quantity::Enumerator => header.extend(["size", "enumerator"]),
    }
    let instances = grid::expand(code)?;
    let evals = evaluate_all(&instances, methods)?;
    writeln!(out, "{}", header.join(","))?;
    for (inst, eval) in instances.iter().zip(&evals) {
        let cells: Vec<&str> = inst.params.iter().map(|(_, v)| v.as_str()).collect();
        let prefix = cells.join(",");
        match quantity {
            Quantity::Size => writeln!(out, "{prefix},{}", eval.size)?,
            Quantity::Nt | Quantity::Enumerator => {
                let w = eval
                    .enumerator
                    .as_ref()
                    .ok_or_else(|| usage(format!("method {} gives no enumerator", eval.method.name())))?;
                if quantity == Quantity::Nt {
                    for (t, c) in w.counts().iter().enumerate() {
                        writeln!(out, "{prefix},{t},{c}")?;
                    }
                } else {
                    let coeffs: Vec<String> = w.counts().iter().map(ToString::to_string).collect();
                    writeln!(out, "{prefix},{},{}", eval.size, coeffs.join(" "))?;
                }
            }
        }
    }
    Ok(())
}

fn verdict_line(inst: &Instance, v: &Verdict) -> String {
    let params: Vec<String> = inst.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let methods: Vec<&str> = v.methods.iter().map(|m| m.name()).collect();
    let mut line = format!(
        "{}  {} {}  methods={}  size={}  max_deviation={}",
        if v.passed() { "PASS" } else { "FAIL" },
        inst.family.name(),
        params.join(" "),
        methods.join(","),
        v.size.as_ref().map_or("-".to_string(), ToString::to_string),
        v.max_deviation.map_or("-".to_string(), |d| format!("{d:.3e}")),
    );
    if !v.passed() {
        line.push_str("  ");
        line.push_str(&v.failures.join("; "));
    }
    line
}

fn cmd_verify(
    code: &CodeArgs,
    methods: &[Method],
    random: Option<usize>,
    seed: u64,
    quiet: bool,
    out: &mut impl Write,
) -> Result<bool, Failure> {
    let instances = match random {
        Some(count) => {
            if code.family != FamilyArg::Blcc {
                return Err(usage("--random is only available for family blcc").into());
            }
            let has_params = [&code.n, &code.k, &code.s, &code.b, &code.r, &code.q, &code.coeffs, &code.modulus]
                .iter()
                .any(|p| p.is_some());
            if has_params {
                return Err(usage("--random does not take code parameters").into());
            }
            grid::random_instances(count, seed)
        }
        None => grid::expand(code)?,
    };
    let methods: Vec<Method> = if methods.is_empty() {
        Method::ALL.to_vec()
    } else {
        let mut m = methods.to_vec();
        m.sort();
        m.dedup();
        m
    };
    if !quiet {
        let names: Vec<&str> = methods.iter().map(|m| m.name()).collect();
        writeln!(
            out,
            "ccodes verify: family={} instances={} methods={}",
            code.family.name(),
            instances.len(),
            names.join(",")
        )?;
    }
    let verdicts = par_map(&instances, |inst| verify(inst, &methods));
    let mut failed = 0usize;
    let mut max_deviation: Option<f64> = None;
    for (inst, v) in instances.iter().zip(&verdicts) {
        if !v.passed() {
            failed += 1;
        }
        if let Some(d) = v.max_deviation {
            max_deviation = Some(max_deviation.map_or(d, |m: f64| m.max(d)));
        }
        writeln!(out, "{}", verdict_line(inst, v))?;
    }
    writeln!(
        out,
        "verify: {} passed, {failed} failed, max_deviation={}",
        instances.len() - failed,
        max_deviation.map_or("-".to_string(), |d| format!("{d:.3e}"))
    )?;
    Ok(failed == 0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Enum { code, format, methods } => cmd_enum(code, *format, methods, &mut out).map(|()| true),
        Command::Table { code, quantity, methods } => cmd_table(code, *quantity, methods, &mut out).map(|()| true),
        Command::Verify {
            code,
            methods,
            random,
            seed,
            quiet,
        } => cmd_verify(code, methods, *random, *seed, *quiet, &mut out),
        Command::Version => writeln!(out, "ccodes {}", env!("CARGO_PKG_VERSION"))
            .map(|()| true)
            .map_err(Failure::Io),
    };
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), Ok(())) => ExitCode::from(1),
        (Err(Failure::Usage(e)), _) => {
            eprintln!("ccodes: {e}");
            ExitCode::from(2)
        }
        (Err(Failure::Io(e)), _) | (_, Err(e)) => {
            if e.kind() == io::ErrorKind::BrokenPipe {
                return ExitCode::SUCCESS;
            }
            eprintln!("ccodes: {e}");
            ExitCode::FAILURE
        }
    }
}
