//! `gpetersen`: reproducible verification commands for generalised Petersen
//! graphs.
//!
//! Exit codes: 0 when every checked claim holds, 1 when a check fails,
//! 2 on invalid input.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use gpetersen::format::{census_csv, sig, spectrum_csv, spectrum_json, VALUE_DIGITS};
use gpetersen::{
    build_graph, census, closed_form_spectrum, count_near_valency, dirichlet_witnesses, expansion_report,
    gap_bound, good_index_cluster, oracle_spectrum, validate_params, CosTable, Error, GpParams,
};
use rayon::prelude::*;
use serde_json::json;

/// Largest outer-cycle length accepted by `gap`.
const MAX_SWEEP_N: usize = 1_000_000;
/// Oracle deviation tolerated by `spectrum --oracle`.
const ORACLE_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(name = "gpetersen", version, about = "Spectral and arithmetic checks for generalised Petersen graphs P(n,k)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the spectrum of P(n,k) from the closed form
    Spectrum {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        /// Also diagonalise the adjacency matrix and report the deviation
        #[arg(long)]
        oracle: bool,
    },
    /// Sweep the spectral-gap bound over a range of n
    Gap {
        /// Single n or inclusive range `a..b`
        #[arg(long)]
        n: NRange,
        /// `all`, `sample:<count>` or `fixed:<k>`
        #[arg(long, default_value = "all")]
        k: KPolicy,
    },
    /// Count eigenvalues within eps of the valency
    Cluster {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, allow_negative_numbers = true)]
        eps: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Isomorphism-class and Cayley-graph census up to N
    Census {
        #[arg(long = "N", allow_negative_numbers = true)]
        big_n: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Expanding constant with its spectral bounds
    Expansion {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Simultaneous Diophantine approximation witnesses
    Dirichlet {
        /// Reals to approximate (repeat the flag or separate with commas)
        #[arg(long, required = true, value_delimiter = ',', allow_negative_numbers = true)]
        a: Vec<f64>,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 1)]
        t0: u64,
        #[arg(long, default_value_t = 1)]
        m: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Write P(n,k) as an undirected DOT graph
    ExportDot {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct NRange {
    lo: usize,
    hi: usize,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid n `{t}`"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(NRange { lo, hi })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum KPolicy {
    All,
    Sample(usize),
    Fixed(usize),
}

impl FromStr for KPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let number = |v: &str| v.parse::<usize>().map_err(|_| format!("invalid count in `{s}`"));
        match s.split_once(':') {
            None if s == "all" => Ok(KPolicy::All),
            Some(("sample", v)) => Ok(KPolicy::Sample(number(v)?)),
            Some(("fixed", v)) => Ok(KPolicy::Fixed(number(v)?)),
            _ => Err(format!("unknown k policy `{s}` (use all, sample:<count> or fixed:<k>)")),
        }
    }
}

/// Failure carrying the exit code it maps to.
#[derive(Debug)]
enum Failure {
    Invalid(String),
    ClaimFailed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoConvergence { .. } | Error::SearchExhausted { .. } => Failure::ClaimFailed(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

/// Rendered output plus whether every checked claim held.
struct Report {
    text: String,
    verified: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, verified: true }
    }
}

fn json_text(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    text.push('\n');
    text
}

fn reject_dot(format: OutputFormat) -> Result<(), Failure> {
    if format == OutputFormat::Dot {
        return Err(Failure::Invalid("dot output is only available from export-dot".into()));
    }
    Ok(())
}

fn cmd_spectrum(n: i64, k: i64, format: OutputFormat, oracle: bool) -> Result<Report, Failure> {
    reject_dot(format)?;
    let p = validate_params(n, k)?;
    let closed = closed_form_spectrum(p);
    if !oracle {
        let text = match format {
            OutputFormat::Json => json_text(&spectrum_json(&closed)),
            _ => spectrum_csv(&closed),
        };
        return Ok(Report::ok(text));
    }

    let computed = oracle_spectrum(&build_graph(p))?;
    let deviation = closed.max_deviation(&computed).expect("spectra of the same graph");
    let text = match format {
        OutputFormat::Json => json_text(&json!({
            "n": p.n(),
            "k": p.k(),
            "closed_form": spectrum_json(&closed),
            "oracle": spectrum_json(&computed),
            "max_deviation": deviation,
        })),
        _ => {
            let mut out = String::from("index,closed_form,oracle\n");
            for (i, (a, b)) in closed.values.iter().zip(&computed.values).enumerate() {
                let _ = writeln!(out, "{i},{},{}", sig(*a, VALUE_DIGITS), sig(*b, VALUE_DIGITS));
            }
            let _ = writeln!(out, "# max_deviation {}", sig(deviation, VALUE_DIGITS));
            out
        }
    };
    Ok(Report {
        text,
        verified: deviation <= ORACLE_TOLERANCE,
    })
}

fn ks_for(n: usize, policy: KPolicy) -> Result<Vec<usize>, Failure> {
    match policy {
        KPolicy::All => Ok(GpParams::valid_ks(n).collect()),
        KPolicy::Sample(count) => Ok(GpParams::sampled_ks(n, count)),
        KPolicy::Fixed(k) => {
            validate_params(n as i64, k as i64)?;
            Ok(vec![k])
        }
    }
}

fn cmd_gap(range: NRange, policy: KPolicy) -> Result<Report, Failure> {
    if range.lo < 4 || range.hi > MAX_SWEEP_N {
        return Err(Failure::Invalid(format!(
            "n range {}..{} must lie within 4..{MAX_SWEEP_N}",
            range.lo, range.hi
        )));
    }
    let plan: Vec<(usize, Vec<usize>)> = (range.lo..=range.hi)
        .map(|n| ks_for(n, policy).map(|ks| (n, ks)))
        .collect::<Result<_, _>>()?;

    let rows: Vec<Vec<(usize, f64, f64)>> = plan
        .into_par_iter()
        .map(|(n, ks)| {
            let table = CosTable::new(n);
            let bound = gap_bound(n as u64).expect("n >= 4");
            ks.into_iter()
                .map(|k| (k, 3.0 - table.second_eigenvalue(k), bound))
                .collect()
        })
        .collect();

    let mut text = String::from("n,k,gap,bound,ok\n");
    let mut verified = true;
    for (n, per_n) in (range.lo..).zip(rows) {
        for (k, gap, bound) in per_n {
            let ok = gap < bound;
            verified &= ok;
            let _ = writeln!(
                text,
                "{n},{k},{},{},{ok}",
                sig(gap, VALUE_DIGITS),
                sig(bound, VALUE_DIGITS)
            );
        }
    }
    Ok(Report { text, verified })
}

fn cmd_cluster(n: i64, k: i64, eps: f64, format: OutputFormat) -> Result<Report, Failure> {
    reject_dot(format)?;
    let p = validate_params(n, k)?;
    let set = good_index_cluster(p, eps)?;
    let count = count_near_valency(&closed_form_spectrum(p), eps)?;
    let verified = count as u64 >= set.m;
    let text = match format {
        OutputFormat::Json => json_text(&json!({
            "n": p.n(),
            "k": p.k(),
            "eps": eps,
            "q": set.q,
            "floor": set.m,
            "count": count,
            "good_indices": set.indices,
            "ok": verified,
        })),
        _ => {
            let indices: Vec<String> = set.indices.iter().map(|j| j.to_string()).collect();
            format!(
                "n,k,eps,q,floor,count,good_indices,ok\n{},{},{},{},{},{count},{},{verified}\n",
                p.n(),
                p.k(),
                sig(eps, VALUE_DIGITS),
                set.q,
                set.m,
                indices.join(" ")
            )
        }
    };
    Ok(Report { text, verified })
}

fn cmd_census(big_n: i64, format: OutputFormat) -> Result<Report, Failure> {
    reject_dot(format)?;
    if big_n < 5 {
        return Err(Failure::Invalid(format!("N = {big_n} must be at least 5")));
    }
    let records = census(big_n as u64)?;
    // A single checkpoint has no trend to check.
    let verified = match (records.first(), records.last()) {
        (Some(first), Some(last)) if records.len() > 1 => last.ratio < first.ratio,
        _ => true,
    };
    let text = match format {
        OutputFormat::Json => json_text(&json!({
            "N": big_n,
            "excluded": "P(n, n/2) (2k = n) is not a simple cubic graph and is never counted",
            "records": records.iter().map(|r| json!({
                "N": r.big_n,
                "a_lower": r.a_lower,
                "b_count": r.b_count,
                "ratio": r.ratio,
            })).collect::<Vec<_>>(),
        })),
        _ => census_csv(&records),
    };
    Ok(Report { text, verified })
}

fn cmd_expansion(n: i64, k: i64, format: OutputFormat) -> Result<Report, Failure> {
    reject_dot(format)?;
    let p = validate_params(n, k)?;
    let report = expansion_report(p)?;
    let sandwich = report.sandwich_holds();
    let corollary = report.corollary_holds();
    let text = match format {
        OutputFormat::Json => json_text(&json!({
            "n": report.n,
            "k": report.k,
            "h": report.h,
            "witness_set": report.witness_set,
            "lower": report.lower,
            "upper": report.upper,
            "corollary_bound": report.corollary_bound,
            "sandwich_ok": sandwich,
            "corollary_ok": corollary,
        })),
        _ => {
            let h = report
                .h
                .map_or_else(|| "not computed".to_string(), |h| sig(h, VALUE_DIGITS));
            let witness = report.witness_set.as_ref().map_or_else(
                || "not computed".to_string(),
                |w| w.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "),
            );
            let bound = report
                .corollary_bound
                .map_or_else(|| "undefined".to_string(), |b| sig(b, VALUE_DIGITS));
            format!(
                "n,k,h,witness_set,lower,upper,corollary_bound,sandwich,corollary\n{},{},{h},{witness},{},{},{bound},{},{}\n",
                report.n,
                report.k,
                sig(report.lower, VALUE_DIGITS),
                sig(report.upper, VALUE_DIGITS),
                if sandwich { "ok" } else { "violated" },
                if corollary { "ok" } else { "violated" },
            )
        }
    };
    Ok(Report {
        text,
        verified: sandwich && corollary,
    })
}

fn cmd_dirichlet(a: &[f64], q: u64, t0: u64, m: u64, format: OutputFormat) -> Result<Report, Failure> {
    reject_dot(format)?;
    let witnesses = dirichlet_witnesses(a, q, t0, m)?;
    let verified = witnesses.iter().all(|w| w.satisfies(a));
    let text = match format {
        OutputFormat::Json => json_text(&json!(witnesses)),
        _ => {
            let mut out = String::from("t,x,q,t0\n");
            for w in &witnesses {
                let xs: Vec<String> = w.x.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "{},{},{},{}", w.t, xs.join(" "), w.q, w.t0);
            }
            out
        }
    };
    Ok(Report { text, verified })
}

fn run(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Spectrum { n, k, format, oracle } => cmd_spectrum(n, k, format, oracle),
        Command::Gap { n, k } => cmd_gap(n, k),
        Command::Cluster { n, k, eps, format } => cmd_cluster(n, k, eps, format),
        Command::Census { big_n, format } => cmd_census(big_n, format),
        Command::Expansion { n, k, format } => cmd_expansion(n, k, format),
        Command::Dirichlet { a, q, t0, m, format } => cmd_dirichlet(&a, q, t0, m, format),
        Command::ExportDot { n, k } => {
            let p = validate_params(n, k)?;
            Ok(Report::ok(build_graph(p).to_dot()))
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("GP_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| Failure::Invalid(format!("GP_THREADS = `{value}` is not a non-negative integer")))?;
    // 0 keeps rayon's automatic choice.
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::Invalid(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match configure_threads().and_then(|()| run(cli.command)) {
        Ok(report) => {
            print!("{}", report.text);
            if report.verified {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: a verified claim failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::ClaimFailed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
