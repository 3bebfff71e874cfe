//! Command-line front end: statistic tables, truncated series coefficients,
//! and identity verification, in stable machine-readable output.
//!
//! Exit codes: 0 on success (and on `verify` only when every check passes),
//! 1 when a verification fails, 2 on usage errors.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qhooks_core::genfun::{
    cprime_truncated, gamma_moment_closed, h1h2_closed, han_hook_gf, hno_truncated,
    hook_pair_closed, multiplicity_gf, partition_count, stat_totals,
};
use qhooks_core::partition::Partition;
use qhooks_core::series::{euler_inverse, QSeries};
use qhooks_core::upoly::UPolyRing;
use qhooks_core::verify::{verify, verify_all, Params, TheoremId, VerificationReport};
use qhooks_core::{BPolyRing, RationalField};

#[derive(Parser)]
#[command(
    name = "qhooks",
    version,
    about = "Exact partition statistics, truncated q-series, and identity verification"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Statistics of a single partition: multiplicities, multiplicities of
    /// multiplicities with their running thresholds, and hook counts
    Stats {
        /// The partition, as comma-separated weakly decreasing parts
        /// (e.g. "5,4,3,3,2,2,1"; the empty string is the partition of 0)
        #[arg(long)]
        lambda: String,
    },
    /// Per-n totals of one statistic over all partitions of n, for n = 0..n-max
    Table {
        /// Which statistic to total
        #[arg(long, value_enum)]
        stat: TableStat,
        /// Largest n
        #[arg(long = "n-max", default_value_t = 20)]
        n_max: usize,
        /// Part size (for nu) or hook length (for H); defaults to 1
        #[arg(long)]
        i: Option<usize>,
        /// Multiplicity threshold (for gamma-geq); defaults to 1
        #[arg(long)]
        k: Option<usize>,
    },
    /// Coefficients of a truncated series, in canonical encoding
    Series {
        /// Which series to expand
        #[arg(long, value_enum)]
        which: SeriesKind,
        /// Truncation order
        #[arg(long = "n-max", default_value_t = 20)]
        n_max: usize,
        /// Truncation depth for hno and cprime; defaults to 2
        #[arg(long)]
        j: Option<usize>,
        /// Hook length (fk, hook-pair) or multiplicity threshold
        /// (gamma-moment); defaults to 1
        #[arg(long)]
        k: Option<usize>,
        /// Binomial degree for gamma-moment; defaults to 1
        #[arg(long)]
        d: Option<usize>,
        /// Strictly increasing multiplicity thresholds for the multiplicity
        /// series, comma-separated; defaults to "1,2"
        #[arg(long)]
        thresholds: Option<String>,
        /// Marker degree caps for the multiplicity series, one per
        /// threshold, comma-separated; defaults to "1,1"
        #[arg(long)]
        caps: Option<String>,
    },
    /// Run one identity check (or all of them) and report the result
    Verify {
        /// Theorem id, or "all"
        #[arg(long)]
        theorem: String,
        /// Largest n every coefficient comparison sweeps to
        #[arg(long = "n-max", default_value_t = 20)]
        n_max: usize,
        /// Depth sweep bound, where the theorem has one
        #[arg(long)]
        j: Option<usize>,
        /// Hook-length / threshold sweep bound, where the theorem has one
        #[arg(long)]
        k: Option<usize>,
        /// Binomial-degree sweep bound, where the theorem has one
        #[arg(long)]
        d: Option<usize>,
        /// b-degree sweep bound, where the theorem has one
        #[arg(long)]
        c: Option<usize>,
        /// Part-size sweep bound, where the theorem has one
        #[arg(long)]
        i: Option<usize>,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum TableStat {
    /// Number of partitions of n
    P,
    /// Total hooks of length i over all partitions of n
    #[value(name = "H", alias = "h")]
    H,
    /// Total parts of size i over all partitions of n
    Nu,
    /// Total count of sizes repeated at least k times
    GammaGeq,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    /// Hook-weight truncation at depth j (coefficients are polynomials in b)
    Hno,
    /// Multiplicity truncation at depth j (coefficients are polynomials in b)
    Cprime,
    /// Hook-count generating function for length k (marker variable v)
    Fk,
    /// Marked multiplicity-threshold series (marker variables v1, v2, ...)
    Multiplicity,
    /// Closed form of the d-th binomial moment of gamma_{>=k}
    GammaMoment,
    /// Closed form of the second binomial moment of H_k
    HookPair,
    /// Closed form of the mixed first moments of H_1 and H_2
    H1h2,
    /// 1 / prod (1 - q^m): the partition-counting series
    Euler,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Stats { lambda } => {
            cmd_stats(&lambda, cli.format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { stat, n_max, i, k } => {
            cmd_table(stat, n_max, i, k, cli.format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Series {
            which,
            n_max,
            j,
            k,
            d,
            thresholds,
            caps,
        } => {
            cmd_series(which, n_max, j, k, d, thresholds, caps, cli.format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            theorem,
            n_max,
            j,
            k,
            d,
            c,
            i,
        } => cmd_verify(
            &theorem,
            n_max,
            &[("j", j), ("k", k), ("d", d), ("c", c), ("i", i)],
            cli.format,
        ),
    }
}

/// Pairs of a map, as a JSON array of [key, value] arrays in key order.
fn pairs_json(map: &BTreeMap<usize, usize>) -> Value {
    Value::Array(map.iter().map(|(&k, &v)| json!([k, v])).collect())
}

fn cmd_stats(lambda: &str, format: OutputFormat) -> Result<(), String> {
    let lam: Partition = lambda.parse().map_err(|e| format!("--lambda: {e}"))?;
    let sv = lam.stat_vector();
    let max_mult = sv.gamma.keys().next_back().copied().unwrap_or(0);
    let gamma_geq: BTreeMap<usize, usize> = (1..=max_mult).map(|k| (k, sv.gamma_geq(k))).collect();
    match format {
        OutputFormat::Json => {
            let out = json!({
                "lambda": lam.parts(),
                "n": lam.weight(),
                "nu": pairs_json(&sv.nu),
                "gamma": pairs_json(&sv.gamma),
                "gamma-geq": pairs_json(&gamma_geq),
                "hooks": pairs_json(&sv.hooks),
            });
            println!("{out}");
        }
        OutputFormat::Csv => {
            println!("stat,key,value");
            for (name, map) in [
                ("nu", &sv.nu),
                ("gamma", &sv.gamma),
                ("gamma-geq", &gamma_geq),
                ("hooks", &sv.hooks),
            ] {
                for (k, v) in map {
                    println!("{name},{k},{v}");
                }
            }
        }
    }
    Ok(())
}

fn cmd_table(
    stat: TableStat,
    n_max: usize,
    i: Option<usize>,
    k: Option<usize>,
    format: OutputFormat,
) -> Result<(), String> {
    // reject flags that the chosen statistic cannot use
    match stat {
        TableStat::P => {
            if i.is_some() || k.is_some() {
                return Err("--i and --k do not apply to stat p".to_string());
            }
        }
        TableStat::H | TableStat::Nu => {
            if k.is_some() {
                return Err("--k does not apply; use --i for part size / hook length".to_string());
            }
        }
        TableStat::GammaGeq => {
            if i.is_some() {
                return Err(
                    "--i does not apply; use --k for the multiplicity threshold".to_string()
                );
            }
        }
    }
    let index = match stat {
        TableStat::P => None,
        TableStat::H | TableStat::Nu => Some(i.unwrap_or(1)),
        TableStat::GammaGeq => Some(k.unwrap_or(1)),
    };
    if index == Some(0) {
        return Err("the statistic index must be at least 1".to_string());
    }
    let values: Vec<u64> = (0..=n_max)
        .map(|n| match stat {
            TableStat::P => partition_count(n),
            _ => {
                let idx = index.expect("indexed statistic");
                if idx > n {
                    return 0;
                }
                let totals = stat_totals(n);
                match stat {
                    TableStat::H => totals.hooks[idx],
                    TableStat::Nu => totals.nu[idx],
                    TableStat::GammaGeq => totals.gamma_geq[idx],
                    TableStat::P => unreachable!(),
                }
            }
        })
        .collect();
    match format {
        OutputFormat::Json => {
            let name = match stat {
                TableStat::P => "p",
                TableStat::H => "H",
                TableStat::Nu => "nu",
                TableStat::GammaGeq => "gamma-geq",
            };
            let mut out = serde_json::Map::new();
            out.insert("n-max".to_string(), json!(n_max));
            out.insert("stat".to_string(), json!(name));
            match stat {
                TableStat::H | TableStat::Nu => {
                    out.insert("i".to_string(), json!(index.unwrap()));
                }
                TableStat::GammaGeq => {
                    out.insert("k".to_string(), json!(index.unwrap()));
                }
                TableStat::P => {}
            }
            out.insert("values".to_string(), json!(values));
            println!("{}", Value::Object(out));
        }
        OutputFormat::Csv => {
            println!("n,value");
            for (n, v) in values.iter().enumerate() {
                println!("{n},{v}");
            }
        }
    }
    Ok(())
}

/// Comma-separated positive integers.
fn parse_list(text: &str, flag: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("{flag}: '{t}' is not a non-negative integer"))
        })
        .collect()
}

fn forbid(flags: &[(&str, bool)], kind: &str) -> Result<(), String> {
    for (name, present) in flags {
        if *present {
            return Err(format!("{name} does not apply to series {kind}"));
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_series(
    which: SeriesKind,
    n_max: usize,
    j: Option<usize>,
    k: Option<usize>,
    d: Option<usize>,
    thresholds: Option<String>,
    caps: Option<String>,
    format: OutputFormat,
) -> Result<(), String> {
    let positive = |v: Option<usize>, default: usize, flag: &str| -> Result<usize, String> {
        let v = v.unwrap_or(default);
        if v == 0 {
            return Err(format!("{flag} must be at least 1"));
        }
        Ok(v)
    };
    let list_flags = [
        ("--thresholds", thresholds.is_some()),
        ("--caps", caps.is_some()),
    ];
    match which {
        SeriesKind::Hno | SeriesKind::Cprime => {
            forbid(&[("--k", k.is_some()), ("--d", d.is_some())], "hno/cprime")?;
            forbid(&list_flags, "hno/cprime")?;
            let j = positive(j, 2, "--j")?;
            let series = match which {
                SeriesKind::Hno => hno_truncated(j, n_max),
                _ => cprime_truncated(j, n_max),
            };
            emit_bpoly_series(&series, format);
        }
        SeriesKind::Fk => {
            forbid(&[("--j", j.is_some()), ("--d", d.is_some())], "fk")?;
            forbid(&list_flags, "fk")?;
            let k = positive(k, 1, "--k")?;
            let series = han_hook_gf(k, n_max, n_max);
            emit_upoly_series(&series, format);
        }
        SeriesKind::Multiplicity => {
            forbid(
                &[
                    ("--j", j.is_some()),
                    ("--k", k.is_some()),
                    ("--d", d.is_some()),
                ],
                "multiplicity",
            )?;
            let thresholds = parse_list(thresholds.as_deref().unwrap_or("1,2"), "--thresholds")?;
            let caps = parse_list(caps.as_deref().unwrap_or("1,1"), "--caps")?;
            if thresholds.is_empty() || thresholds[0] == 0 {
                return Err("--thresholds must be positive integers".to_string());
            }
            if thresholds.windows(2).any(|w| w[0] >= w[1]) {
                return Err("--thresholds must be strictly increasing".to_string());
            }
            if caps.len() != thresholds.len() {
                return Err("--caps must list one degree cap per threshold".to_string());
            }
            let series = multiplicity_gf(&thresholds, &caps, n_max);
            emit_upoly_series(&series, format);
        }
        SeriesKind::GammaMoment => {
            forbid(&[("--j", j.is_some())], "gamma-moment")?;
            forbid(&list_flags, "gamma-moment")?;
            let k = positive(k, 1, "--k")?;
            let d = positive(d, 1, "--d")?;
            emit_rational_series(&gamma_moment_closed(k, d, n_max), format);
        }
        SeriesKind::HookPair => {
            forbid(&[("--j", j.is_some()), ("--d", d.is_some())], "hook-pair")?;
            forbid(&list_flags, "hook-pair")?;
            let k = positive(k, 1, "--k")?;
            emit_rational_series(&hook_pair_closed(k, n_max), format);
        }
        SeriesKind::H1h2 | SeriesKind::Euler => {
            let kind = if which == SeriesKind::H1h2 {
                "h1h2"
            } else {
                "euler"
            };
            forbid(
                &[
                    ("--j", j.is_some()),
                    ("--k", k.is_some()),
                    ("--d", d.is_some()),
                ],
                kind,
            )?;
            forbid(&list_flags, kind)?;
            let series = match which {
                SeriesKind::H1h2 => h1h2_closed(n_max),
                _ => euler_inverse(n_max),
            };
            emit_rational_series(&series, format);
        }
    }
    Ok(())
}

fn emit_rational_series(series: &QSeries<RationalField>, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!("{}", series.to_json()),
        OutputFormat::Csv => {
            println!("n,coeff");
            for (n, c) in series.coeffs().iter().enumerate() {
                println!("{n},{c}");
            }
        }
    }
}

fn emit_bpoly_series(series: &QSeries<BPolyRing>, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!("{}", series.to_json()),
        OutputFormat::Csv => {
            let c_max = series
                .coeffs()
                .iter()
                .filter_map(|p| p.degree())
                .max()
                .unwrap_or(0);
            let header: Vec<String> = (0..=c_max).map(|c| format!("b{c}")).collect();
            println!("n,{}", header.join(","));
            for (n, p) in series.coeffs().iter().enumerate() {
                let row: Vec<String> = (0..=c_max).map(|c| p.coeff(c).to_string()).collect();
                println!("{n},{}", row.join(","));
            }
        }
    }
}

fn emit_upoly_series(series: &QSeries<UPolyRing>, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!("{}", series.to_json()),
        OutputFormat::Csv => {
            let nvars = series.ring().nvars();
            let header: Vec<String> = (1..=nvars).map(|s| format!("v{s}")).collect();
            println!("n,coeff,{}", header.join(","));
            for (n, p) in series.coeffs().iter().enumerate() {
                if p.is_zero() {
                    let zeros: Vec<&str> = (0..nvars).map(|_| "0").collect();
                    println!("{n},0,{}", zeros.join(","));
                    continue;
                }
                for (exps, coeff) in p.terms() {
                    let cols: Vec<String> = exps.iter().map(|e| e.to_string()).collect();
                    println!("{n},{coeff},{}", cols.join(","));
                }
            }
        }
    }
}

fn cmd_verify(
    theorem: &str,
    n_max: usize,
    sweeps: &[(&str, Option<usize>)],
    format: OutputFormat,
) -> Result<ExitCode, String> {
    let reports: Vec<VerificationReport> = if theorem == "all" {
        if sweeps.iter().any(|(_, v)| v.is_some()) {
            return Err("sweep bounds apply to a single theorem, not to 'all'".to_string());
        }
        verify_all(n_max)
    } else {
        let id: TheoremId = theorem.parse().map_err(|e| format!("{e}"))?;
        let mut params = Params::new();
        params.insert("n-max".to_string(), n_max);
        for (name, value) in sweeps {
            if let Some(v) = value {
                params.insert((*name).to_string(), *v);
            }
        }
        vec![verify(id, &params).map_err(|e| format!("{e}"))?]
    };
    match format {
        OutputFormat::Json => {
            if theorem == "all" {
                let arr: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
                println!("{}", Value::Array(arr));
            } else {
                println!("{}", reports[0].to_json());
            }
        }
        OutputFormat::Csv => {
            println!("theorem,params,status,n,lhs,rhs,elapsed_ms");
            for r in &reports {
                let params: Vec<String> =
                    r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let (n, lhs, rhs) = match &r.first_failure {
                    Some(f) => (f.n.to_string(), f.lhs.clone(), f.rhs.clone()),
                    None => (String::new(), String::new(), String::new()),
                };
                println!(
                    "{},{},{},{n},{lhs},{rhs},{}",
                    r.theorem,
                    params.join(";"),
                    if r.passed() { "pass" } else { "fail" },
                    r.elapsed.as_millis()
                );
            }
        }
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
