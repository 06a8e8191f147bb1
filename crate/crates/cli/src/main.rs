//! `hirreg`: construct, verify, bound, search and export H-irregular grid labelings.
//!
//! Exit codes: 0 success or acceptance, 1 usage or malformed input,
//! 2 verification rejection (or an oracle/formula discrepancy), 3 resource limit.

use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hirreg_core::io::{family_from_json, graph_to_json, labeling_from_json, labeling_to_json, to_dot};
use hirreg_core::oracle::DEFAULT_MAX_SPACE_LOG2;
use hirreg_core::{
    bound_report, check_scope, construct_labeling, enumerate_windows, strength_report, sweep, verify_irregular,
    weight_profile, write_sweep_csv, CoverFamily, Error, Graph, LabelingKind, SearchOptions, TotalVariant, Verdict,
};

/// Overrides the oracle's search-space cap (log2 of class-sum assignments).
const CAP_ENV: &str = "HIRREG_ORACLE_MAX_LOG2";

#[derive(Debug, Parser)]
#[command(
    name = "hirreg",
    version,
    about = "H-irregular labelings of grid graphs under column-window coverings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Shape {
    /// Rows of the host grid and of each window.
    #[arg(short = 'm')]
    m: usize,
    /// Window width in columns.
    #[arg(short = 'c')]
    c: usize,
    /// Columns of the host grid.
    #[arg(short = 'n')]
    n: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the explicit labeling for a grid and window width.
    Construct {
        #[arg(long)]
        kind: LabelingKind,
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value = "corrected")]
        variant: TotalVariant,
        /// Output file; `-` for stdout.
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Check a labeling against a family of subgraphs.
    Verify {
        #[arg(long)]
        labeling: PathBuf,
        /// Family file (JSON).
        #[arg(long, conflicts_with = "grid", required_unless_present = "grid")]
        family: Option<PathBuf>,
        /// Use the column windows of a grid, given as `M,C,N`.
        #[arg(long, value_parser = parse_triple)]
        grid: Option<(usize, usize, usize)>,
    },
    /// Print the general lower bound and the upper-bound exponent.
    Bound {
        #[arg(long)]
        kind: LabelingKind,
        #[command(flatten)]
        shape: Shape,
    },
    /// Print a strength report, optionally confirmed by exhaustive search.
    Strength {
        #[arg(long)]
        kind: LabelingKind,
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        oracle: bool,
        /// Largest budget the oracle tries; defaults to the closed form plus one.
        #[arg(long)]
        k_max: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate closed forms and construction checks over parameter ranges.
    Sweep {
        #[arg(long)]
        kind: LabelingKind,
        #[arg(long, value_parser = parse_range)]
        m_range: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range)]
        c_range: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range)]
        n_range: RangeInclusive<usize>,
        /// Output CSV; `-` for stdout.
        #[arg(long, default_value = "-")]
        csv: PathBuf,
    },
    /// Export a grid, optionally labeled, as DOT or JSON.
    Export {
        /// Grid shape `M,N`.
        #[arg(long, value_parser = parse_pair)]
        grid: (usize, usize),
        #[arg(long)]
        labeling: Option<PathBuf>,
        /// Window width; adds window membership comments to DOT output.
        #[arg(long)]
        windows: Option<usize>,
        #[arg(long, value_parser = ["dot", "json"])]
        format: String,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
}

fn parse_numbers(s: &str, sep: &str, count: usize) -> Result<Vec<usize>, String> {
    let parts: Vec<&str> = s.split(sep).map(str::trim).collect();
    if parts.len() != count {
        return Err(format!("expected {count} values separated by {sep:?}, got {s:?}"));
    }
    parts
        .iter()
        .map(|p| p.parse::<usize>().map_err(|e| format!("{p:?}: {e}")))
        .collect()
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let v = parse_numbers(s, ",", 2)?;
    Ok((v[0], v[1]))
}

fn parse_triple(s: &str) -> Result<(usize, usize, usize), String> {
    let v = parse_numbers(s, ",", 3)?;
    Ok((v[0], v[1], v[2]))
}

/// `A..B` (inclusive) or a single value `A`.
fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let v = if s.contains("..") {
        parse_numbers(&s.replacen("..=", "..", 1), "..", 2)?
    } else {
        let x = parse_numbers(s, "..", 1)?[0];
        vec![x, x]
    };
    if v[0] > v[1] {
        return Err(format!("empty range {s:?}"));
    }
    Ok(v[0]..=v[1])
}

enum Failure {
    Core(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write_out(path: &Path, text: &str) -> Result<(), Failure> {
    if path.as_os_str() == "-" {
        io::stdout().write_all(text.as_bytes())?;
    } else {
        fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn search_options() -> Result<SearchOptions, Failure> {
    let mut opts = SearchOptions::default();
    if let Ok(raw) = std::env::var(CAP_ENV) {
        opts.max_space_log2 = raw
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite() && *v > 0.0)
            .ok_or_else(|| Failure::Io(format!("{CAP_ENV} must be a positive number, got {raw:?}")))?;
    }
    Ok(opts)
}

fn family_for(family: Option<&Path>, grid: Option<(usize, usize, usize)>) -> Result<CoverFamily, Failure> {
    match (family, grid) {
        (Some(path), _) => Ok(family_from_json(&read(path)?)?),
        (None, Some((m, c, n))) => Ok(enumerate_windows(m, n, c)?),
        (None, None) => Err(Failure::Io("one of --family or --grid is required".into())),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Construct {
            kind,
            shape,
            variant,
            out,
        } => {
            let lab = construct_labeling(kind, shape.m, shape.n, shape.c, variant)?;
            write_out(&out, &(labeling_to_json(&lab) + "\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { labeling, family, grid } => {
            let lab = labeling_from_json(&read(&labeling)?)?;
            let fam = family_for(family.as_deref(), grid)?;
            let verdict = verify_irregular(&lab, &fam)?;
            let profile = weight_profile(&lab, &fam)?;
            let weights: Vec<String> = profile.weights.iter().map(i64::to_string).collect();
            println!("kind={} k={} t={}", lab.kind(), lab.k(), fam.len());
            println!("weights={}", weights.join(","));
            match verdict {
                Verdict::Accepted => {
                    println!("verdict=accept");
                    Ok(ExitCode::SUCCESS)
                }
                Verdict::Rejected(v) => {
                    println!("verdict=reject");
                    eprintln!("{v}");
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::Bound { kind, shape } => {
            let Shape { m, c, n } = shape;
            check_scope(m, c, n)?;
            let host = Graph::grid(m, n)?;
            let report = bound_report(kind, &host, n - c + 1, m * c, 2 * m * c - m - c)?;
            println!("kind={kind} m={m} c={c} n={n} t={}", n - c + 1);
            println!("lower_bound={}", report.lower);
            println!("upper_exponent={}", report.upper_exponent);
            match report.upper() {
                Some(u) => println!("upper_bound={u}"),
                None => println!("upper_bound=2^{}", report.upper_exponent),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Strength {
            kind,
            shape,
            oracle,
            k_max,
            json,
        } => {
            let Shape { m, c, n } = shape;
            let opts = search_options()?;
            let cap = match k_max {
                Some(k) => k,
                None => hirreg_core::closed_form_strength(kind, m, n, c)? + 1,
            };
            let report = strength_report(kind, m, n, c, oracle.then_some((&opts, cap)))?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                println!(
                    "kind={} m={} c={} n={} t={}",
                    report.kind, report.m, report.c, report.n, report.t
                );
                println!("lower_bound={}", report.lower_bound);
                println!("upper_exponent={}", report.upper_exponent);
                println!("closed_form={}", report.closed_form);
                println!("construction_verified={}", report.construction_verified);
                if oracle {
                    match report.oracle_k {
                        Some(k) => println!("oracle_k={k}"),
                        None => println!("oracle_k=none<={cap}"),
                    }
                    if let Some(nodes) = report.oracle_nodes {
                        println!("oracle_nodes={nodes}");
                    }
                }
                if let Some(note) = &report.erratum_note {
                    println!("erratum_note={note}");
                }
            }
            if oracle && report.oracle_k.is_none() {
                eprintln!(
                    "oracle found no witness up to k={cap}, closed form is {}",
                    report.closed_form
                );
                return Ok(ExitCode::from(2));
            }
            if !report.is_consistent() {
                eprintln!("report is inconsistent: construction or oracle disagrees with the closed form");
                return Ok(ExitCode::from(2));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep {
            kind,
            m_range,
            c_range,
            n_range,
            csv,
        } => {
            let rows = sweep(kind, m_range, c_range, n_range)?;
            let mut buf = Vec::new();
            write_sweep_csv(&rows, &mut buf)?;
            write_out(&csv, &String::from_utf8(buf).expect("csv is utf-8"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Export {
            grid: (m, n),
            labeling,
            windows,
            format,
            out,
        } => {
            let host = Graph::grid(m, n)?;
            let lab = labeling
                .as_deref()
                .map(read)
                .transpose()?
                .map(|t| labeling_from_json(&t))
                .transpose()?;
            if let Some(lab) = &lab {
                lab.check_domain(&host)?;
            }
            let fam = windows.map(|c| enumerate_windows(m, n, c)).transpose()?;
            let text = match (format.as_str(), &lab) {
                ("dot", _) => to_dot(&host, lab.as_ref(), fam.as_ref()),
                (_, Some(lab)) => labeling_to_json(lab) + "\n",
                (_, None) => graph_to_json(&host) + "\n",
            };
            write_out(&out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Core(Error::ResourceLimit(msg))) => {
            eprintln!("error: resource limit: {msg} (raise {CAP_ENV}, default {DEFAULT_MAX_SPACE_LOG2})");
            ExitCode::from(3)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
