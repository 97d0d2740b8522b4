//! Command line front end: `lift`, `validate`, `info` and `stats`.
//!
//! Every run ends with exit status 0 (success), 1 (domain or validation
//! failure) or 2 (usage or parse error). Summaries go to standard output and
//! diagnostics to standard error; the machine-readable result is the output
//! file.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::domains::{Domain, DomainKind};
use crate::features::{lift_features, Aggregation};
use crate::io::{self, IoError};
use crate::liftings::{registry, LiftError, Params};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "toplift",
    version,
    about = "Lift data between graph, hypergraph, complex and pointcloud domains"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply a lifting to an input file.
    Lift(LiftArgs),
    /// Check the invariants of a domain file.
    Validate(InputArgs),
    /// List registered liftings.
    Info(InfoArgs),
    /// Print summary statistics of a domain file.
    Stats(InputArgs),
}

#[derive(Debug, Args)]
struct LiftArgs {
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    kind: Option<DomainKind>,
    #[arg(long)]
    lifting: Option<String>,
    /// Parameter override, NAME=VALUE. Repeatable.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    /// Aggregate node features onto every cell and write `<output>.features`.
    #[arg(long, value_parser = ["sum", "mean", "max"])]
    features: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Pipeline file; flags override its records.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    kind: Option<DomainKind>,
}

#[derive(Debug, Args)]
struct InfoArgs {
    #[arg(long)]
    source: Option<DomainKind>,
    #[arg(long)]
    dest: Option<DomainKind>,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl From<LiftError> for Failure {
    fn from(e: LiftError) -> Self {
        let code = if e.is_usage() {
            EXIT_USAGE
        } else {
            EXIT_INVALID
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Lift(e) => e.into(),
            IoError::Invalid { .. } => Failure::invalid(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

/// Runs the tool with the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the tool writing summaries to `out` and diagnostics to `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Lift(a) => cmd_lift(a, out),
        Command::Validate(a) => cmd_validate(&a, out),
        Command::Info(a) => cmd_info(&a, out),
        Command::Stats(a) => cmd_stats(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn emit(out: &mut dyn Write, line: &str) -> Result<(), Failure> {
    writeln!(out, "{line}")
        .map_err(|e| Failure::invalid(format!("cannot write to standard output: {e}")))
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn features_path(output: &Path) -> PathBuf {
    let mut name = output.as_os_str().to_owned();
    name.push(".features");
    PathBuf::from(name)
}

fn cmd_lift(a: LiftArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut input = None;
    let mut lifting = None;
    let mut params = Params::new();
    let mut aggregation = None;
    let mut output = None;
    if let Some(config) = &a.config {
        let p = io::read_config(config)?;
        input = p.input;
        lifting = Some(p.lifting);
        params = p.params;
        aggregation = p.features;
        output = p.output;
    }

    if let Some(path) = a.input {
        let kind = a
            .kind
            .or(input.as_ref().map(|(k, _)| *k))
            .ok_or_else(|| Failure::usage("--input requires --kind"))?;
        input = Some((kind, path));
    } else if let (Some(kind), Some((k, _))) = (a.kind, input.as_mut()) {
        *k = kind;
    }
    lifting = a.lifting.or(lifting);
    for assignment in &a.params {
        params.set_assignment(assignment).map_err(LiftError::from)?;
    }
    if let Some(agg) = &a.features {
        aggregation = Some(
            agg.parse::<Aggregation>()
                .map_err(|e| Failure::usage(e.to_string()))?,
        );
    }
    output = a.output.or(output);

    let lifting = lifting.ok_or_else(|| Failure::usage("missing --lifting"))?;
    let (kind, input) = input.ok_or_else(|| Failure::usage("missing --input"))?;
    let output = output.ok_or_else(|| Failure::usage("missing --output"))?;

    let descriptor = registry().get(&lifting)?;
    if kind != descriptor.source {
        return Err(LiftError::KindMismatch {
            lifting,
            expected: descriptor.source,
            found: kind,
        }
        .into());
    }
    let domain = io::read_domain(&input, kind)?;
    let lifted = registry().apply(&lifting, &domain, &params)?;

    let features = match aggregation {
        Some(agg) => {
            let x = lifted.node_features().ok_or_else(|| {
                Failure::invalid(format!(
                    "cannot aggregate features: the {} output has no node features",
                    lifted.kind()
                ))
            })?;
            Some(lift_features(&lifted, x, agg).map_err(|e| Failure::invalid(e.to_string()))?)
        }
        None => None,
    };
    let write_failure = |e: IoError| Failure::invalid(e.to_string());
    io::write_domain(&lifted, &output).map_err(write_failure)?;
    if let Some(fm) = &features {
        io::write_feature_matrix(fm, features_path(&output)).map_err(write_failure)?;
    }
    emit(out, &join(&lifted.cells_per_rank()))?;
    Ok(EXIT_OK)
}

fn read_unchecked(a: &InputArgs) -> Result<Domain, Failure> {
    Ok(io::read_domain_unchecked(&a.input, a.kind)?)
}

fn cmd_validate(a: &InputArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let domain = read_unchecked(a)?;
    let report = domain.validate();
    if report.is_empty() {
        emit(out, "OK")?;
        Ok(EXIT_OK)
    } else {
        for v in report.iter() {
            emit(out, &v.to_string())?;
        }
        Ok(EXIT_INVALID)
    }
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

fn cmd_info(a: &InfoArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let rows: Vec<[String; 6]> = registry()
        .list(a.source, a.dest)
        .into_iter()
        .map(|d| {
            let params = d
                .params
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ");
            [
                d.id.clone(),
                d.source.short().to_string(),
                d.dest.short().to_string(),
                yes_no(d.feature_based).to_string(),
                yes_no(d.connectivity_based).to_string(),
                if params.is_empty() {
                    "-".to_string()
                } else {
                    params
                },
            ]
        })
        .collect();
    let header = ["id", "source", "dest", "feature", "connectivity", "params"].map(String::from);
    let mut widths = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    for row in std::iter::once(&header).chain(&rows) {
        let cells: Vec<String> = row
            .iter()
            .zip(widths)
            .enumerate()
            .map(|(i, (cell, w))| {
                if i + 1 == row.len() {
                    cell.clone()
                } else {
                    format!("{cell:<w$}")
                }
            })
            .collect();
        emit(out, &cells.join("  "))?;
    }
    Ok(EXIT_OK)
}

fn cmd_stats(a: &InputArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let domain = read_unchecked(a)?;
    let report = domain.validate();
    if !report.is_empty() {
        return Err(IoError::Invalid {
            kind: domain.kind(),
            report,
        }
        .into());
    }
    let dims = join(&domain.cells_per_rank());
    match &domain {
        Domain::Simplicial(sc) => emit(
            out,
            &format!("dims: {dims}, chi: {}", sc.euler_characteristic()),
        )?,
        _ => emit(out, &format!("dims: {dims}"))?,
    }
    match &domain {
        Domain::Graph(g) if g.n() > 0 => {
            let deg = g.degrees();
            let min = deg.iter().min().copied().unwrap_or(0);
            let max = deg.iter().max().copied().unwrap_or(0);
            let mean = deg.iter().sum::<usize>() as f64 / deg.len() as f64;
            emit(out, &format!("degrees: min {min} max {max} mean {mean}"))?;
        }
        Domain::Hypergraph(h) => {
            let mut sizes = std::collections::BTreeMap::<usize, usize>::new();
            for e in h.hyperedges() {
                *sizes.entry(e.len()).or_default() += 1;
            }
            let hist: Vec<String> = sizes.iter().map(|(s, c)| format!("{s}:{c}")).collect();
            emit(out, &format!("sizes: {}", hist.join(" ")))?;
        }
        _ => {}
    }
    Ok(EXIT_OK)
}
