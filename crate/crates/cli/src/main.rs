//! `monoid`: validate, classify, construct and sample monoid hypersurfaces.

mod commands;
mod document;
mod input;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use monoid_core::construct::ConstructionSpec;
use monoid_core::monoid::DEFAULT_SEED;
use monoid_core::par::{self, Execution};
use monoid_core::sample::{render_mesh, MeshFormat};

use document::{ReportDocument, EXIT_INTERNAL, EXIT_OK, EXIT_PARSE, SCHEMA};
use input::{parse_input, polynomial_lines, read_lines};

#[derive(Parser)]
#[command(name = "monoid", version, about = "Exact analysis of monoid hypersurfaces")]
struct Cli {
    /// Seed for the random shears used by the classifiers.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Write the JSON report to PATH (`-` for stdout).
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<String>,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the input defines a monoid.
    Validate {
        /// One file (one line `F` or two lines `f_{d-1}`, `f_d`), several
        /// files, or the polynomials inline.
        #[arg(required = true)]
        input: Vec<String>,
    },
    /// Classify the singular points.
    Classify {
        #[arg(required = true)]
        input: Vec<String>,
    },
    /// Build a monoid from a JSON construction spec.
    Construct {
        spec: PathBuf,
        /// Write the result as a two-line input file.
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Sample the natural parameterization on a grid.
    Sample {
        #[arg(required = true)]
        input: Vec<String>,
        #[arg(long, default_value_t = 50)]
        grid: usize,
        /// Affine chart of the parameter plane: coordinate index set to 1.
        #[arg(long, default_value_t = 2)]
        chart: usize,
        #[arg(long, value_enum, default_value_t = Format::Obj)]
        format: Format,
        /// Mesh destination; stdout when absent.
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Print the JSON schema of the report.
    Schema,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Obj,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let code = match run(&cli, start) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_INTERNAL
        }
    };
    ExitCode::from(code as u8)
}

fn run(cli: &Cli, start: Instant) -> Result<i32, String> {
    let timing = |doc: &mut ReportDocument| {
        if cli.timing {
            doc.timing_ms = Some(start.elapsed().as_secs_f64() * 1000.0);
        }
    };
    match &cli.command {
        Command::Schema => {
            print!("{SCHEMA}");
            Ok(EXIT_OK)
        }
        Command::Validate { input } | Command::Classify { input } => {
            let name = if matches!(cli.command, Command::Validate { .. }) { "validate" } else { "classify" };
            let mut docs = batch(name, input, cli.seed);
            docs.iter_mut().for_each(timing);
            let code = docs.iter().map(|d| d.exit_code).max().unwrap_or(EXIT_OK);
            if let [doc] = docs.as_slice() {
                emit(cli, doc)?;
            } else {
                emit_many(cli, &docs)?;
            }
            Ok(code)
        }
        Command::Construct { spec, output } => {
            let text = std::fs::read_to_string(spec).map_err(|e| format!("{}: {e}", spec.display()))?;
            let (mut doc, _monoid) = match serde_json::from_str::<ConstructionSpec>(&text) {
                Ok(s) => commands::construct(&s, cli.seed),
                Err(e) => (commands::usage_failure("construct", cli.seed, format!("spec: {e}"), EXIT_PARSE), None),
            };
            timing(&mut doc);
            if let (Some(path), Some(p)) = (output, &doc.polynomial) {
                std::fs::write(path, format!("{}\n{}\n", p.f_lo, p.f_hi)).map_err(|e| e.to_string())?;
            }
            emit(cli, &doc)?;
            Ok(doc.exit_code)
        }
        Command::Sample { input, grid, chart, format, output } => {
            let outcome = match read_lines(input) {
                Err(msg) => {
                    let doc = commands::usage_failure("sample", cli.seed, msg, EXIT_PARSE);
                    commands::SampleOutcome { doc, cloud: None }
                }
                Ok((source, lines)) => match parse_input(source, lines) {
                    Ok(p) => commands::sample(&p, cli.seed, *grid, *chart),
                    Err(e) => commands::SampleOutcome { doc: commands::input_failure("sample", cli.seed, &e), cloud: None },
                },
            };
            let mut doc = outcome.doc;
            timing(&mut doc);
            if let Some(cloud) = &outcome.cloud {
                let fmt = match format {
                    Format::Obj => MeshFormat::Obj,
                    Format::Csv => MeshFormat::Csv,
                };
                let mesh = render_mesh(cloud, fmt);
                match output {
                    Some(path) => std::fs::write(path, mesh).map_err(|e| e.to_string())?,
                    None => std::io::stdout().write_all(mesh.as_bytes()).map_err(|e| e.to_string())?,
                }
                eprintln!("{}", commands::sample_note(cloud));
            }
            if cli.json.is_some() {
                emit(cli, &doc)?;
            } else if let Some(e) = &doc.error {
                eprintln!("error: {}: {}", e.kind, e.message);
            }
            Ok(doc.exit_code)
        }
    }
}

/// Several existing files are classified independently, possibly in
/// parallel; anything else is a single input.
fn batch(name: &'static str, args: &[String], seed: u64) -> Vec<ReportDocument> {
    let files = args.len() > 1 && args.iter().all(|a| Path::new(a).is_file());
    if !files {
        return vec![single(name, read_lines(args), seed)];
    }
    par::map(args, Execution::default(), |path| {
        let read = std::fs::read_to_string(path).map(|t| (path.clone(), polynomial_lines(&t))).map_err(|e| format!("{path}: {e}"));
        single(name, read, seed)
    })
}

fn single(name: &'static str, read: Result<(String, Vec<String>), String>, seed: u64) -> ReportDocument {
    let (source, lines) = match read {
        Ok(x) => x,
        Err(msg) => return commands::usage_failure(name, seed, msg, EXIT_PARSE),
    };
    match parse_input(source, lines) {
        Ok(p) if name == "validate" => commands::validate(&p, seed),
        Ok(p) => commands::classify(&p, seed),
        Err(e) => commands::input_failure(name, seed, &e),
    }
}

fn summary(doc: &ReportDocument) -> String {
    if let Some(e) = &doc.error {
        let at = match (e.line, e.position) {
            (Some(l), Some(p)) => format!(" (line {l}, position {p})"),
            (None, Some(p)) => format!(" (position {p})"),
            _ => String::new(),
        };
        return format!("{}: {}: {}{at}", doc.command, e.kind, e.message);
    }
    let mut s = format!("{}: valid", doc.command);
    if let Some(q) = &doc.quartic {
        s += &format!("; case {}; singularities {}", q.case, q.labels.join(", "));
    } else if let Some(r) = &doc.surface {
        s += &format!("; {} extra singularities", r.extra_singularities);
    }
    if let Some(p) = &doc.polynomial {
        if doc.command == "construct" {
            s += &format!("\n{}\n{}", p.f_lo, p.f_hi);
        }
    }
    s
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string_pretty(v).map(|s| s + "\n").map_err(|e| e.to_string())
}

fn write_json(cli: &Cli, json: String) -> Result<(), String> {
    match cli.json.as_deref() {
        Some("-") | None => {
            print!("{json}");
            Ok(())
        }
        Some(path) => std::fs::write(path, json).map_err(|e| format!("{path}: {e}")),
    }
}

fn emit(cli: &Cli, doc: &ReportDocument) -> Result<(), String> {
    if cli.json.as_deref().is_some_and(|p| p != "-") {
        println!("{}", summary(doc));
    }
    write_json(cli, to_json(doc)?)
}

fn emit_many(cli: &Cli, docs: &[ReportDocument]) -> Result<(), String> {
    if cli.json.as_deref().is_some_and(|p| p != "-") {
        for d in docs {
            println!("{}", summary(d));
        }
    }
    write_json(cli, to_json(&docs)?)
}
