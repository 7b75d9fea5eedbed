mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use upm_core::{census, classify, inverse_graph, to_dot, to_graph6, unique_pm_graphs};

use report::Report;

#[derive(Parser)]
#[command(
    name = "upm",
    version,
    about = "Invertibility of graphs with a unique perfect matching"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(clap::Args)]
struct GraphArgs {
    /// graph6 string or edge list (1-based `u v` lines)
    graph: Option<String>,
    /// Read the graph from a file, or `-` for standard input
    #[arg(long, conflicts_with = "graph")]
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(clap::Args)]
struct CensusArgs {
    /// Vertex count (2, 4 or 6)
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Determinant, integrality, bipartiteness, signings and verdict
    Classify(GraphArgs),
    /// Inverse multigraph with its signing
    Invert(GraphArgs),
    /// Connected graphs with a unique perfect matching, one graph6 per line
    Enumerate(CensusArgs),
    /// Per-graph verdict table with aggregate counts
    Table(CensusArgs),
    /// Self-invertibility, containment and iso-spectrality relations
    Relations(CensusArgs),
}

impl GraphArgs {
    fn load(&self) -> Result<upm_core::SimpleGraph> {
        let text = match (&self.graph, &self.input) {
            (Some(g), _) => g.clone(),
            (None, Some(path)) => input::read_source(path)?,
            (None, None) => bail!("no graph given; pass a graph6 string or --input <path|->"),
        };
        input::parse_graph(&text).context("parsing input graph")
    }
}

fn census_order(n: usize) -> Result<usize> {
    if ![2, 4, 6].contains(&n) {
        bail!("unsupported vertex count {n}; expected 2, 4 or 6");
    }
    Ok(n)
}

fn format_or(f: Option<Format>, default: Format, allowed: &[Format]) -> Result<Format> {
    let f = f.unwrap_or(default);
    if !allowed.contains(&f) {
        bail!("format {f:?} is not available for this command");
    }
    Ok(f)
}

fn json<T: Serialize>(command: String, input: Vec<String>, payload: T) -> String {
    Report::new(command, input, payload).to_json()
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Classify(args) => {
            let format = format_or(args.format, Format::Text, &[Format::Text, Format::Json])?;
            let g = args.load()?;
            let g6 = to_graph6(&g)?;
            let c = classify(&g);
            Ok(match format {
                Format::Json => json("classify".into(), vec![g6], &c),
                _ => report::classification_text(&g6, &c),
            })
        }
        Command::Invert(args) => {
            let format = format_or(
                args.format,
                Format::Dot,
                &[Format::Dot, Format::Json, Format::Text],
            )?;
            let g = args.load()?;
            let g6 = to_graph6(&g)?;
            let inv = match inverse_graph(&g) {
                Ok(inv) => inv,
                Err(upm_core::Error::NotInvertible(v)) => {
                    bail!(
                        "graph {g6} is not invertible: verdict {v} ({})",
                        v.describe()
                    )
                }
                Err(e) => return Err(e.into()),
            };
            Ok(match format {
                Format::Json => json("invert".into(), vec![g6], &inv),
                Format::Text => report::inverse_text(&inv),
                Format::Dot => to_dot(&inv.graph),
            })
        }
        Command::Enumerate(args) => {
            let format = format_or(args.format, Format::Text, &[Format::Text, Format::Json])?;
            let n = census_order(args.n)?;
            let graphs = unique_pm_graphs(n)?
                .iter()
                .map(to_graph6)
                .collect::<upm_core::Result<Vec<_>>>()?;
            Ok(match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Payload {
                        n: usize,
                        count: usize,
                        graphs: Vec<String>,
                    }
                    json(
                        format!("enumerate --n {n}"),
                        Vec::new(),
                        Payload {
                            n,
                            count: graphs.len(),
                            graphs,
                        },
                    )
                }
                _ => graphs.iter().map(|g| format!("{g}\n")).collect(),
            })
        }
        Command::Table(args) => {
            let format = format_or(args.format, Format::Text, &[Format::Text, Format::Json])?;
            let c = census(census_order(args.n)?)?;
            Ok(match format {
                Format::Json => json(
                    format!("table --n {}", c.n),
                    c.entries.iter().map(|e| e.graph6.clone()).collect(),
                    report::table_payload(&c),
                ),
                _ => report::table_text(&c),
            })
        }
        Command::Relations(args) => {
            let format = format_or(args.format, Format::Text, &[Format::Text, Format::Json])?;
            let c = census(census_order(args.n)?)?;
            Ok(match format {
                Format::Json => json(
                    format!("relations --n {}", c.n),
                    c.entries.iter().map(|e| e.graph6.clone()).collect(),
                    report::relations_payload(&c),
                ),
                _ => report::relations_text(&c),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
