//! Command-line front end. Every command writes JSON lines, graph files or
//! DOT text to `out` and diagnostics to `err`.
//!
//! Exit status: 0 on success or pass, 1 when a counterexample, violation or
//! failed claim is found, 2 on usage or input errors.

pub mod dot;
pub mod format;

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::chordality;
use crate::constructions::{construct, Family, FAMILY_NAMES};
use crate::enumeration::{verify_with_progress, VerifyMode, VerifyParams};
use crate::error::Error;
use crate::forbidden::detect_forbidden;
use crate::graph::{DegreeBounds, Digraph, Graph};
use crate::hole_analysis::{analyze_hole, check_hole_statements, Outcome};
use crate::phylogeny::{competition_graph, phylogeny_graph};

pub use dot::{digraph_dot, graph_dot};
pub use format::{parse_digraph, parse_graph, write_digraph, write_graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FOUND: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "phylo",
    version,
    about = "Phylogeny graphs of degree-bounded acyclic digraphs"
)]
struct Cli {
    /// Suppress the version banner on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Competition, underlying or phylogeny graph of a digraph file.
    Build {
        file: PathBuf,
        #[arg(long, conflicts_with_all = ["underlying", "phylogeny"])]
        competition: bool,
        #[arg(long, conflicts_with = "phylogeny")]
        underlying: bool,
        /// The default.
        #[arg(long)]
        phylogeny: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Chordality verdict with a perfect elimination ordering or a hole.
    Check {
        file: PathBuf,
        #[arg(long, required = true)]
        chordal: bool,
    },
    /// Holes of a graph, one per line.
    Holes {
        file: PathBuf,
        #[arg(long)]
        max: Option<usize>,
        #[arg(long, default_value_t = 4)]
        min_len: usize,
    },
    /// Cycle, chords and statement reports for one hole of U(D).
    Analyze {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        hole: Vec<usize>,
        /// Defaults to the largest indegree of the digraph.
        #[arg(long)]
        i: Option<usize>,
        /// Defaults to the largest outdegree of the digraph.
        #[arg(long)]
        j: Option<usize>,
    },
    /// Forbidden induced subgraphs for (i, j) phylogeny graphs.
    Forbidden {
        file: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// One of the extremal digraph families.
    Construct {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(FAMILY_NAMES.iter().copied()))]
        family: String,
        #[arg(long)]
        param: Option<usize>,
        #[arg(long, conflicts_with = "dag")]
        dot: bool,
        /// Print the digraph file instead of the JSON record.
        #[arg(long)]
        dag: bool,
    },
    /// Run a registry statement over a staircase sweep or random samples.
    Verify {
        statement: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        /// Largest vertex count.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        /// Switches to random sampling.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0, requires = "samples")]
        seed: u64,
        /// Fixed arc probability for random sampling.
        #[arg(long, requires = "samples")]
        p: Option<f64>,
    },
    /// Digraph whose phylogeny graph is the given graph, or `none`.
    Realize {
        file: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        /// Hidden vertices allowed; the graph must then be induced.
        #[arg(long, default_value_t = 0)]
        extra: usize,
    },
}

enum Failure {
    Input(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn input(path: &Path, e: Error) -> Failure {
    Failure::Input(format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_digraph(path: &Path) -> Result<Digraph, Failure> {
    parse_digraph(&read(path)?).map_err(|e| input(path, e))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| input(path, e))
}

fn bounds(i: usize, j: usize) -> Result<DegreeBounds, Failure> {
    DegreeBounds::new(i, j).map_err(|e| Failure::Input(e.to_string()))
}

fn line(out: &mut dyn Write, v: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, v).map_err(io::Error::other)?;
    out.write_all(b"\n")?;
    out.flush()
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    if !cli.quiet {
        let _ = writeln!(err, "phylo {}", env!("CARGO_PKG_VERSION"));
    }
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let bad = |e: Error| Failure::Input(e.to_string());
    match command {
        Command::Build {
            file,
            competition,
            underlying,
            dot,
            ..
        } => {
            let d = read_digraph(&file)?;
            let g = if underlying {
                d.underlying_graph()
            } else if competition {
                competition_graph(&d).map_err(|e| input(&file, e))?
            } else {
                phylogeny_graph(&d).map_err(|e| input(&file, e))?
            };
            let text = if dot { graph_dot(&g, None) } else { write_graph(&g) };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Check { file, .. } => {
            let g = read_graph(&file)?;
            line(out, &chordality::is_chordal(&g))?;
            Ok(EXIT_OK)
        }
        Command::Holes { file, max, min_len } => {
            let g = read_graph(&file)?;
            for h in chordality::holes(&g, min_len.max(4), max) {
                line(out, &json!({"len": h.len(), "hole": h.vertices()}))?;
            }
            Ok(EXIT_OK)
        }
        Command::Analyze { file, hole, i, j } => {
            let d = read_digraph(&file)?;
            let b = bounds(
                i.unwrap_or(d.max_indegree().max(1)),
                j.unwrap_or(d.max_outdegree().max(1)),
            )?;
            let ctx = analyze_hole(&d, &hole).map_err(bad)?;
            let reports = check_hole_statements(&d, &hole, b).map_err(bad)?;
            line(
                out,
                &json!({"record": "context", "bounds": [b.i(), b.j()], "context": ctx}),
            )?;
            let mut failed = false;
            for r in &reports {
                failed |= r.outcome == Outcome::Fail;
                let mut v = serde_json::to_value(r).map_err(io::Error::other)?;
                v["record"] = json!("statement");
                line(out, &v)?;
            }
            Ok(if failed { EXIT_FOUND } else { EXIT_OK })
        }
        Command::Forbidden { file, i, j } => {
            let g = read_graph(&file)?;
            let verdict = detect_forbidden(&g, bounds(i, j)?).map_err(bad)?;
            line(out, &verdict)?;
            Ok(if verdict.is_clean() { EXIT_OK } else { EXIT_FOUND })
        }
        Command::Construct {
            family,
            param,
            dot,
            dag,
        } => {
            let r = construct(Family::parse(&family, param).map_err(bad)?).map_err(bad)?;
            if dot {
                out.write_all(digraph_dot(&r.digraph, Some(&r.names())).as_bytes())?;
            } else if dag {
                out.write_all(write_digraph(&r.digraph).as_bytes())?;
            } else {
                let mut v: Value = serde_json::to_value(&r).map_err(io::Error::other)?;
                v["n"] = json!(r.digraph.n());
                v["arcs"] = json!(r.digraph.arcs());
                line(out, &v)?;
            }
            Ok(if r.failed_claims().is_empty() {
                EXIT_OK
            } else {
                EXIT_FOUND
            })
        }
        Command::Verify {
            statement,
            i,
            j,
            n,
            n_min,
            samples,
            seed,
            p,
        } => {
            let b = bounds(i, j)?;
            let mode = match samples {
                Some(samples) => VerifyMode::Random { samples, seed, p },
                None => VerifyMode::Staircase,
            };
            let params = VerifyParams {
                bounds: b,
                n_min,
                n_max: n,
                mode,
            };
            let mut io_err = None;
            let report = verify_with_progress(&statement, &params, |p| {
                if io_err.is_none() {
                    let mut v = serde_json::to_value(p).expect("plain record");
                    v["record"] = json!("progress");
                    io_err = line(out, &v).err();
                }
            })
            .map_err(bad)?;
            if let Some(e) = io_err {
                return Err(e.into());
            }
            for c in &report.counterexamples {
                line(
                    out,
                    &json!({
                        "record": "counterexample",
                        "statement": c.statement,
                        "params": report.params,
                        "digest": c.digest,
                        "verdict": Outcome::Fail,
                        "confirmed": c.confirmed,
                        "witness": c.witness,
                        "subject": c.subject,
                    }),
                )?;
            }
            let mut v = serde_json::to_value(&report).map_err(io::Error::other)?;
            v["record"] = json!("summary");
            line(out, &v)?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_FOUND })
        }
        Command::Realize { file, i, j, extra } => {
            let g = read_graph(&file)?;
            match crate::enumeration::realize(&g, bounds(i, j)?, extra).map_err(bad)? {
                Some(d) => out.write_all(write_digraph(&d).as_bytes())?,
                None => out.write_all(b"none\n")?,
            }
            Ok(EXIT_OK)
        }
    }
}
