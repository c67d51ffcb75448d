//! Argument parsing and the `magnitude`, `pages` and `verify` commands.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use mpss_core::digraph::DiGraph;
use mpss_core::homalg::Ring;
use mpss_core::mpss::compute_pages;

use crate::family::parse_family;
use crate::io::{read_graph, InputError};
use crate::report::{Format, Report};
use crate::verify::{self, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mpss",
    version,
    about = "Magnitude-path spectral sequences of directed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Magnitude homology table in (k, l) coordinates.
    Magnitude {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Pages of the spectral sequence in (p, q) coordinates.
    Pages {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Inclusive page range `r0..r1`, or a single page.
        #[arg(long, default_value = "1..2")]
        pages: String,
        /// Attach a representative chain to every generator.
        #[arg(long)]
        representatives: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Builtin family, e.g. `Zm:3`, `Cmn:4,3`, `Sn:2`, `cone:Zm:3`, `box:Zm:3xSn:1`.
    #[arg(long)]
    family: Option<String>,
    /// Graph file in the text or JSON format.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GraphArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Coefficients: `Z`, `Q` or `Fp:<p>`.
    #[arg(long, default_value = "Q")]
    ring: String,
    /// Length truncation; defaults to twice the diameter plus one.
    #[arg(long)]
    lmax: Option<u32>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn parse_ring(s: &str) -> Result<Ring, InputError> {
    match s.trim() {
        "Z" => Ok(Ring::Integers),
        "Q" => Ok(Ring::Rationals),
        other => {
            let p = other
                .strip_prefix("Fp:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| {
                    InputError::Argument(format!("unknown ring `{other}`; use Z, Q or Fp:<p>"))
                })?;
            Ok(Ring::prime_field(p)?)
        }
    }
}

/// `r0..r1` (inclusive) or `r`.
pub fn parse_page_range(s: &str) -> Result<Vec<u32>, InputError> {
    let bad = || InputError::Argument(format!("invalid page range `{s}`; use r0..r1"));
    let (a, b) = s.split_once("..").unwrap_or((s, s));
    let (a, b) = (
        a.trim().parse::<u32>().map_err(|_| bad())?,
        b.trim().parse::<u32>().map_err(|_| bad())?,
    );
    if a > b {
        return Err(bad());
    }
    Ok((a..=b).collect())
}

struct Loaded {
    name: String,
    graph: DiGraph,
    ring: Ring,
    l_max: u32,
}

fn load(args: &GraphArgs) -> Result<Loaded, InputError> {
    let (name, graph) = match (&args.source.family, &args.source.input) {
        (Some(f), _) => (f.clone(), parse_family(f)?),
        (None, Some(path)) => (path.display().to_string(), read_graph(path)?),
        (None, None) => {
            return Err(InputError::Argument(
                "one of --family or --input is required".into(),
            ))
        }
    };
    let ring = parse_ring(&args.ring)?;
    let l_max = args
        .lmax
        .unwrap_or_else(|| 2 * graph.metric().diameter() + 1);
    Ok(Loaded {
        name,
        graph,
        ring,
        l_max,
    })
}

fn configure_threads() -> Result<(), InputError> {
    if let Ok(s) = std::env::var("MPSS_THREADS") {
        let n = s
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| {
                InputError::Argument(format!(
                    "MPSS_THREADS must be a positive integer, got `{s}`"
                ))
            })?;
        // a second configuration in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    Ok(())
}

fn emit(text: &str, out: &Option<PathBuf>, stdout: &mut dyn Write) -> Result<(), InputError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| InputError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| InputError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<i32, InputError> {
    configure_threads()?;
    match cli.command {
        Command::Magnitude { graph, output } => {
            let g = load(&graph)?;
            let pages = compute_pages(&g.graph, &[1], g.l_max, g.ring, false);
            let report = Report::new(&g.name, &g.ring.to_string(), g.l_max, &pages);
            let text = match output.format {
                Format::Text => report.to_magnitude_text(),
                f => report.render(f),
            };
            emit(&text, &output.out, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Pages {
            graph,
            output,
            pages,
            representatives,
        } => {
            let g = load(&graph)?;
            let rs = parse_page_range(&pages)?;
            let computed = compute_pages(&g.graph, &rs, g.l_max, g.ring, representatives);
            let report = Report::new(&g.name, &g.ring.to_string(), g.l_max, &computed);
            emit(&report.render(output.format), &output.out, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite, out } => {
            let checks = verify::run(suite);
            let failed = checks.iter().filter(|c| !c.passed).count();
            let mut text: String = checks.iter().map(|c| c.line() + "\n").collect();
            text.push_str(&format!(
                "{} passed, {failed} failed\n",
                checks.len() - failed
            ));
            emit(&text, &out, stdout)?;
            Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILURE })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rings_and_ranges() {
        assert_eq!(parse_ring("Z").unwrap(), Ring::Integers);
        assert_eq!(parse_ring("Fp:7").unwrap(), Ring::PrimeField(7));
        assert!(parse_ring("Fp:8").is_err());
        assert!(parse_ring("R").is_err());
        assert_eq!(parse_page_range("1..3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_page_range("2").unwrap(), vec![2]);
        assert!(parse_page_range("3..1").is_err());
        assert!(parse_page_range("a..b").is_err());
    }
}
