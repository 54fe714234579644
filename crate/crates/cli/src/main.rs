//! `plcomb`: reduced words, chamber sets, partial quivers, Lusztig cones,
//! rectangle configurations and regions of linearity from the command line.
//!
//! JSON goes to standard output (or to `--json FILE`), diagnostics to
//! standard error. Exit status is 0 on success, 1 on a domain or usage
//! error and 2 when a verification suite reports a failure.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{Outcome, Output};

const DOMAIN_ERROR: u8 = 1;
const VERIFICATION_FAILURE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "plcomb", version, about = "Piecewise-linear combinatorics of reduced words in type A")]
struct Cli {
    /// Write the output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced words of the longest element and their commutation classes.
    #[command(subcommand)]
    Words(WordsCommand),
    /// Bounded-chamber sets of a wiring diagram.
    Chambers(ChambersArgs),
    /// Partial quivers of a word, or all partial quivers of a rank.
    Quivers(QuiversArgs),
    /// Polyhedral cones attached to a word.
    #[command(subcommand)]
    Cone(ConeCommand),
    /// Rectangle configuration and root set of a partial quiver.
    Rectangles(RectanglesArgs),
    /// Regions of linearity of the reparametrization map.
    Regions(RegionsArgs),
    /// Golden-value and property suites.
    Verify(VerifyArgs),
    /// Draw a wiring diagram or a rectangle configuration.
    Render(RenderArgs),
}

#[derive(Subcommand, Debug)]
enum WordsCommand {
    /// Every reduced word of the longest element.
    Enumerate {
        #[arg(long)]
        rank: usize,
        /// Print only the number of words.
        #[arg(long)]
        count: bool,
    },
    /// Commutation classes keyed by their least member.
    Classes {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        count: bool,
    },
    /// Classes joined by single braid moves.
    Graph {
        #[arg(long)]
        rank: usize,
    },
    /// The two standard words j and j'.
    Standard {
        #[arg(long)]
        rank: usize,
    },
    /// Reducedness of an arbitrary word, with its root order when it is a
    /// reduced word of the longest element.
    Check {
        #[arg(long)]
        word: String,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Sequence of moves turning one reduced word into another.
    Path {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_enum, default_value_t = PathMethod::Recursive)]
        method: PathMethod,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PathMethod {
    /// Surface the first letter of the target and recurse.
    Recursive,
    /// Breadth-first search; ranks up to 5 only.
    Shortest,
    /// Through the reversed source word.
    Detour,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Svg,
}

#[derive(Args, Debug)]
struct ChambersArgs {
    #[arg(long)]
    word: String,
    #[arg(long)]
    rank: Option<usize>,
    /// Draw the diagram instead of printing JSON.
    #[arg(long, value_enum)]
    render: Option<Format>,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["word", "rank"]))]
struct QuiversArgs {
    #[arg(long)]
    word: Option<String>,
    /// With `--word`, the rank of the word; alone, list all quivers of
    /// this rank.
    #[arg(long)]
    rank: Option<usize>,
    /// Pair every quiver with its chamber set.
    #[arg(long)]
    with_chamber_sets: bool,
    /// One quiver per line instead of JSON.
    #[arg(long)]
    text: bool,
}

#[derive(Subcommand, Debug)]
enum ConeCommand {
    /// Lusztig cone of a reduced word.
    Lusztig {
        #[arg(long)]
        word: String,
        #[arg(long)]
        rank: Option<usize>,
        /// Include the extreme rays of the cone cut by the orthant.
        #[arg(long)]
        rays: bool,
    },
}

#[derive(Args, Debug)]
struct RectanglesArgs {
    #[arg(long, allow_hyphen_values = true)]
    quiver: String,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long, value_enum)]
    render: Option<Format>,
}

#[derive(Args, Debug)]
struct RegionsArgs {
    #[arg(long)]
    rank: usize,
    /// Source word; defaults to the standard word j.
    #[arg(long, requires = "to")]
    from: Option<String>,
    /// Target word; defaults to the standard word j'.
    #[arg(long, requires = "from")]
    to: Option<String>,
    /// Facet count histogram.
    #[arg(long)]
    histogram: bool,
    /// Match commutation classes with regions.
    #[arg(long)]
    match_classes: bool,
    /// Cut regions by the nonnegative orthant and decompose them.
    #[arg(long)]
    orthant: bool,
    /// Compare the class graph with the facet graph of minimal regions.
    #[arg(long)]
    graph: bool,
    /// Include every region's matrix and inequalities.
    #[arg(long)]
    atlas: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    A2,
    A3,
    A4,
    Properties,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum, default_value_t = SuiteName::All)]
    suite: SuiteName,
    /// Random points per rank for the property checks.
    #[arg(long, default_value_t = 10_000)]
    points: usize,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("subject").required(true).args(["word", "quiver"]))]
struct RenderArgs {
    #[arg(long, value_enum)]
    format: Format,
    #[arg(long)]
    word: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    quiver: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
}

/// Applies `PLCOMB_THREADS` to the global thread pool.
fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("PLCOMB_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("PLCOMB_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| e.to_string())
}

fn emit(output: &Output, target: Option<&PathBuf>) -> std::io::Result<()> {
    let text = match output {
        Output::Json(v) => {
            let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
            s.push('\n');
            s
        }
        Output::Text(s) => s.clone(),
    };
    match target {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(DOMAIN_ERROR) } else { ExitCode::SUCCESS };
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(DOMAIN_ERROR);
    }
    let Outcome { output, failed } = match commands::run(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(DOMAIN_ERROR);
        }
    };
    if let Err(e) = emit(&output, cli.json.as_ref()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: cannot write output: {e}");
            return ExitCode::from(DOMAIN_ERROR);
        }
    }
    if failed {
        ExitCode::from(VERIFICATION_FAILURE)
    } else {
        ExitCode::SUCCESS
    }
}
