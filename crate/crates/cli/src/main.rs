use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lingdist::editdist::DEFAULT_ALIGNMENT_LIMIT;
use lingdist::Linkage;
use lingdist_cli::{exit, AlignRequest, CliError, Outcome, RunConfig};

#[derive(Parser)]
#[command(
    name = "lingdist",
    version,
    about = "Phonetic distance analysis of word lists"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-concept distances, densities, t-scores and Bhattacharyya coefficients
    WordsAnalyse(Common),
    /// Cluster languages and score every cut by silhouette
    Cluster(Common),
    /// Regress linguistic distance on geographic distance
    Relationship(Common),
    /// Cluster all words of all languages together
    AllToAll(Common),
    /// Print the distance and co-optimal alignments of two words
    Align {
        a: String,
        b: String,
        #[arg(long, default_value = "editable")]
        table: String,
        #[arg(long)]
        gap: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_ALIGNMENT_LIMIT)]
        limit: usize,
    },
}

#[derive(Args)]
struct Common {
    /// Word database of `functor(language,[word,...]).` facts
    #[arg(long)]
    lexicon: PathBuf,
    /// Built-in table name (editable, editableGaby) or a table file
    #[arg(long, default_value = "editable")]
    table: String,
    /// Override the table's gap penalty
    #[arg(long)]
    gap: Option<f64>,
    /// single, complete or average
    #[arg(long, default_value_t = Linkage::Complete)]
    linkage: Linkage,
    /// Force this many clusters
    #[arg(long)]
    k: Option<usize>,
    /// Histogram bins for Bhattacharyya coefficients
    #[arg(long)]
    bins: Option<usize>,
    /// CSV of place_a,place_b,distance_km
    #[arg(long)]
    geo: Option<PathBuf>,
    /// CSV of label,class for purity
    #[arg(long)]
    truth: Option<PathBuf>,
    /// Output directory
    #[arg(long)]
    out: PathBuf,
}

impl From<Common> for RunConfig {
    fn from(c: Common) -> RunConfig {
        RunConfig {
            lexicon: c.lexicon,
            table: c.table,
            gap: c.gap,
            linkage: c.linkage,
            k: c.k,
            bins: c.bins,
            geo: c.geo,
            truth: c.truth,
            out: c.out,
        }
    }
}

type Workflow = fn(&RunConfig) -> Result<Outcome, CliError>;

fn dispatch(command: Command) -> Result<Outcome, CliError> {
    let (common, workflow): (Common, Workflow) = match command {
        Command::WordsAnalyse(c) => (c, lingdist_cli::words_analyse),
        Command::Cluster(c) => (c, lingdist_cli::cluster),
        Command::Relationship(c) => (c, lingdist_cli::relationship),
        Command::AllToAll(c) => (c, lingdist_cli::all_to_all),
        Command::Align {
            a,
            b,
            table,
            gap,
            limit,
        } => {
            return lingdist_cli::align(&AlignRequest {
                a,
                b,
                table,
                gap,
                limit,
            })
        }
    };
    lingdist_cli::run(&common.into(), workflow)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(outcome) => {
            for w in &outcome.warnings {
                eprintln!("warning: {}", w);
            }
            for line in &outcome.summary {
                println!("{}", line);
            }
            ExitCode::from(exit::OK as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
