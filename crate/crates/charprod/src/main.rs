use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use charprod::cli::{self, ChiSelector, Command, GroupSource, RunConfig};

#[derive(Parser)]
#[command(
    name = "charprod",
    version,
    about = "Exact character tables and products of irreducible characters for small finite groups"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Source {
    /// zoo label, e.g. C12, D4, Q8, S4, A6, elem:2:3, extraspecial:3, aE:7:3, C2xS3
    #[arg(long)]
    zoo: Option<String>,
    /// group description file (perm or cayley format)
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct Chi {
    /// character selector: row=<i> (1-based) or deg=<d> (first of that degree)
    #[arg(long, value_parser = ChiSelector::parse)]
    chi: Option<ChiSelector>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the character table
    Table {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decompose chi * conj(chi) into irreducible constituents
    Decompose {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        chi: Chi,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print eta and the multiplicity multiset of chi * conj(chi)
    Eta {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        chi: Chi,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the maximal reducing chain for (G, chi)
    Chain {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        chi: Chi,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the lemma/theorem verifiers for one (G, chi) or over the corpus
    Verify {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        chi: Chi,
        /// sweep the whole corpus instead of a single pair
        #[arg(long)]
        corpus: bool,
        /// corpus order bound
        #[arg(long, default_value_t = 128)]
        max_order: usize,
        /// enumerate all maximal chains (order ≤ 96) instead of one
        #[arg(long)]
        exhaustive_chains: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the corpus group labels and orders
    Corpus {
        #[arg(long, default_value_t = 128)]
        max_order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest product of positive integers summing to n
    Pmax {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (config, out_path) = match cli.cmd {
        Cmd::Table { src, out } => {
            let mut c = RunConfig::new(Command::Table);
            c.group_source = source(src);
            (c, out)
        }
        Cmd::Decompose { src, chi, out } => {
            let mut c = RunConfig::new(Command::Decompose);
            c.group_source = source(src);
            c.chi = chi.chi;
            (c, out)
        }
        Cmd::Eta { src, chi, out } => {
            let mut c = RunConfig::new(Command::Eta);
            c.group_source = source(src);
            c.chi = chi.chi;
            (c, out)
        }
        Cmd::Chain { src, chi, out } => {
            let mut c = RunConfig::new(Command::Chain);
            c.group_source = source(src);
            c.chi = chi.chi;
            (c, out)
        }
        Cmd::Verify {
            src,
            chi,
            corpus,
            max_order,
            exhaustive_chains,
            out,
        } => {
            let mut c = RunConfig::new(Command::Verify);
            c.group_source = source(src);
            c.chi = chi.chi;
            c.corpus = corpus;
            c.max_order = max_order;
            c.exhaustive_chains = exhaustive_chains;
            (c, out)
        }
        Cmd::Corpus { max_order, out } => {
            let mut c = RunConfig::new(Command::Corpus);
            c.max_order = max_order;
            (c, out)
        }
        Cmd::Pmax { n, out } => {
            let mut c = RunConfig::new(Command::Pmax);
            c.pmax_n = Some(n);
            (c, out)
        }
    };
    let (code, report) = cli::run(&config);
    if let Some(path) = out_path {
        if let Err(e) = std::fs::write(&path, &report) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    } else if code == 0 || code == 2 {
        print!("{report}");
    } else {
        eprint!("{report}");
    }
    ExitCode::from(code as u8)
}

fn source(src: Source) -> Option<GroupSource> {
    match (src.zoo, src.file) {
        (Some(label), None) => Some(GroupSource::Zoo(label)),
        (None, Some(path)) => Some(GroupSource::File(path)),
        (Some(_), Some(_)) => None, // rejected downstream with a clear message
        (None, None) => None,
    }
}
