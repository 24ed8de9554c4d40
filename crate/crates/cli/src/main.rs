//! `kappa`: classify subsets of finite groups, build free-group partitions,
//! run partition searches and the verification suites.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kappa_core::budget::DEFAULT_NODE_BUDGET;
use kappa_core::claims::Suite;
use kappa_core::classify::ThickVariant;
use kappa_core::group::DEFAULT_MAX_ORDER;
use kappa_core::Side;

/// Exit code for malformed input, on top of clap's own usage errors.
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "kappa", version, about = "Thick, large and small subsets of groups")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Directory that receives `{timestamp}-{hash}/report.{txt,json}`.
    #[arg(long, global = true, default_value = "kappa-reports", env = "KAPPA_OUT")]
    pub out: PathBuf,
    /// Print the report without saving it.
    #[arg(long, global = true)]
    pub no_save: bool,
    /// Format of the report printed on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Search node budget per classifier or search call.
    #[arg(long, global = true, env = "KAPPA_NODE_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
    /// Worker threads for parallel sweeps (0 = one per core).
    #[arg(long, global = true, env = "KAPPA_THREADS", default_value_t = 0)]
    pub threads: usize,
    /// Largest group order accepted by `--group`.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: usize,
    /// Record wall time per record (reports are then no longer byte-stable).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every size verdict for one subset of a finite group.
    Classify(ClassifyArgs),
    /// Build a free-group partition, verify it on a ball and check its witnesses.
    Construct(ConstructArgs),
    /// Resolvability and fixed-size partition searches.
    Search(SearchArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    /// Group spec: cyclic:n, dihedral:n, symmetric:n, product:X+Y, file:PATH.
    #[arg(long)]
    pub group: String,
    /// Comma-separated element indices or labels.
    #[arg(long, allow_hyphen_values = true)]
    pub subset: String,
    #[arg(long)]
    pub kappa: usize,
    /// Sides to test.
    #[arg(long, value_delimiter = ',', default_values = ["left", "right", "two-sided"])]
    pub sides: Vec<Side>,
    /// Thickness variant: in-a, in-g or both.
    #[arg(long, default_value = "both")]
    pub variant: VariantChoice,
}

#[derive(Clone, Copy, Debug)]
pub enum VariantChoice {
    One(ThickVariant),
    Both,
}

impl VariantChoice {
    pub fn variants(self) -> Vec<ThickVariant> {
        match self {
            VariantChoice::One(v) => vec![v],
            VariantChoice::Both => ThickVariant::ALL.to_vec(),
        }
    }
}

impl std::str::FromStr for VariantChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "both" => Ok(VariantChoice::Both),
            other => other.parse().map(VariantChoice::One),
        }
    }
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// s-set, thm3, c1-split3, c1-rank2, c1-rank1 or c2-ds.
    #[arg(long)]
    pub construction: String,
    /// Construction parameters as key=value.
    #[arg(long = "params", alias = "param", num_args = 1..)]
    pub params: Vec<String>,
    /// Radius of the ball the partition is verified on.
    #[arg(long)]
    pub radius: Option<u32>,
    /// Adversary set H: radius:R, letters:abc:R or words:w1,w2.
    #[arg(long)]
    pub adversary: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SearchMode {
    /// Most cells, every cell left large.
    ResLeft,
    /// Most cells, every cell left and right large.
    ResBoth,
    /// Exactly `--cells` thick cells.
    TwoThick,
    /// Exactly `--cells` non-large cells.
    NonLarge,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub kappa: usize,
    #[arg(long, value_enum)]
    pub mode: SearchMode,
    /// Number of cells for two-thick and non-large (default 2).
    #[arg(long)]
    pub cells: Option<usize>,
    /// Side for two-thick and non-large.
    #[arg(long, default_value = "left")]
    pub side: Side,
    /// Thickness variant for two-thick.
    #[arg(long, default_value = "in-g")]
    pub variant: ThickVariant,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// all, duality, meets, s-set, thm3, comment1, thm2, oracle, probe, comment2.
    #[arg(long, default_value = "all")]
    pub suite: Suite,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let g = &cli.global;
    if g.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(g.threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let command = argv[1..].join(" ");
    let result = match &cli.command {
        Command::Classify(a) => commands::classify(g, a, command),
        Command::Construct(a) => commands::construct(g, a, command),
        Command::Search(a) => commands::search(g, a, command),
        Command::Verify(a) => commands::verify(g, a, command),
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match g.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}", report.to_json()),
    }
    if !g.no_save {
        match report.save(&g.out) {
            Ok(dir) => eprintln!("report saved to {}", dir.display()),
            Err(e) => {
                eprintln!("error: {e:#}");
                return ExitCode::from(EXIT_USAGE);
            }
        }
    }
    ExitCode::from(report.exit_code())
}
