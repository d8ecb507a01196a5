mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "linkconc",
    version,
    about = "Link concordance invariants from diagrams"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Read the link from a file (PD text, PD-JSON, BR[..] or QP[..]).
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<std::path::PathBuf>,
    /// Take the link from the built-in catalog.
    #[arg(long, global = true, value_name = "NAME")]
    pub catalog: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Build complexes on the full resolution cube instead of scanning.
    #[arg(long, global = true)]
    pub naive: bool,
    /// Largest diagram the full cube accepts.
    #[arg(long, global = true, default_value_t = 12, value_name = "N")]
    pub naive_limit: usize,
    /// Read s off multi-component links whose Lee classes share degree 0.
    #[arg(long, global = true)]
    pub assume_symmetric: bool,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Grid,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaspArg {
    #[value(name = "+")]
    Plus,
    #[value(name = "-")]
    Minus,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionsArg {
    F,
    Fbar,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Summary of the diagram with its Seifert data.
    Info { link: Option<String> },
    /// Seifert circles and the signed Seifert graph.
    Seifert { link: Option<String> },
    /// Closed-form values and lower bounds for ν.
    Bound { link: Option<String> },
    /// Whitehead double as a PD code.
    Double {
        link: Option<String>,
        /// Framings, one per component (one value with --reduced).
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            default_value = "0"
        )]
        twists: Vec<i64>,
        #[arg(long, value_enum, default_value_t = ClaspArg::Plus, allow_hyphen_values = true)]
        clasp: ClaspArg,
        /// Double only one component.
        #[arg(long)]
        reduced: bool,
        #[arg(long, default_value_t = 0)]
        component: usize,
    },
    /// Khovanov homology over ℚ.
    Kh { link: Option<String> },
    /// Associated graded of filtered Lee homology.
    Lee { link: Option<String> },
    /// The Rasmussen invariant s.
    S { link: Option<String> },
    /// ν_s = (s + ℓ − 1)/2.
    Nu { link: Option<String> },
    /// Tabulate an F-function of Whitehead doubles.
    Ftable {
        link: Option<String>,
        /// full+, full-, reduced+ or reduced-.
        #[arg(long, default_value = "full+", allow_hyphen_values = true)]
        variant: String,
        #[arg(long)]
        component: Option<usize>,
        /// Inclusive ranges per twist coordinate, e.g. -2..2,-2..2.
        #[arg(long, allow_hyphen_values = true)]
        range: Option<String>,
        /// Compute every point instead of inferring from monotonicity.
        #[arg(long)]
        no_prune: bool,
    },
    /// Lower bounds for the splitting numbers.
    SplitBound { link: Option<String> },
    /// Cube obstruction to strong concordance with a split link.
    ObstructSplit {
        link: Option<String>,
        /// Number of split components to obstruct.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        range: Option<String>,
        #[arg(long, value_enum, default_value_t = FunctionsArg::F)]
        functions: FunctionsArg,
        #[arg(long)]
        no_prune: bool,
    },
    /// Built-in example links.
    Catalog {
        #[arg(default_value = "list")]
        action: String,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            log::warn!("could not size the thread pool: {e}");
        }
    }
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let Some(p) = e.downcast_ref::<commands::WithOutput>() {
                print!("{}", p.output);
            }
            eprintln!("error: {e:#}");
            if e.downcast_ref::<commands::Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
