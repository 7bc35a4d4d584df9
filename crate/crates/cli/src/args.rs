use crate::Job;
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

pub fn version_text() -> String {
    let v = arrtwist_core::FORMAT_VERSION;
    format!(
        "{} (formats: chain {v}, arrangement {v}, presentation {v}, tower {v}, report {v})",
        env!("CARGO_PKG_VERSION")
    )
}

/// Exact twisted homology of hyperplane arrangement complements.
#[derive(Debug, Parser)]
#[command(name = "arrtwist", version = version_text(), about)]
pub struct Cli {
    /// Seed for the randomized samples drawn by `crosscheck`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: TopLevel,
}

#[derive(Debug, Subcommand)]
pub enum TopLevel {
    /// Intersection-lattice combinatorics.
    #[command(subcommand)]
    Arr(ArrCommand),
    /// Twisted homology from the Koszul, Fox or tower complexes.
    #[command(subcommand)]
    Homology(HomologyCommand),
    /// Milnor fiber spectra and the divisibility obstruction.
    #[command(subcommand)]
    Milnor(MilnorCommand),
    /// Higher homotopy groups tensored along a character.
    #[command(subcommand)]
    Pi(PiCommand),
    /// Free chain complexes read from JSON.
    #[command(subcommand)]
    Chain(ChainCommand),
    /// Run every applicable computation path and compare.
    Crosscheck(CrosscheckArgs),
}

#[derive(Debug, Args)]
pub struct ArrangementArg {
    #[arg(long)]
    pub arrangement: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum ArrCommand {
    Lattice(ArrangementArg),
    Girth(ArrangementArg),
    Dense(ArrangementArg),
    Betti(ArrangementArg),
    /// Check a character, or search one when no weights are given.
    Nonres {
        #[arg(long)]
        arrangement: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
        #[arg(long, default_value_t = 3)]
        bound: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum HomologyCommand {
    Koszul {
        #[arg(long)]
        arrangement: PathBuf,
        /// Hyperplane weights `γ_0..γ_n` summing to zero, or `γ_1..γ_n`.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "units")]
        weights: Option<String>,
        /// Explicit units for `x_1..x_n`, e.g. `z3,z3,z3`.
        #[arg(long, allow_hyphen_values = true)]
        units: Option<String>,
        #[arg(long)]
        ring: Option<String>,
        /// All degrees, for generic-position arrangements.
        #[arg(long)]
        full: bool,
    },
    Fox {
        #[arg(long)]
        presentation: PathBuf,
        /// One weight per generator.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "units")]
        weights: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        units: Option<String>,
        #[arg(long)]
        ring: Option<String>,
    },
    Tower {
        #[arg(long)]
        tower: PathBuf,
        /// `name=weight` pairs; overrides the weights in the file.
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        ring: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum MilnorCommand {
    Spectrum {
        #[arg(long, required_unless_present = "arrangement", conflicts_with = "arrangement")]
        presentation: Option<PathBuf>,
        /// A generic-position arrangement; reports every degree.
        #[arg(long)]
        arrangement: Option<PathBuf>,
    },
    Obstruct {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        spectrum: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum PiCommand {
    Rank {
        #[arg(long, required_unless_present = "tower", conflicts_with = "tower")]
        arrangement: Option<PathBuf>,
        #[arg(long)]
        tower: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
        /// Required with `--tower`.
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        ring: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ChainCommand {
    Iso {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    Homology {
        #[arg(long)]
        complex: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct CrosscheckArgs {
    #[arg(long, required_unless_present_any = ["presentation", "tower"])]
    pub arrangement: Option<PathBuf>,
    #[arg(long, conflicts_with = "arrangement")]
    pub presentation: Option<PathBuf>,
    #[arg(long, conflicts_with_all = ["arrangement", "presentation"])]
    pub tower: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    pub weights: Option<String>,
    /// Extra random characters compared along the way.
    #[arg(long, default_value_t = 2)]
    pub samples: usize,
}

impl Cli {
    pub fn into_job(self) -> Job {
        let seed = self.seed;
        match self.command {
            TopLevel::Arr(cmd) => match cmd {
                ArrCommand::Lattice(a) => Job::Lattice { arrangement: a.arrangement },
                ArrCommand::Girth(a) => Job::Girth { arrangement: a.arrangement },
                ArrCommand::Dense(a) => Job::Dense { arrangement: a.arrangement },
                ArrCommand::Betti(a) => Job::Betti { arrangement: a.arrangement },
                ArrCommand::Nonres { arrangement, weights, bound } => Job::Nonres { arrangement, weights, bound },
            },
            TopLevel::Homology(cmd) => match cmd {
                HomologyCommand::Koszul { arrangement, weights, units, ring, full } => {
                    Job::HomologyKoszul { arrangement, weights, units, ring, full }
                }
                HomologyCommand::Fox { presentation, weights, units, ring } => {
                    Job::HomologyFox { presentation, weights, units, ring }
                }
                HomologyCommand::Tower { tower, weights, max_degree, ring } => {
                    Job::HomologyTower { tower, weights, max_degree, ring }
                }
            },
            TopLevel::Milnor(cmd) => match cmd {
                MilnorCommand::Spectrum { presentation, arrangement } => {
                    Job::MilnorSpectrum { presentation, arrangement }
                }
                MilnorCommand::Obstruct { n, spectrum } => Job::MilnorObstruct { n, spectrum },
            },
            TopLevel::Pi(PiCommand::Rank { arrangement, tower, weights, p, ring }) => {
                Job::PiRank { arrangement, tower, weights, p, ring }
            }
            TopLevel::Chain(cmd) => match cmd {
                ChainCommand::Iso { a, b } => Job::ChainIso { a, b },
                ChainCommand::Homology { complex } => Job::ChainHomology { complex },
            },
            TopLevel::Crosscheck(args) => Job::Crosscheck {
                arrangement: args.arrangement,
                presentation: args.presentation,
                tower: args.tower,
                weights: args.weights,
                samples: args.samples,
                seed,
            },
        }
    }
}
