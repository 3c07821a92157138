use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::commands::{self, GenerateRequest, NetworkModel, DEFAULT_TIMESTEPS, FIGURE1_NODES};
use super::CliError;
use crate::analytic_pmf::PmfModel;
use crate::sampling::RngSeed;

/// Generate and analyse scale-free networks.
#[derive(Debug, Parser)]
#[command(name = "scalefree", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a network and write it as an edge list.
    Generate(GenerateArgs),
    /// Tabulate an analytic degree distribution as CSV.
    Pmf(PmfArgs),
    /// Fit a discrete power law to an edge list or histogram CSV.
    Fit(FitArgs),
    /// Check that the BA degree distribution is a fixed point of the one-step update.
    VerifyBa(VerifyBaArgs),
    /// Generate, histogram and fit the four comparison networks.
    Figure1(Figure1Args),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenerateModel {
    /// Randomly stopped linking (needs --c).
    Rsl,
    /// Barabási–Albert preferential attachment (needs --m).
    Ba,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub model: GenerateModel,
    #[arg(long)]
    pub nodes: usize,
    /// Mixing exponent in [0, 1] for rsl.
    #[arg(long)]
    pub c: Option<f64>,
    /// Links per arriving node for ba.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge-list output path.
    #[arg(long)]
    pub out: PathBuf,
    /// Optional degree-histogram CSV output path.
    #[arg(long)]
    pub hist: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PmfKind {
    Ba,
    Geometric,
    Uniform,
    Linear,
    Sublinear,
}

#[derive(Debug, Args)]
pub struct PmfArgs {
    #[arg(long, value_enum)]
    pub model: PmfKind,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub q: Option<f64>,
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long)]
    pub kmax: u64,
    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// Edge list or `k,count,fraction` histogram CSV.
    pub input: PathBuf,
    /// Output JSON path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyBaArgs {
    #[arg(long)]
    pub m: u64,
    /// Comma-separated timesteps [default: 100,10000,1000000].
    #[arg(long, value_delimiter = ',')]
    pub t: Vec<u64>,
    #[arg(long, default_value_t = 500)]
    pub kmax: u64,
}

#[derive(Debug, Args)]
pub struct Figure1Args {
    #[arg(long, default_value = "figure1")]
    pub out_dir: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = FIGURE1_NODES)]
    pub nodes: usize,
}

fn usage(msg: &str) -> CliError {
    CliError::Usage(msg.to_string())
}

impl GenerateArgs {
    pub fn to_request(&self) -> Result<GenerateRequest, CliError> {
        let model = match (self.model, self.c, self.m) {
            (GenerateModel::Rsl, Some(c), None) => NetworkModel::Rsl { c },
            (GenerateModel::Rsl, _, Some(_)) => return Err(usage("--m is not valid with --model rsl")),
            (GenerateModel::Rsl, None, None) => return Err(usage("--model rsl requires --c")),
            (GenerateModel::Ba, None, Some(m)) => NetworkModel::Ba { m },
            (GenerateModel::Ba, Some(_), _) => return Err(usage("--c is not valid with --model ba")),
            (GenerateModel::Ba, None, None) => return Err(usage("--model ba requires --m")),
        };
        Ok(GenerateRequest {
            model,
            nodes: self.nodes,
            seed: RngSeed(self.seed),
            out: self.out.clone(),
            hist: self.hist.clone(),
        })
    }
}

impl PmfArgs {
    pub fn to_model(&self) -> Result<PmfModel, CliError> {
        let (needs_m, needs_q, needs_c) = match self.model {
            PmfKind::Ba => (true, false, false),
            PmfKind::Geometric => (false, true, false),
            PmfKind::Uniform | PmfKind::Linear => (false, false, false),
            PmfKind::Sublinear => (false, false, true),
        };
        for (name, needed, given) in [
            ("--m", needs_m, self.m.is_some()),
            ("--q", needs_q, self.q.is_some()),
            ("--c", needs_c, self.c.is_some()),
        ] {
            if needed && !given {
                return Err(CliError::Usage(format!("this model requires {name}")));
            }
            if given && !needed {
                return Err(CliError::Usage(format!("{name} is not valid with this model")));
            }
        }
        Ok(match self.model {
            PmfKind::Ba => PmfModel::Ba { m: self.m.unwrap_or_default() },
            PmfKind::Geometric => PmfModel::ShiftedGeometric { q: self.q.unwrap_or_default() },
            PmfKind::Uniform => PmfModel::UniformMixture,
            PmfKind::Linear => PmfModel::LinearMixture,
            PmfKind::Sublinear => PmfModel::Sublinear { c: self.c.unwrap_or_default() },
        })
    }
}

pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Generate(args) => {
            let manifest = commands::cmd_generate(&args.to_request()?)?;
            for artifact in &manifest.artifacts {
                writeln!(stdout, "wrote {artifact}").map_err(crate::Error::from)?;
            }
        }
        Command::Pmf(args) => {
            commands::cmd_pmf(args.to_model()?, args.kmax, args.out.as_deref(), stdout)?;
        }
        Command::Fit(args) => {
            commands::cmd_fit(&args.input, args.out.as_deref(), stdout)?;
        }
        Command::VerifyBa(args) => {
            let timesteps = if args.t.is_empty() { DEFAULT_TIMESTEPS.to_vec() } else { args.t.clone() };
            commands::cmd_verify_ba(args.m, &timesteps, args.kmax, stdout)?;
        }
        Command::Figure1(args) => {
            let rows = commands::cmd_figure1(&args.out_dir, RngSeed(args.seed), args.nodes)?;
            for row in rows {
                writeln!(
                    stdout,
                    "{:<9} alpha={:.3} (expected {:.1}) kmin={} ks={:.4}",
                    row.name, row.fit.alpha, row.expected_alpha, row.fit.kmin, row.fit.ks
                )
                .map_err(crate::Error::from)?;
            }
        }
    }
    Ok(())
}
