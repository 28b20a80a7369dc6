use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use wvg::commands;
use wvg::spec::{
    parse_count, Command, DistSpec, GameSource, MethodSpec, OutputFormat, ProfileSpec,
    ReproduceTarget, RunSpec,
};
use wvg::{Error, Result};

/// Payoffs of weighted voting games under group weight-allocation rules.
#[derive(Parser)]
#[command(name = "wvg", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Ex ante payoff of every group under one profile.
    Payoff {
        #[arg(long, default_value = "pr")]
        profile: ProfileSpec,
        #[command(flatten)]
        common: Common,
    },
    /// Pareto comparison of two profiles with per-group ratios A/B.
    Compare {
        a: ProfileSpec,
        b: ProfileSpec,
        /// Standard errors a Monte Carlo margin must exceed to count.
        #[arg(long, default_value_t = 3.0)]
        z: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Large-n limits next to computed payoffs.
    Asymptotic {
        /// Symmetric rule: wta, pr, zero or mixed:<a>.
        #[arg(long, default_value = "pr")]
        rule: ProfileSpec,
        /// District seats per group for the crossing-weight analysis.
        #[arg(long = "cd")]
        district: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Lorenz curves, Gini coefficients and pairwise Lorenz dominance.
    Lorenz {
        #[arg(required = true)]
        profiles: Vec<ProfileSpec>,
        #[command(flatten)]
        common: Common,
    },
    /// Recompute a published table and flag deviations.
    Reproduce {
        #[arg(value_enum)]
        target: ReproduceTarget,
        #[command(flatten)]
        common: Common,
    },
    /// Execute a JSON run file.
    Run { file: PathBuf },
}

#[derive(Args)]
struct Common {
    /// `ec`, `flnywy` or a `name,weight[,population]` file.
    #[arg(long, default_value = "ec")]
    game: GameSource,
    /// `uniform`, `two-atom:<m>` or `one-factor:<rho>`.
    #[arg(long, default_value = "uniform")]
    dist: DistSpec,
    #[arg(long, value_enum)]
    method: Option<MethodSpec>,
    /// Monte Carlo draws; scientific notation allowed.
    #[arg(long, value_parser = parse_count, default_value = "1e7")]
    samples: u64,
    #[arg(long, default_value_t = 20_200_538)]
    seed: u64,
    #[arg(long, value_parser = parse_count, default_value = "64")]
    chunks: u64,
    /// Worker threads; defaults to $WVG_THREADS or the core count.
    #[arg(long)]
    threads: Option<usize>,
    /// Lattice step of the convolution oracle.
    #[arg(long)]
    resolution: Option<f64>,
    /// Grid points per coordinate of the brute-force oracle.
    #[arg(long)]
    grid: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Write the result here instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Also save the invocation as a JSON run file.
    #[arg(long)]
    save_run: Option<PathBuf>,
}

impl Common {
    fn into_spec(self, command: Command) -> (RunSpec, Option<PathBuf>) {
        let mut s = RunSpec::new(command);
        s.game = self.game;
        s.dist = self.dist;
        s.method = self.method;
        s.samples = self.samples;
        s.seed = self.seed;
        s.chunks = self.chunks;
        s.threads = self.threads;
        s.resolution = self.resolution;
        s.grid = self.grid;
        s.format = self.format;
        s.output = self.output;
        (s, self.save_run)
    }
}

fn build(cmd: Cmd) -> Result<(RunSpec, Option<PathBuf>)> {
    Ok(match cmd {
        Cmd::Payoff { profile, common } => {
            let (mut s, save) = common.into_spec(Command::Payoff);
            s.profiles = vec![profile];
            (s, save)
        }
        Cmd::Compare { a, b, z, common } => {
            let (mut s, save) = common.into_spec(Command::Compare);
            s.profiles = vec![a, b];
            s.z = z;
            (s, save)
        }
        Cmd::Asymptotic {
            rule,
            district,
            common,
        } => {
            let (mut s, save) = common.into_spec(Command::Asymptotic);
            s.profiles = vec![rule];
            s.district = district;
            (s, save)
        }
        Cmd::Lorenz { profiles, common } => {
            let (mut s, save) = common.into_spec(Command::Lorenz);
            s.profiles = profiles;
            (s, save)
        }
        Cmd::Reproduce { target, common } => {
            let (mut s, save) = common.into_spec(Command::Reproduce);
            s.target = Some(target);
            (s, save)
        }
        Cmd::Run { file } => (RunSpec::load(&file)?, None),
    })
}

fn default_format(c: Command) -> OutputFormat {
    match c {
        Command::Payoff => OutputFormat::Csv,
        _ => OutputFormat::Markdown,
    }
}

fn execute(cmd: Cmd) -> Result<()> {
    let (spec, save) = build(cmd)?;
    if let Some(path) = save {
        std::fs::write(&path, spec.to_json() + "\n").map_err(|e| Error::io(&path, e))?;
    }
    let out = commands::run(&spec)?;
    let text = out.render(spec.format.unwrap_or_else(|| default_format(spec.command)));
    match &spec.output {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::io(path, e))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("wvg: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
