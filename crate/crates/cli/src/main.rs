//! `polyslice`: run the exact slice-diameter experiments and write a report.
//!
//! Exit status is 0 iff every asserted inequality in the run holds.
//! `polyslice inspect --space FILE` instead prints the generators and ball
//! vertices of a space description.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, ValueEnum};
use polyslice::experiments::{self, ExperimentConfig, ExperimentKind, OmegaRule, OutputFormat};
use polyslice::norms::SpaceDescription;
use polyslice::Scalar;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Experiment {
    Thm1,
    Prop2,
    Prop3,
    VerifyExt,
    Sandwich,
    /// Describe the space in --space; not an experiment.
    Inspect,
}

impl From<Experiment> for ExperimentKind {
    fn from(e: Experiment) -> Self {
        match e {
            Experiment::Thm1 => ExperimentKind::Thm1,
            Experiment::Prop2 => ExperimentKind::Prop2,
            Experiment::Prop3 => ExperimentKind::Prop3,
            Experiment::VerifyExt => ExperimentKind::VerifyExt,
            Experiment::Sandwich => ExperimentKind::Sandwich,
            Experiment::Inspect => unreachable!("inspect is handled before building a config"),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Omega {
    Default,
    List,
}

/// Exact slice diameters and lower-bound certificates for truncated
/// polyhedral norms.
#[derive(Debug, Parser)]
#[command(name = "polyslice", version)]
struct Cli {
    /// Experiment to run; optional when --config names one.
    experiment: Option<Experiment>,
    /// JSON config file mirroring the flags; flags given on the command line
    /// override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Number of retained sequence coordinates.
    #[arg(long = "n")]
    n: Option<usize>,
    /// Run for every N in this comma-separated list (or `a..b`).
    #[arg(long, value_parser = parse_sweep)]
    sweep: Option<NList>,
    #[arg(long, value_parser = parse_scalar)]
    r: Option<Scalar>,
    #[arg(long, value_parser = parse_scalar)]
    delta: Option<Scalar>,
    #[arg(long, value_parser = parse_scalar)]
    epsilon: Option<Scalar>,
    /// Comma-separated, strictly decreasing.
    #[arg(long, value_parser = parse_scalars)]
    epsilons: Option<ScalarList>,
    #[arg(long, value_enum)]
    omega_rule: Option<Omega>,
    /// Weights omega_2..omega_N for `--omega-rule list`.
    #[arg(long, value_parser = parse_scalars)]
    omega: Option<ScalarList>,
    /// Slicing functional for prop2: e1, e1+e2, beta, random, or p/q,...
    #[arg(long)]
    g: Option<String>,
    /// Slice depth for prop2 (default 1/2).
    #[arg(long, value_parser = parse_scalar)]
    alpha: Option<Scalar>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Space description JSON for `inspect`: {"kind": "II"|"VII"|"custom",
    /// "N", "r", "omega", "generators"}.
    #[arg(long)]
    space: Option<PathBuf>,
}

fn parse_scalar(s: &str) -> Result<Scalar, String> {
    s.parse().map_err(|e: polyslice::Error| e.to_string())
}

// Newtypes so clap treats a comma list as one value.
#[derive(Clone, Debug)]
struct ScalarList(Vec<Scalar>);

#[derive(Clone, Debug)]
struct NList(Vec<usize>);

fn parse_scalars(s: &str) -> Result<ScalarList, String> {
    s.split(',').map(parse_scalar).collect::<Result<_, _>>().map(ScalarList)
}

fn parse_sweep(s: &str) -> Result<NList, String> {
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
        let b: usize = b.trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
        return Ok(NList((a..=b).collect()));
    }
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| format!("bad N {t:?}")))
        .collect::<Result<_, _>>()
        .map(NList)
}

fn build_config(cli: &Cli) -> Result<ExperimentConfig> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading config {}", path.display()))?;
            ExperimentConfig::from_json(&text)?
        }
        None => {
            let Some(exp) = cli.experiment else {
                bail!("name an experiment or pass --config");
            };
            ExperimentConfig::new(exp.into(), 2)
        }
    };
    if let Some(e) = cli.experiment {
        cfg.experiment = e.into();
    }
    if let Some(n) = cli.n {
        cfg.n = n;
    }
    if let Some(s) = &cli.sweep {
        cfg.sweep = s.0.clone();
    }
    macro_rules! set_opt {
        ($($field:ident),*) => {$(
            if let Some(v) = &cli.$field {
                cfg.$field = Some(v.clone());
            }
        )*};
    }
    set_opt!(r, delta, epsilon, alpha, g);
    if let Some(e) = &cli.epsilons {
        cfg.epsilons = e.0.clone();
    }
    if let Some(o) = cli.omega_rule {
        cfg.omega_rule = match o {
            Omega::Default => OmegaRule::Default,
            Omega::List => OmegaRule::List,
        };
    }
    if let Some(o) = &cli.omega {
        cfg.omega = o.0.clone();
    }
    if let Some(t) = cli.trials {
        cfg.trials = t;
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(f) = cli.format {
        cfg.format = match f {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
        };
    }
    if let Some(p) = &cli.output {
        cfg.output_path = Some(p.display().to_string());
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn inspect(cli: &Cli) -> Result<bool> {
    let Some(path) = &cli.space else {
        bail!("inspect needs --space FILE");
    };
    let text = fs::read_to_string(path).with_context(|| format!("reading space {}", path.display()))?;
    let desc: SpaceDescription = serde_json::from_str(&text).context("parsing space description")?;
    let space = desc.build()?;
    let dual = space.dual_ball_vertices();
    let ball = space.unit_ball().vertices()?;
    let summary = serde_json::json!({
        "space": space.description(),
        "dim": space.dim(),
        "dual_ball_vertices": dual.vertices(),
        "unit_ball_vertices": ball.vertices(),
    });
    let text = serde_json::to_string_pretty(&summary)? + "\n";
    match &cli.output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(true)
}

fn run(cli: &Cli) -> Result<bool> {
    if matches!(cli.experiment, Some(Experiment::Inspect)) {
        return inspect(cli);
    }
    let cfg = build_config(cli)?;
    let report = experiments::run(&cfg)?;
    let text = match cfg.format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv => report.to_csv(),
    };
    match &cfg.output_path {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {path}"))?,
        None => print!("{text}"),
    }
    if !report.verdict {
        eprintln!("{}: some assertions failed", cfg.experiment);
    }
    Ok(report.verdict)
}
