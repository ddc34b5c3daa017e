use clap::{Parser, Subcommand, ValueEnum};
use pinhowe::pin::Backend;
use pinhowe_cli::{config, ConfigError, ExpectedTable, PairRequest, RunConfig, Task};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "pinhowe", version, about = "Verify Pin lifts of dual pairs and spinorial Howe duality")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Commutator signs of lifted generators of G and G'.
    VerifyCommute(Args),
    /// Class of the pulled-back double cover on each side.
    ClassifyCover(Args),
    /// Exterior invariants of G and the generator theorems.
    Invariants(Args),
    /// Commutant versus generated algebra in the spin module.
    HoweCheck(Args),
    /// Every check above.
    All(Args),
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum BackendArg {
    Exact,
    Float,
}

#[derive(clap::Args, Debug)]
struct Args {
    /// Family tag such as `unitary`; repeatable. Default: every family.
    #[arg(long)]
    family: Vec<String>,
    /// Comma-separated parameters for a single `--family`. Default: minimal.
    #[arg(long)]
    params: Option<String>,
    /// TOML run configuration; flags given alongside override its settings.
    #[arg(long, conflicts_with_all = ["family", "params"])]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    backend: Option<BackendArg>,
    /// Path-lifting steps per loop.
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Also write the JSON report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Record per-pair wall time; reports then differ between runs.
    #[arg(long)]
    timing: bool,
}

impl Args {
    fn to_config(&self) -> Result<RunConfig, ConfigError> {
        let mut cfg = match &self.config {
            Some(path) => RunConfig::from_toml_file(path)?,
            None => RunConfig::default(),
        };
        if let Some(text) = &self.params {
            if self.family.len() != 1 {
                return Err(ConfigError::ParamsWithoutFamily);
            }
            let params = config::parse_params(text)?;
            cfg.pairs = Some(vec![PairRequest { family: self.family[0].clone(), params: Some(params) }]);
        } else if !self.family.is_empty() {
            cfg.pairs = Some(self.family.iter().map(|f| PairRequest { family: f.clone(), params: None }).collect());
        }
        if let Some(b) = self.backend {
            cfg.backend = match b {
                BackendArg::Exact => Backend::Exact,
                BackendArg::Float => Backend::Float,
            };
        }
        if let Some(s) = self.steps {
            cfg.steps = s;
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        cfg.timing |= self.timing;
        Ok(cfg)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (task, args) = match &cli.command {
        Command::VerifyCommute(a) => (Task::VerifyCommute, a),
        Command::ClassifyCover(a) => (Task::ClassifyCover, a),
        Command::Invariants(a) => (Task::Invariants, a),
        Command::HoweCheck(a) => (Task::HoweCheck, a),
        Command::All(a) => (Task::All, a),
    };
    let resolved = args.to_config().and_then(|cfg| cfg.resolve(task).map(|pairs| (cfg, pairs)));
    let (cfg, pairs) = match resolved {
        Ok(v) => v,
        Err(e) => {
            eprintln!("configuration error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = pinhowe_cli::run(&pairs, task, &cfg, &ExpectedTable::builtin());
    let json = report.to_json();
    if let Some(path) = &args.out {
        if let Err(e) = std::fs::write(path, &json) {
            eprintln!("configuration error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if args.json {
        print!("{json}");
    } else {
        print!("{}", report.to_text());
    }
    if report.all_match() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
