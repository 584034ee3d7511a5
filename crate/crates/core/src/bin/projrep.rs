use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use projrep::gl_modules::DEFAULT_DIM_CAP;
use projrep::linalg::parse_rational;
use projrep::report::{analyze, decompose, verify_identity};
use projrep::selfcheck::{run_selfcheck, SelfCheckConfig};
use projrep::{DominantLabels, Error};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "projrep", version, about = "Projective representations of sl(n+1) on polynomial-valued gl(n)-modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Criterion, q_c table, graded ranks and composition series
    Analyze {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, default_value_t = 4)]
        degree_cap: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run every invariant suite over the standard sweep
    Selfcheck {
        /// Largest n in the sweep
        #[arg(short = 'n', default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        degree_cap: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Summands of V ⊗ V(kε₁) with dimensions and q_c
    Decompose {
        #[command(flatten)]
        module: ModuleArgs,
        /// Polynomial degree k
        #[arg(short = 'k', long, default_value_t = 1)]
        degree_cap: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Characteristic identities of σ̃₂, M and M̃
    VerifyIdentity {
        #[command(flatten)]
        module: ModuleArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args)]
struct ModuleArgs {
    /// Rank of gl(n)
    #[arg(short = 'n')]
    n: usize,
    /// Dynkin labels, comma-separated (n − 1 entries; zeros when omitted)
    #[arg(short = 'a', num_args = 0..=1, default_missing_value = "")]
    a: Option<String>,
    /// Central charge, an integer or "num/den"
    #[arg(short = 'b', allow_hyphen_values = true, default_value = "0")]
    b: String,
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long, default_value_t = DEFAULT_DIM_CAP)]
    dim_cap: usize,
    #[arg(long)]
    json: bool,
}

impl ModuleArgs {
    fn labels(&self) -> Result<DominantLabels, String> {
        if self.n == 0 {
            return Err("n must be at least 1".into());
        }
        let dynkin: Vec<u32> = match self.a.as_deref().map(str::trim) {
            None => vec![0; self.n - 1],
            Some("") => Vec::new(),
            Some(text) => text
                .split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| format!("bad label {x:?}")))
                .collect::<Result<_, _>>()?,
        };
        if dynkin.len() != self.n - 1 {
            return Err(format!("expected {} labels for n = {}, got {}", self.n - 1, self.n, dynkin.len()));
        }
        let b = parse_rational(&self.b).map_err(|e| e.to_string())?;
        Ok(DominantLabels::new(dynkin, b))
    }
}

fn emit<T: Serialize + std::fmt::Display>(value: &T, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
    } else {
        print!("{value}");
    }
}

fn finish<T: Serialize + std::fmt::Display>(result: Result<T, Error>, json: bool) -> ExitCode {
    match result {
        Ok(report) => {
            emit(&report, json);
            ExitCode::SUCCESS
        }
        Err(e) if e.is_consistency_violation() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn usage(msg: String) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Analyze { module, degree_cap, common } => {
            if degree_cap == 0 {
                return usage("--degree-cap must be at least 1".into());
            }
            match module.labels() {
                Ok(labels) => finish(analyze(&labels, degree_cap, common.dim_cap), common.json),
                Err(msg) => usage(msg),
            }
        }
        Command::Decompose { module, degree_cap, common } => match module.labels() {
            Ok(labels) => finish(decompose(&labels, degree_cap, common.dim_cap), common.json),
            Err(msg) => usage(msg),
        },
        Command::VerifyIdentity { module, common } => match module.labels() {
            Ok(labels) => finish(verify_identity(&labels, common.dim_cap), common.json),
            Err(msg) => usage(msg),
        },
        Command::Selfcheck { n_max, degree_cap, seed, common } => {
            let config = SelfCheckConfig {
                n_max,
                degree_cap,
                seed,
                dim_cap: common.dim_cap.min(300),
                ..SelfCheckConfig::default()
            };
            let summary = run_selfcheck(&config);
            if common.json {
                println!("{}", serde_json::to_string_pretty(&summary).expect("summary serializes"));
            } else {
                println!(
                    "points {} (skipped {}), seed {}",
                    summary.points, summary.skipped, summary.seed
                );
                for c in &summary.counts {
                    println!("{:<26} pass {:>4}  fail {:>4}", c.suite.name(), c.passed, c.failed);
                }
                for finding in &summary.findings {
                    println!("finding: {finding}");
                }
            }
            match summary.minimal_failure() {
                None => ExitCode::SUCCESS,
                Some(f) => {
                    eprintln!("FAIL: {} failures; minimal reproducer:", summary.failures.len());
                    eprintln!("  {}", f.reproducer());
                    ExitCode::from(2)
                }
            }
        }
    }
}
