use std::path::PathBuf;
use std::process::ExitCode;

use actegory_cli::plan::{Format, Suite};
use actegory_cli::{emit_report, parse_spec, run_checks, CliError, Mode};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "actegory", version, about = "Build skew monoidal structures on actegories and check their coherence laws")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct RunArgs {
    /// Plan document (TOML).
    spec: PathBuf,
    /// Largest carrier size; overrides the plan.
    #[arg(long)]
    max_size: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    report: Option<PathBuf>,
    /// human or machine; overrides the plan.
    #[arg(long)]
    format: Option<Format>,
    /// Seed for palette subsampling; overrides the plan.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Run every suite of a plan.
    Check(RunArgs),
    /// Run only the invertibility probes of a plan.
    Probe(RunArgs),
    /// List the built-in instance kinds and their parameters.
    Instances,
}

fn execute(args: &RunArgs, mode: Mode) -> Result<i32, CliError> {
    let path = args.spec.display().to_string();
    let text = std::fs::read_to_string(&args.spec).map_err(|source| CliError::Io { path: path.clone(), source })?;
    let mut plan = parse_spec(&text).map_err(|e| match e {
        CliError::Schema(m) => CliError::Schema(format!("{path}: {m}")),
        other => other,
    })?;
    if let Some(n) = args.max_size {
        if n < 1 {
            return Err(CliError::Schema(String::from("--max-size must be at least 1")));
        }
        plan.bounds.max_size = n;
        plan.defaulted.retain(|d| !d.starts_with("bounds.max_size"));
    }
    if let Some(seed) = args.seed {
        plan.seed = seed;
    }
    let format = args.format.unwrap_or(plan.format);
    let report = run_checks(&plan, mode);
    let doc = emit_report(&report, format)?;
    match args.report.as_ref().map(|p| p.display().to_string()).or(plan.report_path.clone()) {
        Some(out) => {
            std::fs::write(&out, doc).map_err(|source| CliError::Io { path: out.clone(), source })?;
            println!(
                "{}: {} failure(s), {} error(s); report written to {out}",
                plan.name,
                report.failures(),
                report.errors()
            );
        }
        None => print!("{doc}"),
    }
    Ok(report.exit_code())
}

fn list_instances() {
    let rows = [
        ("monoid", "preset = trivial | Z2 | Z3 | or, or table = [[..]] with identity = i", "A ⊛ B = M × A × B on finite sets"),
        ("self-action", "none", "cartesian finite sets acting on themselves, J = 1"),
        ("copower", "j = n", "right skew c ⊛ d = Hom(J, c) × d"),
        ("power", "j = n", "left skew c ⊛ d = d^Hom(c, J)"),
        ("exponential", "j = n", "left skew P ⊛ A = P × A^J, with the swap braiding"),
        ("kan", "objects, arrows, composites, j = { values, maps }", "G ⊛ F = Lan_J G ∘ F on [C, FinSet]"),
        ("mutation", "fixtures = [names] (empty: all)", "corrupted instances every checker must reject"),
    ];
    for (kind, params, what) in rows {
        println!("{kind:<12} {what}\n{:<12} parameters: {params}", "");
    }
    let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
    println!("\nsuites: all, {}", names.join(", "));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Check(args) => execute(args, Mode::Check),
        Command::Probe(args) => execute(args, Mode::ProbeOnly),
        Command::Instances => {
            list_instances();
            Ok(0)
        }
    };
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
