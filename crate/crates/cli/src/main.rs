use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use indexbound::commands::{self, load_graph, load_perturbation, parse_kind};
use indexbound::output::{bound_tsv, path_tsv};
use indexbound::verify::{self, VerifyConfig};
use indexbound::CliError;

/// Upper bounds for the index of a graph after joining an isolated vertex,
/// adding an edge, or attaching a pendant edge.
#[derive(Debug, Parser)]
#[command(name = "indexbound", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bound and exact index of the perturbed graph.
    Bound {
        /// Edge-list file, or `-` for stdin.
        graph: PathBuf,
        /// `vertex u v1 … vg`, `edge u v` or `pendant u`.
        #[arg(required = true, num_args = 1..)]
        perturbation: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Index, derivative and comparison solution along A(t) = A_I + tP.
    Path {
        graph: PathBuf,
        #[arg(required = true, num_args = 1..)]
        perturbation: Vec<String>,
        #[arg(long, default_value_t = 32)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Check the bounds on every small graph and on seeded random graphs.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        trials: u64,
        #[arg(long = "n-max", default_value_t = 9)]
        n_max: usize,
        #[arg(long, default_value_t = 32)]
        steps: usize,
        /// Validity threshold (exploratory runs only).
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        /// Largest order of the exhaustive corpus (at most 8).
        #[arg(long = "exhaustive-max", default_value_t = 7)]
        exhaustive_max: usize,
        #[arg(long, hide = true)]
        inject_failure: bool,
    },
    /// Emit an extremal configuration over a regular circulant.
    Construct {
        /// vertex, edge or pendant.
        kind: String,
        n: usize,
        delta: usize,
        /// Also write the host graph's edge list here.
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text)
    } else {
        std::fs::File::open(path).and_then(|mut f| f.read_to_string(&mut text))
    }
    .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable output")
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Bound { graph, perturbation, format } => {
            let g = load_graph(&read_input(&graph)?)?;
            let p = load_perturbation(&perturbation.join(" "))?;
            let report = commands::bound(&g, &p)?;
            match format {
                Format::Json => println!("{}", to_json(&report)),
                Format::Tsv => print!("{}", bound_tsv(&report)),
            }
        }
        Command::Path { graph, perturbation, steps, format } => {
            let g = load_graph(&read_input(&graph)?)?;
            let p = load_perturbation(&perturbation.join(" "))?;
            let rows = commands::path(&g, &p, steps)?;
            match format {
                Format::Json => println!("{}", to_json(&rows)),
                Format::Tsv => print!("{}", path_tsv(&rows)),
            }
        }
        Command::Verify { seed, trials, n_max, steps, tolerance, exhaustive_max, inject_failure } => {
            if trials == 0 {
                return Err(CliError::Usage("--trials must be at least 1".into()));
            }
            if n_max < 3 {
                return Err(CliError::Usage("--n-max must be at least 3".into()));
            }
            if steps < 2 {
                return Err(CliError::Usage("--steps must be at least 2".into()));
            }
            if !(tolerance >= 0.0) {
                return Err(CliError::Usage("--tolerance must be nonnegative".into()));
            }
            let config =
                VerifyConfig { seed, trials, n_max, steps, tolerance, exhaustive_max, inject_failure };
            let summary = verify::run(&config);
            println!("{}", to_json(&summary));
            if let Some(f) = summary.smallest_failure() {
                eprint!("{}", f.reproducer());
                return Err(CliError::Invariant(format!(
                    "{} invariant failure(s); smallest reproducer above",
                    summary.failure_count
                )));
            }
        }
        Command::Construct { kind, n, delta, graph_out } => {
            let c = commands::construct(parse_kind(&kind)?, n, delta)?;
            if let Some(path) = graph_out {
                std::fs::write(&path, &c.graph)
                    .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            }
            println!("{}", to_json(&c));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
