//! `solconn`: connectivity of Boolean solution graphs from the command line.
//!
//! Exit status: 0 answered, 1 a "no" answer under `--exit-status`, 2 usage
//! or input error, 3 budget exceeded or refusal.

mod commands;
mod error;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use commands::{DiamMode, QueryArgs, RandomArgs, ReduceArgs};
use error::CliError;
use input::InputArgs;

#[derive(Parser)]
#[command(name = "solconn", version)]
#[command(about = "Connectivity of Boolean solution graphs over arbitrary bases")]
struct Cli {
    /// Print one JSON object instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Exit with status 1 when a yes/no query answers no
    #[arg(long, global = true)]
    exit_status: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Properties, clone, and dichotomy side of a base
    Classify {
        #[arg(long, value_name = "FILE")]
        base: Option<PathBuf>,
        #[arg(long, value_name = "M", default_value_t = solconn::boolfn::DEFAULT_DEGREE_BOUND)]
        degree_bound: u32,
    },
    /// Whether the solution graph is connected
    Conn {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        query: QueryArgs,
    },
    /// Whether two solutions are joined by a path, with a witness
    Stconn {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        query: QueryArgs,
        #[arg(long, value_name = "BITS")]
        s: String,
        #[arg(long, value_name = "BITS")]
        t: String,
    },
    /// Largest distance within a component
    Diameter {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_name = "N", default_value_t = 20)]
        budget: u32,
        #[arg(long, value_enum, default_value_t = DiamMode::Exact)]
        diameter_mode: DiamMode,
    },
    /// Connected components of the solution graph
    Components {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_name = "N", default_value_t = 20)]
        budget: u32,
        #[arg(long, value_enum, default_value_t = DiamMode::Exact)]
        diameter_mode: DiamMode,
    },
    /// Shortest path between two solutions, by exhaustive search
    Path {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_name = "N", default_value_t = 20)]
        budget: u32,
        #[arg(long, value_name = "BITS")]
        s: String,
        #[arg(long, value_name = "BITS")]
        t: String,
    },
    /// Hardness reduction of a CNF into a hard base
    Reduce(ReduceArgs),
    /// Induced path of exponential diameter in dimension 2k
    GenExpdiam {
        #[arg(long, value_name = "K")]
        k: u32,
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Seeded random relation or 3-CNF
    GenRandom(RandomArgs),
    /// Every function of the given arity generated by a base
    Closure {
        #[arg(long, value_name = "FILE")]
        base: Option<PathBuf>,
        #[arg(long, value_name = "A")]
        arity: u32,
        /// Stop once this many functions are found
        #[arg(long, value_name = "N", default_value_t = 1 << 16)]
        budget: usize,
    },
    /// Solution graph in Graphviz format, colored by component
    ExportDot {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_name = "N", default_value_t = 16)]
        budget: u32,
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },
}

fn run(cmd: Command) -> Result<commands::Outcome, CliError> {
    match cmd {
        Command::Classify { base, degree_bound } => commands::classify(base, degree_bound),
        Command::Conn { input, query } => commands::conn(&input, &query),
        Command::Stconn { input, query, s, t } => commands::stconn(&input, &query, &s, &t),
        Command::Diameter {
            input,
            budget,
            diameter_mode,
        } => commands::diameter_cmd(&input, budget, diameter_mode),
        Command::Components {
            input,
            budget,
            diameter_mode,
        } => commands::components_cmd(&input, budget, diameter_mode),
        Command::Path { input, budget, s, t } => commands::path(&input, budget, &s, &t),
        Command::Reduce(args) => commands::reduce(&args),
        Command::GenExpdiam { k, output } => commands::gen_expdiam_cmd(k, output),
        Command::GenRandom(args) => commands::gen_random(&args),
        Command::Closure { base, arity, budget } => commands::closure(base, arity, budget),
        Command::ExportDot { input, budget, dot } => commands::export_dot_cmd(&input, budget, dot),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("json")
            } else {
                out.text
            };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout(), "{text}");
            if cli.exit_status && out.answer == Some(false) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            if cli.json {
                let report = json!({ "error": { "code": e.code(), "message": e.to_string() } });
                eprintln!("{report}");
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
