//! Command-line front end: `plan`, `check` and `codesign-demo`.
//!
//! [`run`] takes the argument list and output streams and returns the exit
//! code: 0 on success or when every law meets its expected status, 1 when a
//! law does not, 2 on usage or input errors.

mod demo;
mod plan;
pub mod suite;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::berg::{Connectivity, Domain, Schema};

pub use demo::cmd_codesign_demo;
pub use plan::{cmd_plan, parse_cell, parse_sigma, PlanRequest};
pub use suite::{run_suite, Instance, Outcome, Status, SuiteConfig, SuiteLaw};

pub const EXIT_OK: i32 = 0;
pub const EXIT_LAW: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "nategory",
    version,
    about = "Categories with norphisms: planning, law checks and co-design"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Plan a shortest hike on a terrain and report its certifying bound.
    Plan {
        /// Terrain CSV: `rows,cols,cell_size`, then one line of heights per row.
        #[arg(long)]
        terrain: PathBuf,
        /// Start cell `row,col`.
        #[arg(long, value_parser = parse_cell)]
        start: (usize, usize),
        /// Goal cell `row,col`.
        #[arg(long, value_parser = parse_cell)]
        goal: (usize, usize),
        /// Steepness interval `lo,hi`.
        #[arg(long, value_parser = parse_sigma, allow_hyphen_values = true, default_value = "-inf,inf")]
        sigma: (f64, f64),
        /// Grid connectivity, 4 or 8.
        #[arg(long, default_value = "4")]
        conn: Connectivity,
        /// Heuristic schema: zero, euclid, geodesic or steepness.
        #[arg(long, default_value = "euclid")]
        schema: Schema,
        /// Bound domain: nonneg, real or intfloor.
        #[arg(long, default_value = "real")]
        domain: Domain,
    },
    /// Run law checks and compare each result with its expected status.
    Check {
        /// Instance to check; repeatable. Defaults to all.
        #[arg(long = "instance")]
        instances: Vec<Instance>,
        /// Law to check; repeatable. Defaults to all.
        #[arg(long = "law")]
        laws: Vec<SuiteLaw>,
        /// Seed for the sampled bound values on terrain instances.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Longest path, in edges, enumerated on terrain instances.
        #[arg(long, default_value_t = 3)]
        max_path_len: usize,
    },
    /// Print the pears, CHF and raisins co-design tables.
    CodesignDemo,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match cli.command {
        Command::Plan {
            terrain,
            start,
            goal,
            sigma,
            conn,
            schema,
            domain,
        } => {
            let terrain_csv = match std::fs::read_to_string(&terrain) {
                Ok(t) => t,
                Err(e) => {
                    let _ = writeln!(err, "error: cannot read {}: {e}", terrain.display());
                    return EXIT_USAGE;
                }
            };
            let req = PlanRequest {
                terrain_csv,
                start,
                goal,
                sigma,
                connectivity: conn,
                schema,
                domain,
            };
            match cmd_plan(&req) {
                Ok(text) => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_USAGE
                }
            }
        }
        Command::Check {
            instances,
            laws,
            seed,
            max_path_len,
        } => {
            let instances = if instances.is_empty() {
                Instance::ALL.to_vec()
            } else {
                instances
            };
            let laws = if laws.is_empty() { SuiteLaw::ALL.to_vec() } else { laws };
            let outcomes = run_suite(&instances, &laws, SuiteConfig { seed, max_path_len });
            let mut unexpected = 0;
            for o in &outcomes {
                let _ = writeln!(out, "{}", o.line());
                if let Some(w) = &o.witness {
                    let _ = writeln!(out, "  witness {w}");
                }
                unexpected += !o.meets_expectation() as usize;
            }
            let _ = writeln!(out, "summary checks={} unexpected={unexpected}", outcomes.len());
            if unexpected == 0 {
                EXIT_OK
            } else {
                EXIT_LAW
            }
        }
        Command::CodesignDemo => {
            let _ = write!(out, "{}", cmd_codesign_demo());
            EXIT_OK
        }
    }
}
