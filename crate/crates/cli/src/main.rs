use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gkm_cli::{CliError, Report};
use gkm_core::ncsf::NcsfBasis;

const DEFAULT_BOUND: u32 = 4;

#[derive(Parser)]
#[command(name = "gkm", version, about = "Serre presentations, twists and NCSF checks for quivers")]
struct Cli {
    /// Emit the report as JSON
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Vertex classification, Euler form and default twist
    Info { quiver: PathBuf },
    /// Graded dimensions of the Serre quotient
    Dims {
        quiver: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        max_degree: u32,
        #[arg(long)]
        quantum: bool,
    },
    /// Serre relations, divided-power sums and tilde relations
    SerreCheck {
        quiver: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u32,
        #[arg(long)]
        quantum: bool,
    },
    /// Noncommutative symmetric functions
    Ncsf {
        #[command(subcommand)]
        command: NcsfCommand,
    },
    /// Twist parity, q to -q correspondence and the twisted bialgebra axiom
    TwistCheck {
        quiver: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u32,
        /// `default` or a JSON file holding {"psi": [[...]]}
        #[arg(long, default_value = "default")]
        psi: String,
    },
    /// Coproduct descends to the quotient and acts on tilde generators
    CoproductCheck {
        quiver: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u32,
        #[arg(long)]
        quantum: bool,
    },
    /// Component counts against graded ranks
    Components {
        quiver: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        max_d: u32,
    },
}

#[derive(Subcommand)]
enum NcsfCommand {
    /// Expand a generator of one basis in another
    Expand {
        source: NcsfBasis,
        n: u32,
        #[arg(long, default_value = "psi")]
        basis: NcsfBasis,
    },
    /// Cross-check the NCSF identities up to a weight
    Check {
        #[arg(long, default_value_t = 8)]
        max: u32,
    },
}

fn run(cmd: Command) -> Result<Report, CliError> {
    use gkm_cli::*;
    match cmd {
        Command::Info { quiver } => Ok(info(&parse_quiver_file(&quiver)?)),
        Command::Dims { quiver, max_degree, quantum } => dims(&parse_quiver_file(&quiver)?, max_degree, quantum),
        Command::SerreCheck { quiver, bound, quantum } => serre_check(&parse_quiver_file(&quiver)?, bound, quantum),
        Command::Ncsf { command: NcsfCommand::Expand { source, n, basis } } => Ok(ncsf_expand(source, n, basis)),
        Command::Ncsf { command: NcsfCommand::Check { max } } => Ok(ncsf_check(max)),
        Command::TwistCheck { quiver, bound, psi } => {
            let q = parse_quiver_file(&quiver)?;
            let t = if psi == "default" {
                q.default_twist()
            } else {
                parse_twist_file(&PathBuf::from(&psi), q.vertex_count())?
            };
            twist_check(&q, bound, &t, &psi)
        }
        Command::CoproductCheck { quiver, bound, quantum } => {
            coproduct_check(&parse_quiver_file(&quiver)?, bound, quantum)
        }
        Command::Components { quiver, max_d } => components(&parse_quiver_file(&quiver)?, max_d),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else {
                report.render_text()
            };
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(report.exit_status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
