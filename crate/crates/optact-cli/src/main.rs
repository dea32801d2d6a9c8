//! `optact` — classify, evaluate and sweep rotation-attenuation transfer
//! matrices, propagate polarization states, and verify little-group
//! invariance, with deterministic CSV/JSON output.
//!
//! Exit codes: 0 success, 2 usage or validation error (machine-readable JSON
//! object on stderr), 1 internal numerical failure.

mod commands;
mod output;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{CliError, LittleGroupArgs};
use optact::littlegroup::LittleGroupKind;

#[derive(Parser)]
#[command(name = "optact", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the medium's regime from its rotary power and attenuation pair
    #[command(allow_negative_numbers = true)]
    Classify {
        /// Rotary power (radians per unit length)
        #[arg(long)]
        gamma: f64,
        /// Attenuation coefficient along x (inverse length)
        #[arg(long)]
        mu1: f64,
        /// Attenuation coefficient along y (inverse length)
        #[arg(long)]
        mu2: f64,
    },
    /// Closed-form transfer matrix, optionally checked against the N-step product
    #[command(allow_negative_numbers = true)]
    Transfer {
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        mu1: f64,
        #[arg(long)]
        mu2: f64,
        /// Propagation distance
        #[arg(long)]
        z: f64,
        /// Also compute the microscopic product with this many steps
        #[arg(long = "n-steps")]
        n_steps: Option<u64>,
    },
    /// Sample a polarization trajectory through the medium
    #[command(allow_negative_numbers = true)]
    Propagate {
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        mu1: f64,
        #[arg(long)]
        mu2: f64,
        /// Trajectory endpoint
        #[arg(long = "z-max")]
        z_max: f64,
        /// Number of evenly spaced samples, endpoints included
        #[arg(long)]
        samples: usize,
        /// Initial amplitude along x
        #[arg(long = "amp-x", default_value_t = 1.0)]
        amp_x: f64,
        /// Initial amplitude along y
        #[arg(long = "amp-y", default_value_t = 0.0)]
        amp_y: f64,
        /// Initial phase of the x component (radians)
        #[arg(long = "phase-x", default_value_t = 0.0)]
        phase_x: f64,
        /// Initial phase of the y component (radians)
        #[arg(long = "phase-y", default_value_t = 0.0)]
        phase_y: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Sweep the squeeze rate mu at fixed gamma; shows continuity across mu = gamma
    #[command(allow_negative_numbers = true)]
    Sweep {
        #[arg(long)]
        gamma: f64,
        #[arg(long = "mu-from")]
        mu_from: f64,
        #[arg(long = "mu-to")]
        mu_to: f64,
        /// Number of sweep points, endpoints included
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        z: f64,
        /// Isotropic loss rate held fixed across the sweep
        #[arg(long, default_value_t = 0.0)]
        lambda: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Little-group element for a reference four-momentum and its invariance residual
    #[command(allow_negative_numbers = true)]
    Littlegroup {
        #[command(subcommand)]
        kind: LittleGroupCommand,
    },
}

#[derive(Subcommand)]
enum LittleGroupCommand {
    /// O(3)-like: fixes (0, 0, p, sqrt(p^2 + m^2))
    #[command(allow_negative_numbers = true)]
    Massive {
        #[arg(long)]
        mass: f64,
        #[arg(long)]
        momentum: f64,
        /// Rotation angle of the boosted rotation (radians)
        #[arg(long)]
        theta: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// O(2,1)-like: fixes (0, 0, p, E) with E < p
    #[command(allow_negative_numbers = true)]
    Spacelike {
        #[arg(long)]
        momentum: f64,
        #[arg(long)]
        energy: f64,
        /// Rapidity parameter of the boosted perpendicular boost
        #[arg(long)]
        boost: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// E(2)-like: fixes (0, 0, p, p)
    #[command(allow_negative_numbers = true)]
    Lightlike {
        #[arg(long)]
        momentum: f64,
        /// Gauge parameter
        #[arg(long)]
        gauge: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Classify { gamma, mu1, mu2 } => commands::cmd_classify(gamma, mu1, mu2),
        Command::Transfer {
            gamma,
            mu1,
            mu2,
            z,
            n_steps,
        } => commands::cmd_transfer(gamma, mu1, mu2, z, n_steps),
        Command::Propagate {
            gamma,
            mu1,
            mu2,
            z_max,
            samples,
            amp_x,
            amp_y,
            phase_x,
            phase_y,
            format,
        } => commands::cmd_propagate(
            gamma,
            mu1,
            mu2,
            z_max,
            samples,
            amp_x,
            amp_y,
            phase_x,
            phase_y,
            format == Format::Csv,
        ),
        Command::Sweep {
            gamma,
            mu_from,
            mu_to,
            steps,
            z,
            lambda,
            format,
        } => commands::cmd_sweep(
            gamma,
            mu_from,
            mu_to,
            steps,
            z,
            lambda,
            format == Format::Csv,
        ),
        Command::Littlegroup { kind } => {
            let args = match kind {
                LittleGroupCommand::Massive {
                    mass,
                    momentum,
                    theta,
                    format,
                } => LittleGroupArgs {
                    kind: LittleGroupKind::massive(mass, momentum),
                    param: theta,
                    param_name: "--theta",
                    csv: format == Format::Csv,
                },
                LittleGroupCommand::Spacelike {
                    momentum,
                    energy,
                    boost,
                    format,
                } => LittleGroupArgs {
                    kind: LittleGroupKind::spacelike(momentum, energy),
                    param: boost,
                    param_name: "--boost",
                    csv: format == Format::Csv,
                },
                LittleGroupCommand::Lightlike {
                    momentum,
                    gauge,
                    format,
                } => LittleGroupArgs {
                    kind: LittleGroupKind::lightlike(momentum),
                    param: gauge,
                    param_name: "--gauge",
                    csv: format == Format::Csv,
                },
            };
            commands::cmd_littlegroup(args)
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprintln!("{}", output::json_error(&e.to_string()));
            std::process::exit(2);
        }
    };
    match run(cli) {
        Ok(stdout) => print!("{stdout}"),
        Err(CliError::Validation(msg)) => {
            eprintln!("{}", output::json_error(&msg));
            std::process::exit(2);
        }
        Err(CliError::Numerical(msg)) => {
            eprintln!("{}", output::json_error(&msg));
            std::process::exit(1);
        }
    }
}
