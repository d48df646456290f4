use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use schubertq::Space;
use schubertq_cli::{
    cmd_basis, cmd_glbc, cmd_matrix, cmd_pieri, cmd_property_o, cmd_rietsch, cmd_spectrum, Format, Report, EXIT_USAGE,
};

/// Quantum Schubert calculus on LG(n) and OG(n).
#[derive(Parser)]
#[command(name = "schubertq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the strict partitions indexing the Schubert basis.
    Basis {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        opts: Opts,
    },
    /// Quantum Pieri product of the k-th special class with a Schubert class.
    Pieri {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Comma-separated parts; empty for the fundamental class.
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// Exact integer matrix of quantum multiplication by c1 at q = 1.
    Matrix {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        opts: Opts,
    },
    /// Closed-form eigenvalues of c1, its Perron root and eigenbasis residual.
    Spectrum {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        opts: Opts,
    },
    /// Lower-bound report delta0 >= dim + 1 for n = 1..n-max.
    Glbc {
        #[arg(long = "n-max")]
        n_max: u32,
        #[command(flatten)]
        opts: Opts,
    },
    /// The three items of Property O for c1.
    PropertyO {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        opts: Opts,
    },
    /// Maximum of Re E1 over the admissible root-of-unity points.
    Rietsch {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
    },
}

#[derive(Args)]
struct Opts {
    #[arg(long, value_enum, default_value = "lg")]
    space: SpaceArg,
    #[arg(long, value_enum, default_value = "table")]
    format: FormatArg,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceArg {
    Lg,
    Og,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Table,
}

impl From<SpaceArg> for Space {
    fn from(s: SpaceArg) -> Self {
        match s {
            SpaceArg::Lg => Space::Lg,
            SpaceArg::Og => Space::Og,
        }
    }
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Table => Format::Table,
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("SCHUBERTQ_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("SCHUBERTQ_THREADS must be a positive integer, got `{value}`"))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())?;
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    Ok(())
}

fn check_tol(tol: f64) -> Result<f64, String> {
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(format!("--tol must be positive and finite, got {tol}"))
    }
}

fn run(command: Command) -> Result<(Report, Format), String> {
    Ok(match command {
        Command::Basis { n, opts } => (cmd_basis(opts.space.into(), n)?, opts.format.into()),
        Command::Pieri { n, k, lambda, opts } => (cmd_pieri(opts.space.into(), n, k, &lambda)?, opts.format.into()),
        Command::Matrix { n, opts } => (cmd_matrix(opts.space.into(), n)?, opts.format.into()),
        Command::Spectrum { n, opts } => (
            cmd_spectrum(opts.space.into(), n, check_tol(opts.tol)?)?,
            opts.format.into(),
        ),
        Command::Glbc { n_max, opts } => (cmd_glbc(opts.space.into(), n_max)?, opts.format.into()),
        Command::PropertyO { n, opts } => (
            cmd_property_o(opts.space.into(), n, check_tol(opts.tol)?)?,
            opts.format.into(),
        ),
        Command::Rietsch { n, format } => (cmd_rietsch(n)?, format.into()),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let outcome = configure_threads().and_then(|()| run(cli.command));
    match outcome {
        Ok((report, format)) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(report.render(format).as_bytes()).is_err() {
                return ExitCode::from(EXIT_USAGE as u8);
            }
            if !report.verified {
                eprintln!("error: verification failed");
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
