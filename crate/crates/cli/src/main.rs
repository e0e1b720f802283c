//! `suspec`: exact special values, covolumes, multiplicities and self-checks for SU(n,1).

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use suspec::su_spectrum::HCParam;

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "suspec", version, about = "Spectral data of arithmetic quotients of SU(n,1)")]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Config {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Working precision for floating-point views, in bits (>= 64).
    #[arg(long, global = true, env = "SUSPEC_PRECISION_BITS", default_value_t = 256)]
    pub precision_bits: usize,

    /// Largest prime in numeric Euler products (>= 100).
    #[arg(long, global = true, env = "SUSPEC_PRIME_BOUND", default_value_t = 10_000)]
    pub prime_bound: u64,
}

#[derive(Args, Debug, Clone)]
pub struct ErrArgs {
    /// Error constant C for even n.
    #[arg(long, conflicts_with_all = ["kappa", "dim_e", "cusp_vol"])]
    pub c: Option<f64>,
    /// |kappa| for assembling C.
    #[arg(long, requires_all = ["dim_e", "cusp_vol"])]
    pub kappa: Option<f64>,
    /// dim E_(tau - delta_K) for assembling C.
    #[arg(long)]
    pub dim_e: Option<u64>,
    /// Summed cusp volumes for assembling C.
    #[arg(long)]
    pub cusp_vol: Option<f64>,
    /// Level m of the congruence subgroup.
    #[arg(long)]
    pub m: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Discriminant, ramification and splitting data of Q(sqrt(-k)).
    Field {
        #[arg(long)]
        k: u64,
        /// Also report T for this n.
        #[arg(long)]
        n: Option<u32>,
    },
    /// L(s, chi_D): exact where a closed form exists, plus the numeric series for s > 1.
    Lvalue {
        #[arg(long)]
        k: u64,
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
        /// Override the number of summed terms.
        #[arg(long)]
        terms: Option<u64>,
    },
    /// zeta(s) for even s >= 2 or s <= 0.
    Zeta {
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
    },
    /// Covolume of the principal arithmetic lattice.
    Volume {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u32,
        /// Keep the |D| power unfolded.
        #[arg(long)]
        unfolded: bool,
        /// Add a numeric cross-check through the truncated Euler product.
        #[arg(long)]
        numeric: bool,
    },
    /// Multiplicity of the discrete series with parameter tau.
    Multiplicity {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_tau)]
        tau: HCParam,
        #[arg(long, value_parser = parse_bigint)]
        h: BigInt,
        #[command(flatten)]
        err: ErrArgs,
    },
    /// Lower bound for cuspidal cohomology in degree n.
    Cohomology {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_tau)]
        tau: HCParam,
        #[arg(long, value_parser = parse_bigint)]
        h: BigInt,
        #[command(flatten)]
        err: ErrArgs,
    },
    /// Both sides of the rationality identity for sqrt|D| L(2n+1) / (2 pi)^(2n+1).
    Rationality {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_tau, requires = "tau2")]
        tau1: Option<HCParam>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_tau, requires = "tau1")]
        tau2: Option<HCParam>,
        #[arg(long, value_parser = parse_bigint, default_value = "1")]
        h1: BigInt,
        #[arg(long, value_parser = parse_bigint, default_value = "1")]
        h2: BigInt,
        #[arg(long, default_value_t = 3)]
        m1: u64,
        #[arg(long, default_value_t = 3)]
        m2: u64,
    },
    /// Random exact checks of the Heisenberg group law and its matrix model.
    HeisenbergCheck {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the acceptance suites.
    Selfcheck {
        /// Run only these suites (1-12).
        #[arg(long = "suite", value_parser = clap::value_parser!(u8).range(1..=12))]
        suites: Vec<u8>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Include wall-clock timings (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Multiplicity table over ranges of k, n, tau and h.
    Sweep {
        /// k values: comma-separated integers or inclusive ranges a..b; non-squarefree k are skipped.
        #[arg(long)]
        k: String,
        /// n values, same syntax.
        #[arg(long)]
        n: String,
        /// Offsets c of the family tau_i = n + 1 - i + c.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        tau_offset: String,
        /// Additional explicit parameters (used for matching n).
        #[arg(long, allow_hyphen_values = true, value_parser = parse_tau)]
        tau: Vec<HCParam>,
        /// h values, same syntax.
        #[arg(long, default_value = "1")]
        h: String,
    },
}

fn parse_tau(s: &str) -> Result<HCParam, String> {
    s.parse::<HCParam>().map_err(|e| e.to_string())
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.trim().parse::<BigInt>().map_err(|_| format!("{s:?} is not an integer"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok((out, status)) => {
            print!("{}", output::render(&out, cli.config.format));
            ExitCode::from(status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
