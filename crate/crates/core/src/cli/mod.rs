//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 on a mathematical failure,
//! 2 on malformed input.

mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::exact_core::{parse_rational, MuVector};

pub use commands::{basis_json, dims_rows, gram_json, DimsRow};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Output format for every command.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Parameters: kept as indeterminates, or fixed to four rationals.
#[derive(Clone, PartialEq, Debug)]
pub enum MuSpec {
    Symbolic,
    Fixed(Box<MuVector>),
}

impl FromStr for MuSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<MuSpec, Error> {
        if s.trim() == "symbolic" {
            return Ok(MuSpec::Symbolic);
        }
        let parts = s.split(',').map(|p| parse_rational(p.trim())).collect::<Result<Vec<_>, _>>()?;
        let mu: MuVector = parts
            .try_into()
            .map_err(|v: Vec<_>| Error::Parse(format!("expected 4 parameters, got {}", v.len())))?;
        crate::exact_core::check_mu_domain(&mu)?;
        Ok(MuSpec::Fixed(Box::new(mu)))
    }
}

/// Settings shared by all commands.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub mu: MuSpec,
    pub degree_cap: u32,
    pub sphere_cap: u32,
    pub seed: u64,
    pub output: Option<PathBuf>,
    pub format: Format,
}

#[derive(Parser, Debug)]
#[command(name = "dunkl-s3", version, about = "Exact algebra and spectrum of the Dunkl model on the three-sphere")]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// "symbolic" or four comma-separated rationals such as 1/2,1/2,1/2,1/2.
    #[arg(long, global = true, value_parser = MuSpec::from_str)]
    pub mu: Option<MuSpec>,
    #[arg(long, global = true, env = "DUNKL_S3_DEGREE_CAP", default_value_t = 4,
          value_parser = clap::value_parser!(u32).range(1..))]
    pub degree_cap: u32,
    #[arg(long, global = true, env = "DUNKL_S3_SPHERE_CAP", default_value_t = 6,
          value_parser = clap::value_parser!(u32).range(1..))]
    pub sphere_cap: u32,
    #[arg(long, global = true, env = "DUNKL_S3_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Also write the result to this file.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the symbolic identity suite.
    Verify {
        /// Comma-separated relation families.
        #[arg(long)]
        only: Option<String>,
        /// Keep only checks indexed by this subset, e.g. 134.
        #[arg(long = "A")]
        subset: Option<String>,
        /// Keep only checks whose subsets lie inside this one.
        #[arg(long)]
        within: Option<String>,
        /// Run against a deliberately broken realization.
        #[arg(long)]
        mutate: Option<String>,
        #[arg(long, default_value_t = 2)]
        samples: usize,
    },
    /// Build and check the kernel basis of one degree.
    Basis {
        #[arg(long)]
        m: u32,
    },
    /// Gram matrix of all basis elements up to a degree.
    Gram {
        /// Defaults to the degree cap.
        #[arg(long)]
        m_max: Option<u32>,
        /// Compare norms with the closed normalization constants.
        #[arg(long)]
        normcheck: bool,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Fischer decomposition dimensions.
    Dims {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(2..=4))]
        n: u32,
        /// Defaults to the degree cap.
        #[arg(long)]
        m_max: Option<u32>,
    },
    /// Canonical form of an operator expression.
    Nf {
        expr: String,
    },
}

impl Cli {
    pub fn config(&self) -> RunConfig {
        RunConfig {
            mu: self.common.mu.clone().unwrap_or(MuSpec::Symbolic),
            degree_cap: self.common.degree_cap,
            sphere_cap: self.common.sphere_cap,
            seed: self.common.seed,
            output: self.common.output.clone(),
            format: self.common.format,
        }
    }
}

/// Outcome of a command before it is written anywhere.
pub struct Outcome {
    pub code: i32,
    pub body: String,
}

fn usage(msg: impl std::fmt::Display) -> Outcome {
    Outcome { code: EXIT_USAGE, body: format!("error: {msg}\n") }
}

fn fixed_mu(cfg: &RunConfig) -> Result<&MuVector, Outcome> {
    match &cfg.mu {
        MuSpec::Fixed(mu) => Ok(mu),
        MuSpec::Symbolic => Err(usage("this command needs numeric --mu")),
    }
}

/// Run a parsed command line.
pub fn execute(cli: &Cli) -> Outcome {
    let cfg = cli.config();
    let res = match &cli.command {
        Command::Verify { only, subset, within, mutate, samples } => {
            if cfg.mu != MuSpec::Symbolic {
                return usage("verify works with symbolic parameters only");
            }
            commands::verify(&cfg, only.as_deref(), subset.as_deref(), within.as_deref(), mutate.as_deref(), *samples)
        }
        Command::Basis { m } => match fixed_mu(&cfg) {
            Ok(mu) => commands::basis(&cfg, mu, *m),
            Err(o) => return o,
        },
        Command::Gram { m_max, normcheck, tol } => match fixed_mu(&cfg) {
            Ok(mu) => {
                if tol.is_nan() || *tol <= 0.0 {
                    return usage("--tol must be positive");
                }
                commands::gram(&cfg, mu, m_max.unwrap_or(cfg.degree_cap), *normcheck, *tol)
            }
            Err(o) => return o,
        },
        Command::Dims { n, m_max } => commands::dims(&cfg, *n, m_max.unwrap_or(cfg.degree_cap)),
        Command::Nf { expr } => commands::nf(&cfg, expr),
    };
    match res {
        Ok(o) => o,
        Err(Error::ContractViolation(msg)) | Err(Error::ParameterPole(msg)) => {
            Outcome { code: EXIT_FAIL, body: format!("check failed: {msg}\n") }
        }
        Err(e) => usage(e),
    }
}

/// Parse `args`, run, write the body to `out` (and to `--output`), return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            if code == EXIT_PASS {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let outcome = execute(&cli);
    if outcome.code == EXIT_USAGE {
        let _ = write!(err, "{}", outcome.body);
        return outcome.code;
    }
    if let Some(path) = &cli.common.output {
        if let Err(e) = std::fs::write(path, &outcome.body) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    let _ = write!(out, "{}", outcome.body);
    outcome.code
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::rat;

    #[test]
    fn mu_spec_parsing() {
        assert_eq!("symbolic".parse::<MuSpec>().unwrap(), MuSpec::Symbolic);
        let h = rat(1, 2);
        assert_eq!(
            "1/2, 1/2,1/2,1/2".parse::<MuSpec>().unwrap(),
            MuSpec::Fixed(Box::new([h.clone(), h.clone(), h.clone(), h]))
        );
        assert!("1,2,3".parse::<MuSpec>().is_err());
        assert!("1,2,3,-1".parse::<MuSpec>().is_err());
        assert!("1,x,3,4".parse::<MuSpec>().is_err());
    }

    #[test]
    fn usage_errors_exit_two() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        assert_eq!(run(["dunkl-s3", "basis", "--m", "1"], &mut out, &mut err), EXIT_USAGE);
        assert_eq!(run(["dunkl-s3", "frobnicate"], &mut out, &mut err), EXIT_USAGE);
        assert_eq!(run(["dunkl-s3", "verify", "--sphere-cap", "0"], &mut out, &mut err), EXIT_USAGE);
        assert_eq!(run(["dunkl-s3", "verify", "--mutate", "nope"], &mut out, &mut err), EXIT_USAGE);
        assert_eq!(run(["dunkl-s3", "verify", "--mu", "1,1,1,1"], &mut out, &mut err), EXIT_USAGE);
    }
}
