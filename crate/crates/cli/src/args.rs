use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use modpoly_core::invariants::InvariantKind;
use modpoly_core::modpoly::{AssemblyConfig, BackendChoice, StoppingRule};
use modpoly_core::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "modpoly", version, about = "Compute, verify and evaluate modular polynomials")]
pub struct Cli {
    /// Directory for computed polynomials and per-prime results.
    #[arg(long, global = true, env = "MODPOLY_CACHE_DIR", default_value = ".modpoly-cache")]
    pub cache_dir: PathBuf,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute Φ_ℓ for an invariant and write it as JSON.
    Compute(ComputeArgs),
    /// Run checks on a polynomial file.
    Verify(VerifyArgs),
    /// Evaluate Φ(x, Y) or Φ(x, y) over Z, Z[w] or F_p.
    Eval(EvalArgs),
    /// Inspect or clear the cache directory.
    #[command(subcommand)]
    Cache(CacheCommand),
}

/// Settings shared by every command that runs the CRT pipeline.
#[derive(Args, Debug, Clone)]
pub struct Config {
    #[arg(long, env = "MODPOLY_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Primes are chosen above this value.
    #[arg(long, env = "MODPOLY_PRIMES_MIN", default_value_t = 1 << 40)]
    pub primes_min: u64,
    /// deformation, interpolation, auto or both.
    #[arg(long, env = "MODPOLY_BACKEND", default_value = "auto")]
    pub backend: BackendChoice,
    /// bound, stabilization or stabilization:N.
    #[arg(long, env = "MODPOLY_STOPPING", default_value = "stabilization:2")]
    pub stopping: StoppingRule,
    /// Worker threads; 0 uses one per core.
    #[arg(long, env = "MODPOLY_THREADS", default_value_t = 0)]
    pub threads: usize,
    /// Do not read or write the cache.
    #[arg(long, env = "MODPOLY_NO_CACHE")]
    pub no_cache: bool,
}

impl Config {
    pub fn assembly(&self, cache_dir: &Path) -> AssemblyConfig {
        AssemblyConfig {
            seed: self.seed,
            min_prime: self.primes_min,
            backend: self.backend,
            stopping: self.stopping,
            threads: self.threads,
            cache: (!self.no_cache).then(|| cache_dir.to_path_buf()),
            ..AssemblyConfig::default()
        }
    }
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[arg(value_name = "INVARIANT", conflicts_with = "invariant")]
    pos_invariant: Option<InvariantKind>,
    #[arg(value_name = "ELL", conflicts_with = "ell")]
    pos_ell: Option<u64>,
    /// j, montgomery or hessian.
    #[arg(long, short = 'i')]
    invariant: Option<InvariantKind>,
    /// Prime order ℓ.
    #[arg(long, short = 'l')]
    ell: Option<u64>,
    /// Also write the result here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub config: Config,
}

impl ComputeArgs {
    pub fn target(&self) -> Result<(InvariantKind, u64)> {
        let inv = self.invariant.or(self.pos_invariant);
        let ell = self.ell.or(self.pos_ell);
        match (inv, ell) {
            (Some(inv), Some(ell)) => Ok((inv, ell)),
            _ => Err(Error::Parse("an invariant and an order are required".into())),
        }
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub file: PathBuf,
    /// Comma-separated check names, or `all`.
    #[arg(long, default_value = "all")]
    pub checks: String,
    /// Treat failures predicted by the known results as passes.
    #[arg(long)]
    pub paper_expectations: bool,
    /// Random curves for the isogeny-roots check.
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[command(flatten)]
    pub config: Config,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    pub file: PathBuf,
    /// An integer, `a+b*w`, or `cw^i`.
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<String>,
    /// Reduce modulo this prime.
    #[arg(long)]
    pub prime: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum CacheCommand {
    /// List cached polynomials.
    List,
    /// Remove the cache directory.
    Clear,
}
