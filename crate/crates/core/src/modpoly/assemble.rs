//! CRT assembly of per-prime results into Z[X, Y].

use std::path::PathBuf;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{next_suitable_prime, BivarIntPoly, CrtValue};
use crate::error::{Error, Result};
use crate::invariants::InvariantKind;

use super::{check_order, height_bound, Backend, BackendChoice, ModpResult, PrimeCache};

/// When to stop adding primes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StoppingRule {
    /// Until `∏p > 2·exp(B_ℓ)`.
    Bound,
    /// Until the lift is unchanged for this many extra primes.
    Stabilization(usize),
}

impl FromStr for StoppingRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bound" => Ok(StoppingRule::Bound),
            "stabilization" => Ok(StoppingRule::Stabilization(2)),
            _ => match s.strip_prefix("stabilization:").map(str::parse) {
                Some(Ok(n)) if n > 0 => Ok(StoppingRule::Stabilization(n)),
                _ => Err(Error::Parse(format!("unknown stopping rule {s:?}"))),
            },
        }
    }
}

/// Which stopping rule ended the computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StopReason {
    Bound,
    Stabilized,
}

#[derive(Clone, Debug)]
pub struct AssemblyConfig {
    pub seed: u64,
    /// Primes are taken above this value.
    pub min_prime: u64,
    pub backend: BackendChoice,
    pub stopping: StoppingRule,
    /// Worker threads; 0 means the rayon default.
    pub threads: usize,
    pub cache: Option<PathBuf>,
    /// Discarded primes tolerated before giving up.
    pub max_discards: usize,
}

impl Default for AssemblyConfig {
    fn default() -> Self {
        AssemblyConfig {
            seed: 0,
            min_prime: 1 << 40,
            backend: BackendChoice::Auto,
            stopping: StoppingRule::Stabilization(2),
            threads: 1,
            cache: None,
            max_discards: 64,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Assembly {
    pub poly: BivarIntPoly,
    /// Primes whose results entered the CRT, in order.
    pub primes: Vec<u64>,
    pub discarded: Vec<(u64, String)>,
    pub backends: Vec<Backend>,
    pub stop: StopReason,
}

/// Compute Φ_ℓ^α over Z from per-prime results.
pub fn assemble_crt(inv: InvariantKind, ell: u64, cfg: &AssemblyConfig) -> Result<Assembly> {
    let backends = cfg.backend.backends(ell);
    for &b in &backends {
        check_order(inv, ell, b)?;
    }
    let cache = cfg.cache.as_ref().map(PrimeCache::new);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| Error::InternalError(e.to_string()))?;
    let batch_size = pool.current_num_threads().max(1);
    let bound_nats = height_bound(ell).b + std::f64::consts::LN_2;
    let mut acc = CrtGrid::new(ell);
    let mut primes = Vec::new();
    let mut discarded = Vec::new();
    let mut prev: Option<BivarIntPoly> = None;
    let mut stable = 0;
    let mut after = cfg.min_prime;
    loop {
        let mut batch = Vec::with_capacity(batch_size);
        for _ in 0..batch_size {
            after = next_suitable_prime(ell, inv.level(), after, 0);
            batch.push(after);
        }
        let results: Vec<Result<ModpResult>> =
            pool.install(|| batch.par_iter().map(|&p| compute_prime(inv, ell, p, &backends, cfg.seed, cache.as_ref())).collect());
        for (p, r) in batch.into_iter().zip(results) {
            let r = match r {
                Ok(r) => r,
                Err(e) if e.is_discardable() => {
                    discarded.push((p, e.to_string()));
                    if discarded.len() > cfg.max_discards {
                        return Err(Error::PrimePoolExhausted);
                    }
                    continue;
                }
                Err(e) => return Err(e),
            };
            acc.push(&r)?;
            primes.push(p);
            let lift = acc.lift();
            let stop = match cfg.stopping {
                StoppingRule::Bound => (acc.log_modulus() > bound_nats).then_some(StopReason::Bound),
                StoppingRule::Stabilization(n) => {
                    stable = if prev.as_ref() == Some(&lift) { stable + 1 } else { 0 };
                    (stable >= n).then_some(StopReason::Stabilized)
                }
            };
            if let Some(stop) = stop {
                return Ok(Assembly { poly: lift, primes, discarded, backends, stop });
            }
            prev = Some(lift);
        }
    }
}

/// One prime with every selected backend; all must agree.
fn compute_prime(
    inv: InvariantKind,
    ell: u64,
    p: u64,
    backends: &[Backend],
    seed: u64,
    cache: Option<&PrimeCache>,
) -> Result<ModpResult> {
    let mut first: Option<ModpResult> = None;
    for &b in backends {
        let r = match cache.and_then(|c| c.get(inv, ell, p, b, seed)) {
            Some(r) => r,
            None => {
                let r = b.run(inv, ell, p, seed)?;
                if let Some(c) = cache {
                    c.put(&r, seed)?;
                }
                r
            }
        };
        match &first {
            None => first = Some(r),
            Some(f) if f.same_polynomial(&r) => {}
            Some(_) => return Err(Error::InternalError(format!("backends disagree at p = {p}"))),
        }
    }
    first.ok_or_else(|| Error::InternalError("no backend selected".into()))
}

/// Symmetric CRT lift of a fixed set of per-prime results.
pub fn lift_results(results: &[ModpResult]) -> Result<BivarIntPoly> {
    let first = results.first().ok_or_else(|| Error::InternalError("no results to lift".into()))?;
    let mut acc = CrtGrid::new(first.ell);
    for r in results {
        acc.push(r)?;
    }
    Ok(acc.lift())
}

struct CrtGrid {
    n: usize,
    cells: Vec<CrtValue>,
}

impl CrtGrid {
    fn new(ell: u64) -> Self {
        let n = ell as usize + 2;
        CrtGrid { n, cells: vec![CrtValue::new(); n * n] }
    }

    fn push(&mut self, r: &ModpResult) -> Result<()> {
        if r.grid.len() != self.n || r.grid.iter().any(|row| row.len() != self.n) {
            return Err(Error::InternalError(format!("inconsistent degrees at p = {}", r.prime)));
        }
        let p = BigInt::from(r.prime);
        for (i, row) in r.grid.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                self.cells[i * self.n + j].push(&BigInt::from(c), &p)?;
            }
        }
        Ok(())
    }

    fn log_modulus(&self) -> f64 {
        let m = self.cells[0].modulus();
        // a lower bound on ln M
        (m.bits().saturating_sub(1)) as f64 * std::f64::consts::LN_2
    }

    fn lift(&self) -> BivarIntPoly {
        let mut out = BivarIntPoly::new();
        for (k, c) in self.cells.iter().enumerate() {
            out.set((k / self.n) as u32, (k % self.n) as u32, c.symmetric());
        }
        out
    }
}
