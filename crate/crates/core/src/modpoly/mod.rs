//! The Φ-computation driver: per-prime backends and CRT assembly.

mod assemble;
mod cache;
mod deformation;
mod interpolation;

pub use assemble::{assemble_crt, lift_results, Assembly, AssemblyConfig, StopReason, StoppingRule};
pub use cache::{write_atomic, PrimeCache};
pub use deformation::deformation_backend;
pub use interpolation::{interpolate_samples, interpolation_backend, isogeny_neighbours};

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arith::primes::{is_prime_u64, odd_part};
use crate::arith::{Fp2, Poly};
use crate::curves::{torsion_basis, Weierstrass};
use crate::error::{Error, Result};
use crate::invariants::{normalise_basis, EnhancedCurve, InvariantKind, LevelStructure, MontgomeryInvariant};
use crate::invariants::Invariant;

/// Which per-prime algorithm produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Deformation,
    Interpolation,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Deformation => "deformation",
            Backend::Interpolation => "interpolation",
        }
    }

    pub fn run(self, inv: InvariantKind, ell: u64, p: u64, seed: u64) -> Result<ModpResult> {
        match self {
            Backend::Deformation => deformation_backend(inv, ell, p, seed),
            Backend::Interpolation => interpolation_backend(inv, ell, p, seed),
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Backend selection for a whole computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BackendChoice {
    Deformation,
    Interpolation,
    /// Deformation for odd ℓ, interpolation for ℓ = 2.
    Auto,
    /// Both, with the results required to agree at every prime.
    Both,
}

impl BackendChoice {
    pub fn backends(self, ell: u64) -> Vec<Backend> {
        match self {
            BackendChoice::Deformation => vec![Backend::Deformation],
            BackendChoice::Interpolation => vec![Backend::Interpolation],
            BackendChoice::Auto if ell == 2 => vec![Backend::Interpolation],
            BackendChoice::Auto => vec![Backend::Deformation],
            BackendChoice::Both => vec![Backend::Deformation, Backend::Interpolation],
        }
    }
}

impl FromStr for BackendChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "deformation" => Ok(BackendChoice::Deformation),
            "interpolation" => Ok(BackendChoice::Interpolation),
            "auto" => Ok(BackendChoice::Auto),
            "both" => Ok(BackendChoice::Both),
            _ => Err(Error::Parse(format!("unknown backend {s:?}"))),
        }
    }
}

/// Φ_ℓ^α modulo one prime, as a dense grid: `grid[i][j]` is the coefficient of `XⁱYʲ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModpResult {
    pub prime: u64,
    pub invariant: InvariantKind,
    pub ell: u64,
    pub grid: Vec<Vec<u64>>,
    pub backend: Backend,
}

impl ModpResult {
    /// Build from the coefficients of `Y⁰, …, Y^{ℓ+1}` as polynomials in X, checking the shape.
    pub(crate) fn from_y_coefficients(
        inv: InvariantKind,
        ell: u64,
        p: u64,
        backend: Backend,
        ys: &[Poly<Fp2>],
    ) -> Result<Self> {
        let n = ell as usize + 2;
        let mut grid = vec![vec![0u64; n]; n];
        for (j, q) in ys.iter().enumerate() {
            if q.degree().is_some_and(|d| d >= n) || j >= n {
                return Err(discard(p, "degree exceeds ℓ + 1"));
            }
            for (i, c) in q.coeffs().iter().enumerate() {
                if !c.in_base_field() {
                    return Err(discard(p, "coefficient not in F_p"));
                }
                grid[i][j] = c.re().value();
            }
        }
        let r = ModpResult { prime: p, invariant: inv, ell, grid, backend };
        r.check_shape()?;
        Ok(r)
    }

    pub fn coeff(&self, i: usize, j: usize) -> u64 {
        self.grid[i][j]
    }

    /// Monic of degree ℓ + 1 in Y and of degree ℓ + 1 in X.
    pub fn check_shape(&self) -> Result<()> {
        let n = self.ell as usize + 1;
        let monic = (0..=n).all(|i| self.grid[i][n] == u64::from(i == 0));
        let deg_x = (0..=n).any(|j| self.grid[n][j] != 0);
        if monic && deg_x {
            Ok(())
        } else {
            Err(discard(self.prime, "result is not monic of degree ℓ + 1"))
        }
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.grid.len();
        (0..n).all(|i| (0..n).all(|j| self.grid[i][j] == self.grid[j][i]))
    }

    /// Equal up to the backend tag.
    pub fn same_polynomial(&self, other: &ModpResult) -> bool {
        self.prime == other.prime && self.invariant == other.invariant && self.ell == other.ell && self.grid == other.grid
    }
}

pub(crate) fn discard(prime: u64, reason: &str) -> Error {
    Error::DiscardPrime { prime, reason: reason.to_string() }
}

/// The degree-ℓ height bound `B_ℓ = 6ℓ ln ℓ + 16ℓ + min(2ℓ, 14√ℓ ln ℓ)` and the divisor `deg J₁`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeightBound {
    pub ell: u64,
    pub b: f64,
    pub divisor: u32,
}

impl HeightBound {
    /// The conjectured bound for Φ^α: `B_ℓ / deg J₁`.
    pub fn conjectured(&self) -> f64 {
        self.b / f64::from(self.divisor)
    }
}

/// `B_ℓ` with divisor 1 (the j-invariant); see [`height_bound_for`].
pub fn height_bound(ell: u64) -> HeightBound {
    assert!(ell >= 2, "height bound needs ℓ ≥ 2");
    let l = ell as f64;
    let b = 6.0 * l * l.ln() + 16.0 * l + (2.0 * l).min(14.0 * l.sqrt() * l.ln());
    HeightBound { ell, b, divisor: 1 }
}

pub fn height_bound_for(inv: InvariantKind, ell: u64) -> HeightBound {
    let divisor = inv.get().j1().degree().unwrap_or(0) as u32;
    HeightBound { divisor, ..height_bound(ell) }
}

/// Reject orders the backends do not support.
pub fn check_order(inv: InvariantKind, ell: u64, backend: Backend) -> Result<()> {
    if !is_prime_u64(ell) {
        return Err(Error::UnsupportedOrder(format!("ℓ = {ell} is not prime")));
    }
    if inv.level().gcd(&ell) != 1 {
        return Err(Error::UnsupportedOrder(format!("ℓ = {ell} divides the level {}", inv.level())));
    }
    if backend == Backend::Deformation && ell == 2 {
        return Err(Error::UnsupportedOrder("the deformation backend needs odd ℓ".into()));
    }
    Ok(())
}

/// Whether `p` gives full rational ℓ- and N-torsion on the base curve.
pub fn is_suitable_prime(inv: InvariantKind, ell: u64, p: u64) -> bool {
    p % 4 == 3 && is_prime_u64(p) && (p + 1) % (4 * ell * odd_part(inv.level())) == 0
}

/// The deterministic RNG for one (invariant, ℓ, p, backend, seed).
pub fn prime_rng(inv: InvariantKind, ell: u64, p: u64, backend: Backend, seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::from_seed(content_key(inv, ell, p, backend, seed))
}

pub(crate) fn content_key(inv: InvariantKind, ell: u64, p: u64, backend: Backend, seed: u64) -> [u8; 32] {
    let mut h = Sha256::new();
    h.update(format!("{inv}/{ell}/{p}/{backend}/{seed}").as_bytes());
    h.finalize().into()
}

/// `y² = x³ + 6x² + x` over F_{p²}, CM by Z[2i], with the level structure the invariant needs.
pub fn base_enhanced_curve<R: rand::Rng + ?Sized>(inv: InvariantKind, p: u64, rng: &mut R) -> Result<EnhancedCurve<Fp2>> {
    let f = |n: i64| Fp2::from_i64(n, p);
    let j = f(287496);
    if j.is_zero() || j == f(1728) {
        return Err(Error::DegenerateBase);
    }
    let e = match inv {
        InvariantKind::J => EnhancedCurve::new(Weierstrass::new(f(0), f(6), f(0), f(1), f(0)), LevelStructure::Trivial)?,
        InvariantKind::Montgomery => MontgomeryInvariant.canonical_curve(f(6)).map_err(|_| Error::DegenerateBase)?,
        InvariantKind::Hessian => {
            let c = Weierstrass::new(f(0), f(6), f(0), f(1), f(0));
            let (t1, t2) = torsion_basis(&c, 3, rng)?;
            let (t1, t2) = normalise_basis(&c, &t1, &t2, rng)?;
            EnhancedCurve::new(c, LevelStructure::FullBasis(t1, t2))?
        }
    };
    let a = inv.get().value(&e).map_err(|_| Error::DegenerateBase)?;
    if !inv.get().is_in_image(a) {
        return Err(Error::DegenerateBase);
    }
    Ok(e)
}
