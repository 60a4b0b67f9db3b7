//! Modular polynomials Φ_ℓ^α(X, Y) for the j-invariant, the Montgomery
//! coefficient (level Γ₀(4)) and the Hessian coefficient (level Γ(3)).
//!
//! Each Φ is computed modulo many primes p from a supersingular curve over
//! F_{p²} and its deformation over F_{p²}[ε]/(ε^{ℓ+2}), then lifted to Z[X, Y]
//! by the Chinese remainder theorem.

pub mod arith;
pub mod curves;
pub mod epsring;
pub mod goodmodels;
pub mod error;
pub mod invariants;
pub mod isogeny;
pub mod modpoly;
pub mod polyfile;
pub mod verify;

pub use error::{Error, Result};
