//! Integers, word-size prime fields, F_{p²}, polynomials, resultants and CRT.

pub mod bivar;
pub mod crt;
pub mod factor;
pub mod fp;
pub mod fp2;
pub mod kronecker;
pub mod poly;
pub mod primes;
pub mod resultant;
pub mod ring;
pub mod zomega;

pub use bivar::BivarIntPoly;
pub use crt::{crt_symmetric, CrtValue};
pub use fp::Fp;
pub use fp2::Fp2;
pub use poly::{int_poly, interpolate, Poly};
pub use primes::{next_suitable_prime, psi};
pub use resultant::{resultant, resultant_euclid};
pub use ring::{Field, Ring};
pub use zomega::ZOmega;
