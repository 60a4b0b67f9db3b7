use super::pairing::weil_pairing;
use super::weierstrass::{Point, Weierstrass};
use crate::arith::primes::prime_factors;
use crate::arith::{Fp2, Ring};
use crate::error::{Error, Result};
use rand::Rng;

const MAX_TRIES: usize = 200;

/// A uniformly-ish random affine point of `E(F_{p²})`.
pub fn random_point<R: Rng + ?Sized>(e: &Weierstrass<Fp2>, p: u64, rng: &mut R) -> Result<Point<Fp2>> {
    let two = Fp2::from_i64(2, p);
    let four = Fp2::from_i64(4, p);
    for _ in 0..4 * MAX_TRIES {
        let x = Fp2::random(p, rng);
        let b = e.a1 * x + e.a3;
        let f = x * x * x + e.a2 * x * x + e.a4 * x + e.a6;
        let disc = b * b + four * f;
        let Ok(s) = disc.sqrt() else { continue };
        let s = if rng.gen::<bool>() { s } else { -s };
        let y = (s - b) * two.inverse().expect("p odd");
        return Ok(Point::Affine(x, y));
    }
    Err(Error::TorsionSamplingFailed)
}

/// Whether `P` has exact order `n`.
pub fn has_exact_order<T: Ring>(e: &Weierstrass<T>, p: &Point<T>, n: u64) -> Result<bool> {
    if !e.mul_u128(n as u128, p)?.is_infinity() {
        return Ok(false);
    }
    for q in prime_factors(n) {
        if e.mul_u128((n / q) as u128, p)?.is_infinity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `w` is a root of unity of exact order `n`.
pub fn has_exact_root_order(w: Fp2, n: u64) -> bool {
    let one = w.one_like();
    if w.powu(n) != one {
        return false;
    }
    prime_factors(n).into_iter().all(|q| w.powu(n / q) != one)
}

/// A point of exact order `n` on a curve with `E(F_{p²}) ≅ (Z/(p+1))²`.
pub fn random_point_of_order<R: Rng + ?Sized>(e: &Weierstrass<Fp2>, n: u64, rng: &mut R) -> Result<Point<Fp2>> {
    let p = e.one().modulus();
    let exponent = p as u128 + 1;
    if n == 0 || exponent % n as u128 != 0 {
        return Err(Error::BadOrder(n));
    }
    let cofactor = exponent / n as u128;
    for _ in 0..MAX_TRIES {
        let r = random_point(e, p, rng)?;
        let t = e.mul_u128(cofactor, &r)?;
        if has_exact_order(e, &t, n)? {
            return Ok(t);
        }
    }
    Err(Error::TorsionSamplingFailed)
}

/// A basis `(T₁, T₂)` of `E[n]` for a supersingular curve with `E(F_{p²}) ≅ (Z/(p+1))²`.
pub fn torsion_basis<R: Rng + ?Sized>(e: &Weierstrass<Fp2>, n: u64, rng: &mut R) -> Result<(Point<Fp2>, Point<Fp2>)> {
    if n == 1 {
        return Ok((Point::Infinity, Point::Infinity));
    }
    let t1 = random_point_of_order(e, n, rng)?;
    for _ in 0..MAX_TRIES {
        let t2 = random_point_of_order(e, n, rng)?;
        if has_exact_root_order(weil_pairing(e, &t1, &t2, n, rng)?, n) {
            return Ok((t1, t2));
        }
    }
    Err(Error::TorsionSamplingFailed)
}
