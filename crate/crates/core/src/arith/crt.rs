use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Symmetric CRT: the unique `x` with `|x| ≤ ∏pᵢ/2` and `x ≡ rᵢ (mod pᵢ)`.
pub fn crt_symmetric(residues: &[(BigInt, BigInt)]) -> Result<BigInt> {
    let mut acc = CrtValue::new();
    for (r, p) in residues {
        acc.push(r, p)?;
    }
    Ok(acc.symmetric())
}

/// Incremental CRT state for a single integer: `x mod M`.
#[derive(Clone, Debug)]
pub struct CrtValue {
    x: BigInt,
    m: BigInt,
    moduli: Vec<BigInt>,
}

impl Default for CrtValue {
    fn default() -> Self {
        Self::new()
    }
}

impl CrtValue {
    pub fn new() -> Self {
        CrtValue { x: BigInt::zero(), m: BigInt::one(), moduli: Vec::new() }
    }

    pub fn modulus(&self) -> &BigInt {
        &self.m
    }

    pub fn push(&mut self, r: &BigInt, p: &BigInt) -> Result<()> {
        if self.moduli.contains(p) {
            return Err(Error::DuplicateModulus(p.to_string()));
        }
        let g = self.m.extended_gcd(p);
        if !g.gcd.is_one() {
            return Err(Error::DuplicateModulus(p.to_string()));
        }
        // x' = x + M·((r − x)·M⁻¹ mod p)
        let minv = g.x.mod_floor(p);
        let t = ((r - &self.x) * minv).mod_floor(p);
        self.x += &self.m * t;
        self.m *= p;
        self.moduli.push(p.clone());
        Ok(())
    }

    pub fn symmetric(&self) -> BigInt {
        let half: BigInt = &self.m >> 1;
        if self.x > half {
            &self.x - &self.m
        } else {
            self.x.clone()
        }
    }
}

/// Symmetric representative of `x` modulo `m`.
pub fn symmetric_mod(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    if r > (m >> 1) {
        r - m
    } else if r.is_negative() {
        r + m
    } else {
        r
    }
}
