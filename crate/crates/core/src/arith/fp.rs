use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::primes::{addmod, invmod, mulmod, powmod, reduce_i64, submod, MAX_MODULUS};
use super::ring::{Field, Ring};

/// An element of the prime field F_p; the modulus travels with the value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn new(v: u64, p: u64) -> Self {
        debug_assert!(p > 2 && p < MAX_MODULUS);
        Fp { v: v % p, p }
    }

    pub fn from_i64(n: i64, p: u64) -> Self {
        Fp { v: reduce_i64(n, p), p }
    }

    pub fn from_bigint(n: &BigInt, p: u64) -> Self {
        let r = n % BigInt::from(p);
        let r = if r.sign() == num_bigint::Sign::Minus { r + p } else { r };
        Fp { v: r.to_u64().expect("reduced residue fits"), p }
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.eq_zero()
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.v
    }

    #[inline]
    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn pow_u64(self, e: u64) -> Self {
        Fp { v: powmod(self.v, e, self.p), p: self.p }
    }

    pub fn inverse(self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        invmod(self.v, self.p).map(|v| Fp { v, p: self.p })
    }

    /// Legendre symbol as 1, -1 or 0.
    pub fn legendre(self) -> i32 {
        if self.v == 0 {
            return 0;
        }
        if powmod(self.v, (self.p - 1) / 2, self.p) == 1 {
            1
        } else {
            -1
        }
    }

    /// Square root for p ≡ 3 (mod 4); `None` for non-residues.
    pub fn sqrt(self) -> Option<Self> {
        debug_assert_eq!(self.p % 4, 3);
        let r = self.pow_u64((self.p + 1) / 4);
        (r * r == self).then_some(r)
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn symmetric(self) -> i64 {
        if self.v > self.p / 2 {
            -((self.p - self.v) as i64)
        } else {
            self.v as i64
        }
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Fp {
    type Output = Fp;
    #[inline]
    fn add(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { v: addmod(self.v, o.v, self.p), p: self.p }
    }
}

impl Sub for Fp {
    type Output = Fp;
    #[inline]
    fn sub(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { v: submod(self.v, o.v, self.p), p: self.p }
    }
}

impl Mul for Fp {
    type Output = Fp;
    #[inline]
    fn mul(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { v: mulmod(self.v, o.v, self.p), p: self.p }
    }
}

impl Neg for Fp {
    type Output = Fp;
    #[inline]
    fn neg(self) -> Fp {
        Fp { v: submod(0, self.v, self.p), p: self.p }
    }
}

impl Ring for Fp {
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { v: 1, p: self.p }
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Fp::from_i64(n, self.p)
    }
    fn eq_zero(&self) -> bool {
        self.v == 0
    }
    fn is_unit(&self) -> bool {
        self.v != 0
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|i| *self * i)
    }
}

impl Field for Fp {}
