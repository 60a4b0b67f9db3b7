use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::fp::Fp;
use super::primes::{addmod, invmod, mulmod, reduce_i64, submod, MAX_MODULUS};
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// An element `re + im·i` of F_{p²} = F_p[i]/(i² + 1), for p ≡ 3 (mod 4).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fp2 {
    re: u64,
    im: u64,
    p: u64,
}

impl Fp2 {
    pub fn new(re: u64, im: u64, p: u64) -> Self {
        debug_assert!(p % 4 == 3 && p < MAX_MODULUS);
        Fp2 { re: re % p, im: im % p, p }
    }

    pub fn from_i64(n: i64, p: u64) -> Self {
        Fp2 { re: reduce_i64(n, p), im: 0, p }
    }

    pub fn from_fp(x: Fp) -> Self {
        Fp2 { re: x.value(), im: 0, p: x.modulus() }
    }

    pub fn from_bigint(n: &BigInt, p: u64) -> Self {
        Fp2::from_fp(Fp::from_bigint(n, p))
    }

    pub fn zero(p: u64) -> Self {
        Fp2 { re: 0, im: 0, p }
    }

    pub fn one(p: u64) -> Self {
        Fp2 { re: 1, im: 0, p }
    }

    /// The square root of −1 used to build the field.
    pub fn i(p: u64) -> Self {
        Fp2 { re: 0, im: 1, p }
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.eq_zero()
    }

    #[inline]
    pub fn re(self) -> Fp {
        Fp::new(self.re, self.p)
    }

    #[inline]
    pub fn im(self) -> Fp {
        Fp::new(self.im, self.p)
    }

    #[inline]
    pub fn parts(self) -> (u64, u64) {
        (self.re, self.im)
    }

    #[inline]
    pub fn modulus(self) -> u64 {
        self.p
    }

    /// Whether the element lies in the prime subfield.
    pub fn in_base_field(self) -> bool {
        self.im == 0
    }

    /// Frobenius `x ↦ x^p`, i.e. complex conjugation `re − im·i`.
    pub fn conjugate(self) -> Self {
        Fp2 { re: self.re, im: submod(0, self.im, self.p), p: self.p }
    }

    pub fn norm(self) -> Fp {
        let p = self.p;
        Fp::new(addmod(mulmod(self.re, self.re, p), mulmod(self.im, self.im, p), p), p)
    }

    pub fn inverse(self) -> Option<Self> {
        let n = self.norm();
        let ni = invmod(n.value(), self.p)?;
        let c = self.conjugate();
        Some(Fp2 {
            re: mulmod(c.re, ni, self.p),
            im: mulmod(c.im, ni, self.p),
            p: self.p,
        })
    }

    pub fn pow_big(self, e: &BigInt) -> Self {
        let mut acc = self.one_like();
        for bit in (0..e.bits()).rev() {
            acc = acc * acc;
            if e.bit(bit) {
                acc = acc * self;
            }
        }
        acc
    }

    pub fn is_square(self) -> bool {
        self.norm().legendre() >= 0
    }

    /// Square root with the deterministic choice of the lexicographically
    /// smaller `(re, im)` pair among `±r`.
    pub fn sqrt(self) -> Result<Self> {
        let p = self.p;
        if self.re == 0 && self.im == 0 {
            return Ok(self);
        }
        let r = if self.im == 0 {
            let a = self.re();
            match a.sqrt() {
                Some(s) => Fp2::from_fp(s),
                None => {
                    let s = (-a).sqrt().ok_or(Error::NoSquareRoot)?;
                    Fp2 { re: 0, im: s.value(), p }
                }
            }
        } else {
            // (u + v i)² = re + im i with u² − v² = re and u² + v² = n
            let n = self.norm().sqrt().ok_or(Error::NoSquareRoot)?;
            let half = Fp::new((p + 1) / 2, p);
            let a = self.re();
            let mut c = (a + n) * half;
            if c.legendre() < 0 {
                c = (a - n) * half;
            }
            let u = c.sqrt().ok_or(Error::NoSquareRoot)?;
            let v = self.im() * (u + u).inverse().ok_or(Error::NoSquareRoot)?;
            Fp2 { re: u.value(), im: v.value(), p }
        };
        if r * r != self {
            return Err(Error::NoSquareRoot);
        }
        let neg = -r;
        Ok(if neg.key() < r.key() { neg } else { r })
    }

    /// Lexicographic sort key `(re, im)`.
    #[inline]
    pub fn key(self) -> (u64, u64) {
        (self.re, self.im)
    }

    /// The primitive cube root of unity with the lexicographically smaller key.
    pub fn omega(p: u64) -> Self {
        // roots of X² + X + 1 are (−1 ± √−3)/2
        let s = Fp2::from_i64(-3, p).sqrt().expect("-3 is a square in F_{p^2}");
        let half = Fp2::from_i64(2, p).inverse().expect("p odd");
        let w1 = (Fp2::from_i64(-1, p) + s) * half;
        let w2 = (Fp2::from_i64(-1, p) - s) * half;
        if w1.key() <= w2.key() {
            w1
        } else {
            w2
        }
    }

    pub fn random<R: Rng + ?Sized>(p: u64, rng: &mut R) -> Self {
        Fp2 { re: rng.gen_range(0..p), im: rng.gen_range(0..p), p }
    }
}

impl PartialOrd for Fp2 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fp2 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Debug for Fp2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Fp2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0 {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl Add for Fp2 {
    type Output = Fp2;
    #[inline]
    fn add(self, o: Fp2) -> Fp2 {
        debug_assert_eq!(self.p, o.p);
        Fp2 { re: addmod(self.re, o.re, self.p), im: addmod(self.im, o.im, self.p), p: self.p }
    }
}

impl Sub for Fp2 {
    type Output = Fp2;
    #[inline]
    fn sub(self, o: Fp2) -> Fp2 {
        debug_assert_eq!(self.p, o.p);
        Fp2 { re: submod(self.re, o.re, self.p), im: submod(self.im, o.im, self.p), p: self.p }
    }
}

impl Mul for Fp2 {
    type Output = Fp2;
    #[inline]
    fn mul(self, o: Fp2) -> Fp2 {
        debug_assert_eq!(self.p, o.p);
        let p = self.p as u128;
        let (a, b, c, d) = (self.re as u128, self.im as u128, o.re as u128, o.im as u128);
        let re = (a * c + p * p - b * d) % p;
        let im = (a * d + b * c) % p;
        Fp2 { re: re as u64, im: im as u64, p: self.p }
    }
}

impl Neg for Fp2 {
    type Output = Fp2;
    #[inline]
    fn neg(self) -> Fp2 {
        Fp2 { re: submod(0, self.re, self.p), im: submod(0, self.im, self.p), p: self.p }
    }
}

impl Ring for Fp2 {
    fn zero_like(&self) -> Self {
        Fp2::zero(self.p)
    }
    fn one_like(&self) -> Self {
        Fp2::one(self.p)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Fp2::from_i64(n, self.p)
    }
    #[inline]
    fn eq_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }
    fn is_unit(&self) -> bool {
        !self.eq_zero()
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|i| *self * i)
    }
}

impl Field for Fp2 {}
