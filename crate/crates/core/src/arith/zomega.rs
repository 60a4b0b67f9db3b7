//! The Eisenstein integers Z[ω] = Z[w]/(w² + w + 1), printed as `a+b*w`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ring::Ring;
use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ZOmega {
    pub a: BigInt,
    pub b: BigInt,
}

impl ZOmega {
    pub fn new(a: BigInt, b: BigInt) -> Self {
        ZOmega { a, b }
    }

    pub fn from_int(n: BigInt) -> Self {
        ZOmega { a: n, b: BigInt::zero() }
    }

    pub fn omega() -> Self {
        ZOmega { a: BigInt::zero(), b: BigInt::one() }
    }

    /// `c·ω^i` for any integer exponent.
    pub fn scaled_omega_power(c: i64, i: i64) -> Self {
        let w = ZOmega::omega().powu(i.rem_euclid(3) as u64);
        ZOmega::from_int(BigInt::from(c)) * w
    }
}

impl Add for ZOmega {
    type Output = ZOmega;
    fn add(self, o: ZOmega) -> ZOmega {
        ZOmega { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for ZOmega {
    type Output = ZOmega;
    fn sub(self, o: ZOmega) -> ZOmega {
        ZOmega { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Mul for ZOmega {
    type Output = ZOmega;
    fn mul(self, o: ZOmega) -> ZOmega {
        // ω² = −1 − ω
        let bd = &self.b * &o.b;
        ZOmega { a: &self.a * &o.a - &bd, b: &self.a * &o.b + &self.b * &o.a - bd }
    }
}

impl Neg for ZOmega {
    type Output = ZOmega;
    fn neg(self) -> ZOmega {
        ZOmega { a: -self.a, b: -self.b }
    }
}

impl Ring for ZOmega {
    fn zero_like(&self) -> Self {
        ZOmega::default()
    }
    fn one_like(&self) -> Self {
        ZOmega::from_int(BigInt::one())
    }
    fn from_i64_like(&self, n: i64) -> Self {
        ZOmega::from_int(BigInt::from(n))
    }
    fn eq_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn is_unit(&self) -> bool {
        // units are ±1, ±ω, ±ω²; norm a² − ab + b² = 1
        (&self.a * &self.a - &self.a * &self.b + &self.b * &self.b)== BigInt::one()
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        // x / y = x·conj(y) / N(y), conj(a + bω) = (a − b) − bω
        let n = &rhs.a * &rhs.a - &rhs.a * &rhs.b + &rhs.b * &rhs.b;
        if Zero::is_zero(&n) {
            return None;
        }
        let conj = ZOmega { a: &rhs.a - &rhs.b, b: -rhs.b.clone() };
        let t = self.clone() * conj;
        let (qa, ra) = (&t.a / &n, &t.a % &n);
        let (qb, rb) = (&t.b / &n, &t.b % &n);
        (Zero::is_zero(&ra) && Zero::is_zero(&rb)).then_some(ZOmega { a: qa, b: qb })
    }
}

impl fmt::Display for ZOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.b) {
            write!(f, "{}", self.a)
        } else if self.b.is_negative() {
            write!(f, "{}-{}*w", self.a, -&self.b)
        } else {
            write!(f, "{}+{}*w", self.a, self.b)
        }
    }
}

impl FromStr for ZOmega {
    type Err = Error;

    /// Accepts `a+b*w`, `a-b*w`, a plain integer, or `c*w^i` / `cw^i`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("bad Z[w] value '{s}'"));
        if let Some(pos) = s.find("w^") {
            let coef = s[..pos].trim_end_matches('*');
            let c: i64 = match coef {
                "" | "+" => 1,
                "-" => -1,
                c => c.parse().map_err(|_| bad())?,
            };
            let i: i64 = s[pos + 2..].parse().map_err(|_| bad())?;
            return Ok(ZOmega::scaled_omega_power(c, i));
        }
        if let Some(body) = s.strip_suffix("*w").or_else(|| s.strip_suffix('w')) {
            // split at the last sign that is not leading
            let split = body.char_indices().skip(1).filter(|(_, c)| *c == '+' || *c == '-').map(|(i, _)| i).last();
            let (a, b) = match split {
                Some(i) => (&body[..i], &body[i..]),
                None => ("0", body),
            };
            let a: BigInt = a.parse().map_err(|_| bad())?;
            let b: BigInt = match b {
                "" | "+" => BigInt::one(),
                "-" => -BigInt::one(),
                b => b.trim_start_matches('+').parse().map_err(|_| bad())?,
            };
            return Ok(ZOmega { a, b });
        }
        Ok(ZOmega::from_int(s.parse().map_err(|_| bad())?))
    }
}
