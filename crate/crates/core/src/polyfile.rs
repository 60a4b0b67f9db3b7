//! The canonical JSON file format for computed modular polynomials.

use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::BivarIntPoly;
use crate::error::{Error, Result};
use crate::invariants::{GroupType, InvariantKind};
use crate::modpoly::{Assembly, Backend, StopReason};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Coeff {
    pub i: u32,
    pub j: u32,
    /// Decimal, with an optional leading `-`.
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    pub primes: Vec<u64>,
    pub backends: Vec<Backend>,
    pub seed: u64,
    pub stop: StopReason,
    pub tool_version: String,
}

/// Φ together with its provenance; serialisation is canonical (sorted terms, fixed field order).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialFile {
    pub invariant: InvariantKind,
    pub level: u64,
    pub group: GroupType,
    pub order: u64,
    pub coeffs: Vec<Coeff>,
    pub meta: Meta,
}

impl PolynomialFile {
    pub fn from_assembly(inv: InvariantKind, ell: u64, a: &Assembly, seed: u64) -> Self {
        PolynomialFile {
            invariant: inv,
            level: inv.level(),
            group: inv.get().group_type(),
            order: ell,
            coeffs: coeffs_of(&a.poly),
            meta: Meta {
                primes: a.primes.clone(),
                backends: a.backends.clone(),
                seed,
                stop: a.stop,
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
            },
        }
    }

    pub fn poly(&self) -> Result<BivarIntPoly> {
        let mut out = BivarIntPoly::new();
        for t in &self.coeffs {
            out.set(t.i, t.j, parse_decimal(&t.c)?);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serialisable");
        s.push('\n');
        s
    }

    /// Parse and check the canonical-form invariants.
    pub fn from_json(text: &str) -> Result<Self> {
        let f: PolynomialFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if f.level != f.invariant.level() || f.group != f.invariant.get().group_type() {
            return Err(Error::Parse("level or group does not match the invariant".into()));
        }
        for w in f.coeffs.windows(2) {
            if (w[0].i, w[0].j) >= (w[1].i, w[1].j) {
                return Err(Error::Parse(format!("coefficients not sorted at ({}, {})", w[1].i, w[1].j)));
            }
        }
        for t in &f.coeffs {
            if parse_decimal(&t.c)? == BigInt::from(0) {
                return Err(Error::Parse(format!("zero coefficient at ({}, {})", t.i, t.j)));
            }
        }
        Ok(f)
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        crate::modpoly::write_atomic(path, self.to_json().as_bytes())
    }
}

pub fn coeffs_of(f: &BivarIntPoly) -> Vec<Coeff> {
    f.terms().map(|(&(i, j), c)| Coeff { i, j, c: c.to_string() }).collect()
}

fn parse_decimal(s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || (digits.len() > 1 && digits.starts_with('0')) {
        return Err(Error::Parse(format!("bad decimal {s:?}")));
    }
    s.parse().map_err(|_| Error::Parse(format!("bad decimal {s:?}")))
}
