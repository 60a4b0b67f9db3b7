#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

use modpoly_core::arith::BivarIntPoly;
use num_bigint::BigInt;

/// The published classical Φ₃ as `(i, j, c)` with `i ≥ j`, meaning `c·(XⁱYʲ + XʲYⁱ)`.
const PHI3: [(u32, u32, &str); 10] = [
    (4, 0, "1"),
    (3, 3, "-1"),
    (3, 2, "2232"),
    (3, 1, "-1069956"),
    (3, 0, "36864000"),
    (2, 2, "2587918086"),
    (2, 1, "8900222976000"),
    (2, 0, "452984832000000"),
    (1, 1, "-770845966336000000"),
    (1, 0, "1855425871872000000000"),
];

pub fn classical_phi3() -> BivarIntPoly {
    let mut f = BivarIntPoly::new();
    for (i, j, c) in PHI3 {
        let c: BigInt = c.parse().unwrap();
        f.set(i, j, c.clone());
        f.set(j, i, c);
    }
    f
}

/// Runs the `modpoly` binary with its cache in `dir`.
pub fn modpoly(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modpoly"))
        .args(args)
        .current_dir(dir)
        .env_clear()
        .env("MODPOLY_CACHE_DIR", dir.join("cache"))
        .output()
        .expect("modpoly runs")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}
