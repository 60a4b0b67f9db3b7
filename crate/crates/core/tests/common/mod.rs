#![allow(dead_code)]

use modpoly_core::arith::{BivarIntPoly, Fp2};
use modpoly_core::curves::Weierstrass;
use num_bigint::BigInt;

/// Published classical modular polynomial data: `(i, j, c)` with `i ≥ j`,
/// meaning `c·(XⁱYʲ + XʲYⁱ)` (counted once on the diagonal).
fn symmetric(terms: &[(u32, u32, &str)]) -> BivarIntPoly {
    let mut f = BivarIntPoly::new();
    for &(i, j, c) in terms {
        let c: BigInt = c.parse().unwrap();
        f.set(i, j, c.clone());
        f.set(j, i, c);
    }
    f
}

pub fn classical_phi2() -> BivarIntPoly {
    symmetric(&[
        (3, 0, "1"),
        (2, 2, "-1"),
        (2, 1, "1488"),
        (2, 0, "-162000"),
        (1, 1, "40773375"),
        (1, 0, "8748000000"),
        (0, 0, "-157464000000000"),
    ])
}

pub fn classical_phi3() -> BivarIntPoly {
    symmetric(&[
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
    ])
}

pub fn fp2(n: i64, p: u64) -> Fp2 {
    Fp2::from_i64(n, p)
}

/// `y² = x³ + 6x² + x`, supersingular for `p ≡ 3 (mod 4)`.
pub fn base_curve(p: u64) -> Weierstrass<Fp2> {
    Weierstrass::new(fp2(0, p), fp2(6, p), fp2(0, p), fp2(1, p), fp2(0, p))
}

/// A random curve in the supersingular class of the base curve, reached by a walk of 2-isogenies.
pub fn supersingular_curve<R: rand::Rng>(p: u64, steps: usize, rng: &mut R) -> Weierstrass<Fp2> {
    let mut e = base_curve(p);
    for _ in 0..steps {
        let k = modpoly_core::curves::torsion::random_point_of_order(&e, 2, rng).unwrap();
        e = modpoly_core::isogeny::velu(&e, &k, 2).unwrap().codomain;
    }
    e
}
