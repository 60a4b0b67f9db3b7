//! Factoring helpers over finite fields: squarefree decomposition,
//! distinct-degree factorization and root finding (Cantor–Zassenhaus).

use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;

use super::fp::Fp;
use super::fp2::Fp2;
use super::poly::Poly;
use super::ring::Field;

pub trait FiniteField: Field + Copy {
    fn order(&self) -> BigInt;
    fn characteristic(&self) -> u64;
    fn random_like<R: Rng + ?Sized>(&self, rng: &mut R) -> Self;
}

impl FiniteField for Fp {
    fn order(&self) -> BigInt {
        BigInt::from(self.modulus())
    }
    fn characteristic(&self) -> u64 {
        self.modulus()
    }
    fn random_like<R: Rng + ?Sized>(&self, rng: &mut R) -> Self {
        Fp::new(rng.gen_range(0..self.modulus()), self.modulus())
    }
}

impl FiniteField for Fp2 {
    fn order(&self) -> BigInt {
        BigInt::from(self.modulus()).pow(2)
    }
    fn characteristic(&self) -> u64 {
        self.modulus()
    }
    fn random_like<R: Rng + ?Sized>(&self, rng: &mut R) -> Self {
        Fp2::random(self.modulus(), rng)
    }
}

fn x_poly<T: FiniteField>(one: T) -> Poly<T> {
    Poly::monomial(one, 1)
}

/// Squarefree decomposition `f = c·∏ gᵢ^i` (Yun); requires `deg f < char`.
pub fn squarefree_decomposition<T: FiniteField>(f: &Poly<T>) -> Vec<(Poly<T>, usize)> {
    let deg = f.degree().expect("nonzero");
    assert!((deg as u64) < f.coeffs()[0].characteristic(), "degree must be below the characteristic");
    let mut out = Vec::new();
    let f = f.monic();
    let df = f.derivative();
    let mut a = f.gcd(&df);
    let mut b = f.div_exact(&a).expect("gcd divides");
    let mut c = df.div_exact(&a).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        a = b.gcd(&d);
        b = b.div_exact(&a).expect("gcd divides");
        c = d.div_exact(&a).expect("gcd divides");
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs `(d, product of all irreducible factors of degree d)`.
pub fn distinct_degree<T: FiniteField>(f: &Poly<T>) -> Vec<(usize, Poly<T>)> {
    let one = f.coeffs()[0].one_like();
    let q = one.order();
    let x = x_poly(one);
    let mut out = Vec::new();
    let mut rest = f.monic();
    let mut h = x.clone();
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.powmod(&q, &rest);
        let g = rest.gcd(&(&h - &x));
        if g.degree().unwrap_or(0) > 0 {
            rest = rest.div_exact(&g).expect("gcd divides");
            h = h.rem(&rest).expect("nonzero");
            out.push((d, g));
        }
    }
    if let Some(r) = rest.degree() {
        if r > 0 {
            out.push((r, rest));
        }
    }
    out
}

/// Degrees of the irreducible factors of `f`, with multiplicity, sorted.
pub fn factor_degrees<T: FiniteField>(f: &Poly<T>) -> Vec<usize> {
    let mut degs = Vec::new();
    for (g, mult) in squarefree_decomposition(f) {
        for (d, prod) in distinct_degree(&g) {
            let count = prod.degree().unwrap() / d;
            for _ in 0..count * mult {
                degs.push(d);
            }
        }
    }
    degs.sort_unstable();
    degs
}

/// Distinct roots of `f` in the field, sorted by value.
pub fn roots<T: FiniteField + Ord, R: Rng + ?Sized>(f: &Poly<T>, rng: &mut R) -> Vec<T> {
    let one = f.coeffs()[0].one_like();
    let q = one.order();
    let x = x_poly(one);
    let g = f.monic().gcd(&(&x.powmod(&q, f) - &x));
    let mut out = Vec::new();
    split_linear(&g, &q, rng, &mut out);
    out.sort();
    out
}

fn split_linear<T: FiniteField, R: Rng + ?Sized>(g: &Poly<T>, q: &BigInt, rng: &mut R, out: &mut Vec<T>) {
    match g.degree() {
        None | Some(0) => return,
        Some(1) => {
            let c = g.coeffs();
            out.push(-(c[0].try_div(&c[1]).expect("nonzero")));
            return;
        }
        _ => {}
    }
    let one = g.coeffs()[0].one_like();
    let e: BigInt = (q - BigInt::one()) / 2;
    loop {
        let delta = one.random_like(rng);
        let probe = Poly::new(vec![delta, one]);
        let h = &probe.powmod(&e, g) - &Poly::constant(one);
        let d = g.gcd(&h);
        let dd = d.degree().unwrap_or(0);
        if dd > 0 && dd < g.degree().unwrap() {
            let rest = g.div_exact(&d).expect("gcd divides");
            split_linear(&d, q, rng, out);
            split_linear(&rest, q, rng, out);
            return;
        }
    }
}
