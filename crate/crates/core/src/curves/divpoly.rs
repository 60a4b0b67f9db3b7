//! Division polynomials in `x` alone.
//!
//! `g_n = ψ_n` for odd `n` and `g_n = ψ_n / ψ_2` for even `n`, where
//! `ψ_2² = 4x³ + b2x² + 2b4x + b6`.

use super::weierstrass::Weierstrass;
use crate::arith::{Poly, Ring};
use std::collections::HashMap;

struct Table<T: Ring> {
    /// `(ψ_2²)²`
    f4: Poly<T>,
    memo: HashMap<usize, Poly<T>>,
}

impl<T: Ring> Table<T> {
    fn get(&mut self, n: usize) -> Poly<T> {
        if let Some(v) = self.memo.get(&n) {
            return v.clone();
        }
        let m = n / 2;
        let v = if n % 2 == 1 {
            let a = &self.get(m + 2) * &self.get(m).pow(3, &self.one());
            let b = &self.get(m - 1) * &self.get(m + 1).pow(3, &self.one());
            if m % 2 == 0 {
                &(&self.f4 * &a) - &b
            } else {
                &a - &(&self.f4 * &b)
            }
        } else {
            let gm = self.get(m);
            let a = &self.get(m + 2) * &self.get(m - 1).square();
            let b = &self.get(m - 2) * &self.get(m + 1).square();
            &gm * &(&a - &b)
        };
        self.memo.insert(n, v.clone());
        v
    }

    fn one(&self) -> T {
        self.f4.lc().expect("nonzero").one_like()
    }
}

/// `ψ_2²  = 4x³ + b2x² + 2b4x + b6`.
pub fn two_torsion_poly<T: Ring>(e: &Weierstrass<T>) -> Poly<T> {
    let k = |n: i64| e.one().from_i64_like(n);
    Poly::new(vec![e.b6(), k(2) * e.b4(), e.b2(), k(4)])
}

/// The `x`-only division polynomial `g_n` (see module docs).
pub fn division_polynomial<T: Ring>(e: &Weierstrass<T>, n: usize) -> Poly<T> {
    let one = e.one();
    let k = |v: i64| one.from_i64_like(v);
    let (b2, b4, b6, b8) = (e.b2(), e.b4(), e.b6(), e.b8());
    let mut memo = HashMap::new();
    memo.insert(0, Poly::zero());
    memo.insert(1, Poly::constant(one.clone()));
    memo.insert(2, Poly::constant(one.clone()));
    memo.insert(
        3,
        Poly::new(vec![b8.clone(), k(3) * b6.clone(), k(3) * b4.clone(), b2.clone(), k(3)]),
    );
    memo.insert(
        4,
        Poly::new(vec![
            b4.clone() * b8.clone() - b6.square(),
            b2.clone() * b8.clone() - b4.clone() * b6.clone(),
            k(10) * b8,
            k(10) * b6,
            k(5) * b4,
            b2,
            k(2),
        ]),
    );
    let mut t = Table { f4: two_torsion_poly(e).square(), memo };
    t.get(n)
}
