use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::fp2::Fp2;
use super::poly::Poly;
use super::ring::Ring;

/// Sparse bivariate integer polynomial `Σ c_{ij} X^i Y^j`, iterated in `(i, j)` order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarIntPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarIntPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), BigInt)>>(it: I) -> Self {
        let mut p = Self::new();
        for (k, c) in it {
            p.add_term(k.0, k.1, c);
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        let e = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn set(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            self.terms.remove(&(i, j));
        } else {
            self.terms.insert((i, j), c);
        }
    }

    pub fn get(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::new();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &o.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::from_terms([((0, 0), BigInt::from(1))]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `Φ(Y, X)`.
    pub fn transpose(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }

    pub fn max_abs(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.specialize_x(x).eval_int(y)
    }

    /// `Φ(x, Y)` as an integer polynomial in Y.
    pub fn specialize_x(&self, x: &BigInt) -> Poly<BigInt> {
        self.specialize_x_in(x, |c| c.clone())
    }

    /// `Φ(x, Y)` for `x` in any ring, with `embed` mapping integers into it.
    pub fn specialize_x_in<T: Ring>(&self, x: &T, embed: impl Fn(&BigInt) -> T) -> Poly<T> {
        let dy = match self.deg_y() {
            None => return Poly::zero(),
            Some(d) => d as usize,
        };
        let dx = self.deg_x().unwrap_or(0) as usize;
        let mut pows = vec![x.one_like()];
        for i in 1..=dx {
            let prev = pows[i - 1].clone();
            pows.push(prev * x.clone());
        }
        let mut c = vec![x.zero_like(); dy + 1];
        for (&(i, j), a) in &self.terms {
            c[j as usize] = c[j as usize].clone() + embed(a) * pows[i as usize].clone();
        }
        Poly::new(c)
    }

    /// `Φ(X, y)` as an integer polynomial in X.
    pub fn specialize_y(&self, y: &BigInt) -> Poly<BigInt> {
        self.transpose().specialize_x(y)
    }

    /// Reduction modulo `p` as a dense grid `g[i][j]` of residues.
    pub fn reduce_grid(&self, p: u64) -> Vec<Vec<u64>> {
        let dx = self.deg_x().unwrap_or(0) as usize;
        let dy = self.deg_y().unwrap_or(0) as usize;
        let mut g = vec![vec![0u64; dy + 1]; dx + 1];
        for (&(i, j), c) in &self.terms {
            g[i as usize][j as usize] = Fp2::from_bigint(c, p).parts().0;
        }
        g
    }

    /// Coefficients of `Y^j` as polynomials in X.
    pub fn y_coefficients(&self) -> Vec<Poly<BigInt>> {
        let dy = self.deg_y().map(|d| d as usize + 1).unwrap_or(0);
        let dx = self.deg_x().unwrap_or(0) as usize;
        let mut cols = vec![vec![BigInt::zero(); dx + 1]; dy];
        for (&(i, j), c) in &self.terms {
            cols[j as usize][i as usize] = c.clone();
        }
        cols.into_iter().map(Poly::new).collect()
    }
}
