//! Dense univariate polynomials over any [`Ring`], lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::fp2::Fp2;
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    c: Vec<T>,
}

impl<T: Ring> Poly<T> {
    /// Build from coefficients (lowest degree first), dropping trailing zeros.
    pub fn new(mut c: Vec<T>) -> Self {
        while c.last().is_some_and(|x| x.eq_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn constant(a: T) -> Self {
        Poly::new(vec![a])
    }

    /// The monomial `a·X^n`.
    pub fn monomial(a: T, n: usize) -> Self {
        let mut c = vec![a.zero_like(); n + 1];
        c[n] = a;
        Poly::new(c)
    }

    /// `X − a`.
    pub fn linear_root(a: &T) -> Self {
        Poly::new(vec![-a.clone(), a.one_like()])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.c
    }

    pub fn coeff(&self, i: usize) -> Option<&T> {
        self.c.get(i)
    }

    pub fn lc(&self) -> Option<&T> {
        self.c.last()
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = x.zero_like();
        for a in self.c.iter().rev() {
            acc = acc * x.clone() + a.clone();
        }
        acc
    }

    pub fn scale(&self, a: &T) -> Self {
        Poly::new(self.c.iter().map(|x| x.clone() * a.clone()).collect())
    }

    /// Multiply by `X^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let z = self.c[0].zero_like();
        let mut c = vec![z; n];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.clone() * a.from_i64_like(i as i64))
                .collect(),
        )
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.c.iter().map(f).collect())
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn pow(&self, e: u32, one: &T) -> Self {
        let mut acc = Poly::constant(one.clone());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Division with remainder by a divisor whose leading coefficient divides
    /// every leading term met along the way (always true for unit leading
    /// coefficients); otherwise `NonExactDivision`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = d.c[dd].clone();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let z = lc.zero_like();
        let mut q = vec![z; r.len() - dd];
        for k in (0..q.len()).rev() {
            let top = r[k + dd].clone();
            if top.eq_zero() {
                continue;
            }
            let f = top.try_div(&lc).ok_or(Error::NonExactDivision)?;
            for (i, di) in d.c.iter().enumerate() {
                r[k + i] = r[k + i].clone() - f.clone() * di.clone();
            }
            q[k] = f;
        }
        r.truncate(dd);
        Ok((Poly::new(q), Poly::new(r)))
    }

    /// Exact division; `NonExactDivision` when the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::NonExactDivision);
        }
        Ok(q)
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    /// Composition `self(g)`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Poly::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * g) + &Poly::constant(a.clone());
        }
        acc
    }

    /// Taylor shift: returns `self(X + a)`.
    pub fn taylor_shift(&self, a: &T) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.c.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = c[j + 1].clone() * a.clone();
                c[j] = c[j].clone() + t;
            }
        }
        Poly::new(c)
    }

    /// Product of `X − r` over the given roots.
    pub fn from_roots(roots: &[T], one: &T) -> Self {
        let mut acc = Poly::constant(one.clone());
        for r in roots {
            acc = &acc * &Poly::linear_root(r);
        }
        acc
    }
}

impl<T: Field> Poly<T> {
    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero in a field");
                self.scale(&inv)
            }
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m` by square and multiply.
    pub fn powmod(&self, e: &BigInt, m: &Self) -> Self {
        let one = m.c[0].one_like();
        let mut acc = Poly::constant(one);
        let base = self.rem(m).expect("nonzero modulus");
        for bit in (0..e.bits()).rev() {
            acc = (&acc * &acc).rem(m).expect("nonzero modulus");
            if e.bit(bit) {
                acc = (&acc * &base).rem(m).expect("nonzero modulus");
            }
        }
        acc
    }
}

impl<'a, T: Ring> Add for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, o: &Poly<T>) -> Poly<T> {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a.clone() + b.clone(),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(c)
    }
}

impl<'a, T: Ring> Sub for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, o: &Poly<T>) -> Poly<T> {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a.clone() - b.clone(),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(c)
    }
}

impl<'a, T: Ring> Mul for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, o: &Poly<T>) -> Poly<T> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let z = self.c[0].zero_like();
        let mut c = vec![z; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.eq_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(c)
    }
}

impl<'a, T: Ring> Neg for &'a Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly { c: self.c.iter().map(|a| -a.clone()).collect() }
    }
}

macro_rules! owned_poly_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Ring> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, o: Poly<T>) -> Poly<T> {
                (&self).$m(&o)
            }
        }
    )*};
}
owned_poly_ops!(Add add, Sub sub, Mul mul);

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.eq_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})*X")?,
                _ => write!(f, "({a})*X^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: Ring> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.c.iter()).finish()
    }
}

/// Integer polynomials form a ring (used for Z[d]); exact division is over Z.
impl Ring for Poly<BigInt> {
    fn zero_like(&self) -> Self {
        Poly::zero()
    }
    fn one_like(&self) -> Self {
        Poly::constant(BigInt::from(1))
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Poly::new(vec![BigInt::from(n)])
    }
    fn eq_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn is_unit(&self) -> bool {
        self.c.len() == 1 && Ring::is_unit(&self.c[0])
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        self.div_exact(rhs).ok()
    }
}

/// Integer polynomial from small coefficients, lowest degree first.
pub fn int_poly(c: &[i64]) -> Poly<BigInt> {
    Poly::new(c.iter().map(|&x| BigInt::from(x)).collect())
}

impl Poly<BigInt> {
    pub fn reduce_mod(&self, p: u64) -> Poly<Fp2> {
        self.map(|a| Fp2::from_bigint(a, p))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// Evaluate at an element of another ring by mapping coefficients with `embed`.
    pub fn eval_in<T: Ring>(&self, x: &T, embed: impl Fn(&BigInt) -> T) -> T {
        let mut acc = x.zero_like();
        for a in self.c.iter().rev() {
            acc = acc * x.clone() + embed(a);
        }
        acc
    }
}

/// Lagrange interpolation over a field: the unique polynomial of degree
/// `< points.len()` through all points.
pub fn interpolate<T: Field>(points: &[(T, T)]) -> Result<Poly<T>> {
    if points.is_empty() {
        return Ok(Poly::zero());
    }
    let one = points[0].0.one_like();
    for i in 0..points.len() {
        for j in 0..i {
            if points[i].0 == points[j].0 {
                return Err(Error::DuplicateNode);
            }
        }
    }
    let xs: Vec<T> = points.iter().map(|(x, _)| x.clone()).collect();
    let master = Poly::from_roots(&xs, &one);
    let dmaster = master.derivative();
    let mut acc = Poly::zero();
    for (x, y) in points {
        if y.eq_zero() {
            continue;
        }
        let basis = master.div_exact(&Poly::linear_root(x))?;
        let w = y.try_div(&dmaster.eval(x)).ok_or(Error::DuplicateNode)?;
        acc = &acc + &basis.scale(&w);
    }
    Ok(acc)
}
