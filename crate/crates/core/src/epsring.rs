//! The Artinian ring R = F_{p²}[ε]/(ε^k) and Newton/Hensel lifting over it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{Fp2, Poly, Ring};
use crate::error::{Error, Result};

/// A truncated power series `Σ_{n<k} c_n ε^n` over F_{p²}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EpsSeries {
    c: Vec<Fp2>,
}

impl EpsSeries {
    pub fn from_coeffs(c: Vec<Fp2>) -> Self {
        assert!(!c.is_empty(), "precision must be at least 1");
        EpsSeries { c }
    }

    pub fn constant(x: Fp2, k: usize) -> Self {
        let mut c = vec![Fp2::zero(x.modulus()); k];
        c[0] = x;
        EpsSeries::from_coeffs(c)
    }

    /// `a + ε` at precision `k`.
    pub fn plus_eps(a: Fp2, k: usize) -> Self {
        let mut s = EpsSeries::constant(a, k);
        if k > 1 {
            s.c[1] = Fp2::one(a.modulus());
        }
        s
    }

    pub fn precision(&self) -> usize {
        self.c.len()
    }

    pub fn modulus(&self) -> u64 {
        self.c[0].modulus()
    }

    pub fn coeffs(&self) -> &[Fp2] {
        &self.c
    }

    /// Reduction modulo ε.
    pub fn reduce(&self) -> Fp2 {
        self.c[0]
    }

    /// Explicit change of precision: truncate or zero-pad to `k`.
    pub fn with_precision(&self, k: usize) -> Self {
        let z = Fp2::zero(self.modulus());
        let mut c = self.c.clone();
        c.resize(k, z);
        EpsSeries::from_coeffs(c)
    }

    pub fn scale(&self, a: Fp2) -> Self {
        EpsSeries { c: self.c.iter().map(|&x| x * a).collect() }
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.c.len(), o.c.len(), "mixed precisions in R");
    }
}

impl fmt::Debug for EpsSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.c.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl Add for EpsSeries {
    type Output = EpsSeries;
    fn add(mut self, o: EpsSeries) -> EpsSeries {
        self.check(&o);
        for (a, b) in self.c.iter_mut().zip(o.c) {
            *a = *a + b;
        }
        self
    }
}

impl Sub for EpsSeries {
    type Output = EpsSeries;
    fn sub(mut self, o: EpsSeries) -> EpsSeries {
        self.check(&o);
        for (a, b) in self.c.iter_mut().zip(o.c) {
            *a = *a - b;
        }
        self
    }
}

impl Neg for EpsSeries {
    type Output = EpsSeries;
    fn neg(mut self) -> EpsSeries {
        for a in self.c.iter_mut() {
            *a = -*a;
        }
        self
    }
}

impl Mul for EpsSeries {
    type Output = EpsSeries;
    fn mul(self, o: EpsSeries) -> EpsSeries {
        &self * &o
    }
}

impl<'a> Mul for &'a EpsSeries {
    type Output = EpsSeries;
    fn mul(self, o: &EpsSeries) -> EpsSeries {
        self.check(o);
        let k = self.c.len();
        let p = self.modulus();
        let pw = p as u128;
        let a: Vec<(u128, u128)> = self.c.iter().map(|x| (x.parts().0 as u128, x.parts().1 as u128)).collect();
        let b: Vec<(u128, u128)> = o.c.iter().map(|x| (x.parts().0 as u128, x.parts().1 as u128)).collect();
        let first_a = a.iter().position(|x| *x != (0, 0)).unwrap_or(k);
        let first_b = b.iter().position(|x| *x != (0, 0)).unwrap_or(k);
        let mut out = Vec::with_capacity(k);
        for n in 0..k {
            // products are < 2^122, so up to 32 of them fit in a u128
            let (mut rr, mut ii, mut mix) = (0u128, 0u128, 0u128);
            let mut cnt = 0;
            if n >= first_a + first_b {
                for i in first_a..=n - first_b {
                    let (x, y) = (a[i], b[n - i]);
                    rr += x.0 * y.0;
                    ii += x.1 * y.1;
                    mix += x.0 * y.1;
                    mix += x.1 * y.0;
                    cnt += 1;
                    if cnt == 15 {
                        rr %= pw;
                        ii %= pw;
                        mix %= pw;
                        cnt = 0;
                    }
                }
            }
            let re = (rr % pw + pw - ii % pw) % pw;
            out.push(Fp2::new(re as u64, (mix % pw) as u64, p));
        }
        EpsSeries { c: out }
    }
}

impl Ring for EpsSeries {
    fn zero_like(&self) -> Self {
        EpsSeries { c: vec![Fp2::zero(self.modulus()); self.c.len()] }
    }
    fn one_like(&self) -> Self {
        EpsSeries::constant(Fp2::one(self.modulus()), self.c.len())
    }
    fn from_i64_like(&self, n: i64) -> Self {
        EpsSeries::constant(Fp2::from_i64(n, self.modulus()), self.c.len())
    }
    fn eq_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
    fn is_unit(&self) -> bool {
        !self.c[0].is_zero()
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        eps_invert(rhs).ok().map(|i| self * &i)
    }
    fn square(&self) -> Self {
        self * self
    }
}

/// Precisions visited by Newton doubling: 1, 2, 4, …, k.
fn doubling_schedule(k: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut n = 1;
    while n < k {
        n = (2 * n).min(k);
        out.push(n);
    }
    out
}

/// Inverse of a unit, by Newton iteration `y ← y(2 − xy)` with doubling precision.
pub fn eps_invert(x: &EpsSeries) -> Result<EpsSeries> {
    let k = x.precision();
    let y0 = x.c[0].inverse().ok_or(Error::NonUnit)?;
    let mut y = EpsSeries::constant(y0, 1);
    for n in doubling_schedule(k) {
        y = y.with_precision(n);
        let xn = x.with_precision(n);
        let two = y.from_i64_like(2);
        y = &y * &(two - &xn * &y);
    }
    Ok(y)
}

/// Square root `r` with `r² = x` and `r ≡ root0 (mod ε)`.
pub fn eps_sqrt(x: &EpsSeries, root0: Fp2) -> Result<EpsSeries> {
    if root0.is_zero() {
        return Err(Error::NonUnit);
    }
    if root0 * root0 != x.c[0] {
        return Err(Error::BadSeed);
    }
    let half = Fp2::from_i64(2, x.modulus()).inverse().expect("odd characteristic");
    let mut r = EpsSeries::constant(root0, 1);
    for n in doubling_schedule(x.precision()) {
        r = r.with_precision(n);
        let xn = x.with_precision(n);
        let q = &xn * &eps_invert(&r)?;
        r = (r + q).scale(half);
    }
    Ok(r)
}

/// Hensel lift of a simple root `a0` of `f mod ε` to a root of `f` in R.
pub fn newton_lift_root(f: &Poly<EpsSeries>, a0: Fp2) -> Result<EpsSeries> {
    let k = f.coeffs().first().map(|c| c.precision()).ok_or(Error::ZeroPolynomial)?;
    let df = f.derivative();
    let f0 = f.map(|c| c.with_precision(1));
    let df0 = df.map(|c| c.with_precision(1));
    let x0 = EpsSeries::constant(a0, 1);
    if !f0.eval(&x0).eq_zero() {
        return Err(Error::BadSeed);
    }
    if df0.eval(&x0).eq_zero() {
        return Err(Error::SingularRoot);
    }
    let mut x = x0;
    for n in doubling_schedule(k) {
        x = x.with_precision(n);
        let fn_ = f.map(|c| c.with_precision(n));
        let dfn = df.map(|c| c.with_precision(n));
        let step = &fn_.eval(&x) * &eps_invert(&dfn.eval(&x))?;
        x = x - step;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = 23;

    fn s(c: &[i64]) -> EpsSeries {
        EpsSeries::from_coeffs(c.iter().map(|&x| Fp2::from_i64(x, P)).collect())
    }

    #[test]
    fn geometric_series() {
        assert_eq!(eps_invert(&s(&[1, 1, 0])).unwrap(), s(&[1, -1, 1]));
        assert_eq!(eps_invert(&s(&[5, 0, 0])).unwrap(), s(&[14, 0, 0])); // 5·14 = 70 ≡ 1
        assert_eq!(eps_invert(&s(&[0, 1])), Err(Error::NonUnit));
        let x = s(&[2, 3]);
        assert_eq!(&x * &eps_invert(&x).unwrap(), x.one_like());
    }

    #[test]
    fn eps_power_vanishes() {
        let e = s(&[0, 1, 0, 0]);
        assert!(e.powu(4).eq_zero());
        assert!(!e.powu(3).eq_zero());
    }

    #[test]
    fn square_roots() {
        // sqrt(1 + ε) = 1 + ε/2 − ε²/8
        let half = Fp2::from_i64(2, P).inverse().unwrap();
        let eighth = Fp2::from_i64(8, P).inverse().unwrap();
        let want = EpsSeries::from_coeffs(vec![Fp2::one(P), half, -eighth]);
        let r = eps_sqrt(&s(&[1, 1, 0]), Fp2::one(P)).unwrap();
        assert_eq!(r, want);
        let neg = eps_sqrt(&s(&[1, 1, 0]), -Fp2::one(P)).unwrap();
        assert_eq!(neg, -r);
        assert_eq!(eps_sqrt(&s(&[9, 0]), Fp2::from_i64(3, P)).unwrap(), s(&[3, 0]));
        assert_eq!(eps_sqrt(&s(&[9, 0]), Fp2::from_i64(4, P)), Err(Error::BadSeed));
        assert_eq!(eps_sqrt(&s(&[0, 0]), Fp2::zero(P)), Err(Error::NonUnit));
    }

    #[test]
    fn newton_examples() {
        // X − ε
        let f = Poly::new(vec![-s(&[0, 1, 0, 0]), s(&[1, 0, 0, 0])]);
        assert_eq!(newton_lift_root(&f, Fp2::zero(P)).unwrap(), s(&[0, 1, 0, 0]));
        // X² − (1 + ε)
        let g = Poly::new(vec![-s(&[1, 1, 0, 0, 0]), s(&[0; 5]), s(&[1, 0, 0, 0, 0])]);
        let r = newton_lift_root(&g, Fp2::one(P)).unwrap();
        assert_eq!(r, eps_sqrt(&s(&[1, 1, 0, 0, 0]), Fp2::one(P)).unwrap());
        // double root
        let h = Poly::new(vec![s(&[0, 1]), s(&[0, 0]), s(&[1, 0])]);
        assert_eq!(newton_lift_root(&h, Fp2::zero(P)), Err(Error::SingularRoot));
    }
}
