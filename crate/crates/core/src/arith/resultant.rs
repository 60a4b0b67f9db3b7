//! Univariate resultants: Sylvester determinants over Z (fraction-free
//! Bareiss elimination) and over fields, plus a Euclidean fast path.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// Sylvester matrix of `f` (degree m) and `g` (degree n), size (m+n)².
pub fn sylvester_matrix<T: Ring>(f: &Poly<T>, g: &Poly<T>) -> Result<Vec<Vec<T>>> {
    let m = f.degree().ok_or(Error::ZeroPolynomial)?;
    let n = g.degree().ok_or(Error::ZeroPolynomial)?;
    let z = f.coeffs()[0].zero_like();
    let size = m + n;
    let mut rows = vec![vec![z; size]; size];
    for r in 0..n {
        for (k, a) in f.coeffs().iter().rev().enumerate() {
            rows[r][r + k] = a.clone();
        }
    }
    for r in 0..m {
        for (k, b) in g.coeffs().iter().rev().enumerate() {
            rows[n + r][r + k] = b.clone();
        }
    }
    Ok(rows)
}

/// Determinant over Z by Bareiss fraction-free elimination.
pub fn det_bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if Zero::is_zero(&a[k][k]) {
            match (k + 1..n).find(|&r| !Zero::is_zero(&a[r][k])) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Determinant over a field by Gaussian elimination.
pub fn det_field<T: Field>(mut a: Vec<Vec<T>>) -> T {
    let n = a.len();
    let one = a[0][0].one_like();
    let mut det = one;
    for k in 0..n {
        let piv = match (k..n).find(|&r| !a[r][k].eq_zero()) {
            Some(r) => r,
            None => return a[0][0].zero_like(),
        };
        if piv != k {
            a.swap(k, piv);
            det = -det;
        }
        let inv = a[k][k].inv().expect("nonzero pivot");
        det = det * a[k][k].clone();
        for i in k + 1..n {
            let f = a[i][k].clone() * inv.clone();
            if f.eq_zero() {
                continue;
            }
            for j in k..n {
                let t = f.clone() * a[k][j].clone();
                a[i][j] = a[i][j].clone() - t;
            }
        }
    }
    det
}

/// Resultant over Z as the Sylvester determinant.
pub fn resultant(f: &Poly<BigInt>, g: &Poly<BigInt>) -> Result<BigInt> {
    let (m, n) = (f.degree().ok_or(Error::ZeroPolynomial)?, g.degree().ok_or(Error::ZeroPolynomial)?);
    if m == 0 && n == 0 {
        return Ok(BigInt::one());
    }
    Ok(det_bareiss(sylvester_matrix(f, g)?))
}

/// Resultant over a field as the Sylvester determinant.
pub fn resultant_sylvester_field<T: Field>(f: &Poly<T>, g: &Poly<T>) -> Result<T> {
    let (m, n) = (f.degree().ok_or(Error::ZeroPolynomial)?, g.degree().ok_or(Error::ZeroPolynomial)?);
    if m == 0 && n == 0 {
        return Ok(f.coeffs()[0].one_like());
    }
    Ok(det_field(sylvester_matrix(f, g)?))
}

/// Resultant over a field by the Euclidean recurrence
/// `res(f, g) = (−1)^{mn} lc(g)^{m − deg r} res(g, r)` with `r = f mod g`.
/// Agrees with the Sylvester determinant.
pub fn resultant_euclid<T: Field>(f: &Poly<T>, g: &Poly<T>) -> Result<T> {
    let one = f.coeffs().first().ok_or(Error::ZeroPolynomial)?.one_like();
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut acc = one;
    loop {
        let m = a.degree().expect("nonzero");
        let n = b.degree().expect("nonzero");
        if n == 0 {
            return Ok(acc * b.coeffs()[0].powu(m as u64));
        }
        let r = a.rem(&b)?;
        if r.is_zero() {
            return Ok(acc.zero_like());
        }
        let dr = r.degree().expect("nonzero");
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        acc = acc * b.lc().expect("nonzero").powu((m - dr) as u64);
        a = b;
        b = r;
    }
}
