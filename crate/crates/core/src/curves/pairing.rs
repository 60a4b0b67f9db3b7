//! Weil pairing via Miller functions normalised at infinity.

use super::weierstrass::{Point, Weierstrass};
use crate::arith::{Field, Fp2, Ring};
use crate::error::{Error, Result};
use rand::Rng;

/// Value at `r` of the line through `a` and `b` divided by the vertical line through `a + b`.
/// `None` if `r` is a zero or pole of either factor.
fn line_ratio<T: Field>(e: &Weierstrass<T>, a: &Point<T>, b: &Point<T>, r: (&T, &T)) -> Result<Option<(T, Point<T>)>> {
    let sum = e.add(a, b)?;
    let (xr, yr) = r;
    let one = e.one();
    if a.is_infinity() || b.is_infinity() {
        return Ok(Some((one, sum)));
    }
    let num = match (a, b) {
        (Point::Infinity, _) | (_, Point::Infinity) => unreachable!(),
        (Point::Affine(x1, y1), Point::Affine(x2, _)) => {
            if sum.is_infinity() {
                xr.clone() - x1.clone()
            } else {
                let lambda = if x1 == x2 {
                    let k = |n: i64| one.from_i64_like(n);
                    (k(3) * x1.square() + k(2) * e.a2.clone() * x1.clone() + e.a4.clone() - e.a1.clone() * y1.clone())
                        .try_div(&(k(2) * y1.clone() + e.a1.clone() * x1.clone() + e.a3.clone()))
                        .ok_or(Error::NonUnitDenominator)?
                } else {
                    let (_, y2) = match b {
                        Point::Affine(x, y) => (x, y),
                        Point::Infinity => unreachable!(),
                    };
                    (y2.clone() - y1.clone())
                        .try_div(&(x2.clone() - x1.clone()))
                        .ok_or(Error::NonUnitDenominator)?
                };
                yr.clone() - y1.clone() - lambda * (xr.clone() - x1.clone())
            }
        }
    };
    let den = match &sum {
        Point::Infinity => one,
        Point::Affine(x3, _) => xr.clone() - x3.clone(),
    };
    if num.eq_zero() || den.eq_zero() {
        return Ok(None);
    }
    Ok(Some((num.try_div(&den).ok_or(Error::NonUnitDenominator)?, sum)))
}

/// Miller function `f_{n,P}` with divisor `n(P) − n(O)`, evaluated at `r`.
pub fn miller<T: Field>(e: &Weierstrass<T>, p: &Point<T>, n: u64, r: &Point<T>) -> Result<Option<T>> {
    let (xr, yr) = match r {
        Point::Infinity => return Ok(None),
        Point::Affine(x, y) => (x, y),
    };
    let mut f = e.one();
    let mut t = p.clone();
    for bit in (0..63 - n.leading_zeros()).rev() {
        let Some((l, t2)) = line_ratio(e, &t, &t, (xr, yr))? else { return Ok(None) };
        f = f.square() * l;
        t = t2;
        if (n >> bit) & 1 == 1 {
            let Some((l, t2)) = line_ratio(e, &t, p, (xr, yr))? else { return Ok(None) };
            f = f * l;
            t = t2;
        }
    }
    Ok(Some(f))
}

fn check_torsion<T: Field>(e: &Weierstrass<T>, p: &Point<T>, n: u64) -> Result<()> {
    if !e.mul_u128(n as u128, p)?.is_infinity() {
        return Err(Error::NotTorsion(n));
    }
    Ok(())
}

/// Weil pairing `e_n(P, Q) = (−1)^n f_{n,P}(Q) / f_{n,Q}(P)`.
///
/// When `Q` meets the support of `f_{n,P}` (so `P` and `Q` are dependent) the
/// shifted-divisor form with a random auxiliary point is used instead.
pub fn weil_pairing<R: Rng + ?Sized>(e: &Weierstrass<Fp2>, p: &Point<Fp2>, q: &Point<Fp2>, n: u64, rng: &mut R) -> Result<Fp2> {
    check_torsion(e, p, n)?;
    check_torsion(e, q, n)?;
    let one = e.one();
    if p.is_infinity() || q.is_infinity() || p == q || n == 1 {
        return Ok(one);
    }
    if let (Some(a), Some(b)) = (miller(e, p, n, q)?, miller(e, q, n, p)?) {
        let v = a.try_div(&b).ok_or(Error::PairingMismatch)?;
        return Ok(if n % 2 == 1 { -v } else { v });
    }
    let modulus = one.modulus();
    for _ in 0..64 {
        let s = super::torsion::random_point(e, modulus, rng)?;
        let qs = e.add(q, &s)?;
        let ps = e.sub(p, &s)?;
        let ns = e.neg(&s);
        let vals = (miller(e, p, n, &qs)?, miller(e, p, n, &s)?, miller(e, q, n, &ps)?, miller(e, q, n, &ns)?);
        if let (Some(a), Some(b), Some(c), Some(d)) = vals {
            let num = a * d;
            let den = b * c;
            return num.try_div(&den).ok_or(Error::PairingMismatch);
        }
    }
    Err(Error::PairingMismatch)
}
