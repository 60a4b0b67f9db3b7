//! Tate normal form for a point of order 3, and explicit isomorphisms.

use super::weierstrass::{CoordinateChange, Point, Weierstrass};
use crate::arith::factor::roots;
use crate::arith::{Fp2, Poly, Ring};
use crate::error::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Move a point `P` of order 3 to `(0, 0)` on a model `y² + a1xy + a3y = x³`.
/// Returns `(a1, a3, change)`.
pub fn tate_normal_form<T: Ring>(e: &Weierstrass<T>, p: &Point<T>) -> Result<(T, T, CoordinateChange<T>)> {
    let (x, y) = match p {
        Point::Infinity => return Err(Error::BadOrder(3)),
        Point::Affine(x, y) => (x.clone(), y.clone()),
    };
    if !e.mul(3, p)?.is_infinity() {
        return Err(Error::BadOrder(3));
    }
    let c1 = CoordinateChange::translation(x, y);
    let e1 = e.transform(&c1)?;
    let s = e1.a4.clone().try_div(&e1.a3).ok_or(Error::NonUnitDenominator)?;
    let z = s.zero_like();
    let c2 = CoordinateChange { u: s.one_like(), r: z.clone(), s, t: z };
    let e2 = e1.transform(&c2)?;
    if !(e2.a2.eq_zero() && e2.a4.eq_zero() && e2.a6.eq_zero()) {
        return Err(Error::InternalError("Tate normal form did not clear a2, a4, a6".into()));
    }
    Ok((e2.a1, e2.a3, c1.then(&c2)))
}

/// An explicit isomorphism `E1 → E2` over `F_{p²}`.
///
/// `hint`, if given, is tried first as the scaling `u` between the short models.
pub fn curve_isomorphism(e1: &Weierstrass<Fp2>, e2: &Weierstrass<Fp2>, hint: Option<Fp2>) -> Result<CoordinateChange<Fp2>> {
    let c1 = e1.to_short_change()?;
    let c2 = e2.to_short_change()?;
    let s1 = e1.transform(&c1)?;
    let s2 = e2.transform(&c2)?;
    if s1.j_invariant()? != s2.j_invariant()? {
        return Err(Error::NotIsomorphic);
    }
    let p = e1.one().modulus();
    let ok = |u: Fp2| -> bool {
        !u.is_zero() && s1.a4 == u.powu(4) * s2.a4 && s1.a6 == u.powu(6) * s2.a6
    };
    let mut candidates: Vec<Fp2> = hint.into_iter().collect();
    if candidates.first().map_or(true, |&u| !ok(u)) {
        // u⁴ = A1/A2 when A ≠ 0, else u⁶ = B1/B2
        let (deg, ratio) = if !s2.a4.is_zero() {
            (4, s1.a4.try_div(&s2.a4).ok_or(Error::NotIsomorphic)?)
        } else {
            (6, s1.a6.try_div(&s2.a6).ok_or(Error::NotIsomorphic)?)
        };
        let mut c = vec![Fp2::zero(p); deg + 1];
        c[0] = -ratio;
        c[deg] = Fp2::one(p);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        candidates = roots(&Poly::new(c), &mut rng);
    }
    let u = candidates.into_iter().find(|&u| ok(u)).ok_or(Error::NotIsomorphic)?;
    let scale = CoordinateChange { u, r: Fp2::zero(p), s: Fp2::zero(p), t: Fp2::zero(p) };
    Ok(c1.then(&scale).then(&c2.inverse()?))
}
