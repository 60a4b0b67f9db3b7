//! Hessian curves `X³ + Y³ + Z³ = d·XYZ` with projective arithmetic.

use super::weierstrass::{Point, Weierstrass};
use crate::arith::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessianCurve<T> {
    pub d: T,
    pub omega: T,
}

/// Projective point `(X : Y : Z)` on a Hessian curve.
#[derive(Clone, Debug)]
pub struct HPoint<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Ring> HPoint<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        HPoint { x, y, z }
    }

    /// Projective equality.
    pub fn same(&self, o: &Self) -> bool {
        (self.x.clone() * o.y.clone() - self.y.clone() * o.x.clone()).eq_zero()
            && (self.x.clone() * o.z.clone() - self.z.clone() * o.x.clone()).eq_zero()
            && (self.y.clone() * o.z.clone() - self.z.clone() * o.y.clone()).eq_zero()
    }

    fn is_null(&self) -> bool {
        self.x.eq_zero() && self.y.eq_zero() && self.z.eq_zero()
    }
}

impl<T: Ring> HessianCurve<T> {
    pub fn new(d: T, omega: T) -> Result<Self> {
        let w = omega.square() + omega.clone() + omega.one_like();
        if !w.eq_zero() {
            return Err(Error::BadStructure("omega is not a primitive cube root of unity".into()));
        }
        if !(d.powu(3) - d.from_i64_like(27)).is_unit() {
            return Err(Error::DegenerateCurve);
        }
        Ok(HessianCurve { d, omega })
    }

    pub fn identity(&self) -> HPoint<T> {
        let one = self.d.one_like();
        HPoint::new(one.clone(), -one, self.d.zero_like())
    }

    /// `P_d = (−ω : 1 : 0)`, of order 3.
    pub fn p_point(&self) -> HPoint<T> {
        HPoint::new(-self.omega.clone(), self.d.one_like(), self.d.zero_like())
    }

    /// `Q_d = (0 : −1 : 1)`, of order 3.
    pub fn q_point(&self) -> HPoint<T> {
        let one = self.d.one_like();
        HPoint::new(self.d.zero_like(), -one.clone(), one)
    }

    pub fn contains(&self, p: &HPoint<T>) -> bool {
        let lhs = p.x.powu(3) + p.y.powu(3) + p.z.powu(3);
        let rhs = self.d.clone() * p.x.clone() * p.y.clone() * p.z.clone();
        (lhs - rhs).eq_zero() && !p.is_null()
    }

    pub fn neg(&self, p: &HPoint<T>) -> HPoint<T> {
        HPoint::new(p.y.clone(), p.x.clone(), p.z.clone())
    }

    pub fn is_identity(&self, p: &HPoint<T>) -> bool {
        p.same(&self.identity())
    }

    /// Unified addition with rotated fallbacks when the main formula degenerates.
    pub fn add(&self, p: &HPoint<T>, q: &HPoint<T>) -> HPoint<T> {
        let r = raw_add(p, q);
        if !r.is_null() {
            return r;
        }
        let r = raw_add(
            &HPoint::new(p.z.clone(), p.x.clone(), p.y.clone()),
            &HPoint::new(q.y.clone(), q.z.clone(), q.x.clone()),
        );
        if !r.is_null() {
            return r;
        }
        raw_add(
            &HPoint::new(p.y.clone(), p.z.clone(), p.x.clone()),
            &HPoint::new(q.z.clone(), q.x.clone(), q.y.clone()),
        )
    }

    pub fn mul(&self, n: i64, p: &HPoint<T>) -> HPoint<T> {
        let base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut m = n.unsigned_abs();
        let mut acc = self.identity();
        let mut b = base;
        while m > 0 {
            if m & 1 == 1 {
                acc = self.add(&acc, &b);
            }
            b = self.add(&b, &b);
            m >>= 1;
        }
        acc
    }

    /// `t = XY/Z²`, the coordinate used in the t-recursions.
    pub fn t_coordinate(&self, p: &HPoint<T>) -> Result<T> {
        (p.x.clone() * p.y.clone()).try_div(&p.z.square()).ok_or(Error::NonUnitDenominator)
    }

    /// Weierstrass coefficients `a1 = d/3`, `a3 = (d³ − 27)/729` of the model `y² + a1xy + a3y = x³`.
    fn weierstrass_coeffs(&self) -> Result<(T, T)> {
        let k = |n: i64| self.d.from_i64_like(n);
        let a1 = self.d.clone().try_div(&k(3)).ok_or(Error::NonUnitDenominator)?;
        let a3 = (self.d.powu(3) - k(27)).try_div(&k(729)).ok_or(Error::NonUnitDenominator)?;
        Ok((a1, a3))
    }

    pub fn to_weierstrass(&self) -> Result<Weierstrass<T>> {
        let (a1, a3) = self.weierstrass_coeffs()?;
        let z = self.d.zero_like();
        Ok(Weierstrass::new(a1, z.clone(), a3, z.clone(), z))
    }

    /// Image of a Hessian point on the Weierstrass model.
    pub fn point_to_weierstrass(&self, p: &HPoint<T>) -> Result<Point<T>> {
        let (a1, a3) = self.weierstrass_coeffs()?;
        let w = &self.omega;
        let k = |n: i64| self.d.from_i64_like(n);
        let x = p.z.clone();
        let zz = -(p.x.clone() + p.y.clone() + a1.clone() * x.clone())
            .try_div(&(k(3) * a3.clone()))
            .ok_or(Error::NonUnitDenominator)?;
        let y = (p.x.clone() - w.clone() * a1 * x.clone() - (w.clone() - k(1)) * a3 * zz.clone())
            .try_div(&(k(2) * w.clone() + k(1)))
            .ok_or(Error::NonUnitDenominator)?;
        if zz.eq_zero() {
            return Ok(Point::Infinity);
        }
        let xa = x.try_div(&zz).ok_or(Error::NonUnitDenominator)?;
        let ya = y.try_div(&zz).ok_or(Error::NonUnitDenominator)?;
        Ok(Point::Affine(xa, ya))
    }

    /// Image of a Weierstrass point (on [`Self::to_weierstrass`]) on the Hessian curve.
    pub fn point_from_weierstrass(&self, p: &Point<T>) -> Result<HPoint<T>> {
        let (a1, a3) = self.weierstrass_coeffs()?;
        let w = self.omega.clone();
        let k = |n: i64| self.d.from_i64_like(n);
        let (x, y, z) = p.projective(&self.d.one_like());
        let u = w.clone() * a1.clone() * x.clone() + (k(2) * w.clone() + k(1)) * y.clone()
            + (w.clone() - k(1)) * a3.clone() * z.clone();
        let v = -(w.clone() + k(1)) * a1 * x.clone() - (k(2) * w.clone() + k(1)) * y
            - (w + k(2)) * a3 * z;
        Ok(HPoint::new(u, v, x))
    }

    /// The isomorphism `(X : Y : Z) ↦ (X : Y : ω⁻¹Z)` onto `E_{ωd}`.
    pub fn iota(&self) -> Result<(HessianCurve<T>, impl Fn(&HPoint<T>) -> HPoint<T>)> {
        let target = HessianCurve::new(self.omega.clone() * self.d.clone(), self.omega.clone())?;
        let winv = self.omega.square();
        Ok((target, move |p: &HPoint<T>| HPoint::new(p.x.clone(), p.y.clone(), winv.clone() * p.z.clone())))
    }
}

fn raw_add<T: Ring>(p: &HPoint<T>, q: &HPoint<T>) -> HPoint<T> {
    let (x1, y1, z1) = (&p.x, &p.y, &p.z);
    let (x2, y2, z2) = (&q.x, &q.y, &q.z);
    let x3 = y1.square() * x2.clone() * z2.clone() - y2.square() * x1.clone() * z1.clone();
    let y3 = x1.square() * y2.clone() * z2.clone() - x2.square() * y1.clone() * z1.clone();
    let z3 = z1.square() * x2.clone() * y2.clone() - z2.square() * x1.clone() * y1.clone();
    HPoint::new(x3, y3, z3)
}
