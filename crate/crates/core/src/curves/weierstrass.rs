use crate::arith::Ring;
use crate::error::{Error, Result};

/// `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6` over a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weierstrass<T> {
    pub a1: T,
    pub a2: T,
    pub a3: T,
    pub a4: T,
    pub a6: T,
}

/// A point in affine coordinates, or the point at infinity (0 : 1 : 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Point<T> {
    Infinity,
    Affine(T, T),
}

impl<T: Ring> Point<T> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn x(&self) -> Option<&T> {
        match self {
            Point::Infinity => None,
            Point::Affine(x, _) => Some(x),
        }
    }

    pub fn y(&self) -> Option<&T> {
        match self {
            Point::Infinity => None,
            Point::Affine(_, y) => Some(y),
        }
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Point<U> {
        match self {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => Point::Affine(f(x), f(y)),
        }
    }

    /// Projective coordinates `(X : Y : Z)`, identity `(0 : 1 : 0)`.
    pub fn projective(&self, one: &T) -> (T, T, T) {
        match self {
            Point::Infinity => (one.zero_like(), one.clone(), one.zero_like()),
            Point::Affine(x, y) => (x.clone(), y.clone(), one.clone()),
        }
    }
}

fn div<T: Ring>(a: T, b: &T) -> Result<T> {
    a.try_div(b).ok_or(Error::NonUnitDenominator)
}

impl<T: Ring> Weierstrass<T> {
    pub fn new(a1: T, a2: T, a3: T, a4: T, a6: T) -> Self {
        Weierstrass { a1, a2, a3, a4, a6 }
    }

    /// `y² = x³ + a4·x + a6`.
    pub fn short(a4: T, a6: T) -> Self {
        let z = a4.zero_like();
        Weierstrass { a1: z.clone(), a2: z.clone(), a3: z, a4, a6 }
    }

    pub fn one(&self) -> T {
        self.a4.one_like()
    }

    fn k(&self, n: i64) -> T {
        self.a4.from_i64_like(n)
    }

    pub fn b2(&self) -> T {
        self.a1.square() + self.k(4) * self.a2.clone()
    }

    pub fn b4(&self) -> T {
        self.k(2) * self.a4.clone() + self.a1.clone() * self.a3.clone()
    }

    pub fn b6(&self) -> T {
        self.a3.square() + self.k(4) * self.a6.clone()
    }

    pub fn b8(&self) -> T {
        self.a1.square() * self.a6.clone() + self.k(4) * self.a2.clone() * self.a6.clone()
            - self.a1.clone() * self.a3.clone() * self.a4.clone()
            + self.a2.clone() * self.a3.square()
            - self.a4.square()
    }

    pub fn c4(&self) -> T {
        self.b2().square() - self.k(24) * self.b4()
    }

    pub fn discriminant(&self) -> T {
        let (b2, b4, b6, b8) = (self.b2(), self.b4(), self.b6(), self.b8());
        -(b2.square() * b8.clone()) - self.k(8) * b4.powu(3) - self.k(27) * b6.square()
            + self.k(9) * b2 * b4 * b6
    }

    pub fn is_smooth(&self) -> bool {
        self.discriminant().is_unit()
    }

    pub fn j_invariant(&self) -> Result<T> {
        div(self.c4().powu(3), &self.discriminant())
    }

    pub fn contains(&self, p: &Point<T>) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine(x, y) => self.lhs_minus_rhs(x, y).eq_zero(),
        }
    }

    fn lhs_minus_rhs(&self, x: &T, y: &T) -> T {
        let lhs = y.square() + self.a1.clone() * x.clone() * y.clone() + self.a3.clone() * y.clone();
        let rhs = x.powu(3) + self.a2.clone() * x.square() + self.a4.clone() * x.clone() + self.a6.clone();
        lhs - rhs
    }

    pub fn neg(&self, p: &Point<T>) -> Point<T> {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => Point::Affine(
                x.clone(),
                -y.clone() - self.a1.clone() * x.clone() - self.a3.clone(),
            ),
        }
    }

    /// Chord-tangent addition; every denominator must be a unit.
    pub fn add(&self, p: &Point<T>, q: &Point<T>) -> Result<Point<T>> {
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return Ok(q.clone()),
            (_, Point::Infinity) => return Ok(p.clone()),
            (Point::Affine(x1, y1), Point::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let lambda = if x1 == x2 {
            let sy = y1.clone() + y2.clone() + self.a1.clone() * x2.clone() + self.a3.clone();
            if sy.eq_zero() {
                return Ok(Point::Infinity);
            }
            if y1 != y2 {
                // equal x but neither P = Q nor P = −Q: only possible over R
                return Err(Error::NonUnitDenominator);
            }
            let num = self.k(3) * x1.square() + self.k(2) * self.a2.clone() * x1.clone() + self.a4.clone()
                - self.a1.clone() * y1.clone();
            let den = self.k(2) * y1.clone() + self.a1.clone() * x1.clone() + self.a3.clone();
            div(num, &den)?
        } else {
            div(y2.clone() - y1.clone(), &(x2.clone() - x1.clone()))?
        };
        let nu = y1.clone() - lambda.clone() * x1.clone();
        let x3 = lambda.square() + self.a1.clone() * lambda.clone() - self.a2.clone() - x1.clone() - x2.clone();
        let y3 = -(lambda + self.a1.clone()) * x3.clone() - nu - self.a3.clone();
        Ok(Point::Affine(x3, y3))
    }

    pub fn double(&self, p: &Point<T>) -> Result<Point<T>> {
        self.add(p, p)
    }

    pub fn sub(&self, p: &Point<T>, q: &Point<T>) -> Result<Point<T>> {
        self.add(p, &self.neg(q))
    }

    /// `[n]P` by double-and-add.
    pub fn mul(&self, n: i64, p: &Point<T>) -> Result<Point<T>> {
        let base = if n < 0 { self.neg(p) } else { p.clone() };
        self.mul_u128(n.unsigned_abs() as u128, &base)
    }

    pub fn mul_u128(&self, n: u128, p: &Point<T>) -> Result<Point<T>> {
        let mut acc = Point::Infinity;
        if n == 0 {
            return Ok(acc);
        }
        for bit in (0..128 - n.leading_zeros()).rev() {
            acc = self.double(&acc)?;
            if (n >> bit) & 1 == 1 {
                acc = self.add(&acc, p)?;
            }
        }
        Ok(acc)
    }

    /// Multiples `[1]P, …, [m]P`.
    pub fn multiples(&self, p: &Point<T>, m: usize) -> Result<Vec<Point<T>>> {
        let mut out: Vec<Point<T>> = Vec::with_capacity(m);
        for i in 0..m {
            let next = match i {
                0 => p.clone(),
                1 => self.double(p)?,
                _ => self.add(&out[i - 1], p)?,
            };
            out.push(next);
        }
        Ok(out)
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Weierstrass<U> {
        Weierstrass { a1: f(&self.a1), a2: f(&self.a2), a3: f(&self.a3), a4: f(&self.a4), a6: f(&self.a6) }
    }

    /// Apply an admissible change of variables, giving the target curve.
    pub fn transform(&self, c: &CoordinateChange<T>) -> Result<Weierstrass<T>> {
        let (u, r, s, t) = (&c.u, &c.r, &c.s, &c.t);
        let ui = self.one().try_div(u).ok_or(Error::NonUnitDenominator)?;
        let a1 = (self.a1.clone() + self.k(2) * s.clone()) * ui.clone();
        let a2 = (self.a2.clone() - s.clone() * self.a1.clone() + self.k(3) * r.clone() - s.square()) * ui.powu(2);
        let a3 = (self.a3.clone() + r.clone() * self.a1.clone() + self.k(2) * t.clone()) * ui.powu(3);
        let a4 = (self.a4.clone() - s.clone() * self.a3.clone() + self.k(2) * r.clone() * self.a2.clone()
            - (t.clone() + r.clone() * s.clone()) * self.a1.clone()
            + self.k(3) * r.square()
            - self.k(2) * s.clone() * t.clone())
            * ui.powu(4);
        let a6 = (self.a6.clone() + r.clone() * self.a4.clone() + r.square() * self.a2.clone() + r.powu(3)
            - t.clone() * self.a3.clone()
            - t.square()
            - r.clone() * t.clone() * self.a1.clone())
            * ui.powu(6);
        Ok(Weierstrass { a1, a2, a3, a4, a6 })
    }

    /// A change to a model with `a1 = a2 = a3 = 0` (characteristic ≠ 2, 3).
    pub fn to_short_change(&self) -> Result<CoordinateChange<T>> {
        let one = self.one();
        let s = div(-self.a1.clone(), &self.k(2))?;
        let r = div(-self.b2(), &self.k(12))?;
        let t = div(-(self.a3.clone() + r.clone() * self.a1.clone()), &self.k(2))?;
        Ok(CoordinateChange { u: one, r, s, t })
    }
}

/// `x = u²x' + r`, `y = u³y' + u²s·x' + t`, mapping a curve E to E'.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateChange<T> {
    pub u: T,
    pub r: T,
    pub s: T,
    pub t: T,
}

impl<T: Ring> CoordinateChange<T> {
    pub fn identity(one: &T) -> Self {
        let z = one.zero_like();
        CoordinateChange { u: one.clone(), r: z.clone(), s: z.clone(), t: z }
    }

    pub fn translation(r: T, t: T) -> Self {
        let one = r.one_like();
        CoordinateChange { u: one, s: r.zero_like(), r, t }
    }

    /// Apply `self` then `next`.
    pub fn then(&self, next: &Self) -> Self {
        let (u, r, s, t) = (&self.u, &self.r, &self.s, &self.t);
        CoordinateChange {
            u: u.clone() * next.u.clone(),
            r: u.square() * next.r.clone() + r.clone(),
            s: s.clone() + u.clone() * next.s.clone(),
            t: t.clone() + u.powu(3) * next.t.clone() + u.square() * s.clone() * next.r.clone(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let ui = self.u.one_like().try_div(&self.u).ok_or(Error::NonUnitDenominator)?;
        Ok(CoordinateChange {
            u: ui.clone(),
            r: -self.r.clone() * ui.square(),
            s: -self.s.clone() * ui.clone(),
            t: (self.r.clone() * self.s.clone() - self.t.clone()) * ui.powu(3),
        })
    }

    /// Image on the target curve of a point of the source curve.
    pub fn map_point(&self, p: &Point<T>) -> Result<Point<T>> {
        match p {
            Point::Infinity => Ok(Point::Infinity),
            Point::Affine(x, y) => {
                let ui = self.u.one_like().try_div(&self.u).ok_or(Error::NonUnitDenominator)?;
                let dx = x.clone() - self.r.clone();
                let xp = dx.clone() * ui.square();
                let yp = (y.clone() - self.s.clone() * dx - self.t.clone()) * ui.powu(3);
                Ok(Point::Affine(xp, yp))
            }
        }
    }
}
