use super::weierstrass::{Point, Weierstrass};
use crate::arith::Ring;
use crate::error::{Error, Result};

/// `y² = x³ + A·x² + x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MontgomeryCurve<T> {
    pub a: T,
}

impl<T: Ring> MontgomeryCurve<T> {
    pub fn new(a: T) -> Result<Self> {
        let disc = a.square() - a.from_i64_like(4);
        if !disc.is_unit() {
            return Err(Error::DegenerateCurve);
        }
        Ok(MontgomeryCurve { a })
    }

    /// The same equation read as a long Weierstrass model.
    pub fn to_weierstrass(&self) -> Weierstrass<T> {
        let z = self.a.zero_like();
        Weierstrass::new(z.clone(), self.a.clone(), z.clone(), self.a.one_like(), z)
    }

    /// The canonical point `(1, √(A + 2))` generating the Γ₀(4) level structure.
    pub fn canonical_generator(&self, sqrt: impl Fn(&T) -> Result<T>) -> Result<Point<T>> {
        let one = self.a.one_like();
        let y = sqrt(&(self.a.clone() + self.a.from_i64_like(2)))?;
        Ok(Point::Affine(one, y))
    }
}
