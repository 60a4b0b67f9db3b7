//! Elliptic-curve models and point arithmetic over a coefficient ring.

pub mod divpoly;
pub mod hessian;
pub mod montgomery;
pub mod normal;
pub mod pairing;
pub mod torsion;
pub mod weierstrass;

pub use divpoly::division_polynomial;
pub use hessian::{HPoint, HessianCurve};
pub use montgomery::MontgomeryCurve;
pub use normal::{curve_isomorphism, tate_normal_form};
pub use pairing::weil_pairing;
pub use torsion::{random_point, torsion_basis};
pub use weierstrass::{CoordinateChange, Point, Weierstrass};
