//! Invariants of enhanced elliptic curves: `j` (level 1), the Montgomery
//! coefficient (Γ₀(4)) and the Hessian coefficient (Γ(3)).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::arith::primes::invmod;
use crate::arith::{int_poly, Fp2, Poly, Ring};
use crate::curves::normal::tate_normal_form;
use crate::curves::torsion::has_exact_order;
use crate::curves::{weil_pairing, CoordinateChange, HessianCurve, MontgomeryCurve, Point, Weierstrass};
use crate::error::{Error, Result};
use crate::isogeny::IsogenyData;

/// Congruence subgroup type of a level structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupType {
    /// Γ(N): a basis of `E[N]`.
    Gamma,
    /// Γ₁(N): a point of order `N`.
    Gamma1,
    /// Γ₀(N): a cyclic subgroup of order `N`.
    Gamma0,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LevelStructure<T> {
    /// Level 1.
    Trivial,
    FullBasis(Point<T>, Point<T>),
    SinglePoint(Point<T>),
    /// Represented by one generator.
    CyclicSubgroup(Point<T>),
}

impl<T: Ring> LevelStructure<T> {
    pub fn points(&self) -> Vec<&Point<T>> {
        match self {
            LevelStructure::Trivial => vec![],
            LevelStructure::FullBasis(p, q) => vec![p, q],
            LevelStructure::SinglePoint(p) | LevelStructure::CyclicSubgroup(p) => vec![p],
        }
    }

    pub fn map_points(&self, f: impl Fn(&Point<T>) -> Result<Point<T>>) -> Result<Self> {
        Ok(match self {
            LevelStructure::Trivial => LevelStructure::Trivial,
            LevelStructure::FullBasis(p, q) => LevelStructure::FullBasis(f(p)?, f(q)?),
            LevelStructure::SinglePoint(p) => LevelStructure::SinglePoint(f(p)?),
            LevelStructure::CyclicSubgroup(g) => LevelStructure::CyclicSubgroup(f(g)?),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnhancedCurve<T> {
    pub curve: Weierstrass<T>,
    pub structure: LevelStructure<T>,
}

impl<T: Ring> EnhancedCurve<T> {
    pub fn new(curve: Weierstrass<T>, structure: LevelStructure<T>) -> Result<Self> {
        if structure.points().iter().any(|p| !curve.contains(p)) {
            return Err(Error::NotOnCurve);
        }
        Ok(EnhancedCurve { curve, structure })
    }

    /// Transport along an isomorphism.
    pub fn transform(&self, c: &CoordinateChange<T>) -> Result<Self> {
        Ok(EnhancedCurve {
            curve: self.curve.transform(c)?,
            structure: self.structure.map_points(|p| c.map_point(p))?,
        })
    }
}

/// Push a level structure of level `n` along an isogeny of degree prime to `n`.
pub fn push_level_structure<T: Ring>(iso: &IsogenyData<T>, s: &LevelStructure<T>, n: u64) -> Result<LevelStructure<T>> {
    match s {
        LevelStructure::FullBasis(p, q) => {
            let minv = invmod(iso.degree % n, n).ok_or(Error::BadOrder(iso.degree))?;
            let p2 = iso.codomain.mul(minv as i64, &iso.evaluate(p)?)?;
            Ok(LevelStructure::FullBasis(p2, iso.evaluate(q)?))
        }
        _ => s.map_points(|p| iso.evaluate(p)),
    }
}

/// `J₁(z)/J₀(z)`, or `Pole` where `J₀(z)` is not a unit.
pub fn rational_eval<T: Ring>(j1: &Poly<BigInt>, j0: &Poly<BigInt>, z: &T) -> Result<T> {
    let embed = |c: &BigInt| {
        z.from_i64_like(i64::try_from(c).expect("J coefficients fit in i64"))
    };
    let num = j1.eval_in(z, embed);
    let den = j0.eval_in(z, embed);
    num.try_div(&den).ok_or(Error::Pole)
}

/// Montgomery coefficient of a curve with a cyclic subgroup of order 4 generated by `g`.
pub fn mont_invariant<T: Ring>(e: &Weierstrass<T>, g: &Point<T>) -> Result<T> {
    if !has_exact_order(e, g, 4)? {
        return Err(Error::BadStructure("generator is not of order 4".into()));
    }
    let one = e.one();
    let half = one.try_div(&one.from_i64_like(2)).ok_or(Error::NonUnitDenominator)?;
    let z = one.zero_like();
    // complete the square, then move [2]G to (0, 0)
    let c1 = CoordinateChange { u: one.clone(), r: z.clone(), s: -e.a1.clone() * half.clone(), t: -e.a3.clone() * half };
    let e1 = e.transform(&c1)?;
    let g1 = c1.map_point(g)?;
    let two_g = e1.double(&g1)?;
    let x2 = two_g.x().ok_or(Error::BadStructure("[2]G is the identity".into()))?.clone();
    let c2 = CoordinateChange::translation(x2, z);
    let e2 = e1.transform(&c2)?;
    let g2 = c2.map_point(&g1)?;
    let x1 = g2.x().expect("order 4").clone();
    if !(e2.a6.eq_zero() && e2.a1.eq_zero() && e2.a3.eq_zero()) || x1.square() != e2.a4 {
        return Err(Error::BadStructure("order-4 normal form failed".into()));
    }
    e2.a2.try_div(&x1).ok_or(Error::NonUnitDenominator)
}

/// Hessian coefficient `d` of a curve with a basis `(P, Q)` of `E[3]`, `e₃(P, Q) = ω`.
pub fn hess_invariant<T: Ring>(e: &Weierstrass<T>, p: &Point<T>, q: &Point<T>, omega: &T) -> Result<T> {
    let (a1, a3, c) = tate_normal_form(e, p)?;
    let (xi, eta) = match c.map_point(q)? {
        Point::Affine(x, y) => (x, y),
        Point::Infinity => return Err(Error::BadStructure("Q is the identity".into())),
    };
    let k = |n: i64| a1.from_i64_like(n);
    let w = omega.clone();
    let tangent = w.clone() * a1.clone() * xi.clone() + (k(2) * w.clone() + k(1)) * eta + (w - k(1)) * a3.clone();
    if !tangent.eq_zero() {
        return Err(Error::PairingMismatch);
    }
    let den = a1.clone() * xi.clone() + k(3) * a3.clone();
    let d = (k(3) * a1.clone() * xi.clone()).try_div(&den).ok_or(Error::NonUnitDenominator)?;
    let lhs = (a1.clone() + (k(3) * a3.clone()).try_div(&xi).ok_or(Error::NonUnitDenominator)?).powu(3);
    if lhs != a1.powu(3) - k(27) * a3 {
        return Err(Error::InternalError("Hessian scaling identity failed".into()));
    }
    Ok(d)
}

/// `E_j` with trivial structure: `y² = x³ + 3j(1728 − j)x + 2j(1728 − j)²`, special-cased at 0 and 1728.
pub fn curve_with_j(j: Fp2) -> Weierstrass<Fp2> {
    let p = j.modulus();
    let f = |n: i64| Fp2::from_i64(n, p);
    if j.is_zero() {
        return Weierstrass::short(f(0), f(1));
    }
    if j == f(1728) {
        return Weierstrass::short(f(1), f(0));
    }
    let c = f(1728) - j;
    Weierstrass::short(f(3) * j * c, f(2) * j * c * c)
}

/// An invariant of enhanced elliptic curves over `F_{p²}`.
pub trait Invariant: Send + Sync {
    fn name(&self) -> &'static str;
    fn level(&self) -> u64;
    fn group_type(&self) -> GroupType;
    fn j1(&self) -> Poly<BigInt>;
    fn j0(&self) -> Poly<BigInt>;
    /// The invariant value of an enhanced curve.
    fn value(&self, e: &EnhancedCurve<Fp2>) -> Result<Fp2>;
    /// A representative enhanced curve with invariant `z`.
    fn canonical_curve(&self, z: Fp2) -> Result<EnhancedCurve<Fp2>>;

    fn j_alpha<T: Ring>(&self, z: &T) -> Result<T>
    where
        Self: Sized,
    {
        rational_eval(&self.j1(), &self.j0(), z)
    }

    fn is_in_image(&self, z: Fp2) -> bool {
        rational_eval(&self.j1(), &self.j0(), &z).is_ok()
    }

    /// Transport of the level structure along an isogeny of degree prime to the level.
    fn push(&self, iso: &IsogenyData<Fp2>, s: &LevelStructure<Fp2>) -> Result<LevelStructure<Fp2>> {
        push_level_structure(iso, s, self.level())
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct JInvariant;

#[derive(Clone, Copy, Debug, Default)]
pub struct MontgomeryInvariant;

#[derive(Clone, Copy, Debug, Default)]
pub struct HessianInvariant;

impl Invariant for JInvariant {
    fn name(&self) -> &'static str {
        "j"
    }
    fn level(&self) -> u64 {
        1
    }
    fn group_type(&self) -> GroupType {
        GroupType::Gamma
    }
    fn j1(&self) -> Poly<BigInt> {
        int_poly(&[0, 1])
    }
    fn j0(&self) -> Poly<BigInt> {
        int_poly(&[1])
    }
    fn value(&self, e: &EnhancedCurve<Fp2>) -> Result<Fp2> {
        e.curve.j_invariant()
    }
    fn canonical_curve(&self, z: Fp2) -> Result<EnhancedCurve<Fp2>> {
        EnhancedCurve::new(curve_with_j(z), LevelStructure::Trivial)
    }
}

impl Invariant for MontgomeryInvariant {
    fn name(&self) -> &'static str {
        "montgomery"
    }
    fn level(&self) -> u64 {
        4
    }
    fn group_type(&self) -> GroupType {
        GroupType::Gamma0
    }
    fn j1(&self) -> Poly<BigInt> {
        // 2⁸(X² − 3)³
        int_poly(&[-27, 0, 27, 0, -9, 0, 1]).scale(&BigInt::from(256))
    }
    fn j0(&self) -> Poly<BigInt> {
        int_poly(&[-4, 0, 1])
    }
    fn value(&self, e: &EnhancedCurve<Fp2>) -> Result<Fp2> {
        match &e.structure {
            LevelStructure::CyclicSubgroup(g) => mont_invariant(&e.curve, g),
            _ => Err(Error::BadStructure("Montgomery invariant needs a cyclic subgroup of order 4".into())),
        }
    }
    fn canonical_curve(&self, z: Fp2) -> Result<EnhancedCurve<Fp2>> {
        let m = MontgomeryCurve::new(z).map_err(|_| Error::OutOfImage)?;
        let g = m.canonical_generator(|x| x.sqrt())?;
        EnhancedCurve::new(m.to_weierstrass(), LevelStructure::CyclicSubgroup(g))
    }
}

impl Invariant for HessianInvariant {
    fn name(&self) -> &'static str {
        "hessian"
    }
    fn level(&self) -> u64 {
        3
    }
    fn group_type(&self) -> GroupType {
        GroupType::Gamma
    }
    fn j1(&self) -> Poly<BigInt> {
        // X³(X³ + 216)³
        let c = int_poly(&[216, 0, 0, 1]);
        &c.pow(3, &BigInt::from(1)) * &Poly::monomial(BigInt::from(1), 3)
    }
    fn j0(&self) -> Poly<BigInt> {
        int_poly(&[-27, 0, 0, 1]).pow(3, &BigInt::from(1))
    }
    fn value(&self, e: &EnhancedCurve<Fp2>) -> Result<Fp2> {
        match &e.structure {
            LevelStructure::FullBasis(p, q) => hess_invariant(&e.curve, p, q, &Fp2::omega(e.curve.one().modulus())),
            _ => Err(Error::BadStructure("Hessian invariant needs a basis of E[3]".into())),
        }
    }
    fn canonical_curve(&self, z: Fp2) -> Result<EnhancedCurve<Fp2>> {
        let h = HessianCurve::new(z, Fp2::omega(z.modulus())).map_err(|_| Error::OutOfImage)?;
        let p = h.point_to_weierstrass(&h.p_point())?;
        let q = h.point_to_weierstrass(&h.q_point())?;
        EnhancedCurve::new(h.to_weierstrass()?, LevelStructure::FullBasis(p, q))
    }
}

/// The three invariants, for dispatch by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum InvariantKind {
    J,
    Montgomery,
    Hessian,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 3] = [InvariantKind::J, InvariantKind::Montgomery, InvariantKind::Hessian];

    pub fn get(self) -> &'static dyn Invariant {
        match self {
            InvariantKind::J => &JInvariant,
            InvariantKind::Montgomery => &MontgomeryInvariant,
            InvariantKind::Hessian => &HessianInvariant,
        }
    }

    pub fn name(self) -> &'static str {
        self.get().name()
    }

    pub fn level(self) -> u64 {
        self.get().level()
    }

    /// `J₁(z)/J₀(z)` over any coefficient ring.
    pub fn j_alpha<T: Ring>(self, z: &T) -> Result<T> {
        rational_eval(&self.get().j1(), &self.get().j0(), z)
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InvariantKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "j" => Ok(InvariantKind::J),
            "montgomery" => Ok(InvariantKind::Montgomery),
            "hessian" => Ok(InvariantKind::Hessian),
            _ => Err(Error::Parse(format!("unknown invariant {s:?}"))),
        }
    }
}

/// Normalise a full 3-torsion basis so that `e₃(P, Q) = ω`, swapping `Q` for `−Q` if needed.
pub fn normalise_basis<R: Rng + ?Sized>(e: &Weierstrass<Fp2>, p: &Point<Fp2>, q: &Point<Fp2>, rng: &mut R) -> Result<(Point<Fp2>, Point<Fp2>)> {
    let w = Fp2::omega(e.one().modulus());
    let v = weil_pairing(e, p, q, 3, rng)?;
    if v == w {
        Ok((p.clone(), q.clone()))
    } else if v == w * w {
        Ok((p.clone(), e.neg(q)))
    } else {
        Err(Error::PairingMismatch)
    }
}
