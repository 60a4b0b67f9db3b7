//! Vélu isogenies with cyclic kernel, over a field or over R.

use crate::arith::{Fp2, Ring};
use crate::curves::divpoly::division_polynomial;
use crate::curves::{Point, Weierstrass};
use crate::epsring::{eps_sqrt, newton_lift_root, EpsSeries};
use crate::error::{Error, Result};

/// Per-point Vélu data for a representative `Q` of `(ker φ \ {O}) / ±`.
#[derive(Clone, Debug)]
struct KernelTerm<T> {
    x: T,
    y: T,
    gx: T,
    gy: T,
    v: T,
    u: T,
}

/// A normalised Vélu isogeny `E → E/⟨K⟩`.
#[derive(Clone, Debug)]
pub struct IsogenyData<T> {
    pub domain: Weierstrass<T>,
    pub codomain: Weierstrass<T>,
    pub generator: Point<T>,
    pub degree: u64,
    terms: Vec<KernelTerm<T>>,
}

/// Vélu's formulas for the cyclic subgroup generated by `k`, of exact order `ell`.
pub fn velu<T: Ring>(e: &Weierstrass<T>, k: &Point<T>, ell: u64) -> Result<IsogenyData<T>> {
    if ell == 0 {
        return Err(Error::BadKernel("degree 0".into()));
    }
    let mults = e.multiples(k, ell as usize)?;
    if !mults[ell as usize - 1].is_infinity() || mults[..ell as usize - 1].iter().any(Point::is_infinity) {
        return Err(Error::BadKernel(format!("generator does not have order {ell}")));
    }
    let one = e.one();
    let two = one.from_i64_like(2);
    let three = one.from_i64_like(3);
    let mut terms = Vec::new();
    for (i, q) in mults.iter().enumerate().take(ell as usize / 2) {
        let (x, y) = match q {
            Point::Affine(x, y) => (x.clone(), y.clone()),
            Point::Infinity => unreachable!(),
        };
        let gx = three.clone() * x.square() + two.clone() * e.a2.clone() * x.clone() + e.a4.clone()
            - e.a1.clone() * y.clone();
        let gy = -two.clone() * y.clone() - e.a1.clone() * x.clone() - e.a3.clone();
        let order_two = 2 * (i as u64 + 1) == ell;
        let v = if order_two { gx.clone() } else { two.clone() * gx.clone() - e.a1.clone() * gy.clone() };
        let u = gy.square();
        terms.push(KernelTerm { x, y, gx, gy, v, u });
    }
    let (mut vs, mut ws) = (one.zero_like(), one.zero_like());
    for t in &terms {
        vs = vs + t.v.clone();
        ws = ws + t.u.clone() + t.x.clone() * t.v.clone();
    }
    let codomain = Weierstrass::new(
        e.a1.clone(),
        e.a2.clone(),
        e.a3.clone(),
        e.a4.clone() - one.from_i64_like(5) * vs.clone(),
        e.a6.clone() - e.b2() * vs - one.from_i64_like(7) * ws,
    );
    Ok(IsogenyData { domain: e.clone(), codomain, generator: k.clone(), degree: ell, terms })
}

impl<T: Ring> IsogenyData<T> {
    /// Image of a point of the domain on the codomain.
    pub fn evaluate(&self, p: &Point<T>) -> Result<Point<T>> {
        let (x, y) = match p {
            Point::Infinity => return Ok(Point::Infinity),
            Point::Affine(x, y) => (x, y),
        };
        let e = &self.domain;
        let (mut xs, mut ys) = (x.clone(), y.clone());
        for t in &self.terms {
            let dx = x.clone() - t.x.clone();
            if dx.eq_zero() {
                return Ok(Point::Infinity);
            }
            let inv = dx.one_like().try_div(&dx).ok_or(Error::NonUnitDenominator)?;
            let inv2 = inv.square();
            let inv3 = inv2.clone() * inv.clone();
            xs = xs + t.v.clone() * inv.clone() + t.u.clone() * inv2.clone();
            let two_y = y.clone() + y.clone() + e.a1.clone() * x.clone() + e.a3.clone();
            ys = ys
                - t.u.clone() * two_y * inv3
                - t.v.clone() * (e.a1.clone() * dx + y.clone() - t.y.clone()) * inv2.clone()
                - (e.a1.clone() * t.u.clone() - t.gx.clone() * t.gy.clone()) * inv2;
        }
        Ok(Point::Affine(xs, ys))
    }

    /// `x`-coordinates of a set of representatives of `(ker \ {O}) / ±`.
    pub fn kernel_xs(&self) -> Vec<T> {
        self.terms.iter().map(|t| t.x.clone()).collect()
    }
}

/// Generators `T₂, T₁, T₁ + T₂, …, T₁ + [ℓ−1]T₂` of the `ℓ + 1` cyclic subgroups of order `ℓ`.
pub fn enumerate_kernels<T: Ring>(e: &Weierstrass<T>, t1: &Point<T>, t2: &Point<T>, ell: u64) -> Result<Vec<Point<T>>> {
    let mut out = vec![t2.clone()];
    let mut cur = t1.clone();
    for _ in 0..ell {
        out.push(cur.clone());
        cur = e.add(&cur, t2)?;
    }
    Ok(out)
}

/// Embed `F_{p²}` in R at precision `k`.
pub fn embed(x: &Fp2, k: usize) -> EpsSeries {
    EpsSeries::constant(*x, k)
}

/// The unique lift to `Ẽ[ℓ](R)` of a point `K` of odd order `ℓ` on the special fibre.
pub fn lift_kernel_generator(e: &Weierstrass<EpsSeries>, k: &Point<Fp2>, ell: u64) -> Result<Point<EpsSeries>> {
    let prec = e.a1.precision();
    let (x0, y0) = match k {
        Point::Infinity => return Ok(Point::Infinity),
        Point::Affine(x, y) => (*x, *y),
    };
    if prec == 1 {
        return Ok(Point::Affine(embed(&x0, 1), embed(&y0, 1)));
    }
    let g = division_polynomial(e, ell as usize);
    let x = newton_lift_root(&g, x0)?;
    let b = e.a1.clone() * x.clone() + e.a3.clone();
    let rhs = x.powu(3) + e.a2.clone() * x.square() + e.a4.clone() * x.clone() + e.a6.clone();
    let four = x.from_i64_like(4);
    let disc = b.square() + four * rhs;
    let b0 = b.reduce();
    let s = eps_sqrt(&disc, y0 + y0 + b0)?;
    let half = Fp2::from_i64(2, x0.modulus()).inverse().expect("odd characteristic");
    let y = (s - b).scale(half);
    Ok(Point::Affine(x, y))
}
