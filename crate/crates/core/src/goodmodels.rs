//! Good-model arithmetic: Hessian t-coordinate recursions and isogeny
//! coefficients, and the Montgomery x-only ladder and isogeny coefficient.
//!
//! None of this is on the Φ-computation path; it is checked against full
//! curve arithmetic and Vélu.

use num_bigint::BigInt;

use crate::arith::kronecker::{zdt_div_exact, zdt_mul};
use crate::arith::{Poly, Ring};
use crate::error::{Error, Result};

/// `h(t) = −4t³ + d²t² − 2dt + 1`.
pub fn hess_h<T: Ring>(d: &T) -> Poly<T> {
    let k = |n: i64| d.from_i64_like(n);
    Poly::new(vec![k(1), -(k(2) * d.clone()), d.square(), k(-4)])
}

/// Tables of `P_m`, `V_m ∈ R[t]` for `m = 1..=max`, with `R` the ring of `d`.
#[derive(Clone, Debug)]
pub struct HessDivisionData<T: Ring> {
    pub d: T,
    pub h: Poly<T>,
    p: Vec<Poly<T>>,
    v: Vec<Poly<T>>,
}

impl<T: Ring> HessDivisionData<T> {
    /// Runs the recursion up to `max`, asserting every division is exact.
    ///
    /// For `k ≥ 1`:
    /// `P_{2k+1} = (−t·h·P_{2k}² − V_{2k}) / P_{2k−1}`,
    /// `V_{2k+1} = (t·h²·P_{2k}⁴ + t²V_{2k}² + (dt − 1)·h·P_{2k}²·V_{2k}) / V_{2k−1}`,
    /// `P_{2k+2} = (t·P_{2k+1}² − V_{2k+1}) / (−h·P_{2k})`,
    /// `V_{2k+2} = (t·P_{2k+1}⁴ + t²V_{2k+1}² − (dt − 1)·P_{2k+1}²·V_{2k+1}) / V_{2k}`.
    pub fn new(d: T, max: usize) -> Result<Self> {
        Self::build(d, max, |a, b| a * b, |a, b| a.div_exact(b))
    }

    fn build(
        d: T,
        max: usize,
        mul: impl Fn(&Poly<T>, &Poly<T>) -> Poly<T>,
        div: impl Fn(&Poly<T>, &Poly<T>) -> Result<Poly<T>>,
    ) -> Result<Self> {
        let k = |n: i64| d.from_i64_like(n);
        let one = Poly::constant(k(1));
        let t = Poly::monomial(k(1), 1);
        let t2 = Poly::monomial(k(1), 2);
        let h = hess_h(&d);
        let dt1 = Poly::new(vec![k(-1), d.clone()]);
        // index 0 is a placeholder
        let mut p = vec![Poly::zero(), one.clone(), one.clone()];
        let mut v = vec![Poly::zero(), t.clone(), Poly::new(vec![k(0), k(2), -d.clone(), k(0), k(1)])];
        let mut m = 2;
        while m < max {
            // m = 2k: build 2k + 1 and 2k + 2
            let (p2k, v2k) = (p[m].clone(), v[m].clone());
            let p2k_sq = mul(&p2k, &p2k);
            let th = &t * &h;
            let num = &(-&(&th * &p2k_sq)) - &v2k;
            let p_odd = div(&num, &p[m - 1])?;
            let th2p4 = &(&th * &h) * &mul(&p2k_sq, &p2k_sq);
            let num = &(&th2p4 + &(&t2 * &mul(&v2k, &v2k))) + &mul(&(&dt1 * &(&h * &p2k_sq)), &v2k);
            let v_odd = div(&num, &v[m - 1])?;
            let po_sq = mul(&p_odd, &p_odd);
            let num = &(&t * &po_sq) - &v_odd;
            let p_even = div(&num, &-(&h * &p2k))?;
            let num = &(&(&t * &mul(&po_sq, &po_sq)) + &(&t2 * &mul(&v_odd, &v_odd))) - &mul(&(&dt1 * &po_sq), &v_odd);
            let v_even = div(&num, &v2k)?;
            p.push(p_odd);
            v.push(v_odd);
            p.push(p_even);
            v.push(v_even);
            m += 2;
        }
        p.truncate(max.max(2) + 1);
        v.truncate(max.max(2) + 1);
        Ok(HessDivisionData { d, h, p, v })
    }

    pub fn max(&self) -> usize {
        self.p.len() - 1
    }

    pub fn p(&self, m: usize) -> &Poly<T> {
        &self.p[m]
    }

    pub fn v(&self, m: usize) -> &Poly<T> {
        &self.v[m]
    }

    /// `(P_m, V_m)`.
    pub fn pm_vm(&self, m: usize) -> (&Poly<T>, &Poly<T>) {
        (&self.p[m], &self.v[m])
    }

    /// `t([m]P)` from `t(P) = t0`; `None` for the point with `Z = 0`.
    pub fn t_scalar_mul(&self, m: usize, t0: &T) -> Option<T> {
        let pm = self.p[m].eval(t0);
        let vm = self.v[m].eval(t0);
        let den = if m % 2 == 1 { pm.square() } else { -(self.h.eval(t0) * pm.square()) };
        if den.eq_zero() {
            return None;
        }
        vm.try_div(&den)
    }
}

impl<T: Ring> HessDivisionData<T> {
    /// The four doubling and differential-addition identities linking
    /// `(P_k, V_k, P_{k+1}, V_{k+1})` to `P_{2k}, V_{2k}, P_{2k+1}, V_{2k+1}`,
    /// in the order `t·V_{2k+1}`, `P_{2k+1}²`, `V_{2k}`, `−h·P_{2k}²`.
    /// Needs `2k + 1 ≤ max`.
    pub fn integrality_identities(&self, k: usize) -> [bool; 4] {
        self.identities_with(k, |a, b| a * b)
    }

    fn identities_with(&self, k: usize, mul: impl Fn(&Poly<T>, &Poly<T>) -> Poly<T>) -> [bool; 4] {
        assert!(k >= 1 && 2 * k + 1 <= self.max(), "tables too short for k = {k}");
        let d = &self.d;
        let c = |x: T| Poly::constant(x);
        let k_ = |n: i64| d.from_i64_like(n);
        let h = &self.h;
        let t = Poly::monomial(k_(1), 1);
        let (pk, vk, pk1, vk1) = (&self.p[k], &self.v[k], &self.p[k + 1], &self.v[k + 1]);
        let pk2 = mul(pk, pk);
        let pk12 = mul(pk1, pk1);
        let hpk2 = mul(h, &pk2);
        let hpk12 = mul(h, &pk12);
        let dvv = mul(&c(d.clone()), &mul(vk, vk1));
        let even = k % 2 == 0;
        let (a, b) = if even { (mul(&hpk2, vk1), mul(&pk12, vk)) } else { (mul(&pk2, vk1), mul(&hpk12, vk)) };
        let inner = if even { &(&b - &a) - &dvv } else { &(&a - &b) - &dvv };
        let vv = mul(vk, vk1);
        let rhs1 = &mul(&vv, &vv) - &mul(&mul(&hpk2, &pk12), &inner);
        let f1 = mul(&t, &self.v[2 * k + 1]) == rhs1;
        let s = &a + &b;
        let f2 = mul(&self.p[2 * k + 1], &self.p[2 * k + 1]) == mul(&s, &s);
        let pk4 = mul(&pk2, &pk2);
        let pk6 = mul(&pk4, &pk2);
        let pk8 = mul(&pk4, &pk4);
        let v2 = mul(vk, vk);
        let v3 = mul(&v2, vk);
        let h2 = mul(h, h);
        let h3 = mul(&h2, h);
        let dd = c(d.clone());
        let rhs3 = if even {
            mul(vk, &(&(&v3 - &mul(&mul(&dd, &mul(&h2, &pk4)), vk)) - &mul(&c(k_(2)), &mul(&h3, &pk6))))
        } else {
            mul(vk, &(&(&v3 - &mul(&mul(&dd, &pk4), vk)) + &mul(&c(k_(2)), &pk6)))
        };
        let f3 = self.v[2 * k] == rhs3;
        let lhs4 = -&mul(h, &mul(&self.p[2 * k], &self.p[2 * k]));
        let d2 = c(d.square());
        let d2x = c(k_(2) * d.clone());
        let rhs4 = if even {
            let s = &(&(&mul(&c(k_(4)), &mul(h, &mul(&v3, &pk2))) + &mul(&d2, &mul(&h2, &mul(&v2, &pk4))))
                + &mul(&d2x, &mul(&h3, &mul(vk, &pk6))))
                + &mul(&mul(&h2, &h2), &pk8);
            -&s
        } else {
            &(&(&mul(&c(k_(4)), &mul(&v3, &pk2)) - &mul(&d2, &mul(&v2, &pk4))) + &mul(&d2x, &mul(vk, &pk6))) - &pk8
        };
        [f1, f2, f3, lhs4 == rhs4]
    }
}

impl HessDivisionData<Poly<BigInt>> {
    /// The generic tables over `Z[d]` (`d` an indeterminate), built with
    /// Kronecker-substitution products and exact quotients.
    pub fn generic(max: usize) -> Result<Self> {
        let d = Poly::new(vec![BigInt::from(0), BigInt::from(1)]);
        Self::build(d, max, zdt_mul, zdt_div_exact)
    }

    /// [`HessDivisionData::integrality_identities`] as exact identities in `Z[d][t]`.
    pub fn generic_identities(&self, k: usize) -> [bool; 4] {
        self.identities_with(k, zdt_mul)
    }
}

/// `(P_m, V_m)` for the Hessian coefficient `d`.
pub fn hess_pm_vm<T: Ring>(d: &T, m: usize) -> Result<(Poly<T>, Poly<T>)> {
    let data = HessDivisionData::new(d.clone(), m)?;
    let (p, v) = data.pm_vm(m);
    Ok((p.clone(), v.clone()))
}

/// `t([m]P)` on `E_d` from `t(P) = t0`; `None` means `t = ∞`.
pub fn hess_t_scalar_mul<T: Ring>(d: &T, m: usize, t0: &T) -> Result<Option<T>> {
    Ok(HessDivisionData::new(d.clone(), m)?.t_scalar_mul(m, t0))
}

/// Codomain coefficient `d′` of the isogeny `E_d → E_{d′}` with kernel `⟨K⟩` of order `m` prime to 3.
///
/// `ts` holds `t([i]K)` for `i = 1..⌈m/2⌉ − 1`, followed for even `m` by `t([m/2]K)`.
pub fn hess_isogeny_coefficient<T: Ring>(d: &T, ts: &[T], m: usize) -> Result<T> {
    if m % 3 == 0 || m == 0 {
        return Err(Error::BadKernel(format!("degree {m} is not prime to 3")));
    }
    let half = m.div_ceil(2) - 1;
    let expected = half + usize::from(m % 2 == 0);
    if ts.len() != expected {
        return Err(Error::BadKernel(format!("expected {expected} t-values, got {}", ts.len())));
    }
    let k = |n: i64| d.from_i64_like(n);
    let (c1, c2) = if m % 2 == 1 {
        (k(1), k(0))
    } else {
        let t = &ts[half];
        let half_d = d.clone().try_div(&k(2)).ok_or(Error::NonUnitDenominator)?;
        let c = -(k(2) * t.square()) + half_d.clone() * d.clone() * t.clone() - half_d;
        (c.clone(), c)
    };
    let mut inv_sum = k(0);
    let mut prod = k(1);
    for t in &ts[..half] {
        if t.eq_zero() {
            return Err(Error::BadKernel("kernel meets a 3-torsion translate".into()));
        }
        inv_sum = inv_sum + t.inv().ok_or(Error::NonUnitDenominator)?;
        prod = prod * t.clone();
    }
    // pairing [i]K with [m - i]K leaves m·d for odd m and (m - 3)·d for even m
    let lin_d = if m % 2 == 1 { m as i64 } else { m as i64 - 3 };
    let lin = k(lin_d) * d.clone() - k(6) * inv_sum + k(6) * c2;
    Ok(c1 * lin * prod)
}

/// `x([m]P)` on `y² = x³ + Ax² + x` by the projective x-only ladder; `None` is the identity.
pub fn mont_xonly_ladder<T: Ring>(a: &T, m: u64, x0: &T) -> Result<Option<T>> {
    let k = |n: i64| a.from_i64_like(n);
    if m == 0 {
        return Ok(None);
    }
    if x0.eq_zero() {
        // (0, 0) has order 2
        return Ok(if m % 2 == 0 { None } else { Some(x0.clone()) });
    }
    let a24 = (a.clone() + k(2)).try_div(&k(4)).ok_or(Error::NonUnitDenominator)?;
    let dbl = |x: &T, z: &T| -> (T, T) {
        let s = (x.clone() + z.clone()).square();
        let d = (x.clone() - z.clone()).square();
        let c = s.clone() - d.clone();
        (s * d.clone(), c.clone() * (d + a24.clone() * c))
    };
    // differential addition with difference (x0 : 1)
    let add = |x1: &T, z1: &T, x2: &T, z2: &T| -> (T, T) {
        let u = (x1.clone() - z1.clone()) * (x2.clone() + z2.clone());
        let v = (x1.clone() + z1.clone()) * (x2.clone() - z2.clone());
        ((u.clone() + v.clone()).square(), x0.clone() * (u - v).square())
    };
    let (mut r0, mut r1) = ((x0.clone(), k(1)), dbl(x0, &k(1)));
    for bit in (0..63 - m.leading_zeros()).rev() {
        if (m >> bit) & 1 == 1 {
            r0 = add(&r0.0, &r0.1, &r1.0, &r1.1);
            r1 = dbl(&r1.0, &r1.1);
        } else {
            r1 = add(&r0.0, &r0.1, &r1.0, &r1.1);
            r0 = dbl(&r0.0, &r0.1);
        }
    }
    if r0.1.eq_zero() {
        return Ok(None);
    }
    Ok(Some(r0.0.try_div(&r0.1).ok_or(Error::NonUnitDenominator)?))
}

/// Codomain coefficient of an odd-degree isogeny of Montgomery curves.
///
/// `xs` are the x-coordinates of `[i]K` for `i = 1..ℓ−1`; only the first
/// `(ℓ−1)/2` are used: `A′ = π²(A − 6σ + 6σ̃)` with `π = Πxᵢ`, `σ = Σxᵢ`, `σ̃ = Σ1/xᵢ`.
pub fn mont_isogeny_coefficient<T: Ring>(a: &T, xs: &[T], ell: usize) -> Result<T> {
    if ell % 2 == 0 || xs.len() != ell - 1 {
        return Err(Error::BadKernel(format!("need the {} nonzero multiples of an odd-order kernel", ell.saturating_sub(1))));
    }
    let half = (ell - 1) / 2;
    for i in 0..half {
        if xs[i] != xs[ell - 2 - i] {
            return Err(Error::BadKernel("x([i]K) ≠ x([ℓ−i]K)".into()));
        }
    }
    let k = |n: i64| a.from_i64_like(n);
    let (mut pi, mut sigma, mut sigma_inv) = (k(1), k(0), k(0));
    for x in &xs[..half] {
        pi = pi * x.clone();
        sigma = sigma + x.clone();
        sigma_inv = sigma_inv + x.inv().ok_or(Error::BadKernel("kernel contains (0, 0)".into()))?;
    }
    Ok(pi.square() * (a.clone() - k(6) * sigma + k(6) * sigma_inv))
}
