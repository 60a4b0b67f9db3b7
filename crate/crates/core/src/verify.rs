//! Executable checks of the structural properties and conjectures on computed Φ.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::arith::factor::factor_degrees;
use crate::arith::primes::is_prime_u64;
use crate::arith::resultant::det_field;
use crate::arith::{interpolate, psi, BivarIntPoly, CrtValue, Field, Fp, Fp2, Poly, ZOmega};
use crate::error::{Error, Result};
use crate::invariants::InvariantKind;
use crate::modpoly::{base_enhanced_curve, height_bound_for, isogeny_neighbours};

/// Outcome of one check; a failure carries a finite witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub pass: bool,
    pub witness: Option<Value>,
    pub metrics: Map<String, Value>,
}

impl CheckReport {
    fn new(check: CheckName, witness: Option<Value>) -> Self {
        CheckReport { check: check.to_string(), pass: witness.is_none(), witness, metrics: Map::new() }
    }

    fn metric(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.metrics.insert(key.to_string(), v.into());
        self
    }

    /// Whether the known results predict a pass (only the height check can predict a failure).
    pub fn expected_pass(&self) -> bool {
        self.metrics.get("expected_pass").and_then(Value::as_bool).unwrap_or(true)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckName {
    Symmetry,
    Degrees,
    Sparsity,
    IsogenyRoots,
    Resultant,
    Height,
    Cusp,
    Irreducibility,
}

impl CheckName {
    pub const ALL: [CheckName; 8] = [
        CheckName::Symmetry,
        CheckName::Degrees,
        CheckName::Sparsity,
        CheckName::IsogenyRoots,
        CheckName::Resultant,
        CheckName::Height,
        CheckName::Cusp,
        CheckName::Irreducibility,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckName::Symmetry => "symmetry",
            CheckName::Degrees => "degrees",
            CheckName::Sparsity => "sparsity",
            CheckName::IsogenyRoots => "isogeny-roots",
            CheckName::Resultant => "resultant",
            CheckName::Height => "height",
            CheckName::Cusp => "cusp",
            CheckName::Irreducibility => "irreducibility",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

/// `Φ(X, Y) = Φ(Y, X)`.
pub fn check_symmetry(phi: &BivarIntPoly) -> CheckReport {
    let bad = phi.terms().find(|(&(i, j), c)| phi.get(j, i) != **c).map(|(&(i, j), _)| json!([i, j]));
    CheckReport::new(CheckName::Symmetry, bad)
}

/// Degree ℓ + 1 in both variables and monic in Y.
pub fn check_degrees_and_monic(phi: &BivarIntPoly, ell: u64) -> CheckReport {
    let n = psi(ell) as u32;
    let (dx, dy) = (phi.deg_x(), phi.deg_y());
    let lead: Vec<_> = phi.terms().filter(|(&(_, j), _)| Some(j) == dy).map(|(&(i, _), c)| (i, c.clone())).collect();
    let monic = lead.len() == 1 && lead[0].0 == 0 && lead[0].1 == BigInt::from(1);
    let witness = (dx != Some(n) || dy != Some(n) || !monic).then(|| json!({"deg_x": dx, "deg_y": dy, "monic": monic}));
    CheckReport::new(CheckName::Degrees, witness).metric("deg_x", json!(dx)).metric("deg_y", json!(dy))
}

/// Which `(i, j)` may carry a nonzero coefficient; `None` when the invariant has no pattern.
pub fn sparsity_pattern(inv: InvariantKind, ell: u64) -> Option<Box<dyn Fn(u32, u32) -> bool>> {
    match inv {
        InvariantKind::J => None,
        InvariantKind::Montgomery => Some(Box::new(|i, j| (i + j) % 2 == 0)),
        InvariantKind::Hessian if ell % 3 == 1 => {
            let s = psi(ell) % 3;
            Some(Box::new(move |i, j| (u64::from(i + j)) % 3 == s))
        }
        InvariantKind::Hessian => Some(Box::new(|i, j| i % 3 == j % 3)),
    }
}

/// The congruence pattern on exponents of nonzero coefficients.
pub fn check_sparsity(phi: &BivarIntPoly, inv: InvariantKind, ell: u64) -> CheckReport {
    let Some(allowed) = sparsity_pattern(inv, ell) else {
        return CheckReport::new(CheckName::Sparsity, None).metric("applicable", false);
    };
    let bad: Vec<Value> = phi.terms().filter(|(&(i, j), _)| !allowed(i, j)).map(|(&(i, j), _)| json!([i, j])).collect();
    let count = bad.len();
    let witness = (!bad.is_empty()).then(|| Value::Array(bad.into_iter().take(10).collect()));
    CheckReport::new(CheckName::Sparsity, witness).metric("exceptions", count)
}

/// On random enhanced curves over F_{q²}, `Φ(α₀, Y) ≡ Π_k (Y − α_k) (mod q)` over all ℓ + 1 neighbours.
///
/// The curves are reached by random ℓ-isogeny walks from the base curve.
pub fn check_isogeny_roots(phi: &BivarIntPoly, inv: InvariantKind, ell: u64, q: u64, trials: usize, seed: u64) -> CheckReport {
    let run = || -> Result<Option<Value>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ q);
        for t in 0..trials {
            let mut cur = base_enhanced_curve(inv, q, &mut rng)?;
            for _ in 0..rng.gen_range(0..=2 * ell as usize + 4) {
                let mut nbrs = isogeny_neighbours(inv, &cur, ell, &mut rng)?;
                let i = rng.gen_range(0..nbrs.len());
                cur = nbrs.swap_remove(i).1;
            }
            let a0 = inv.get().value(&cur)?;
            let mut values: Vec<Fp2> = isogeny_neighbours(inv, &cur, ell, &mut rng)?.into_iter().map(|(a, _)| a).collect();
            values.sort();
            let want = Poly::from_roots(&values, &Fp2::one(q));
            let got = phi.specialize_x_in(&a0, |c| Fp2::from_bigint(c, q));
            if got != want {
                return Ok(Some(json!({"trial": t, "alpha0": a0.to_string()})));
            }
        }
        Ok(None)
    };
    match run() {
        Ok(w) => CheckReport::new(CheckName::IsogenyRoots, w).metric("prime", q).metric("trials", trials),
        Err(e) => CheckReport::new(CheckName::IsogenyRoots, Some(json!({"error": e.to_string()}))).metric("prime", q),
    }
}

/// `res_Z(res_W(F(W, X), Φ_α(W, Z)), F(Z, Y)) = γ·Φ(X, Y)^{deg J₁}` with `F(W, X) = J₁(W) − J₀(W)X`.
///
/// The double resultant is computed modulo primes below 2⁶¹ until the product exceeds twice an
/// a priori bound on its coefficients, then lifted to Z; γ is read off a leading coefficient.
pub fn check_resultant_identity(phi_alpha: &BivarIntPoly, phi_classical: &BivarIntPoly, inv: InvariantKind) -> CheckReport {
    let name = CheckName::Resultant;
    let (j1, j0) = (inv.get().j1(), inv.get().j0());
    let d = j1.degree().unwrap_or(0).max(j0.degree().unwrap_or(0));
    // F as a polynomial in W whose coefficients are linear in X
    let f_w: Vec<[BigInt; 2]> = (0..=d)
        .map(|i| [j1.coeff(i).cloned().unwrap_or_default(), -j0.coeff(i).cloned().unwrap_or_default()])
        .collect();
    let (Some(n), Some(nz)) = (phi_alpha.deg_x(), phi_alpha.deg_y()) else {
        return CheckReport::new(name, Some(json!("zero polynomial")));
    };
    let (n, nz) = (n as usize, nz as usize);
    let deg_r_z = d * nz;
    let deg_g_x = d * (n.max(1));
    let deg_g_y = deg_r_z;

    // ln of the 1-norm, by log-sum-exp
    let norm = |it: &mut dyn Iterator<Item = BigInt>| it.map(|c| ln_abs(&c)).fold(f64::NEG_INFINITY, log_add);
    let ln_f = norm(&mut f_w.iter().flat_map(|c| c.iter().filter(|x| !x.is_zero()).cloned()));
    let ln_phi = norm(&mut phi_alpha.terms().map(|(_, c)| c.clone()));
    let ln_r = n as f64 * ln_f + d as f64 * ln_phi;
    let ln_bound = d as f64 * ln_r + deg_r_z as f64 * ln_f + std::f64::consts::LN_2;

    let mut cells: Vec<CrtValue> = vec![CrtValue::new(); (deg_g_x + 1) * (deg_g_y + 1)];
    let mut q = (1u64 << 61) - 1;
    let mut ln_m = 0.0;
    while ln_m <= ln_bound {
        while !is_prime_u64(q) {
            q -= 2;
        }
        let grid = match double_resultant_mod(&f_w, phi_alpha, n, q, deg_r_z, deg_g_x, deg_g_y) {
            Ok(g) => g,
            Err(e) => return CheckReport::new(name, Some(json!({"error": e.to_string(), "prime": q}))),
        };
        let qb = BigInt::from(q);
        for (cell, v) in cells.iter_mut().zip(grid) {
            cell.push(&BigInt::from(v), &qb).expect("distinct primes");
        }
        ln_m += (q as f64).ln();
        q -= 2;
    }
    let mut g = BivarIntPoly::new();
    for (k, c) in cells.iter().enumerate() {
        g.set((k / (deg_g_y + 1)) as u32, (k % (deg_g_y + 1)) as u32, c.symmetric());
    }
    let target = phi_classical.pow(d as u32);
    let Some((&(li, lj), lc)) = target.terms().last() else {
        return CheckReport::new(name, Some(json!("classical polynomial is zero")));
    };
    let num = g.get(li, lj);
    let report = |w: Option<Value>, gamma: Option<&BigInt>| {
        CheckReport::new(name, w)
            .metric("deg_y", json!(g.deg_y()))
            .metric("exponent", d)
            .metric("gamma", json!(gamma.map(|x| x.to_string())))
    };
    if num.is_zero() || !(&num % lc).is_zero() {
        return report(Some(json!({"coefficient": [li, lj], "value": num.to_string()})), None);
    }
    let gamma = &num / lc;
    let bad = g
        .terms()
        .map(|(k, _)| *k)
        .chain(target.terms().map(|(k, _)| *k))
        .find(|&(i, j)| g.get(i, j) != &gamma * target.get(i, j));
    report(bad.map(|(i, j)| json!([i, j])), Some(&gamma))
}

fn log_add(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    let (hi, lo) = if a > b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}

/// The double resultant modulo `q` as a dense row-major grid in (X, Y).
fn double_resultant_mod(
    f_w: &[[BigInt; 2]],
    phi: &BivarIntPoly,
    n: usize,
    q: u64,
    deg_r_z: usize,
    deg_g_x: usize,
    deg_g_y: usize,
) -> Result<Vec<u64>> {
    let fp = |c: &BigInt| Fp::from_bigint(c, q);
    let node = |k: usize| Fp::new(k as u64 + 1, q);
    // Φ(W, z) for each z node, as W-coefficient vectors of formal degree n
    let phi_t = phi.transpose();
    let phi_at_z: Vec<Vec<Fp>> = (0..=deg_r_z)
        .map(|k| {
            let p = phi_t.specialize_x_in(&node(k), fp);
            (0..=n).map(|i| p.coeff(i).copied().unwrap_or(Fp::new(0, q))).collect()
        })
        .collect();
    let f_at = |x: Fp| -> Vec<Fp> { f_w.iter().map(|[a, b]| fp(a) + fp(b) * x).collect() };
    let mut grid = vec![vec![Fp::new(0, q); deg_g_y + 1]; deg_g_x + 1];
    let mut by_x = Vec::with_capacity(deg_g_x + 1);
    for xi in 0..=deg_g_x {
        let x = node(xi);
        let fx = f_at(x);
        // R(x, Z) by interpolation in Z
        let pts: Vec<(Fp, Fp)> = (0..=deg_r_z).map(|k| (node(k), formal_resultant(&fx, &phi_at_z[k]))).collect();
        let r = interpolate(&pts)?;
        let r: Vec<Fp> = (0..=deg_r_z).map(|i| r.coeff(i).copied().unwrap_or(Fp::new(0, q))).collect();
        let gy: Vec<(Fp, Fp)> = (0..=deg_g_y).map(|yi| (node(yi), formal_resultant(&r, &f_at(node(yi))))).collect();
        let g = interpolate(&gy)?;
        by_x.push((x, g));
    }
    for j in 0..=deg_g_y {
        let pts: Vec<(Fp, Fp)> = by_x.iter().map(|(x, g)| (*x, g.coeff(j).copied().unwrap_or(Fp::new(0, q)))).collect();
        let col = interpolate(&pts)?;
        for i in 0..=deg_g_x {
            grid[i][j] = col.coeff(i).copied().unwrap_or(Fp::new(0, q));
        }
    }
    Ok(grid.into_iter().flatten().map(|c| c.value()).collect())
}

/// Sylvester resultant with formal degrees `f.len() − 1` and `g.len() − 1` (coefficients low to high).
fn formal_resultant<T: Field>(f: &[T], g: &[T]) -> T {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let z = f[0].zero_like();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for r in 0..n {
        let mut row = vec![z.clone(); size];
        for (k, c) in f.iter().rev().enumerate() {
            row[r + k] = c.clone();
        }
        rows.push(row);
    }
    for r in 0..m {
        let mut row = vec![z.clone(); size];
        for (k, c) in g.iter().rev().enumerate() {
            row[r + k] = c.clone();
        }
        rows.push(row);
    }
    det_field(rows)
}

/// `ln |c|` for a nonzero integer, accurate to double precision.
pub fn ln_abs(c: &BigInt) -> f64 {
    let bits = c.bits();
    if bits <= 1000 {
        return c.abs().to_string().parse::<f64>().expect("decimal").ln();
    }
    let shift = bits - 64;
    let top: BigInt = c.abs() >> shift;
    top.to_string().parse::<f64>().expect("decimal").ln() + shift as f64 * std::f64::consts::LN_2
}

/// Logarithmic height `max ln |c|` over nonzero coefficients (0 for the zero polynomial).
pub fn height(phi: &BivarIntPoly) -> f64 {
    phi.terms().map(|(_, c)| ln_abs(c)).fold(0.0, f64::max)
}

/// `h(Φ) ≤ B_ℓ / deg J₁`; known to fail for the Hessian coefficient at ℓ ∈ {2, 5}.
pub fn check_height_conjecture(phi: &BivarIntPoly, ell: u64, inv: InvariantKind) -> CheckReport {
    let h = height(phi);
    let b = height_bound_for(inv, ell);
    let holds = h <= b.conjectured();
    let expected = !(inv == InvariantKind::Hessian && (ell == 2 || ell == 5));
    let witness = (!holds).then(|| json!({"height": h, "bound": b.conjectured()}));
    CheckReport::new(CheckName::Height, witness)
        .metric("height", h)
        .metric("b_ell", b.b)
        .metric("divisor", b.divisor)
        .metric("conjectured_bound", b.conjectured())
        .metric("expected_pass", expected)
}

/// `Φ(z, Y) = (Y − σ(z))^{ℓ+1}` at the cusp values: `±2 ↦ ±2` (Montgomery), `3ω^i ↦ 3ω^{ℓi}` (Hessian).
pub fn check_cusp_conjecture(phi: &BivarIntPoly, inv: InvariantKind, ell: u64) -> CheckReport {
    let e = psi(ell) as u32;
    let mut bad = None;
    match inv {
        InvariantKind::J => return CheckReport::new(CheckName::Cusp, None).metric("applicable", false),
        InvariantKind::Montgomery => {
            for z in [2i64, -2] {
                let zb = BigInt::from(z);
                let want = Poly::linear_root(&zb).pow(e, &BigInt::from(1));
                if phi.specialize_x(&zb) != want {
                    bad = Some(json!({"z": z}));
                    break;
                }
            }
        }
        InvariantKind::Hessian => {
            for i in 0..3i64 {
                let z = ZOmega::scaled_omega_power(3, i);
                let s = ZOmega::scaled_omega_power(3, ell as i64 * i);
                let want = Poly::linear_root(&s).pow(e, &ZOmega::from_int(BigInt::from(1)));
                if phi.specialize_x_in(&z, |c| ZOmega::from_int(c.clone())) != want {
                    bad = Some(json!({"z": z.to_string()}));
                    break;
                }
            }
        }
    }
    CheckReport::new(CheckName::Cusp, bad)
}

/// Heuristic irreducibility in Y over Q(X).
///
/// A factor of degree s over Q(X) forces every specialisation `Φ(x₀, Y) mod q` to have
/// factors whose degrees sum to s. The check factors specialisations at `trials` random
/// points modulo each of ten primes and passes when no proper degree s is common to all.
pub fn check_irreducibility_heuristic(phi: &BivarIntPoly, ell: u64, trials: usize, seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = phi.deg_y().unwrap_or(0) as usize;
    let mut common: BTreeSet<usize> = (1..n).collect();
    let mut shapes = BTreeSet::new();
    let mut q = 1000 + 100 * ell;
    for _ in 0..10 {
        q += 1;
        while !is_prime_u64(q) {
            q += 1;
        }
        for _ in 0..trials {
            let x0 = Fp::new(rng.gen_range(0..q), q);
            let f = phi.specialize_x_in(&x0, |c| Fp::from_bigint(c, q));
            if f.degree() != Some(n) {
                continue;
            }
            let degs = factor_degrees(&f);
            common.retain(|&s| subset_sums(&degs).contains(&s));
            shapes.insert(degs);
        }
    }
    let witness = (!common.is_empty()).then(|| json!({"common_factor_degrees": common.iter().collect::<Vec<_>>()}));
    CheckReport::new(CheckName::Irreducibility, witness)
        .metric("heuristic", true)
        .metric("shapes", json!(shapes.iter().collect::<Vec<_>>()))
}

fn subset_sums(degs: &[usize]) -> BTreeSet<usize> {
    let mut out = BTreeSet::from([0]);
    for &d in degs {
        let next: Vec<usize> = out.iter().map(|s| s + d).collect();
        out.extend(next);
    }
    out
}
