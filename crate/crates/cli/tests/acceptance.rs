//! The ten acceptance criteria, one PASS/FAIL line each; exits nonzero if any fails.

mod common;

use std::collections::BTreeMap;
use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::{classical_phi3, modpoly};
use modpoly_core::arith::{next_suitable_prime, BivarIntPoly, Fp2, Poly, ZOmega};
use modpoly_core::curves::torsion::{random_point_of_order, torsion_basis};
use modpoly_core::curves::*;
use modpoly_core::goodmodels::{hess_isogeny_coefficient, HessDivisionData};
use modpoly_core::invariants::*;
use modpoly_core::isogeny::velu;
use modpoly_core::modpoly::{assemble_crt, height_bound_for, AssemblyConfig, Backend};
use modpoly_core::verify;
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use InvariantKind::{Hessian, Montgomery, J};

/// Criterion 1: allowed distance from the published heights.
const HEIGHT_TOLERANCE: f64 = 0.05;
const PUBLISHED_HEIGHTS: [(u64, f64); 2] = [(2, 3.99), (5, 12.36)];
/// Criterion 5: primes compared per case.
const EQUIVALENCE_PRIMES: usize = 3;
/// Criterion 6: random curves per polynomial, all of which must match.
const ROOT_TRIALS: usize = 20;
/// Criterion 8: sample sizes and ranges.
const SCALAR_MUL_SAMPLES: usize = 50;
const SCALAR_MUL_MAX: usize = 20;
const IDENTITY_MAX_K: usize = 10;
const LEADING_MAX_M: usize = 24;

/// Every polynomial the suite computes; criteria 4 and 6 cover all of them.
const TARGETS: [(InvariantKind, u64); 12] = [
    (J, 3),
    (J, 5),
    (Montgomery, 3),
    (Montgomery, 5),
    (Montgomery, 7),
    (Montgomery, 11),
    (Montgomery, 13),
    (Hessian, 2),
    (Hessian, 5),
    (Hessian, 7),
    (Hessian, 11),
    (Hessian, 13),
];

type Outcome = Result<String, String>;

struct Suite {
    cfg: AssemblyConfig,
    computed: BTreeMap<(InvariantKind, u64), (BivarIntPoly, Vec<u64>)>,
    failures: usize,
}

impl Suite {
    fn phi(&mut self, inv: InvariantKind, ell: u64) -> Result<BivarIntPoly, String> {
        Ok(self.phi_and_primes(inv, ell)?.0)
    }

    fn phi_and_primes(&mut self, inv: InvariantKind, ell: u64) -> Result<(BivarIntPoly, Vec<u64>), String> {
        if let Some(c) = self.computed.get(&(inv, ell)) {
            return Ok(c.clone());
        }
        let a = assemble_crt(inv, ell, &self.cfg).map_err(|e| format!("compute {inv} {ell}: {e}"))?;
        self.computed.insert((inv, ell), (a.poly.clone(), a.primes.clone()));
        Ok((a.poly, a.primes))
    }

    fn criterion(&mut self, n: u32, title: &str, f: impl FnOnce(&mut Suite) -> Outcome) {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| f(self))).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        let (status, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                self.failures += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {n:>2} {status} {title} [{secs:.1} s]: {detail}");
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn published_heights(s: &mut Suite) -> Outcome {
    let mut out = Vec::new();
    for (ell, published) in PUBLISHED_HEIGHTS {
        let h = verify::height(&s.phi(Hessian, ell)?);
        let bound = height_bound_for(Hessian, ell).conjectured();
        ensure((h - published).abs() <= HEIGHT_TOLERANCE, || format!("ℓ={ell}: h={h:.4}, published {published}"))?;
        ensure(h > bound, || format!("ℓ={ell}: h={h:.4} does not exceed B/12={bound:.4}"))?;
        out.push(format!("ℓ={ell} h={h:.4} > {bound:.4}"));
    }
    Ok(out.join(", "))
}

fn height_conjecture(s: &mut Suite) -> Outcome {
    let cases = [(Montgomery, 3), (Montgomery, 5), (Montgomery, 7), (Montgomery, 11), (Montgomery, 13)]
        .into_iter()
        .chain([(Hessian, 7), (Hessian, 11), (Hessian, 13)]);
    let mut out = Vec::new();
    for (inv, ell) in cases {
        let r = verify::check_height_conjecture(&s.phi(inv, ell)?, ell, inv);
        let (h, b) = (r.metrics["height"].as_f64().unwrap(), r.metrics["conjectured_bound"].as_f64().unwrap());
        ensure(r.pass, || format!("{inv} ℓ={ell}: h={h:.4} > {b:.4}"))?;
        out.push(format!("{inv} {ell}: {h:.2}≤{b:.2}"));
    }
    Ok(out.join(", "))
}

fn cusps(s: &mut Suite) -> Outcome {
    let one = ZOmega::from_int(BigInt::from(1));
    for ell in [3, 5, 7] {
        let phi = s.phi(Montgomery, ell)?;
        for z in [2i64, -2] {
            let want = Poly::linear_root(&BigInt::from(z)).pow(ell as u32 + 1, &BigInt::from(1));
            ensure(phi.specialize_x(&BigInt::from(z)) == want, || format!("montgomery ℓ={ell} at {z}"))?;
        }
    }
    for ell in [2, 5, 7] {
        let phi = s.phi(Hessian, ell)?;
        for i in 0..3 {
            let z = ZOmega::scaled_omega_power(3, i);
            let root = ZOmega::scaled_omega_power(3, ell as i64 * i);
            let want = Poly::linear_root(&root).pow(ell as u32 + 1, &one);
            let got = phi.specialize_x_in(&z, |c| ZOmega::from_int(c.clone()));
            ensure(got == want, || format!("hessian ℓ={ell} at 3w^{i}"))?;
        }
    }
    Ok("montgomery ±2 ↦ ±2 for ℓ∈{3,5,7}; hessian 3w^i ↦ 3w^(ℓi) for ℓ∈{2,5,7}".into())
}

fn structure(s: &mut Suite) -> Outcome {
    for (inv, ell) in TARGETS {
        let phi = s.phi(inv, ell)?;
        for r in [verify::check_symmetry(&phi), verify::check_degrees_and_monic(&phi, ell), verify::check_sparsity(&phi, inv, ell)] {
            ensure(r.pass, || format!("{inv} ℓ={ell} {}: {:?}", r.check, r.witness))?;
        }
        let applicable = verify::sparsity_pattern(inv, ell).is_some();
        ensure(applicable == (inv != J), || format!("{inv} ℓ={ell}: sparsity pattern missing"))?;
    }
    Ok(format!("{} polynomials symmetric, monic of degree ℓ+1, with zero sparsity exceptions", TARGETS.len()))
}

fn backend_equivalence(s: &mut Suite) -> Outcome {
    let mut out = Vec::new();
    for (inv, ell) in [(J, 3), (J, 5), (Montgomery, 3), (Montgomery, 5), (Hessian, 5)] {
        let (mut p, mut agreed, mut skipped) = (s.cfg.min_prime, 0, 0);
        while agreed < EQUIVALENCE_PRIMES {
            p = next_suitable_prime(ell, inv.level(), p, 0);
            let d = Backend::Deformation.run(inv, ell, p, s.cfg.seed);
            let i = Backend::Interpolation.run(inv, ell, p, s.cfg.seed);
            match (d, i) {
                (Ok(d), Ok(i)) => {
                    ensure(d.same_polynomial(&i), || format!("{inv} ℓ={ell} differs at p={p}"))?;
                    agreed += 1;
                }
                (Err(e), _) | (_, Err(e)) if e.is_discardable() && skipped < 16 => skipped += 1,
                (Err(e), _) | (_, Err(e)) => return Err(format!("{inv} ℓ={ell} p={p}: {e}")),
            }
        }
        out.push(format!("({inv},{ell})"));
    }
    Ok(format!("{} identical over {EQUIVALENCE_PRIMES} primes each", out.join(" ")))
}

fn fresh_prime_roots(s: &mut Suite) -> Outcome {
    for (inv, ell) in TARGETS {
        let (phi, primes) = s.phi_and_primes(inv, ell)?;
        let q = next_suitable_prime(ell, inv.level(), *primes.iter().max().unwrap(), s.cfg.min_prime);
        ensure(!primes.contains(&q), || format!("{inv} ℓ={ell}: q={q} not fresh"))?;
        let r = verify::check_isogeny_roots(&phi, inv, ell, q, ROOT_TRIALS, s.cfg.seed);
        ensure(r.pass, || format!("{inv} ℓ={ell} q={q}: {:?}", r.witness))?;
    }
    Ok(format!("{} polynomials, {ROOT_TRIALS}/{ROOT_TRIALS} curves each", TARGETS.len()))
}

fn resultant(s: &mut Suite) -> Outcome {
    let j3 = s.phi(J, 3)?;
    ensure(j3 == classical_phi3(), || "j-mode Φ₃ differs from the published table".into())?;
    let r = verify::check_resultant_identity(&s.phi(Montgomery, 3)?, &j3, Montgomery);
    ensure(r.pass, || format!("{:?}", r.witness))?;
    Ok(format!("Res = γ·Φ₃⁶ with {}", serde_json::Value::Object(r.metrics)))
}

fn random_hessian(p: u64, rng: &mut ChaCha8Rng) -> HessianCurve<Fp2> {
    loop {
        if let Ok(h) = HessianCurve::new(Fp2::random(p, rng), Fp2::omega(p)) {
            return h;
        }
    }
}

/// A curve in the supersingular class of `y² = x³ + 6x² + x`, by a walk of 2-isogenies.
fn supersingular_curve(p: u64, rng: &mut ChaCha8Rng) -> Weierstrass<Fp2> {
    let f = |n| Fp2::from_i64(n, p);
    let mut e = Weierstrass::new(f(0), f(6), f(0), f(1), f(0));
    for _ in 0..6 {
        let k = random_point_of_order(&e, 2, rng).unwrap();
        e = velu(&e, &k, 2).unwrap().codomain;
    }
    e
}

fn good_models() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    // t-coordinate scalar multiplication against projective arithmetic
    for p in [23u64, 65579] {
        let mut done = 0;
        while done < SCALAR_MUL_SAMPLES {
            let h = random_hessian(p, &mut rng);
            let e = h.to_weierstrass().map_err(|e| e.to_string())?;
            let pt = h.point_from_weierstrass(&random_point(&e, p, &mut rng).unwrap()).unwrap();
            let Ok(t0) = h.t_coordinate(&pt) else { continue };
            let data = HessDivisionData::new(h.d, SCALAR_MUL_MAX).map_err(|e| e.to_string())?;
            for m in 2..=SCALAR_MUL_MAX {
                let want = h.t_coordinate(&h.mul(m as i64, &pt)).ok();
                ensure(data.t_scalar_mul(m, &t0) == want, || format!("t-multiplication p={p} m={m}"))?;
            }
            done += 1;
        }
    }
    // isogeny coefficient against Vélu and invariant extraction
    for (p, m) in [(1019u64, 2usize), (419, 5), (419, 7)] {
        for _ in 0..5 {
            let e = supersingular_curve(p, &mut rng);
            let (p3, q3) = torsion_basis(&e, 3, &mut rng).unwrap();
            let (p3, q3) = normalise_basis(&e, &p3, &q3, &mut rng).unwrap();
            let h = HessianCurve::new(hess_invariant(&e, &p3, &q3, &Fp2::omega(p)).unwrap(), Fp2::omega(p)).unwrap();
            let ec = HessianInvariant.canonical_curve(h.d).unwrap();
            let k = random_point_of_order(&ec.curve, m as u64, &mut rng).unwrap();
            let mults = ec.curve.multiples(&k, m).unwrap();
            let mut reps: Vec<_> = mults[..m.div_ceil(2) - 1].to_vec();
            if m % 2 == 0 {
                reps.push(mults[m / 2 - 1].clone());
            }
            let ts: Vec<Fp2> = reps.iter().map(|q| h.t_coordinate(&h.point_from_weierstrass(q).unwrap()).unwrap()).collect();
            let formula = hess_isogeny_coefficient(&h.d, &ts, m).map_err(|e| e.to_string())?;
            let iso = velu(&ec.curve, &k, m as u64).unwrap();
            let pushed = HessianInvariant.push(&iso, &ec.structure).unwrap();
            let want = HessianInvariant.value(&EnhancedCurve::new(iso.codomain.clone(), pushed).unwrap()).unwrap();
            ensure(formula == want, || format!("isogeny coefficient p={p} m={m}"))?;
        }
    }
    // exact identities and leading terms in Z[d][t]
    let data = HessDivisionData::generic(LEADING_MAX_M).map_err(|e| e.to_string())?;
    for k in 1..=IDENTITY_MAX_K {
        ensure(data.generic_identities(k) == [true; 4], || format!("integrality identities k={k}"))?;
    }
    for m in 1..=LEADING_MAX_M {
        let (pm, vm) = data.pm_vm(m);
        let lc_p = if m % 2 == 1 { m } else { m / 2 } as i64;
        ensure(vm.lc().is_some_and(|c| *c == modpoly_core::arith::int_poly(&[1])), || format!("V_{m} not monic"))?;
        ensure(pm.lc().is_some_and(|c| *c == modpoly_core::arith::int_poly(&[lc_p])), || format!("lc P_{m} ≠ {lc_p}"))?;
    }
    Ok(format!(
        "t-multiplication m≤{SCALAR_MUL_MAX} on {SCALAR_MUL_SAMPLES} points over F_(23²), F_(65579²); coefficient m∈{{2,5,7}}; identities k≤{IDENTITY_MAX_K}; leading terms m≤{LEADING_MAX_M}"
    ))
}

fn classical(s: &mut Suite) -> Outcome {
    let j3 = s.phi(J, 3)?;
    let want = classical_phi3();
    ensure(j3 == want, || format!("{} terms computed, {} published", j3.len(), want.len()))?;
    Ok(format!("{} coefficients equal", want.len()))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for (inv, ell) in [("montgomery", "5"), ("hessian", "5"), ("j", "3")] {
        let mut files = Vec::new();
        for run in ["a", "b"] {
            let name = format!("{inv}-{ell}-{run}.json");
            let o = modpoly(dir.path(), &["compute", inv, ell, "--seed", "7", "--no-cache", "--out", &name]);
            ensure(o.status.success(), || format!("{inv} {ell}: {o:?}"))?;
            files.push(fs::read(dir.path().join(&name)).map_err(|e| e.to_string())?);
        }
        ensure(files[0] == files[1], || format!("{inv} {ell}: files differ"))?;
        out.push(format!("{inv} {ell} ({} bytes)", files[0].len()));
    }
    Ok(out.join(", "))
}

fn main() {
    let mut s = Suite { cfg: AssemblyConfig::default(), computed: BTreeMap::new(), failures: 0 };
    s.criterion(1, "published heights", published_heights);
    s.criterion(2, "height conjecture", height_conjecture);
    s.criterion(3, "cusp evaluations", cusps);
    s.criterion(4, "structure and sparsity", structure);
    s.criterion(5, "backend equivalence", backend_equivalence);
    s.criterion(6, "fresh-prime isogeny roots", fresh_prime_roots);
    s.criterion(7, "resultant identity", resultant);
    s.criterion(8, "good-model oracles", |_| good_models());
    s.criterion(9, "classical Φ₃", classical);
    s.criterion(10, "determinism", |_| determinism());
    println!("acceptance: {} of 10 criteria failed", s.failures);
    if s.failures > 0 {
        std::process::exit(1);
    }
}
