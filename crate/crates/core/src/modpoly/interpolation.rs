//! Φ_ℓ^α mod p by interpolation in X over ℓ + 2 sample curves.

use std::collections::BTreeSet;

use rand::Rng;

use crate::arith::{interpolate, Fp2, Poly};
use crate::curves::torsion_basis;
use crate::error::{Error, Result};
use crate::invariants::{EnhancedCurve, InvariantKind};
use crate::isogeny::{enumerate_kernels, velu};

use super::{base_enhanced_curve, check_order, discard, is_suitable_prime, prime_rng, Backend, ModpResult};

/// Walk steps allowed per required sample.
const STEPS_PER_SAMPLE: usize = 64;

/// The ℓ + 1 codomains of the cyclic ℓ-isogenies from `e`, with their invariants.
pub fn isogeny_neighbours<R: Rng + ?Sized>(
    inv: InvariantKind,
    e: &EnhancedCurve<Fp2>,
    ell: u64,
    rng: &mut R,
) -> Result<Vec<(Fp2, EnhancedCurve<Fp2>)>> {
    let alpha = inv.get();
    let (t1, t2) = torsion_basis(&e.curve, ell, rng)?;
    let mut out = Vec::with_capacity(ell as usize + 1);
    for k in enumerate_kernels(&e.curve, &t1, &t2, ell)? {
        let iso = velu(&e.curve, &k, ell)?;
        let pushed = alpha.push(&iso, &e.structure)?;
        let ec = EnhancedCurve::new(iso.codomain.clone(), pushed)?;
        out.push((alpha.value(&ec)?, ec));
    }
    Ok(out)
}

/// Compute Φ_ℓ^α mod p from `Φ(α₀, Y) = Π_k (Y − α_k)` at ℓ + 2 distinct α₀ met on a random ℓ-isogeny walk.
pub fn interpolation_backend(inv: InvariantKind, ell: u64, p: u64, seed: u64) -> Result<ModpResult> {
    check_order(inv, ell, Backend::Interpolation)?;
    if !is_suitable_prime(inv, ell, p) || p <= 24 * (ell + 2) {
        return Err(Error::UnsupportedOrder(format!("p = {p} is not suitable for ℓ = {ell}")));
    }
    run(inv, ell, p, seed).map_err(|e| match e {
        Error::DiscardPrime { .. } => e,
        e if e.is_discardable() => discard(p, &e.to_string()),
        e => e,
    })
}

fn run(inv: InvariantKind, ell: u64, p: u64, seed: u64) -> Result<ModpResult> {
    let mut rng = prime_rng(inv, ell, p, Backend::Interpolation, seed);
    let need = ell as usize + 2;
    let mut cur = base_enhanced_curve(inv, p, &mut rng)?;
    let mut samples = Vec::with_capacity(need);
    let mut seen = BTreeSet::new();
    for _ in 0..STEPS_PER_SAMPLE * need {
        let a0 = inv.get().value(&cur)?;
        let mut nbrs = isogeny_neighbours(inv, &cur, ell, &mut rng)?;
        if seen.insert(a0) {
            let mut values: Vec<Fp2> = nbrs.iter().map(|(a, _)| *a).collect();
            values.sort();
            samples.push((a0, Poly::from_roots(&values, &Fp2::one(p))));
            if samples.len() == need {
                break;
            }
        }
        let i = rng.gen_range(0..nbrs.len());
        cur = nbrs.swap_remove(i).1;
    }
    interpolate_samples(inv, ell, p, &samples)
}

/// Interpolate Φ mod p from samples `(α₀, Φ(α₀, Y))`; needs ℓ + 2 distinct nodes.
pub fn interpolate_samples(inv: InvariantKind, ell: u64, p: u64, samples: &[(Fp2, Poly<Fp2>)]) -> Result<ModpResult> {
    let need = ell as usize + 2;
    let mut seen = BTreeSet::new();
    let nodes: Vec<&(Fp2, Poly<Fp2>)> = samples.iter().filter(|(a, _)| seen.insert(*a)).take(need).collect();
    if nodes.len() < need {
        return Err(Error::InsufficientSamples);
    }
    let zero = Fp2::zero(p);
    let ys = (0..need)
        .map(|j| {
            let pts: Vec<(Fp2, Fp2)> = nodes.iter().map(|(a, f)| (*a, *f.coeff(j).unwrap_or(&zero))).collect();
            interpolate(&pts)
        })
        .collect::<Result<Vec<_>>>()?;
    ModpResult::from_y_coefficients(inv, ell, p, Backend::Interpolation, &ys)
}
