//! Φ_ℓ^α mod p from one supersingular curve and its deformation over R = F_{p²}[ε]/(ε^{ℓ+2}).

use crate::arith::{Fp2, Poly, Ring};
use crate::curves::{torsion_basis, Weierstrass};
use crate::epsring::{newton_lift_root, EpsSeries};
use crate::error::{Error, Result};
use crate::invariants::{EnhancedCurve, InvariantKind};
use crate::isogeny::{embed, enumerate_kernels, lift_kernel_generator, velu};

use super::{base_enhanced_curve, check_order, discard, is_suitable_prime, prime_rng, Backend, ModpResult};

/// Compute Φ_ℓ^α mod p by lifting the ℓ + 1 neighbours of the base curve to R.
///
/// Degenerate primes yield `DiscardPrime`.
pub fn deformation_backend(inv: InvariantKind, ell: u64, p: u64, seed: u64) -> Result<ModpResult> {
    check_order(inv, ell, Backend::Deformation)?;
    if !is_suitable_prime(inv, ell, p) {
        return Err(Error::UnsupportedOrder(format!("p = {p} is not suitable for ℓ = {ell}")));
    }
    run(inv, ell, p, seed).map_err(|e| match e {
        Error::DiscardPrime { .. } => e,
        e if e.is_discardable() => discard(p, &e.to_string()),
        e => e,
    })
}

fn run(inv: InvariantKind, ell: u64, p: u64, seed: u64) -> Result<ModpResult> {
    let mut rng = prime_rng(inv, ell, p, Backend::Deformation, seed);
    let k = ell as usize + 2;
    let alpha = inv.get();
    let base = base_enhanced_curve(inv, p, &mut rng)?;
    let a = alpha.value(&base)?;

    // move to a short model; the level structure follows
    let change = base.curve.to_short_change()?;
    let base = base.transform(&change)?;
    let (a4, a6) = (base.curve.a4, base.curve.a6);

    // ã = a + ε and the deformation ỹ² = x³ + Ãx + B with j(Ẽ) = j_α(ã)
    let at = EpsSeries::plus_eps(a, k);
    let jt = inv.j_alpha(&at)?;
    let b = embed(&a6, k);
    let c = |n: i64| jt.from_i64_like(n);
    let f = Poly::new(vec![-(c(27) * jt.clone() * b.square()), c(0), c(0), c(6912) - c(4) * jt.clone()]);
    let a4t = newton_lift_root(&f, a4)?;
    let et = Weierstrass::short(a4t, b);

    let (t1, t2) = torsion_basis(&base.curve, ell, &mut rng)?;
    let kernels = enumerate_kernels(&base.curve, &t1, &t2, ell)?;
    let (j1, j0) = (alpha.j1(), alpha.j0());
    let mut roots = Vec::with_capacity(kernels.len());
    for kp in &kernels {
        let iso = velu(&base.curve, kp, ell)?;
        let pushed = alpha.push(&iso, &base.structure)?;
        let ak = alpha.value(&EnhancedCurve::new(iso.codomain.clone(), pushed)?)?;
        let kt = lift_kernel_generator(&et, kp, ell)?;
        let jk = velu(&et, &kt, ell)?.codomain.j_invariant()?;
        let lift = |q: &Poly<num_bigint::BigInt>| q.map(|c| embed(&Fp2::from_bigint(c, p), k));
        let g = &lift(&j1) - &lift(&j0).scale(&jk);
        roots.push(newton_lift_root(&g, ak)?);
    }
    roots.sort_by_key(|r| r.coeffs().iter().map(|c| c.key()).collect::<Vec<_>>());
    let one = EpsSeries::constant(Fp2::one(p), k);
    let phi = Poly::from_roots(&roots, &one);

    // Φ(a + ε, Y) = φ(Y), so Φ(X, Y) = φ(Y)|_{ε = X − a}
    let ys: Vec<Poly<Fp2>> = phi
        .coeffs()
        .iter()
        .map(|c| Poly::new(c.coeffs().to_vec()).taylor_shift(&-a))
        .collect();
    ModpResult::from_y_coefficients(inv, ell, p, Backend::Deformation, &ys)
}
