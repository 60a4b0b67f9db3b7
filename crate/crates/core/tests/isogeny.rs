mod common;

use common::{base_curve, classical_phi3, fp2};
use modpoly_core::arith::{Fp2, Ring};
use modpoly_core::curves::torsion::{has_exact_order, random_point_of_order};
use modpoly_core::curves::*;
use modpoly_core::epsring::EpsSeries;
use modpoly_core::isogeny::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn eps_curve(e: &Weierstrass<Fp2>, k: usize) -> Weierstrass<EpsSeries> {
    // deform a4 by ε
    let mut d = e.map(|c| embed(c, k));
    d.a4 = d.a4.clone() + EpsSeries::plus_eps(Fp2::zero(e.one().modulus()), k);
    d
}

#[test]
fn identity_isogeny() {
    let e = base_curve(23);
    let iso = velu(&e, &Point::Infinity, 1).unwrap();
    assert_eq!(iso.codomain, e);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let p = random_point(&e, 23, &mut rng).unwrap();
    assert_eq!(iso.evaluate(&p).unwrap(), p);
}

#[test]
fn bad_kernel_rejected() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let e = base_curve(1019);
    let k = random_point_of_order(&e, 5, &mut rng).unwrap();
    assert!(matches!(velu(&e, &k, 3), Err(modpoly_core::Error::BadKernel(_))));
}

#[test]
fn codomain_j_are_roots_of_classical_phi3() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for p in [23u64, 1019, 65579] {
        let e = base_curve(p);
        let j = e.j_invariant().unwrap();
        let phi = classical_phi3().specialize_x_in(&j, |c| Fp2::from_bigint(c, p));
        let (t1, t2) = torsion_basis(&e, 3, &mut rng).unwrap();
        let ks = enumerate_kernels(&e, &t1, &t2, 3).unwrap();
        assert_eq!(ks.len(), 4);
        let mut prod = modpoly_core::arith::Poly::constant(fp2(1, p));
        for k in &ks {
            let iso = velu(&e, k, 3).unwrap();
            assert!(iso.codomain.is_smooth());
            prod = &prod * &modpoly_core::arith::Poly::linear_root(&iso.codomain.j_invariant().unwrap());
        }
        assert_eq!(prod, phi);
    }
}

#[test]
fn kernels_are_distinct_subgroups() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let p = 65579;
    let e = base_curve(p);
    for ell in [3u64, 5] {
        let (t1, t2) = torsion_basis(&e, ell, &mut rng).unwrap();
        let ks = enumerate_kernels(&e, &t1, &t2, ell).unwrap();
        assert_eq!(ks.len() as u64, ell + 1);
        for i in 0..ks.len() {
            for j in 0..i {
                assert_ne!(weil_pairing(&e, &ks[i], &ks[j], ell, &mut rng).unwrap(), fp2(1, p));
            }
        }
    }
}

#[test]
fn point_map_is_a_homomorphism_with_the_right_kernel() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let p = 65579;
    let e = base_curve(p);
    for ell in [2u64, 3, 4, 5, 12] {
        let k = random_point_of_order(&e, ell, &mut rng).unwrap();
        let iso = velu(&e, &k, ell).unwrap();
        let c = &iso.codomain;
        for m in 0..ell as i64 {
            assert!(iso.evaluate(&e.mul(m, &k).unwrap()).unwrap().is_infinity());
        }
        for _ in 0..10 {
            let a = random_point(&e, p, &mut rng).unwrap();
            let b = random_point(&e, p, &mut rng).unwrap();
            let (fa, fb) = (iso.evaluate(&a).unwrap(), iso.evaluate(&b).unwrap());
            assert!(c.contains(&fa));
            assert_eq!(iso.evaluate(&e.add(&a, &b).unwrap()).unwrap(), c.add(&fa, &fb).unwrap());
        }
        assert!(iso.evaluate(&Point::Infinity).unwrap().is_infinity());
    }
}

#[test]
fn orders_and_pairings_are_transported() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let p = 65579; // 65580 = 4·3·5·1093
    let e = base_curve(p);
    let k = random_point_of_order(&e, 5, &mut rng).unwrap();
    let iso = velu(&e, &k, 5).unwrap();
    for n in [3u64, 4, 12] {
        let (t1, t2) = torsion_basis(&e, n, &mut rng).unwrap();
        let (f1, f2) = (iso.evaluate(&t1).unwrap(), iso.evaluate(&t2).unwrap());
        assert!(has_exact_order(&iso.codomain, &f1, n).unwrap());
        let before = weil_pairing(&e, &t1, &t2, n, &mut rng).unwrap();
        let after = weil_pairing(&iso.codomain, &f1, &f2, n, &mut rng).unwrap();
        assert_eq!(after, before.powu(5));
    }
}

#[test]
fn dual_composition_is_multiplication() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (p, ell) in [(1019u64, 3u64), (1019, 5), (65579, 5)] {
        let e = base_curve(p);
        let (t1, t2) = torsion_basis(&e, ell, &mut rng).unwrap();
        let phi = velu(&e, &t1, ell).unwrap();
        let dual = velu(&phi.codomain, &phi.evaluate(&t2).unwrap(), ell).unwrap();
        let back = curve_isomorphism(&dual.codomain, &e, None).unwrap();
        for _ in 0..10 {
            let a = random_point(&e, p, &mut rng).unwrap();
            let img = back.map_point(&dual.evaluate(&phi.evaluate(&a).unwrap()).unwrap()).unwrap();
            assert_eq!(img.x(), e.mul(ell as i64, &a).unwrap().x());
        }
    }
}

#[test]
fn lifted_kernel_and_velu_over_r() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for (p, ell) in [(1019u64, 3u64), (1019, 5), (65579, 5), (83, 7)] {
        let e = base_curve(p);
        let k = random_point_of_order(&e, ell, &mut rng).unwrap();
        for prec in [1usize, 2, ell as usize + 2] {
            let er = eps_curve(&e, prec);
            let kt = lift_kernel_generator(&er, &k, ell).unwrap();
            assert!(er.contains(&kt));
            assert_eq!(kt.map(|c| c.reduce()), k);
            assert!(er.mul(ell as i64, &kt).unwrap().is_infinity());
            let iso_r = velu(&er, &kt, ell).unwrap();
            let iso = velu(&e, &k, ell).unwrap();
            assert_eq!(iso_r.codomain.map(|c| c.reduce()), iso.codomain);
            assert!(iso_r.codomain.is_smooth());
        }
    }
}
