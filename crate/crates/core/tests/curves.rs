use modpoly_core::arith::{Fp2, Poly, Ring};
use modpoly_core::arith::factor::roots;
use modpoly_core::curves::torsion::{has_exact_order, has_exact_root_order, random_point_of_order};
use modpoly_core::curves::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn f(n: i64, p: u64) -> Fp2 {
    Fp2::from_i64(n, p)
}

fn base(p: u64) -> Weierstrass<Fp2> {
    Weierstrass::new(f(0, p), f(6, p), f(0, p), f(1, p), f(0, p))
}

fn hessian_with_d(p: u64, seed: u64) -> HessianCurve<Fp2> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let d = Fp2::random(p, &mut rng);
        if let Ok(h) = HessianCurve::new(d, Fp2::omega(p)) {
            return h;
        }
    }
}

fn random_hpoint(h: &HessianCurve<Fp2>, rng: &mut ChaCha8Rng) -> HPoint<Fp2> {
    let e = h.to_weierstrass().unwrap();
    let p = h.d.modulus();
    let pt = random_point(&e, p, rng).unwrap();
    h.point_from_weierstrass(&pt).unwrap()
}

#[test]
fn group_order_is_p_plus_one_squared_exponent() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for p in [23u64, 19, 1019, 65579] {
        let e = base(p);
        assert!(e.is_smooth());
        assert_eq!(e.j_invariant().unwrap(), f(287496, p));
        for _ in 0..20 {
            let pt = random_point(&e, p, &mut rng).unwrap();
            assert!(e.contains(&pt));
            assert!(e.mul_u128(p as u128 + 1, &pt).unwrap().is_infinity());
        }
    }
}

#[test]
fn group_law_basics() {
    let p = 1019;
    let e = base(p);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..50 {
        let a = random_point(&e, p, &mut rng).unwrap();
        let b = random_point(&e, p, &mut rng).unwrap();
        let c = random_point(&e, p, &mut rng).unwrap();
        assert_eq!(e.add(&a, &Point::Infinity).unwrap(), a);
        assert!(e.add(&a, &e.neg(&a)).unwrap().is_infinity());
        assert_eq!(e.add(&a, &b).unwrap(), e.add(&b, &a).unwrap());
        let l = e.add(&e.add(&a, &b).unwrap(), &c).unwrap();
        let r = e.add(&a, &e.add(&b, &c).unwrap()).unwrap();
        assert_eq!(l, r);
        assert!(e.contains(&e.add(&a, &b).unwrap()));
        assert!(e.mul(0, &a).unwrap().is_infinity());
        assert_eq!(e.mul(5, &a).unwrap(), e.add(&e.mul(2, &a).unwrap(), &e.mul(3, &a).unwrap()).unwrap());
    }
}

#[test]
fn hessian_translations() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for p in [23u64, 1019] {
        let h = hessian_with_d(p, p);
        let w = h.omega;
        assert!(h.contains(&h.p_point()) && h.contains(&h.q_point()));
        for _ in 0..20 {
            let pt = random_hpoint(&h, &mut rng);
            assert!(h.contains(&pt));
            let plus_q = h.add(&pt, &h.q_point());
            assert!(plus_q.same(&HPoint::new(pt.z, pt.x, pt.y)));
            let plus_p = h.add(&pt, &h.p_point());
            assert!(plus_p.same(&HPoint::new(w * w * pt.x, w * pt.y, pt.z)));
            assert!(h.is_identity(&h.add(&pt, &h.neg(&pt))));
            assert!(h.add(&pt, &h.identity()).same(&pt));
        }
        assert!(h.is_identity(&h.mul(3, &h.p_point())));
        assert!(h.is_identity(&h.mul(3, &h.q_point())));
    }
}

#[test]
fn hessian_to_weierstrass_is_a_homomorphism() {
    let p = 1019;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let h = hessian_with_d(p, 9);
    let e = h.to_weierstrass().unwrap();
    for _ in 0..30 {
        let a = random_hpoint(&h, &mut rng);
        let b = random_hpoint(&h, &mut rng);
        let wa = h.point_to_weierstrass(&a).unwrap();
        let wb = h.point_to_weierstrass(&b).unwrap();
        assert!(e.contains(&wa));
        let sum = h.point_to_weierstrass(&h.add(&a, &b)).unwrap();
        assert_eq!(sum, e.add(&wa, &wb).unwrap());
        assert!(h.point_from_weierstrass(&wa).unwrap().same(&a));
    }
    assert_eq!(h.point_to_weierstrass(&h.identity()).unwrap(), Point::Infinity);
    assert_eq!(h.point_to_weierstrass(&h.p_point()).unwrap(), Point::Affine(f(0, p), f(0, p)));
}

#[test]
fn hessian_j_invariant() {
    for p in [23u64, 1019, 65579] {
        for seed in 0..5 {
            let h = hessian_with_d(p, seed);
            let d3 = h.d.powu(3);
            let j = d3 * (d3 + f(216, p)).powu(3) * (d3 - f(27, p)).powu(3).inverse().unwrap();
            assert_eq!(h.to_weierstrass().unwrap().j_invariant().unwrap(), j);
        }
    }
}

#[test]
fn weil_pairing_on_hessian_basis_is_omega() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for p in [23u64, 1019, 65579] {
        for seed in 0..4 {
            let h = hessian_with_d(p, seed);
            let e = h.to_weierstrass().unwrap();
            let pp = h.point_to_weierstrass(&h.p_point()).unwrap();
            let qq = h.point_to_weierstrass(&h.q_point()).unwrap();
            assert_eq!(weil_pairing(&e, &pp, &qq, 3, &mut rng).unwrap(), Fp2::omega(p));
        }
    }
}

#[test]
fn iota_maps_basis_as_expected() {
    let h = hessian_with_d(1019, 6);
    let (target, iota) = h.iota().unwrap();
    let pd = iota(&h.p_point());
    let qd = iota(&h.q_point());
    assert!(target.contains(&pd));
    assert!(pd.same(&target.p_point()));
    assert!(qd.same(&target.add(&target.p_point(), &target.q_point())));
}

#[test]
fn weil_pairing_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let p = 65579; // p + 1 = 65580 = 2²·3·5·1093
    let e = base(p);
    for n in [3u64, 4, 5, 12] {
        let (t1, t2) = torsion_basis(&e, n, &mut rng).unwrap();
        assert!(has_exact_order(&e, &t1, n).unwrap() && has_exact_order(&e, &t2, n).unwrap());
        let w = weil_pairing(&e, &t1, &t2, n, &mut rng).unwrap();
        assert!(has_exact_root_order(w, n));
        assert_eq!(weil_pairing(&e, &t1, &t1, n, &mut rng).unwrap(), f(1, p));
        assert_eq!(weil_pairing(&e, &t2, &t1, n, &mut rng).unwrap(), w.inverse().unwrap());
        for a in 2..n as i64 {
            let at1 = e.mul(a, &t1).unwrap();
            assert_eq!(weil_pairing(&e, &at1, &t2, n, &mut rng).unwrap(), w.powu(a as u64));
            // dependent points pair trivially
            assert_eq!(weil_pairing(&e, &at1, &t1, n, &mut rng).unwrap(), f(1, p));
        }
    }
    let bad = random_point_of_order(&e, 1093, &mut rng).unwrap();
    assert!(weil_pairing(&e, &bad, &bad, 3, &mut rng).is_err());
}

#[test]
fn torsion_basis_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let e = base(23);
    assert_eq!(torsion_basis(&e, 1, &mut rng).unwrap(), (Point::Infinity, Point::Infinity));
    let (t1, t2) = torsion_basis(&e, 3, &mut rng).unwrap();
    assert!(has_exact_order(&e, &t1, 3).unwrap() && has_exact_order(&e, &t2, 3).unwrap());
    assert_ne!(weil_pairing(&e, &t1, &t2, 3, &mut rng).unwrap(), f(1, 23));
    assert!(torsion_basis(&e, 5, &mut rng).is_err());
}

#[test]
fn three_division_polynomial_of_tate_form() {
    let p = 1019;
    let (a1, a3) = (f(5, p), f(7, p));
    let e = Weierstrass::new(a1, f(0, p), a3, f(0, p), f(0, p));
    let g3 = division_polynomial(&e, 3);
    let expect = Poly::new(vec![f(0, p), f(3, p) * a3 * a3, f(3, p) * a1 * a3, a1 * a1, f(3, p)]);
    assert_eq!(g3, expect);
    assert_eq!(division_polynomial(&e, 1), Poly::constant(f(1, p)));
}

#[test]
fn division_polynomial_roots_are_torsion_x() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (p, l) in [(19u64, 5u64), (1019, 5), (65579, 5), (83, 7), (65579, 3)] {
        let e = base(p);
        let g = division_polynomial(&e, l as usize);
        assert_eq!(g.degree(), Some(((l * l - 1) / 2) as usize));
        assert_eq!(g.gcd(&g.derivative()).degree(), Some(0));
        let mut rs = roots(&g, &mut rng);
        rs.sort();
        let (t1, t2) = torsion_basis(&e, l, &mut rng).unwrap();
        let mut xs = vec![];
        for i in 0..l as i64 {
            for j in 0..l as i64 {
                let pt = e.add(&e.mul(i, &t1).unwrap(), &e.mul(j, &t2).unwrap()).unwrap();
                if let Some(x) = pt.x() {
                    xs.push(*x);
                }
            }
        }
        xs.sort();
        xs.dedup();
        assert_eq!(rs, xs);
    }
}

#[test]
fn even_division_polynomials_vanish_on_torsion() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let p = 65579;
    let e = base(p);
    for n in [4u64, 6, 12] {
        let g = division_polynomial(&e, n as usize);
        let t = random_point_of_order(&e, n, &mut rng).unwrap();
        assert!(g.eval(t.x().unwrap()).is_zero());
        // other point not of order dividing n
        let s = random_point_of_order(&e, 5, &mut rng).unwrap();
        assert!(!g.eval(s.x().unwrap()).is_zero());
    }
}

#[test]
fn tate_normal_form_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let p = 23;
    let (a1, a3) = (f(2, p), f(5, p));
    let e = Weierstrass::new(a1, f(0, p), a3, f(0, p), f(0, p));
    let origin = Point::Affine(f(0, p), f(0, p));
    let (b1, b3, c) = tate_normal_form(&e, &origin).unwrap();
    assert_eq!((b1, b3), (a1, a3));
    assert_eq!(c, CoordinateChange::identity(&f(1, p)));

    for p in [23u64, 1019] {
        let e = base(p);
        for _ in 0..10 {
            let pt = random_point_of_order(&e, 3, &mut rng).unwrap();
            let (a1, a3, c) = tate_normal_form(&e, &pt).unwrap();
            let t = e.transform(&c).unwrap();
            assert_eq!(t, Weierstrass::new(a1, f(0, p), a3, f(0, p), f(0, p)));
            assert_eq!(c.map_point(&pt).unwrap(), Point::Affine(f(0, p), f(0, p)));
            assert_eq!(t.j_invariant().unwrap(), e.j_invariant().unwrap());
            assert!(division_polynomial(&t, 3).eval(&f(0, p)).is_zero());
        }
        let four = random_point_of_order(&e, 4, &mut rng).unwrap();
        assert!(tate_normal_form(&e, &four).is_err());
    }
}

#[test]
fn isomorphism_identity_and_special_j() {
    let p = 1019;
    let e = base(p);
    let c = curve_isomorphism(&e, &e, None).unwrap();
    assert_eq!(e.transform(&c).unwrap(), e);
    // j = 1728 and j = 0 curves with a nontrivial scaling
    for e in [Weierstrass::short(f(3, p), f(0, p)), Weierstrass::short(f(0, p), f(5, p))] {
        let u = f(7, p) + Fp2::i(p);
        let scaled = e.transform(&CoordinateChange { u, r: f(2, p), s: f(3, p), t: f(4, p) }).unwrap();
        let c = curve_isomorphism(&e, &scaled, None).unwrap();
        assert_eq!(e.transform(&c).unwrap(), scaled);
    }
    let other = Weierstrass::short(f(1, p), f(1, p));
    assert!(curve_isomorphism(&e, &other, None).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coordinate_changes_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = 1019;
        let e = base(p);
        let mut u = Fp2::random(p, &mut rng);
        while u.is_zero() { u = Fp2::random(p, &mut rng); }
        let c = CoordinateChange { u, r: Fp2::random(p, &mut rng), s: Fp2::random(p, &mut rng), t: Fp2::random(p, &mut rng) };
        let e2 = e.transform(&c).unwrap();
        prop_assert_eq!(e2.j_invariant().unwrap(), e.j_invariant().unwrap());
        prop_assert_eq!(e2.transform(&c.inverse().unwrap()).unwrap(), e.clone());
        let pt = random_point(&e, p, &mut rng).unwrap();
        let q = random_point(&e, p, &mut rng).unwrap();
        let (ip, iq) = (c.map_point(&pt).unwrap(), c.map_point(&q).unwrap());
        prop_assert!(e2.contains(&ip));
        prop_assert_eq!(c.map_point(&e.add(&pt, &q).unwrap()).unwrap(), e2.add(&ip, &iq).unwrap());
        let found = curve_isomorphism(&e, &e2, None).unwrap();
        prop_assert_eq!(e.transform(&found).unwrap(), e2.clone());
        let d = CoordinateChange { u: Fp2::random(p, &mut rng) + f(1, p), r: f(1, p), s: f(2, p), t: f(3, p) };
        if !d.u.is_zero() {
            let e3 = e2.transform(&d).unwrap();
            prop_assert_eq!(e.transform(&c.then(&d)).unwrap(), e3);
        }
    }

    #[test]
    fn hessian_law_matches_weierstrass(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = hessian_with_d(65579, seed);
        let e = h.to_weierstrass().unwrap();
        let a = random_hpoint(&h, &mut rng);
        let twice = h.point_to_weierstrass(&h.add(&a, &a)).unwrap();
        prop_assert_eq!(twice, e.double(&h.point_to_weierstrass(&a).unwrap()).unwrap());
        let n = (seed % 50) as i64;
        let na = h.point_to_weierstrass(&h.mul(n, &a)).unwrap();
        prop_assert_eq!(na, e.mul(n, &h.point_to_weierstrass(&a).unwrap()).unwrap());
    }
}
