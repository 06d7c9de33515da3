mod common;

use std::sync::Arc;

use common::*;
use ore_loc::localization::{
    embed, equality_forms, frac_add, frac_equals, frac_mul, frac_one, frac_zero, omega_map, unit_invert, Fraction,
    LocCtx, UnitInverse,
};
use ore_loc::ore::OreSetDesc;
use ore_loc::rings::rat;
use ore_loc::saturation::lsat_member;
use ore_loc::{Budget, Elem, RingId, Tri, WeylOp};
use proptest::prelude::*;

fn z23() -> Arc<LocCtx> {
    LocCtx::new(OreSetDesc::monoid(RingId::Z, vec![z(2), z(3)]).unwrap(), Budget::default()).unwrap()
}

fn theta0() -> Arc<LocCtx> {
    LocCtx::new(OreSetDesc::euler(rat(0, 1)), Budget::default()).unwrap()
}

fn int_frac() -> impl Strategy<Value = (u32, u32, i64)> {
    (0u32..4, 0u32..3, -30i64..30)
}

fn mk_int(c: &Arc<LocCtx>, (i, j, n): (u32, u32, i64)) -> Fraction {
    Fraction::new(c, z(2).pow(i).mul(&z(3).pow(j)).unwrap(), z(n)).unwrap()
}

fn euler_den() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=2, 0..=2)
}

fn mk_weyl(c: &Arc<LocCtx>, shifts: &[i64], num: WeylOp) -> Fraction {
    let den = shifts.iter().fold(WeylOp::one(), |acc, k| &acc * &WeylOp::theta_shift(&rat(*k, 1)));
    Fraction::new(c, Elem::Weyl(den), Elem::Weyl(num)).unwrap()
}

fn eq(a: &Fraction, b: &Fraction) -> bool {
    frac_equals(a, b).unwrap()
}

fn ring_axioms(a: &Fraction, b: &Fraction, c: &Fraction) -> Result<(), TestCaseError> {
    let add = |x: &Fraction, y: &Fraction| frac_add(x, y).unwrap();
    let mul = |x: &Fraction, y: &Fraction| frac_mul(x, y).unwrap();
    let ctx = a.ctx();
    prop_assert!(eq(&add(&add(a, b), c), &add(a, &add(b, c))));
    prop_assert!(eq(&mul(&mul(a, b), c), &mul(a, &mul(b, c))));
    prop_assert!(eq(&add(a, b), &add(b, a)));
    prop_assert!(eq(&mul(a, &add(b, c)), &add(&mul(a, b), &mul(a, c))));
    prop_assert!(eq(&mul(&add(a, b), c), &add(&mul(a, c), &mul(b, c))));
    prop_assert!(eq(&add(a, &frac_zero(ctx)), a));
    prop_assert!(eq(&mul(a, &frac_one(ctx)), a));
    prop_assert!(eq(&mul(&frac_one(ctx), a), a));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn integer_fractions_form_a_ring(a in int_frac(), b in int_frac(), c in int_frac()) {
        let ctx = z23();
        ring_axioms(&mk_int(&ctx, a), &mk_int(&ctx, b), &mk_int(&ctx, c))?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn euler_fractions_form_a_ring(
        (da, na) in (euler_den(), weyl_op(2)),
        (db, nb) in (euler_den(), weyl_op(2)),
        (dc, nc) in (euler_den(), weyl_op(2)),
    ) {
        let ctx = theta0();
        ring_axioms(&mk_weyl(&ctx, &da, na), &mk_weyl(&ctx, &db, nb), &mk_weyl(&ctx, &dc, nc))?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn zero_one_and_expansion(s in euler_den(), r in weyl_op(3), wk in -2i64..=2) {
        let ctx = theta0();
        let a = mk_weyl(&ctx, &s, r.clone());
        prop_assert_eq!(eq(&a, &frac_zero(&ctx)), r.is_zero());
        let den = a.den().as_weyl().unwrap().clone();
        prop_assert_eq!(eq(&a, &frac_one(&ctx)), den == r);
        // (ws, wr) with w ∈ S
        let wop = WeylOp::theta_shift(&rat(wk, 1));
        let b = Fraction::new(&ctx, Elem::Weyl(&wop * &den), Elem::Weyl(&wop * &r)).unwrap();
        prop_assert!(eq(&a, &b));
    }

    #[test]
    fn equality_forms_agree(
        (s, r) in (euler_den(), nonzero_weyl_op(2)),
        wk in prop::collection::vec(-2i64..=2, 1..=2),
        unequal in any::<bool>(),
    ) {
        let ctx = theta0();
        let a = mk_weyl(&ctx, &s, r.clone());
        let wop = wk.iter().fold(WeylOp::one(), |acc, k| &acc * &WeylOp::theta_shift(&rat(*k, 1)));
        let den = a.den().as_weyl().unwrap();
        let mut num = &wop * &r;
        if unequal {
            num = &num + &(&wop * den);
        }
        let b = Fraction::new(&ctx, Elem::Weyl(&wop * den), Elem::Weyl(num)).unwrap();
        let f = equality_forms(&a, &b).unwrap();
        let expected = !unequal;
        prop_assert_eq!(eq(&a, &b), expected);
        prop_assert_eq!(f.tilde, expected);
        prop_assert_eq!(f.all_pairs, expected);
        prop_assert_eq!(f.some_pair, expected);
        prop_assert_eq!(f.common_multiple, expected);
        prop_assert_eq!(f.saturated, if expected { Tri::Yes } else { Tri::No });
    }

    #[test]
    fn units_are_saturated(a in int_frac(), b in int_frac()) {
        let ctx = LocCtx::new(OreSetDesc::monoid(RingId::Z, vec![z(6)]).unwrap(), Budget::default()).unwrap();
        let (fa, fb) = (mk_six(&ctx, a), mk_six(&ctx, b));
        prop_assume!(!fa.is_zero() && !fb.is_zero());
        let ab = frac_mul(&fa, &fb).unwrap();
        if matches!(unit_invert(&ab).unwrap(), UnitInverse::Inverse(_)) {
            prop_assert!(matches!(unit_invert(&fa).unwrap(), UnitInverse::Inverse(_)));
            prop_assert!(matches!(unit_invert(&fb).unwrap(), UnitInverse::Inverse(_)));
        }
    }
}

fn mk_six(c: &Arc<LocCtx>, (i, _, n): (u32, u32, i64)) -> Fraction {
    Fraction::new(c, z(6).pow(i), z(n)).unwrap()
}

/// Sample fractions for an ω check: `(g^i, n)`.
fn omega_suite(
    s: Arc<LocCtx>,
    t: Arc<LocCtx>,
    gen: &Elem,
    witness_sets: [&[(Elem, Elem)]; 2],
    samples: &[(u32, Elem)],
) {
    let f = |i: u32, n: &Elem| Fraction::new(&s, gen.pow(i), n.clone()).unwrap();
    let om = |a: &Fraction, sup: &[(Elem, Elem)]| omega_map(&t, a, sup).unwrap();
    for (k, (i, n)) in samples.iter().enumerate() {
        let a = f(*i, n);
        let (j, m) = &samples[(k * 7 + 3) % samples.len()];
        let b = f(*j, m);
        let sup = witness_sets[0];
        assert!(frac_equals(&om(&frac_add(&a, &b).unwrap(), sup), &frac_add(&om(&a, sup), &om(&b, sup)).unwrap()).unwrap());
        assert!(frac_equals(&om(&frac_mul(&a, &b).unwrap(), sup), &frac_mul(&om(&a, sup), &om(&b, sup)).unwrap()).unwrap());
        assert_eq!(frac_equals(&a, &b).unwrap(), frac_equals(&om(&a, sup), &om(&b, sup)).unwrap());
        assert!(frac_equals(&om(&embed(&s, n).unwrap(), sup), &embed(&t, n).unwrap()).unwrap());
        assert!(frac_equals(&om(&a, witness_sets[0]), &om(&a, witness_sets[1])).unwrap());
    }
}

#[test]
fn omega_over_integers() {
    let s = LocCtx::new(OreSetDesc::monoid(RingId::Z, vec![z(4)]).unwrap(), Budget::default()).unwrap();
    let t = LocCtx::new(OreSetDesc::monoid(RingId::Z, vec![z(2)]).unwrap(), Budget::default()).unwrap();
    let samples: Vec<(u32, Elem)> = (0..200).map(|k| ((k % 4) as u32, z((k as i64 * 37) % 41 - 20))).collect();
    omega_suite(s, t, &z(4), [&[], &[(z(4), z(2))]], &samples);
}

#[test]
fn omega_over_polynomials() {
    let qx = RingId::qx();
    let s = LocCtx::new(OreSetDesc::monoid(qx.clone(), vec![qe("x^2")]).unwrap(), Budget::default()).unwrap();
    let t = LocCtx::new(OreSetDesc::monoid(qx.clone(), vec![qe("x")]).unwrap(), Budget::default()).unwrap();
    let nums = ["1", "x", "x + 1", "x^2 - 3", "0", "2*x^3 + x", "-x + 5"];
    let samples: Vec<(u32, Elem)> = (0..200).map(|k| ((k % 3) as u32, qe(nums[(k * 5) % nums.len()]))).collect();
    omega_suite(s, t, &qe("x^2"), [&[], &[(qe("x^2"), qe("x"))]], &samples);
}

#[test]
fn unit_examples() {
    let ctx = theta0();
    let a = Fraction::new(&ctx, Elem::one(&RingId::Weyl), we("x")).unwrap();
    match unit_invert(&a).unwrap() {
        UnitInverse::Inverse(inv) => {
            assert_eq!(inv.den(), &we("x*d + 1"));
            assert_eq!(inv.num(), &we("d"));
        }
        other => panic!("expected an inverse, got {other:?}"),
    }
    assert_eq!(lsat_member(&ctx.set, &we("x"), &ctx.budget).unwrap(), Tri::Yes);
}
