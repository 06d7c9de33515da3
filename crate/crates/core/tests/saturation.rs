mod common;

use common::*;
use ore_loc::ore::{contains, lsat_witness, ore_solve, OreSetDesc, WitnessResult};
use ore_loc::rings::rat;
use ore_loc::saturation::{lsat_generators, lsat_member, SaturatedSetDesc};
use ore_loc::{Budget, Elem, RingId, Tri, WeylOp};
use proptest::prelude::*;

fn zsets() -> Vec<(OreSetDesc, Vec<i64>)> {
    vec![
        (OreSetDesc::monoid(RingId::Z, vec![z(6)]).unwrap(), vec![2, 3]),
        (OreSetDesc::monoid(RingId::Z, vec![z(4)]).unwrap(), vec![2]),
        (OreSetDesc::monoid(RingId::Z, vec![z(10), z(3)]).unwrap(), vec![2, 3, 5]),
        (OreSetDesc::units(RingId::Z), vec![]),
    ]
}

#[test]
fn lsat_of_units_is_units() {
    let set = OreSetDesc::units(RingId::Z);
    for n in -60i64..=60 {
        if n == 0 {
            continue;
        }
        assert_eq!(lsat_member(&set, &z(n), &Budget::default()).unwrap(), Tri::from_bool(n.abs() == 1), "{n}");
    }
}

#[test]
fn integer_closures_are_saturated() {
    let budget = Budget::default();
    for (set, primes) in zsets() {
        let member = |n: i64| lsat_member(&set, &z(n), &budget).unwrap();
        for p in -200i64..=200 {
            for q in -200i64..=200 {
                if p == 0 || q == 0 || (p * q).abs() > 200 {
                    continue;
                }
                let pq = member(p * q);
                // closure membership is prime support inside the generators' primes
                let oracle = prime_support(p * q).iter().all(|r| primes.contains(r));
                assert_eq!(pq, Tri::from_bool(oracle), "{set} at {}", p * q);
                if pq == Tri::Yes {
                    assert_eq!(member(p), Tri::Yes, "{set}: {p} * {q}");
                    assert_eq!(member(q), Tri::Yes, "{set}: {p} * {q}");
                }
            }
        }
        assert_eq!(member(1), Tri::Yes);
        assert_eq!(member(-1), Tri::Yes);
    }
}

/// Homogeneous atoms that split over ℚ, with their total degree.
fn graded_atoms() -> Vec<(WeylOp, u32)> {
    let mut out = vec![(w("x"), 1), (w("d"), 1), (w("x^2"), 2), (w("d^2"), 2), (w("2*x*d + 1"), 2)];
    for k in -2i64..=2 {
        out.push((WeylOp::theta_shift(&rat(k, 1)), 2));
    }
    out
}

/// Products of atoms with total degree at most `max`.
fn graded_products(max: u32) -> Vec<(WeylOp, u32)> {
    let atoms = graded_atoms();
    let mut out = vec![(WeylOp::one(), 0)];
    let mut frontier = out.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (p, d) in &frontier {
            for (a, da) in &atoms {
                if d + da <= max {
                    next.push((p * a, d + da));
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[test]
fn euler_closure_is_saturated_on_graded_products() {
    let set = OreSetDesc::euler(rat(0, 1));
    let budget = Budget::default();
    let elems = graded_products(6);
    let member = |e: &WeylOp| lsat_member(&set, &Elem::Weyl(e.clone()), &budget).unwrap();
    let mut checked = 0;
    for (p, dp) in &elems {
        for (q, dq) in &elems {
            if dp + dq > 6 {
                continue;
            }
            let pq = p * q;
            if member(&pq) == Tri::Yes {
                assert_eq!(member(p), Tri::Yes, "{p} * {q}");
                assert_eq!(member(q), Tri::Yes, "{p} * {q}");
            }
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn saturated_descriptions_are_fixed_points() {
    let descs = [
        SaturatedSetDesc::finite(RingId::Z, vec![z(2), z(3)]).unwrap(),
        SaturatedSetDesc::cofinite(RingId::Z, vec![z(5)]).unwrap(),
        SaturatedSetDesc::finite(RingId::qx(), vec![qe("x"), qe("x^2 + 1")]).unwrap(),
        SaturatedSetDesc::cofinite(RingId::qx(), vec![qe("x - 1")]).unwrap(),
    ];
    for d in descs {
        let set = OreSetDesc::primes(d.ring(), d.clone()).unwrap();
        assert_eq!(lsat_generators(&set).unwrap(), d);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn units_lie_in_every_closure(u in prop::sample::select(vec![1i64, -1])) {
        for (set, _) in zsets() {
            prop_assert_eq!(lsat_member(&set, &z(u), &Budget::default()).unwrap(), Tri::Yes);
        }
    }

    #[test]
    fn closure_inherits_the_ore_condition(k in 0u32..5, sign in prop::sample::select(vec![1i64, -1]), r in -50i64..50) {
        // s ∈ LSat([4]) = ±2^k; with w·s ∈ S the pair (s̃, r̃·w) solves s̃·r = (r̃w)·s
        let set = OreSetDesc::monoid(RingId::Z, vec![z(4)]).unwrap();
        let budget = Budget::default();
        let s = z(2).pow(k).mul(&z(sign)).unwrap();
        let WitnessResult::Found(wit) = lsat_witness(&set, &s, &budget).unwrap() else {
            return Err(TestCaseError::fail("no witness"));
        };
        let ws = wit.mul(&s).unwrap();
        let pair = ore_solve(&set, &ws, &z(r), &budget).unwrap();
        let r_tilde = pair.r_tilde.mul(&wit).unwrap();
        prop_assert_eq!(pair.s_tilde.mul(&z(r)).unwrap(), r_tilde.mul(&s).unwrap());
        prop_assert_eq!(lsat_member(&set, &pair.s_tilde, &budget).unwrap(), Tri::Yes);
    }

    #[test]
    fn weyl_closure_inherits_the_ore_condition(r in weyl_op(2), a in 0u32..3) {
        // x^a ∈ LSat(Θ₀) with witness ∂^a
        let set = OreSetDesc::euler(rat(0, 1));
        let budget = Budget::default();
        let s = Elem::Weyl(WeylOp::monomial(a, 0));
        let WitnessResult::Found(wit) = lsat_witness(&set, &s, &budget).unwrap() else {
            return Err(TestCaseError::fail("no witness"));
        };
        let ws = wit.mul(&s).unwrap();
        prop_assert_eq!(contains(&set, &ws, &budget).unwrap(), Tri::Yes);
        let r = Elem::Weyl(r);
        let pair = ore_solve(&set, &ws, &r, &budget).unwrap();
        let r_tilde = pair.r_tilde.mul(&wit).unwrap();
        prop_assert_eq!(pair.s_tilde.mul(&r).unwrap(), r_tilde.mul(&s).unwrap());
    }
}
