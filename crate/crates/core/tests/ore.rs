mod common;

use common::*;
use ore_loc::ore::{contains, factor_word, ore_solve, OreSetDesc, Word};
use ore_loc::rings::rat;
use ore_loc::{Budget, Elem, RingId, Tri, WeylOp};
use proptest::prelude::*;

fn check_pair(set: &OreSetDesc, s: &Elem, r: &Elem) -> Result<(), TestCaseError> {
    let budget = Budget::default();
    let pair = ore_solve(set, s, r, &budget).map_err(|e| TestCaseError::fail(format!("{set}, s={s}, r={r}: {e}")))?;
    let lhs = pair.s_tilde.mul(r).unwrap();
    let rhs = pair.r_tilde.mul(s).unwrap();
    prop_assert_eq!(&lhs, &rhs, "{} with s={}, r={}", set, s, r);
    if let (Elem::Weyl(l), Elem::Weyl(rr)) = (&lhs, &rhs) {
        prop_assert!(same_action(l, rr));
    }
    prop_assert_eq!(contains(set, &pair.s_tilde, &budget).unwrap(), Tri::Yes);
    Ok(())
}

fn weyl_monoid(g: &str) -> OreSetDesc {
    OreSetDesc::monoid(RingId::Weyl, vec![we(g)]).unwrap()
}

fn product(factors: &[WeylOp]) -> Elem {
    Elem::Weyl(factors.iter().fold(WeylOp::one(), |acc, f| &acc * f))
}

fn x_gen() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["x", "x + 1", "x^2 + 1", "2*x - 3"])
}

fn d_gen() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["d", "d + 1", "d^2 - 2", "3*d"])
}

fn euler_z() -> impl Strategy<Value = (i64, i64)> {
    prop::sample::select(vec![(0, 1), (1, 1), (-2, 1), (1, 2)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn x_monoid_solver(g in x_gen(), k in 0u32..3, r in weyl_op(3)) {
        let set = weyl_monoid(g);
        check_pair(&set, &Elem::Weyl(w(g).pow(k)), &Elem::Weyl(r))?;
    }

    #[test]
    fn d_monoid_solver(g in d_gen(), k in 0u32..3, r in weyl_op(3)) {
        let set = weyl_monoid(g);
        check_pair(&set, &Elem::Weyl(w(g).pow(k)), &Elem::Weyl(r))?;
    }

    #[test]
    fn euler_solver((n, d) in euler_z(), shifts in prop::collection::vec(-2i64..=2, 0..3), r in weyl_op(3)) {
        let z = rat(n, d);
        let set = OreSetDesc::euler(z.clone());
        let s = product(&shifts.iter().map(|k| WeylOp::theta_shift(&(&z + rat(*k, 1)))).collect::<Vec<_>>());
        check_pair(&set, &s, &Elem::Weyl(r))?;
    }

    #[test]
    fn union_solver(word in prop::collection::vec(0usize..3, 1..4), r in weyl_op(2)) {
        let set = OreSetDesc::union(vec![weyl_monoid("x"), OreSetDesc::euler(rat(0, 1))]).unwrap();
        let atoms = [w("x"), w("x*d"), w("x*d + 1")];
        let s = product(&word.iter().map(|&i| atoms[i].clone()).collect::<Vec<_>>());
        check_pair(&set, &s, &Elem::Weyl(r))?;
    }

    #[test]
    fn commutative_solvers(a in 1i64..40, b in -40i64..40, e in 0u32..4) {
        let set = OreSetDesc::monoid(RingId::Z, vec![z(2), z(3)]).unwrap();
        check_pair(&set, &z(2).pow(e).mul(&z(3)).unwrap(), &z(b))?;
        let set = OreSetDesc::monoid(RingId::qx(), vec![qe("x"), qe("x^2 + 1")]).unwrap();
        check_pair(&set, &qe("x").pow(e), &Elem::from_i64(&RingId::qx(), a))?;
    }

    #[test]
    fn membership_is_multiplicative(i in prop::collection::vec(0usize..4, 1..4), j in prop::collection::vec(0usize..4, 1..4)) {
        let set = OreSetDesc::union(vec![weyl_monoid("x"), weyl_monoid("d"), OreSetDesc::euler(rat(0, 1))]).unwrap();
        let atoms = [w("x"), w("d"), w("x*d"), w("x*d - 1")];
        let a = product(&i.iter().map(|&k| atoms[k].clone()).collect::<Vec<_>>());
        let b = product(&j.iter().map(|&k| atoms[k].clone()).collect::<Vec<_>>());
        let budget = Budget::default();
        prop_assert_eq!(contains(&set, &a, &budget).unwrap(), Tri::Yes);
        prop_assert_eq!(contains(&set, &b, &budget).unwrap(), Tri::Yes);
        prop_assert_eq!(contains(&set, &a.mul(&b).unwrap(), &budget).unwrap(), Tri::Yes);
    }

    #[test]
    fn factor_words_multiply_back(i in prop::collection::vec(0usize..2, 1..5)) {
        let set = OreSetDesc::union(vec![weyl_monoid("x"), weyl_monoid("d")]).unwrap();
        let atoms = [w("x"), w("d")];
        let s = product(&i.iter().map(|&k| atoms[k].clone()).collect::<Vec<_>>());
        match factor_word(&set, &s, &Budget::default()).unwrap() {
            Word::Found(parts) => {
                let back = parts.iter().try_fold(Elem::one(&RingId::Weyl), |acc, (_, f)| acc.mul(f)).unwrap();
                prop_assert_eq!(back, s);
            }
            other => prop_assert!(false, "no word for {}: {:?}", s, other),
        }
    }
}

#[test]
fn theta_monoid_is_not_ore() {
    let set = weyl_monoid("x*d");
    assert!(!set.is_known_ore());
    assert!(ore_solve(&set, &we("x*d"), &we("x"), &Budget::default()).is_err());
}

#[test]
fn not_in_set_is_an_error() {
    let set = OreSetDesc::monoid(RingId::Z, vec![z(2)]).unwrap();
    assert!(ore_solve(&set, &z(3), &z(1), &Budget::default()).is_err());
}
