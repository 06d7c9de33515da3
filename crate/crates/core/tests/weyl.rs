mod common;

use common::*;
use ore_loc::rings::rat;
use ore_loc::weyl::{
    fourier, fourier_inv, from_theta_form, grade_decompose, groebner_basis, homogeneous_degree, ideal_member,
    theta_form,
};
use ore_loc::{Budget, Rat, WeylOp};
use proptest::prelude::*;

fn zs() -> Vec<Rat> {
    vec![rat(0, 1), rat(1, 1), rat(-2, 1), rat(1, 2)]
}

#[test]
fn euler_shift_identities() {
    for z in zs() {
        for m in 0..=5 {
            for n in 0..=5 {
                let t = WeylOp::theta_shift(&z).pow(m);
                let tn = WeylOp::theta_shift(&(&z + rat(n as i64, 1))).pow(m);
                let (xn, dn) = (WeylOp::monomial(n, 0), WeylOp::monomial(0, n));
                assert_eq!(&t * &xn, &xn * &tn, "z={z} m={m} n={n}");
                assert_eq!(&dn * &t, &tn * &dn, "z={z} m={m} n={n}");
                assert!(product_acts_as_composition(&t, &xn, &(&xn * &tn)));
            }
        }
    }
}

#[test]
fn inhomogeneous_family() {
    for i in -3i64..=3 {
        let lhs = &w(&format!("x*d + {}", i + 1)) * &w(&format!("x*d^2 - x*d + {}*d - ({})", i + 2, i));
        let rhs = &(&w("d - 1") * &w(&format!("x*d + ({i})"))) * &w(&format!("x*d + {}", i + 1));
        assert_eq!(lhs, rhs, "i = {i}");
    }
}

#[test]
fn grading_examples() {
    let parts = grade_decompose(&w("x + d + x*d")).unwrap();
    assert_eq!(parts.iter().map(|p| p.degree).collect::<Vec<_>>(), vec![-1, 0, 1]);
    assert_eq!(homogeneous_degree(&w("x^2*d^3 + d")), Some(1));
    assert_eq!(homogeneous_degree(&w("x + d")), None);
}

#[test]
fn gb_of_the_closure_example() {
    let gb = groebner_basis(&[w("d*(x*d+3)*(3*x*d+1)*(x+d)")], &Budget::default()).unwrap();
    assert!(gb.is_groebner());
    assert!(gb.leading_exponents().contains(&(2, 4)));
}

fn shift_strategy() -> impl Strategy<Value = Rat> {
    prop::sample::select(zs())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn graded_commutation(k in -4i64..=4, h in homogeneous_op(0, 3), z in shift_strategy()) {
        // homogeneous_op(0, ·) is a θ-polynomial; move it to degree k
        let y = if k >= 0 { WeylOp::monomial(0, k as u32) } else { WeylOp::monomial((-k) as u32, 0) };
        let h = if k >= 0 { &h * &y } else { &y * &h };
        prop_assume!(!h.is_zero());
        let lhs = &WeylOp::theta_shift(&(&z + rat(k, 1))) * &h;
        prop_assert_eq!(lhs, &h * &WeylOp::theta_shift(&z));
    }

    #[test]
    fn ideal_membership_of_combinations(g1 in nonzero_weyl_op(2), g2 in nonzero_weyl_op(2), a1 in weyl_op(2), a2 in weyl_op(2)) {
        let budget = Budget::default();
        let Ok(gb) = groebner_basis(&[g1.clone(), g2.clone()], &budget) else {
            return Err(TestCaseError::reject("pair budget"));
        };
        let r = &(&a1 * &g1) + &(&a2 * &g2);
        prop_assert!(ideal_member(&r, &gb).0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fourier_is_multiplicative(a in weyl_op(4), b in weyl_op(4)) {
        prop_assert_eq!(fourier(&(&a * &b)), &fourier(&a) * &fourier(&b));
        prop_assert_eq!(fourier_inv(&fourier(&a)), a);
    }
}

#[test]
fn theta_form_round_trip_up_to_degree_eight() {
    // every monomial combination along each diagonal of total degree ≤ 8
    for k in -8i64..=8 {
        let n = k.unsigned_abs() as u32;
        for top in 0..=(8 - n) / 2 {
            let mut h = WeylOp::zero();
            for i in 0..=top {
                let (a, b) = if k >= 0 { (i, i + n) } else { (i + n, i) };
                h = &h + &WeylOp::term(rat(i as i64 * 2 - 3, 1), a, b);
            }
            if h.is_zero() {
                continue;
            }
            let f = theta_form(&h).unwrap();
            assert_eq!(from_theta_form(&f), h, "k={k} top={top}");
        }
    }
}
