#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Zero};
use ore_loc::rings::{ring_eval, rat};
use ore_loc::{Elem, Int, Rat, RingId, UniPoly, WeylOp};
use proptest::prelude::*;

pub fn w(s: &str) -> WeylOp {
    ring_eval(s, &RingId::Weyl).unwrap().as_weyl().unwrap().clone()
}

pub fn we(s: &str) -> Elem {
    Elem::Weyl(w(s))
}

pub fn z(n: i64) -> Elem {
    Elem::from_i64(&RingId::Z, n)
}

pub fn q(s: &str) -> UniPoly {
    ring_eval(s, &RingId::qx()).unwrap().as_poly().unwrap().clone()
}

pub fn qe(s: &str) -> Elem {
    Elem::Poly(q(s))
}

pub fn r(n: i64) -> Rat {
    rat(n, 1)
}

/// Random operator with total degree at most `deg` and small integer coefficients.
pub fn weyl_op(deg: u32) -> impl Strategy<Value = WeylOp> {
    prop::collection::vec((0..=deg, 0..=deg, -3i64..=3), 1..5).prop_map(move |terms| {
        WeylOp::from_terms(
            terms.into_iter().filter(|(a, b, _)| a + b <= deg).map(|(a, b, c)| ((a, b), rat(c, 1))),
        )
    })
}

pub fn nonzero_weyl_op(deg: u32) -> impl Strategy<Value = WeylOp> {
    weyl_op(deg).prop_filter("nonzero", |p| !p.is_zero())
}

/// Homogeneous operator of degree `k` (deg x = -1, deg d = 1).
pub fn homogeneous_op(k: i64, max_theta: u32) -> impl Strategy<Value = WeylOp> {
    prop::collection::vec(-3i64..=3, 1..=(max_theta as usize + 1)).prop_map(move |cs| {
        WeylOp::from_terms(cs.into_iter().enumerate().map(|(i, c)| {
            let i = i as u32;
            let (a, b) = if k >= 0 { (i, i + k as u32) } else { (i + (-k) as u32, i) };
            ((a, b), rat(c, 1))
        }))
    })
}

/// Coefficient vector of a polynomial in x.
type Poly = Vec<Rat>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Action of an operator on `K[x]`, term by term: differentiate, then multiply by `x^a`.
pub fn act(op: &WeylOp, p: &[Rat]) -> Poly {
    let mut out: Poly = Vec::new();
    for ((a, b), c) in op.terms() {
        let mut d: Poly = p.to_vec();
        for _ in 0..b {
            d = d.iter().enumerate().skip(1).map(|(i, x)| x * BigRational::from_integer(Int::from(i))).collect();
        }
        for (i, x) in d.iter().enumerate() {
            let k = i + a as usize;
            if out.len() <= k {
                out.resize(k + 1, Rat::zero());
            }
            out[k] += x * c;
        }
    }
    trim(out)
}

fn monomial(n: usize) -> Poly {
    let mut p = vec![Rat::zero(); n + 1];
    p[n] = Rat::one();
    p
}

/// `A = B` as operators: compared on `x^n` for `n` beyond the ∂-degree.
pub fn same_action(a: &WeylOp, b: &WeylOp) -> bool {
    let bound = a.d_degree().unwrap_or(0).max(b.d_degree().unwrap_or(0)) as usize + 2;
    (0..=bound).all(|n| act(a, &monomial(n)) == act(b, &monomial(n)))
}

/// `A·B` checked against `A(B(p))` on monomials.
pub fn product_acts_as_composition(a: &WeylOp, b: &WeylOp, ab: &WeylOp) -> bool {
    let bound = (a.d_degree().unwrap_or(0) + b.d_degree().unwrap_or(0)) as usize + 2;
    (0..=bound).all(|n| act(ab, &monomial(n)) == act(a, &act(b, &monomial(n))))
}

/// Words over {x, d} rewritten with `dx -> xd + 1` until every x precedes every d.
pub fn rewrite_normal_form(word: &str) -> WeylOp {
    let mut pending: Vec<(String, i64)> = vec![(word.to_string(), 1)];
    let mut out = WeylOp::zero();
    while let Some((wd, c)) = pending.pop() {
        match wd.find("dx") {
            Some(i) => {
                pending.push((format!("{}xd{}", &wd[..i], &wd[i + 2..]), c));
                pending.push((format!("{}{}", &wd[..i], &wd[i + 2..]), c));
            }
            None => {
                let a = wd.chars().filter(|&ch| ch == 'x').count() as u32;
                let b = wd.len() as u32 - a;
                out = &out + &WeylOp::term(rat(c, 1), a, b);
            }
        }
    }
    out
}

/// Prime support by trial division.
pub fn prime_support(n: i64) -> Vec<i64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}
