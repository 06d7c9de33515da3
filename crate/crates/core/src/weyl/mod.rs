//! Graded structure of the first Weyl algebra.
//!
//! With `deg x = -1` and `deg ∂ = +1` the monomial `x^a ∂^b` has degree
//! `b - a`. The degree-0 part is `ℚ[θ]` for the Euler operator `θ = x∂`, and a
//! homogeneous element of degree `k` is `t(θ)·∂^k` (k ≥ 0) or `t(θ)·x^{-k}`.

mod groebner;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::{factor_poly, Exp, Rat, UniPoly, WeylOp};

pub use groebner::{groebner_basis, ideal_member, GroebnerBasis, MonomialOrder};

pub const THETA: &str = "theta";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPart {
    pub degree: i64,
    pub component: WeylOp,
}

pub fn degree_of(e: (u32, u32)) -> i64 {
    e.1 as i64 - e.0 as i64
}

/// Homogeneous components sorted by degree.
pub fn grade_decompose(r: &WeylOp) -> Result<Vec<GradedPart>> {
    if r.is_zero() {
        return Err(Error::ZeroInput("grade_decompose"));
    }
    let mut parts: BTreeMap<i64, Vec<(Exp, Rat)>> = BTreeMap::new();
    for (&e, c) in r.raw_terms() {
        parts.entry(degree_of(e)).or_default().push((e, c.clone()));
    }
    Ok(parts
        .into_iter()
        .map(|(degree, terms)| GradedPart { degree, component: WeylOp::from_terms(terms) })
        .collect())
}

/// Degree of a homogeneous element, `None` when inhomogeneous or zero.
pub fn homogeneous_degree(r: &WeylOp) -> Option<i64> {
    let mut it = r.raw_terms().keys().map(|&e| degree_of(e));
    let first = it.next()?;
    it.all(|d| d == first).then_some(first)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ThetaY {
    None,
    X,
    D,
}

/// `coeff · tpoly(θ) · y^n` with `tpoly` monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaForm {
    pub coeff: Rat,
    pub tpoly: UniPoly,
    pub y: ThetaY,
    pub n: u32,
}

impl ThetaForm {
    pub fn degree(&self) -> i64 {
        match self.y {
            ThetaY::None => 0,
            ThetaY::X => -(self.n as i64),
            ThetaY::D => self.n as i64,
        }
    }
}

impl fmt::Display for ThetaForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * ({})", self.coeff, self.tpoly)?;
        match self.y {
            ThetaY::None => Ok(()),
            ThetaY::X => write!(f, " * x^{}", self.n),
            ThetaY::D => write!(f, " * d^{}", self.n),
        }
    }
}

/// `θ(θ-1)···(θ-a+1)`, which equals `x^a ∂^a`.
pub fn falling_theta(a: u32) -> UniPoly {
    (0..a).fold(UniPoly::one(THETA), |acc, i| &acc * &UniPoly::linear(THETA, -Rat::from_integer(i.into())))
}

/// `(θ+1)(θ+2)···(θ+a)`, which equals `∂^a x^a`.
pub fn rising_theta(a: u32) -> UniPoly {
    (1..=a).fold(UniPoly::one(THETA), |acc, i| &acc * &UniPoly::linear(THETA, Rat::from_integer(i.into())))
}

pub fn theta_form(h: &WeylOp) -> Result<ThetaForm> {
    if h.is_zero() {
        return Err(Error::ZeroInput("theta_form"));
    }
    let k = homogeneous_degree(h).ok_or_else(|| Error::NotHomogeneous(h.to_string()))?;
    let n = k.unsigned_abs() as u32;
    // h = x^n u(θ) for k < 0, h = u(θ) ∂^k for k ≥ 0
    let mut u = UniPoly::zero(THETA);
    for (&(a, b), c) in h.raw_terms() {
        let diag = a.min(b);
        u = &u + &falling_theta(diag).scale(c);
    }
    let (t, y) = match k.signum() {
        0 => (u, ThetaY::None),
        1 => (u, ThetaY::D),
        _ => (u.shift(&-Rat::from_integer(n.into())), ThetaY::X),
    };
    Ok(ThetaForm { coeff: t.lead(), tpoly: t.monic(), y, n })
}

pub fn from_theta_form(f: &ThetaForm) -> WeylOp {
    let y = match f.y {
        ThetaY::None => WeylOp::one(),
        ThetaY::X => WeylOp::monomial(f.n, 0),
        ThetaY::D => WeylOp::monomial(0, f.n),
    };
    (&WeylOp::from_theta_poly(&f.tpoly) * &y).scale(&f.coeff)
}

/// The automorphism `x ↦ -∂`, `∂ ↦ x`.
pub fn fourier(r: &WeylOp) -> WeylOp {
    r.substitute(&-&WeylOp::d(), &WeylOp::x())
}

/// The inverse automorphism `x ↦ ∂`, `∂ ↦ -x`.
pub fn fourier_inv(r: &WeylOp) -> WeylOp {
    r.substitute(&WeylOp::d(), &-&WeylOp::x())
}

/// Solves `s̃·r = r̃·(θ+z)` with `s̃ = Π (θ+z+k_i)` over the degrees `k_i` of the
/// graded parts of `r`, and `r̃ = Σ_i (Π_{j≠i} (θ+z+k_j)) r_{k_i}`.
pub fn ore_solve_euler(z: &Rat, r: &WeylOp) -> Result<(WeylOp, WeylOp)> {
    let parts = grade_decompose(r)?;
    let shift = |k: i64| WeylOp::theta_shift(&(z + Rat::from_integer(k.into())));
    let mut s_tilde = WeylOp::one();
    for p in &parts {
        s_tilde = &s_tilde * &shift(p.degree);
    }
    let mut r_tilde = WeylOp::zero();
    for (i, p) in parts.iter().enumerate() {
        let mut cof = WeylOp::one();
        for (j, q) in parts.iter().enumerate() {
            if j != i {
                cof = &cof * &shift(q.degree);
            }
        }
        r_tilde = &r_tilde + &(&cof * &p.component);
    }
    if &s_tilde * r != &r_tilde * &shift(0) {
        return Err(Error::Verification(format!("Euler Ore pair for z = {z}, r = {r}")));
    }
    Ok((s_tilde, r_tilde))
}

/// Shifts `w_i ∈ ℤ` with `s = Π (θ + z + w_i)`, or `None` if `s ∉ Θ_z`.
pub fn euler_factors(z: &Rat, s: &WeylOp) -> Option<Vec<Rat>> {
    if s.is_zero() || homogeneous_degree(s) != Some(0) {
        return None;
    }
    let t = theta_form(s).ok()?;
    if !t.coeff.is_one() {
        return None;
    }
    let f = factor_poly(&t.tpoly).ok()?;
    if !f.is_split() {
        return None;
    }
    let mut out = Vec::new();
    for (root, m) in f.roots {
        // θ + z + w has root -z - w
        let w = -root - z;
        if !w.is_integer() {
            return None;
        }
        out.extend(std::iter::repeat_n(w, m as usize));
    }
    out.sort();
    Some(out)
}

/// Ore pair for `s = Π (θ+z+w_i) ∈ Θ_z`. A part `r_k` of degree `k` satisfies
/// `r_k·s = s_k·r_k` with `s_k = Π (θ+z+w_i+k)`, so `s̃ = lcm_k s_k` and
/// `r̃ = Σ_k (s̃/s_k)·r_k`.
pub fn ore_solve_euler_set(z: &Rat, s: &WeylOp, r: &WeylOp) -> Result<(WeylOp, WeylOp)> {
    let shifts = euler_factors(z, s).ok_or_else(|| Error::NotInSet { elem: s.to_string(), set: format!("Theta_{z}") })?;
    if r.is_zero() {
        return Ok((WeylOp::one(), WeylOp::zero()));
    }
    let parts = grade_decompose(r)?;
    let counts = |k: i64| {
        let mut m: BTreeMap<Rat, u32> = BTreeMap::new();
        for w in &shifts {
            *m.entry(w + Rat::from_integer(k.into())).or_default() += 1;
        }
        m
    };
    let mut lcm: BTreeMap<Rat, u32> = BTreeMap::new();
    for p in &parts {
        for (v, c) in counts(p.degree) {
            let e = lcm.entry(v).or_default();
            *e = (*e).max(c);
        }
    }
    let product = |m: &BTreeMap<Rat, u32>| {
        m.iter().fold(WeylOp::one(), |acc, (v, e)| &acc * &WeylOp::theta_shift(&(z + v)).pow(*e))
    };
    let s_tilde = product(&lcm);
    let mut r_tilde = WeylOp::zero();
    for p in &parts {
        let own = counts(p.degree);
        let rest: BTreeMap<Rat, u32> = lcm.iter().map(|(v, e)| (v.clone(), e - own.get(v).copied().unwrap_or(0))).collect();
        r_tilde = &r_tilde + &(&product(&rest) * &p.component);
    }
    if &s_tilde * r != &r_tilde * s {
        return Err(Error::Verification(format!("Euler Ore pair for s = {s}, r = {r}")));
    }
    Ok((s_tilde, r_tilde))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{int, rat, ring_eval, RingId};
    use num_traits::Zero;

    fn w(s: &str) -> WeylOp {
        ring_eval(s, &RingId::Weyl).unwrap().as_weyl().unwrap().clone()
    }

    #[test]
    fn grading_examples() {
        let parts = grade_decompose(&w("x + d")).unwrap();
        assert_eq!(parts, vec![GradedPart { degree: -1, component: w("x") }, GradedPart { degree: 1, component: w("d") }]);
        let parts = grade_decompose(&w("theta")).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].degree, 0);
        // oracle: group the expanded terms by b - a by hand
        let g = w("d*(x*d+3)*(3*x*d+1)*(x+d)");
        let parts = grade_decompose(&g).unwrap();
        assert_eq!(parts.iter().map(|p| p.degree).collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(&parts[0].component + &parts[1].component, g);
        assert!(grade_decompose(&WeylOp::zero()).is_err());
    }

    #[test]
    fn theta_form_examples() {
        let f = theta_form(&w("x^2*d^2")).unwrap();
        assert_eq!((f.tpoly.clone(), f.y), (UniPoly::from_ints(THETA, &[0, -1, 1]), ThetaY::None));
        let f = theta_form(&w("x*d^2")).unwrap();
        assert_eq!((f.tpoly.clone(), f.y, f.n), (UniPoly::from_ints(THETA, &[0, 1]), ThetaY::D, 1));
        let f = theta_form(&w("x")).unwrap();
        assert_eq!((f.tpoly.clone(), f.y, f.n), (UniPoly::one(THETA), ThetaY::X, 1));
        assert!(matches!(theta_form(&w("x + d")), Err(Error::NotHomogeneous(_))));
        // x θ = (θ - 1) x
        let f = theta_form(&w("x*theta")).unwrap();
        assert_eq!(f.tpoly, UniPoly::from_ints(THETA, &[-1, 1]));
        let f = theta_form(&w("-6*x^3*d + 2*x^2")).unwrap();
        assert_eq!(from_theta_form(&f), w("-6*x^3*d + 2*x^2"));
    }

    #[test]
    fn fourier_examples() {
        assert_eq!(fourier(&w("x")), w("-d"));
        assert_eq!(fourier(&w("theta")), w("-theta - 1"));
        let r = w("x^2*d + 3*d^2 - 1/2");
        assert_eq!(fourier(&fourier_inv(&r)), r);
        assert_eq!(fourier_inv(&fourier(&r)), r);
    }

    #[test]
    fn euler_solver_examples() {
        let z = Rat::zero();
        let (s, r) = ore_solve_euler(&z, &w("x")).unwrap();
        assert_eq!((s, r), (w("theta - 1"), w("x")));
        let (s, r) = ore_solve_euler(&z, &w("theta + 5")).unwrap();
        assert_eq!((s, r), (w("theta"), w("theta + 5")));
        let (s, r) = ore_solve_euler(&z, &w("x + d")).unwrap();
        assert_eq!(s, w("(theta - 1)*(theta + 1)"));
        assert_eq!(r, w("(theta + 1)*x + (theta - 1)*d"));
    }

    #[test]
    fn euler_factor_detection() {
        let z = rat(1, 2);
        let s = w("(theta + 1/2)*(theta - 3/2)^2");
        assert_eq!(euler_factors(&z, &s), Some(vec![int(-2), int(-2), int(0)]));
        assert_eq!(euler_factors(&z, &w("theta")), None);
        assert_eq!(euler_factors(&Rat::zero(), &w("2*theta")), None);
        assert_eq!(euler_factors(&Rat::zero(), &w("theta^2 + 1")), None);
        assert_eq!(euler_factors(&Rat::zero(), &WeylOp::one()), Some(vec![]));
    }

    #[test]
    fn chained_solver() {
        let s = w("theta*(theta + 3)");
        let r = w("x^2 + d - theta*d^3");
        let (st, rt) = ore_solve_euler_set(&Rat::zero(), &s, &r).unwrap();
        assert_eq!(&st * &r, &rt * &s);
        assert!(euler_factors(&Rat::zero(), &st).is_some());
    }
}
