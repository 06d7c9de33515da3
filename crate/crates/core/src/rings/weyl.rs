//! The first Weyl algebra `ℚ⟨x, ∂ | ∂x = x∂ + 1⟩` in normal form `Σ c_ab x^a ∂^b`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{fmt_rat_coeff, Rat, UniPoly};

/// Exponent pair `(a, b)` of the normal-form monomial `x^a ∂^b`.
pub type Exp = (u32, u32);

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct WeylOp {
    terms: BTreeMap<Exp, Rat>,
}

/// `C(n, k) · m(m-1)···(m-k+1)`: coefficient of `x^{m-k} ∂^{n-k}` in `∂^n x^m`.
fn commutation_coeff(n: u32, m: u32, k: u32) -> BigInt {
    let mut binom = BigInt::one();
    let mut falling = BigInt::one();
    for i in 0..k {
        binom = binom * BigInt::from(n - i) / BigInt::from(i + 1);
        falling *= BigInt::from(m - i);
    }
    binom * falling
}

impl WeylOp {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rat::from_integer(n.into()))
    }

    /// `c · x^a ∂^b`
    pub fn term(c: Rat, a: u32, b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Self { terms }
    }

    pub fn monomial(a: u32, b: u32) -> Self {
        Self::term(Rat::one(), a, b)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0)
    }

    pub fn d() -> Self {
        Self::monomial(0, 1)
    }

    /// The Euler operator `θ = x∂`.
    pub fn theta() -> Self {
        Self::monomial(1, 1)
    }

    /// `θ + c`
    pub fn theta_shift(c: &Rat) -> Self {
        &Self::theta() + &Self::constant(c.clone())
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Exp, Rat)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in it {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: Exp, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Embeds a polynomial in `x` (variable name ignored).
    pub fn from_x_poly(p: &UniPoly) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| ((i as u32, 0), c.clone())))
    }

    /// Embeds a polynomial in `∂`.
    pub fn from_d_poly(p: &UniPoly) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| ((0, i as u32), c.clone())))
    }

    /// Evaluates a polynomial at `θ`.
    pub fn from_theta_poly(p: &UniPoly) -> Self {
        let theta = Self::theta();
        p.coeffs()
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &theta) + &Self::constant(c.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rat {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in print order: ∂-degree descending, then x-degree descending.
    pub fn terms(&self) -> impl Iterator<Item = (Exp, &Rat)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        v.sort_by_key(|(e, _)| std::cmp::Reverse((e.1, e.0)));
        v.into_iter()
    }

    pub fn raw_terms(&self) -> &BTreeMap<Exp, Rat> {
        &self.terms
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn d_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(_, b)| *b).max()
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, _)| *a).max()
    }

    /// Coefficient of `∂^k` as a polynomial in `x`.
    pub fn d_coeff(&self, k: u32) -> UniPoly {
        let max_a = self.terms.keys().filter(|(_, b)| *b == k).map(|(a, _)| *a).max();
        let Some(max_a) = max_a else { return UniPoly::zero("x") };
        let coeffs = (0..=max_a).map(|a| self.coeff(a, k)).collect();
        UniPoly::new("x", coeffs)
    }

    /// The element as a polynomial in `x` if no `∂` occurs.
    pub fn as_x_poly(&self) -> Option<UniPoly> {
        (self.d_degree().unwrap_or(0) == 0).then(|| self.d_coeff(0))
    }

    /// The element as a polynomial in `∂` if no `x` occurs.
    pub fn as_d_poly(&self) -> Option<UniPoly> {
        if self.x_degree().unwrap_or(0) != 0 {
            return None;
        }
        let deg = self.d_degree().unwrap_or(0);
        Some(UniPoly::new("d", (0..=deg).map(|b| self.coeff(0, b)).collect()))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Applies `x ↦ fx`, `∂ ↦ fd` to every normal-form monomial.
    pub fn substitute(&self, fx: &Self, fd: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            let t = &fx.pow(a) * &fd.pow(b);
            out = &out + &t.scale(c);
        }
        out
    }

    /// The anti-automorphism fixing `x` and sending `∂ ↦ -∂`.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            let sign = if b % 2 == 0 { c.clone() } else { -c };
            // (x^a ∂^b)* = (-∂)^b x^a
            let t = &Self::monomial(0, b) * &Self::monomial(a, 0);
            out = &out + &t.scale(&sign);
        }
        out
    }
}

impl Add for &WeylOp {
    type Output = WeylOp;
    fn add(self, rhs: &WeylOp) -> WeylOp {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &WeylOp {
    type Output = WeylOp;
    fn sub(self, rhs: &WeylOp) -> WeylOp {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &WeylOp {
    type Output = WeylOp;
    fn neg(self) -> WeylOp {
        WeylOp { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Mul for &WeylOp {
    type Output = WeylOp;
    fn mul(self, rhs: &WeylOp) -> WeylOp {
        let mut acc: BTreeMap<Exp, Rat> = BTreeMap::new();
        for (&(a, b), c1) in &self.terms {
            for (&(c, d), c2) in &rhs.terms {
                let prod = c1 * c2;
                // x^a (∂^b x^c) ∂^d
                for k in 0..=b.min(c) {
                    let k_coeff = commutation_coeff(b, c, k);
                    let slot = acc.entry((a + c - k, b + d - k)).or_insert_with(Rat::zero);
                    *slot += &prod * Rat::from_integer(k_coeff);
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        WeylOp { terms: acc }
    }
}

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in self.terms().enumerate() {
            let mut parts = Vec::new();
            match a {
                0 => {}
                1 => parts.push("x".to_string()),
                _ => parts.push(format!("x^{a}")),
            }
            match b {
                0 => {}
                1 => parts.push("d".to_string()),
                _ => parts.push(format!("d^{b}")),
            }
            let mono = parts.join("*");
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            f.write_str(&fmt_rat_coeff(&c.abs(), &mono))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relation() {
        let dx = &WeylOp::d() * &WeylOp::x();
        assert_eq!(dx, &WeylOp::theta() + &WeylOp::one());
        assert_eq!(dx.to_string(), "x*d + 1");
    }

    #[test]
    fn d2_x2() {
        let p = &WeylOp::monomial(0, 2) * &WeylOp::monomial(2, 0);
        let want = WeylOp::from_terms([((2, 2), Rat::one()), ((1, 1), Rat::from_integer(4.into())), ((0, 0), Rat::from_integer(2.into()))]);
        assert_eq!(p, want);
    }

    #[test]
    fn adjoint_reverses_products() {
        let a = &WeylOp::theta() + &WeylOp::d();
        let b = &WeylOp::monomial(2, 1) - &WeylOp::x();
        assert_eq!((&a * &b).adjoint(), &b.adjoint() * &a.adjoint());
        assert_eq!(a.adjoint().adjoint(), a);
    }

    #[test]
    fn projections() {
        let p = WeylOp::from_terms([((2, 0), Rat::one()), ((0, 0), Rat::from_integer(3.into()))]);
        assert_eq!(p.as_x_poly(), Some(UniPoly::from_ints("x", &[3, 0, 1])));
        assert!(WeylOp::theta().as_x_poly().is_none());
        assert_eq!(WeylOp::monomial(0, 3).as_d_poly(), Some(UniPoly::from_ints("d", &[0, 0, 0, 1])));
    }
}
