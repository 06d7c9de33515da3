//! Dense univariate polynomials over ℚ.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{fmt_rat_coeff, Rat};

/// Dense polynomial `c_0 + c_1 v + ... + c_n v^n` in a named variable.
///
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    var: String,
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(var: impl Into<String>, coeffs: Vec<Rat>) -> Self {
        let mut p = Self { var: var.into(), coeffs };
        p.trim();
        p
    }

    pub fn from_ints(var: impl Into<String>, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn zero(var: impl Into<String>) -> Self {
        Self { var: var.into(), coeffs: Vec::new() }
    }

    pub fn constant(var: impl Into<String>, c: Rat) -> Self {
        Self::new(var, vec![c])
    }

    pub fn one(var: impl Into<String>) -> Self {
        Self::constant(var, Rat::one())
    }

    /// The polynomial `v`.
    pub fn var_poly(var: impl Into<String>) -> Self {
        Self::new(var, vec![Rat::zero(), Rat::one()])
    }

    /// `v + c`
    pub fn linear(var: impl Into<String>, c: Rat) -> Self {
        Self::new(var, vec![c, Rat::one()])
    }

    pub fn monomial(var: impl Into<String>, c: Rat, deg: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(var, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn with_var(mut self, var: impl Into<String>) -> Self {
        self.var = var.into();
        self
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.var.clone());
        }
        Self { var: self.var.clone(), coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().recip())
    }

    pub fn eval(&self, at: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * at + c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.var.clone());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `p(v + c)`
    pub fn shift(&self, c: &Rat) -> Self {
        let lin = Self::linear(self.var.clone(), c.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(self.var.clone()), |acc, a| &(&acc * &lin) + &Self::constant(self.var.clone(), a.clone()))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        let inv = d.lead().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(self.var.clone()), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(self.var.clone(), quot), Self::new(self.var.clone(), rem))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic lcm of two nonzero polynomials.
    pub fn lcm(&self, other: &Self) -> Self {
        let g = self.gcd(other);
        (self * other).exact_div(&g).expect("gcd divides product").monic()
    }

    /// Number of times `q` divides `self` (self nonzero, q non-constant).
    pub fn valuation(&self, q: &Self) -> u32 {
        let mut n = 0;
        let mut cur = self.clone();
        while let Some(next) = cur.exact_div(q) {
            cur = next;
            n += 1;
        }
        n
    }
}

impl Ord for UniPoly {
    /// Degree first, then coefficients from the top down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
            .then_with(|| self.var.cmp(&other.var))
    }
}

impl PartialOrd for UniPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UniPoly::new(self.var.clone(), coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UniPoly::new(self.var.clone(), coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.var.clone());
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(self.var.clone(), coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { var: self.var.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => self.var.clone(),
                _ => format!("{}^{}", self.var, i),
            };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            f.write_str(&fmt_rat_coeff(&c.abs(), &mono))?;
            first = false;
        }
        Ok(())
    }
}
