//! Trial-division integer factorization and rational-root extraction for ℚ[x].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Int, Rat, UniPoly};
use crate::error::{Error, Result};

pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntFactorization {
    /// `+1` or `-1`.
    pub unit: i8,
    /// Primes ascending with multiplicities.
    pub primes: Vec<(Int, u32)>,
}

impl IntFactorization {
    pub fn support(&self) -> Vec<Int> {
        self.primes.iter().map(|(p, _)| p.clone()).collect()
    }
}

pub fn factor_int(n: &Int) -> Result<IntFactorization> {
    factor_int_with_bound(n, DEFAULT_FACTOR_BOUND)
}

/// Trial division by every candidate up to `bound`; a cofactor that cannot be
/// certified prime below the bound is an error.
pub fn factor_int_with_bound(n: &Int, bound: u64) -> Result<IntFactorization> {
    if n.is_zero() {
        return Err(Error::ZeroInput("factor_int"));
    }
    let unit = if n.is_negative() { -1 } else { 1 };
    let mut rest = n.abs();
    let mut primes = Vec::new();
    let mut p: u64 = 2;
    while !rest.is_one() {
        let pb = BigInt::from(p);
        if &pb * &pb > rest {
            primes.push((rest.clone(), 1));
            break;
        }
        if p > bound {
            return Err(Error::FactorBound { n: n.to_string(), bound });
        }
        let mut mult = 0;
        loop {
            let (q, r) = rest.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            primes.push((pb, mult));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    Ok(IntFactorization { unit, primes })
}

/// Positive divisors of `n ≠ 0`, ascending.
pub fn divisors(n: &Int) -> Result<Vec<Int>> {
    let f = factor_int(n)?;
    let mut out = vec![Int::one()];
    for (p, m) in &f.primes {
        let mut next = Vec::with_capacity(out.len() * (*m as usize + 1));
        for d in &out {
            let mut pw = d.clone();
            for _ in 0..=*m {
                next.push(pw.clone());
                pw *= p;
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFactorization {
    /// Leading coefficient of the input.
    pub content: Rat,
    /// Rational roots in discovery order, with multiplicities.
    pub roots: Vec<(Rat, u32)>,
    /// Monic cofactor without rational roots.
    pub residual: UniPoly,
}

impl PolyFactorization {
    pub fn is_split(&self) -> bool {
        self.residual.is_one()
    }

    /// Rebuilds `content · Π (v - root)^m · residual`.
    pub fn expand(&self) -> UniPoly {
        let var = self.residual.var().to_string();
        let mut acc = UniPoly::constant(var.clone(), self.content.clone());
        for (r, m) in &self.roots {
            acc = &acc * &UniPoly::linear(var.clone(), -r).pow(*m);
        }
        &acc * &self.residual
    }
}

/// Splits off all rational linear factors. Roots are reported zero first, then
/// by increasing absolute value with the positive candidate before the negative.
pub fn factor_poly(p: &UniPoly) -> Result<PolyFactorization> {
    if p.is_zero() {
        return Err(Error::ZeroInput("factor_poly"));
    }
    let var = p.var().to_string();
    let content = p.lead();
    let mut rest = p.monic();
    let mut roots = Vec::new();

    let zero_mult = rest.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        roots.push((Rat::zero(), zero_mult as u32));
        rest = UniPoly::new(var.clone(), rest.coeffs()[zero_mult..].to_vec());
    }

    if rest.degree().unwrap_or(0) > 0 {
        // Integer multiple with the same roots.
        let den_lcm = rest.coeffs().iter().fold(Int::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<Int> = rest.coeffs().iter().map(|c| (c * Rat::from_integer(den_lcm.clone())).to_integer()).collect();
        let a0 = ints[0].abs();
        let an = ints.last().expect("nonzero").abs();
        let nums = divisors(&a0)?;
        let dens = divisors(&an)?;
        let mut cands: Vec<Rat> = Vec::new();
        for n in &nums {
            for d in &dens {
                let c = Rat::new(n.clone(), d.clone());
                if !cands.contains(&c) {
                    cands.push(c);
                }
            }
        }
        cands.sort();
        for c in cands {
            for r in [c.clone(), -c] {
                let lin = UniPoly::linear(var.clone(), -&r);
                let mut mult = 0;
                while let Some(q) = rest.exact_div(&lin) {
                    rest = q;
                    mult += 1;
                }
                if mult > 0 {
                    roots.push((r, mult));
                }
            }
            if rest.degree() == Some(0) {
                break;
            }
        }
    }
    Ok(PolyFactorization { content, roots, residual: rest.monic() })
}

#[cfg(test)]
fn small(n: &Int) -> Option<i64> {
    num_traits::ToPrimitive::to_i64(n)
}
