//! Left Gröbner bases in the first Weyl algebra.
//!
//! The order is degree-compatible, so the leading monomial of `m·g` for a
//! monomial `m` is the exponent sum; left reduction therefore mirrors the
//! commutative case with the Weyl product.

use std::cmp::Ordering;
use std::collections::VecDeque;

use num_traits::One;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::rings::{Exp, Rat, WeylOp};

/// Total degree first, ties broken by the ∂-exponent, then the x-exponent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MonomialOrder {
    #[default]
    DegLexDx,
}

impl MonomialOrder {
    pub fn cmp(&self, e1: Exp, e2: Exp) -> Ordering {
        (e1.0 + e1.1, e1.1, e1.0).cmp(&(e2.0 + e2.1, e2.1, e2.0))
    }

    pub fn lead(&self, p: &WeylOp) -> Option<(Exp, Rat)> {
        p.raw_terms().iter().max_by(|(a, _), (b, _)| self.cmp(**a, **b)).map(|(e, c)| (*e, c.clone()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub generators: Vec<WeylOp>,
    pub order: MonomialOrder,
}

fn divides(a: Exp, b: Exp) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

fn monic(order: MonomialOrder, p: &WeylOp) -> WeylOp {
    match order.lead(p) {
        Some((_, c)) => p.scale(&c.recip()),
        None => p.clone(),
    }
}

/// Full left reduction of `p` modulo `gens` (each with a known leading term).
fn reduce(order: MonomialOrder, p: &WeylOp, gens: &[(WeylOp, Exp, Rat)]) -> WeylOp {
    let mut rest = p.clone();
    let mut rem = WeylOp::zero();
    while let Some((lm, lc)) = order.lead(&rest) {
        match gens.iter().find(|(_, g_lm, _)| divides(*g_lm, lm)) {
            Some((g, g_lm, g_lc)) => {
                let m = WeylOp::term(&lc / g_lc, lm.0 - g_lm.0, lm.1 - g_lm.1);
                rest = &rest - &(&m * g);
            }
            None => {
                let t = WeylOp::term(lc, lm.0, lm.1);
                rest = &rest - &t;
                rem = &rem + &t;
            }
        }
    }
    rem
}

fn with_leads(order: MonomialOrder, gens: &[WeylOp]) -> Vec<(WeylOp, Exp, Rat)> {
    gens.iter()
        .map(|g| {
            let (e, c) = order.lead(g).expect("nonzero generator");
            (g.clone(), e, c)
        })
        .collect()
}

fn spoly(order: MonomialOrder, f: &WeylOp, g: &WeylOp) -> WeylOp {
    let (ef, cf) = order.lead(f).expect("nonzero");
    let (eg, cg) = order.lead(g).expect("nonzero");
    let l = (ef.0.max(eg.0), ef.1.max(eg.1));
    let mf = WeylOp::term(cf.recip(), l.0 - ef.0, l.1 - ef.1);
    let mg = WeylOp::term(cg.recip(), l.0 - eg.0, l.1 - eg.1);
    &(&mf * f) - &(&mg * g)
}

/// Buchberger completion with a first-in-first-out pair queue, followed by
/// interreduction. The result is the reduced basis, monic and sorted by
/// descending leading monomial.
pub fn groebner_basis(gens: &[WeylOp], budget: &Budget) -> Result<GroebnerBasis> {
    let order = MonomialOrder::DegLexDx;
    let mut basis: Vec<WeylOp> = gens.iter().filter(|g| !g.is_zero()).map(|g| monic(order, g)).collect();
    if basis.is_empty() {
        return Err(Error::ZeroInput("groebner_basis generators"));
    }
    basis.dedup();
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push_back((i, j));
        }
    }
    let mut processed = 0usize;
    while let Some((i, j)) = pairs.pop_front() {
        processed += 1;
        if processed > budget.gb_pair_limit {
            return Err(Error::Budget(format!("Gröbner pair limit {} exceeded", budget.gb_pair_limit)));
        }
        let s = spoly(order, &basis[i], &basis[j]);
        let h = reduce(order, &s, &with_leads(order, &basis));
        if h.is_zero() {
            continue;
        }
        let h = monic(order, &h);
        if h.is_one() {
            basis = vec![h];
            break;
        }
        let k = basis.len();
        basis.push(h);
        for i in 0..k {
            pairs.push_back((i, k));
        }
    }
    Ok(GroebnerBasis { generators: interreduce(order, basis), order })
}

fn interreduce(order: MonomialOrder, mut basis: Vec<WeylOp>) -> Vec<WeylOp> {
    // drop elements whose leading monomial is a multiple of another's
    basis.sort_by(|a, b| order.cmp(order.lead(a).unwrap().0, order.lead(b).unwrap().0));
    let mut minimal: Vec<WeylOp> = Vec::new();
    for g in basis {
        let lm = order.lead(&g).unwrap().0;
        if !minimal.iter().any(|h| divides(order.lead(h).unwrap().0, lm)) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<WeylOp> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
        let (lm, lc) = order.lead(g).unwrap();
        let tail = &g.scale(&lc.recip()) - &WeylOp::monomial(lm.0, lm.1);
        let tail = if others.is_empty() { tail } else { reduce(order, &tail, &with_leads(order, &others)) };
        out.push(&WeylOp::monomial(lm.0, lm.1) + &tail);
    }
    out.sort_by(|a, b| order.cmp(order.lead(b).unwrap().0, order.lead(a).unwrap().0));
    out
}

impl GroebnerBasis {
    pub fn normal_form(&self, r: &WeylOp) -> WeylOp {
        reduce(self.order, r, &with_leads(self.order, &self.generators))
    }

    pub fn contains(&self, r: &WeylOp) -> bool {
        self.normal_form(r).is_zero()
    }

    pub fn is_whole_ring(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    pub fn leading_exponents(&self) -> Vec<Exp> {
        self.generators.iter().map(|g| self.order.lead(g).unwrap().0).collect()
    }

    /// Every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let leads = with_leads(self.order, &self.generators);
        for j in 0..self.generators.len() {
            for i in 0..j {
                let s = spoly(self.order, &self.generators[i], &self.generators[j]);
                if !reduce(self.order, &s, &leads).is_zero() {
                    return false;
                }
            }
        }
        self.generators.iter().all(|g| self.order.lead(g).is_some_and(|(_, c)| c.is_one()))
    }

    /// Equal left ideals have equal reduced bases.
    pub fn same_ideal(&self, other: &GroebnerBasis) -> bool {
        self.generators == other.generators
    }

    pub fn contains_all(&self, gens: &[WeylOp]) -> bool {
        gens.iter().all(|g| self.contains(g))
    }
}

/// Membership in the left ideal together with the normal form.
pub fn ideal_member(r: &WeylOp, gb: &GroebnerBasis) -> (bool, WeylOp) {
    let nf = gb.normal_form(r);
    (nf.is_zero(), nf)
}
