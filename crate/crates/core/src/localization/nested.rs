//! Two-step localization of a commutative domain: `T⁻¹(S⁻¹R) ≅ [S ∪ T]⁻¹R`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ore::{contains, OreSetDesc};
use crate::rings::Elem;

use super::{Fraction, LocCtx};

/// `(1, t)⁻¹ · (s, r)` with `t ∈ T` and `(s, r) ∈ S⁻¹R`.
#[derive(Clone, Debug)]
pub struct NestedFraction {
    pub t: Elem,
    pub inner: Fraction,
}

impl NestedFraction {
    pub fn new(t_set: &OreSetDesc, t: Elem, inner: Fraction) -> Result<Self> {
        if !contains(t_set, &t, &inner.ctx().budget)?.is_yes() {
            return Err(Error::NotInSet { elem: t.to_string(), set: t_set.to_string() });
        }
        Ok(Self { t, inner })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let (a, b) = (&self.inner, &other.inner);
        let den = a.den().mul(b.den())?;
        let num = a.num().mul(b.den())?.mul(&other.t)?.add(&b.num().mul(a.den())?.mul(&self.t)?)?;
        Ok(Self { t: self.t.mul(&other.t)?, inner: Fraction::unchecked(a.ctx(), den, num) })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = (&self.inner, &other.inner);
        let inner = Fraction::unchecked(a.ctx(), a.den().mul(b.den())?, a.num().mul(b.num())?);
        Ok(Self { t: self.t.mul(&other.t)?, inner })
    }
}

/// `((1, t), (s, r)) ↦ (st, r)` into the localization at `W = [S ∪ T]`.
pub fn two_step_compose(t_set: &OreSetDesc, n: &NestedFraction) -> Result<Fraction> {
    let s_ctx = n.inner.ctx();
    if !s_ctx.ring().is_commutative() {
        return Err(Error::Unsupported("two-step localization is built over commutative rings".into()));
    }
    let w_set = OreSetDesc::union(vec![s_ctx.set.clone(), t_set.clone()])?;
    let w: Arc<LocCtx> = LocCtx::new(w_set, s_ctx.budget)?;
    Fraction::new(&w, n.inner.den().mul(&n.t)?, n.inner.num().clone())
}

#[cfg(test)]
mod tests {
    use super::super::{embed, frac_add, frac_equals, frac_mul};
    use super::*;
    use crate::budget::Budget;
    use crate::rings::RingId;

    fn z(n: i64) -> Elem {
        Elem::from_i64(&RingId::Z, n)
    }

    #[test]
    fn compose_examples() {
        let s = OreSetDesc::monoid(RingId::Z, vec![z(2)]).unwrap();
        let t = OreSetDesc::monoid(RingId::Z, vec![z(3)]).unwrap();
        let sc = LocCtx::new(s, Budget::default()).unwrap();
        let n = NestedFraction::new(&t, z(3), Fraction::new(&sc, z(2), z(5)).unwrap()).unwrap();
        let f = two_step_compose(&t, &n).unwrap();
        assert_eq!((f.den().clone(), f.num().clone()), (z(6), z(5)));
        let n = NestedFraction::new(&t, z(9), Fraction::new(&sc, z(4), z(7)).unwrap()).unwrap();
        let f = two_step_compose(&t, &n).unwrap();
        assert_eq!((f.den().clone(), f.num().clone()), (z(36), z(7)));
        // t = 1 is the plain embedding
        let n = NestedFraction::new(&t, z(1), embed(&sc, &z(11)).unwrap()).unwrap();
        assert!(frac_equals(&two_step_compose(&t, &n).unwrap(), &embed(two_step_compose(&t, &n).unwrap().ctx(), &z(11)).unwrap()).unwrap());
    }

    #[test]
    fn compose_respects_operations() {
        let s = OreSetDesc::monoid(RingId::Z, vec![z(2)]).unwrap();
        let t = OreSetDesc::monoid(RingId::Z, vec![z(3)]).unwrap();
        let sc = LocCtx::new(s, Budget::default()).unwrap();
        let a = NestedFraction::new(&t, z(3), Fraction::new(&sc, z(2), z(5)).unwrap()).unwrap();
        let b = NestedFraction::new(&t, z(9), Fraction::new(&sc, z(8), z(-1)).unwrap()).unwrap();
        let f = |n: &NestedFraction| two_step_compose(&t, n).unwrap();
        assert!(frac_equals(&f(&a.add(&b).unwrap()), &frac_add(&f(&a), &f(&b)).unwrap()).unwrap());
        assert!(frac_equals(&f(&a.mul(&b).unwrap()), &frac_mul(&f(&a), &f(&b)).unwrap()).unwrap());
    }
}
