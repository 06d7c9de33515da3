//! Left fractions `s⁻¹r` in an Ore localization `S⁻¹R`, kept unreduced.

mod nested;

use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::ore::{contains, factor_word, lsat_witness, ore_set_from_json, ore_set_to_json, ore_solve, OreSetDesc, WitnessResult, Word};
use crate::rings::{parse_element, Elem, RingId, Tri};
use crate::saturation::{gens_in_closure, lsat_member};

pub use nested::{two_step_compose, NestedFraction};

/// A known Ore set together with the search budget used by its solvers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocCtx {
    pub set: OreSetDesc,
    pub budget: Budget,
}

impl LocCtx {
    pub fn new(set: OreSetDesc, budget: Budget) -> Result<Arc<Self>> {
        if !set.is_known_ore() {
            return Err(Error::Unsupported(format!("{set} is not a known left Ore set")));
        }
        Ok(Arc::new(Self { set, budget }))
    }

    pub fn ring(&self) -> RingId {
        self.set.ring.clone()
    }
}

/// The class of `(s, r)`, read as `s⁻¹ r`.
#[derive(Clone, Debug)]
pub struct Fraction {
    ctx: Arc<LocCtx>,
    den: Elem,
    num: Elem,
}

impl Fraction {
    /// Checks `den ∈ S`.
    pub fn new(ctx: &Arc<LocCtx>, den: Elem, num: Elem) -> Result<Self> {
        let ring = ctx.ring();
        for e in [&den, &num] {
            if e.ring() != ring {
                return Err(Error::RingMismatch { expected: ring, found: e.ring() });
            }
        }
        match contains(&ctx.set, &den, &ctx.budget)? {
            Tri::Yes => Ok(Self { ctx: ctx.clone(), den, num }),
            Tri::No => Err(Error::NotInSet { elem: den.to_string(), set: ctx.set.to_string() }),
            Tri::Unknown => Err(Error::Budget(format!("membership of {den} in {} undecided", ctx.set))),
        }
    }

    fn unchecked(ctx: &Arc<LocCtx>, den: Elem, num: Elem) -> Self {
        Self { ctx: ctx.clone(), den, num }
    }

    pub fn ctx(&self) -> &Arc<LocCtx> {
        &self.ctx
    }

    pub fn den(&self) -> &Elem {
        &self.den
    }

    pub fn num(&self) -> &Elem {
        &self.num
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn to_json(&self) -> Value {
        json!({"den": self.den.to_string(), "num": self.num.to_string(), "set": ore_set_to_json(&self.ctx.set)})
    }

    pub fn from_json(v: &Value, budget: Budget) -> Result<Self> {
        let set = ore_set_from_json(v.get("set").ok_or_else(|| Error::Invalid("missing field `set`".into()))?)?;
        let ctx = LocCtx::new(set, budget)?;
        let get = |k: &str| v.get(k).and_then(Value::as_str).ok_or_else(|| Error::Invalid(format!("missing string field `{k}`")));
        let ring = ctx.ring();
        Fraction::new(&ctx, parse_element(get("den")?, &ring)?, parse_element(get("num")?, &ring)?)
    }

    /// `(s/g, r/g)` for `g = gcd(s, r)` in ℤ or ℚ[x]; for display only, since
    /// the reduced denominator need not lie in `S`.
    pub fn reduced_display(&self) -> String {
        if let Some(g) = self.den.gcd(&self.num) {
            let div = |e: &Elem| crate::rings::exact_right_divide(e, &g).ok().flatten().unwrap_or_else(|| e.clone());
            return format!("({}, {})", div(&self.den), div(&self.num));
        }
        self.to_string()
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.den, self.num)
    }
}

fn same_ctx(a: &Fraction, b: &Fraction) -> Result<()> {
    if a.ctx.set != b.ctx.set {
        return Err(Error::Invalid(format!("fractions over different sets {} and {}", a.ctx.set, b.ctx.set)));
    }
    Ok(())
}

/// `r ↦ (1, r)`.
pub fn embed(ctx: &Arc<LocCtx>, r: &Elem) -> Result<Fraction> {
    Fraction::new(ctx, Elem::one(&ctx.ring()), r.clone())
}

pub fn frac_zero(ctx: &Arc<LocCtx>) -> Fraction {
    Fraction::unchecked(ctx, Elem::one(&ctx.ring()), Elem::zero(&ctx.ring()))
}

pub fn frac_one(ctx: &Arc<LocCtx>) -> Fraction {
    Fraction::unchecked(ctx, Elem::one(&ctx.ring()), Elem::one(&ctx.ring()))
}

/// With `ŝs₂ = r̂s₁` from the Ore solver, the classes agree iff `ŝr₂ = r̂r₁`
/// (any further left factor cancels in a domain).
pub fn frac_equals(a: &Fraction, b: &Fraction) -> Result<bool> {
    same_ctx(a, b)?;
    if a.den == b.den {
        return Ok(a.num == b.num);
    }
    let p = ore_solve(&a.ctx.set, &a.den, &b.den, &a.ctx.budget)?;
    Ok(p.s_tilde.mul(&b.num)? == p.r_tilde.mul(&a.num)?)
}

/// `(s̃s₁, s̃r₁ + r̃r₂)` where `s̃s₁ = r̃s₂`.
pub fn frac_add(a: &Fraction, b: &Fraction) -> Result<Fraction> {
    same_ctx(a, b)?;
    if a.den == b.den {
        return Ok(Fraction::unchecked(&a.ctx, a.den.clone(), a.num.add(&b.num)?));
    }
    let p = ore_solve(&a.ctx.set, &b.den, &a.den, &a.ctx.budget)?;
    let den = p.s_tilde.mul(&a.den)?;
    let num = p.s_tilde.mul(&a.num)?.add(&p.r_tilde.mul(&b.num)?)?;
    Ok(Fraction::unchecked(&a.ctx, den, num))
}

pub fn frac_neg(a: &Fraction) -> Fraction {
    Fraction::unchecked(&a.ctx, a.den.clone(), a.num.neg())
}

pub fn frac_sub(a: &Fraction, b: &Fraction) -> Result<Fraction> {
    frac_add(a, &frac_neg(b))
}

/// `(s̃s₁, r̃r₂)` where `s̃r₁ = r̃s₂`.
pub fn frac_mul(a: &Fraction, b: &Fraction) -> Result<Fraction> {
    same_ctx(a, b)?;
    let p = ore_solve(&a.ctx.set, &b.den, &a.num, &a.ctx.budget)?;
    let den = p.s_tilde.mul(&a.den)?;
    let num = p.r_tilde.mul(&b.num)?;
    Ok(Fraction::unchecked(&a.ctx, den, num))
}

#[derive(Clone, Debug)]
pub enum UnitInverse {
    Inverse(Fraction),
    NotUnit,
    Unknown,
}

/// `(s, r)` is a unit iff `r ∈ LSat(S)`; with `wr ∈ S` the inverse is `(wr, w)·(1, s)`.
pub fn unit_invert(a: &Fraction) -> Result<UnitInverse> {
    if a.is_zero() {
        return Err(Error::ZeroInput("unit_invert"));
    }
    let ctx = &a.ctx;
    let w = match lsat_witness(&ctx.set, &a.num, &ctx.budget)? {
        WitnessResult::Found(w) => w,
        WitnessResult::ProvenAbsent => return Ok(UnitInverse::NotUnit),
        WitnessResult::Unknown => return Ok(UnitInverse::Unknown),
    };
    let first = Fraction::new(ctx, w.mul(&a.num)?, w)?;
    let inv = frac_mul(&first, &Fraction::unchecked(ctx, Elem::one(&ctx.ring()), a.den.clone()))?;
    let one = frac_one(ctx);
    if !frac_equals(&frac_mul(&inv, a)?, &one)? || !frac_equals(&frac_mul(a, &inv)?, &one)? {
        return Err(Error::Verification(format!("inverse {inv} of {a}")));
    }
    Ok(UnitInverse::Inverse(inv))
}

/// The five equivalent forms of equality of `(s₁, r₁)` and `(s₂, r₂)`, each
/// computed from its own certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityForms {
    /// `s̃s₂ = r̃s₁`, `s̃r₂ = r̃r₁` with `s̃ ∈ S`.
    pub tilde: bool,
    /// Every Ore pair `(ŝ, r̂)` works after a left factor `s̄`; checked on the solver's pair.
    pub all_pairs: bool,
    /// Some `ŝ, s̄ ∈ S`; here `s̄ = 1`.
    pub some_pair: bool,
    /// `as₂ = bs₁ ∈ S` and `ar₂ = br₁`, from the swapped solver call.
    pub common_multiple: bool,
    /// `s̊ ∈ S` and `x̊ ∈ LSat(S)`; `x̊` is membership-checked.
    pub saturated: Tri,
}

pub fn equality_forms(a: &Fraction, b: &Fraction) -> Result<EqualityForms> {
    same_ctx(a, b)?;
    let ctx = &a.ctx;
    let (s1, r1, s2, r2) = (&a.den, &a.num, &b.den, &b.num);
    let p = ore_solve(&ctx.set, s1, s2, &ctx.budget)?;
    let tilde = p.s_tilde.mul(r2)? == p.r_tilde.mul(r1)?;
    let sbar = Elem::one(&ctx.ring());
    let all_pairs = sbar.mul(&p.s_tilde)?.mul(r2)? == sbar.mul(&p.r_tilde)?.mul(r1)?;
    let some_pair = all_pairs;
    // swapped: b·s₁ = a·s₂ with b = s̃' ∈ S, so the common multiple lies in S
    let q = ore_solve(&ctx.set, s2, s1, &ctx.budget)?;
    let (ca, cb) = (&q.r_tilde, &q.s_tilde);
    let cm = cb.mul(s1)?;
    debug_assert_eq!(ca.mul(s2)?, cm);
    let common_multiple = contains(&ctx.set, &cm, &ctx.budget)?.is_yes() && ca.mul(r2)? == cb.mul(r1)?;
    let saturated = if tilde {
        if p.r_tilde.is_zero() {
            Tri::No
        } else {
            lsat_member(&ctx.set, &p.r_tilde, &ctx.budget)?
        }
    } else {
        Tri::No
    };
    Ok(EqualityForms { tilde, all_pairs, some_pair, common_multiple, saturated })
}

/// Witnesses `w_s` with `w_s·s ∈ T`, assembled over a factorization of `s`
/// into generators of `S`: `w_{uv} = w̃·w_u` where `t̃·w_v = w̃·(w_u u)`.
fn composed_witness(s_set: &OreSetDesc, t: &Arc<LocCtx>, s: &Elem, supplied: &[(Elem, Elem)]) -> Result<Elem> {
    let budget = &t.budget;
    let single = |g: &Elem| -> Result<Elem> {
        if let Some((_, w)) = supplied.iter().find(|(h, _)| h == g) {
            if !contains(&t.set, &w.mul(g)?, budget)?.is_yes() {
                return Err(Error::Invalid(format!("supplied witness {w} does not send {g} into {}", t.set)));
            }
            return Ok(w.clone());
        }
        if contains(&t.set, g, budget)?.is_yes() {
            return Ok(Elem::one(&t.ring()));
        }
        match lsat_witness(&t.set, g, budget)? {
            WitnessResult::Found(w) => Ok(w),
            _ => Err(Error::MissingWitness(g.to_string())),
        }
    };
    let word = match factor_word(s_set, s, budget) {
        Ok(Word::Found(word)) => word.into_iter().map(|(_, e)| e).collect(),
        _ => vec![s.clone()],
    };
    let mut prefix = Elem::one(&t.ring());
    let mut w_prefix = Elem::one(&t.ring());
    for g in &word {
        let w_g = single(g)?;
        if prefix.is_one() {
            w_prefix = w_g;
        } else {
            let pair = ore_solve(&t.set, &w_prefix.mul(&prefix)?, &w_g, budget)?;
            w_prefix = pair.r_tilde.mul(&w_prefix)?;
        }
        prefix = prefix.mul(g)?;
    }
    if !contains(&t.set, &w_prefix.mul(s)?, budget)?.is_yes() {
        return Err(Error::Verification(format!("composed witness {w_prefix} for {s}")));
    }
    Ok(w_prefix)
}

/// The `R`-fixing map `S⁻¹R → T⁻¹R`, `(s, r) ↦ (w_s s, w_s r)`, defined when
/// `S ⊆ LSat(T)`. Witnesses for generators may be supplied as `(g, w_g)`.
pub fn omega_map(t: &Arc<LocCtx>, a: &Fraction, supplied: &[(Elem, Elem)]) -> Result<Fraction> {
    if a.ctx.ring() != t.ring() {
        return Err(Error::RingMismatch { expected: t.ring(), found: a.ctx.ring() });
    }
    if contains(&t.set, &a.den, &t.budget)?.is_yes() {
        return Ok(Fraction::unchecked(t, a.den.clone(), a.num.clone()));
    }
    let w = composed_witness(&a.ctx.set, t, &a.den, supplied)?;
    Fraction::new(t, w.mul(&a.den)?, w.mul(&a.num)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomIso {
    None,
    Hom,
    Iso,
    Unknown,
}

impl fmt::Display for HomIso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HomIso::None => "none",
            HomIso::Hom => "hom",
            HomIso::Iso => "iso",
            HomIso::Unknown => "unknown",
        })
    }
}

/// Whether an `R`-fixing homomorphism `S⁻¹R → T⁻¹R` exists, and whether it is an isomorphism.
pub fn hom_iso_check(s: &OreSetDesc, t: &OreSetDesc, budget: &Budget) -> Result<HomIso> {
    if s.ring != t.ring {
        return Err(Error::RingMismatch { expected: s.ring.clone(), found: t.ring.clone() });
    }
    Ok(match gens_in_closure(s, t, budget)? {
        Tri::No => HomIso::None,
        Tri::Unknown => HomIso::Unknown,
        Tri::Yes => match gens_in_closure(t, s, budget)? {
            Tri::Yes => HomIso::Iso,
            Tri::No => HomIso::Hom,
            Tri::Unknown => HomIso::Unknown,
        },
    })
}

/// Fractions `x ≠ 0` and `y` with `x·a = y·b` in a commutative localization.
pub fn frac_ore_pair(a: &Fraction, b: &Fraction) -> Result<(Fraction, Fraction)> {
    same_ctx(a, b)?;
    let ctx = &a.ctx;
    if !ctx.ring().is_commutative() {
        return Err(Error::Unsupported("fraction Ore pairs are built over commutative rings".into()));
    }
    if b.is_zero() {
        return Err(Error::ZeroInput("frac_ore_pair"));
    }
    let one = Elem::one(&ctx.ring());
    let (x, y) = if frac_equals(a, b)? {
        (frac_one(ctx), frac_one(ctx))
    } else {
        // x' = r₂, y' = r₁, then x = (1, x' s₁), y = (1, y' s₂)
        let x = Fraction::unchecked(ctx, one.clone(), b.num.mul(&a.den)?);
        let y = Fraction::unchecked(ctx, one, a.num.mul(&b.den)?);
        (x, y)
    };
    if !frac_equals(&frac_mul(&x, a)?, &frac_mul(&y, b)?)? {
        return Err(Error::Verification(format!("Ore pair for {a} and {b}")));
    }
    Ok((x, y))
}
