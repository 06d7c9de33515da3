//! Local closures `P^S`, torsion, and the iterated-closure driver.

mod lattice_z;
mod weyl_verify;

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

pub use lattice_z::{
    determinant, ext_contr_check, hnf, lattice_closure_z, mat_mul, normal_forms_z, s_part, s_products, snf,
    torsion_z, ExtContrReport, IntLattice, Matrix, PresentedModule, Snf, Torsion,
};
pub use weyl_verify::{
    weyl_gens, weyl_saturation_verify, weyl_stability, SaturationCertificate, Stability, Verdict, WeylVerifyReport,
};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::ore::{ore_set_from_json, ore_set_to_json, OreKind, OreSetDesc};
use crate::rings::{exact_right_divide, Elem, Int, RingId, UniPoly, WeylOp};
use crate::saturation::{lsat_generators, SatMode, SaturatedSetDesc};
use crate::weyl::{groebner_basis, GroebnerBasis};

/// Generator of `(f)^S` in `K[x]`, monic.
pub fn poly_ideal_closure(f: &UniPoly, set: &SaturatedSetDesc) -> Result<UniPoly> {
    if f.is_zero() {
        return Err(Error::ZeroInput("poly_ideal_closure"));
    }
    if !matches!(set.ring(), RingId::QX(_)) {
        return Err(Error::RingMismatch { expected: RingId::qx(), found: set.ring() });
    }
    let fe = Elem::Poly(f.clone());
    let support = Elem::product(&fe.ring(), set.irreducibles())?;
    let s_part = fe.part_supported_on(&support).ok_or_else(|| Error::Invalid("closure of a zero ideal".into()))?;
    let kept = match set.mode() {
        SatMode::Finite => exact_right_divide(&fe, &s_part)?
            .ok_or_else(|| Error::Verification("S-part does not divide".into()))?,
        SatMode::Cofinite => s_part,
    };
    Ok(kept.as_poly().expect("polynomial in, polynomial out").monic())
}

/// Prime support of a finite saturated subset of `ℤ`.
pub fn finite_primes(set: &OreSetDesc) -> Result<Vec<Int>> {
    if set.ring != RingId::Z {
        return Err(Error::RingMismatch { expected: RingId::Z, found: set.ring.clone() });
    }
    let sat = lsat_generators(set)?;
    if sat.mode() != SatMode::Finite {
        return Err(Error::Unsupported(format!("lattice closure needs a finite prime set, got {sat}")));
    }
    Ok(sat.irreducibles().iter().filter_map(|p| p.as_int().cloned()).collect())
}

#[derive(Clone, Debug)]
pub struct ClosurePlan {
    pub sets: Vec<OreSetDesc>,
    pub schedule: Vec<usize>,
    pub commuting: bool,
}

impl ClosurePlan {
    pub fn new(sets: Vec<OreSetDesc>, schedule: Vec<usize>, commuting: bool) -> Result<Self> {
        if sets.is_empty() || schedule.is_empty() {
            return Err(Error::Invalid("a closure plan needs sets and a nonempty schedule".into()));
        }
        if let Some(i) = schedule.iter().find(|&&i| i >= sets.len()) {
            return Err(Error::Invalid(format!("schedule index {i} out of range")));
        }
        if let Some(s) = sets.iter().find(|s| !s.is_known_ore()) {
            return Err(Error::Unsupported(format!("{s} is not a known Ore set")));
        }
        Ok(Self { sets, schedule, commuting })
    }

    /// `rounds` passes over the sets in order.
    pub fn round_robin(sets: Vec<OreSetDesc>, rounds: usize, commuting: bool) -> Result<Self> {
        let n = sets.len();
        Self::new(sets, (0..rounds).flat_map(|_| 0..n).collect(), commuting)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "sets": self.sets.iter().map(ore_set_to_json).collect::<Vec<_>>(),
            "schedule": self.schedule,
            "commuting": self.commuting,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let sets = v["sets"]
            .as_array()
            .ok_or_else(|| Error::Invalid("plan needs \"sets\"".into()))?
            .iter()
            .map(ore_set_from_json)
            .collect::<Result<Vec<_>>>()?;
        let schedule = v["schedule"]
            .as_array()
            .ok_or_else(|| Error::Invalid("plan needs \"schedule\"".into()))?
            .iter()
            .map(|i| i.as_u64().map(|i| i as usize).ok_or_else(|| Error::Invalid(format!("bad index {i}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(sets, schedule, v["commuting"].as_bool().unwrap_or(false))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub step: usize,
    pub set_index: usize,
    pub state: String,
    pub changed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureVerdict {
    /// A full round over all sets left the state unchanged.
    Stabilized { step: usize },
    /// Commuting family: one pass over all sets reached the closure.
    CommutingPass { step: usize },
    NotStabilized,
}

impl ClosureVerdict {
    pub fn is_closed(&self) -> bool {
        !matches!(self, ClosureVerdict::NotStabilized)
    }
}

impl fmt::Display for ClosureVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureVerdict::Stabilized { step } => write!(f, "stabilized at step {step}"),
            ClosureVerdict::CommutingPass { step } => write!(f, "commuting pass complete at step {step}"),
            ClosureVerdict::NotStabilized => write!(f, "not stabilized"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureTrace {
    pub initial: String,
    pub steps: Vec<TraceStep>,
    pub verdict: ClosureVerdict,
}

impl ClosureTrace {
    pub fn to_json_lines(&self) -> String {
        let mut out = json!({ "step": 0, "state": self.initial }).to_string();
        out.push('\n');
        for s in &self.steps {
            out.push_str(
                &json!({ "step": s.step, "set": s.set_index, "state": s.state, "changed": s.changed }).to_string(),
            );
            out.push('\n');
        }
        out.push_str(&json!({ "verdict": self.verdict.to_string(), "closed": self.verdict.is_closed() }).to_string());
        out.push('\n');
        out
    }
}

/// Applies `oracle(i, P)` = `P^{S_i}` along the schedule.
pub fn iterated_closure<T, F>(start: T, plan: &ClosurePlan, mut oracle: F) -> Result<(T, ClosureTrace)>
where
    T: Clone + PartialEq + fmt::Display,
    F: FnMut(usize, &T) -> Result<T>,
{
    let all: BTreeSet<usize> = (0..plan.sets.len()).collect();
    let commuting = plan.commuting || all.len() == 1;
    let mut state = start;
    let initial = state.to_string();
    let mut steps = Vec::new();
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut unchanged_round: BTreeSet<usize> = BTreeSet::new();
    let mut verdict = ClosureVerdict::NotStabilized;
    for (k, &i) in plan.schedule.iter().enumerate() {
        let next = oracle(i, &state)?;
        let changed = next != state;
        state = next;
        steps.push(TraceStep { step: k + 1, set_index: i, state: state.to_string(), changed });
        seen.insert(i);
        if changed {
            unchanged_round.clear();
        } else {
            unchanged_round.insert(i);
        }
        if commuting && seen == all {
            verdict = ClosureVerdict::CommutingPass { step: k + 1 };
            break;
        }
        if unchanged_round == all {
            verdict = ClosureVerdict::Stabilized { step: k + 1 };
            break;
        }
    }
    Ok((state, ClosureTrace { initial, steps, verdict }))
}

/// Oracle for `ℤ`-lattices: each set acts through its prime support.
pub fn lattice_oracle(plan: &ClosurePlan) -> Result<impl FnMut(usize, &IntLattice) -> Result<IntLattice>> {
    let primes = plan.sets.iter().map(finite_primes).collect::<Result<Vec<_>>>()?;
    Ok(move |i: usize, p: &IntLattice| lattice_closure_z(p, &primes[i]))
}

/// A principal ideal of `K[x]` through its monic generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyIdeal(pub UniPoly);

impl fmt::Display for PolyIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0)
    }
}

pub fn poly_oracle(plan: &ClosurePlan) -> Result<impl FnMut(usize, &PolyIdeal) -> Result<PolyIdeal>> {
    let sats = plan.sets.iter().map(lsat_generators).collect::<Result<Vec<_>>>()?;
    Ok(move |i: usize, p: &PolyIdeal| poly_ideal_closure(&p.0, &sats[i]).map(PolyIdeal))
}

/// A left ideal of the Weyl algebra, compared through its Gröbner basis.
#[derive(Clone, Debug)]
pub struct WeylIdeal {
    pub gens: Vec<WeylOp>,
    pub gb: GroebnerBasis,
}

impl WeylIdeal {
    pub fn new(gens: Vec<WeylOp>, budget: &Budget) -> Result<Self> {
        let gb = groebner_basis(&gens, budget)?;
        Ok(Self { gens, gb })
    }
}

impl PartialEq for WeylIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.gb.same_ideal(&other.gb)
    }
}

impl fmt::Display for WeylIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", g.join(", "))
    }
}

/// Verify-mode oracle: a supplied candidate `(set index, from, to)` is accepted
/// only when certified; without a candidate the state must be stable up to budget.
pub fn weyl_candidate_oracle(
    plan: &ClosurePlan,
    candidates: Vec<(usize, Vec<WeylOp>, Vec<WeylOp>)>,
    budget: Budget,
) -> Result<impl FnMut(usize, &WeylIdeal) -> Result<WeylIdeal>> {
    let sets = plan.sets.clone();
    if let Some(s) = sets.iter().find(|s| s.ring != RingId::Weyl || matches!(s.kind, OreKind::Union(_))) {
        return Err(Error::Unsupported(format!("Weyl verify mode cannot use {s}")));
    }
    let cands = candidates
        .into_iter()
        .map(|(i, from, to)| Ok((i, WeylIdeal::new(from, &budget)?, to)))
        .collect::<Result<Vec<_>>>()?;
    Ok(move |i: usize, state: &WeylIdeal| {
        if let Some((_, _, to)) = cands.iter().find(|(j, from, _)| *j == i && from == state) {
            let report = weyl_saturation_verify(&state.gens, to, &sets[i], &budget)?;
            return match report.verdict {
                Verdict::Verified => WeylIdeal::new(to.clone(), &budget),
                Verdict::Refuted => Err(Error::Verification(format!("candidate {to:?} refuted for set {}", sets[i]))),
                Verdict::BudgetExhausted => Err(Error::Budget(format!("no certificate for every generator under {}", sets[i]))),
            };
        }
        match weyl_stability(&state.gb, &sets[i], &budget)? {
            Stability::StableUpToBudget => Ok(state.clone()),
            Stability::Unstable { element, multiplier } => Err(Error::Budget(format!(
                "{state} is not {}-stable ({multiplier} * {element}) and no candidate was supplied",
                sets[i]
            ))),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::ring_eval;

    fn poly(s: &str) -> UniPoly {
        ring_eval(s, &RingId::qx()).unwrap().as_poly().unwrap().clone()
    }

    fn z(n: i64) -> Elem {
        Elem::from_i64(&RingId::Z, n)
    }

    fn zset(p: i64) -> OreSetDesc {
        OreSetDesc::monoid(RingId::Z, vec![z(p)]).unwrap()
    }

    #[test]
    fn poly_closure_examples() {
        let sx = SaturatedSetDesc::finite(RingId::qx(), vec![Elem::Poly(poly("x"))]).unwrap();
        assert_eq!(poly_ideal_closure(&poly("x^2*(x+1)"), &sx).unwrap(), poly("x+1"));
        assert_eq!(poly_ideal_closure(&poly("2*x+2"), &sx).unwrap(), poly("x+1"));
        assert_eq!(poly_ideal_closure(&poly("x^3"), &sx).unwrap(), poly("1"));
        // complement {x}: everything coprime to x is inverted
        let cof = SaturatedSetDesc::cofinite(RingId::qx(), vec![Elem::Poly(poly("x"))]).unwrap();
        assert_eq!(poly_ideal_closure(&poly("x^2*(x+1)"), &cof).unwrap(), poly("x^2"));
    }

    #[test]
    fn commuting_pass_equals_single_shot() {
        let plan = ClosurePlan::new(vec![zset(2), zset(3)], vec![0, 1], true).unwrap();
        let p = IntLattice::from_i64(2, &[vec![12, 0], vec![0, 10]]).unwrap();
        let (out, trace) = iterated_closure(p.clone(), &plan, lattice_oracle(&plan).unwrap()).unwrap();
        assert_eq!(trace.verdict, ClosureVerdict::CommutingPass { step: 2 });
        assert_eq!(out, lattice_closure_z(&p, &[Int::from(2), Int::from(3)]).unwrap());
    }

    #[test]
    fn rule_c_needs_a_full_unchanged_round() {
        let p = IntLattice::from_i64(1, &[vec![12]]).unwrap();
        let plan = ClosurePlan::round_robin(vec![zset(2), zset(3)], 2, false).unwrap();
        let (out, trace) = iterated_closure(p.clone(), &plan, lattice_oracle(&plan).unwrap()).unwrap();
        assert_eq!(out, IntLattice::whole(1));
        assert_eq!(trace.verdict, ClosureVerdict::Stabilized { step: 4 });
        // a partial schedule cannot certify anything
        let plan = ClosurePlan::new(vec![zset(2), zset(3)], vec![0, 1], false).unwrap();
        let (_, trace) = iterated_closure(p, &plan, lattice_oracle(&plan).unwrap()).unwrap();
        assert_eq!(trace.verdict, ClosureVerdict::NotStabilized);
    }

    #[test]
    fn saturated_start_is_unchanged() {
        let p = IntLattice::from_i64(1, &[vec![5]]).unwrap();
        let plan = ClosurePlan::round_robin(vec![zset(2), zset(3)], 3, false).unwrap();
        let (out, trace) = iterated_closure(p.clone(), &plan, lattice_oracle(&plan).unwrap()).unwrap();
        assert_eq!(out, p);
        assert!(trace.steps.iter().all(|s| !s.changed));
        assert_eq!(trace.verdict, ClosureVerdict::Stabilized { step: 2 });
        assert_eq!(trace.to_json_lines().lines().count(), 4);
    }

    #[test]
    fn single_set_is_direct() {
        let p = IntLattice::from_i64(1, &[vec![12]]).unwrap();
        let plan = ClosurePlan::new(vec![zset(2)], vec![0], false).unwrap();
        let (out, trace) = iterated_closure(p, &plan, lattice_oracle(&plan).unwrap()).unwrap();
        assert_eq!(out, IntLattice::from_i64(1, &[vec![3]]).unwrap());
        assert!(trace.verdict.is_closed());
    }

    #[test]
    fn plan_json_round_trip() {
        let plan = ClosurePlan::new(vec![zset(2), zset(3)], vec![0, 1, 0], true).unwrap();
        let back = ClosurePlan::from_json(&plan.to_json()).unwrap();
        assert_eq!(back.schedule, plan.schedule);
        assert_eq!(back.sets, plan.sets);
        assert!(ClosurePlan::new(vec![zset(2)], vec![], false).is_err());
        assert!(ClosurePlan::new(vec![zset(2)], vec![1], false).is_err());
    }

    #[test]
    fn poly_driver() {
        let x = OreSetDesc::monoid(RingId::qx(), vec![Elem::Poly(poly("x"))]).unwrap();
        let x1 = OreSetDesc::monoid(RingId::qx(), vec![Elem::Poly(poly("x+1"))]).unwrap();
        let plan = ClosurePlan::new(vec![x, x1], vec![0, 1], true).unwrap();
        let (out, _) = iterated_closure(PolyIdeal(poly("x^2*(x+1)*(x-1)")), &plan, poly_oracle(&plan).unwrap()).unwrap();
        assert_eq!(out, PolyIdeal(poly("x-1")));
    }
}
