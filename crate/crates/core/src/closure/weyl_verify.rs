//! Certificate checks for closures of left ideals of the Weyl algebra.

use serde_json::{json, Value};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::ore::{enumerate, OreKind, OreSetDesc};
use crate::rings::{weyl_left_divide, Elem, RingId, WeylOp};
use crate::weyl::{groebner_basis, ideal_member, GroebnerBasis};

/// `multiplier · generator` lies in the old ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationCertificate {
    pub generator: WeylOp,
    pub multiplier: WeylOp,
}

impl SaturationCertificate {
    pub fn verify(&self, old: &GroebnerBasis) -> bool {
        ideal_member(&(&self.multiplier * &self.generator), old).0
    }

    pub fn to_json(&self) -> Value {
        json!({ "generator": self.generator.to_string(), "multiplier": self.multiplier.to_string() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stability {
    /// No `s⁻¹`-peeling of a Gröbner element within budget leaves the ideal.
    StableUpToBudget,
    /// `multiplier · element` lies in the ideal but `element` does not.
    Unstable { element: WeylOp, multiplier: WeylOp },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    Refuted,
    BudgetExhausted,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::Refuted => "refuted",
            Verdict::BudgetExhausted => "budget-exhausted",
        }
    }
}

#[derive(Clone, Debug)]
pub struct WeylVerifyReport {
    /// Every old generator lies in the candidate ideal.
    pub containment: bool,
    pub certificates: Vec<SaturationCertificate>,
    /// Candidate generators without a certificate inside the budget.
    pub missing: Vec<WeylOp>,
    pub stability: Stability,
    pub candidate_gb: GroebnerBasis,
    pub verdict: Verdict,
}

impl WeylVerifyReport {
    pub fn to_json(&self) -> Value {
        let stability = match &self.stability {
            Stability::StableUpToBudget => json!({ "stable": true }),
            Stability::Unstable { element, multiplier } => json!({
                "stable": false, "element": element.to_string(), "multiplier": multiplier.to_string()
            }),
        };
        json!({
            "verdict": self.verdict.as_str(),
            "containment": self.containment,
            "certificates": self.certificates.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "missing": self.missing.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "stability": stability,
            "candidate_gb": self.candidate_gb.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        })
    }
}

fn check_shape(set: &OreSetDesc) -> Result<()> {
    if set.ring != RingId::Weyl {
        return Err(Error::RingMismatch { expected: RingId::Weyl, found: set.ring.clone() });
    }
    let ok = match &set.kind {
        OreKind::EulerSet(_) => true,
        OreKind::MonoidGens(gens) => gens.iter().all(|g| {
            g.as_weyl().is_some_and(|w| w.as_x_poly().is_some() || w.as_d_poly().is_some())
        }),
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("closure verification needs [x], [d] or Theta_z, got {set}")))
    }
}

/// Multipliers from `S` up to the exponent budget, smallest first.
fn multipliers(set: &OreSetDesc, budget: &Budget) -> Result<Vec<WeylOp>> {
    let (elems, _) = enumerate(set, budget.exponent)?;
    Ok(elems.into_iter().filter_map(|e| e.as_weyl().cloned()).collect())
}

/// `s⁻¹`-peeling of the Gröbner elements of `ideal`.
pub fn weyl_stability(ideal: &GroebnerBasis, set: &OreSetDesc, budget: &Budget) -> Result<Stability> {
    check_shape(set)?;
    let mults = multipliers(set, budget)?;
    for h in &ideal.generators {
        for s in mults.iter().filter(|s| !s.is_one()) {
            if let Some(q) = weyl_left_divide(h, s) {
                if !ideal.contains(&q) {
                    return Ok(Stability::Unstable { element: q, multiplier: s.clone() });
                }
            }
        }
    }
    Ok(Stability::StableUpToBudget)
}

/// Checks `L ⊆ J ⊆ L^S` with certificates and reports whether `J` looks `S`-stable.
pub fn weyl_saturation_verify(
    l_gens: &[WeylOp],
    candidate_gens: &[WeylOp],
    set: &OreSetDesc,
    budget: &Budget,
) -> Result<WeylVerifyReport> {
    check_shape(set)?;
    if l_gens.is_empty() || candidate_gens.is_empty() {
        return Err(Error::Invalid("both ideals need generators".into()));
    }
    let old = groebner_basis(l_gens, budget)?;
    let cand = groebner_basis(candidate_gens, budget)?;
    let containment = cand.contains_all(l_gens);
    let mults = multipliers(set, budget)?;
    let mut certificates = Vec::new();
    let mut missing = Vec::new();
    for g in candidate_gens {
        match mults.iter().find(|s| ideal_member(&(*s * g), &old).0) {
            Some(s) => certificates.push(SaturationCertificate { generator: g.clone(), multiplier: s.clone() }),
            None => missing.push(g.clone()),
        }
    }
    if !certificates.iter().all(|c| c.verify(&old)) {
        return Err(Error::Verification("saturation certificate failed to re-verify".into()));
    }
    let stability = weyl_stability(&cand, set, budget)?;
    let verdict = if !containment || matches!(stability, Stability::Unstable { .. }) {
        Verdict::Refuted
    } else if missing.is_empty() {
        Verdict::Verified
    } else {
        Verdict::BudgetExhausted
    };
    Ok(WeylVerifyReport { containment, certificates, missing, stability, candidate_gb: cand, verdict })
}

/// Reads Weyl generators from elements, rejecting other rings.
pub fn weyl_gens(elems: &[Elem]) -> Result<Vec<WeylOp>> {
    elems
        .iter()
        .map(|e| e.as_weyl().cloned().ok_or(Error::RingMismatch { expected: RingId::Weyl, found: e.ring() }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::ring_eval;

    fn w(s: &str) -> WeylOp {
        ring_eval(s, &RingId::Weyl).unwrap().as_weyl().unwrap().clone()
    }

    fn set(g: &str) -> OreSetDesc {
        OreSetDesc::monoid(RingId::Weyl, vec![Elem::Weyl(w(g))]).unwrap()
    }

    fn l() -> Vec<WeylOp> {
        vec![w("d*(x*d+3)*(3*x*d+1)*(x+d)")]
    }

    fn l1() -> Vec<WeylOp> {
        vec![w("3*x^4*d^2 + (3*x^5 + x^3)*d + 4*x^4"), w("3*x^2*d^3 + (3*x^3 + 13*x)*d^2 + (19*x^2 + 3)*d + 16*x")]
    }

    fn l2() -> Vec<WeylOp> {
        vec![w("(3*x*d+1)*(d+x)")]
    }

    #[test]
    fn d_closure_of_l() {
        let b = Budget::default().with_exponent(6);
        let r = weyl_saturation_verify(&l(), &l1(), &set("d"), &b).unwrap();
        assert!(r.containment);
        assert!(r.missing.is_empty());
        assert!(r.certificates.iter().all(|c| c.multiplier.d_degree().unwrap() <= 6));
    }

    #[test]
    fn candidate_equal_to_old_needs_no_multiplier() {
        let r = weyl_saturation_verify(&l(), &l(), &set("x"), &Budget::default().with_exponent(6)).unwrap();
        assert!(r.certificates.iter().all(|c| c.multiplier.is_one()));
        assert_eq!(r.verdict, Verdict::Verified);
    }

    #[test]
    fn x_closure_of_l1_and_stability() {
        let b = Budget::default().with_exponent(6);
        let r = weyl_saturation_verify(&l1(), &l2(), &set("x"), &b).unwrap();
        assert!(r.containment && r.missing.is_empty());
        assert_eq!(r.verdict, Verdict::Verified);
        let gb = groebner_basis(&l2(), &b).unwrap();
        assert_eq!(weyl_stability(&gb, &set("d"), &b).unwrap(), Stability::StableUpToBudget);
        // the original generator peels off a leading d
        let gb = groebner_basis(&l(), &b).unwrap();
        assert!(matches!(weyl_stability(&gb, &set("d"), &b).unwrap(), Stability::Unstable { .. }));
    }

    #[test]
    fn l2_factors_as_stated() {
        assert_eq!(w("(3*x*d+1)*(d+x)"), w("3*x*d^2 + (3*x^2+1)*d + 4*x"));
    }
}
