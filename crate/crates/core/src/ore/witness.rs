//! Saturation witnesses `w·r ∈ S` and bounded searches for Ore-condition failures.

use std::collections::HashSet;

use num_traits::One;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::rings::{exact_right_divide, int, Elem, Rat, RingId, WeylOp};
use crate::saturation::{commutative_witness, fourier_image, weyl_exact_member, x_image, WeylSatDesc};
use crate::weyl::{euler_factors, fourier, fourier_inv, theta_form, ThetaY};

use super::{check_ring, contains, OreKind, OreSetDesc, OrePair};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessResult {
    Found(Elem),
    ProvenAbsent,
    /// The bounded search ran out.
    Unknown,
}

fn confirm(set: &OreSetDesc, w: &Elem, r: &Elem, budget: &Budget) -> Result<bool> {
    Ok(contains(set, &w.mul(r)?, budget)?.is_yes())
}

/// `W·u ∈ [x, ∂]` for `u = Π (θ + kᵢ)` with integer `kᵢ`: each factor is
/// completed to `∂^k x^k = (θ+1)···(θ+k)` or `x^m ∂^m = θ(θ-1)···(θ-m+1)`.
fn xd_completion(shifts: &[i64]) -> WeylOp {
    let theta = |c: i64| WeylOp::theta_shift(&int(c));
    let mut w = WeylOp::one();
    for &k in shifts {
        let range: Vec<i64> = if k >= 1 { (1..=k).collect() } else { (k..=0).collect() };
        for j in range.into_iter().filter(|j| *j != k) {
            w = &w * &theta(j);
        }
    }
    w
}

/// Candidate witnesses from the normal form of `LSat(Θ_z)` and `LSat([x, ∂])`.
fn structured_witnesses(desc: &WeylSatDesc, r: &WeylOp) -> Result<Vec<WeylOp>> {
    let tf = theta_form(r)?;
    let c_inv = WeylOp::constant(tf.coeff.recip());
    let mut out = Vec::new();
    let first = match tf.y {
        ThetaY::None => c_inv,
        ThetaY::D => &c_inv * &WeylOp::monomial(tf.n, 0),
        ThetaY::X => &c_inv * &WeylOp::monomial(0, tf.n),
    };
    out.push(first.clone());
    if let WeylSatDesc::UnionXD = desc {
        let p = &first * r;
        if let Some(ws) = euler_factors(&int(0), &p) {
            let shifts: Option<Vec<i64>> = ws.iter().map(|k| num_traits::ToPrimitive::to_i64(&k.to_integer())).collect();
            if let Some(shifts) = shifts {
                out.push(&xd_completion(&shifts) * &first);
            }
        }
    }
    Ok(out)
}

/// Monomials `x^a ∂^b` by total degree, then the same multiplied by `θ + k`.
fn search_candidates(budget: &Budget) -> Vec<WeylOp> {
    let deg = budget.degree;
    let mut monos = Vec::new();
    for t in 0..=deg {
        for b in 0..=t {
            monos.push(WeylOp::monomial(t - b, b));
        }
    }
    let mut out = monos.clone();
    for k in [0i64, 1, -1, 2, -2] {
        let th = WeylOp::theta_shift(&int(k));
        out.extend(monos.iter().filter(|m| m.total_degree().unwrap_or(0) + 2 <= deg).map(|m| &th * m));
    }
    out
}

fn bounded_search(set: &OreSetDesc, r: &WeylOp, budget: &Budget) -> Result<Option<WeylOp>> {
    for w in search_candidates(budget) {
        let p = &w * r;
        for scaled in [w.clone(), w.scale(&p_lead(&p).recip())] {
            if confirm(set, &Elem::Weyl(scaled.clone()), &Elem::Weyl(r.clone()), budget)? {
                return Ok(Some(scaled));
            }
        }
    }
    Ok(None)
}

fn p_lead(p: &WeylOp) -> Rat {
    p.terms().next().map(|(_, c)| c.clone()).unwrap_or_else(Rat::one)
}

fn weyl_witness(set: &OreSetDesc, r: &WeylOp, budget: &Budget) -> Result<WitnessResult> {
    let er = Elem::Weyl(r.clone());
    match &set.kind {
        OreKind::NonzeroAll => return Ok(WitnessResult::Found(Elem::one(&RingId::Weyl))),
        OreKind::UnitsOnly => {
            return Ok(match r.as_constant() {
                Some(c) => WitnessResult::Found(Elem::Weyl(WeylOp::constant(c.recip()))),
                None => WitnessResult::ProvenAbsent,
            })
        }
        _ => {}
    }
    if let Some(img) = x_image(set) {
        let Some(p) = r.as_x_poly() else { return Ok(WitnessResult::ProvenAbsent) };
        return Ok(match commutative_witness(&img, &Elem::Poly(p), budget)? {
            Some(w) => WitnessResult::Found(Elem::Weyl(WeylOp::from_x_poly(w.as_poly().unwrap()))),
            None => WitnessResult::ProvenAbsent,
        });
    }
    if let Some(img) = fourier_image(set) {
        if x_image(&img).is_some() {
            let fr = fourier(r);
            return Ok(match weyl_witness(&img, &fr, budget)? {
                WitnessResult::Found(w) => WitnessResult::Found(Elem::Weyl(fourier_inv(w.as_weyl().unwrap()))),
                other => other,
            });
        }
    }
    if let Some(desc) = WeylSatDesc::from_set(set) {
        match desc.member(r) {
            Ok(false) => return Ok(WitnessResult::ProvenAbsent),
            Ok(true) => {
                for w in structured_witnesses(&desc, r)? {
                    let w = Elem::Weyl(w);
                    if confirm(set, &w, &er, budget)? {
                        return Ok(WitnessResult::Found(w));
                    }
                }
            }
            Err(Error::NotSplit(_)) => {}
            Err(e) => return Err(e),
        }
    } else if weyl_exact_member(set, r, budget)? == Some(false) {
        return Ok(WitnessResult::ProvenAbsent);
    }
    Ok(match bounded_search(set, r, budget)? {
        Some(w) => WitnessResult::Found(Elem::Weyl(w)),
        None => WitnessResult::Unknown,
    })
}

/// Some `w` with `w·r ∈ S`, verified by membership.
pub fn lsat_witness(set: &OreSetDesc, r: &Elem, budget: &Budget) -> Result<WitnessResult> {
    check_ring(&set.ring, r)?;
    if r.is_zero() {
        return Err(Error::ZeroInput("lsat_witness"));
    }
    if contains(set, r, budget)?.is_yes() {
        return Ok(WitnessResult::Found(Elem::one(&set.ring)));
    }
    let out = if set.ring.is_commutative() {
        match commutative_witness(set, r, budget)? {
            Some(w) => WitnessResult::Found(w),
            None => WitnessResult::ProvenAbsent,
        }
    } else {
        weyl_witness(set, r.as_weyl().unwrap(), budget)?
    };
    if let WitnessResult::Found(w) = &out {
        if !confirm(set, w, r, budget)? {
            return Err(Error::Verification(format!("witness {w} for {r} in {set}")));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FalsifyReport {
    /// First `(s̃, r̃)` found, smallest candidates first.
    pub solution: Option<OrePair>,
    pub checked: usize,
    /// False when the candidate cap cut the enumeration short.
    pub exhaustive: bool,
}

const CANDIDATE_CAP: usize = 20_000;

/// Factors of bounded size that generate the set, each with its size.
fn atoms(set: &OreSetDesc, bound: u32) -> Result<Vec<(Elem, u32)>> {
    Ok(match &set.kind {
        OreKind::MonoidGens(gens) => gens.iter().filter(|g| !g.is_unit()).map(|g| (g.clone(), 1)).collect(),
        OreKind::EulerSet(z) => {
            let b = bound as i64;
            (-b..=b)
                .filter(|k| k.unsigned_abs() < bound as u64)
                .map(|k| (Elem::Weyl(WeylOp::theta_shift(&(z + int(k)))), 1 + k.unsigned_abs() as u32))
                .collect()
        }
        OreKind::Union(parts) => {
            let mut out: Vec<(Elem, u32)> = Vec::new();
            for p in parts {
                for a in atoms(p, bound)? {
                    if !out.iter().any(|(e, _)| e == &a.0) {
                        out.push(a);
                    }
                }
            }
            out
        }
        OreKind::UnitsOnly => Vec::new(),
        _ => return Err(Error::Unsupported(format!("cannot enumerate {set}"))),
    })
}

/// Elements of `S` built from at most `bound` units of size, smallest first.
pub(crate) fn enumerate(set: &OreSetDesc, bound: u32) -> Result<(Vec<Elem>, bool)> {
    let atoms = atoms(set, bound)?;
    let commutative = set.ring.is_commutative()
        || atoms.iter().all(|(a, _)| atoms.iter().all(|(b, _)| a.mul(b).ok() == b.mul(a).ok()));
    let one = Elem::one(&set.ring);
    let mut out = vec![one.clone()];
    let mut seen: HashSet<Elem> = HashSet::from([one.clone()]);
    // (product, size used, index of the last atom for commutative enumeration)
    let mut frontier = vec![(one, 0u32, 0usize)];
    let mut exhaustive = true;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (p, size, last) in &frontier {
            let start = if commutative { *last } else { 0 };
            for (i, (a, s)) in atoms.iter().enumerate().skip(start) {
                if size + s > bound {
                    continue;
                }
                if out.len() >= CANDIDATE_CAP {
                    exhaustive = false;
                    break;
                }
                let q = a.mul(p)?;
                if seen.insert(q.clone()) {
                    out.push(q.clone());
                    next.push((q, size + s, i));
                }
            }
        }
        next.sort_by_key(|(_, s, _)| *s);
        frontier = next;
    }
    out.sort_by_key(|e| e.size());
    Ok((out, exhaustive))
}

/// Tries every `s̃ ∈ S` up to the size bound for `s̃·r ∈ R·s`.
pub fn ore_falsify(set: &OreSetDesc, s: &Elem, r: &Elem, bound: u32) -> Result<FalsifyReport> {
    check_ring(&set.ring, s)?;
    check_ring(&set.ring, r)?;
    if s.is_zero() {
        return Err(Error::ZeroInput("ore_falsify"));
    }
    let (cands, exhaustive) = enumerate(set, bound)?;
    let mut checked = 0;
    for st in cands {
        checked += 1;
        if let Some(rt) = exact_right_divide(&st.mul(r)?, s)? {
            return Ok(FalsifyReport { solution: Some(OrePair { s_tilde: st, r_tilde: rt }), checked, exhaustive });
        }
    }
    Ok(FalsifyReport { solution: None, checked, exhaustive })
}
