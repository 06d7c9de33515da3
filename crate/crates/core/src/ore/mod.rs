//! Symbolic multiplicative sets and solvers for the left Ore condition `s̃r = r̃s`.

mod json;
mod search;
mod witness;

use std::collections::HashSet;
use std::fmt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::rings::{exact_right_divide, int, weyl_right_divide, Elem, Rat, RingId, Tri, WeylOp};
use crate::saturation::SaturatedSetDesc;
use crate::weyl::{euler_factors, fourier, fourier_inv, ore_solve_euler_set};

pub use json::{ore_set_from_json, ore_set_to_json, parse_rat, saturated_from_json, saturated_to_json};
pub use search::{factor_word, Word};
pub use witness::{lsat_witness, ore_falsify, FalsifyReport, WitnessResult};
pub(crate) use witness::enumerate;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OreKind {
    /// All finite products of the generators.
    MonoidGens(Vec<Elem>),
    /// `Θ_z`: products of `θ + z + k` with `k ∈ ℤ`.
    EulerSet(Rat),
    Union(Vec<OreSetDesc>),
    NonzeroAll,
    UnitsOnly,
    /// A saturated set of ℤ or ℚ[x]; in the Weyl algebra it is read inside ℚ[x].
    PrimeSet(SaturatedSetDesc),
    /// `(I ∖ {0}) ∪ {1}` for the principal ideal `I = (g)`.
    IdealHat(Elem),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreSetDesc {
    pub ring: RingId,
    pub kind: OreKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrePair {
    pub s_tilde: Elem,
    pub r_tilde: Elem,
}

fn check_ring(ring: &RingId, e: &Elem) -> Result<()> {
    if &e.ring() != ring {
        return Err(Error::RingMismatch { expected: ring.clone(), found: e.ring() });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum GenShape {
    Unit,
    X,
    D,
    Other,
}

fn weyl_shape(g: &WeylOp) -> GenShape {
    if g.as_constant().is_some() {
        GenShape::Unit
    } else if g.as_x_poly().is_some() {
        GenShape::X
    } else if g.as_d_poly().is_some() {
        GenShape::D
    } else {
        GenShape::Other
    }
}

impl OreSetDesc {
    pub fn monoid(ring: RingId, gens: Vec<Elem>) -> Result<Self> {
        for g in &gens {
            check_ring(&ring, g)?;
            if g.is_zero() {
                return Err(Error::Invalid("0 cannot generate a multiplicative set".into()));
            }
        }
        Ok(Self { ring, kind: OreKind::MonoidGens(gens) })
    }

    pub fn euler(z: Rat) -> Self {
        Self { ring: RingId::Weyl, kind: OreKind::EulerSet(z) }
    }

    pub fn union(parts: Vec<OreSetDesc>) -> Result<Self> {
        let ring = parts.first().map(|p| p.ring.clone()).ok_or_else(|| Error::Invalid("empty union".into()))?;
        if let Some(p) = parts.iter().find(|p| p.ring != ring) {
            return Err(Error::RingMismatch { expected: ring, found: p.ring.clone() });
        }
        Ok(Self { ring, kind: OreKind::Union(parts) })
    }

    pub fn nonzero(ring: RingId) -> Self {
        Self { ring, kind: OreKind::NonzeroAll }
    }

    pub fn units(ring: RingId) -> Self {
        Self { ring, kind: OreKind::UnitsOnly }
    }

    pub fn primes(ring: RingId, desc: SaturatedSetDesc) -> Result<Self> {
        let ok = match (&ring, desc.ring()) {
            (RingId::Weyl, RingId::QX(v)) => v == "x",
            (r, d) => r == &d,
        };
        if !ok {
            return Err(Error::RingMismatch { expected: ring, found: desc.ring() });
        }
        Ok(Self { ring, kind: OreKind::PrimeSet(desc) })
    }

    pub fn ideal_hat(g: Elem) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::ZeroInput("ideal_hat generator"));
        }
        if !g.ring().is_commutative() {
            return Err(Error::Unsupported("ideal complements are only built in ℤ and ℚ[x]".into()));
        }
        Ok(Self { ring: g.ring(), kind: OreKind::IdealHat(g) })
    }

    /// Whether the set is known to satisfy the left Ore condition.
    pub fn is_known_ore(&self) -> bool {
        if self.ring.is_commutative() {
            return !matches!(self.kind, OreKind::EulerSet(_));
        }
        match &self.kind {
            OreKind::MonoidGens(gens) => gens.iter().all(|g| weyl_shape(g.as_weyl().unwrap()) != GenShape::Other),
            OreKind::EulerSet(_) | OreKind::UnitsOnly | OreKind::NonzeroAll | OreKind::PrimeSet(_) => true,
            OreKind::Union(parts) => parts.iter().all(|p| p.is_known_ore()),
            OreKind::IdealHat(_) => false,
        }
    }

    /// Whether `ore_solve` has a constructive solver for this set.
    fn has_solver(&self) -> bool {
        match &self.kind {
            OreKind::NonzeroAll => self.ring.is_commutative(),
            OreKind::Union(parts) => parts.iter().all(|p| p.has_solver()),
            _ => self.is_known_ore(),
        }
    }

    /// Whether every unit of the ring lies in the set.
    pub(crate) fn contains_all_units(&self) -> bool {
        match &self.kind {
            OreKind::NonzeroAll | OreKind::UnitsOnly | OreKind::PrimeSet(_) => true,
            OreKind::Union(parts) => parts.iter().any(|p| p.contains_all_units()),
            _ => false,
        }
    }
}

impl fmt::Display for OreSetDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            OreKind::MonoidGens(gens) => {
                let g: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
                write!(f, "[{}]", g.join(", "))
            }
            OreKind::EulerSet(z) => write!(f, "Theta_{z}"),
            OreKind::Union(parts) => {
                let p: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "({})", p.join(" u "))
            }
            OreKind::NonzeroAll => write!(f, "{}\\{{0}}", self.ring),
            OreKind::UnitsOnly => write!(f, "U({})", self.ring),
            OreKind::PrimeSet(d) => write!(f, "{d}"),
            OreKind::IdealHat(g) => write!(f, "hat(({g}))"),
        }
    }
}

/// Membership of `r` in the set.
pub fn contains(set: &OreSetDesc, r: &Elem, budget: &Budget) -> Result<Tri> {
    check_ring(&set.ring, r)?;
    if r.is_zero() {
        return Ok(Tri::No);
    }
    if r.is_one() {
        return Ok(Tri::Yes);
    }
    Ok(match &set.kind {
        OreKind::NonzeroAll => Tri::Yes,
        OreKind::UnitsOnly => Tri::from_bool(r.is_unit()),
        OreKind::IdealHat(g) => Tri::from_bool(exact_right_divide(r, g)?.is_some()),
        OreKind::PrimeSet(desc) => match r {
            Elem::Weyl(w) => match w.as_x_poly() {
                Some(p) => Tri::from_bool(desc.contains(&Elem::Poly(p))?),
                None => Tri::No,
            },
            _ => Tri::from_bool(desc.contains(r)?),
        },
        OreKind::EulerSet(z) => Tri::from_bool(euler_factors(z, r.as_weyl().unwrap()).is_some()),
        OreKind::MonoidGens(_) | OreKind::Union(_) => match factor_word(set, r, budget)? {
            Word::Found(_) => Tri::Yes,
            Word::Absent => Tri::No,
            Word::Unknown => Tri::Unknown,
        },
    })
}

fn verify_pair(s: &Elem, r: &Elem, pair: &OrePair) -> Result<()> {
    let lhs = pair.s_tilde.mul(r)?;
    let rhs = pair.r_tilde.mul(s)?;
    if lhs != rhs {
        return Err(Error::Verification(format!("({}) ({r}) != ({}) ({s})", pair.s_tilde, pair.r_tilde)));
    }
    Ok(())
}

/// `s ∈ ℚ[x]`: with `d = deg_∂ r`, `f^{n+d} r ∈ D·f^n`, and `s^{d+1} r ∈ D·s` in general.
fn solve_x_type(s: &WeylOp, base: Option<(&WeylOp, u32)>, r: &WeylOp) -> Result<(WeylOp, WeylOp)> {
    let d = r.d_degree().unwrap_or(0);
    let s_tilde = match base {
        Some((f, n)) => f.pow(n + d),
        None => s.pow(d + 1),
    };
    let r_tilde = weyl_right_divide(&(&s_tilde * r), s)
        .ok_or_else(|| Error::Verification(format!("{s} does not right-divide ({s_tilde}) ({r})")))?;
    Ok((s_tilde, r_tilde))
}

fn solve_d_type(s: &WeylOp, base: Option<(&WeylOp, u32)>, r: &WeylOp) -> Result<(WeylOp, WeylOp)> {
    let fs = fourier(s);
    let fb = base.map(|(f, n)| (fourier(f), n));
    let (st, rt) = solve_x_type(&fs, fb.as_ref().map(|(f, n)| (f, *n)), &fourier(r))?;
    Ok((fourier_inv(&st), fourier_inv(&rt)))
}

/// Writes `s = c·f^n` for the single non-unit generator `f`, if possible.
fn single_gen_power(gens: &[WeylOp], s: &WeylOp) -> Option<(WeylOp, u32)> {
    let nonunit: Vec<&WeylOp> = gens.iter().filter(|g| g.as_constant().is_none()).collect();
    let [f] = nonunit.as_slice() else { return None };
    let n = s.total_degree()? / f.total_degree()?;
    let fnp = f.pow(n);
    let c = weyl_right_divide(s, &fnp)?.as_constant()?;
    (c != Rat::from_integer(0.into())).then(|| ((*f).clone(), n))
}

/// One factor `f` of a peeled word, taken from the component `part`.
fn solve_factor(part: &OreSetDesc, f: &WeylOp, r: &WeylOp) -> Result<(WeylOp, WeylOp)> {
    if f.as_constant().is_some() {
        return Ok((f.clone(), r.clone()));
    }
    if let OreKind::EulerSet(z) = &part.kind {
        return ore_solve_euler_set(z, f, r);
    }
    match weyl_shape(f) {
        GenShape::X => solve_x_type(f, None, r),
        GenShape::D => solve_d_type(f, None, r),
        _ => Err(Error::Unsupported(format!("no Ore solver for the factor {f} of {part}"))),
    }
}

fn solve_weyl(set: &OreSetDesc, s: &WeylOp, r: &WeylOp, budget: &Budget) -> Result<(WeylOp, WeylOp)> {
    match &set.kind {
        OreKind::UnitsOnly => Ok((s.clone(), r.clone())),
        OreKind::EulerSet(z) => ore_solve_euler_set(z, s, r),
        OreKind::PrimeSet(_) => solve_x_type(s, None, r),
        OreKind::MonoidGens(gens) => {
            let gens: Vec<WeylOp> = gens.iter().map(|g| g.as_weyl().unwrap().clone()).collect();
            let shapes: HashSet<GenShape> = gens.iter().map(weyl_shape).filter(|s| *s != GenShape::Unit).collect();
            if shapes.len() == 1 {
                let base = single_gen_power(&gens, s);
                let base = base.as_ref().map(|(f, n)| (f, *n));
                return match shapes.into_iter().next().unwrap() {
                    GenShape::X => solve_x_type(s, base, r),
                    _ => solve_d_type(s, base, r),
                };
            }
            peel(set, s, r, budget)
        }
        OreKind::Union(_) => peel(set, s, r, budget),
        OreKind::NonzeroAll | OreKind::IdealHat(_) => Err(Error::Unsupported(format!("no Ore solver for {set}"))),
    }
}

/// Splits `s` into factors from the components and solves right to left.
fn peel(set: &OreSetDesc, s: &WeylOp, r: &WeylOp, budget: &Budget) -> Result<(WeylOp, WeylOp)> {
    let Word::Found(word) = factor_word(set, &Elem::Weyl(s.clone()), budget)? else {
        return Err(Error::Budget(format!("no factorization of {s} over {set} found")));
    };
    let mut acc = WeylOp::one();
    let mut cur = r.clone();
    for (part, f) in word.iter().rev() {
        let component = match &set.kind {
            OreKind::Union(parts) => &parts[*part],
            _ => set,
        };
        let (st, rt) = match &component.kind {
            OreKind::Union(_) | OreKind::MonoidGens(_) if !std::ptr::eq(component, set) => {
                solve_weyl(component, f.as_weyl().unwrap(), &cur, budget)?
            }
            _ => solve_factor(component, f.as_weyl().unwrap(), &cur)?,
        };
        acc = &st * &acc;
        cur = rt;
    }
    Ok((acc, cur))
}

/// Returns `(s̃, r̃)` with `s̃ ∈ S` and `s̃·r = r̃·s`.
pub fn ore_solve(set: &OreSetDesc, s: &Elem, r: &Elem, budget: &Budget) -> Result<OrePair> {
    check_ring(&set.ring, s)?;
    check_ring(&set.ring, r)?;
    match contains(set, s, budget)? {
        Tri::Yes => {}
        Tri::No => return Err(Error::NotInSet { elem: s.to_string(), set: set.to_string() }),
        Tri::Unknown => return Err(Error::Budget(format!("membership of {s} in {set} undecided"))),
    }
    if s.is_one() {
        return Ok(OrePair { s_tilde: s.clone(), r_tilde: r.clone() });
    }
    if !set.has_solver() {
        return Err(Error::Unsupported(format!("{set} is not a known Ore set with a solver")));
    }
    let pair = if set.ring.is_commutative() || s.is_unit() {
        OrePair { s_tilde: s.clone(), r_tilde: r.clone() }
    } else if r.is_zero() {
        OrePair { s_tilde: Elem::one(&set.ring), r_tilde: r.clone() }
    } else {
        let (st, rt) = solve_weyl(set, s.as_weyl().unwrap(), r.as_weyl().unwrap(), budget)?;
        OrePair { s_tilde: Elem::Weyl(st), r_tilde: Elem::Weyl(rt) }
    };
    verify_pair(s, r, &pair)?;
    if !contains(set, &pair.s_tilde, budget)?.is_yes() {
        return Err(Error::Verification(format!("{} not confirmed in {set}", pair.s_tilde)));
    }
    Ok(pair)
}

/// A common left multiple `m ∈ S` with `m = cᵢ·eᵢ`.
pub fn common_left_multiple(set: &OreSetDesc, elems: &[Elem], budget: &Budget) -> Result<(Elem, Vec<Elem>)> {
    let Some(first) = elems.first() else {
        return Ok((Elem::one(&set.ring), Vec::new()));
    };
    for e in elems {
        if contains(set, e, budget)? != Tri::Yes {
            return Err(Error::NotInSet { elem: e.to_string(), set: set.to_string() });
        }
    }
    if set.ring.is_commutative() {
        let mut l = first.normalized();
        for e in &elems[1..] {
            l = l.lcm(e).expect("commutative ring");
        }
        if contains(set, &l, budget)?.is_yes() {
            let cof = elems
                .iter()
                .map(|e| exact_right_divide(&l, e).map(|q| q.expect("lcm is a multiple")))
                .collect::<Result<Vec<_>>>()?;
            return Ok((l, cof));
        }
    }
    let mut m = first.clone();
    let mut cof = vec![Elem::one(&set.ring)];
    for e in &elems[1..] {
        let pair = ore_solve(set, e, &m, budget)?;
        m = pair.s_tilde.mul(&m)?;
        for c in cof.iter_mut() {
            *c = pair.s_tilde.mul(c)?;
        }
        cof.push(pair.r_tilde);
    }
    for (c, e) in cof.iter().zip(elems) {
        if c.mul(e)? != m {
            return Err(Error::Verification(format!("cofactor {c} for {e}")));
        }
    }
    Ok((m, cof))
}

/// Generator-wise inclusion test `S ⊆ T`.
pub fn subset_on_generators(s: &OreSetDesc, t: &OreSetDesc, budget: &Budget) -> Result<Tri> {
    if s.ring != t.ring {
        return Err(Error::RingMismatch { expected: s.ring.clone(), found: t.ring.clone() });
    }
    match &s.kind {
        OreKind::MonoidGens(gens) => {
            let mut acc = Tri::Yes;
            for g in gens {
                acc = acc.and(contains(t, g, budget)?);
                if acc == Tri::No {
                    break;
                }
            }
            Ok(acc)
        }
        OreKind::Union(parts) => {
            let mut acc = Tri::Yes;
            for p in parts {
                acc = acc.and(subset_on_generators(p, t, budget)?);
            }
            Ok(acc)
        }
        OreKind::UnitsOnly if s.ring == RingId::Z => contains(t, &Elem::from_i64(&s.ring, -1), budget),
        OreKind::UnitsOnly if t.contains_all_units() => Ok(Tri::Yes),
        OreKind::EulerSet(z) => {
            if let OreKind::EulerSet(z2) = &t.kind {
                return Ok(Tri::from_bool((z - z2).is_integer()));
            }
            let mut acc = Tri::Yes;
            for k in -(budget.exponent as i64)..=budget.exponent as i64 {
                let g = Elem::Weyl(WeylOp::theta_shift(&(z + int(k))));
                acc = acc.and(contains(t, &g, budget)?);
                if acc == Tri::No {
                    return Ok(Tri::No);
                }
            }
            Ok(acc.and(Tri::Unknown))
        }
        _ => Err(Error::Unsupported(format!("{s} is not presented by generators"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::ring_eval;

    fn w(s: &str) -> Elem {
        ring_eval(s, &RingId::Weyl).unwrap()
    }

    fn z(n: i64) -> Elem {
        Elem::from_i64(&RingId::Z, n)
    }

    fn b() -> Budget {
        Budget::default()
    }

    fn wmon(gens: &[&str]) -> OreSetDesc {
        OreSetDesc::monoid(RingId::Weyl, gens.iter().map(|g| w(g)).collect()).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert_eq!(contains(&wmon(&["x^2"]), &w("x^4"), &b()).unwrap(), Tri::Yes);
        assert_eq!(contains(&wmon(&["x^2"]), &w("x^3"), &b()).unwrap(), Tri::No);
        assert_eq!(contains(&OreSetDesc::euler(int(0)), &w("x*d^2"), &b()).unwrap(), Tri::No);
        assert_eq!(contains(&wmon(&["x", "d"]), &w("x*d - 1"), &b()).unwrap(), Tri::No);
        assert_eq!(contains(&wmon(&["x", "d"]), &w("d*x*d"), &b()).unwrap(), Tri::Yes);
        let zs = OreSetDesc::monoid(RingId::Z, vec![z(-2)]).unwrap();
        assert_eq!(contains(&zs, &z(4), &b()).unwrap(), Tri::Yes);
        assert_eq!(contains(&zs, &z(2), &b()).unwrap(), Tri::No);
        assert!(contains(&zs, &w("x"), &b()).is_err());
    }

    #[test]
    fn solve_examples() {
        let p = ore_solve(&OreSetDesc::euler(int(0)), &w("x*d"), &w("x"), &b()).unwrap();
        assert_eq!((p.s_tilde, p.r_tilde), (w("x*d - 1"), w("x")));
        let p = ore_solve(&wmon(&["x"]), &w("x"), &w("d"), &b()).unwrap();
        assert_eq!((p.s_tilde, p.r_tilde), (w("x^2"), w("x*d - 1")));
        let p = ore_solve(&wmon(&["x"]), &w("1"), &w("d + x"), &b()).unwrap();
        assert_eq!((p.s_tilde, p.r_tilde), (w("1"), w("d + x")));
        let p = ore_solve(&wmon(&["d"]), &w("d^2"), &w("x"), &b()).unwrap();
        assert!(p.s_tilde.as_weyl().unwrap().as_d_poly().is_some());
    }

    #[test]
    fn solve_rejects() {
        assert!(matches!(ore_solve(&wmon(&["x*d"]), &w("x*d"), &w("x"), &b()), Err(Error::Unsupported(_))));
        assert!(matches!(ore_solve(&wmon(&["x"]), &w("d"), &w("x"), &b()), Err(Error::NotInSet { .. })));
    }

    #[test]
    fn mixed_monoid_peels() {
        let s = wmon(&["x", "d"]);
        let p = ore_solve(&s, &w("d*x^2*d"), &w("x + d^2"), &b()).unwrap();
        assert_eq!(contains(&s, &p.s_tilde, &b()).unwrap(), Tri::Yes);
    }

    #[test]
    fn common_multiples() {
        let zs = OreSetDesc::monoid(RingId::Z, vec![z(2), z(3)]).unwrap();
        let (m, cof) = common_left_multiple(&zs, &[z(4), z(6)], &b()).unwrap();
        assert_eq!(m, z(12));
        assert_eq!(cof, vec![z(3), z(2)]);
        let (m, _) = common_left_multiple(&OreSetDesc::euler(int(0)), &[w("x*d"), w("x*d + 1")], &b()).unwrap();
        assert_eq!(m, w("x*d*(x*d + 1)"));
        let s = wmon(&["x", "d"]);
        let (m, cof) = common_left_multiple(&s, &[w("x"), w("d")], &b()).unwrap();
        assert_eq!(cof[0].mul(&w("x")).unwrap(), m);
        assert_eq!(cof[1].mul(&w("d")).unwrap(), m);
        assert!(contains(&s, &m, &b()).unwrap().is_yes());
    }

    #[test]
    fn generator_inclusion() {
        let m = |n| OreSetDesc::monoid(RingId::Z, vec![z(n)]).unwrap();
        assert_eq!(subset_on_generators(&m(4), &m(2), &b()).unwrap(), Tri::Yes);
        assert_eq!(subset_on_generators(&m(2), &m(4), &b()).unwrap(), Tri::No);
        assert_eq!(subset_on_generators(&wmon(&["x"]), &wmon(&["x", "d"]), &b()).unwrap(), Tri::Yes);
    }

    #[test]
    fn known_ore_flags() {
        assert!(wmon(&["x", "d^2 + 1"]).is_known_ore());
        assert!(!wmon(&["x*d"]).is_known_ore());
        assert!(OreSetDesc::euler(rat_half()).is_known_ore());
    }

    fn rat_half() -> Rat {
        crate::rings::rat(1, 2)
    }
}
