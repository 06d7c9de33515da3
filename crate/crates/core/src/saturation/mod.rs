//! Left saturation closures: exact membership, irreducible normal forms,
//! classification and localization-type tags.

mod lattice;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::ore::{contains, lsat_witness, OreKind, OreSetDesc, WitnessResult};
use crate::rings::{exact_right_divide, factor_int, factor_poly, int, Elem, Rat, RingId, Tri, UniPoly, WeylOp};
use crate::weyl::{fourier, grade_decompose, theta_form, ThetaY};

pub use lattice::{dot_lattice, dot_tree, join, leq, meet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SatMode {
    /// The closure of the listed irreducibles and the units.
    Finite,
    /// Everything not divisible by a listed irreducible.
    Cofinite,
}

/// A saturated multiplicative subset of ℤ or ℚ[x], described by finitely many
/// irreducibles up to associates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SaturatedSetDesc {
    ring: RingId,
    mode: SatMode,
    irreducibles: Vec<Elem>,
}

fn sort_key(e: &Elem) -> (u64, String) {
    (e.size(), e.to_string())
}

fn sort_canonical(v: &mut Vec<Elem>) {
    v.sort_by(|a, b| match (a, b) {
        (Elem::Int(x), Elem::Int(y)) => x.cmp(y),
        (Elem::Poly(x), Elem::Poly(y)) => x.cmp(y),
        _ => sort_key(a).cmp(&sort_key(b)),
    });
    v.dedup();
}

fn check_irreducible(e: &Elem) -> Result<()> {
    let bad = |why: &str| Err(Error::Invalid(format!("{e} is not {why}")));
    match e {
        Elem::Int(n) => {
            let f = factor_int(n)?;
            if f.primes.len() != 1 || f.primes[0].1 != 1 {
                return bad("a prime");
            }
        }
        Elem::Poly(p) => {
            let deg = p.degree().unwrap_or(0);
            if deg == 0 {
                return bad("a non-constant polynomial");
            }
            if deg > 1 && !factor_poly(p)?.roots.is_empty() {
                return bad("irreducible (it has a rational root)");
            }
            // squarefree; irreducibility of quartics and above is taken on trust
            let dp = derivative(p);
            if !p.gcd(&dp).is_one() {
                return bad("squarefree");
            }
        }
        Elem::Weyl(_) => return Err(Error::Unsupported("saturated sets live in ℤ or ℚ[x]".into())),
    }
    Ok(())
}

fn derivative(p: &UniPoly) -> UniPoly {
    let c = p.coeffs().iter().enumerate().skip(1).map(|(i, c)| c * int(i as i64)).collect();
    UniPoly::new(p.var(), c)
}

impl SaturatedSetDesc {
    pub fn new(ring: RingId, mode: SatMode, irreducibles: Vec<Elem>) -> Result<Self> {
        if !ring.is_commutative() {
            return Err(Error::Unsupported("saturated sets live in ℤ or ℚ[x]".into()));
        }
        let mut irr = Vec::with_capacity(irreducibles.len());
        for e in irreducibles {
            if e.ring() != ring {
                return Err(Error::RingMismatch { expected: ring, found: e.ring() });
            }
            check_irreducible(&e)?;
            irr.push(e.normalized());
        }
        sort_canonical(&mut irr);
        Ok(Self { ring, mode, irreducibles: irr })
    }

    pub fn finite(ring: RingId, irreducibles: Vec<Elem>) -> Result<Self> {
        Self::new(ring, SatMode::Finite, irreducibles)
    }

    pub fn cofinite(ring: RingId, complement: Vec<Elem>) -> Result<Self> {
        Self::new(ring, SatMode::Cofinite, complement)
    }

    /// Skips validation; the caller guarantees normalized irreducibles.
    pub(crate) fn from_parts(ring: RingId, mode: SatMode, mut irreducibles: Vec<Elem>) -> Self {
        sort_canonical(&mut irreducibles);
        Self { ring, mode, irreducibles }
    }

    pub fn ring(&self) -> RingId {
        self.ring.clone()
    }

    pub fn mode(&self) -> SatMode {
        self.mode
    }

    pub fn irreducibles(&self) -> &[Elem] {
        &self.irreducibles
    }

    pub fn contains(&self, r: &Elem) -> Result<bool> {
        if r.ring() != self.ring {
            return Err(Error::RingMismatch { expected: self.ring.clone(), found: r.ring() });
        }
        if r.is_zero() {
            return Ok(false);
        }
        match self.mode {
            SatMode::Finite => {
                let mut rest = r.clone();
                for p in &self.irreducibles {
                    while let Some(q) = exact_right_divide(&rest, p)? {
                        rest = q;
                    }
                }
                Ok(rest.is_unit())
            }
            SatMode::Cofinite => {
                for p in &self.irreducibles {
                    if exact_right_divide(r, p)?.is_some() {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    /// Product of the listed irreducibles.
    fn radical(&self) -> Elem {
        Elem::product(&self.ring, &self.irreducibles).expect("same ring")
    }
}

impl fmt::Display for SaturatedSetDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .irreducibles
            .iter()
            .map(|p| match p {
                Elem::Poly(q) if q.degree() != Some(1) || q.coeff(0) != Rat::from_integer(0.into()) => format!("({p})"),
                _ => p.to_string(),
            })
            .collect();
        match (self.mode, names.is_empty()) {
            (SatMode::Finite, true) => write!(f, "{}", self.ring),
            (SatMode::Finite, false) => {
                let inv: Vec<String> = names.iter().map(|n| format!("1/{n}")).collect();
                write!(f, "{}[{}]", self.ring, inv.join(","))
            }
            (SatMode::Cofinite, true) => write!(f, "Frac({})", self.ring),
            (SatMode::Cofinite, false) => write!(f, "{}_({})", self.ring, names.join(",")),
        }
    }
}

/// Irreducible factors, normalized, of a nonzero element of ℤ or ℚ[x].
pub fn irreducible_factors(r: &Elem) -> Result<Vec<Elem>> {
    match r {
        Elem::Int(n) => Ok(factor_int(n)?.support().into_iter().map(Elem::Int).collect()),
        Elem::Poly(p) => {
            let f = factor_poly(p)?;
            let mut out: Vec<Elem> = f.roots.iter().map(|(root, _)| Elem::Poly(UniPoly::linear(p.var(), -root))).collect();
            match f.residual.degree() {
                Some(0) => {}
                Some(2 | 3) => out.push(Elem::Poly(f.residual.clone())),
                _ => return Err(Error::NotSplit(f.residual.to_string())),
            }
            Ok(out)
        }
        Elem::Weyl(_) => Err(Error::Unsupported("irreducible factors are computed in ℤ and ℚ[x]".into())),
    }
}

/// The saturated set `LSat(S)` of a commutative set, as irreducible data.
pub fn lsat_generators(set: &OreSetDesc) -> Result<SaturatedSetDesc> {
    if !set.ring.is_commutative() {
        return Err(Error::Unsupported(format!("{set} is not over ℤ or ℚ[x]")));
    }
    let ring = set.ring.clone();
    Ok(match &set.kind {
        OreKind::MonoidGens(gens) => {
            let mut irr = Vec::new();
            for g in gens.iter().filter(|g| !g.is_unit()) {
                irr.extend(irreducible_factors(g)?);
            }
            SaturatedSetDesc::from_parts(ring, SatMode::Finite, irr)
        }
        OreKind::UnitsOnly => SaturatedSetDesc::from_parts(ring, SatMode::Finite, vec![]),
        OreKind::NonzeroAll | OreKind::IdealHat(_) => SaturatedSetDesc::from_parts(ring, SatMode::Cofinite, vec![]),
        OreKind::PrimeSet(d) => d.clone(),
        OreKind::Union(parts) => {
            let mut acc = SaturatedSetDesc::from_parts(ring, SatMode::Finite, vec![]);
            for p in parts {
                acc = join(&acc, &lsat_generators(p)?)?;
            }
            acc
        }
        OreKind::EulerSet(_) => return Err(Error::Unsupported("Euler sets live in the Weyl algebra".into())),
    })
}

fn flatten(set: &OreSetDesc) -> Vec<&OreSetDesc> {
    match &set.kind {
        OreKind::Union(parts) => parts.iter().flat_map(flatten).collect(),
        _ => vec![set],
    }
}

/// Exact witness in ℤ or ℚ[x]: some `w` with `w·r ∈ S`, or `None` when `r ∉ LSat(S)`.
/// Each component absorbs the largest divisor of `r` it can reach; `r` lies in
/// the closure iff only a unit is left over.
pub fn commutative_witness(set: &OreSetDesc, r: &Elem, budget: &Budget) -> Result<Option<Elem>> {
    if r.is_zero() {
        return Err(Error::ZeroInput("lsat witness"));
    }
    let ring = set.ring.clone();
    let mut rest = r.clone();
    let mut acc = Elem::one(&ring);
    let divide = |a: &Elem, b: &Elem| exact_right_divide(a, b).map(|q| q.expect("divisor was computed from the dividend"));
    for part in flatten(set) {
        if rest.is_unit() {
            break;
        }
        let absorbing_power = |s: &Elem, rest: &Elem| -> Result<Option<(Elem, Elem)>> {
            let g = rest.part_supported_on(s).expect("commutative ring");
            if g.is_unit() {
                return Ok(None);
            }
            let mut t = s.clone();
            while exact_right_divide(&t, &g)?.is_none() {
                t = t.mul(s)?;
            }
            Ok(Some((g, t)))
        };
        match &part.kind {
            OreKind::MonoidGens(gens) => {
                let s = Elem::product(&ring, gens.iter().filter(|g| !g.is_unit()))?;
                if let Some((g, t)) = absorbing_power(&s, &rest)? {
                    rest = divide(&rest, &g)?;
                    acc = acc.mul(&t)?;
                }
            }
            OreKind::PrimeSet(d) => match d.mode() {
                SatMode::Finite => {
                    if let Some((g, t)) = absorbing_power(&d.radical(), &rest)? {
                        rest = divide(&rest, &g)?;
                        acc = acc.mul(&t)?;
                    }
                }
                SatMode::Cofinite => {
                    let bad = rest.part_supported_on(&d.radical()).expect("commutative ring");
                    let good = divide(&rest, &bad)?;
                    acc = acc.mul(&good)?;
                    rest = bad;
                }
            },
            OreKind::NonzeroAll => {
                acc = acc.mul(&rest)?;
                rest = Elem::one(&ring);
            }
            OreKind::IdealHat(g) => {
                acc = acc.mul(&g.mul(&rest)?)?;
                rest = Elem::one(&ring);
            }
            OreKind::UnitsOnly => {}
            OreKind::EulerSet(_) | OreKind::Union(_) => {
                return Err(Error::Unsupported(format!("{part} in a commutative ring")));
            }
        }
    }
    if !rest.is_unit() {
        return Ok(None);
    }
    // w·r is the product of the absorbers, each an element of its component
    let w = divide(&acc, r)?;
    let wr = w.mul(r)?;
    if !contains(set, &wr, budget)?.is_yes() {
        return Err(Error::Verification(format!("absorbed product {wr} not confirmed in {set}")));
    }
    Ok(Some(w))
}

/// The two closures of Weyl sets with an exact membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeylSatDesc {
    /// `LSat(Θ_z)`; for integral `z` this coincides with `UnionXD`.
    EulerClosure(Rat),
    /// `LSat([x, ∂])`.
    UnionXD,
}

fn x_power(g: &WeylOp) -> bool {
    g.len() == 1 && g.d_degree() == Some(0) && g.x_degree() != Some(0)
}

fn d_power(g: &WeylOp) -> bool {
    g.len() == 1 && g.x_degree() == Some(0) && g.d_degree() != Some(0)
}

impl WeylSatDesc {
    /// Recognizes sets whose closure is one of the two exact shapes.
    pub fn from_set(set: &OreSetDesc) -> Option<Self> {
        if set.ring != RingId::Weyl {
            return None;
        }
        let parts = flatten(set);
        let mut eulers: Vec<Rat> = Vec::new();
        let mut gens: Vec<WeylOp> = Vec::new();
        for p in &parts {
            match &p.kind {
                OreKind::EulerSet(z) => eulers.push(z.clone()),
                OreKind::MonoidGens(g) => gens.extend(g.iter().map(|e| e.as_weyl().unwrap().clone())),
                OreKind::UnitsOnly => {}
                _ => return None,
            }
        }
        let nonunit: Vec<&WeylOp> = gens.iter().filter(|g| g.as_constant().is_none()).collect();
        if let Some(z) = eulers.first() {
            if !z.is_integer() {
                let same_class = eulers.iter().all(|z2| (z - z2).is_integer());
                let cand = WeylSatDesc::EulerClosure(z - z.floor());
                let ok = same_class && nonunit.iter().all(|g| cand.member(g).unwrap_or(false));
                return ok.then_some(cand);
            }
        }
        let integral = eulers.iter().all(|z| z.is_integer());
        let has_xd = nonunit.iter().any(|g| x_power(g)) && nonunit.iter().any(|g| d_power(g));
        let cand = WeylSatDesc::UnionXD;
        let inside = nonunit.iter().all(|g| cand.member(g).unwrap_or(false));
        (integral && inside && (!eulers.is_empty() || has_xd)).then_some(cand)
    }

    fn coset(&self) -> Rat {
        match self {
            WeylSatDesc::EulerClosure(z) => z.clone(),
            WeylSatDesc::UnionXD => int(0),
        }
    }

    /// Exact membership; a θ-polynomial with an irrational part is an error.
    pub fn member(&self, r: &WeylOp) -> Result<bool> {
        if r.is_zero() {
            return Err(Error::ZeroInput("lsat_member"));
        }
        if grade_decompose(r)?.len() != 1 {
            return Ok(false);
        }
        let tf = theta_form(r)?;
        let z = self.coset();
        if !z.is_integer() && tf.y != ThetaY::None {
            return Ok(false);
        }
        let f = factor_poly(&tf.tpoly)?;
        if !f.is_split() {
            return Err(Error::NotSplit(f.residual.to_string()));
        }
        Ok(f.roots.iter().all(|(root, _)| (-root - &z).is_integer()))
    }

    pub fn same_closure(&self, other: &Self) -> bool {
        (self.coset() - other.coset()).is_integer()
    }
}

impl fmt::Display for WeylSatDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylSatDesc::EulerClosure(z) => write!(f, "LSat(Theta_{z})"),
            WeylSatDesc::UnionXD => f.write_str("LSat([x, d])"),
        }
    }
}

/// The same set read inside ℚ[x], when every element is a polynomial in `x`.
pub(crate) fn x_image(set: &OreSetDesc) -> Option<OreSetDesc> {
    let to_poly = |e: &Elem| e.as_weyl().and_then(|w| w.as_x_poly()).map(Elem::Poly);
    let ring = RingId::qx();
    Some(match &set.kind {
        OreKind::MonoidGens(gens) => OreSetDesc { ring, kind: OreKind::MonoidGens(gens.iter().map(to_poly).collect::<Option<_>>()?) },
        OreKind::PrimeSet(d) => OreSetDesc { ring, kind: OreKind::PrimeSet(d.clone()) },
        OreKind::UnitsOnly => OreSetDesc::units(ring),
        OreKind::Union(parts) => OreSetDesc { ring, kind: OreKind::Union(parts.iter().map(x_image).collect::<Option<_>>()?) },
        _ => return None,
    })
}

/// The image under the Fourier automorphism, for generator-presented sets.
pub(crate) fn fourier_image(set: &OreSetDesc) -> Option<OreSetDesc> {
    Some(match &set.kind {
        OreKind::MonoidGens(gens) => {
            OreSetDesc { ring: RingId::Weyl, kind: OreKind::MonoidGens(gens.iter().map(|g| Elem::Weyl(fourier(g.as_weyl().unwrap()))).collect()) }
        }
        OreKind::UnitsOnly => set.clone(),
        OreKind::Union(parts) => OreSetDesc { ring: RingId::Weyl, kind: OreKind::Union(parts.iter().map(fourier_image).collect::<Option<_>>()?) },
        _ => return None,
    })
}

/// Exact LSat membership in the Weyl algebra where one is available.
pub(crate) fn weyl_exact_member(set: &OreSetDesc, r: &WeylOp, budget: &Budget) -> Result<Option<bool>> {
    match &set.kind {
        OreKind::NonzeroAll => return Ok(Some(true)),
        OreKind::UnitsOnly => return Ok(Some(r.as_constant().is_some())),
        _ => {}
    }
    if let Some(desc) = WeylSatDesc::from_set(set) {
        return desc.member(r).map(Some);
    }
    if let Some(img) = x_image(set) {
        return match r.as_x_poly() {
            None => Ok(Some(false)),
            Some(p) => Ok(Some(commutative_witness(&img, &Elem::Poly(p), budget)?.is_some())),
        };
    }
    if let Some(img) = fourier_image(set).as_ref().and_then(x_image) {
        return match fourier(r).as_x_poly() {
            None => Ok(Some(false)),
            Some(p) => Ok(Some(commutative_witness(&img, &Elem::Poly(p), budget)?.is_some())),
        };
    }
    Ok(None)
}

/// Whether `r ∈ LSat(S)`. Weyl sets without an exact description fall back on a
/// bounded witness search and may answer `unknown`.
pub fn lsat_member(set: &OreSetDesc, r: &Elem, budget: &Budget) -> Result<Tri> {
    if r.ring() != set.ring {
        return Err(Error::RingMismatch { expected: set.ring.clone(), found: r.ring() });
    }
    if r.is_zero() {
        return Err(Error::ZeroInput("lsat_member"));
    }
    if set.ring.is_commutative() {
        return Ok(Tri::from_bool(commutative_witness(set, r, budget)?.is_some()));
    }
    if contains(set, r, budget)?.is_yes() {
        return Ok(Tri::Yes);
    }
    if let Some(b) = weyl_exact_member(set, r.as_weyl().unwrap(), budget)? {
        return Ok(Tri::from_bool(b));
    }
    Ok(match lsat_witness(set, r, budget)? {
        WitnessResult::Found(_) => Tri::Yes,
        WitnessResult::ProvenAbsent => Tri::No,
        WitnessResult::Unknown => Tri::Unknown,
    })
}

/// `P ⊆ LSat(Q)` checked on the generators of `P`.
pub fn gens_in_closure(p: &OreSetDesc, q: &OreSetDesc, budget: &Budget) -> Result<Tri> {
    match &p.kind {
        OreKind::MonoidGens(gens) => {
            let mut acc = Tri::Yes;
            for g in gens {
                acc = acc.and(lsat_member(q, g, budget)?);
                if acc == Tri::No {
                    break;
                }
            }
            Ok(acc)
        }
        OreKind::Union(parts) => {
            let mut acc = Tri::Yes;
            for part in parts {
                acc = acc.and(gens_in_closure(part, q, budget)?);
            }
            Ok(acc)
        }
        OreKind::UnitsOnly => Ok(Tri::Yes),
        OreKind::EulerSet(z) => {
            if let Some(desc) = WeylSatDesc::from_set(q) {
                return Ok(Tri::from_bool(desc.same_closure(&WeylSatDesc::EulerClosure(z.clone()))
                    || matches!(desc, WeylSatDesc::UnionXD) && z.is_integer()));
            }
            let mut acc = Tri::Yes;
            let e = budget.exponent as i64;
            for k in -e..=e {
                acc = acc.and(lsat_member(q, &Elem::Weyl(WeylOp::theta_shift(&(z + int(k)))), budget)?);
                if acc == Tri::No {
                    return Ok(Tri::No);
                }
            }
            Ok(acc.and(Tri::Unknown))
        }
        _ => Ok(Tri::Unknown),
    }
}

/// `LSat(S₁) = LSat(S₂)`.
pub fn closure_equal(a: &OreSetDesc, b: &OreSetDesc, budget: &Budget) -> Result<Tri> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch { expected: a.ring.clone(), found: b.ring.clone() });
    }
    if a.ring.is_commutative() {
        if let (Ok(da), Ok(db)) = (lsat_generators(a), lsat_generators(b)) {
            return Ok(Tri::from_bool(da == db));
        }
    } else if let (Some(da), Some(db)) = (WeylSatDesc::from_set(a), WeylSatDesc::from_set(b)) {
        return Ok(Tri::from_bool(da.same_closure(&db)));
    }
    let ab = gens_in_closure(a, b, budget)?;
    if ab == Tri::No {
        return Ok(Tri::No);
    }
    Ok(ab.and(gens_in_closure(b, a, budget)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Maximality {
    Maximal,
    PreMaximal,
    Neither,
}

/// Which primes of ℤ become invertible: finitely many, or all but finitely many.
/// Both-infinite sets are outside the finite descriptions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntType {
    FiniteInvertible,
    CofiniteInvertible,
    #[serde(rename = "NA")]
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub maximality: Maximality,
    pub int_type: IntType,
}

pub fn classify_desc(d: &SaturatedSetDesc) -> Classification {
    let maximality = match (d.mode(), d.irreducibles().len()) {
        (SatMode::Cofinite, 0) => Maximality::Maximal,
        (SatMode::Cofinite, 1) => Maximality::PreMaximal,
        _ => Maximality::Neither,
    };
    let int_type = match (&d.ring, d.mode()) {
        (RingId::Z, SatMode::Finite) => IntType::FiniteInvertible,
        (RingId::Z, SatMode::Cofinite) => IntType::CofiniteInvertible,
        _ => IntType::NotApplicable,
    };
    Classification { maximality, int_type }
}

pub fn classify(set: &OreSetDesc) -> Result<Classification> {
    Ok(classify_desc(&lsat_generators(set)?))
}

/// `Î = (I ∖ {0}) ∪ {1}` for `I = (g)`, with its classification.
pub fn ideal_hat(g: &Elem) -> Result<(OreSetDesc, Classification)> {
    let set = OreSetDesc::ideal_hat(g.clone())?;
    let c = classify(&set)?;
    Ok((set, c))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LocType {
    Monoidal,
    Geometric,
    Rational,
}

/// Localization-type tags for the known descriptor shapes.
pub fn loc_type_tags(set: &OreSetDesc) -> BTreeSet<LocType> {
    let mut tags = BTreeSet::new();
    match &set.kind {
        OreKind::MonoidGens(_) | OreKind::EulerSet(_) | OreKind::UnitsOnly => {
            tags.insert(LocType::Monoidal);
        }
        OreKind::Union(parts) => {
            if parts.iter().all(|p| loc_type_tags(p).contains(&LocType::Monoidal)) {
                tags.insert(LocType::Monoidal);
            }
        }
        OreKind::NonzeroAll => {
            if set.ring.is_commutative() {
                tags.insert(LocType::Geometric);
            }
        }
        OreKind::PrimeSet(d) => match (d.mode(), d.irreducibles().len()) {
            (SatMode::Finite, _) => {
                tags.insert(LocType::Monoidal);
            }
            (SatMode::Cofinite, n) => {
                if n <= 1 {
                    tags.insert(LocType::Geometric);
                }
            }
        },
        OreKind::IdealHat(_) => {}
    }
    // S ∪ {0} closed under + and · : the nonzero elements of ℚ[x] or ℚ, and all of Weyl ∖ {0}
    let rational = match &set.kind {
        OreKind::NonzeroAll => true,
        OreKind::UnitsOnly => set.ring != RingId::Z,
        OreKind::PrimeSet(d) => d.mode() == SatMode::Cofinite && d.irreducibles().is_empty() && set.ring != RingId::Z,
        _ => false,
    };
    if rational {
        tags.insert(LocType::Rational);
    }
    tags
}
