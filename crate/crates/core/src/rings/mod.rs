//! Base rings: ℤ, ℚ[x] and the first Weyl algebra, behind one tagged element type.

mod factor;
mod parse;
mod poly;
mod weyl;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use factor::{divisors, factor_int, factor_int_with_bound, factor_poly, IntFactorization, PolyFactorization, DEFAULT_FACTOR_BOUND};
pub use parse::{parse_element, ring_eval};
pub use poly::UniPoly;
pub use weyl::{Exp, WeylOp};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Formats `c * mono` for a positive coefficient, dropping a unit coefficient.
pub(crate) fn fmt_rat_coeff(c: &Rat, mono: &str) -> String {
    match (c.is_one(), mono.is_empty()) {
        (_, true) => c.to_string(),
        (true, false) => mono.to_string(),
        (false, false) => format!("{c}*{mono}"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingId {
    Z,
    /// ℚ[v] in the named variable.
    QX(String),
    /// First Weyl algebra with generators `x` and `d`.
    Weyl,
}

impl RingId {
    pub fn qx() -> Self {
        RingId::QX("x".into())
    }

    pub fn is_commutative(&self) -> bool {
        !matches!(self, RingId::Weyl)
    }

    /// Name used in JSON and on the command line.
    pub fn tag(&self) -> &'static str {
        match self {
            RingId::Z => "Z",
            RingId::QX(_) => "QX",
            RingId::Weyl => "weyl",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        match tag.to_ascii_lowercase().as_str() {
            "z" | "int" => Ok(RingId::Z),
            "qx" | "q[x]" | "poly" => Ok(RingId::qx()),
            "weyl" | "d" => Ok(RingId::Weyl),
            other => Err(Error::Invalid(format!("unknown ring `{other}`"))),
        }
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingId::Z => f.write_str("Z"),
            RingId::QX(v) => write!(f, "Q[{v}]"),
            RingId::Weyl => f.write_str("Weyl"),
        }
    }
}

/// Three-valued answer for membership-style questions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

impl Tri {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }

    pub fn and(self, other: Tri) -> Tri {
        match (self, other) {
            (Tri::No, _) | (_, Tri::No) => Tri::No,
            (Tri::Yes, Tri::Yes) => Tri::Yes,
            _ => Tri::Unknown,
        }
    }

    pub fn or(self, other: Tri) -> Tri {
        match (self, other) {
            (Tri::Yes, _) | (_, Tri::Yes) => Tri::Yes,
            (Tri::No, Tri::No) => Tri::No,
            _ => Tri::Unknown,
        }
    }

    pub fn all(it: impl IntoIterator<Item = Tri>) -> Tri {
        it.into_iter().fold(Tri::Yes, Tri::and)
    }

    pub fn is_yes(self) -> bool {
        self == Tri::Yes
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Unknown => "unknown",
        })
    }
}

/// An element of one of the base rings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Int(Int),
    Poly(UniPoly),
    Weyl(WeylOp),
}

impl Elem {
    pub fn ring(&self) -> RingId {
        match self {
            Elem::Int(_) => RingId::Z,
            Elem::Poly(p) => RingId::QX(p.var().to_string()),
            Elem::Weyl(_) => RingId::Weyl,
        }
    }

    pub fn zero(ring: &RingId) -> Self {
        Self::from_i64(ring, 0)
    }

    pub fn one(ring: &RingId) -> Self {
        Self::from_i64(ring, 1)
    }

    pub fn from_i64(ring: &RingId, n: i64) -> Self {
        Self::from_rat(ring, &int(n)).expect("integers embed in every ring")
    }

    /// Fails for non-integral rationals in ℤ.
    pub fn from_rat(ring: &RingId, c: &Rat) -> Result<Self> {
        Ok(match ring {
            RingId::Z => {
                if !c.is_integer() {
                    return Err(Error::Invalid(format!("{c} is not an integer")));
                }
                Elem::Int(c.to_integer())
            }
            RingId::QX(v) => Elem::Poly(UniPoly::constant(v.clone(), c.clone())),
            RingId::Weyl => Elem::Weyl(WeylOp::constant(c.clone())),
        })
    }

    pub fn x() -> Self {
        Elem::Weyl(WeylOp::x())
    }

    pub fn d() -> Self {
        Elem::Weyl(WeylOp::d())
    }

    pub fn theta() -> Self {
        Elem::Weyl(WeylOp::theta())
    }

    pub fn as_int(&self) -> Option<&Int> {
        match self {
            Elem::Int(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&UniPoly> {
        match self {
            Elem::Poly(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_weyl(&self) -> Option<&WeylOp> {
        match self {
            Elem::Weyl(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Elem::Int(n) => n.is_zero(),
            Elem::Poly(p) => p.is_zero(),
            Elem::Weyl(w) => w.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Elem::Int(n) => n.is_one(),
            Elem::Poly(p) => p.is_one(),
            Elem::Weyl(w) => w.is_one(),
        }
    }

    /// Constant value, if the element lies in the prime field image.
    pub fn as_constant(&self) -> Option<Rat> {
        match self {
            Elem::Int(n) => Some(Rat::from_integer(n.clone())),
            Elem::Poly(p) => p.is_constant().then(|| p.coeff(0)),
            Elem::Weyl(w) => w.as_constant(),
        }
    }

    /// Units: `±1` in ℤ, nonzero constants elsewhere.
    pub fn is_unit(&self) -> bool {
        match self {
            Elem::Int(n) => n.abs().is_one(),
            _ => self.as_constant().is_some_and(|c| !c.is_zero()),
        }
    }

    /// Inverse of a unit.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let c = self.as_constant()?;
        Self::from_rat(&self.ring(), &c.recip()).ok()
    }

    /// Degree used to bound factor searches: `|n|` bit length, polynomial degree, total degree.
    pub fn size(&self) -> u64 {
        match self {
            Elem::Int(n) => n.bits(),
            Elem::Poly(p) => p.degree().unwrap_or(0) as u64,
            Elem::Weyl(w) => w.total_degree().unwrap_or(0) as u64,
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        match (self, other) {
            (Elem::Int(_), Elem::Int(_)) | (Elem::Weyl(_), Elem::Weyl(_)) => Ok(()),
            (Elem::Poly(a), Elem::Poly(b)) if a.var() == b.var() => Ok(()),
            _ => Err(Error::RingMismatch { expected: self.ring(), found: other.ring() }),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Elem::Int(a), Elem::Int(b)) => Elem::Int(a + b),
            (Elem::Poly(a), Elem::Poly(b)) => Elem::Poly(a + b),
            (Elem::Weyl(a), Elem::Weyl(b)) => Elem::Weyl(a + b),
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Elem::Int(a), Elem::Int(b)) => Elem::Int(a - b),
            (Elem::Poly(a), Elem::Poly(b)) => Elem::Poly(a - b),
            (Elem::Weyl(a), Elem::Weyl(b)) => Elem::Weyl(a - b),
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Elem::Int(a), Elem::Int(b)) => Elem::Int(a * b),
            (Elem::Poly(a), Elem::Poly(b)) => Elem::Poly(a * b),
            (Elem::Weyl(a), Elem::Weyl(b)) => Elem::Weyl(a * b),
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Self {
        match self {
            Elem::Int(a) => Elem::Int(-a),
            Elem::Poly(a) => Elem::Poly(-a),
            Elem::Weyl(a) => Elem::Weyl(-a),
        }
    }

    /// Multiplies by a rational scalar; fails in ℤ unless the result is integral.
    pub fn scale(&self, c: &Rat) -> Result<Self> {
        match self {
            Elem::Int(n) => {
                let v = Rat::from_integer(n.clone()) * c;
                Self::from_rat(&RingId::Z, &v)
            }
            Elem::Poly(p) => Ok(Elem::Poly(p.scale(c))),
            Elem::Weyl(w) => Ok(Elem::Weyl(w.scale(c))),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        match self {
            Elem::Int(n) => Elem::Int(num_traits::pow(n.clone(), e as usize)),
            Elem::Poly(p) => Elem::Poly(p.pow(e)),
            Elem::Weyl(w) => Elem::Weyl(w.pow(e)),
        }
    }

    /// Product of a nonempty or empty list (`1` for empty).
    pub fn product<'a>(ring: &RingId, it: impl IntoIterator<Item = &'a Elem>) -> Result<Self> {
        it.into_iter().try_fold(Self::one(ring), |acc, e| acc.mul(e))
    }

    /// Canonical associate in a commutative ring: `|n|` in ℤ, monic in ℚ[x].
    pub fn normalized(&self) -> Self {
        match self {
            Elem::Int(n) => Elem::Int(n.abs()),
            Elem::Poly(p) => Elem::Poly(p.monic()),
            Elem::Weyl(w) => Elem::Weyl(w.clone()),
        }
    }

    /// Normalized gcd in ℤ or ℚ[x]; `None` in the Weyl algebra.
    pub fn gcd(&self, other: &Self) -> Option<Self> {
        match (self, other) {
            (Elem::Int(a), Elem::Int(b)) => Some(Elem::Int(a.gcd(b))),
            (Elem::Poly(a), Elem::Poly(b)) if a.var() == b.var() => Some(Elem::Poly(a.gcd(b))),
            _ => None,
        }
    }

    /// Normalized lcm in ℤ or ℚ[x] of nonzero inputs.
    pub fn lcm(&self, other: &Self) -> Option<Self> {
        match (self, other) {
            (Elem::Int(a), Elem::Int(b)) => Some(Elem::Int(a.lcm(b))),
            (Elem::Poly(a), Elem::Poly(b)) if a.var() == b.var() => Some(Elem::Poly(a.lcm(b))),
            _ => None,
        }
    }

    /// Largest divisor of `self` whose irreducible factors all divide `other`
    /// (commutative rings, both nonzero).
    pub fn part_supported_on(&self, other: &Self) -> Option<Self> {
        let mut part = Self::one(&self.ring());
        let mut rest = self.clone();
        loop {
            let g = rest.gcd(other)?;
            if g.is_unit() {
                return Some(part);
            }
            // strip g completely before recomputing the gcd
            while let Some(q) = exact_right_divide(&rest, &g).ok()? {
                rest = q;
                part = part.mul(&g).ok()?;
            }
        }
    }

    /// Leading coefficient in the order used for printing.
    pub fn lead_coeff(&self) -> Rat {
        match self {
            Elem::Int(n) => Rat::from_integer(n.clone()),
            Elem::Poly(p) => p.lead(),
            Elem::Weyl(w) => w.terms().next().map(|(_, c)| c.clone()).unwrap_or_else(Rat::zero),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Int(n) => write!(f, "{n}"),
            Elem::Poly(p) => write!(f, "{p}"),
            Elem::Weyl(w) => write!(f, "{w}"),
        }
    }
}

/// Finds `q` with `q · divisor = p`, or `None` when `p ∉ R·divisor`.
///
/// In the Weyl algebra the quotient is peeled off by descending ∂-degree: the
/// ∂-leading coefficient of `q·g` is the product of the ∂-leading coefficients
/// of `q` and `g`, so each step is a commutative division in ℚ[x]. Because the
/// algebra is a domain the quotient is unique when it exists, hence the
/// procedure is complete for every nonzero divisor.
pub fn exact_right_divide(p: &Elem, divisor: &Elem) -> Result<Option<Elem>> {
    p.check_same(divisor)?;
    if divisor.is_zero() {
        return Err(Error::ZeroInput("exact_right_divide divisor"));
    }
    Ok(match (p, divisor) {
        (Elem::Int(a), Elem::Int(b)) => {
            let (q, r) = a.div_rem(b);
            r.is_zero().then_some(Elem::Int(q))
        }
        (Elem::Poly(a), Elem::Poly(b)) => a.exact_div(b).map(Elem::Poly),
        (Elem::Weyl(a), Elem::Weyl(b)) => weyl_right_divide(a, b).map(Elem::Weyl),
        _ => unreachable!(),
    })
}

pub fn weyl_right_divide(p: &WeylOp, g: &WeylOp) -> Option<WeylOp> {
    let m = g.d_degree()?;
    let g_lead = g.d_coeff(m);
    let mut rest = p.clone();
    let mut quot = WeylOp::zero();
    while let Some(k) = rest.d_degree() {
        if k < m {
            return None;
        }
        let c = rest.d_coeff(k).exact_div(&g_lead)?;
        let q_term = &WeylOp::from_x_poly(&c) * &WeylOp::monomial(0, k - m);
        rest = &rest - &(&q_term * g);
        quot = &quot + &q_term;
    }
    Some(quot)
}

/// Finds `q` with `divisor · q = p` in the Weyl algebra, via the adjoint anti-automorphism.
pub fn weyl_left_divide(p: &WeylOp, divisor: &WeylOp) -> Option<WeylOp> {
    weyl_right_divide(&p.adjoint(), &divisor.adjoint()).map(|q| q.adjoint())
}
