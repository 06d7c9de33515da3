//! Integer lattices, Hermite and Smith normal forms, local closure and torsion over ℤ.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rings::Int;

pub type Matrix = Vec<Vec<Int>>;

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Int::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free elimination (Bareiss).
pub fn determinant(a: &Matrix) -> Int {
    let n = a.len();
    if n == 0 {
        return Int::one();
    }
    let mut m = a.clone();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

fn is_unimodular(a: &Matrix) -> bool {
    determinant(a).abs().is_one()
}

/// Row-style Hermite normal form: echelon, positive pivots, entries above a
/// pivot reduced into `[0, pivot)`, zero rows dropped.
pub fn hnf(a: &Matrix, ambient: usize) -> Matrix {
    let mut m: Matrix = a.to_vec();
    let mut row = 0;
    for col in 0..ambient {
        loop {
            let pivot = (row..m.len()).filter(|&i| !m[i][col].is_zero()).min_by(|&i, &j| m[i][col].abs().cmp(&m[j][col].abs()));
            let Some(p) = pivot else { break };
            m.swap(row, p);
            let mut clean = true;
            for i in row + 1..m.len() {
                if m[i][col].is_zero() {
                    continue;
                }
                let q = m[i][col].div_floor(&m[row][col]);
                let pr = m[row].clone();
                for (x, y) in m[i].iter_mut().zip(&pr) {
                    *x -= &q * y;
                }
                if !m[i][col].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if row < m.len() && !m[row][col].is_zero() {
            if m[row][col].is_negative() {
                for x in m[row].iter_mut() {
                    *x = -x.clone();
                }
            }
            let pr = m[row].clone();
            for r in m.iter_mut().take(row) {
                let q = r[col].div_floor(&pr[col]);
                for (x, y) in r.iter_mut().zip(&pr) {
                    *x -= &q * y;
                }
            }
            row += 1;
        }
    }
    m.truncate(row);
    m
}

/// Smith normal form `U·A·V = D` with `V⁻¹` kept alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
    pub v_inv: Matrix,
}

impl Snf {
    /// Nonzero diagonal entries, each dividing the next.
    pub fn invariants(&self) -> Vec<Int> {
        (0..self.d.len().min(self.v.len())).map(|i| self.d[i][i].clone()).filter(|x| !x.is_zero()).collect()
    }
}

struct SnfWork {
    a: Matrix,
    u: Matrix,
    v: Matrix,
    v_inv: Matrix,
}

impl SnfWork {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in self.a.iter_mut().chain(self.v.iter_mut()) {
            r.swap(i, j);
        }
        self.v_inv.swap(i, j);
    }

    /// row_i -= q·row_j
    fn row_sub(&mut self, i: usize, j: usize, q: &Int) {
        for m in [&mut self.a, &mut self.u] {
            let rj = m[j].clone();
            for (x, y) in m[i].iter_mut().zip(&rj) {
                *x -= q * y;
            }
        }
    }

    /// col_i -= q·col_j
    fn col_sub(&mut self, i: usize, j: usize, q: &Int) {
        for m in [&mut self.a, &mut self.v] {
            for r in m.iter_mut() {
                let y = r[j].clone();
                r[i] -= q * y;
            }
        }
        let ri = self.v_inv[i].clone();
        for (x, y) in self.v_inv[j].iter_mut().zip(&ri) {
            *x += q * y;
        }
    }
}

pub fn snf(a: &Matrix, ambient: usize) -> Snf {
    let m = a.len();
    let n = ambient;
    let mut w = SnfWork { a: a.to_vec(), u: identity(m), v: identity(n), v_inv: identity(n) };
    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if !w.a[i][j].is_zero() && best.is_none_or(|(bi, bj)| w.a[i][j].abs() < w.a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            w.swap_rows(t, bi);
            w.swap_cols(t, bj);
            let mut clean = true;
            for i in t + 1..m {
                let q = w.a[i][t].div_floor(&w.a[t][t]);
                if !q.is_zero() {
                    w.row_sub(i, t, &q);
                }
                clean &= w.a[i][t].is_zero();
            }
            for j in t + 1..n {
                let q = w.a[t][j].div_floor(&w.a[t][t]);
                if !q.is_zero() {
                    w.col_sub(j, t, &q);
                }
                clean &= w.a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !w.a[i][j].is_multiple_of(&w.a[t][t])));
            match bad {
                Some(i) => w.row_sub(t, i, &-Int::one()),
                None => break,
            }
        }
        if t < m && w.a[t][t].is_negative() {
            for mm in [&mut w.a, &mut w.u] {
                for x in mm[t].iter_mut() {
                    *x = -x.clone();
                }
            }
        }
    }
    Snf { u: w.u, d: w.a, v: w.v, v_inv: w.v_inv }
}

/// Both normal forms with the transforms checked to be unimodular.
pub fn normal_forms_z(a: &Matrix, ambient: usize) -> Result<(Matrix, Snf)> {
    check_shape(a, ambient)?;
    let h = hnf(a, ambient);
    let s = snf(a, ambient);
    if !is_unimodular(&s.u) || !is_unimodular(&s.v) || mat_mul(&s.v, &s.v_inv) != identity(ambient) {
        return Err(Error::Verification("Smith transforms are not unimodular".into()));
    }
    if mat_mul(&mat_mul(&s.u, a), &s.v) != s.d {
        return Err(Error::Verification("U·A·V differs from D".into()));
    }
    Ok((h, s))
}

fn check_shape(a: &Matrix, ambient: usize) -> Result<()> {
    if let Some(r) = a.iter().find(|r| r.len() != ambient) {
        return Err(Error::Invalid(format!("row of length {} in ambient rank {ambient}", r.len())));
    }
    Ok(())
}

/// A sublattice `P ⊆ ℤⁿ` given by generating rows.
#[derive(Clone, Debug)]
pub struct IntLattice {
    ambient: usize,
    rows: Matrix,
    hnf: Matrix,
}

impl PartialEq for IntLattice {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.hnf == other.hnf
    }
}

impl Eq for IntLattice {}

impl IntLattice {
    pub fn new(ambient: usize, rows: Matrix) -> Result<Self> {
        check_shape(&rows, ambient)?;
        let hnf = hnf(&rows, ambient);
        Ok(Self { ambient, rows, hnf })
    }

    pub fn from_i64(ambient: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(ambient, rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect())
    }

    pub fn whole(ambient: usize) -> Self {
        let id = identity(ambient);
        Self { ambient, rows: id.clone(), hnf: id }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rows(&self) -> &Matrix {
        &self.rows
    }

    pub fn hnf(&self) -> &Matrix {
        &self.hnf
    }

    pub fn rank(&self) -> usize {
        self.hnf.len()
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut v = v.to_vec();
        for row in &self.hnf {
            let Some(c) = row.iter().position(|x| !x.is_zero()) else { continue };
            if v[..c].iter().any(|x| !x.is_zero()) {
                return false;
            }
            let (q, r) = v[c].div_rem(&row[c]);
            if !r.is_zero() {
                return false;
            }
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &q * y;
            }
        }
        v.iter().all(Zero::is_zero)
    }

    pub fn is_sublattice_of(&self, other: &Self) -> bool {
        self.hnf.iter().all(|r| other.contains(r))
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<String>> = self.hnf.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        json!({ "ambient": self.ambient, "rows": rows })
    }

    /// `{"ambient": n, "rows": [...]}`, or a bare nonempty array of rows.
    pub fn from_json(v: &Value) -> Result<Self> {
        let (ambient, rows) = match v {
            Value::Array(rows) => {
                let n = rows.first().and_then(Value::as_array).map(Vec::len);
                (n.ok_or_else(|| Error::Invalid("a bare lattice needs at least one row".into()))?, rows)
            }
            _ => (
                v["ambient"].as_u64().ok_or_else(|| Error::Invalid("lattice needs \"ambient\"".into()))? as usize,
                v["rows"].as_array().ok_or_else(|| Error::Invalid("lattice needs \"rows\"".into()))?,
            ),
        };
        let mut m = Vec::with_capacity(rows.len());
        for r in rows {
            let r = r.as_array().ok_or_else(|| Error::Invalid("rows must be arrays".into()))?;
            let mut out = Vec::with_capacity(r.len());
            for x in r {
                let n = match x {
                    Value::Number(n) => n.to_string().parse::<Int>(),
                    Value::String(s) => s.trim().parse::<Int>(),
                    _ => return Err(Error::Invalid(format!("bad lattice entry {x}"))),
                };
                out.push(n.map_err(|_| Error::Invalid(format!("bad lattice entry {x}")))?);
            }
            m.push(out);
        }
        Self::new(ambient, m)
    }
}

impl fmt::Display for IntLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .hnf
            .iter()
            .map(|r| format!("({})", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "<{}>", rows.join(", "))
    }
}

/// `M = ℤⁿ/P` with its Smith form.
#[derive(Clone, Debug)]
pub struct PresentedModule {
    pub relations: IntLattice,
    pub snf: Snf,
}

impl PresentedModule {
    pub fn new(relations: IntLattice) -> Result<Self> {
        let (_, snf) = normal_forms_z(relations.rows(), relations.ambient())?;
        Ok(Self { relations, snf })
    }

    /// Cyclic modules `ℤ/d₁ ⊕ … ⊕ ℤ/dₖ`.
    pub fn cyclic_sum(orders: &[i64]) -> Result<Self> {
        let n = orders.len();
        let rows = (0..n).map(|i| (0..n).map(|j| if i == j { orders[i] } else { 0 }).collect()).collect::<Vec<_>>();
        Self::new(IntLattice::from_i64(n, &rows)?)
    }
}

fn check_primes(primes: &[Int]) -> Result<()> {
    for p in primes {
        if *p < Int::from(2) || (2u32..).map(Int::from).take_while(|d| d * d <= *p).any(|d| p.is_multiple_of(&d)) {
            return Err(Error::Invalid(format!("{p} is not a prime")));
        }
    }
    Ok(())
}

/// Largest divisor of `d` whose prime support lies in `primes` (positive).
pub fn s_part(d: &Int, primes: &[Int]) -> Int {
    let mut rest = d.abs();
    let mut part = Int::one();
    if rest.is_zero() {
        return part;
    }
    for p in primes {
        while rest.is_multiple_of(p) {
            rest /= p;
            part *= p;
        }
    }
    part
}

/// `P^S = {v : s·v ∈ P for some S-product s}`.
pub fn lattice_closure_z(p: &IntLattice, primes: &[Int]) -> Result<IntLattice> {
    check_primes(primes)?;
    let (_, s) = normal_forms_z(p.rows(), p.ambient())?;
    let rows = s
        .invariants()
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let c = d / s_part(d, primes);
            s.v_inv[i].iter().map(|x| x * &c).collect()
        })
        .collect();
    let out = IntLattice::new(p.ambient(), rows)?;
    if !p.is_sublattice_of(&out) {
        return Err(Error::Verification("closure does not contain the lattice".into()));
    }
    Ok(out)
}

/// Invariant-factor description of `t_S(M) = P^S/P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Torsion {
    /// Orders of the cyclic summands, each dividing the next; empty when `t_S(M) = 0`.
    pub invariants: Vec<Int>,
    /// One generator in `ℤⁿ` per summand, read modulo `P`.
    pub generators: Matrix,
}

impl Torsion {
    pub fn is_zero(&self) -> bool {
        self.invariants.is_empty()
    }

    pub fn order(&self) -> Int {
        self.invariants.iter().product()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "invariants": self.invariants.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "generators": self.generators.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

pub fn torsion_z(m: &PresentedModule, primes: &[Int]) -> Result<Torsion> {
    check_primes(primes)?;
    let s = &m.snf;
    let mut invariants = Vec::new();
    let mut generators = Vec::new();
    for (i, d) in s.invariants().iter().enumerate() {
        let sp = s_part(d, primes);
        if sp.is_one() {
            continue;
        }
        let c = d / &sp;
        generators.push(s.v_inv[i].iter().map(|x| x * &c).collect());
        invariants.push(sp);
    }
    Ok(Torsion { invariants, generators })
}

/// Outcome of comparing the SNF closure with a brute-force contraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtContrReport {
    pub closure: IntLattice,
    /// `P ⊆ (P^e)^c` on every tested vector of `P`.
    pub contains_original: bool,
    /// Closure membership agrees with `∃ s: s·v ∈ P` on the whole search box.
    pub agrees: bool,
    pub checked: usize,
}

/// Checks `(P^e)^c = P^S` by enumerating the box `[-bound, bound]ⁿ` and
/// S-products with exponents up to `max_exp`.
pub fn ext_contr_check(p: &IntLattice, primes: &[Int], bound: i64, max_exp: u32) -> Result<ExtContrReport> {
    let closure = lattice_closure_z(p, primes)?;
    let products = s_products(primes, max_exp);
    let n = p.ambient();
    let side = (2 * bound + 1) as usize;
    let total = side.checked_pow(n as u32).filter(|&t| t <= 2_000_000).ok_or_else(|| Error::Budget("search box too large".into()))?;
    let mut agrees = true;
    let mut v = vec![Int::zero(); n];
    for idx in 0..total {
        let mut k = idx;
        for x in v.iter_mut() {
            *x = Int::from((k % side) as i64 - bound);
            k /= side;
        }
        let killed = products.iter().any(|s| p.contains(&v.iter().map(|x| x * s).collect::<Vec<_>>()));
        if killed != closure.contains(&v) {
            agrees = false;
            break;
        }
    }
    let contains_original = p.hnf().iter().all(|r| closure.contains(r));
    Ok(ExtContrReport { closure, contains_original, agrees, checked: total })
}

/// All products `∏ pᵢ^{eᵢ}` with every `eᵢ ≤ max_exp`.
pub fn s_products(primes: &[Int], max_exp: u32) -> Vec<Int> {
    let mut out = vec![Int::one()];
    for p in primes {
        let mut next = Vec::new();
        for s in &out {
            let mut t = s.clone();
            for _ in 0..=max_exp {
                next.push(t.clone());
                t *= p;
            }
        }
        out = next;
    }
    out
}
