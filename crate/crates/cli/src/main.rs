mod parse;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ore_loc::closure::{
    iterated_closure, lattice_closure_z, lattice_oracle, poly_ideal_closure, poly_oracle, torsion_z,
    weyl_candidate_oracle, weyl_saturation_verify, ClosurePlan, IntLattice, PolyIdeal, PresentedModule, Verdict,
    WeylIdeal,
};
use ore_loc::localization::{
    equality_forms, frac_add, frac_equals, frac_mul, frac_ore_pair, hom_iso_check, omega_map, two_step_compose,
    unit_invert, Fraction, HomIso, NestedFraction, UnitInverse,
};
use ore_loc::ore::{
    lsat_witness, ore_falsify, ore_set_to_json, ore_solve, saturated_to_json, WitnessResult,
};
use ore_loc::saturation::{
    classify, closure_equal, dot_lattice, dot_tree, ideal_hat, join, leq, loc_type_tags, lsat_generators, lsat_member,
    meet,
};
use ore_loc::weyl::{fourier, fourier_inv, grade_decompose, groebner_basis, ideal_member, theta_form, ThetaY};
use ore_loc::{Budget, Error, Result, RingId, Tri};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "oreloc", version, about = "Exact computations with Ore localizations")]
struct Cli {
    #[command(flatten)]
    budget: BudgetArgs,

    /// Ring for shorthand set descriptors and bare elements: z, qx or weyl.
    #[arg(long, global = true, default_value = "z")]
    ring: String,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, global = true, env = "ORE_BUDGET_DEGREE", default_value_t = 12)]
    budget_degree: u32,
    #[arg(long, global = true, env = "ORE_BUDGET_EXPONENT", default_value_t = 12)]
    budget_exponent: u32,
    #[arg(long, global = true, env = "ORE_GB_PAIR_LIMIT", default_value_t = 5000)]
    gb_pair_limit: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an expression to normal form.
    Eval { expr: String },
    /// Fraction arithmetic; fractions are written "s | r".
    Frac {
        #[command(subcommand)]
        op: FracOp,
    },
    /// Left saturation queries.
    Lsat {
        #[command(subcommand)]
        op: LsatOp,
    },
    /// Invert a fraction when it is a unit.
    Unit {
        #[arg(long)]
        set: String,
        #[arg(long)]
        frac: String,
    },
    /// Image of a fraction under the map between two localizations.
    Omega {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        frac: String,
        /// Witness for a generator, as g=w.
        #[arg(long = "witness")]
        witnesses: Vec<String>,
    },
    /// Whether a ring-fixing homomorphism exists between two localizations.
    HomCheck {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Maximality and integer type of the saturated closure of a set.
    Classify {
        #[arg(long)]
        set: String,
    },
    /// The set (I \ {0}) ∪ {1} for I = (g).
    IdealHat { generator: String },
    /// Lattice of saturated sets: DOT drawings and join, meet, order.
    Lattice {
        #[command(subcommand)]
        op: LatticeOp,
    },
    /// Local closures of lattices, K[x] ideals and Weyl left ideals.
    Closure {
        #[command(subcommand)]
        op: ClosureOp,
    },
    /// Torsion submodule of Z^n/P.
    Torsion {
        #[arg(long)]
        module: String,
        #[arg(long)]
        primes: String,
    },
    /// Weyl algebra tools: grading, theta form, Fourier, Ore pairs, Groebner bases.
    Weyl {
        #[command(subcommand)]
        op: WeylCmd,
    },
    /// Compose (1, t)^-1 (s, r) into the localization at the union.
    TwoStep {
        #[arg(long)]
        s: String,
        #[arg(long)]
        t: String,
        #[arg(long)]
        t_elem: String,
        #[arg(long)]
        frac: String,
    },
}

#[derive(Subcommand)]
enum FracOp {
    Add { #[arg(long)] set: String, a: String, b: String },
    Mul { #[arg(long)] set: String, a: String, b: String },
    Eq { #[arg(long)] set: String, a: String, b: String },
    OrePair { #[arg(long)] set: String, a: String, b: String },
    Normalize { #[arg(long)] set: String, a: String },
}

#[derive(Subcommand)]
enum LsatOp {
    Member { #[arg(long)] set: String, elem: String },
    Witness { #[arg(long)] set: String, elem: String },
    Generators { #[arg(long)] set: String },
    ClosureEqual { #[arg(long)] set: String, #[arg(long)] other: String },
}

#[derive(Subcommand)]
enum LatticeOp {
    /// DOT drawing of the subsets of the given primes.
    Dot {
        #[arg(long)]
        primes: String,
        /// Draw the binary decision tree instead of the lattice.
        #[arg(long)]
        tree: bool,
    },
    Join { a: String, b: String },
    Meet { a: String, b: String },
    Leq { a: String, b: String },
}

#[derive(Subcommand)]
enum ClosureOp {
    /// Run a closure plan on a lattice, a K[x] ideal or a Weyl ideal.
    Run {
        #[arg(long)]
        plan: String,
        #[arg(long, conflicts_with_all = ["poly", "weyl"])]
        lattice: Option<String>,
        #[arg(long, conflicts_with = "weyl")]
        poly: Option<String>,
        /// Weyl generators separated by ';'.
        #[arg(long)]
        weyl: Option<String>,
        /// Weyl candidate "index|from gens|to gens".
        #[arg(long = "candidate")]
        candidates: Vec<String>,
    },
    /// Certify a candidate closure of a Weyl left ideal.
    VerifyWeyl {
        #[arg(long)]
        old: String,
        #[arg(long)]
        candidate: String,
        #[arg(long)]
        set: String,
    },
    Poly {
        #[arg(long)]
        set: String,
        poly: String,
    },
    LatticeZ {
        #[arg(long)]
        lattice: String,
        #[arg(long)]
        primes: String,
    },
}

#[derive(Subcommand)]
enum WeylCmd {
    Grade { expr: String },
    ThetaForm { expr: String },
    Fourier {
        expr: String,
        #[arg(long)]
        inverse: bool,
    },
    OreSolve { #[arg(long)] set: String, #[arg(long)] s: String, #[arg(long)] r: String },
    /// Groebner basis of generators separated by ';'.
    Gb { gens: String },
    Member { #[arg(long)] ideal: String, expr: String },
    Falsify {
        #[arg(long)]
        set: String,
        #[arg(long)]
        s: String,
        #[arg(long)]
        r: String,
        #[arg(long, default_value_t = 8)]
        bound: u32,
    },
}

enum Output {
    Json(Value),
    Text(String),
}

/// Payload plus whether the answer is definite.
struct Answer {
    out: Output,
    definite: bool,
}

fn definite(v: Value) -> Result<Answer> {
    Ok(Answer { out: Output::Json(v), definite: true })
}

fn tri(t: Tri) -> &'static str {
    match t {
        Tri::Yes => "yes",
        Tri::No => "no",
        Tri::Unknown => "unknown",
    }
}

fn tri_answer(key: &str, t: Tri) -> Result<Answer> {
    Ok(Answer { out: Output::Json(json!({ key: tri(t) })), definite: t != Tri::Unknown })
}

fn frac_json(f: &Fraction) -> Value {
    json!({ "den": f.den().to_string(), "num": f.num().to_string() })
}

fn run(cli: Cli) -> Result<Answer> {
    let budget = Budget {
        degree: cli.budget.budget_degree,
        exponent: cli.budget.budget_exponent,
        gb_pair_limit: cli.budget.gb_pair_limit,
    };
    let ring = parse::ring(&cli.ring)?;
    let set_ctx = |s: &str| parse::ctx(parse::ore_set(s, &ring)?, budget);
    match cli.cmd {
        Cmd::Eval { expr } => definite(json!({ "result": parse::elem(&expr, &ring)?.to_string() })),
        Cmd::Frac { op } => match op {
            FracOp::Add { set, a, b } => {
                let c = set_ctx(&set)?;
                definite(json!({ "result": frac_json(&frac_add(&parse::fraction(&a, &c)?, &parse::fraction(&b, &c)?)?) }))
            }
            FracOp::Mul { set, a, b } => {
                let c = set_ctx(&set)?;
                definite(json!({ "result": frac_json(&frac_mul(&parse::fraction(&a, &c)?, &parse::fraction(&b, &c)?)?) }))
            }
            FracOp::Eq { set, a, b } => {
                let c = set_ctx(&set)?;
                let (a, b) = (parse::fraction(&a, &c)?, parse::fraction(&b, &c)?);
                let forms = equality_forms(&a, &b)?;
                definite(json!({
                    "equal": frac_equals(&a, &b)?,
                    "forms": {
                        "tilde": forms.tilde, "all_pairs": forms.all_pairs, "some_pair": forms.some_pair,
                        "common_multiple": forms.common_multiple, "saturated": tri(forms.saturated),
                    }
                }))
            }
            FracOp::OrePair { set, a, b } => {
                let c = set_ctx(&set)?;
                let (x, y) = frac_ore_pair(&parse::fraction(&a, &c)?, &parse::fraction(&b, &c)?)?;
                definite(json!({ "x": frac_json(&x), "y": frac_json(&y) }))
            }
            FracOp::Normalize { set, a } => {
                let c = set_ctx(&set)?;
                let f = parse::fraction(&a, &c)?;
                definite(json!({ "result": frac_json(&f), "reduced": f.reduced_display() }))
            }
        },
        Cmd::Lsat { op } => match op {
            LsatOp::Member { set, elem } => {
                let s = parse::ore_set(&set, &ring)?;
                tri_answer("member", lsat_member(&s, &parse::elem(&elem, &s.ring)?, &budget)?)
            }
            LsatOp::Witness { set, elem } => {
                let s = parse::ore_set(&set, &ring)?;
                Ok(match lsat_witness(&s, &parse::elem(&elem, &s.ring)?, &budget)? {
                    WitnessResult::Found(w) => Answer { out: Output::Json(json!({ "status": "found", "witness": w.to_string() })), definite: true },
                    WitnessResult::ProvenAbsent => Answer { out: Output::Json(json!({ "status": "proven-absent" })), definite: true },
                    WitnessResult::Unknown => Answer { out: Output::Json(json!({ "status": "unknown" })), definite: false },
                })
            }
            LsatOp::Generators { set } => {
                let g = lsat_generators(&parse::ore_set(&set, &ring)?)?;
                definite(json!({ "saturated": saturated_to_json(&g), "display": g.to_string() }))
            }
            LsatOp::ClosureEqual { set, other } => {
                let (a, b) = (parse::ore_set(&set, &ring)?, parse::ore_set(&other, &ring)?);
                tri_answer("equal", closure_equal(&a, &b, &budget)?)
            }
        },
        Cmd::Unit { set, frac } => {
            let c = set_ctx(&set)?;
            Ok(match unit_invert(&parse::fraction(&frac, &c)?)? {
                UnitInverse::Inverse(inv) => Answer { out: Output::Json(json!({ "unit": true, "inverse": frac_json(&inv) })), definite: true },
                UnitInverse::NotUnit => Answer { out: Output::Json(json!({ "unit": false })), definite: true },
                UnitInverse::Unknown => Answer { out: Output::Json(json!({ "unit": "unknown" })), definite: false },
            })
        }
        Cmd::Omega { from, to, frac, witnesses } => {
            let s = set_ctx(&from)?;
            let t = set_ctx(&to)?;
            let supplied = witnesses.iter().map(|w| parse::witness_pair(w, &s.ring())).collect::<Result<Vec<_>>>()?;
            definite(json!({ "image": frac_json(&omega_map(&t, &parse::fraction(&frac, &s)?, &supplied)?) }))
        }
        Cmd::HomCheck { from, to } => {
            let r = hom_iso_check(&parse::ore_set(&from, &ring)?, &parse::ore_set(&to, &ring)?, &budget)?;
            Ok(Answer { out: Output::Json(json!({ "relation": r.to_string() })), definite: r != HomIso::Unknown })
        }
        Cmd::Classify { set } => {
            let s = parse::ore_set(&set, &ring)?;
            let c = classify(&s)?;
            definite(json!({
                "classification": serde_json::to_value(&c).expect("plain data"),
                "saturated": lsat_generators(&s)?.to_string(),
                "loc_types": serde_json::to_value(loc_type_tags(&s)).expect("plain data"),
            }))
        }
        Cmd::IdealHat { generator } => {
            let (s, c) = ideal_hat(&parse::elem(&generator, &ring)?)?;
            definite(json!({ "set": ore_set_to_json(&s), "classification": serde_json::to_value(&c).expect("plain data") }))
        }
        Cmd::Lattice { op } => match op {
            LatticeOp::Dot { primes, tree } => {
                let p = parse::elems(&primes, &ring)?;
                let dot = if tree { dot_tree(&p)? } else { dot_lattice(&p)? };
                Ok(Answer { out: Output::Text(dot), definite: true })
            }
            LatticeOp::Join { a, b } => {
                let j = join(&parse::saturated(&a, &ring)?, &parse::saturated(&b, &ring)?)?;
                definite(json!({ "result": saturated_to_json(&j), "display": j.to_string() }))
            }
            LatticeOp::Meet { a, b } => {
                let m = meet(&parse::saturated(&a, &ring)?, &parse::saturated(&b, &ring)?)?;
                definite(json!({ "result": saturated_to_json(&m), "display": m.to_string() }))
            }
            LatticeOp::Leq { a, b } => definite(json!({ "leq": leq(&parse::saturated(&a, &ring)?, &parse::saturated(&b, &ring)?)? })),
        },
        Cmd::Closure { op } => closure(op, &ring, budget),
        Cmd::Torsion { module, primes } => {
            let m = PresentedModule::new(IntLattice::from_json(&parse::json_arg(&module)?)?)?;
            definite(torsion_z(&m, &parse::primes(&primes)?)?.to_json())
        }
        Cmd::Weyl { op } => weyl(op, &ring, budget),
        Cmd::TwoStep { s, t, t_elem, frac } => {
            let sc = set_ctx(&s)?;
            let tset = parse::ore_set(&t, &ring)?;
            let n = NestedFraction::new(&tset, parse::elem(&t_elem, &sc.ring())?, parse::fraction(&frac, &sc)?)?;
            let f = two_step_compose(&tset, &n)?;
            definite(json!({ "result": frac_json(&f), "set": ore_set_to_json(&f.ctx().set) }))
        }
    }
}

fn closure(op: ClosureOp, ring: &RingId, budget: Budget) -> Result<Answer> {
    match op {
        ClosureOp::Run { plan, lattice, poly, weyl, candidates } => {
            let plan = ClosurePlan::from_json(&parse::json_arg(&plan)?)?;
            let (result, trace) = if let Some(l) = lattice {
                let (out, trace) = iterated_closure(IntLattice::from_json(&parse::json_arg(&l)?)?, &plan, lattice_oracle(&plan)?)?;
                (out.to_json(), trace)
            } else if let Some(p) = poly {
                let f = parse::elem(&p, &RingId::qx())?.as_poly().cloned().expect("polynomial ring");
                let (out, trace) = iterated_closure(PolyIdeal(f), &plan, poly_oracle(&plan)?)?;
                (json!(out.0.to_string()), trace)
            } else if let Some(w) = weyl {
                let cands = candidates
                    .iter()
                    .map(|c| {
                        let parts: Vec<&str> = c.split('|').collect();
                        let [i, from, to] = parts[..] else {
                            return Err(Error::Invalid(format!("candidate `{c}` is not index|from|to")));
                        };
                        let i = i.trim().parse().map_err(|_| Error::Invalid(format!("bad index in `{c}`")))?;
                        Ok((i, parse::weyl_list(from)?, parse::weyl_list(to)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let start = WeylIdeal::new(parse::weyl_list(&w)?, &budget)?;
                let (out, trace) = iterated_closure(start, &plan, weyl_candidate_oracle(&plan, cands, budget)?)?;
                (json!(out.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>()), trace)
            } else {
                return Err(Error::Invalid("closure run needs --lattice, --poly or --weyl".into()));
            };
            let mut text = trace.to_json_lines();
            text.push_str(&json!({ "result": result }).to_string());
            text.push('\n');
            Ok(Answer { out: Output::Text(text), definite: trace.verdict.is_closed() })
        }
        ClosureOp::VerifyWeyl { old, candidate, set } => {
            let s = parse::ore_set(&set, &RingId::Weyl)?;
            let r = weyl_saturation_verify(&parse::weyl_list(&old)?, &parse::weyl_list(&candidate)?, &s, &budget)?;
            Ok(Answer { definite: r.verdict != Verdict::BudgetExhausted, out: Output::Json(r.to_json()) })
        }
        ClosureOp::Poly { set, poly } => {
            let qx = RingId::qx();
            let sat = lsat_generators(&parse::ore_set(&set, if matches!(ring, RingId::QX(_)) { ring } else { &qx })?)?;
            let f = parse::elem(&poly, &qx)?.as_poly().cloned().expect("polynomial ring");
            definite(json!({ "closure": poly_ideal_closure(&f, &sat)?.to_string() }))
        }
        ClosureOp::LatticeZ { lattice, primes } => {
            let l = IntLattice::from_json(&parse::json_arg(&lattice)?)?;
            definite(lattice_closure_z(&l, &parse::primes(&primes)?)?.to_json())
        }
    }
}

fn weyl(op: WeylCmd, ring: &RingId, budget: Budget) -> Result<Answer> {
    let w = |s: &str| -> Result<ore_loc::WeylOp> { Ok(parse::elem(s, &RingId::Weyl)?.as_weyl().cloned().expect("Weyl ring")) };
    match op {
        WeylCmd::Grade { expr } => {
            let parts = grade_decompose(&w(&expr)?)?;
            definite(json!({
                "parts": parts.iter().map(|p| json!({ "degree": p.degree, "component": p.component.to_string() })).collect::<Vec<_>>()
            }))
        }
        WeylCmd::ThetaForm { expr } => {
            let f = theta_form(&w(&expr)?)?;
            let y = match f.y {
                ThetaY::None => "1",
                ThetaY::X => "x",
                ThetaY::D => "d",
            };
            definite(json!({
                "coeff": f.coeff.to_string(), "theta_poly": f.tpoly.to_string(), "y": y, "n": f.n, "display": f.to_string()
            }))
        }
        WeylCmd::Fourier { expr, inverse } => {
            let e = w(&expr)?;
            let r = if inverse { fourier_inv(&e) } else { fourier(&e) };
            definite(json!({ "result": r.to_string() }))
        }
        WeylCmd::OreSolve { set, s, r } => {
            let set = parse::ore_set(&set, ring)?;
            let pair = ore_solve(&set, &parse::elem(&s, &set.ring)?, &parse::elem(&r, &set.ring)?, &budget)?;
            definite(json!({ "s_tilde": pair.s_tilde.to_string(), "r_tilde": pair.r_tilde.to_string() }))
        }
        WeylCmd::Gb { gens } => {
            let gb = groebner_basis(&parse::weyl_list(&gens)?, &budget)?;
            definite(json!({ "basis": gb.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>() }))
        }
        WeylCmd::Member { ideal, expr } => {
            let gb = groebner_basis(&parse::weyl_list(&ideal)?, &budget)?;
            let (member, nf) = ideal_member(&w(&expr)?, &gb);
            definite(json!({ "member": member, "normal_form": nf.to_string() }))
        }
        WeylCmd::Falsify { set, s, r, bound } => {
            let set = parse::ore_set(&set, ring)?;
            let rep = ore_falsify(&set, &parse::elem(&s, &set.ring)?, &parse::elem(&r, &set.ring)?, bound)?;
            let solution = rep.solution.as_ref().map(|p| json!({ "s_tilde": p.s_tilde.to_string(), "r_tilde": p.r_tilde.to_string() }));
            Ok(Answer {
                definite: solution.is_some() || rep.exhaustive,
                out: Output::Json(json!({ "solution": solution, "checked": rep.checked, "exhaustive": rep.exhaustive })),
            })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(a) => {
            match a.out {
                Output::Json(v) => println!("{v}"),
                Output::Text(t) => print!("{t}"),
            }
            if a.definite {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
