use std::io::Write;

use qudit_hierarchy::arith::{level_parts, Qudit, ScaledMatrix};
use qudit_hierarchy::exec::Execution;
use qudit_hierarchy::hierarchy::{
    count_level, enumerate_level, mdc_normal_form, semi_clifford_decompose, MembershipOracle, NormalForm,
};
use qudit_hierarchy::json::{matrix_from_json, MatrixJson};
use qudit_hierarchy::pauli::{pauli_decompose, render_ascii, render_svg};
use qudit_hierarchy::random::{random_state, rng};
use qudit_hierarchy::teleport::run_protocol;
use qudit_hierarchy::verify::run_suite;
use qudit_hierarchy::Error;
use serde::Serialize;
use serde_json::json;

use crate::expr;
use crate::{Args, Command, Format};

#[derive(Debug)]
pub enum Failure {
    Invariant(String),
    Input(String),
    NotMember(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Invariant(_) => 1,
            Failure::Input(_) => 2,
            Failure::NotMember(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Invariant(m) | Failure::Input(m) | Failure::NotMember(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Parse(_)
            | Error::NotPrime(_)
            | Error::DimensionMismatch { .. }
            | Error::InvalidPolynomial(_)
            | Error::PrecisionExceeded { .. }
            | Error::OrderMismatch { .. } => Failure::Input(msg),
            Error::NotInLevel(_) | Error::NotSemiClifford(_) => Failure::NotMember(msg),
            _ => Failure::Invariant(msg),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Invariant(format!("output: {e}"))
    }
}

type Outcome = std::result::Result<(), Failure>;

fn line<W: Write, T: Serialize>(out: &mut W, value: &T) -> Outcome {
    let s = serde_json::to_string(value).map_err(|e| Failure::Invariant(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

pub fn run<W: Write>(args: &Args, out: &mut W) -> Outcome {
    if args.k == 0 {
        return Err(Failure::Input("k must be at least 1".into()));
    }
    Qudit::new(args.d, 1)?;
    let exec = if args.sequential { Execution::Sequential } else { Execution::default() };
    if args.format == Format::Svg && args.command != Command::Support {
        return Err(Failure::Input("svg output is only available for support".into()));
    }
    match args.command {
        Command::Decompose => decompose(args, out, exec),
        Command::Count => count(args, out, exec),
        Command::Support => support(args, out),
        Command::Verify => verify(args, out, exec),
        Command::Teleport => teleport(args, out, exec),
        Command::Enumerate => enumerate(args, out, exec),
    }
}

/// Smallest `m ≥ floor` whose field `Q(ζ_{4d^m})` contains `ζ_order`.
fn precision_for_order(d: u32, order: u32, floor: u32) -> Option<u32> {
    (floor..=12).find(|&m| d.checked_pow(m).is_some_and(|p| (4 * p as u64) % order as u64 == 0))
}

fn read_gate(args: &Args) -> std::result::Result<ScaledMatrix, Failure> {
    let (floor, _) = level_parts(args.d, args.k);
    let g = match (&args.expr, &args.input) {
        (Some(text), _) => {
            let e = expr::parse(text)?;
            let qd = Qudit::new(args.d, floor.max(e.precision()))?;
            e.eval(&qd)?
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let mj: MatrixJson =
                serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            if mj.d != args.d {
                return Err(Failure::Input(format!("file has d = {}, expected {}", mj.d, args.d)));
            }
            let order = mj
                .entries
                .iter()
                .flatten()
                .chain(mj.radical.iter())
                .map(|c| c.order)
                .fold(1u32, |a, b| a.max(b));
            let m = precision_for_order(args.d, order, floor)
                .ok_or_else(|| Failure::Input(format!("root order {order} is not available for d = {}", args.d)))?;
            matrix_from_json(&Qudit::new(args.d, m)?, &mj)?
        }
        (None, None) => return Err(Failure::Input("a gate is required: pass --expr or --in".into())),
    };
    if g.dim() != args.d as usize {
        return Err(Failure::Input(format!("gate is {0}×{0}, expected {1}×{1}", g.dim(), args.d)));
    }
    if !g.is_unitary() {
        return Err(Failure::Input("gate is not unitary".into()));
    }
    Ok(g)
}

/// Smallest level at most `k` holding `g`.
fn level_of(oracle: &MembershipOracle, g: &ScaledMatrix, k: u32) -> std::result::Result<Option<u32>, Failure> {
    for j in 1..=k {
        if oracle.is_member(g, j)? {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

fn require_level(oracle: &MembershipOracle, g: &ScaledMatrix, k: u32) -> std::result::Result<u32, Failure> {
    level_of(oracle, g, k)?.ok_or_else(|| Failure::NotMember(format!("gate is not in C_{k}")))
}

fn decompose<W: Write>(args: &Args, out: &mut W, exec: Execution) -> Outcome {
    let g = read_gate(args)?;
    let oracle = MembershipOracle::new(exec);
    let level = require_level(&oracle, &g, args.k)?;
    let qd = g.qudit();
    let nf = mdc_normal_form(&g, args.k)?;
    let nf_ok = nf.to_matrix(qd)?.same_phase_class(&g);
    let parts = semi_clifford_decompose(&g)?;
    let parts_ok = parts.to_matrix().same_phase_class(&g);
    let report = json!({
        "d": args.d,
        "k": args.k,
        "level": level,
        "phase_class_key": g.phase_key(),
        "normal_form": nf,
        "semi_clifford": {
            "m": parts.m,
            "C1": parts.c1.affine,
            "D": parts.d.poly,
            "C2": parts.c2.affine,
        },
        "reconstruction": nf_ok && parts_ok,
    });
    match args.format {
        Format::Json => line(out, &report)?,
        _ => {
            writeln!(out, "d = {}, k = {}, lowest level {}", args.d, args.k, level)?;
            writeln!(out, "phase class {}", g.phase_key().to_hex())?;
            match &nf {
                NormalForm::Clifford { mdp, affine } => {
                    writeln!(out, "Clifford: M index {:?}, D {:?}, P{:?}", mdp.m, mdp.d, mdp.p)?;
                    writeln!(out, "affine S = {:?}, v = ({}, {})", affine.s, affine.v.p, affine.v.q)?;
                }
                NormalForm::Mdc(f) => {
                    writeln!(out, "M·D·C: M index {:?}, D {:?}", f.m, f.d)?;
                    writeln!(out, "C: S = {:?}, v = ({}, {})", f.c.s, f.c.v.p, f.c.v.q)?;
                }
            }
            writeln!(out, "reconstruction {}", if nf_ok && parts_ok { "ok" } else { "FAILED" })?;
        }
    }
    if nf_ok && parts_ok {
        Ok(())
    } else {
        Err(Failure::Invariant("decomposition does not reproduce the gate".into()))
    }
}

fn count<W: Write>(args: &Args, out: &mut W, exec: Execution) -> Outcome {
    let mut mismatch = false;
    for k in 1..=args.k {
        let formula = count_level(args.d, k);
        let within = args.force || formula <= args.budget.into();
        let (enumerated, status) = if within {
            let e = enumerate_level(args.d, k, args.budget, args.force, exec)?;
            let ok = e.matches_formula();
            mismatch |= !ok;
            (Some(e.distinct()), if ok { "matched" } else { "mismatch" })
        } else {
            (None, "over_budget")
        };
        match args.format {
            Format::Json => line(
                out,
                &json!({
                    "d": args.d,
                    "k": k,
                    "formula": formula.to_string(),
                    "enumerated": enumerated,
                    "status": status,
                }),
            )?,
            _ => {
                let shown = enumerated.map_or("-".to_string(), |n| n.to_string());
                writeln!(out, "k = {k:<3} formula {formula:>14}  enumerated {shown:>14}  {status}")?;
            }
        }
    }
    if mismatch {
        Err(Failure::Invariant("enumeration disagrees with the closed form".into()))
    } else {
        Ok(())
    }
}

fn support<W: Write>(args: &Args, out: &mut W) -> Outcome {
    let g = read_gate(args)?;
    let f = pauli_decompose(&g).map_err(|e| match e {
        Error::NotInField(m) => Failure::Input(m),
        e => e.into(),
    })?;
    let pts = f.support();
    match args.format {
        Format::Json => {
            let pairs: Vec<[u32; 2]> = pts.iter().map(|x| [x.p, x.q]).collect();
            line(out, &json!({ "d": args.d, "support": pairs }))?;
        }
        Format::Ascii => write!(out, "{}", render_ascii(args.d, &pts))?,
        Format::Svg => write!(out, "{}", render_svg(args.d, &pts))?,
    }
    Ok(())
}

fn verify<W: Write>(args: &Args, out: &mut W, exec: Execution) -> Outcome {
    let reports = run_suite(args.d, args.seed, exec);
    let failed = reports.iter().filter(|r| !r.passed && !r.informational).count();
    for r in &reports {
        match args.format {
            Format::Json => line(out, r)?,
            _ => {
                let tag = match (r.passed, r.informational) {
                    (true, _) => "PASS",
                    (false, true) => "INFO",
                    (false, false) => "FAIL",
                };
                writeln!(out, "{tag} {}: {}", r.name, r.detail)?;
            }
        }
    }
    if failed > 0 {
        Err(Failure::Invariant(format!("{failed} check(s) failed")))
    } else {
        Ok(())
    }
}

fn teleport<W: Write>(args: &Args, out: &mut W, exec: Execution) -> Outcome {
    let g = read_gate(args)?;
    let oracle = MembershipOracle::new(exec);
    require_level(&oracle, &g, args.k)?;
    let parts = semi_clifford_decompose(&g)?;
    let psi = random_state(g.qudit(), &mut rng(args.seed))?;
    let branches = run_protocol(&g, &parts, &psi, None)?;
    for b in &branches {
        match args.format {
            Format::Json => line(out, b)?,
            _ => writeln!(
                out,
                "outcome {}  correction power {}  {}",
                b.outcome,
                b.correction_power,
                if b.matched { "matched" } else { "MISMATCH" }
            )?,
        }
    }
    if branches.iter().all(|b| b.matched) {
        Ok(())
    } else {
        Err(Failure::Invariant("a teleportation branch did not reproduce G|ψ⟩".into()))
    }
}

fn enumerate<W: Write>(args: &Args, out: &mut W, exec: Execution) -> Outcome {
    let e = enumerate_level(args.d, args.k, args.budget, args.force, exec)?;
    for c in &e.certificates {
        match args.format {
            Format::Json => line(out, c)?,
            _ => writeln!(out, "{} {:?} M={:?} D={:?} C={:?}", c.key.to_hex(), c.form, c.m, c.diag, c.c)?,
        }
    }
    let summary = json!({
        "summary": {
            "d": e.d,
            "k": e.k,
            "distinct": e.distinct(),
            "duplicates": e.duplicates,
            "expected": e.expected.to_string(),
            "truncated": e.truncated,
        }
    });
    match args.format {
        Format::Json => line(out, &summary)?,
        _ => writeln!(
            out,
            "{} distinct of {} expected{}",
            e.distinct(),
            e.expected,
            if e.truncated { " (truncated at budget)" } else { "" }
        )?,
    }
    if e.truncated || e.matches_formula() {
        Ok(())
    } else {
        Err(Failure::Invariant("enumeration disagrees with the closed form".into()))
    }
}
