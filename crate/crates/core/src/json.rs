//! JSON forms of field elements and matrices.
//!
//! A field element is `{"order": N, "terms": [[e, "p/q"], ...]}`, meaning
//! `Σ (p/q)·ζ_N^e`. Output always uses the power basis; input accepts any
//! exponents and any order dividing the context's field order.

use dashu_int::IBig;
use serde::{Deserialize, Serialize};

use crate::arith::{Cyclotomic, Qudit, ScaledMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicNumber {
    pub order: u32,
    pub terms: Vec<(i64, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub d: u32,
    #[serde(default)]
    pub half_log_scale: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radical: Option<CyclotomicNumber>,
    pub entries: Vec<Vec<CyclotomicNumber>>,
}

fn fmt_rational(num: &IBig, den: &IBig) -> String {
    if *den == IBig::ONE {
        num.to_string()
    } else {
        format!("{num}/{den}")
    }
}

fn parse_rational(s: &str) -> Result<(IBig, IBig)> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: IBig = n.parse().map_err(|_| bad())?;
    let den: IBig = d.parse().map_err(|_| bad())?;
    if den == IBig::ZERO {
        return Err(bad());
    }
    Ok((num, den))
}

pub fn cyclotomic_to_json(x: &Cyclotomic) -> CyclotomicNumber {
    let terms = x
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, (n, _))| *n != IBig::ZERO)
        .map(|(e, (n, d))| (e as i64, fmt_rational(n, d)))
        .collect();
    CyclotomicNumber { order: x.order(), terms }
}

pub fn cyclotomic_from_json(qd: &Qudit, x: &CyclotomicNumber) -> Result<Cyclotomic> {
    if x.order == 0 || qd.order() % x.order != 0 {
        return Err(Error::Parse(format!("order {} does not divide field order {}", x.order, qd.order())));
    }
    let step = (qd.order() / x.order) as i64;
    let mut acc = qd.zero();
    for (e, c) in &x.terms {
        let (n, d) = parse_rational(c)?;
        acc = &acc + &qd.root(e * step).scale(&n, &d);
    }
    Ok(acc)
}

pub fn matrix_to_json(m: &ScaledMatrix) -> MatrixJson {
    let n = m.dim();
    MatrixJson {
        d: m.qudit().d(),
        half_log_scale: m.half_log_scale(),
        radical: m.radical().map(cyclotomic_to_json),
        entries: (0..n).map(|i| (0..n).map(|j| cyclotomic_to_json(m.get(i, j))).collect()).collect(),
    }
}

pub fn matrix_from_json(qd: &Qudit, m: &MatrixJson) -> Result<ScaledMatrix> {
    let d = qd.d() as usize;
    if m.d != qd.d() {
        return Err(Error::Parse(format!("matrix is for d = {}, context has d = {}", m.d, qd.d())));
    }
    if m.entries.len() != d || m.entries.iter().any(|r| r.len() != d) {
        return Err(Error::Parse(format!("expected a {d}×{d} matrix")));
    }
    let entries = m
        .entries
        .iter()
        .flatten()
        .map(|x| cyclotomic_from_json(qd, x))
        .collect::<Result<Vec<_>>>()?;
    let out = ScaledMatrix::new(qd, d, m.half_log_scale, entries)?;
    match &m.radical {
        None => Ok(out),
        Some(r) => out.with_radical(cyclotomic_from_json(qd, r)?),
    }
}
