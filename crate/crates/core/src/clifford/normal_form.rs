use serde::{Deserialize, Serialize};

use super::gates::{m_gate, m_index_for_direction};
use super::CliffordGate;
use crate::arith::{Qudit, ScaledMatrix};
use crate::diagonal::{build_diagonal, from_values, RankKPolynomial};
use crate::error::{Error, Result};
use crate::pauli::PhasePoint;

/// `C = M·D·P` with `M ∈ 𝓜`, `D` a diagonal Clifford fixing `|0⟩` and `P`
/// the permutation `σ(z) = az + b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MDPForm {
    pub m: Option<u32>,
    pub d: RankKPolynomial,
    pub p: (u32, u32),
}

/// `C = D·P·M^{-1}`, the mirrored normal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReverseForm {
    pub d: RankKPolynomial,
    pub p: (u32, u32),
    pub m_inverse: Option<u32>,
}

/// `|z⟩ ↦ |az + b⟩`.
pub fn permutation_gate(qd: &Qudit, a: u32, b: u32) -> ScaledMatrix {
    let d = qd.d() as u64;
    let images: Vec<usize> = (0..d).map(|z| ((a as u64 * z + b as u64) % d) as usize).collect();
    ScaledMatrix::permutation(qd, &images)
}

impl MDPForm {
    pub fn to_matrix(&self, qd: &Qudit) -> Result<ScaledMatrix> {
        let dg = build_diagonal(qd, &self.d)?;
        Ok(&(&m_gate(qd, self.m) * &dg.matrix) * &permutation_gate(qd, self.p.0, self.p.1))
    }
}

impl ReverseForm {
    pub fn to_matrix(&self, qd: &Qudit) -> Result<ScaledMatrix> {
        let dg = build_diagonal(qd, &self.d)?;
        let tail = m_gate(qd, self.m_inverse).adjoint();
        Ok(&(&dg.matrix * &permutation_gate(qd, self.p.0, self.p.1)) * &tail)
    }
}

/// Splits a monomial unitary as `D·P_σ` with `D|0⟩ = |0⟩`.
pub(crate) fn split_monomial(r: &ScaledMatrix) -> Result<(RankKPolynomial, (u32, u32))> {
    let qd = r.qudit();
    let d = qd.d();
    let images = r.monomial_pattern().ok_or(Error::NotClifford)?;
    let b = images[0] as u32;
    let a = qd.md(images[1] as i64 - b as i64);
    if (0..d).any(|z| images[z as usize] as u64 != (a as u64 * z as u64 + b as u64) % d as u64) {
        return Err(Error::NotClifford);
    }
    // h(σ(z)) is the entry in column z
    let mut h = vec![qd.zero(); d as usize];
    for z in 0..d as usize {
        h[images[z]] = r.get(images[z], z).clone();
    }
    let h0_inv = h[0].inverse()?;
    let values: Vec<_> = h.iter().map(|x| x * &h0_inv).collect();
    let poly = from_values(qd, &values)?;
    Ok((poly, (a, b)))
}

/// The unique `M·D·P` factorization of a Clifford gate.
pub fn mdp_normal_form(c: &CliffordGate) -> Result<MDPForm> {
    let qd = c.matrix.qudit();
    let s = c.affine.s;
    let m = m_index_for_direction(qd, PhasePoint { p: s.s11, q: s.s21 });
    let r = m_gate(qd, m).adjoint().try_mul(&c.matrix)?;
    let (d, p) = split_monomial(&r)?;
    if d.level() > 2 {
        return Err(Error::NotClifford);
    }
    Ok(MDPForm { m, d, p })
}

/// The mirrored form `C = D·P·M^{-1}`, computed from the normal form of `C†`.
pub fn reverse_form(c: &CliffordGate) -> Result<ReverseForm> {
    let qd = c.matrix.qudit();
    let dagger = CliffordGate { affine: c.affine.inverse(), matrix: c.matrix.adjoint() };
    let f = mdp_normal_form(&dagger)?;
    // C = P'† D'† M'† = (P'† D'† P') P'† M'†
    let p_inv = permutation_gate(qd, f.p.0, f.p.1).adjoint();
    let dprime = build_diagonal(qd, &f.d)?.matrix.adjoint();
    let moved = &(&p_inv * &dprime) * &p_inv.adjoint();
    let d = qd.d() as usize;
    let v0_inv = moved.get(0, 0).inverse()?;
    let values: Vec<_> = (0..d).map(|i| moved.get(i, i) * &v0_inv).collect();
    let poly = from_values(qd, &values)?;
    let a_inv = qd.inv(f.p.0 as i64)?;
    let b_inv = qd.md(-(a_inv as i64) * f.p.1 as i64);
    Ok(ReverseForm { d: poly, p: (a_inv, b_inv), m_inverse: f.m })
}
