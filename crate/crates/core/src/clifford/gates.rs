use super::{sp_factor, AffineSymplectic, SpFactor, SymplecticMatrix};
use crate::arith::{Qudit, ScaledMatrix};
use crate::error::{Error, Result};
use crate::pauli::{clock, pauli_up_to_phase, shift, weyl, PhasePoint};

/// `H_{ij} = d^{-1/2} ω^{ij}`.
pub fn hadamard(qd: &Qudit) -> ScaledMatrix {
    let d = qd.d() as usize;
    let entries = (0..d * d).map(|k| qd.omega(((k / d) * (k % d)) as i64)).collect();
    ScaledMatrix::new(qd, d, 1, entries).expect("square")
}

/// `|z⟩ ↦ |az⟩`.
pub fn scaling_gate(qd: &Qudit, a: u32) -> ScaledMatrix {
    let d = qd.d();
    let images: Vec<usize> = (0..d).map(|z| ((a as u64 * z as u64) % d as u64) as usize).collect();
    ScaledMatrix::permutation(qd, &images)
}

/// Image of `B(b)`: `D[ω^{2^{-1}bz²}]`, or `D[i^{bz}]` for qubits.
pub fn b_gate(qd: &Qudit, b: u32) -> ScaledMatrix {
    let d = qd.d() as i64;
    let values = (0..d)
        .map(|z| {
            if qd.is_qubit() {
                qd.root(qd.i_exp(b as i64 * z))
            } else {
                qd.omega(qd.half() as i64 * b as i64 * z * z)
            }
        })
        .collect();
    ScaledMatrix::diagonal(qd, values)
}

/// `E = D[ω^{z²}]`; for qubits the phase gate `D[i^z]`.
pub fn e_gate(qd: &Qudit) -> ScaledMatrix {
    b_gate(qd, if qd.is_qubit() { 1 } else { 2 })
}

/// A representative of `μ(S)` built from the generator factorization.
pub fn mu(qd: &Qudit, s: &SymplecticMatrix) -> Result<ScaledMatrix> {
    if s.d != qd.d() {
        return Err(Error::DimensionMismatch { left: qd.d() as usize, right: s.d as usize });
    }
    if s.det() != 1 % s.d {
        return Err(Error::BadDeterminant(s.det() as u64));
    }
    let perm = |f: u32| scaling_gate(qd, qd.inv(f as i64).expect("unit"));
    Ok(match sp_factor(s) {
        SpFactor::Upper { e, f } => &b_gate(qd, e) * &perm(f),
        SpFactor::Lower { g, e, f } => {
            &(&(&b_gate(qd, g) * &hadamard(qd)) * &b_gate(qd, e)) * &perm(f)
        }
    })
}

/// Symplectic image of `E^c H` (or of the identity when `c` is absent).
pub fn m_symplectic(d: u32, c: Option<u32>) -> SymplecticMatrix {
    match c {
        None => SymplecticMatrix::identity(d),
        Some(c) => {
            let s = if d == 2 { c as i64 } else { 2 * c as i64 };
            SymplecticMatrix::b(s, d).mul(&SymplecticMatrix::j(d))
        }
    }
}

/// The element of `𝓜 = {I} ∪ {E^c H}`.
pub fn m_gate(qd: &Qudit, c: Option<u32>) -> ScaledMatrix {
    match c {
        None => ScaledMatrix::identity(qd, qd.d() as usize),
        Some(c) => &e_gate(qd).pow(c as u64) * &hadamard(qd),
    }
}

/// The `c` whose `E^c H` maps the horizontal direction onto `dir`;
/// `None` when `dir` is itself horizontal.
pub fn m_index_for_direction(qd: &Qudit, dir: PhasePoint) -> Option<u32> {
    if dir.q == 0 {
        return None;
    }
    let s = dir.p as i64 * qd.inv(dir.q as i64).expect("nonzero") as i64;
    Some(if qd.is_qubit() { qd.md(s) } else { qd.md(s * qd.half() as i64) })
}

/// A Clifford gate: its affine-symplectic shadow plus a matrix representative.
#[derive(Clone, Debug)]
pub struct CliffordGate {
    pub affine: AffineSymplectic,
    pub matrix: ScaledMatrix,
}

impl CliffordGate {
    /// `W(v)·μ(S)`.
    pub fn from_affine(qd: &Qudit, affine: AffineSymplectic) -> Result<Self> {
        let matrix = &weyl(qd, affine.v) * &mu(qd, &affine.s)?;
        Ok(CliffordGate { affine, matrix })
    }

    pub fn from_matrix(m: &ScaledMatrix) -> Result<Self> {
        clifford_from_matrix(m)
    }
}

/// Recovers `(S, v)` from a Clifford matrix.
///
/// `S` is read from the phase points of `MZM†` and `MXM†`; the translation
/// is the phase point of `M·μ(S)†`, which is proportional to `W(v)`.
pub fn clifford_from_matrix(m: &ScaledMatrix) -> Result<CliffordGate> {
    let qd = m.qudit();
    if m.dim() != qd.d() as usize {
        return Err(Error::DimensionMismatch { left: qd.d() as usize, right: m.dim() });
    }
    let u = ScaledMatrix::conjugate_by(m, &clock(qd))?;
    let v = ScaledMatrix::conjugate_by(m, &shift(qd))?;
    let pu = pauli_up_to_phase(&u).ok_or(Error::NotClifford)?;
    let pv = pauli_up_to_phase(&v).ok_or(Error::NotClifford)?;
    let s = SymplecticMatrix::new(pu.p as i64, pv.p as i64, pu.q as i64, pv.q as i64, qd.d())
        .map_err(|_| Error::NotClifford)?;
    let r = m.try_mul(&mu(qd, &s)?.adjoint())?;
    let t = pauli_up_to_phase(&r).ok_or(Error::NotClifford)?;
    Ok(CliffordGate { affine: AffineSymplectic::new(s, t), matrix: m.clone() })
}
