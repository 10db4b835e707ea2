//! Exact two-qudit simulation of compact gate teleportation.
//!
//! Wire 0 carries the magic state `D·H|0⟩`; wire 1 carries the input, which
//! goes through `C_2` and then `H²`. A controlled shift `|a,b⟩ ↦ |a,b+a⟩`
//! couples the wires, wire 1 is measured, and wire 0 receives `C_1` followed
//! by the correction `(C_1 D X† D† C_1†)^{g(r)}`.

use dashu_int::IBig;
use serde::Serialize;

use crate::arith::{Cyclotomic, Qudit, ScaledMatrix};
use crate::clifford::{clifford_from_matrix, e_gate, hadamard};
use crate::diagonal::{from_values, DiagonalGate};
use crate::error::{Error, Result};
use crate::hierarchy::SemiCliffordDecomposition;
use crate::pauli::shift;

/// Amplitudes `d^{-t/2}·a`, single- or two-qudit.
#[derive(Clone, Debug)]
pub struct StateVector {
    qd: Qudit,
    half_log_scale: u32,
    amps: Vec<Cyclotomic>,
}

impl StateVector {
    pub fn new(qd: &Qudit, half_log_scale: u32, amps: Vec<Cyclotomic>) -> Self {
        let mut s = StateVector { qd: qd.clone(), half_log_scale, amps };
        s.canonicalize();
        s
    }

    pub fn basis(qd: &Qudit, j: usize) -> Self {
        let mut amps = vec![qd.zero(); qd.d() as usize];
        amps[j] = qd.one();
        StateVector::new(qd, 0, amps)
    }

    /// Column `j` of a unitary.
    pub fn column(m: &ScaledMatrix, j: usize) -> Result<Self> {
        if m.radical().is_some() {
            return Err(Error::NotInField("state with a radical scale".into()));
        }
        let amps = (0..m.dim()).map(|i| m.get(i, j).clone()).collect();
        Ok(StateVector::new(m.qudit(), m.half_log_scale(), amps))
    }

    pub fn amps(&self) -> &[Cyclotomic] {
        &self.amps
    }

    pub fn half_log_scale(&self) -> u32 {
        self.half_log_scale
    }

    fn canonicalize(&mut self) {
        if self.half_log_scale >= 2 {
            let den = IBig::from(self.qd.d()).pow((self.half_log_scale / 2) as usize);
            for a in &mut self.amps {
                *a = a.scale(&IBig::ONE, &den);
            }
            self.half_log_scale %= 2;
        }
    }

    pub fn apply(&self, m: &ScaledMatrix) -> Result<Self> {
        if m.dim() != self.amps.len() {
            return Err(Error::DimensionMismatch { left: m.dim(), right: self.amps.len() });
        }
        if m.radical().is_some() {
            return Err(Error::NotInField("gate with a radical scale".into()));
        }
        Ok(StateVector::new(&self.qd, self.half_log_scale + m.half_log_scale(), m.apply_entries(&self.amps)))
    }

    /// `⟨ψ|ψ⟩` with the scale folded in.
    pub fn norm_squared(&self) -> Cyclotomic {
        let mut acc = self.qd.zero();
        for a in self.amps.iter().filter(|a| !a.is_zero()) {
            acc = &acc + &(a * &a.conj());
        }
        match self.half_log_scale {
            0 => acc,
            _ => acc.scale(&IBig::ONE, &IBig::from(self.qd.d())),
        }
    }

    /// True when `self = c·other` for some scalar `c`.
    pub fn proportional(&self, other: &StateVector) -> bool {
        if self.amps.len() != other.amps.len() {
            return false;
        }
        let Some(p) = other.amps.iter().position(|a| !a.is_zero()) else {
            return self.amps.iter().all(Cyclotomic::is_zero);
        };
        let (sp, op) = (&self.amps[p], &other.amps[p]);
        !sp.is_zero() && self.amps.iter().zip(&other.amps).all(|(s, o)| &(s * op) == &(o * sp))
    }

    fn tensor(&self, other: &StateVector) -> StateVector {
        let amps = self.amps.iter().flat_map(|a| other.amps.iter().map(move |b| a * b)).collect();
        StateVector::new(&self.qd, self.half_log_scale + other.half_log_scale, amps)
    }
}

/// `|M⟩ = D·H|0⟩`.
pub fn prepare_magic(qd: &Qudit, d: &DiagonalGate) -> Result<StateVector> {
    StateVector::basis(qd, 0).apply(&hadamard(qd))?.apply(&d.matrix)
}

/// The map `r ↦ g(r)` from measurement outcome to correction power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentMap(pub Vec<u32>);

impl ExponentMap {
    /// `g(r) = r`.
    pub fn standard(d: u32) -> Self {
        ExponentMap((0..d).collect())
    }

    /// Derives `g` by requiring every branch to be correct for Clifford
    /// inputs: `C_1 = H`, `D = E`, `C_2 = I` on each basis state.
    pub fn calibrate(qd: &Qudit) -> Result<Self> {
        let d = qd.d();
        let parts = clifford_parts(qd)?;
        let target = parts.to_matrix();
        let mut g = Vec::with_capacity(d as usize);
        for r in 0..d {
            let found = (0..d).find(|&e| {
                (0..d as usize).all(|j| {
                    let psi = StateVector::basis(qd, j);
                    let trial = ExponentMap((0..d).map(|_| e).collect());
                    run_branch(&parts, &target, &psi, r, &trial).map(|b| b.matched).unwrap_or(false)
                })
            });
            g.push(found.ok_or_else(|| Error::Internal(format!("no correction power for outcome {r}")))?);
        }
        Ok(ExponentMap(g))
    }
}

fn clifford_parts(qd: &Qudit) -> Result<SemiCliffordDecomposition> {
    let e = e_gate(qd);
    let values: Vec<_> = (0..qd.d() as usize).map(|z| e.get(z, z).clone()).collect();
    Ok(SemiCliffordDecomposition {
        m: Some(0),
        c1: clifford_from_matrix(&hadamard(qd))?,
        d: DiagonalGate { poly: from_values(qd, &values)?, matrix: e },
        c2: clifford_from_matrix(&ScaledMatrix::identity(qd, qd.d() as usize))?,
    })
}

/// One measurement branch.
#[derive(Clone, Debug, Serialize)]
pub struct TeleportBranch {
    pub outcome: u32,
    pub correction_power: u32,
    pub matched: bool,
    #[serde(skip)]
    pub uniform_probability: bool,
    #[serde(skip)]
    pub state: StateVector,
}

/// `C_1 D X† D† C_1†`.
pub fn correction_gate(parts: &SemiCliffordDecomposition) -> ScaledMatrix {
    let c1 = &parts.c1.matrix;
    let dm = &parts.d.matrix;
    let x_dag = shift(c1.qudit()).adjoint();
    &(&(&(c1 * dm) * &x_dag) * &dm.adjoint()) * &c1.adjoint()
}

fn run_branch(
    parts: &SemiCliffordDecomposition,
    target: &ScaledMatrix,
    psi: &StateVector,
    r: u32,
    map: &ExponentMap,
) -> Result<TeleportBranch> {
    let qd = target.qudit();
    let d = qd.d() as usize;
    let magic = prepare_magic(qd, &parts.d)?;
    let h2 = hadamard(qd).pow(2);
    let data = psi.apply(&parts.c2.matrix)?.apply(&h2)?;
    let joint = magic.tensor(&data);
    // |a,b⟩ ↦ |a,b+a⟩, then keep b = r
    let mut amps = vec![qd.zero(); d];
    for a in 0..d {
        let b = (r as usize + d - a) % d;
        amps[a] = joint.amps[a * d + b].clone();
    }
    let post = StateVector::new(qd, joint.half_log_scale, amps);
    let probability = post.norm_squared();
    let power = map.0[r as usize];
    let corr = correction_gate(parts).pow(power as u64);
    let out = post.apply(&parts.c1.matrix)?.apply(&corr)?;
    let want = psi.apply(target)?;
    let expected_p = Cyclotomic::from_rational(qd.field(), IBig::ONE, IBig::from(qd.d()))?;
    let norm_ok = out.norm_squared() == &want.norm_squared() * &expected_p;
    Ok(TeleportBranch {
        outcome: r,
        correction_power: power,
        matched: norm_ok && out.proportional(&want),
        uniform_probability: &probability == &(&psi.norm_squared() * &expected_p),
        state: out,
    })
}

/// Teleports `G|ψ⟩` through the parts `C_1·D·C_2` of `G`, over every
/// outcome or only `forced`. The parts are checked against `G` first.
pub fn run_protocol(
    g: &ScaledMatrix,
    parts: &SemiCliffordDecomposition,
    psi: &StateVector,
    forced: Option<u32>,
) -> Result<Vec<TeleportBranch>> {
    check_parts(g, parts)?;
    run_protocol_with(parts, psi, forced, &ExponentMap::standard(g.qudit().d()))
}

pub fn run_protocol_with(
    parts: &SemiCliffordDecomposition,
    psi: &StateVector,
    forced: Option<u32>,
    map: &ExponentMap,
) -> Result<Vec<TeleportBranch>> {
    let qd = parts.d.matrix.qudit();
    if !parts.d.matrix.is_diagonal() {
        return Err(Error::InvalidDecomposition("middle factor is not diagonal".into()));
    }
    if psi.amps.len() != qd.d() as usize {
        return Err(Error::DimensionMismatch { left: qd.d() as usize, right: psi.amps.len() });
    }
    let target = parts.to_matrix();
    let outcomes: Vec<u32> = match forced {
        Some(r) if r < qd.d() => vec![r],
        Some(r) => return Err(Error::Parse(format!("outcome {r} out of range"))),
        None => (0..qd.d()).collect(),
    };
    outcomes.into_iter().map(|r| run_branch(parts, &target, psi, r, map)).collect()
}

/// Checks a decomposition against the gate it claims to factor.
pub fn check_parts(g: &ScaledMatrix, parts: &SemiCliffordDecomposition) -> Result<()> {
    if parts.to_matrix().same_phase_class(g) {
        Ok(())
    } else {
        Err(Error::InvalidDecomposition("C1·D·C2 differs from the gate".into()))
    }
}

#[cfg(test)]
mod tests;
