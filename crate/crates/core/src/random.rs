//! Seeded sampling of gates and states.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{Qudit, ScaledMatrix};
use crate::clifford::{hadamard, AffineSymplectic, CliffordGate, SymplecticMatrix};
use crate::diagonal::{build_diagonal, RankKPolynomial};
use crate::error::Result;
use crate::hierarchy::{LevelCertificate, LevelTable};
use crate::pauli::PhasePoint;
use crate::teleport::StateVector;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random phase class of the table's level.
pub fn sample_certificate<R: Rng>(table: &LevelTable, rng: &mut R) -> (LevelCertificate, ScaledMatrix) {
    table.entry(rng.gen_range(0..table.len()))
}

pub fn random_affine<R: Rng>(d: u32, rng: &mut R) -> AffineSymplectic {
    loop {
        let [a, b, c, e] = [0; 4].map(|_| rng.gen_range(0..d) as i64);
        if let Ok(s) = SymplecticMatrix::new(a, b, c, e, d) {
            let v = PhasePoint::new(rng.gen_range(0..d) as i64, rng.gen_range(0..d) as i64, d);
            return AffineSymplectic::new(s, v);
        }
    }
}

pub fn random_clifford<R: Rng>(qd: &Qudit, rng: &mut R) -> Result<CliffordGate> {
    CliffordGate::from_affine(qd, random_affine(qd.d(), rng))
}

/// `C·D·H|j⟩` for a random Clifford `C`, a random diagonal `D` at the
/// context's precision and a random basis index `j`.
pub fn random_state<R: Rng>(qd: &Qudit, rng: &mut R) -> Result<StateVector> {
    let d = qd.d();
    let m = qd.precision();
    let n = (d as u64).pow(m);
    let phi = RankKPolynomial::new(d, m, (1..d).map(|_| rng.gen_range(0..n)).collect())?;
    let dg = build_diagonal(qd, &phi)?;
    let c = random_clifford(qd, rng)?;
    let j = rng.gen_range(0..d as usize);
    StateVector::basis(qd, j).apply(&hadamard(qd))?.apply(&dg.matrix)?.apply(&c.matrix)
}
