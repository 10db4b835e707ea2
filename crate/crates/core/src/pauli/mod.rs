//! The Weyl–Heisenberg layer: Weyl operators, the Pauli basis expansion
//! `f_M`, Pauli supports and phase-plane geometry.

mod coefficients;
mod geometry;
mod render;

use serde::{Deserialize, Serialize};

use crate::arith::{Qudit, Residue, ScaledMatrix};

pub use coefficients::{convolution_phase_exp, convolve, is_pauli, pauli_decompose, pauli_up_to_phase, support, PauliCoefficients};
pub use geometry::{line_through, LineFit, PhaseLine};
pub use render::{render_ascii, render_svg};

/// A point `(p, q)` of the phase plane `Z_d²`; indexes `Z^p X^q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[u32; 2]", from = "[u32; 2]")]
pub struct PhasePoint {
    pub p: u32,
    pub q: u32,
}

impl From<PhasePoint> for [u32; 2] {
    fn from(x: PhasePoint) -> Self {
        [x.p, x.q]
    }
}

impl From<[u32; 2]> for PhasePoint {
    fn from(x: [u32; 2]) -> Self {
        PhasePoint { p: x[0], q: x[1] }
    }
}

impl PhasePoint {
    pub fn new(p: i64, q: i64, d: u32) -> Self {
        let d = d as i64;
        PhasePoint { p: p.rem_euclid(d) as u32, q: q.rem_euclid(d) as u32 }
    }

    pub fn origin() -> Self {
        PhasePoint { p: 0, q: 0 }
    }

    pub fn is_origin(self) -> bool {
        self.p == 0 && self.q == 0
    }

    pub fn add(self, other: Self, d: u32) -> Self {
        PhasePoint::new(self.p as i64 + other.p as i64, self.q as i64 + other.q as i64, d)
    }

    pub fn sub(self, other: Self, d: u32) -> Self {
        PhasePoint::new(self.p as i64 - other.p as i64, self.q as i64 - other.q as i64, d)
    }

    pub fn neg(self, d: u32) -> Self {
        PhasePoint::new(-(self.p as i64), -(self.q as i64), d)
    }

    pub fn scale(self, c: i64, d: u32) -> Self {
        PhasePoint::new(c * self.p as i64, c * self.q as i64, d)
    }

    /// Row-major index `p·d + q`.
    pub fn index(self, d: u32) -> usize {
        (self.p * d + self.q) as usize
    }

    pub fn from_index(i: usize, d: u32) -> Self {
        PhasePoint { p: i as u32 / d, q: i as u32 % d }
    }

    /// All `d²` points in index order.
    pub fn all(d: u32) -> impl Iterator<Item = PhasePoint> {
        (0..d * d).map(move |i| PhasePoint::from_index(i as usize, d))
    }
}

/// `[(p,q),(p',q')] = p·q' − p'·q`.
pub fn symplectic_product(a: PhasePoint, b: PhasePoint, d: u32) -> Residue {
    Residue::new(a.p as i64 * b.q as i64 - b.p as i64 * a.q as i64, d as u64)
}

/// `ζ_N` exponent of the single nonzero entry `⟨j+q| W(p,q) |j⟩`.
pub fn weyl_entry_exp(qd: &Qudit, pt: PhasePoint, j: u32) -> i64 {
    let (p, q) = (pt.p as i64, pt.q as i64);
    let col_phase = qd.omega_exp(p * (j as i64 + q));
    if qd.is_qubit() {
        qd.i_exp(p * q) + col_phase
    } else {
        qd.omega_exp(-(qd.half() as i64) * p * q) + col_phase
    }
}

/// `W(p,q) = ω^{-2^{-1}pq} Z^p X^q`; for qubits `W(p,q) = i^{pq} Z^p X^q`.
pub fn weyl(qd: &Qudit, pt: PhasePoint) -> ScaledMatrix {
    let d = qd.d();
    let mut m = ScaledMatrix::zeros(qd, d as usize);
    for j in 0..d {
        let row = (j + pt.q) % d;
        m.set(row as usize, j as usize, qd.root(weyl_entry_exp(qd, pt, j)));
    }
    m
}

/// The clock gate `Z = D[ω^z]`.
pub fn clock(qd: &Qudit) -> ScaledMatrix {
    weyl(qd, PhasePoint { p: 1, q: 0 })
}

/// The shift gate `X: |z⟩ → |z+1⟩`.
pub fn shift(qd: &Qudit) -> ScaledMatrix {
    weyl(qd, PhasePoint { p: 0, q: 1 })
}

/// `ζ^{phase}·Z^p X^q` with `ζ` a primitive `2d`-th root (qubits: `i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PauliOperator {
    pub phase_exp: u32,
    pub point: PhasePoint,
}

impl PauliOperator {
    fn phase_modulus(d: u32) -> u32 {
        if d == 2 { 4 } else { 2 * d }
    }

    pub fn new(phase_exp: i64, point: PhasePoint, d: u32) -> Self {
        let n = Self::phase_modulus(d) as i64;
        PauliOperator { phase_exp: phase_exp.rem_euclid(n) as u32, point }
    }

    /// The Weyl operator at `point` written in this form.
    pub fn from_weyl(qd: &Qudit, point: PhasePoint) -> Self {
        let (p, q) = (point.p as i64, point.q as i64);
        let phase = if qd.is_qubit() { p * q } else { 2 * qd.md(-(qd.half() as i64) * p * q) as i64 };
        PauliOperator::new(phase, point, qd.d())
    }

    pub fn to_matrix(&self, qd: &Qudit) -> ScaledMatrix {
        let d = qd.d();
        let step = (qd.order() / Self::phase_modulus(d)) as i64;
        let base = self.phase_exp as i64 * step;
        let mut m = ScaledMatrix::zeros(qd, d as usize);
        for j in 0..d {
            let row = (j + self.point.q) % d;
            let e = base + qd.omega_exp(self.point.p as i64 * row as i64);
            m.set(row as usize, j as usize, qd.root(e));
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::mod_inverse;

    #[test]
    fn weyl_examples() {
        let q = Qudit::new(5, 1).unwrap();
        assert!(weyl(&q, PhasePoint::origin()).same_value(&ScaledMatrix::identity(&q, 5)));
        let z = clock(&q);
        for j in 0..5 {
            assert_eq!(z.get(j, j), &q.omega(j as i64));
        }
        // 2^{-1} = 3 mod 5 from the inverse oracle, so W(1,1) = ω^{-3} Z X
        let h = mod_inverse(Residue::new(2, 5)).unwrap().value() as i64;
        assert_eq!(h, 3);
        let zx = &z * &shift(&q);
        assert!(weyl(&q, PhasePoint { p: 1, q: 1 }).same_value(&zx.scale_entries(&q.omega(-h))));
    }

    #[test]
    fn symplectic_product_examples() {
        let d = 5;
        let sp = |a: (i64, i64), b: (i64, i64)| {
            symplectic_product(PhasePoint::new(a.0, a.1, d), PhasePoint::new(b.0, b.1, d), d).value()
        };
        assert_eq!(sp((1, 0), (0, 1)), 1);
        assert_eq!(sp((2, 3), (2, 3)), 0);
        assert_eq!(sp((2, 3), (1, 4)), 0);
    }

    #[test]
    fn zx_commutation() {
        for d in [2u32, 3, 5] {
            let q = Qudit::new(d, 1).unwrap();
            let (z, x) = (clock(&q), shift(&q));
            assert!((&z * &x).same_value(&(&x * &z).scale_entries(&q.omega(1))));
        }
    }

    #[test]
    fn pauli_operator_matches_weyl() {
        for d in [2u32, 3, 5] {
            let q = Qudit::new(d, 1).unwrap();
            for pt in PhasePoint::all(d) {
                let op = PauliOperator::from_weyl(&q, pt);
                assert!(op.to_matrix(&q).same_value(&weyl(&q, pt)), "d={d} {pt:?}");
            }
        }
    }
}
