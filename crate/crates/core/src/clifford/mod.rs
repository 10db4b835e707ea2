//! The Clifford group through affine-symplectic data.

mod conjugacy;
mod gates;
mod normal_form;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::residue::inverse_mod;
use crate::error::{Error, Result};
use crate::pauli::PhasePoint;

pub use conjugacy::clifford_conjugate_test;
pub use gates::{
    b_gate, clifford_from_matrix, e_gate, hadamard, m_gate, m_index_for_direction, m_symplectic,
    mu, scaling_gate, CliffordGate,
};
pub use normal_form::{mdp_normal_form, permutation_gate, reverse_form, MDPForm, ReverseForm};

/// An element of `SL(2, Z_d)` acting on column vectors `(p, q)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymplecticMatrix {
    pub d: u32,
    pub s11: u32,
    pub s12: u32,
    pub s21: u32,
    pub s22: u32,
}

impl fmt::Debug for SymplecticMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]] mod {}", self.s11, self.s12, self.s21, self.s22, self.d)
    }
}

impl SymplecticMatrix {
    pub fn new(s11: i64, s12: i64, s21: i64, s22: i64, d: u32) -> Result<Self> {
        let r = |x: i64| x.rem_euclid(d as i64) as u32;
        let s = SymplecticMatrix { d, s11: r(s11), s12: r(s12), s21: r(s21), s22: r(s22) };
        let det = s.det();
        if det != 1 % d {
            return Err(Error::BadDeterminant(det as u64));
        }
        Ok(s)
    }

    fn raw(s11: i64, s12: i64, s21: i64, s22: i64, d: u32) -> Self {
        Self::new(s11, s12, s21, s22, d).expect("determinant one by construction")
    }

    pub fn det(&self) -> u32 {
        let d = self.d as i64;
        (self.s11 as i64 * self.s22 as i64 - self.s12 as i64 * self.s21 as i64).rem_euclid(d) as u32
    }

    pub fn identity(d: u32) -> Self {
        Self::raw(1, 0, 0, 1, d)
    }

    /// `J = ((0,1),(−1,0))`, the image of the Fourier gate.
    pub fn j(d: u32) -> Self {
        Self::raw(0, 1, -1, 0, d)
    }

    /// `A(f) = diag(f, f^{-1})`.
    pub fn a(f: i64, d: u32) -> Result<Self> {
        let inv = inverse_mod(f, d as u64)
            .ok_or(Error::NotInvertible { value: f.rem_euclid(d as i64) as u64, modulus: d as u64 })?;
        Ok(Self::raw(f, 0, 0, inv as i64, d))
    }

    /// `B(b) = ((1,b),(0,1))`.
    pub fn b(b: i64, d: u32) -> Self {
        Self::raw(1, b, 0, 1, d)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = (self, o);
        let m = |x: u32, y: u32| x as i64 * y as i64;
        Self::raw(
            m(a.s11, b.s11) + m(a.s12, b.s21),
            m(a.s11, b.s12) + m(a.s12, b.s22),
            m(a.s21, b.s11) + m(a.s22, b.s21),
            m(a.s21, b.s12) + m(a.s22, b.s22),
            self.d,
        )
    }

    pub fn inverse(&self) -> Self {
        Self::raw(self.s22 as i64, -(self.s12 as i64), -(self.s21 as i64), self.s11 as i64, self.d)
    }

    pub fn apply(&self, x: PhasePoint) -> PhasePoint {
        let (p, q) = (x.p as i64, x.q as i64);
        PhasePoint::new(
            self.s11 as i64 * p + self.s12 as i64 * q,
            self.s21 as i64 * p + self.s22 as i64 * q,
            self.d,
        )
    }

    pub fn rows(&self) -> [[u32; 2]; 2] {
        [[self.s11, self.s12], [self.s21, self.s22]]
    }

    /// All `d(d²−1)` elements, in lexicographic order of entries.
    pub fn all(d: u32) -> Vec<Self> {
        let mut out = Vec::new();
        for s11 in 0..d as i64 {
            for s12 in 0..d as i64 {
                for s21 in 0..d as i64 {
                    for s22 in 0..d as i64 {
                        if let Ok(s) = Self::new(s11, s12, s21, s22, d) {
                            out.push(s);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Factorization of `S` into the generators `A`, `B` and `J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpFactor {
    /// `S = B(e)·A(f)` when `s21 = 0`.
    Upper { e: u32, f: u32 },
    /// `S = B(g)·J·B(e)·A(f)` when `s21 ≠ 0`.
    Lower { g: u32, e: u32, f: u32 },
}

impl SpFactor {
    pub fn recompose(&self, d: u32) -> SymplecticMatrix {
        match *self {
            SpFactor::Upper { e, f } => {
                SymplecticMatrix::b(e as i64, d).mul(&SymplecticMatrix::a(f as i64, d).expect("unit"))
            }
            SpFactor::Lower { g, e, f } => SymplecticMatrix::b(g as i64, d)
                .mul(&SymplecticMatrix::j(d))
                .mul(&SymplecticMatrix::b(e as i64, d))
                .mul(&SymplecticMatrix::a(f as i64, d).expect("unit")),
        }
    }
}

pub fn sp_factor(s: &SymplecticMatrix) -> SpFactor {
    let d = s.d as i64;
    let r = |x: i64| x.rem_euclid(d) as u32;
    let (s11, s12, s21, s22) = (s.s11 as i64, s.s12 as i64, s.s21 as i64, s.s22 as i64);
    if s21 == 0 {
        SpFactor::Upper { e: r(s11 * s12), f: r(s11) }
    } else {
        let inv = inverse_mod(s21, s.d as u64).expect("nonzero mod prime") as i64;
        SpFactor::Lower { g: r(s11 * inv), e: r(s21 * s22), f: r(-s21) }
    }
}

/// `(S, v)`, acting as `x ↦ Sx + v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineSymplectic {
    pub s: SymplecticMatrix,
    pub v: PhasePoint,
}

impl AffineSymplectic {
    pub fn new(s: SymplecticMatrix, v: PhasePoint) -> Self {
        AffineSymplectic { s, v }
    }

    pub fn identity(d: u32) -> Self {
        AffineSymplectic { s: SymplecticMatrix::identity(d), v: PhasePoint::origin() }
    }

    /// `(A,v)∘(B,w) = (AB, Aw+v)`.
    pub fn compose(&self, o: &Self) -> Self {
        let d = self.s.d;
        AffineSymplectic { s: self.s.mul(&o.s), v: self.s.apply(o.v).add(self.v, d) }
    }

    pub fn inverse(&self) -> Self {
        let d = self.s.d;
        let si = self.s.inverse();
        AffineSymplectic { s: si, v: si.apply(self.v).neg(d) }
    }

    pub fn apply(&self, x: PhasePoint) -> PhasePoint {
        self.s.apply(x).add(self.v, self.s.d)
    }

    /// All `d³(d²−1)` elements.
    pub fn all(d: u32) -> Vec<Self> {
        let mut out = Vec::new();
        for s in SymplecticMatrix::all(d) {
            for v in PhasePoint::all(d) {
                out.push(AffineSymplectic { s, v });
            }
        }
        out
    }
}

#[cfg(test)]
mod tests;
