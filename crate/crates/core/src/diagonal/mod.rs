//! Diagonal gates of the hierarchy, classified by rank-k polynomials.
//!
//! A diagonal gate at level `k = (m−1)(d−1) + a` has the form
//! `D[ω_m^{φ(z)}]` where `φ(z) = φ_1 z + … + φ_{d−1} z^{d−1}` has
//! coefficients mod `d^m` and `φ_j ≡ 0 (mod d)` for `j > a`.

use serde::{Deserialize, Serialize};

use crate::arith::residue::inverse_mod;
use crate::arith::{level_parts, Cyclotomic, Qudit, ScaledMatrix};
use crate::error::{Error, Result};
use crate::pauli::shift;

/// Coefficients `φ_1..φ_{d−1}` modulo `d^m`; the constant term is always 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RankKPolynomial {
    pub d: u32,
    pub m: u32,
    pub coeffs: Vec<u64>,
}

impl RankKPolynomial {
    pub fn new(d: u32, m: u32, coeffs: Vec<u64>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidPolynomial("precision must be at least 1".into()));
        }
        if coeffs.len() != (d - 1) as usize {
            return Err(Error::InvalidPolynomial(format!(
                "expected {} coefficients, got {}",
                d - 1,
                coeffs.len()
            )));
        }
        let modulus = (d as u64).pow(m);
        if let Some(c) = coeffs.iter().find(|&&c| c >= modulus) {
            return Err(Error::InvalidPolynomial(format!("coefficient {c} not reduced mod {modulus}")));
        }
        Ok(RankKPolynomial { d, m, coeffs })
    }

    /// The zero polynomial, i.e. the identity gate.
    pub fn zero(d: u32) -> Self {
        RankKPolynomial { d, m: 1, coeffs: vec![0; (d - 1) as usize] }
    }

    pub fn modulus(&self) -> u64 {
        (self.d as u64).pow(self.m)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `φ(z) mod d^m`.
    pub fn eval(&self, z: u64) -> u64 {
        let n = self.modulus() as u128;
        let mut acc = 0u128;
        let mut pw = 1u128;
        for &c in &self.coeffs {
            pw = pw * z as u128 % n;
            acc = (acc + c as u128 * pw) % n;
        }
        acc as u64
    }

    /// The same gate written at precision `m' ≥ m`.
    pub fn lift(&self, m: u32) -> Self {
        assert!(m >= self.m, "cannot lower precision by lifting");
        let f = (self.d as u64).pow(m - self.m);
        RankKPolynomial { d: self.d, m, coeffs: self.coeffs.iter().map(|c| c * f).collect() }
    }

    /// Removes common factors of `d` so the precision is minimal.
    pub fn reduced(&self) -> Self {
        let mut p = self.clone();
        let d = self.d as u64;
        while p.m > 1 && p.coeffs.iter().all(|c| c % d == 0) {
            p.coeffs.iter_mut().for_each(|c| *c /= d);
            p.m -= 1;
        }
        if p.is_zero() {
            return RankKPolynomial::zero(self.d);
        }
        p
    }

    /// Coefficientwise sum, i.e. the product of the two gates.
    pub fn add(&self, other: &Self) -> Self {
        let m = self.m.max(other.m);
        let (a, b) = (self.lift(m), other.lift(m));
        let n = a.modulus();
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| (x + y) % n).collect();
        RankKPolynomial { d: self.d, m, coeffs }.reduced()
    }

    /// Coefficientwise negation, i.e. the adjoint gate.
    pub fn neg(&self) -> Self {
        let n = self.modulus();
        let coeffs = self.coeffs.iter().map(|c| (n - c) % n).collect();
        RankKPolynomial { d: self.d, m: self.m, coeffs }
    }

    pub fn level(&self) -> u32 {
        diagonal_level(self)
    }

    pub fn in_level(&self, k: u32) -> bool {
        self.level() <= k
    }
}

/// `k = (m−1)(d−1) + a` with `a ∈ {1..d−1}`.
pub fn level_decompose(d: u32, k: u32) -> (u32, u32) {
    level_parts(d, k)
}

/// The smallest `k` with `φ ∈ R_k`.
pub fn diagonal_level(phi: &RankKPolynomial) -> u32 {
    let p = phi.reduced();
    let d = p.d as u64;
    let top = p.coeffs.iter().rposition(|c| c % d != 0).map(|j| j as u32 + 1).unwrap_or(1);
    (p.m - 1) * (p.d - 1) + top
}

/// A diagonal gate `D[ω_m^φ]` with `D|0⟩ = |0⟩`.
#[derive(Clone, Debug)]
pub struct DiagonalGate {
    pub poly: RankKPolynomial,
    pub matrix: ScaledMatrix,
}

pub fn build_diagonal(qd: &Qudit, phi: &RankKPolynomial) -> Result<DiagonalGate> {
    if phi.d != qd.d() {
        return Err(Error::InvalidPolynomial(format!("dimension {} vs context {}", phi.d, qd.d())));
    }
    let poly = phi.reduced();
    let values = (0..qd.d() as u64)
        .map(|z| Ok(qd.root(qd.omega_m_exp(poly.m, poly.eval(z) as i64)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DiagonalGate { poly, matrix: ScaledMatrix::diagonal(qd, values) })
}

/// Every polynomial of `R_k`, in lexicographic coefficient order.
pub fn enumerate_rk(d: u32, k: u32) -> Vec<RankKPolynomial> {
    let (m, a) = level_parts(d, k);
    let n = (d as u64).pow(m);
    let ranges: Vec<(u64, u64)> =
        (1..d).map(|j| if j <= a { (1, n) } else { (d as u64, n / d as u64) }).collect();
    let mut out = Vec::new();
    let mut idx = vec![0u64; ranges.len()];
    loop {
        let coeffs = idx.iter().zip(&ranges).map(|(i, (step, _))| i * step).collect();
        out.push(RankKPolynomial { d, m, coeffs });
        let mut pos = ranges.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < ranges[pos].1 {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Number of leading base-`d` digits of `φ_1, φ_2` that parametrize `D_2`:
/// one digit of each for odd `d`, two binary digits of `φ_1` for qubits.
fn d2_modulus(d: u32, m: u32) -> u64 {
    if d == 2 {
        2u64.pow(m.saturating_sub(2))
    } else {
        (d as u64).pow(m - 1)
    }
}

/// Canonical representatives of `D_k / D_2`: the `D_2` digits are zero.
pub fn coset_reps(d: u32, k: u32) -> Vec<RankKPolynomial> {
    assert!(k >= 2, "coset representatives start at level 2");
    enumerate_rk(d, k)
        .into_iter()
        .filter(|p| {
            let r = d2_modulus(d, p.m);
            p.coeffs.iter().take(2).all(|&c| c < r)
        })
        .collect()
}

/// Splits `φ ∈ R_k` as `rep + δ` with `rep` a coset representative and
/// `δ ∈ R_2`; `k ≥ 2` fixes the precision of the split.
pub fn coset_split(phi: &RankKPolynomial, k: u32) -> Result<(RankKPolynomial, RankKPolynomial)> {
    let d = phi.d;
    let (m, _) = level_parts(d, k.max(2));
    if !phi.in_level(k.max(2)) {
        return Err(Error::NotInLevel(k));
    }
    let p = phi.reduced().lift(m.max(phi.reduced().m));
    let r = d2_modulus(d, p.m);
    let mut rep = p.clone();
    let mut delta = RankKPolynomial { d, m: p.m, coeffs: vec![0; (d - 1) as usize] };
    for j in 0..(d as usize - 1).min(2) {
        rep.coeffs[j] = p.coeffs[j] % r;
        delta.coeffs[j] = p.coeffs[j] - rep.coeffs[j];
    }
    Ok((rep, delta.reduced()))
}

/// `D` with `D′ = D X^c D† X^{−c}` and `D|0⟩ = |0⟩`, via the telescoping
/// product `g(cz) = ∏_{j=0}^{z} f(cj)`.
pub fn solve_conjugation_diagonal(dprime: &ScaledMatrix, c: i64) -> Result<ScaledMatrix> {
    let qd = dprime.qudit();
    let d = qd.d() as i64;
    if !dprime.is_diagonal() {
        return Err(Error::NotDiagonal);
    }
    if c.rem_euclid(d) == 0 {
        return Err(Error::ZeroShift);
    }
    let f = |z: i64| -> Cyclotomic {
        let i = z.rem_euclid(d) as usize;
        dprime.get(i, i).clone()
    };
    let mut det = qd.one();
    for z in 0..d {
        det = &det * &f(z);
    }
    if dprime.half_log_scale() != 0 || dprime.radical().is_some() || !det.is_one() {
        return Err(Error::DeterminantNotOne);
    }
    let mut g = vec![qd.zero(); d as usize];
    let mut acc = qd.one();
    for z in 0..d {
        acc = &acc * &f(c * z);
        g[(c * z).rem_euclid(d) as usize] = acc.clone();
    }
    let g0_inv = g[0].inverse()?;
    let values = g.iter().map(|x| x * &g0_inv).collect();
    Ok(ScaledMatrix::diagonal(qd, values))
}

/// Reads the rank polynomial of a phase-normalized diagonal matrix with
/// root-of-unity entries.
pub fn from_values(qd: &Qudit, values: &[Cyclotomic]) -> Result<RankKPolynomial> {
    let d = qd.d();
    if values.len() != d as usize {
        return Err(Error::DimensionMismatch { left: d as usize, right: values.len() });
    }
    if !values[0].is_one() {
        return Err(Error::InvalidPolynomial("diagonal gate must fix |0>".into()));
    }
    let n = qd.order() as u64;
    let exps = values
        .iter()
        .map(|v| {
            v.root_of_unity_exponent()
                .map(|e| e as u64)
                .ok_or_else(|| Error::InvalidPolynomial("entry is not a root of unity".into()))
        })
        .collect::<Result<Vec<u64>>>()?;
    let max_m = qd.max_root_precision();
    let m = (1..=max_m)
        .find(|&m| {
            let step = n / (d as u64).pow(m);
            exps.iter().all(|e| e % step == 0)
        })
        .ok_or_else(|| Error::InvalidPolynomial("phases are not d^m-th roots of unity".into()))?;
    let modulus = (d as u64).pow(m);
    let step = n / modulus;
    let targets: Vec<u64> = exps.iter().map(|e| e / step).collect();
    let coeffs = interpolate(d, modulus, &targets[1..])?;
    Ok(RankKPolynomial { d, m, coeffs }.reduced())
}

/// Solves `Σ_j φ_j z^j ≡ t_z (mod n)` for `z = 1..d−1`.
fn interpolate(d: u32, n: u64, targets: &[u64]) -> Result<Vec<u64>> {
    let k = (d - 1) as usize;
    let n128 = n as i128;
    let mut rows: Vec<Vec<i128>> = (1..d as i128)
        .map(|z| {
            let mut row: Vec<i128> = (1..=k as u32).map(|j| z.pow(j) % n128).collect();
            row.push(targets[(z - 1) as usize] as i128);
            row
        })
        .collect();
    for col in 0..k {
        let piv = (col..k)
            .find(|&r| rows[r][col] % d as i128 != 0)
            .ok_or_else(|| Error::Internal("singular Vandermonde system".into()))?;
        rows.swap(col, piv);
        let inv = inverse_mod(rows[col][col] as i64, n).expect("unit pivot") as i128;
        for x in rows[col].iter_mut() {
            *x = (*x * inv).rem_euclid(n128);
        }
        for r in 0..k {
            if r != col && rows[r][col] != 0 {
                let f = rows[r][col];
                for c in 0..=k {
                    rows[r][c] = (rows[r][c] - f * rows[col][c]).rem_euclid(n128);
                }
            }
        }
    }
    Ok(rows.iter().map(|r| r[k] as u64).collect())
}

/// `X^c` as a matrix, for building conjugation identities.
pub fn shift_power(qd: &Qudit, c: i64) -> ScaledMatrix {
    shift(qd).pow(c.rem_euclid(qd.d() as i64) as u64)
}

#[cfg(test)]
mod tests;
