//! Levels of the Clifford hierarchy: conjugate pairs, reconstruction,
//! brute-force membership, semi-Clifford decomposition, normal forms and
//! enumeration.

mod decompose;
mod enumerate;
mod membership;

use dashu_int::{IBig, UBig};

use crate::arith::{Cyclotomic, Qudit, ScaledMatrix};
use crate::error::{Error, Result};
use crate::pauli::{clock, shift};

pub use decompose::{mdc_normal_form, semi_clifford_decompose, MDCForm, NormalForm, SemiCliffordDecomposition};
pub use enumerate::{
    count_level, enumerate_level, enumerate_level_with, scan_products, Enumeration, FormKind, LevelCertificate,
    LevelTable, DEFAULT_BUDGET,
};
pub use membership::{inverse_in_level, level_membership, MembershipOracle};

/// `(G Z G†, G X G†)`.
#[derive(Clone, Debug)]
pub struct ConjugatePair {
    pub u: ScaledMatrix,
    pub v: ScaledMatrix,
}

impl ConjugatePair {
    /// Checks `U^d = V^d = I` and `UV = ωVU` exactly.
    pub fn validate(&self) -> Result<()> {
        let qd = self.u.qudit();
        let d = qd.d();
        let id = ScaledMatrix::identity(qd, d as usize);
        if !self.u.pow(d as u64).same_value(&id) {
            return Err(Error::NotConjugatePair("U^d is not the identity".into()));
        }
        if !self.v.pow(d as u64).same_value(&id) {
            return Err(Error::NotConjugatePair("V^d is not the identity".into()));
        }
        let uv = self.u.try_mul(&self.v)?;
        let vu = self.v.try_mul(&self.u)?.scale_entries(&qd.omega(1));
        if !uv.same_value(&vu) {
            return Err(Error::NotConjugatePair("UV differs from ωVU".into()));
        }
        Ok(())
    }

    /// `U^p V^q`.
    pub fn word(&self, p: u32, q: u32) -> ScaledMatrix {
        &self.u.pow(p as u64) * &self.v.pow(q as u64)
    }
}

pub fn conjugate_pair_of(g: &ScaledMatrix) -> Result<ConjugatePair> {
    let qd = g.qudit();
    Ok(ConjugatePair {
        u: ScaledMatrix::conjugate_by(g, &clock(qd))?,
        v: ScaledMatrix::conjugate_by(g, &shift(qd))?,
    })
}

/// The unitary `G`, unique up to phase, with the given conjugate pair.
///
/// `g_0` is the first nonzero column of `Σ_j U^j`, which spans the
/// eigenvalue-1 space of `U`; the columns of `G` are `V^z g_0`. The squared
/// norm of `g_0` is folded into the scale when it is `d^e` times a rational
/// square, and kept as a radical otherwise.
pub fn reconstruct(pair: &ConjugatePair) -> Result<ScaledMatrix> {
    pair.validate()?;
    let u = &pair.u;
    let qd = u.qudit();
    let d = qd.d() as usize;
    if u.half_log_scale() != 0 || u.radical().is_some() || pair.v.half_log_scale() != 0 || pair.v.radical().is_some() {
        return Err(Error::NotConjugatePair("pair entries must carry no scale".into()));
    }
    let mut power = ScaledMatrix::identity(qd, d);
    let mut sum = power.clone();
    for _ in 1..d {
        power = &power * u;
        sum = sum.add_bare(&power)?;
    }
    let c = (0..d)
        .find(|&c| (0..d).any(|i| !sum.get(i, c).is_zero()))
        .ok_or_else(|| Error::NotConjugatePair("U has no eigenvalue 1".into()))?;
    let mut col: Vec<Cyclotomic> = (0..d).map(|i| sum.get(i, c).clone()).collect();
    // ‖g_0‖² = d·(Σ_j U^j)_{cc}
    let norm = sum.get(c, c).scale_int(d as i64);
    let mut entries = vec![qd.zero(); d * d];
    for z in 0..d {
        for i in 0..d {
            entries[i * d + z] = col[i].clone();
        }
        col = pair.v.apply_entries(&col);
    }
    let bare = ScaledMatrix::new(qd, d, 0, entries)?;
    normalize(bare, &norm)
}

/// Divides `m` by `√n` for a positive real field element `n`.
fn normalize(m: ScaledMatrix, n: &Cyclotomic) -> Result<ScaledMatrix> {
    let qd = m.qudit().clone();
    if let Some((num, den)) = n.as_rational() {
        if let Some((factor, t)) = rational_inverse_sqrt(&qd, &num, &den) {
            let scaled = m.scale_entries(&factor);
            return ScaledMatrix::new(&qd, m.dim(), t, scaled.entries().to_vec());
        }
        let inv = Cyclotomic::from_rational(qd.field(), den, num)?;
        return m.with_radical(inv);
    }
    let inv = n.inverse()?;
    m.with_radical(inv)
}

/// Writes `1/√(num/den)` as `factor · d^{-t/2}` with rational `factor`, when
/// `num/den` is a power of `d` times a rational square.
fn rational_inverse_sqrt(qd: &Qudit, num: &IBig, den: &IBig) -> Option<(Cyclotomic, u32)> {
    if *num <= IBig::ZERO || *den <= IBig::ZERO {
        return None;
    }
    let d = qd.d();
    let dd = UBig::from(d);
    let mut a = UBig::try_from(num.clone()).ok()?;
    let mut b = UBig::try_from(den.clone()).ok()?;
    let mut e: i64 = 0;
    while (&a % &dd).is_zero() {
        a /= &dd;
        e += 1;
    }
    while (&b % &dd).is_zero() {
        b /= &dd;
        e -= 1;
    }
    // 1/√(d^e · a/b) = d^{-e/2} · b/√(ab)
    let ab = &a * &b;
    let s = ab.nth_root(2);
    if &s * &s != ab {
        return None;
    }
    let (mut fnum, mut fden) = (IBig::from(b), IBig::from(s));
    let t = if e >= 0 {
        fden *= IBig::from(d).pow((e / 2) as usize);
        (e % 2) as u32
    } else {
        // d^{|e|/2} = d^{|e|} · d^{-|e|/2}
        fnum *= IBig::from(d).pow(e.unsigned_abs() as usize);
        e.unsigned_abs() as u32
    };
    Some((Cyclotomic::from_rational(qd.field(), fnum, fden).ok()?, t))
}
