//! Square matrices over `Q(ζ_N)` with an explicit real scale.
//!
//! The value of a [`ScaledMatrix`] is `d^{-t/2} · √r · E`, where `E` holds
//! the field entries, `t` is the half-log scale and `r` an optional positive
//! real field element (the radical). Keeping `√d` and `√r` out of the
//! entries lets gates such as the Fourier matrix stay sparse and readable.

use std::fmt;

use sha2::{Digest, Sha256};

use super::context::Qudit;
use super::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct ScaledMatrix {
    q: Qudit,
    dim: usize,
    half_log_scale: u32,
    radical: Option<Cyclotomic>,
    entries: Vec<Cyclotomic>,
}

/// SHA-256 of the phase-normalized entries; identical for two matrices
/// exactly when they agree up to a global phase.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PhaseKey(pub [u8; 32]);

impl PhaseKey {
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl std::str::FromStr for PhaseKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad phase key {s:?}"));
        if s.len() != 64 || !s.is_ascii() {
            return Err(bad());
        }
        let mut out = [0u8; 32];
        for (i, b) in out.iter_mut().enumerate() {
            *b = u8::from_str_radix(&s[2 * i..2 * i + 2], 16).map_err(|_| bad())?;
        }
        Ok(PhaseKey(out))
    }
}

impl serde::Serialize for PhaseKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> serde::Deserialize<'de> for PhaseKey {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for PhaseKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PhaseKey({})", &self.to_hex()[..16])
    }
}

impl fmt::Display for PhaseKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl ScaledMatrix {
    pub fn new(q: &Qudit, dim: usize, half_log_scale: u32, entries: Vec<Cyclotomic>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch { left: dim * dim, right: entries.len() });
        }
        if let Some(e) = entries.iter().find(|e| e.order() != q.order()) {
            return Err(Error::OrderMismatch { left: q.order(), right: e.order() });
        }
        let mut m = ScaledMatrix { q: q.clone(), dim, half_log_scale, radical: None, entries };
        m.canonicalize();
        Ok(m)
    }

    /// Attaches a radical `r`, multiplying the value by `√r`.
    pub fn with_radical(mut self, r: Cyclotomic) -> Result<Self> {
        if r.order() != self.q.order() {
            return Err(Error::OrderMismatch { left: self.q.order(), right: r.order() });
        }
        if r.is_zero() || r != r.conj() || r.to_complex().0 <= 0.0 {
            return Err(Error::NotInField("radical must be a positive real".into()));
        }
        self.radical = match self.radical.take() {
            None => Some(r),
            Some(old) => Some(&old * &r),
        };
        self.canonicalize();
        Ok(self)
    }

    pub fn zeros(q: &Qudit, dim: usize) -> Self {
        ScaledMatrix {
            q: q.clone(),
            dim,
            half_log_scale: 0,
            radical: None,
            entries: vec![q.zero(); dim * dim],
        }
    }

    pub fn identity(q: &Qudit, dim: usize) -> Self {
        let mut m = Self::zeros(q, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = q.one();
        }
        m
    }

    pub fn diagonal(q: &Qudit, values: Vec<Cyclotomic>) -> Self {
        let dim = values.len();
        let mut m = Self::zeros(q, dim);
        for (i, v) in values.into_iter().enumerate() {
            m.entries[i * dim + i] = v;
        }
        m
    }

    /// `|π(j)⟩⟨j|` summed over `j`.
    pub fn permutation(q: &Qudit, images: &[usize]) -> Self {
        let dim = images.len();
        let mut m = Self::zeros(q, dim);
        for (j, &i) in images.iter().enumerate() {
            m.entries[i * dim + j] = q.one();
        }
        m
    }

    pub fn qudit(&self) -> &Qudit {
        &self.q
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn half_log_scale(&self) -> u32 {
        self.half_log_scale
    }

    pub fn radical(&self) -> Option<&Cyclotomic> {
        self.radical.as_ref()
    }

    pub fn entries(&self) -> &[Cyclotomic] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclotomic) {
        self.entries[i * self.dim + j] = v;
    }

    /// Folds `d^{-2}` pairs of the half-log scale into the entries.
    fn canonicalize(&mut self) {
        if self.half_log_scale >= 2 {
            let den = dashu_int::IBig::from(self.q.d()).pow((self.half_log_scale / 2) as usize);
            for e in &mut self.entries {
                *e = e.scale(&dashu_int::IBig::ONE, &den);
            }
            self.half_log_scale %= 2;
        }
    }

    /// `|s|²` for the scalar prefactor `s = d^{-t/2} √r`, as a field element.
    pub fn scale_squared(&self) -> Cyclotomic {
        let base = if self.half_log_scale == 0 {
            self.q.one()
        } else {
            Cyclotomic::from_rational(
                self.q.field(),
                dashu_int::IBig::ONE,
                dashu_int::IBig::from(self.q.d()).pow(self.half_log_scale as usize),
            )
            .expect("nonzero denominator")
        };
        match &self.radical {
            None => base,
            Some(r) => &base * r,
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        if !self.q.same_as(&other.q) {
            return Err(Error::OrderMismatch { left: self.q.order(), right: other.q.order() });
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.dim;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc: Option<Cyclotomic> = None;
                for k in 0..n {
                    let a = &self.entries[i * n + k];
                    let b = &other.entries[k * n + j];
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    let p = a * b;
                    acc = Some(match acc {
                        None => p,
                        Some(s) => &s + &p,
                    });
                }
                out.push(acc.unwrap_or_else(|| self.q.zero()));
            }
        }
        let radical = match (&self.radical, &other.radical) {
            (None, None) => None,
            (Some(r), None) | (None, Some(r)) => Some(r.clone()),
            (Some(a), Some(b)) => Some(a * b),
        };
        let mut m = ScaledMatrix {
            q: self.q.clone(),
            dim: n,
            half_log_scale: self.half_log_scale + other.half_log_scale,
            radical,
            entries: out,
        };
        m.canonicalize();
        Ok(m)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.entries[j * n + i].conj());
            }
        }
        ScaledMatrix { entries, ..self.clone_shell() }
    }

    fn clone_shell(&self) -> Self {
        ScaledMatrix {
            q: self.q.clone(),
            dim: self.dim,
            half_log_scale: self.half_log_scale,
            radical: self.radical.clone(),
            entries: Vec::new(),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = Self::identity(&self.q, self.dim);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power of a unitary; negative exponents use the adjoint.
    pub fn pow_signed(&self, exp: i64) -> Self {
        if exp >= 0 {
            self.pow(exp as u64)
        } else {
            self.adjoint().pow(exp.unsigned_abs())
        }
    }

    /// Multiplies every entry by a field element.
    pub fn scale_entries(&self, c: &Cyclotomic) -> Self {
        let entries = self.entries.iter().map(|e| e * c).collect();
        ScaledMatrix { entries, ..self.clone_shell() }
    }

    /// Multiplies by `ζ_N^e`.
    pub fn mul_root(&self, e: i64) -> Self {
        let entries = self.entries.iter().map(|x| x.mul_root(e)).collect();
        ScaledMatrix { entries, ..self.clone_shell() }
    }

    /// `G A G†`, with the scale of `G` folded into the entries.
    pub fn conjugate_by(g: &Self, a: &Self) -> Result<Self> {
        g.check(a)?;
        let bare_g = g.without_scale();
        let mut m = bare_g.try_mul(a)?.try_mul(&bare_g.adjoint())?;
        let s2 = g.scale_squared();
        if !s2.is_one() {
            m.entries = m.entries.iter().map(|e| e * &s2).collect();
        }
        Ok(m)
    }

    fn without_scale(&self) -> Self {
        ScaledMatrix {
            q: self.q.clone(),
            dim: self.dim,
            half_log_scale: 0,
            radical: None,
            entries: self.entries.clone(),
        }
    }

    /// Entries with every scale folded in, if that is possible inside the field.
    pub fn folded_entries(&self) -> Result<Vec<Cyclotomic>> {
        if self.radical.is_some() {
            return Err(Error::NotInField("matrix carries a radical scale".into()));
        }
        if self.half_log_scale == 0 {
            return Ok(self.entries.clone());
        }
        // d^{-1/2} = √d / d
        let f = self.q.sqrt_d().scale(&dashu_int::IBig::ONE, &dashu_int::IBig::from(self.q.d()));
        Ok(self.entries.iter().map(|e| e * &f).collect())
    }

    pub fn is_unitary(&self) -> bool {
        let Ok(p) = self.without_scale().try_mul(&self.without_scale().adjoint()) else {
            return false;
        };
        let s2 = self.scale_squared();
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let v = &p.entries[i * n + j] * &s2;
                if i == j { v.is_one() } else { v.is_zero() }
            })
        })
    }

    pub fn is_diagonal(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| i == j || self.entries[i * n + j].is_zero()))
    }

    /// `(column → row)` images when every column has exactly one nonzero entry
    /// and those rows are distinct.
    pub fn monomial_pattern(&self) -> Option<Vec<usize>> {
        let n = self.dim;
        let mut images = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for j in 0..n {
            let mut row = None;
            for i in 0..n {
                if !self.entries[i * n + j].is_zero() {
                    if row.is_some() {
                        return None;
                    }
                    row = Some(i);
                }
            }
            let i = row?;
            if seen[i] {
                return None;
            }
            seen[i] = true;
            images.push(i);
        }
        Some(images)
    }

    /// Index of the first nonzero entry in row-major order.
    pub fn pivot(&self) -> Option<usize> {
        self.entries.iter().position(|e| !e.is_zero())
    }

    /// `E · conj(E_pivot) · |s|²`: a representative that is invariant under
    /// global phase and independent of how the scale is stored.
    pub fn phase_normal(&self) -> Vec<Cyclotomic> {
        let Some(p) = self.pivot() else {
            return self.entries.clone();
        };
        let c = &self.entries[p].conj() * &self.scale_squared();
        self.entries.iter().map(|e| if e.is_zero() { e.clone() } else { e * &c }).collect()
    }

    pub fn phase_key(&self) -> PhaseKey {
        let mut bytes = Vec::new();
        bytes.extend_from_slice(&(self.dim as u32).to_le_bytes());
        bytes.extend_from_slice(&self.q.order().to_le_bytes());
        for e in self.phase_normal() {
            e.write_canonical(&mut bytes);
        }
        PhaseKey(Sha256::digest(&bytes).into())
    }

    /// True when the two matrices differ by a unit-modulus scalar.
    pub fn same_phase_class(&self, other: &Self) -> bool {
        if self.check(other).is_err() {
            return false;
        }
        let (Some(p), Some(p2)) = (self.pivot(), other.pivot()) else {
            return self.pivot().is_none() && other.pivot().is_none();
        };
        p == p2 && self.phase_normal() == other.phase_normal()
    }

    /// The scalar `λ` with `self = λ · other` for unitary inputs, if any.
    ///
    /// Fails when either input is not unitary, or when the two radicals differ
    /// so that `λ` need not lie in the field.
    pub fn equal_up_to_phase(&self, other: &Self) -> Result<Option<Cyclotomic>> {
        self.check(other)?;
        if !self.is_unitary() || !other.is_unitary() {
            return Err(Error::NotUnitary);
        }
        if !self.same_phase_class(other) {
            return Ok(None);
        }
        // λ = a_p / b_p with both scales folded; 1/b_p = conj(b_p)/|b_p|²
        let p = self.pivot().expect("unitary is nonzero");
        let mut lambda = &self.entries[p] * &other.entries[p].conj();
        let nb = &other.entries[p] * &other.entries[p].conj();
        lambda = lambda.try_mul(&nb.inverse()?)?;
        let t = self.half_log_scale as i64 - other.half_log_scale as i64;
        let d = dashu_int::IBig::from(self.q.d());
        lambda = match t {
            0 => lambda,
            // d^{-1/2} = √d / d
            1 => (&lambda * self.q.sqrt_d()).scale(&dashu_int::IBig::ONE, &d),
            _ => &lambda * self.q.sqrt_d(),
        };
        match (&self.radical, &other.radical) {
            (None, None) => {}
            (Some(a), Some(b)) if a == b => {}
            _ => return Err(Error::NotInField("phase between different radical scales".into())),
        }
        Ok(Some(lambda))
    }

    /// The phase `λ` with `self = λ · other`, when it is a root of unity in the
    /// field and both matrices carry the same scale.
    pub fn phase_relative_to(&self, other: &Self) -> Option<Cyclotomic> {
        if self.check(other).is_err()
            || self.half_log_scale != other.half_log_scale
            || self.radical != other.radical
        {
            return None;
        }
        let p = self.pivot()?;
        let lambda = self.entries[p].try_mul(&other.entries[p].inverse().ok()?).ok()?;
        lambda.root_of_unity_exponent()?;
        let n = self.dim;
        (0..n * n)
            .all(|i| self.entries[i] == &other.entries[i] * &lambda)
            .then_some(lambda)
    }

    /// Exact equality of values, independent of how the scale is stored.
    pub fn same_value(&self, other: &Self) -> bool {
        if self.check(other).is_err() {
            return false;
        }
        if self.radical == other.radical {
            if self.half_log_scale == other.half_log_scale {
                return self.entries == other.entries;
            }
            let (lo, hi) = if self.half_log_scale < other.half_log_scale {
                (self, other)
            } else {
                (other, self)
            };
            // lo has t = 0, hi has t = 1: lo·√d must equal hi's entries
            let s = lo.q.sqrt_d();
            return lo.entries.iter().zip(&hi.entries).all(|(a, b)| &(a * s) == b);
        }
        if !self.same_phase_class(other) {
            return false;
        }
        // Same up to phase: the phase at the pivot is real and positive iff 1.
        let p = self.pivot().expect("nonzero");
        let x = &self.entries[p] * &other.entries[p].conj();
        x == x.conj() && x.to_complex().0 > 0.0
    }

    /// Matrix-vector product on raw entries, ignoring the scale.
    pub fn apply_entries(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let n = self.dim;
        (0..n)
            .map(|i| {
                let mut acc = self.q.zero();
                for (j, x) in v.iter().enumerate() {
                    let a = &self.entries[i * n + j];
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Cyclotomic {
        let n = self.dim;
        let mut acc = self.q.zero();
        for i in 0..n {
            acc = &acc + &self.entries[i * n + i];
        }
        acc
    }

    pub fn add_bare(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.half_log_scale != other.half_log_scale || self.radical != other.radical {
            return Err(Error::Internal("adding matrices with different scales".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(ScaledMatrix { entries, ..self.clone_shell() })
    }
}

impl<'a> std::ops::Mul<&'a ScaledMatrix> for &'a ScaledMatrix {
    type Output = ScaledMatrix;
    fn mul(self, rhs: &ScaledMatrix) -> ScaledMatrix {
        self.try_mul(rhs).expect("incompatible matrices")
    }
}

impl PartialEq for ScaledMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.same_value(other)
    }
}

impl fmt::Debug for ScaledMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ScaledMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.half_log_scale > 0 {
            write!(f, "{}^(-{}/2) ", self.q.d(), self.half_log_scale)?;
        }
        if let Some(r) = &self.radical {
            write!(f, "sqrt({r}) ")?;
        }
        let n = self.dim;
        write!(f, "[")?;
        for i in 0..n {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..n).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fourier(q: &Qudit) -> ScaledMatrix {
        let d = q.d() as usize;
        let e = (0..d * d).map(|k| q.omega(((k / d) * (k % d)) as i64)).collect();
        ScaledMatrix::new(q, d, 1, e).unwrap()
    }

    #[test]
    fn fourier_is_unitary_and_scale_folds() {
        for d in [2u32, 3, 5] {
            let q = Qudit::new(d, 1).unwrap();
            let h = fourier(&q);
            assert!(h.is_unitary());
            let h2 = &h * &h;
            assert_eq!(h2.half_log_scale(), 0);
            // H² is the parity permutation z -> -z
            let images: Vec<usize> = (0..d as usize).map(|z| (d as usize - z) % d as usize).collect();
            assert!(h2.same_value(&ScaledMatrix::permutation(&q, &images)));
            assert!(h.pow(4).same_value(&ScaledMatrix::identity(&q, d as usize)));
        }
    }

    #[test]
    fn folded_scale_agrees_with_stored_scale() {
        let q = Qudit::new(3, 1).unwrap();
        let h = fourier(&q);
        let folded = ScaledMatrix::new(&q, 3, 0, h.folded_entries().unwrap()).unwrap();
        assert!(folded.same_value(&h));
        assert_eq!(folded.phase_key(), h.phase_key());
        assert!(folded.is_unitary());
    }

    #[test]
    fn phase_key_ignores_global_phase() {
        let q = Qudit::new(3, 2).unwrap();
        let h = fourier(&q);
        for e in 0..q.order() as i64 {
            let g = h.mul_root(e);
            assert_eq!(g.phase_key(), h.phase_key());
            assert!(g.same_phase_class(&h));
            assert_eq!(g.same_value(&h), e == 0);
        }
        assert_ne!(h.phase_key(), ScaledMatrix::identity(&q, 3).phase_key());
    }

    #[test]
    fn radical_scale_round_trips() {
        let q = Qudit::new(3, 1).unwrap();
        let two = Cyclotomic::from_integer(q.field(), 2);
        let half = two.inverse().unwrap();
        let id = ScaledMatrix::identity(&q, 3);
        let doubled = ScaledMatrix::new(&q, 3, 0, id.scale_entries(&two).entries().to_vec())
            .unwrap()
            .with_radical(half.scale_int(1))
            .unwrap();
        // value is 2·√(1/2)·I, not unitary; squaring removes the radical weight
        assert!(!doubled.is_unitary());
        let four = Cyclotomic::from_integer(q.field(), 4);
        let quarter = four.inverse().unwrap();
        let unit = ScaledMatrix::new(&q, 3, 0, id.scale_entries(&two).entries().to_vec())
            .unwrap()
            .with_radical(quarter)
            .unwrap();
        assert!(unit.is_unitary());
        assert!(unit.same_value(&id));
        assert_eq!(unit.phase_key(), id.phase_key());
    }

    #[test]
    fn conjugation_folds_scale() {
        let q = Qudit::new(3, 1).unwrap();
        let h = fourier(&q);
        let z = ScaledMatrix::diagonal(&q, (0..3).map(|j| q.omega(j)).collect());
        let c = ScaledMatrix::conjugate_by(&h, &z).unwrap();
        assert_eq!(c.half_log_scale(), 0);
        assert!(c.same_value(&(&(&h * &z) * &h.adjoint())));
    }
}
