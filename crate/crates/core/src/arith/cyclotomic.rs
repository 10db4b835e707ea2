//! Exact arithmetic in the cyclotomic field `Q(ζ_N)`.
//!
//! Elements are stored as a common positive denominator over integer
//! coordinates in the power basis `1, ζ, …, ζ^{φ(N)-1}`, reduced modulo the
//! `N`-th cyclotomic polynomial. The power basis is an integral basis of
//! `Z[ζ_N]`, so the representation is canonical and zero-testing is exact.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use dashu_int::ops::Gcd;
use dashu_int::IBig;

use crate::error::{Error, Result};

type Sparse = Vec<(usize, i64)>;

/// The field `Q(ζ_N)` together with the tables needed to reduce powers of ζ.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    degree: usize,
    /// Nonzero low-order coefficients of the monic polynomial `Φ_N`.
    low: Sparse,
    /// `ζ^e` in the power basis, for `e` in `0..N`.
    powers: Vec<Sparse>,
    roots: HashMap<Sparse, u32>,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Arc<Self> {
        assert!(order >= 1, "cyclotomic order must be positive");
        let phi = cyclotomic_polynomial(order as usize);
        let degree = phi.len() - 1;
        let low: Sparse = phi[..degree]
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(j, c)| (j, *c))
            .collect();

        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![0i64; degree.max(1)];
        cur[0] = 1;
        for _ in 0..order {
            powers.push(to_sparse(&cur));
            // multiply by x and reduce the overflow coefficient
            let top = if degree == 0 { 0 } else { cur[degree - 1] };
            for j in (1..degree).rev() {
                cur[j] = cur[j - 1];
            }
            if degree > 0 {
                cur[0] = 0;
            }
            if top != 0 {
                for &(j, m) in &low {
                    cur[j] -= top * m;
                }
            }
        }
        let roots = powers.iter().enumerate().map(|(e, p)| (p.clone(), e as u32)).collect();
        Arc::new(CyclotomicField { order, degree, low, powers, roots })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `φ(N)`, the dimension of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }
}

fn to_sparse(v: &[i64]) -> Sparse {
    v.iter().enumerate().filter(|(_, c)| **c != 0).map(|(j, c)| (j, *c)).collect()
}

/// Integer coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    // x^n - 1 divided by Φ_e for every proper divisor e of n
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for e in 1..n {
        if n % e == 0 {
            num = poly_div_exact(&num, &cyclotomic_polynomial(e));
        }
    }
    num
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dl = den.len() - 1;
    debug_assert_eq!(den[dl], 1);
    let ql = rem.len() - dl;
    let mut quot = vec![0i64; ql];
    for i in (0..ql).rev() {
        let c = rem[i + dl];
        quot[i] = c;
        if c != 0 {
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|c| *c == 0), "inexact polynomial division");
    quot
}

/// An exact element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    num: Vec<IBig>,
    den: IBig,
}

impl Cyclotomic {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Cyclotomic { field: field.clone(), num: vec![IBig::ZERO; field.degree], den: IBig::ONE }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_integer(field, 1)
    }

    pub fn from_integer(field: &Arc<CyclotomicField>, n: i64) -> Self {
        let mut z = Self::zero(field);
        z.num[0] = IBig::from(n);
        z
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, num: IBig, den: IBig) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        let mut z = Self::zero(field);
        z.num[0] = num;
        z.den = den;
        z.normalize();
        Ok(z)
    }

    /// `ζ_N^e`.
    pub fn root(field: &Arc<CyclotomicField>, e: i64) -> Self {
        let n = field.order as i64;
        let mut z = Self::zero(field);
        for &(j, c) in &field.powers[e.rem_euclid(n) as usize] {
            z.num[j] = IBig::from(c);
        }
        z
    }

    /// Builds an element from `(numerator, denominator)` pairs in the power basis.
    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: &[(IBig, IBig)]) -> Result<Self> {
        if coeffs.len() != field.degree {
            return Err(Error::Parse(format!(
                "expected {} coefficients for order {}, got {}",
                field.degree,
                field.order,
                coeffs.len()
            )));
        }
        let mut acc = Self::zero(field);
        for (j, (n, d)) in coeffs.iter().enumerate() {
            if d.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            let mut term = Self::zero(field);
            term.num[j] = n.clone();
            term.den = d.clone();
            term.normalize();
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Coefficients in the power basis as reduced `(numerator, denominator)` pairs.
    pub fn coeffs(&self) -> Vec<(IBig, IBig)> {
        self.num
            .iter()
            .map(|n| {
                if n.is_zero() {
                    return (IBig::ZERO, IBig::ONE);
                }
                let g = IBig::from(n.gcd(&self.den));
                (n / &g, &self.den / &g)
            })
            .collect()
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn numerators(&self) -> &[IBig] {
        &self.num
    }

    pub fn denominator(&self) -> &IBig {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }

    /// True when the element lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value `(num, den)` when [`Self::is_rational`] holds.
    pub fn as_rational(&self) -> Option<(IBig, IBig)> {
        self.is_rational().then(|| (self.num[0].clone(), self.den.clone()))
    }

    fn normalize(&mut self) {
        if self.den.is_one() {
            return;
        }
        if self.den < IBig::ZERO {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        if self.is_zero() {
            self.den = IBig::ONE;
            return;
        }
        let mut g = IBig::from(self.den.clone().unsigned_abs_owned());
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = IBig::from(g.gcd(c));
            }
        }
        if !g.is_one() {
            self.den = &self.den / &g;
            for c in &mut self.num {
                *c = &*c / &g;
            }
        }
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field.order == other.field.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch { left: self.field.order, right: other.field.order })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        if self.den == other.den {
            let num = self.num.iter().zip(&other.num).map(|(a, b)| a + b).collect();
            let mut out = Cyclotomic { field: self.field.clone(), num, den: self.den.clone() };
            out.normalize();
            out
        } else {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| a * &other.den + b * &self.den)
                .collect();
            let mut out =
                Cyclotomic { field: self.field.clone(), num, den: &self.den * &other.den };
            out.normalize();
            out
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let deg = self.field.degree;
        let mut acc = vec![IBig::ZERO; 2 * deg - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc[i + j] += a * b;
            }
        }
        self.reduce_product(acc, &self.den * &other.den)
    }

    fn reduce_product(&self, mut acc: Vec<IBig>, den: IBig) -> Self {
        let deg = self.field.degree;
        for i in (deg..acc.len()).rev() {
            let c = std::mem::take(&mut acc[i]);
            if c.is_zero() {
                continue;
            }
            for &(j, m) in &self.field.low {
                let slot = &mut acc[i - deg + j];
                match m {
                    1 => *slot -= &c,
                    -1 => *slot += &c,
                    _ => *slot -= &c * IBig::from(m),
                }
            }
        }
        acc.truncate(deg);
        let mut out = Cyclotomic { field: self.field.clone(), num: acc, den };
        out.normalize();
        out
    }

    /// Applies the substitution `ζ ↦ ζ^k` coordinate-wise.
    fn substitute(&self, k: i64) -> Self {
        let n = self.field.order as i64;
        let mut num = vec![IBig::ZERO; self.field.degree];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(t, m) in &self.field.powers[(j as i64 * k).rem_euclid(n) as usize] {
                match m {
                    1 => num[t] += c,
                    -1 => num[t] -= c,
                    _ => num[t] += c * IBig::from(m),
                }
            }
        }
        Cyclotomic { field: self.field.clone(), num, den: self.den.clone() }
    }

    /// Multiplies by `ζ^e`; cheaper than a general product.
    pub fn mul_root(&self, e: i64) -> Self {
        let n = self.field.order as i64;
        let e = e.rem_euclid(n);
        if e == 0 {
            return self.clone();
        }
        let mut num = vec![IBig::ZERO; self.field.degree];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(t, m) in &self.field.powers[((j as i64) + e).rem_euclid(n) as usize] {
                match m {
                    1 => num[t] += c,
                    -1 => num[t] -= c,
                    _ => num[t] += c * IBig::from(m),
                }
            }
        }
        Cyclotomic { field: self.field.clone(), num, den: self.den.clone() }
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.substitute(-1)
    }

    /// The Galois automorphism `ζ ↦ ζ^k` for `gcd(k, N) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        self.substitute(k)
    }

    /// Multiplies by the rational `num/den`.
    pub fn scale(&self, num: &IBig, den: &IBig) -> Self {
        let mut out = Cyclotomic {
            field: self.field.clone(),
            num: self.num.iter().map(|c| c * num).collect(),
            den: &self.den * den,
        };
        out.normalize();
        out
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&IBig::from(k), &IBig::ONE)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
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

    /// `e` such that the element equals `ζ_N^e`, if it is a root of unity.
    pub fn root_of_unity_exponent(&self) -> Option<u32> {
        if !self.den.is_one() {
            return None;
        }
        let mut key = Vec::new();
        for (j, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                key.push((j, i64::try_from(c).ok()?));
            }
        }
        self.field.roots.get(&key).copied()
    }

    /// Multiplicative inverse via the product of the nontrivial Galois conjugates.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Internal("inverse of zero".into()));
        }
        if let Some(e) = self.root_of_unity_exponent() {
            return Ok(Self::root(&self.field, -(e as i64)));
        }
        let n = self.field.order as i64;
        let mut others = Self::one(&self.field);
        for k in 2..n {
            if super::residue::gcd(k as u64, n as u64) == 1 {
                others = &others * &self.galois(k);
            }
        }
        let norm = self * &others;
        let (nn, nd) = norm
            .as_rational()
            .ok_or_else(|| Error::Internal("field norm is not rational".into()))?;
        Ok(others.scale(&nd, &nn))
    }

    /// Numerical value as `(re, im)`, for display and sign tests only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.field.order as f64;
        let den = to_f64(&self.den);
        let (mut re, mut im) = (0.0, 0.0);
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = to_f64(c) / den;
            let angle = std::f64::consts::TAU * j as f64 / n;
            re += v * angle.cos();
            im += v * angle.sin();
        }
        (re, im)
    }

    /// Canonical byte encoding, stable across runs.
    pub fn write_canonical(&self, out: &mut Vec<u8>) {
        write_int(&self.den, out);
        for c in &self.num {
            write_int(c, out);
        }
    }
}

fn to_f64(x: &IBig) -> f64 {
    x.to_f64().value()
}

fn write_int(x: &IBig, out: &mut Vec<u8>) {
    match i64::try_from(x) {
        Ok(v) => {
            out.push(0);
            out.extend_from_slice(&v.to_le_bytes());
        }
        Err(_) => {
            let s = x.to_string();
            out.push(1);
            out.extend_from_slice(&(s.len() as u32).to_le_bytes());
            out.extend_from_slice(s.as_bytes());
        }
    }
}

trait OwnedAbs {
    fn unsigned_abs_owned(self) -> dashu_int::UBig;
}

impl OwnedAbs for IBig {
    fn unsigned_abs_owned(self) -> dashu_int::UBig {
        use dashu_int::ops::UnsignedAbs;
        self.unsigned_abs()
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.den == other.den && self.num == other.num
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.den.hash(state);
        self.num.hash(state);
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| match j {
                0 => c.to_string(),
                1 => format!("{c}·ζ"),
                _ => format!("{c}·ζ^{j}"),
            })
            .collect();
        let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        if self.den.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{}", self.den)
        }
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.field.order, rhs.field.order, "cyclotomic order mismatch");
        self.add_unchecked(rhs)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.field.order, rhs.field.order, "cyclotomic order mismatch");
        self.mul_unchecked(rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}
