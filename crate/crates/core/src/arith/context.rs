use std::sync::Arc;

use super::cyclotomic::{Cyclotomic, CyclotomicField};
use super::residue::{inverse_mod, is_prime, reduce};
use crate::error::{Error, Result};

/// A prime qudit dimension together with the cyclotomic field every entry
/// lives in.
///
/// The field has order `N = 4·d^M`, where `M` is the largest diagonal-gate
/// precision the computation needs. The factor 4 supplies `i`, which the
/// qubit conventions and the Gauss-sum form of `√d` both require.
#[derive(Clone, Debug)]
pub struct Qudit(Arc<Inner>);

#[derive(Debug)]
struct Inner {
    d: u32,
    precision: u32,
    field: Arc<CyclotomicField>,
    sqrt_d: Cyclotomic,
}

impl Qudit {
    pub fn new(d: u32, precision: u32) -> Result<Self> {
        if !is_prime(d as u64) {
            return Err(Error::NotPrime(d as u64));
        }
        let precision = precision.max(1);
        let order = 4 * d.checked_pow(precision).ok_or(Error::PrecisionExceeded {
            needed: precision,
            available: 0,
        })?;
        let field = CyclotomicField::new(order);
        let sqrt_d = gauss_sqrt(d, &field);
        Ok(Qudit(Arc::new(Inner { d, precision, field, sqrt_d })))
    }

    /// Context large enough for every gate up to level `k`.
    pub fn for_level(d: u32, k: u32) -> Result<Self> {
        let (m, _) = level_parts(d, k.max(1));
        Qudit::new(d, m)
    }

    pub fn d(&self) -> u32 {
        self.0.d
    }

    pub fn precision(&self) -> u32 {
        self.0.precision
    }

    /// Largest `m` for which `d^m`-th roots of unity exist in the field.
    pub fn max_root_precision(&self) -> u32 {
        let mut n = self.order();
        let mut m = 0;
        while n % self.0.d == 0 {
            n /= self.0.d;
            m += 1;
        }
        m
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.0.field
    }

    pub fn order(&self) -> u32 {
        self.0.field.order()
    }

    pub fn is_qubit(&self) -> bool {
        self.0.d == 2
    }

    /// `√d` as a field element.
    pub fn sqrt_d(&self) -> &Cyclotomic {
        &self.0.sqrt_d
    }

    /// ζ_N exponent of `ω^k`, ω = e^{2πi/d}.
    pub fn omega_exp(&self, k: i64) -> i64 {
        let step = (self.order() / self.0.d) as i64;
        k.rem_euclid(self.0.d as i64) * step
    }

    /// ζ_N exponent of `ω_m^k`, ω_m = e^{2πi/d^m}.
    pub fn omega_m_exp(&self, m: u32, k: i64) -> Result<i64> {
        if m > self.max_root_precision() {
            return Err(Error::PrecisionExceeded { needed: m, available: self.max_root_precision() });
        }
        let dm = (self.0.d as i64).pow(m);
        Ok(k.rem_euclid(dm) * (self.order() as i64 / dm))
    }

    /// ζ_N exponent of `i^k`.
    pub fn i_exp(&self, k: i64) -> i64 {
        k.rem_euclid(4) * (self.order() / 4) as i64
    }

    pub fn root(&self, e: i64) -> Cyclotomic {
        Cyclotomic::root(&self.0.field, e)
    }

    pub fn omega(&self, k: i64) -> Cyclotomic {
        self.root(self.omega_exp(k))
    }

    pub fn zero(&self) -> Cyclotomic {
        Cyclotomic::zero(&self.0.field)
    }

    pub fn one(&self) -> Cyclotomic {
        Cyclotomic::one(&self.0.field)
    }

    /// Reduces `x` modulo `d`.
    pub fn md(&self, x: i64) -> u32 {
        reduce(x, self.0.d as u64) as u32
    }

    pub fn inv(&self, x: i64) -> Result<u32> {
        inverse_mod(x, self.0.d as u64)
            .map(|v| v as u32)
            .ok_or(Error::NotInvertible { value: reduce(x, self.0.d as u64), modulus: self.0.d as u64 })
    }

    /// `2^{-1} mod d`; only defined for odd `d`.
    pub fn half(&self) -> u32 {
        debug_assert!(!self.is_qubit());
        (self.0.d + 1) / 2
    }

    /// Two contexts are compatible when they share `d` and the field order.
    pub fn same_as(&self, other: &Qudit) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.d == other.0.d && self.order() == other.order()
    }
}

/// `k = (m−1)(d−1) + a` with `a ∈ {1, …, d−1}`.
pub fn level_parts(d: u32, k: u32) -> (u32, u32) {
    assert!(k >= 1, "levels start at 1");
    let step = d - 1;
    let m = (k - 1) / step + 1;
    let a = k - (m - 1) * step;
    (m, a)
}

fn gauss_sqrt(d: u32, field: &Arc<CyclotomicField>) -> Cyclotomic {
    let n = field.order() as i64;
    if d == 2 {
        // √2 = ζ_8 + ζ_8^{-1}
        let e = n / 8;
        return &Cyclotomic::root(field, e) + &Cyclotomic::root(field, -e);
    }
    let step = n / d as i64;
    let mut g = Cyclotomic::zero(field);
    for z in 0..d as i64 {
        g = &g + &Cyclotomic::root(field, (z * z % d as i64) * step);
    }
    if d % 4 == 1 {
        g
    } else {
        // g = i√d
        g.mul_root(-(n / 4))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_decomposition_examples() {
        assert_eq!(level_parts(3, 1), (1, 1));
        assert_eq!(level_parts(3, 3), (2, 1));
        assert_eq!(level_parts(5, 9), (3, 1));
        assert_eq!(level_parts(3, 4), (2, 2));
        assert_eq!(level_parts(2, 5), (5, 1));
        for d in [2u32, 3, 5, 7] {
            for k in 1..20 {
                let (m, a) = level_parts(d, k);
                assert!(a >= 1 && a <= d - 1);
                assert_eq!((m - 1) * (d - 1) + a, k);
            }
        }
    }

    #[test]
    fn sqrt_d_squares_to_d() {
        for d in [2u32, 3, 5, 7, 11] {
            let q = Qudit::new(d, 1).unwrap();
            let s = q.sqrt_d();
            assert_eq!(s * s, Cyclotomic::from_integer(q.field(), d as i64), "d={d}");
        }
    }

    #[test]
    fn composite_dimension_rejected() {
        assert_eq!(Qudit::new(9, 1).unwrap_err(), Error::NotPrime(9));
    }
}
