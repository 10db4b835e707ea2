//! Integers modulo `n`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of `Z_n`, always stored in `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        Residue { value: reduce(value, modulus), modulus }
    }

    pub fn zero(modulus: u64) -> Self {
        Residue::new(0, modulus)
    }

    pub fn one(modulus: u64) -> Self {
        Residue::new(1, modulus)
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inverse(self) -> Result<Self> {
        mod_inverse(self)
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = Residue::one(self.modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Residue { value: (self.value + rhs.value) % self.modulus, modulus: self.modulus }
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Residue {
            value: (self.value + self.modulus - rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let v = (self.value as u128 * rhs.value as u128) % self.modulus as u128;
        Residue { value: v as u64, modulus: self.modulus }
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue { value: (self.modulus - self.value) % self.modulus, modulus: self.modulus }
    }
}

/// Inverse of `a` modulo its modulus by the extended Euclidean algorithm.
pub fn mod_inverse(a: Residue) -> Result<Residue> {
    inverse_mod(a.value as i64, a.modulus)
        .map(|v| Residue { value: v, modulus: a.modulus })
        .ok_or(Error::NotInvertible { value: a.value, modulus: a.modulus })
}

/// Reduces a signed integer into `[0, n)`.
pub fn reduce(x: i64, n: u64) -> u64 {
    x.rem_euclid(n as i64) as u64
}

/// Inverse of `x` modulo `n`, if it exists.
pub fn inverse_mod(x: i64, n: u64) -> Option<u64> {
    let (mut old_r, mut r) = (reduce(x, n) as i128, n as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(n as i128) as u64)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_inverse(a: u64, n: u64) -> Option<u64> {
        (0..n).find(|b| (a * b) % n == 1 % n)
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(mod_inverse(Residue::new(2, 5)).unwrap().value(), 3);
        assert_eq!(mod_inverse(Residue::new(1, 7)).unwrap().value(), 1);
        // exhaustive scan over residues mod 9 picks 5
        assert_eq!(brute_inverse(2, 9), Some(5));
        assert_eq!(mod_inverse(Residue::new(2, 9)).unwrap().value(), 5);
    }

    #[test]
    fn non_invertible_is_an_error() {
        assert_eq!(
            mod_inverse(Residue::new(3, 9)),
            Err(Error::NotInvertible { value: 3, modulus: 9 })
        );
        assert!(mod_inverse(Residue::new(0, 5)).is_err());
    }

    #[test]
    fn inverse_matches_scan() {
        for n in [2u64, 3, 5, 7, 9, 25, 27, 18, 50] {
            for a in 0..n {
                assert_eq!(inverse_mod(a as i64, n), brute_inverse(a, n), "a={a} n={n}");
            }
        }
    }

    #[test]
    fn negative_values_reduce() {
        assert_eq!(Residue::new(-1, 5).value(), 4);
        assert_eq!((-Residue::new(2, 7)).value(), 5);
        assert_eq!(Residue::new(3, 7).pow(6).value(), 1);
    }
}
