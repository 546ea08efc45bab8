use std::fmt;

use super::{is_prime, Field, Ring};
use crate::error::{Error, Result};

/// A residue modulo `modulus`, stored as its least nonnegative representative.
///
/// The modulus need not be prime; `p^2` moduli are the common case.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModInt {
    value: u64,
    modulus: u64,
}

#[allow(clippy::should_implement_trait)]
impl ModInt {
    pub fn new(value: u64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        ModInt {
            value: value % modulus,
            modulus,
        }
    }

    pub fn from_i64(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        let v = (value as i128).rem_euclid(modulus as i128) as u64;
        ModInt { value: v, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn check(&self, other: &ModInt) {
        assert_eq!(
            self.modulus, other.modulus,
            "ModInt values with different moduli"
        );
    }

    pub fn add(self, other: ModInt) -> ModInt {
        self.check(&other);
        let s = (self.value as u128 + other.value as u128) % self.modulus as u128;
        ModInt::new(s as u64, self.modulus)
    }

    pub fn neg(self) -> ModInt {
        ModInt::new((self.modulus - self.value) % self.modulus, self.modulus)
    }

    pub fn sub(self, other: ModInt) -> ModInt {
        self.add(other.neg())
    }

    pub fn mul(self, other: ModInt) -> ModInt {
        self.check(&other);
        let p = (self.value as u128 * other.value as u128) % self.modulus as u128;
        ModInt::new(p as u64, self.modulus)
    }

    pub fn pow(self, mut e: u64) -> ModInt {
        let mut base = self;
        let mut acc = ModInt::new(1, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    /// Inverse when `gcd(value, modulus) = 1`.
    pub fn inv(self) -> Option<ModInt> {
        let (mut r0, mut r1) = (self.modulus as i128, self.value as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        if r0 != 1 {
            return None;
        }
        Some(ModInt::new(
            t0.rem_euclid(self.modulus as i128) as u64,
            self.modulus,
        ))
    }

    /// Representative in `(-m/2, m/2]`, handy for printing signed congruences.
    pub fn signed(&self) -> i64 {
        if self.value > self.modulus / 2 {
            self.value as i64 - self.modulus as i64
        } else {
            self.value as i64
        }
    }
}

impl fmt::Display for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// The residue ring `Z/mZ`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct ZMod {
    modulus: u64,
}

impl ZMod {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidArgument(format!("modulus {modulus} < 2")));
        }
        Ok(ZMod { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elem(&self, v: i64) -> ModInt {
        ModInt::from_i64(v, self.modulus)
    }
}

impl Ring for ZMod {
    type Elem = ModInt;

    fn name(&self) -> String {
        format!("Z/{}", self.modulus)
    }
    fn zero(&self) -> ModInt {
        ModInt::new(0, self.modulus)
    }
    fn one(&self) -> ModInt {
        ModInt::new(1, self.modulus)
    }
    fn add(&self, a: &ModInt, b: &ModInt) -> ModInt {
        a.add(*b)
    }
    fn neg(&self, a: &ModInt) -> ModInt {
        a.neg()
    }
    fn mul(&self, a: &ModInt, b: &ModInt) -> ModInt {
        a.mul(*b)
    }
    fn equal(&self, a: &ModInt, b: &ModInt) -> bool {
        a == b
    }
    fn from_i64(&self, v: i64) -> ModInt {
        self.elem(v)
    }
    fn contains(&self, a: &ModInt) -> bool {
        a.modulus == self.modulus
    }
    fn render(&self, a: &ModInt) -> String {
        a.value.to_string()
    }
}

impl Field for ZMod {
    fn is_field(&self) -> bool {
        is_prime(self.modulus)
    }

    fn inv(&self, a: &ModInt) -> Result<ModInt> {
        if a.value == 0 {
            return Err(Error::DivisionByZero);
        }
        a.inv().ok_or_else(|| Error::NonInvertibleDenominator {
            denominator: a.value.to_string(),
            modulus: self.modulus,
        })
    }
}
