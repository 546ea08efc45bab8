use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use num_bigint::BigInt;

use super::rat::{over_common_denominator, ratio};
use super::{rat_int, Rat, Ring};

/// Laurent polynomial in `q` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is ring equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LPoly {
    terms: BTreeMap<i64, Rat>,
}

impl LPoly {
    pub fn zero() -> Self {
        LPoly::default()
    }

    pub fn one() -> Self {
        LPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        LPoly::monomial(c, 0)
    }

    /// `c q^e`.
    pub fn monomial(c: Rat, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LPoly { terms }
    }

    pub fn q() -> Self {
        LPoly::monomial(Rat::one(), 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(terms: I) -> Self {
        let mut p = LPoly::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> Rat {
        self.terms.get(&e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, e: i64, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn pow(&self, k: u32) -> LPoly {
        (0..k).fold(LPoly::one(), |acc, _| &acc * self)
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> Rat {
        self.terms.values().fold(Rat::zero(), |acc, c| acc + c)
    }
}

/// `[m]_q = (1 - q^m) / (1 - q)` as an exact Laurent polynomial.
///
/// For `m >= 0` this is `1 + q + ... + q^(m-1)`; for `m < 0` it is
/// `-q^m - q^(m+1) - ... - q^(-1)`.
pub fn qint(m: i64) -> LPoly {
    if m >= 0 {
        LPoly::from_terms((0..m).map(|e| (e, Rat::one())))
    } else {
        LPoly::from_terms((m..0).map(|e| (e, -Rat::one())))
    }
}

impl<'a> Add<&'a LPoly> for &'a LPoly {
    type Output = LPoly;
    fn add(self, rhs: &LPoly) -> LPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl<'a> Sub<&'a LPoly> for &'a LPoly {
    type Output = LPoly;
    fn sub(self, rhs: &LPoly) -> LPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Neg for &LPoly {
    type Output = LPoly;
    fn neg(self) -> LPoly {
        LPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a LPoly> for &'a LPoly {
    type Output = LPoly;
    fn mul(self, rhs: &LPoly) -> LPoly {
        let (a, da) = over_common_denominator(self.terms.values());
        let (b, db) = over_common_denominator(rhs.terms.values());
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ea, x) in self.terms.keys().zip(&a) {
            for (eb, y) in rhs.terms.keys().zip(&b) {
                *acc.entry(ea + eb).or_default() += x * y;
            }
        }
        let den = da * db;
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, ratio(c, &den)))
            .collect();
        LPoly { terms }
    }
}

impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let unit = mag.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

/// The ring `Q[q, 1/q]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LaurentRing;

impl Ring for LaurentRing {
    type Elem = LPoly;

    fn name(&self) -> String {
        "Q[q,1/q]".into()
    }
    fn zero(&self) -> LPoly {
        LPoly::zero()
    }
    fn one(&self) -> LPoly {
        LPoly::one()
    }
    fn add(&self, a: &LPoly, b: &LPoly) -> LPoly {
        a + b
    }
    fn neg(&self, a: &LPoly) -> LPoly {
        -a
    }
    fn mul(&self, a: &LPoly, b: &LPoly) -> LPoly {
        a * b
    }
    fn sub(&self, a: &LPoly, b: &LPoly) -> LPoly {
        a - b
    }
    fn equal(&self, a: &LPoly, b: &LPoly) -> bool {
        a == b
    }
    fn is_zero(&self, a: &LPoly) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, v: i64) -> LPoly {
        LPoly::constant(rat_int(v))
    }
    fn render(&self, a: &LPoly) -> String {
        a.to_string()
    }
}
