//! Exact scalar rings and the ring contract shared by every matrix engine.

mod lpoly;
mod modint;
mod numtheory;
mod rat;

pub use lpoly::{qint, LPoly, LaurentRing};
pub use modint::{ModInt, ZMod};
pub use numtheory::{
    bernoulli, binomial, double_factorial, factorial, is_prime, jacobi, jacobi_by_count,
};
pub use rat::{mod_reduce_rat, rat, rat_int, Rat};
pub(crate) use rat::{over_common_denominator, ratio};

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::permanent::Mat;

/// A commutative ring with exact equality.
///
/// The ring value is a context object (modulus, cyclotomic order, ...); elements
/// are plain values. All engines in [`crate::permanent`] are generic over this.
pub trait Ring: Clone + Send + Sync + Debug {
    type Elem: Clone + Debug + Send + Sync;

    /// Short tag identifying the ring instance, e.g. `Z/9` or `Q(zeta_5)`.
    fn name(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn sub_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.sub(a, b);
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.equal(a, &self.zero())
    }

    /// Image of an integer under the unique ring map from Z.
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem {
        // double-and-add keeps this generic for rings without a native embedding
        let mut result = self.zero();
        let mut base = self.one();
        let mut k = v.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = self.add(&result, &base);
            }
            base = self.add(&base, &base);
            k >>= 1;
        }
        if v < 0 {
            self.neg(&result)
        } else {
            result
        }
    }

    /// Whether `a` belongs to this ring instance (same modulus, same order).
    fn contains(&self, _a: &Self::Elem) -> bool {
        true
    }

    /// Returns a representative that is cheaper to work with; identity by default.
    fn normalize(&self, a: Self::Elem) -> Self::Elem {
        a
    }

    /// Renders an element in its exact textual form.
    fn render(&self, a: &Self::Elem) -> String {
        format!("{a:?}")
    }

    /// Permanent of a matrix over this ring. Rings with a faster exact kernel
    /// override this; the default is the generic Gray-code Ryser walk.
    fn permanent(&self, m: &Mat<Self>) -> Result<Self::Elem> {
        crate::permanent::per_ryser(m)
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// A ring in which nonzero elements may be inverted.
pub trait Field: Ring {
    /// False for residue rings with composite modulus.
    fn is_field(&self) -> bool {
        true
    }

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

/// The integers, backed by arbitrary-precision [`BigInt`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn name(&self) -> String {
        "Z".into()
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn add_assign(&self, a: &mut BigInt, b: &BigInt) {
        *a += b;
    }
    fn sub_assign(&self, a: &mut BigInt, b: &BigInt) {
        *a -= b;
    }
    fn equal(&self, a: &BigInt, b: &BigInt) -> bool {
        a == b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn render(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn permanent(&self, m: &Mat<Self>) -> Result<BigInt> {
        crate::permanent::per_integer(m)
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = Rat;

    fn name(&self) -> String {
        "Q".into()
    }
    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }
    fn add_assign(&self, a: &mut Rat, b: &Rat) {
        *a += b;
    }
    fn sub_assign(&self, a: &mut Rat, b: &Rat) {
        *a -= b;
    }
    fn equal(&self, a: &Rat, b: &Rat) -> bool {
        a == b
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, v: i64) -> Rat {
        rat_int(v)
    }
    fn render(&self, a: &Rat) -> String {
        a.to_string()
    }
    fn permanent(&self, m: &Mat<Self>) -> Result<Rat> {
        crate::permanent::per_rational(m)
    }
}

impl Field for Rationals {
    fn inv(&self, a: &Rat) -> Result<Rat> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }
}
