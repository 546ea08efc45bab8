use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use super::ModInt;
use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Reduces `r = a/b` to `a * b^-1 mod m`.
///
/// Fails when `gcd(b, m) > 1`.
pub fn mod_reduce_rat(r: &Rat, modulus: u64) -> Result<ModInt> {
    if modulus < 2 {
        return Err(Error::InvalidArgument(format!("modulus {modulus} < 2")));
    }
    let m = BigInt::from(modulus);
    let den = r.denom().mod_floor(&m);
    let inv = mod_inverse(&den, &m).ok_or_else(|| Error::NonInvertibleDenominator {
        denominator: r.denom().to_string(),
        modulus,
    })?;
    let num = r.numer().mod_floor(&m);
    let v = (num * inv).mod_floor(&m);
    Ok(ModInt::new(
        v.to_u64().expect("residue below modulus"),
        modulus,
    ))
}

/// Integer numerators of `values` over their least common denominator.
pub(crate) fn over_common_denominator<'a>(
    values: impl Iterator<Item = &'a Rat> + Clone,
) -> (Vec<BigInt>, BigInt) {
    let den = values.clone().fold(BigInt::one(), |acc, v| {
        if v.denom().is_one() {
            acc
        } else {
            acc.lcm(v.denom())
        }
    });
    let nums = values
        .map(|v| {
            if den.is_one() {
                v.numer().clone()
            } else {
                v.numer() * (&den / v.denom())
            }
        })
        .collect();
    (nums, den)
}

/// `num / den` without a gcd when `den` is one.
pub(crate) fn ratio(num: BigInt, den: &BigInt) -> Rat {
    if den.is_one() {
        Rat::from_integer(num)
    } else {
        Rat::new(num, den.clone())
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if !e.gcd.abs().is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}
