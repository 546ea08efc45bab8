//! Integer families.

use std::str::FromStr;

use num_bigint::BigInt;

use super::{require, require_odd_prime, Family};
use crate::error::{Error, Result};
use crate::permanent::Mat;
use crate::ring::Integers;

/// Index range of the linear family `j + d k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearRange {
    /// `1 <= j, k <= p - 1`
    OneToPMinus1,
    /// `1 <= j, k <= p`
    OneToP,
    /// `0 <= j, k <= p - 1`
    ZeroToPMinus1,
}

impl FromStr for LinearRange {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1..p-1" => Ok(LinearRange::OneToPMinus1),
            "1..p" => Ok(LinearRange::OneToP),
            "0..p-1" => Ok(LinearRange::ZeroToPMinus1),
            _ => Err(Error::InvalidArgument(format!(
                "linear: range `{s}` is not one of 1..p-1, 1..p, 0..p-1"
            ))),
        }
    }
}

/// Index range of the quadratic family `j^2 + d k^2`, with `h = (p-1)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadRange {
    OneToH,
    ZeroToH,
}

impl FromStr for QuadRange {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1..h" => Ok(QuadRange::OneToH),
            "0..h" => Ok(QuadRange::ZeroToH),
            _ => Err(Error::InvalidArgument(format!(
                "quad: range `{s}` is not one of 1..h, 0..h"
            ))),
        }
    }
}

fn from_formula(n: i64, first: i64, f: impl Fn(i64, i64) -> i64) -> Result<Mat<Integers>> {
    Mat::from_fn(Integers, n as usize, |j, k| {
        BigInt::from(f(first + j as i64, first + k as i64))
    })
}

/// `floor((j + k - 1) / n)`, `1 <= j, k <= n`.
pub fn floor_shift(n: i64) -> Result<Mat<Integers>> {
    require(n >= 1, Family::FloorShift, "n must be positive")?;
    from_formula(n, 1, |j, k| (j + k - 1).div_euclid(n))
}

/// `j + d k` on the chosen range.
pub fn linear(p: i64, d: i64, range: LinearRange) -> Result<Mat<Integers>> {
    require_odd_prime(p, Family::Linear)?;
    let (size, first) = match range {
        LinearRange::OneToPMinus1 => (p - 1, 1),
        LinearRange::OneToP => (p, 1),
        LinearRange::ZeroToPMinus1 => (p, 0),
    };
    from_formula(size, first, |j, k| j + d * k)
}

/// `j^2 + d k^2` on the chosen range.
pub fn quad(p: i64, d: i64, range: QuadRange) -> Result<Mat<Integers>> {
    require_odd_prime(p, Family::Quad)?;
    let h = (p - 1) / 2;
    let (size, first) = match range {
        QuadRange::OneToH => (h, 1),
        QuadRange::ZeroToH => (h + 1, 0),
    };
    from_formula(size, first, |j, k| j * j + d * k * k)
}

/// `|j - k + shift|`, `1 <= j, k <= n`.
pub fn abs_diff(n: i64, shift: i64) -> Result<Mat<Integers>> {
    let family = if shift == 0 {
        Family::Abs
    } else {
        Family::AbsShift
    };
    require(n >= 1, family, "n must be positive")?;
    from_formula(n, 1, |j, k| (j - k + shift).abs())
}

/// `floor((2j - k) / n)`, `1 <= j, k <= n`.
pub fn floor_2jk(n: i64) -> Result<Mat<Integers>> {
    require(n >= 1, Family::Floor2jk, "n must be positive")?;
    from_formula(n, 1, |j, k| (2 * j - k).div_euclid(n))
}
