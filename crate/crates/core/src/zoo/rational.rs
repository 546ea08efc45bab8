//! Rational families, with masking applied at construction.

use super::{require, require_odd_prime, Family};
use crate::error::{Error, Result};
use crate::permanent::Mat;
use crate::ring::{rat, Rat, Rationals};

fn recip(family: Family, v: i64) -> Result<Rat> {
    if v == 0 {
        return Err(Error::Internal(format!(
            "{family}: zero denominator in an unmasked cell"
        )));
    }
    Ok(rat(1, v))
}

/// `1 / (j^2 + k^2)`, `1 <= j, k <= (p-1)/2`, for primes `p = 3 (mod 4)`.
pub fn inv_sum_sq(p: i64) -> Result<Mat<Rationals>> {
    require_odd_prime(p, Family::InvSumSq)?;
    require(
        p % 4 == 3,
        Family::InvSumSq,
        format!("p = {p} must be 3 mod 4"),
    )?;
    let h = (p - 1) / 2;
    Mat::try_from_fn(Rationals, h as usize, |j, k| {
        let (j, k) = (j as i64 + 1, k as i64 + 1);
        recip(Family::InvSumSq, j * j + k * k)
    })
}

/// `1 / (a + j k)`, `1 <= j, k <= p - 1`, zero where `p | a + j k`.
pub fn recip_ajk(p: i64, a: i64) -> Result<Mat<Rationals>> {
    require_odd_prime(p, Family::RecipAjk)?;
    Mat::try_from_fn(Rationals, (p - 1) as usize, |j, k| {
        let v = a + (j as i64 + 1) * (k as i64 + 1);
        if v % p == 0 {
            Ok(rat(0, 1))
        } else {
            recip(Family::RecipAjk, v)
        }
    })
}

/// `1 / (a j + k)`, `1 <= j, k <= p`, zero where `p | a j + k`.
pub fn recip_aj_k(p: i64, a: i64) -> Result<Mat<Rationals>> {
    require_odd_prime(p, Family::RecipAjK)?;
    Mat::try_from_fn(Rationals, p as usize, |j, k| {
        let v = a * (j as i64 + 1) + (k as i64 + 1);
        if v % p == 0 {
            Ok(rat(0, 1))
        } else {
            recip(Family::RecipAjK, v)
        }
    })
}

/// `1 / (j^2 - k^2)` off the diagonal, zero on it, `1 <= j, k <= (p-1)/2`.
pub fn inv_sqdiff(p: i64) -> Result<Mat<Rationals>> {
    require_odd_prime(p, Family::InvSqDiff)?;
    let h = (p - 1) / 2;
    Mat::try_from_fn(Rationals, h as usize, |j, k| {
        if j == k {
            return Ok(rat(0, 1));
        }
        let (j, k) = (j as i64 + 1, k as i64 + 1);
        recip(Family::InvSqDiff, j * j - k * k)
    })
}
