//! Families with q-integer entries `[m]_q`.

use super::{require, Family};
use crate::error::Result;
use crate::permanent::Mat;
use crate::ring::{qint, LaurentRing};

fn from_formula(n: i64, f: impl Fn(i64, i64) -> i64) -> Result<Mat<LaurentRing>> {
    Mat::from_fn(LaurentRing, n as usize, |j, k| {
        qint(f(j as i64 + 1, k as i64 + 1))
    })
}

/// `[floor((j + k) / n)]_q`, `1 <= j, k <= n`.
pub fn qfloor(n: i64) -> Result<Mat<LaurentRing>> {
    require(n >= 1, Family::QFloor, "n must be positive")?;
    from_formula(n, |j, k| (j + k).div_euclid(n))
}

/// `[|j - k + shift|]_q`, `1 <= j, k <= n`.
pub fn qabs(n: i64, shift: i64) -> Result<Mat<LaurentRing>> {
    let family = if shift == 0 {
        Family::QAbs
    } else {
        Family::QAbsShift
    };
    require(n >= 1, family, "n must be positive")?;
    from_formula(n, |j, k| (j - k + shift).abs())
}

/// `[floor((a j - (a + 1) k) / n)]_q`, `1 <= j, k <= n`.
pub fn qfloor_gen(a: i64, n: i64) -> Result<Mat<LaurentRing>> {
    require(n >= 1, Family::QFloorGen, "n must be positive")?;
    from_formula(n, |j, k| (a * j - (a + 1) * k).div_euclid(n))
}

/// `[ceil(((a + 1) j - a k) / n)]_q`, `1 <= j, k <= n`.
pub fn qceil_gen(a: i64, n: i64) -> Result<Mat<LaurentRing>> {
    require(n >= 1, Family::QCeilGen, "n must be positive")?;
    from_formula(n, |j, k| -(a * k - (a + 1) * j).div_euclid(n))
}
