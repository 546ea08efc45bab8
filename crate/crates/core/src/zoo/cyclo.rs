//! Families over cyclotomic fields.
//!
//! Unless stated otherwise `zeta` has order `n`. Entries that depend only on
//! an exponent `e mod m` are computed once per exponent.

use std::str::FromStr;

use num_integer::Integer;

use super::{require, require_odd, require_odd_prime, Family, Scale};
use crate::cyclotomic::{find_fq_root, zeta_pow, Cyc, CycField, FqRoot};
use crate::error::{Error, Result};
use crate::permanent::Mat;
use crate::ring::{is_prime, rat, rat_int, ModInt, Rat, ZMod};

/// Size variant for the zero-diagonal difference families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiffSize {
    /// `1 <= j, k <= n`
    Full,
    /// `1 <= j, k <= n - 1`
    Reduced,
}

impl FromStr for DiffSize {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "n" => Ok(DiffSize::Full),
            "n-1" => Ok(DiffSize::Reduced),
            _ => Err(Error::InvalidArgument(format!(
                "size `{s}` is not one of n, n-1"
            ))),
        }
    }
}

/// Memo of `f(e)` for exponents `e mod m`.
struct ByExponent<F> {
    m: usize,
    f: F,
    table: Vec<Option<Cyc>>,
}

impl<F: FnMut(usize) -> Result<Cyc>> ByExponent<F> {
    fn new(m: usize, f: F) -> Self {
        ByExponent {
            m,
            f,
            table: vec![None; m],
        }
    }

    fn get(&mut self, e: i64) -> Result<Cyc> {
        let e = e.rem_euclid(self.m as i64) as usize;
        if self.table[e].is_none() {
            self.table[e] = Some((self.f)(e)?);
        }
        Ok(self.table[e].clone().expect("filled above"))
    }
}

fn field(m: usize) -> CycField {
    CycField::new(m).expect("positive order")
}

fn z(m: usize, e: i64) -> Cyc {
    zeta_pow(m, e)
}

fn one(m: usize) -> Cyc {
    Cyc::integer(m, 1)
}

/// Matrix of size `size` with entry `f((j+1) op (k+1) mod n)` for the index
/// combination `op`, optionally with a zero diagonal.
fn exponent_matrix(
    n: usize,
    size: usize,
    combine: impl Fn(i64, i64) -> i64,
    zero_diag: bool,
    f: impl FnMut(usize) -> Result<Cyc>,
) -> Result<Mat<CycField>> {
    let mut cache = ByExponent::new(n, f);
    Mat::try_from_fn(field(n), size, |j, k| {
        if zero_diag && j == k {
            return Ok(Cyc::zero(n));
        }
        cache.get(combine(j as i64 + 1, k as i64 + 1))
    })
}

/// `1 - zeta^j x_k`, `1 <= j, k <= n`, for a rational tuple `x`.
pub fn root_linear(n: i64, xs: &[Rat]) -> Result<Mat<CycField>> {
    require(n >= 1, Family::RootLinear, "n must be positive")?;
    require(
        xs.len() == n as usize,
        Family::RootLinear,
        format!("needs {n} values of x, got {}", xs.len()),
    )?;
    let m = n as usize;
    Mat::from_fn(field(m), m, |j, k| {
        one(m).sub(&z(m, j as i64 + 1).scale(&xs[k]))
    })
}

/// `1 - g^j x_k` over `F_p`, where `g` has exact order `n`.
pub fn root_linear_fp(root: &FqRoot, xs: &[ModInt]) -> Result<Mat<ZMod>> {
    let n = root.order as usize;
    require(
        xs.len() == n,
        Family::RootLinear,
        format!("needs {n} values of x, got {}", xs.len()),
    )?;
    let f = root.field();
    Mat::from_fn(f, n, |j, k| {
        f.elem(1).sub(root.pow(j as i64 + 1).mul(xs[k]))
    })
}

/// Finite-field source for [`root_linear_fp`]: smallest prime `p = 1 (mod n)`
/// with `p > n`, searched below a generous bound.
pub fn fp_backend(n: i64) -> Result<FqRoot> {
    require(n >= 1, Family::RootLinear, "n must be positive")?;
    find_fq_root(n as u64, 1 << 20)
}

/// `1 + zeta^(j+k) x`, `1 <= j, k <= n - 1`.
pub fn root_exp_shift(n: i64, x: &Rat) -> Result<Mat<CycField>> {
    require(n >= 2, Family::RootExpShift, "n must be at least 2")?;
    let m = n as usize;
    exponent_matrix(
        m,
        m - 1,
        |j, k| j + k,
        false,
        |e| Ok(one(m).add(&z(m, e as i64).scale(x))),
    )
}

/// `1 / (1 - zeta^(j-k) x)`, `1 <= j, k <= n`; requires `x^n != 1`.
pub fn cauchy_root(n: i64, x: &Rat) -> Result<Mat<CycField>> {
    require(n >= 1, Family::CauchyRoot, "n must be positive")?;
    if x.pow(n as i32) == rat_int(1) {
        return Err(Error::SingularFamily {
            family: Family::CauchyRoot.to_string(),
            detail: format!("x = {x} satisfies x^{n} = 1"),
        });
    }
    let m = n as usize;
    exponent_matrix(
        m,
        m,
        |j, k| j - k,
        false,
        |e| one(m).sub(&z(m, e as i64).scale(x)).inverse(),
    )
}

/// `(zeta^(j+k) - 1) / (zeta^(j+k) + 1)`, `1 <= j, k <= n - 1`, odd `n`.
/// The tangent permanent is `i^-(n-1)` times its permanent.
pub fn tan_shift(n: i64) -> Result<(Mat<CycField>, Scale)> {
    require_odd(n, 3, Family::TanShift)?;
    let m = n as usize;
    let mat = exponent_matrix(
        m,
        m - 1,
        |j, k| j + k,
        false,
        |e| {
            let w = z(m, e as i64);
            Ok(w.sub(&one(m)).mul(&w.add(&one(m)).inverse()?))
        },
    )?;
    Ok((mat, Scale::new(0, -(n - 1))))
}

/// `Q(zeta_M)` with `M = lcm(2n, 4)`, holding both `e^(i pi / n)` and `i`.
fn half_angle_field(n: i64) -> (usize, i64, Cyc) {
    let big = (2 * n).lcm(&4) as usize;
    let step = big as i64 / (2 * n);
    let i = z(big, big as i64 / 4);
    (big, step, i)
}

/// `sin(pi (j+k) / n)`, `1 <= j, k <= n - 1`, exactly.
pub fn sin_shift(n: i64) -> Result<Mat<CycField>> {
    require(n >= 2, Family::SinShift, "n must be at least 2")?;
    let (big, step, i) = half_angle_field(n);
    // 1 / (2i) = -i / 2
    let factor = i.neg().scale(&rat(1, 2));
    let size = (n - 1) as usize;
    Mat::from_fn(field(big), size, |j, k| {
        let s = (j + k + 2) as i64 * step;
        z(big, s).sub(&z(big, -s)).mul(&factor)
    })
}

/// `cos(pi (j+k) / n)`, `1 <= j, k <= n - 1`, exactly.
pub fn cos_shift(n: i64) -> Result<Mat<CycField>> {
    require(n >= 2, Family::CosShift, "n must be at least 2")?;
    let (big, step, _) = half_angle_field(n);
    let size = (n - 1) as usize;
    Mat::from_fn(field(big), size, |j, k| {
        let s = (j + k + 2) as i64 * step;
        z(big, s).add(&z(big, -s)).scale(&rat(1, 2))
    })
}

fn half(n: i64) -> i64 {
    (n - 1) / 2
}

fn jk_matrix(n: i64, f: impl FnMut(usize) -> Result<Cyc>) -> Result<Mat<CycField>> {
    exponent_matrix(n as usize, half(n) as usize, |j, k| j * k, false, f)
}

fn require_prime(n: i64, family: Family) -> Result<()> {
    require_odd_prime(n, family).map_err(|_| {
        Error::InvalidArgument(format!(
            "{family}: n = {n} must be an odd prime (entries are undefined when n | jk)"
        ))
    })
}

/// `zeta^(jk) + zeta^(-jk)`, `1 <= j, k <= (n-1)/2`; cosine permanent is `2^-h` times it.
pub fn cos2(n: i64) -> Result<(Mat<CycField>, Scale)> {
    require_odd(n, 3, Family::Cos2)?;
    let m = n as usize;
    let mat = jk_matrix(n, |e| Ok(z(m, e as i64).add(&z(m, -(e as i64)))))?;
    Ok((mat, Scale::new(-half(n), 0)))
}

/// `1 / (zeta^(jk) + zeta^(-jk))`; secant permanent is `2^h` times it.
pub fn sec2(n: i64) -> Result<(Mat<CycField>, Scale)> {
    require_odd(n, 3, Family::Sec2)?;
    let m = n as usize;
    let mat = jk_matrix(n, |e| z(m, e as i64).add(&z(m, -(e as i64))).inverse())?;
    Ok((mat, Scale::new(half(n), 0)))
}

/// `zeta^(jk) - zeta^(-jk)`; sine permanent is `(2i)^-h` times it.
pub fn sin2(n: i64) -> Result<(Mat<CycField>, Scale)> {
    require_odd(n, 3, Family::Sin2)?;
    let m = n as usize;
    let mat = jk_matrix(n, |e| Ok(z(m, e as i64).sub(&z(m, -(e as i64)))))?;
    Ok((mat, Scale::new(-half(n), -half(n))))
}

/// `1 / (zeta^(jk) - zeta^(-jk))` for prime `n`; cosecant permanent is `(2i)^h` times it.
pub fn csc2(n: i64) -> Result<(Mat<CycField>, Scale)> {
    require_prime(n, Family::Csc2)?;
    let m = n as usize;
    let mat = jk_matrix(n, |e| z(m, e as i64).sub(&z(m, -(e as i64))).inverse())?;
    Ok((mat, Scale::new(half(n), half(n))))
}

/// `(zeta^(jk) - 1) / (zeta^(jk) + 1)`; tangent permanent is `i^-h` times it.
pub fn tan_jk(n: i64) -> Result<(Mat<CycField>, Scale)> {
    require_odd(n, 3, Family::TanJk)?;
    let m = n as usize;
    let mat = jk_matrix(n, |e| {
        let w = z(m, e as i64);
        Ok(w.sub(&one(m)).mul(&w.add(&one(m)).inverse()?))
    })?;
    Ok((mat, Scale::new(0, -half(n))))
}

/// `(zeta^(jk) + 1) / (zeta^(jk) - 1)` for prime `n`; cotangent permanent is `i^h` times it.
pub fn cot_jk(n: i64) -> Result<(Mat<CycField>, Scale)> {
    require_prime(n, Family::CotJk)?;
    let m = n as usize;
    let mat = jk_matrix(n, |e| {
        let w = z(m, e as i64);
        Ok(w.add(&one(m)).mul(&w.sub(&one(m)).inverse()?))
    })?;
    Ok((mat, Scale::new(0, half(n))))
}

/// `sec^2(pi (j-k) / n) = 4 / (w^(j-k) + w^(k-j))^2` with `w` of order `2n`,
/// `1 <= j, k <= n`, odd `n`.
pub fn sec2_diff(n: i64) -> Result<Mat<CycField>> {
    require_odd(n, 1, Family::Sec2Diff)?;
    let m = 2 * n as usize;
    exponent_matrix(
        m,
        n as usize,
        |j, k| j - k,
        false,
        |e| {
            let c = z(m, e as i64).add(&z(m, -(e as i64)));
            Ok(c.mul(&c).inverse()?.scale(&rat_int(4)))
        },
    )
}

/// `tan^2(pi (j-k) / n) = sec^2(pi (j-k) / n) - 1`, odd `n`.
pub fn tan2_diff(n: i64) -> Result<Mat<CycField>> {
    require_odd(n, 1, Family::Tan2Diff)?;
    let m = 2 * n as usize;
    exponent_matrix(
        m,
        n as usize,
        |j, k| j - k,
        false,
        |e| {
            let c = z(m, e as i64).add(&z(m, -(e as i64)));
            Ok(c.mul(&c).inverse()?.scale(&rat_int(4)).sub(&one(m)))
        },
    )
}

fn diff_size(n: i64, size: DiffSize) -> usize {
    match size {
        DiffSize::Full => n as usize,
        DiffSize::Reduced => n as usize - 1,
    }
}

/// `1 / (1 - zeta^(j-k))` off the diagonal, zero on it.
pub fn recip_root_diff(n: i64, size: DiffSize) -> Result<Mat<CycField>> {
    require(n >= 2, Family::RecipRootDiff, "n must be at least 2")?;
    let m = n as usize;
    exponent_matrix(
        m,
        diff_size(n, size),
        |j, k| j - k,
        true,
        |e| one(m).sub(&z(m, e as i64)).inverse(),
    )
}

/// `(1 + zeta^(j-k)) / (1 - zeta^(j-k))` off the diagonal, zero on it.
pub fn cot_ratio(n: i64, size: DiffSize) -> Result<Mat<CycField>> {
    require(n >= 2, Family::CotRatio, "n must be at least 2")?;
    let m = n as usize;
    exponent_matrix(
        m,
        diff_size(n, size),
        |j, k| j - k,
        true,
        |e| {
            let w = z(m, e as i64);
            Ok(one(m).add(&w).mul(&one(m).sub(&w).inverse()?))
        },
    )
}

/// Whether `n` is an odd prime, the domain of the prime-only families.
pub fn is_odd_prime(n: i64) -> bool {
    n > 2 && is_prime(n as u64)
}
