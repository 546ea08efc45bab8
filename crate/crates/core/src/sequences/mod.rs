//! The named sequences `T(n)`, `c_n`, `c'_n`, `d_n`, `s_n`, `s'_p`, `t_n`, `t'_p`
//! and the derangement / masked sums.
//!
//! Each trigonometric quantity is `2^a * sqrt(n)^e * (trig permanent)` for small
//! `a`, `e`. The trig permanent is `scale * per(M)` for a cyclotomic matrix `M`
//! (see [`crate::zoo::Scale`]); [`resolve`] folds the powers of 2, `i` and
//! `sqrt(n)` into one exact step.

mod matching;

pub use matching::max_matching;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cyclotomic::{gauss_sum, Cyc, CycField};
use crate::error::{invalid, Error, Result};
use crate::permanent::{det_field, for_each_permutation, per, Mat};
use crate::ring::{mod_reduce_rat, rat_int, Field, ModInt, Rat, Rationals};
use crate::zoo::cyclo::{self, DiffSize};
use crate::zoo::{pow2, rational, Scale};

/// Sequence identifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeqName {
    /// `T(n)`: tangent permanent over `j + k`.
    T,
    C,
    CPrime,
    D,
    S,
    SPrime,
    /// `t_n`: tangent permanent over `jk`.
    Tn,
    TPrime,
}

impl SeqName {
    pub const ALL: [SeqName; 8] = [
        SeqName::T,
        SeqName::C,
        SeqName::CPrime,
        SeqName::D,
        SeqName::S,
        SeqName::SPrime,
        SeqName::Tn,
        SeqName::TPrime,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SeqName::T => "T",
            SeqName::C => "c",
            SeqName::CPrime => "cprime",
            SeqName::D => "d",
            SeqName::S => "s",
            SeqName::SPrime => "sprime",
            SeqName::Tn => "t",
            SeqName::TPrime => "tprime",
        }
    }

    /// Whether the index must be prime rather than merely odd.
    pub fn prime_only(self) -> bool {
        matches!(self, SeqName::SPrime | SeqName::TPrime)
    }
}

impl fmt::Display for SeqName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SeqName {
    type Err = Error;
    fn from_str(s: &str) -> Result<SeqName> {
        SeqName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown sequence `{s}` (expected T, c, cprime, d, s, sprime, t, tprime)"
                ))
            })
    }
}

/// One exact sequence term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqValue {
    pub name: SeqName,
    pub index: i64,
    pub value: Rat,
    pub is_integer: bool,
    /// For `c'_n`: the bound `2^(d_n)` the denominator must divide.
    pub denominator_bound: Option<BigInt>,
}

impl SeqValue {
    fn new(name: SeqName, index: i64, value: Rat) -> SeqValue {
        SeqValue {
            name,
            index,
            is_integer: value.is_integer(),
            value,
            denominator_bound: None,
        }
    }

    /// Whether the denominator divides the recorded bound (true when there is none).
    pub fn within_bound(&self) -> bool {
        match &self.denominator_bound {
            Some(b) => (b % self.value.denom()).is_zero(),
            None => true,
        }
    }
}

/// Evaluates `name` at `index`; out-of-domain indices are invalid arguments.
pub fn evaluate(name: SeqName, index: i64) -> Result<SeqValue> {
    match name {
        SeqName::T => seq_tshift(index),
        SeqName::C => seq_c(index),
        SeqName::CPrime => seq_c_prime(index),
        SeqName::D => seq_d(index),
        SeqName::S => seq_s(index),
        SeqName::SPrime => seq_s_prime(index),
        SeqName::Tn => seq_t(index),
        SeqName::TPrime => seq_t_prime(index),
    }
}

/// Sign `(-1)^floor(n/4)` relating the Gauss sum to `i^((n-1)/2) sqrt(n)`, by `n mod 8`.
pub fn carrier_sign(n: i64) -> Result<i64> {
    match n.rem_euclid(8) {
        1 | 3 => Ok(1),
        5 | 7 => Ok(-1),
        _ => invalid(format!("carrier sign: n = {n} must be odd")),
    }
}

/// Exact value of `2^two * i^i_pow * sqrt(n)^sqrt_pow * x` for odd `n >= 3`,
/// `sqrt_pow` in `{-1, 0, 1}`.
///
/// With `G = carrier_sign(n) * gauss_sum(n) = i^h sqrt(n)` (`h = (n-1)/2`) we
/// have `i^c sqrt(n)^e = i^(c - e h) G^e`, and `G^-1 = (-1)^h G / n`. The
/// remaining power of `i` must be even.
pub fn resolve(n: i64, two: i64, i_pow: i64, sqrt_pow: i64, x: &Cyc) -> Result<Rat> {
    if !(-1..=1).contains(&sqrt_pow) {
        return invalid("resolve: only sqrt(n)^-1, ^0, ^1 occur");
    }
    let h = (n - 1) / 2;
    let c = (i_pow - sqrt_pow * h).rem_euclid(4);
    if c % 2 != 0 {
        return Err(Error::Internal(format!(
            "resolve: odd power of i left over (n = {n}, i^{i_pow}, sqrt^{sqrt_pow})"
        )));
    }
    let sign = if c == 2 { -1 } else { 1 };
    let y = if sqrt_pow == 0 {
        x.clone()
    } else {
        let carrier = gauss_sum(n as usize)?.scale(&rat_int(carrier_sign(n)?));
        let gx = carrier.mul(x);
        if sqrt_pow == 1 {
            gx
        } else {
            let hsign = if h % 2 == 0 { 1 } else { -1 };
            gx.scale(&Rat::new(hsign.into(), n.into()))
        }
    };
    let r = y
        .as_rational()
        .ok_or_else(|| Error::NonRationalResult(y.to_string()))?;
    Ok(r * pow2(two) * rat_int(sign))
}

fn trig(n: i64, built: (Mat<CycField>, Scale), extra_two: i64, sqrt_pow: i64) -> Result<Rat> {
    let (m, s) = built;
    let p = per(&m)?;
    resolve(n, s.two + extra_two, s.i_pow, sqrt_pow, &p)
}

fn half(n: i64) -> i64 {
    (n - 1) / 2
}

fn require_odd(name: SeqName, n: i64) -> Result<()> {
    if n < 3 || n % 2 == 0 {
        return invalid(format!("{name}: index {n} must be odd and >= 3"));
    }
    Ok(())
}

fn require_prime(name: SeqName, p: i64) -> Result<()> {
    require_odd(name, p)?;
    if !cyclo::is_odd_prime(p) {
        return invalid(format!("{name}: index {p} must be prime"));
    }
    Ok(())
}

/// `T(n)`, the tangent permanent over `j + k` of size `n - 1`.
pub fn seq_tshift(n: i64) -> Result<SeqValue> {
    require_odd(SeqName::T, n)?;
    let v = trig(n, cyclo::tan_shift(n)?, 0, 0)?;
    Ok(SeqValue::new(SeqName::T, n, v))
}

/// `c_n = 2^h per[cos 2 pi jk / n]`.
pub fn seq_c(n: i64) -> Result<SeqValue> {
    require_odd(SeqName::C, n)?;
    let v = trig(n, cyclo::cos2(n)?, half(n), 0)?;
    Ok(SeqValue::new(SeqName::C, n, v))
}

/// `c'_n = 2^-h per[sec 2 pi jk / n]`, with the bound `2^(d_n)` attached.
pub fn seq_c_prime(n: i64) -> Result<SeqValue> {
    require_odd(SeqName::CPrime, n)?;
    let v = trig(n, cyclo::sec2(n)?, -half(n), 0)?;
    let d = max_matching_size(n);
    let mut out = SeqValue::new(SeqName::CPrime, n, v);
    out.denominator_bound = Some(BigInt::one() << d);
    Ok(out)
}

fn max_matching_size(n: i64) -> usize {
    let h = half(n) as usize;
    max_matching(h, h, |j, k| ((j + 1) * (k + 1)) as i64 % n == 0)
}

/// `d_n`: the most cells `(j, tau(j))` with `n | j tau(j)` a permutation can hit.
pub fn seq_d(n: i64) -> Result<SeqValue> {
    require_odd(SeqName::D, n)?;
    Ok(SeqValue::new(
        SeqName::D,
        n,
        rat_int(max_matching_size(n) as i64),
    ))
}

/// `s_n = 2^h / sqrt(n) * per[sin 2 pi jk / n]`.
pub fn seq_s(n: i64) -> Result<SeqValue> {
    require_odd(SeqName::S, n)?;
    let v = trig(n, cyclo::sin2(n)?, half(n), -1)?;
    Ok(SeqValue::new(SeqName::S, n, v))
}

/// `s'_p = sqrt(p) / 2^h * per[csc 2 pi jk / p]`.
pub fn seq_s_prime(p: i64) -> Result<SeqValue> {
    require_prime(SeqName::SPrime, p)?;
    let v = trig(p, cyclo::csc2(p)?, -half(p), 1)?;
    Ok(SeqValue::new(SeqName::SPrime, p, v))
}

/// `t_n = per[tan pi jk / n] / sqrt(n)`.
pub fn seq_t(n: i64) -> Result<SeqValue> {
    require_odd(SeqName::Tn, n)?;
    let v = trig(n, cyclo::tan_jk(n)?, 0, -1)?;
    Ok(SeqValue::new(SeqName::Tn, n, v))
}

/// `t'_p = sqrt(p) * per[cot pi jk / p]`.
pub fn seq_t_prime(p: i64) -> Result<SeqValue> {
    require_prime(SeqName::TPrime, p)?;
    let v = trig(p, cyclo::cot_jk(p)?, 0, 1)?;
    Ok(SeqValue::new(SeqName::TPrime, p, v))
}

/// Sums over derangements of products of `1/(1 - zeta^(j - tau(j)))` and relatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerangementVariant {
    /// Unsigned sum of `prod 1/(1 - zeta^(j - tau j))`: size `n` for even `n`,
    /// size `n - 1` for odd `n`.
    UnsignedRecip,
    /// Signed version over size `n - 1`, odd `n`.
    SignedRecip,
    /// Signed sum of `prod (1 + zeta^(j - tau j)) / (1 - zeta^(j - tau j))`, size `n - 1`, odd `n`.
    SignedCotRatio,
    /// Signed sum over size `n`, any `n >= 2`.
    SignedRecipFull,
}

fn rational_of(c: Cyc) -> Result<Rat> {
    c.as_rational()
        .ok_or_else(|| Error::NonRationalResult(c.to_string()))
}

/// Evaluates a derangement sum exactly.
pub fn derangement_sum(n: i64, variant: DerangementVariant) -> Result<Rat> {
    if n < 2 {
        return invalid(format!("derangement sum: n = {n} must be at least 2"));
    }
    let odd = n % 2 == 1;
    let needs_odd = |what: &str| -> Result<()> {
        if odd {
            Ok(())
        } else {
            invalid(format!("{what}: n = {n} must be odd"))
        }
    };
    let value = match variant {
        DerangementVariant::UnsignedRecip => {
            let size = if odd {
                DiffSize::Reduced
            } else {
                DiffSize::Full
            };
            per(&cyclo::recip_root_diff(n, size)?)?
        }
        DerangementVariant::SignedRecip => {
            needs_odd("signed derangement sum")?;
            det_field(&cyclo::recip_root_diff(n, DiffSize::Reduced)?)?
        }
        DerangementVariant::SignedCotRatio => {
            needs_odd("signed cotangent-ratio sum")?;
            det_field(&cyclo::cot_ratio(n, DiffSize::Reduced)?)?
        }
        DerangementVariant::SignedRecipFull => {
            det_field(&cyclo::recip_root_diff(n, DiffSize::Full)?)?
        }
    };
    rational_of(value)
}

/// Which masked rational family a [`masked_sum`] runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaskedFamily {
    /// `1/(a + j k)`, size `p - 1`.
    AplusJK,
    /// `1/(a j + k)`, size `p`.
    AJplusK,
}

impl MaskedFamily {
    fn size(self, p: i64) -> i64 {
        match self {
            MaskedFamily::AplusJK => p - 1,
            MaskedFamily::AJplusK => p,
        }
    }

    fn cell(self, a: i64, j: i64, k: i64) -> i64 {
        match self {
            MaskedFamily::AplusJK => a + j * k,
            MaskedFamily::AJplusK => a * j + k,
        }
    }
}

/// The masked sum over `Q`, exact.
pub fn masked_sum_exact(p: i64, a: i64, signed: bool, family: MaskedFamily) -> Result<Rat> {
    let m = match family {
        MaskedFamily::AplusJK => rational::recip_ajk(p, a)?,
        MaskedFamily::AJplusK => rational::recip_aj_k(p, a)?,
    };
    if signed {
        det_field(&m)
    } else {
        per(&m)
    }
}

/// The masked sum reduced modulo `p^2`.
pub fn masked_sum(p: i64, a: i64, signed: bool, family: MaskedFamily) -> Result<ModInt> {
    let exact = masked_sum_exact(p, a, signed, family)?;
    mod_reduce_rat(&exact, (p * p) as u64).map_err(|e| Error::Internal(e.to_string()))
}

/// The masked sum by direct enumeration of permutations (at most 9 indices).
pub fn masked_sum_bruteforce(p: i64, a: i64, signed: bool, family: MaskedFamily) -> Result<Rat> {
    let size = family.size(p);
    if !(1..=9).contains(&size) {
        return Err(Error::SizeLimit {
            n: size.max(0) as usize,
            max: 9,
        });
    }
    let mut total = Rat::zero();
    for_each_permutation(size as usize, |tau, sign| {
        let mut prod = Rat::one();
        for (j, &k) in tau.iter().enumerate() {
            let v = family.cell(a, j as i64 + 1, k as i64 + 1);
            if v % p == 0 {
                return;
            }
            prod /= rat_int(v);
        }
        if signed && sign < 0 {
            total -= prod;
        } else {
            total += prod;
        }
    });
    Ok(total)
}

/// Field determinant over `Q` of any rational matrix; re-exported for checks.
pub fn det_rational(m: &Mat<Rationals>) -> Result<Rat> {
    debug_assert!(Rationals.is_field());
    det_field(m)
}
