use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::ring::Rat;

/// The `m`-th cyclotomic polynomial, monic with integer coefficients
/// (`coeffs[i]` is the coefficient of `x^i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycPoly {
    order: usize,
    coeffs: Vec<i64>,
}

impl CycPoly {
    pub fn order(&self) -> usize {
        self.order
    }

    /// `phi(m)`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    fn compute(m: usize) -> CycPoly {
        // x^m - 1 divided by Phi_d for every proper divisor d of m
        let mut num = vec![0i64; m + 1];
        num[0] = -1;
        num[m] = 1;
        for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
            let phi_d = cyclotomic_poly(d);
            num = exact_div_monic(&num, phi_d.coeffs());
        }
        CycPoly {
            order: m,
            coeffs: num,
        }
    }
}

impl fmt::Display for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (e, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{mag}x")?,
                (_, 1) => write!(f, "x^{e}")?,
                _ => write!(f, "{mag}x^{e}")?,
            }
        }
        Ok(())
    }
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dd;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

static CACHE: OnceLock<RwLock<HashMap<usize, Arc<CycPoly>>>> = OnceLock::new();

/// `Phi_m`, computed once per order and shared read-only afterwards.
pub fn cyclotomic_poly(m: usize) -> Arc<CycPoly> {
    assert!(m >= 1, "cyclotomic order must be positive");
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().expect("cache poisoned").get(&m) {
        return Arc::clone(p);
    }
    let p = Arc::new(CycPoly::compute(m));
    let mut w = cache.write().expect("cache poisoned");
    Arc::clone(w.entry(m).or_insert(p))
}

pub(crate) fn trim(p: &mut Vec<Rat>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Reduces a coefficient vector modulo the monic polynomial `phi` in place.
/// Afterwards every coefficient at index `>= deg(phi)` is zero.
pub(crate) fn reduce_in_place(coeffs: &mut [Rat], phi: &CycPoly) {
    let d = phi.degree();
    let pc = phi.coeffs();
    for top in (d..coeffs.len()).rev() {
        if coeffs[top].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut coeffs[top], Rat::zero());
        let shift = top - d;
        for (j, &pj) in pc.iter().enumerate().take(d) {
            if pj != 0 {
                coeffs[shift + j] -= &c * Rat::from_integer(pj.into());
            }
        }
    }
}

/// Quotient and remainder over Q; `b` must be nonzero and trimmed.
fn divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rat::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] / &lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] -= &c * bj;
            }
        }
        quot[i] = c;
    }
    rem.truncate(db);
    trim(&mut rem);
    (quot, rem)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo `phi` by the extended Euclidean algorithm over Q.
/// Returns `None` when `a` is zero modulo `phi`.
pub(crate) fn inverse_mod(a: &[Rat], phi: &CycPoly) -> Option<Vec<Rat>> {
    let mut r0: Vec<Rat> = phi
        .coeffs()
        .iter()
        .map(|&c| Rat::from_integer(c.into()))
        .collect();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    if r1.is_empty() {
        return None;
    }
    let mut s0: Vec<Rat> = Vec::new();
    let mut s1: Vec<Rat> = vec![Rat::one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is the gcd; invertible iff it is a nonzero constant
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    Some(s0.into_iter().map(|x| x / &c).collect())
}
