//! Exact arithmetic in the cyclotomic field `Q(zeta_m)`.
//!
//! Elements are stored as `sum_e c_e zeta^e` on the full exponent lattice
//! `0..m`, i.e. modulo `x^m - 1`. Multiplication is cyclic convolution, which
//! keeps monomial-heavy matrix arithmetic cheap. The canonical form (remainder
//! modulo `Phi_m`, degree below `phi(m)`) is only computed for equality,
//! rational recognition and inversion.
//!
//! Square roots never appear as floating values. For odd `n` the element
//! `(-1)^floor(n/4) * g`, with `g = sum_x zeta^(x^2)` the quadratic Gauss sum,
//! equals `i^((n-1)/2) * sqrt(n)` under the embedding `zeta = e^(2 pi i / n)`.
//! Every `sqrt(n)` is routed through that element (see [`sqrt_carrier`]), which
//! pins the branch of `sqrt(n)` to the positive real one.

mod fq;
mod poly;

pub use fq::{find_fq_root, FqRoot};
pub use poly::{cyclotomic_poly, CycPoly};

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};
use crate::permanent::Mat;
use crate::ring::{jacobi, rat_int, Field, Rat, Ring};
use crate::ring::{over_common_denominator, ratio};

/// An element of `Q(zeta_m)`.
#[derive(Clone, Debug)]
pub struct Cyc {
    order: usize,
    coeffs: Vec<Rat>,
}

impl Cyc {
    pub fn zero(m: usize) -> Cyc {
        assert!(m >= 1, "cyclotomic order must be positive");
        Cyc {
            order: m,
            coeffs: vec![Rat::zero(); m],
        }
    }

    pub fn rational(m: usize, r: Rat) -> Cyc {
        let mut z = Cyc::zero(m);
        z.coeffs[0] = r;
        z
    }

    pub fn integer(m: usize, v: i64) -> Cyc {
        Cyc::rational(m, rat_int(v))
    }

    /// Builds an element from coefficients on `zeta^0, zeta^1, ...`; exponents
    /// at or beyond `m` wrap around.
    pub fn from_coeffs(m: usize, coeffs: &[Rat]) -> Cyc {
        let mut z = Cyc::zero(m);
        for (e, c) in coeffs.iter().enumerate() {
            z.coeffs[e % m] += c;
        }
        z
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Raw coefficients on the exponent lattice (not canonical).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    fn same_order(&self, other: &Cyc) {
        assert_eq!(
            self.order, other.order,
            "cyclotomic elements of different orders"
        );
    }

    pub fn add(&self, other: &Cyc) -> Cyc {
        self.same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Cyc {
            order: self.order,
            coeffs,
        }
    }

    pub fn neg(&self) -> Cyc {
        Cyc {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Cyc) -> Cyc {
        self.add(&other.neg())
    }

    /// Cyclic convolution: `zeta^a * zeta^b = zeta^((a + b) mod m)`, done on
    /// integer numerators over a common denominator.
    pub fn mul(&self, other: &Cyc) -> Cyc {
        self.same_order(other);
        let m = self.order;
        let (a, da) = over_common_denominator(self.coeffs.iter());
        let (b, db) = over_common_denominator(other.coeffs.iter());
        let mut out = vec![BigInt::zero(); m];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = if i + j >= m { i + j - m } else { i + j };
                out[k] += x * y;
            }
        }
        let den = da * db;
        Cyc {
            order: m,
            coeffs: out.into_iter().map(|c| ratio(c, &den)).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Cyc {
        Cyc {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Cyc {
        let mut base = self.clone();
        let mut acc = Cyc::integer(self.order, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Remainder modulo `Phi_m`, padded back to length `m`.
    pub fn canonical(&self) -> Cyc {
        let phi = cyclotomic_poly(self.order);
        let mut coeffs = self.coeffs.clone();
        poly::reduce_in_place(&mut coeffs, &phi);
        Cyc {
            order: self.order,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.canonical().coeffs.iter().all(Zero::is_zero)
    }

    /// `w` with `self * w = 1`, via the extended Euclidean algorithm modulo `Phi_m`.
    pub fn inverse(&self) -> Result<Cyc> {
        let phi = cyclotomic_poly(self.order);
        let c = self.canonical();
        let inv =
            poly::inverse_mod(&c.coeffs[..phi.degree()], &phi).ok_or(Error::DivisionByZero)?;
        Ok(Cyc::from_coeffs(self.order, &inv))
    }

    /// The Galois automorphism `sigma_a: zeta -> zeta^a`.
    pub fn galois(&self, a: i64) -> Result<Cyc> {
        let m = self.order as i64;
        if a.gcd(&m) != 1 {
            return invalid(format!("galois: {a} is not coprime to {m}"));
        }
        let a = a.rem_euclid(m) as usize;
        let mut out = Cyc::zero(self.order);
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.coeffs[(a * e) % self.order] += c;
            }
        }
        Ok(out)
    }

    /// The rational value, if the canonical form is a constant.
    pub fn as_rational(&self) -> Option<Rat> {
        let c = self.canonical();
        if c.coeffs[1..].iter().all(Zero::is_zero) {
            Some(c.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Floating value at `zeta = e^(2 pi i / m)`, rounded to `digits` decimal
    /// digits (capped at what `f64` carries). Diagnostic only.
    pub fn embed_complex(&self, digits: u32) -> Complex64 {
        let m = self.order as f64;
        let mut z = Complex64::new(0.0, 0.0);
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c.to_f64().unwrap_or(f64::NAN);
            z += Complex64::from_polar(v, std::f64::consts::TAU * e as f64 / m);
        }
        let digits = digits.min(15) as i32;
        let s = 10f64.powi(digits);
        Complex64::new((z.re * s).round() / s, (z.im * s).round() / s)
    }

    /// Least common multiple of the coefficient denominators of the canonical form.
    pub(crate) fn denominator_lcm(&self) -> num_bigint::BigInt {
        self.coeffs
            .iter()
            .fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Cyc) -> bool {
        self.order == other.order && self.sub(other).is_zero()
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonical();
        let mut first = true;
        for (e, coef) in c.coeffs.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let negative = coef.is_negative();
            let mag = coef.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (_, true) => write!(f, "z^{e}")?,
                (_, false) => write!(f, "{mag}*z^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `zeta_m^e` with the exponent reduced modulo `m`.
pub fn zeta_pow(m: usize, e: i64) -> Cyc {
    let mut z = Cyc::zero(m);
    z.coeffs[e.rem_euclid(m as i64) as usize] = Rat::one();
    z
}

/// Quadratic Gauss sum `sum_{x=0}^{m-1} zeta^(x^2)` for odd `m >= 3`.
///
/// Satisfies `g^2 = (-1)^((m-1)/2) m`.
pub fn gauss_sum(m: usize) -> Result<Cyc> {
    if m < 3 || m.is_multiple_of(2) {
        return invalid(format!("gauss_sum: order {m} must be odd and >= 3"));
    }
    let mut z = Cyc::zero(m);
    for x in 0..m {
        z.coeffs[(x * x) % m] += Rat::one();
    }
    Ok(z)
}

/// The element `i^((n-1)/2) * sqrt(n)` of `Q(zeta_n)`, i.e.
/// `(-1)^floor(n/4) * gauss_sum(n)`, for odd `n >= 3`.
pub fn sqrt_carrier(n: usize) -> Result<Cyc> {
    let g = gauss_sum(n)?;
    Ok(if (n / 4).is_multiple_of(2) {
        g
    } else {
        g.neg()
    })
}

/// Checks `sigma_a(g) = (a/n) g` for the Gauss sum of odd order `n`.
pub fn gauss_galois_sign(n: usize, a: i64) -> Result<i32> {
    let g = gauss_sum(n)?;
    let s = g.galois(a)?;
    let j = jacobi(a, n as i64)?;
    if s == g.scale(&rat_int(j as i64)) {
        Ok(j)
    } else {
        Err(Error::Internal(format!(
            "sigma_{a} does not act on the Gauss sum of order {n} by its Jacobi symbol"
        )))
    }
}

/// The field `Q(zeta_m)` as a [`Ring`] context.
#[derive(Clone, Debug)]
pub struct CycField {
    order: usize,
    phi: Arc<CycPoly>,
}

impl CycField {
    pub fn new(m: usize) -> Result<CycField> {
        if m == 0 {
            return invalid("cyclotomic order must be positive");
        }
        Ok(CycField {
            order: m,
            phi: cyclotomic_poly(m),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.phi.degree()
    }

    pub fn zeta_pow(&self, e: i64) -> Cyc {
        zeta_pow(self.order, e)
    }

    pub fn rational(&self, r: Rat) -> Cyc {
        Cyc::rational(self.order, r)
    }
}

impl PartialEq for CycField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Ring for CycField {
    type Elem = Cyc;

    fn name(&self) -> String {
        format!("Q(zeta_{})", self.order)
    }
    fn zero(&self) -> Cyc {
        Cyc::zero(self.order)
    }
    fn one(&self) -> Cyc {
        Cyc::integer(self.order, 1)
    }
    fn add(&self, a: &Cyc, b: &Cyc) -> Cyc {
        a.add(b)
    }
    fn neg(&self, a: &Cyc) -> Cyc {
        a.neg()
    }
    fn mul(&self, a: &Cyc, b: &Cyc) -> Cyc {
        a.mul(b)
    }
    fn sub(&self, a: &Cyc, b: &Cyc) -> Cyc {
        a.sub(b)
    }
    fn equal(&self, a: &Cyc, b: &Cyc) -> bool {
        a == b
    }
    fn is_zero(&self, a: &Cyc) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, v: i64) -> Cyc {
        Cyc::integer(self.order, v)
    }
    fn contains(&self, a: &Cyc) -> bool {
        a.order == self.order
    }
    fn normalize(&self, a: Cyc) -> Cyc {
        a.canonical()
    }
    fn render(&self, a: &Cyc) -> String {
        a.to_string()
    }
    fn permanent(&self, m: &Mat<Self>) -> Result<Cyc> {
        crate::permanent::per_cyclotomic(m)
    }
}

impl Field for CycField {
    fn inv(&self, a: &Cyc) -> Result<Cyc> {
        a.inverse()
    }
}
