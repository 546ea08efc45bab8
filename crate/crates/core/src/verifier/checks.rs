//! Check bodies. Each takes the run context and one parameter instance.

use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::{Ctx, Outcome, Params};
use crate::cyclotomic::{gauss_sum, sqrt_carrier, zeta_pow, Cyc, CycField};
use crate::error::{Error, Result};
use crate::permanent::{det_divfree, det_field, per, Mat};
use crate::ring::{
    bernoulli, binomial, double_factorial, factorial, is_prime, jacobi, jacobi_by_count,
    mod_reduce_rat, rat, rat_int, LPoly, Rat, Rationals, Ring, ZMod,
};
use crate::sequences::{self, DerangementVariant, MaskedFamily, SeqName};
use crate::zoo::cyclo::{self, DiffSize};
use crate::zoo::integer::{self, LinearRange, QuadRange};
use crate::zoo::{pow2, qpoly, rational};

fn big(b: BigInt) -> Rat {
    Rat::from_integer(b)
}

fn fact(n: i64) -> Rat {
    big(factorial(n).expect("nonnegative factorial"))
}

fn dfact(n: i64) -> Rat {
    big(double_factorial(n).expect("double factorial"))
}

fn sign(e: i64) -> Rat {
    rat_int(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

fn equal<T: PartialEq + Display>(computed: T, expected: T) -> Outcome {
    Outcome::Compared {
        ok: computed == expected,
        computed: computed.to_string(),
        expected: expected.to_string(),
    }
}

fn property(computed: impl Display, expected: impl Display, ok: bool) -> Outcome {
    Outcome::Compared {
        computed: computed.to_string(),
        expected: expected.to_string(),
        ok,
    }
}

fn residue(r: &Rat, m: u64) -> Result<u64> {
    mod_reduce_rat(r, m)
        .map(|v| v.value())
        .map_err(|e| Error::Internal(format!("reduction mod {m}: {e}")))
}

/// `exact` against `expected` modulo `m`, both reduced to `[0, m)`.
fn congruent(exact: &Rat, expected: &Rat, m: u64) -> Result<Outcome> {
    let c = residue(exact, m)?;
    let e = residue(expected, m)?;
    Ok(Outcome::Congruence {
        exact: exact.to_string(),
        computed: c.to_string(),
        expected: e.to_string(),
        modulus: m.to_string(),
        ok: c == e,
    })
}

fn as_rational(c: &Cyc) -> Result<Rat> {
    c.as_rational()
        .ok_or_else(|| Error::NonRationalResult(c.to_string()))
}

fn odd_prime(p: i64) -> Result<i64> {
    if p >= 3 && is_prime(p as u64) {
        Ok(p)
    } else {
        Err(Error::InvalidArgument(format!(
            "p = {p} is not an odd prime"
        )))
    }
}

fn odd(n: i64, min: i64) -> Result<i64> {
    if n >= min && n % 2 == 1 {
        Ok(n)
    } else {
        Err(Error::InvalidArgument(format!(
            "n = {n} must be odd and >= {min}"
        )))
    }
}

fn cyc_field(n: i64) -> Result<CycField> {
    CycField::new(n as usize)
}

// ---- floor families

pub(super) fn thq_floor(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let m = ctx.matrix(integer::floor_shift(p.int("n")?)?);
    Ok(equal(per(&m)?, BigInt::one()))
}

pub(super) fn thq_qfloor(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = p.int("n")?;
    let m = ctx.matrix(qpoly::qfloor(n)?);
    let expected = &LPoly::constant(pow2(n - 1)) + &LPoly::q();
    Ok(equal(per(&m)?, expected))
}

pub(super) fn thq_det(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = p.int("n")?;
    match p.text("matrix")? {
        "floor" => {
            let m = ctx.matrix(integer::floor_shift(n)?);
            Ok(equal(big(det_divfree(&m)?), sign(n * (n - 1) / 2)))
        }
        "qfloor" => {
            if n < 2 {
                return Ok(Outcome::Skip("needs n > 1".into()));
            }
            let m = ctx.matrix(qpoly::qfloor(n)?);
            let expected = LPoly::monomial(sign(n * (n + 1) / 2 - 1), 1);
            Ok(equal(det_divfree(&m)?, expected))
        }
        other => Err(Error::InvalidArgument(format!("unknown matrix `{other}`"))),
    }
}

// ---- roots of unity

pub(super) fn thper_rootlinear(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = p.int("n")?;
    if n < 1 {
        return Err(Error::InvalidArgument(format!("n = {n} must be positive")));
    }
    let mut rng = ctx.rng("thper.rootlinear", p);
    match p.text("backend")? {
        "cyclotomic" => {
            let xs: Vec<Rat> = (0..n)
                .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
                .collect();
            let m = ctx.matrix(cyclo::root_linear(n, &xs)?);
            let prod: Rat = xs.iter().product();
            let expected = m.ring().rational(fact(n) * (Rat::one() - prod));
            Ok(equal(per(&m)?, expected))
        }
        "finite" => {
            let root = cyclo::fp_backend(n)?;
            let f = root.field();
            let xs: Vec<_> = (0..n)
                .map(|_| f.elem(rng.gen_range(0..root.p as i64)))
                .collect();
            let m = ctx.matrix(cyclo::root_linear_fp(&root, &xs)?);
            let prod = xs.iter().fold(f.elem(1), |acc, x| acc.mul(*x));
            let nf = factorial(n)? % BigInt::from(root.p);
            let nf = f.elem(i64::try_from(&nf).expect("reduced"));
            let expected = nf.mul(f.elem(1).sub(prod));
            let got = per(&m)?;
            Ok(Outcome::Congruence {
                exact: got.value().to_string(),
                computed: got.value().to_string(),
                expected: expected.value().to_string(),
                modulus: root.p.to_string(),
                ok: got.value() == expected.value(),
            })
        }
        other => Err(Error::InvalidArgument(format!("unknown backend `{other}`"))),
    }
}

/// The `point`-th of `n` distinct sample points, `(2 point - n) / 3`.
///
/// Both sides are polynomials in `x` of degree below `n`, so agreement at `n`
/// distinct points proves the identity for that `n`.
pub(super) fn sample_point(n: i64, point: i64) -> Rat {
    rat(2 * point - n, 3)
}

pub(super) fn thper_rootexp(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = p.int("n")?;
    let x = sample_point(n, p.int("point")?);
    let m = ctx.matrix(cyclo::root_exp_shift(n, &x)?);
    let nf = fact(n - 1);
    let mut expected = Rat::zero();
    for k in 0..n {
        expected += &nf / big(binomial(n - 1, k)?) * x.pow(k as i32);
    }
    Ok(equal(as_rational(&per(&m)?)?, expected))
}

// ---- integer congruences

pub(super) fn thper_jxk(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let q = odd_prime(p.int("p")?)?;
    let f = ZMod::new(q as u64)?;
    let mut rng = ctx.rng("thper.jxk", p);
    let xs: Vec<i64> = (0..q - 1).map(|_| rng.gen_range(0..q)).collect();
    let m = ctx.matrix(Mat::from_fn(f, (q - 1) as usize, |j, k| {
        f.elem(j as i64 + 1 + xs[k])
    })?);
    let prod = xs.iter().fold(f.elem(1), |acc, &x| acc.mul(f.elem(x)));
    let expected = f.elem(1).sub(prod);
    let got = per(&m)?;
    Ok(Outcome::Congruence {
        exact: got.value().to_string(),
        computed: got.value().to_string(),
        expected: expected.value().to_string(),
        modulus: q.to_string(),
        ok: got == expected,
    })
}

/// Exact integer permanent reduced mod `modulus`, cross-checked against the
/// same permanent computed directly in `Z/modulus`.
fn per_integer_checked(m: &Mat<crate::ring::Integers>, modulus: u64) -> Result<Rat> {
    let exact = per(m)?;
    let zm = ZMod::new(modulus)?;
    let reduced = m.map(zm, |e| {
        let r = e.clone() % BigInt::from(modulus);
        zm.elem(i64::try_from(&r).expect("reduced entry"))
    })?;
    let direct = per(&reduced)?;
    let exact = big(exact);
    if residue(&exact, modulus)? != direct.value() {
        return Err(Error::Internal(format!(
            "exact permanent {exact} and the Z/{modulus} computation {} disagree",
            direct.value()
        )));
    }
    Ok(exact)
}

fn linear_case(ctx: &Ctx, p: &Params, range: LinearRange) -> Result<(i64, i64, Rat)> {
    let q = odd_prime(p.int("p")?)?;
    let d = p.int("d")?;
    if d.rem_euclid(q) == 0 {
        return Err(Error::InvalidArgument(format!(
            "d = {d} must be nonzero mod {q}"
        )));
    }
    let m = ctx.matrix(integer::linear(q, d, range)?);
    let v = per_integer_checked(&m, (q * q) as u64)?;
    Ok((q, d, v))
}

pub(super) fn thper_jdk1(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let (q, d, v) = linear_case(ctx, p, LinearRange::OneToPMinus1)?;
    let expected = rat_int(d).pow((q - 1) as i32) - rat_int(3) - rat_int(4) * fact(q - 1);
    congruent(&v, &expected, (q * q) as u64)
}

pub(super) fn thper_jdk2(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let (q, d, v) = linear_case(ctx, p, LinearRange::OneToP)?;
    congruent(&v, &(rat(d + 1, 2) * rat_int(q)), (q * q) as u64)
}

pub(super) fn thper_jdk3(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let (q, d, v) = linear_case(ctx, p, LinearRange::ZeroToPMinus1)?;
    congruent(&v, &(-rat(d + 1, 2) * rat_int(q)), (q * q) as u64)
}

pub(super) fn cor_jdk(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let q = odd_prime(p.int("p")?)?;
    let d = p.int("d")?;
    if d.rem_euclid(q) == 0 {
        return Err(Error::InvalidArgument(format!(
            "d = {d} must be nonzero mod {q}"
        )));
    }
    let m = ctx.matrix(integer::linear(q, d, LinearRange::OneToPMinus1)?);
    congruent(&big(per(&m)?), &rat_int(2), q as u64)
}

fn quad_case(ctx: &Ctx, p: &Params, range: QuadRange, min: i64) -> Result<(i64, i64, Rat)> {
    let q = odd_prime(p.int("p")?)?;
    if q < min {
        return Err(Error::InvalidArgument(format!("needs p >= {min}")));
    }
    let d = p.int("d")?;
    if d.rem_euclid(q) == 0 {
        return Err(Error::InvalidArgument(format!(
            "d = {d} must be nonzero mod {q}"
        )));
    }
    let m = ctx.matrix(integer::quad(q, d, range)?);
    Ok((q, d, big(per(&m)?)))
}

pub(super) fn thper_quad(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let (q, d, v) = quad_case(ctx, p, QuadRange::OneToH, 5)?;
    let h = (q - 1) / 2;
    let expected = (rat_int(d).pow(h as i32) + rat_int(1)) * fact(h).pow(3);
    congruent(&v, &expected, (q * q) as u64)
}

pub(super) fn thper_quad0(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let (q, d, v) = quad_case(ctx, p, QuadRange::ZeroToH, 5)?;
    let h = (q - 1) / 2;
    let leg = jacobi(d, q)?;
    let expected = sign(h) * rat(q, 24) * rat_int(d + leg as i64) * fact(h);
    congruent(&v, &expected, (q * q) as u64)
}

pub(super) fn cor_quadmod(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let (q, d, v) = quad_case(ctx, p, QuadRange::OneToH, 3)?;
    let h = (q - 1) / 2;
    let leg = jacobi(d, q)?;
    let expected = sign((q + 1) / 2) * rat_int(1 + leg as i64) * fact(h);
    congruent(&v, &expected, q as u64)
}

// ---- trigonometric closed forms

pub(super) fn cor_sin(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = p.int("n")?;
    let m = ctx.matrix(cyclo::sin_shift(n)?);
    let expected = if n % 2 == 1 {
        sign((n - 1) / 2) * fact(n) / (pow2(n - 2) * rat_int(n + 1))
    } else {
        Rat::zero()
    };
    Ok(equal(as_rational(&per(&m)?)?, expected))
}

pub(super) fn cor_cos(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = p.int("n")?;
    let m = ctx.matrix(cyclo::cos_shift(n)?);
    let mut sum = Rat::zero();
    for k in 0..n {
        sum += Rat::one() / big(binomial(n - 1, k)?);
    }
    let expected = fact(n - 1) / rat_int(-2).pow((n - 1) as i32) * sum;
    Ok(equal(as_rational(&per(&m)?)?, expected))
}

pub(super) fn thnew_cauchyroot(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = p.int("n")?;
    let x = p.rat("x")?;
    let xn = x.pow(n as i32);
    if xn.is_one() {
        return Ok(Outcome::Skip(format!("x^{n} = 1")));
    }
    let m = ctx.matrix(cyclo::cauchy_root(n, &x)?);
    let t = rat_int(n) * &xn / (Rat::one() - &xn);
    let expected: Rat = (1..=n).map(|r| &t + rat_int(r)).product();
    Ok(equal(as_rational(&per(&m)?)?, expected))
}

pub(super) fn thnew_invsumsq(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let q = odd_prime(p.int("p")?)?;
    let m = ctx.matrix(rational::inv_sum_sq(q)?);
    let f = fact((q + 1) / 4);
    let expected = sign((q + 1) / 4) / (rat_int(4) * &f * &f);
    congruent(&per(&m)?, &expected, q as u64)
}

// ---- named sequences

fn seq_name(p: &Params) -> Result<SeqName> {
    p.text("seq")?.parse()
}

/// Integrality (or, for `c'`, the denominator bound) at one index.
pub(super) fn seq_integral(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let name = seq_name(p)?;
    let n = p.int("n")?;
    if name.prime_only() {
        odd_prime(n)?;
    }
    let v = ctx.seq(name, n)?;
    Ok(match &v.denominator_bound {
        Some(b) => property(
            &v.value,
            format!("denominator divides {b}"),
            v.within_bound(),
        ),
        None => property(&v.value, "an integer", v.is_integer),
    })
}

pub(super) fn thjk_cong(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let q = odd_prime(p.int("p")?)?;
    let t = ctx.seq(SeqName::T, q)?;
    let expected = sign((q + 1) / 2) * rat_int(2 * q);
    congruent(&t.value, &expected, (q * q) as u64)
}

pub(super) fn thcos_cong(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let q = odd_prime(p.int("p")?)?;
    let h = (q - 1) / 2;
    // per[cos] = 2^-h c_p and per[sec] = 2^h c'_p
    let value = match p.text("matrix")? {
        "cos" => ctx.seq(SeqName::C, q)?.value * pow2(-h),
        "sec" => ctx.seq(SeqName::CPrime, q)?.value * pow2(h),
        other => return Err(Error::InvalidArgument(format!("unknown matrix `{other}`"))),
    };
    congruent(&value, &fact(h), q as u64)
}

/// `s_p, t_p = (-1)^((p+1)/2)` and `s'_p, t'_p = 1` mod `p`.
pub(super) fn sign_cong(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let q = odd_prime(p.int("n")?)?;
    let name = seq_name(p)?;
    let expected = match name {
        SeqName::S | SeqName::Tn => sign((q + 1) / 2),
        SeqName::SPrime | SeqName::TPrime => Rat::one(),
        other => {
            return Err(Error::InvalidArgument(format!(
                "no congruence for `{other}`"
            )))
        }
    };
    congruent(&ctx.seq(name, q)?.value, &expected, q as u64)
}

/// Tabulated sequence values: `T(n)/n`, `c`, `c'`, `s`, `s'`, `t`, `t'`.
pub(super) const TABLES: &[(SeqName, &[(i64, &str)])] = &[
    (
        SeqName::T,
        &[
            (3, "-1"),
            (5, "13"),
            (7, "-285"),
            (9, "16569"),
            (11, "-1218105"),
            (13, "164741445"),
        ],
    ),
    (
        SeqName::C,
        &[
            (3, "-1"),
            (5, "3"),
            (7, "-1"),
            (9, "-3"),
            (11, "-21"),
            (13, "151"),
            (15, "135"),
            (17, "2529"),
            (19, "-7789"),
            (21, "2835"),
            (23, "-39513"),
        ],
    ),
    (
        SeqName::CPrime,
        &[
            (3, "-1"),
            (5, "3"),
            (7, "-8"),
            (9, "37"),
            (11, "-813"),
            (13, "4727"),
            (15, "-6345"),
            (17, "687714"),
            (19, "-6857783"),
            (21, "1830087/2"),
            (23, "-4513102204"),
        ],
    ),
    (
        SeqName::S,
        &[
            (3, "1"),
            (5, "-1"),
            (7, "1"),
            (9, "9"),
            (11, "1"),
            (13, "51"),
            (15, "45"),
            (17, "-239"),
            (19, "913"),
            (21, "2835"),
            (23, "12145"),
        ],
    ),
    (
        SeqName::SPrime,
        &[
            (3, "1"),
            (5, "1"),
            (7, "-6"),
            (11, "111"),
            (13, "261"),
            (17, "6784"),
            (19, "245101"),
            (23, "-7094142"),
        ],
    ),
    (
        SeqName::Tn,
        &[
            (3, "1"),
            (5, "4"),
            (7, "-34"),
            (9, "90"),
            (11, "4808"),
            (13, "99072"),
            (15, "-24480"),
            (17, "-40060416"),
            (19, "1247716416"),
            (21, "163332288"),
            (23, "-564826623232"),
            (25, "569070720000"),
        ],
    ),
    (
        SeqName::TPrime,
        &[
            (3, "1"),
            (5, "-4"),
            (7, "22"),
            (11, "1816"),
            (13, "-5056"),
            (17, "-2676224"),
            (19, "58473280"),
        ],
    ),
];

pub(super) fn table_value(name: SeqName, n: i64) -> Option<Rat> {
    TABLES
        .iter()
        .find(|(s, _)| *s == name)
        .and_then(|(_, rows)| rows.iter().find(|(i, _)| *i == n))
        .and_then(|(_, v)| crate::zoo::parse_rat(v))
}

pub(super) fn seq_table(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let name = seq_name(p)?;
    let n = p.int("n")?;
    let expected = table_value(name, n)
        .ok_or_else(|| Error::InvalidArgument(format!("no tabulated {name} at {n}")))?;
    let mut value = ctx.seq(name, n)?.value;
    if name == SeqName::T {
        value /= rat_int(n);
    }
    Ok(equal(value, expected))
}

// ---- lemma identities

fn random_rats(rng: &mut impl Rng, n: usize, ok: impl Fn(&[Rat], &Rat) -> bool) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::with_capacity(n);
    while out.len() < n {
        let r = rat(rng.gen_range(-20..=20), rng.gen_range(1..=6));
        if ok(&out, &r) {
            out.push(r);
        }
    }
    out
}

pub(super) fn lem_cauchy(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = p.int("n")? as usize;
    let mut rng = ctx.rng("lem.cauchy", p);
    let xs = random_rats(&mut rng, n, |prev, r| !prev.contains(r));
    let ys = random_rats(&mut rng, n, |prev, r| {
        !prev.contains(r) && xs.iter().all(|x| !(x + r).is_zero())
    });
    let m = ctx.matrix(Mat::from_fn(Rationals, n, |j, k| {
        Rat::one() / (&xs[j] + &ys[k])
    })?);
    let mut num = Rat::one();
    for j in 0..n {
        for k in j + 1..n {
            num *= (&xs[k] - &xs[j]) * (&ys[k] - &ys[j]);
        }
    }
    let mut den = Rat::one();
    for x in &xs {
        for y in &ys {
            den *= x + y;
        }
    }
    Ok(equal(det_field(&m)?, num / den))
}

pub(super) fn lem_borchardt(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = p.int("n")? as usize;
    let mut rng = ctx.rng("lem.borchardt", p);
    let xs = random_rats(&mut rng, n, |prev, r| !prev.contains(r));
    let ys = random_rats(&mut rng, n, |prev, r| !prev.contains(r) && !xs.contains(r));
    let c = ctx.matrix(Mat::from_fn(Rationals, n, |j, k| {
        Rat::one() / (&xs[j] - &ys[k])
    })?);
    let c2 = Mat::from_fn(Rationals, n, |j, k| {
        let d = &xs[j] - &ys[k];
        Rat::one() / (&d * &d)
    })?;
    Ok(equal(det_field(&c2)?, det_field(&c)? * per(&c)?))
}

pub(super) fn lem_circulant(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = p.int("n")?;
    let mut rng = ctx.rng("lem.circulant", p);
    let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
    let f = cyc_field(n)?;
    let m = ctx.matrix(Mat::from_fn(f.clone(), n as usize, |j, k| {
        Cyc::integer(n as usize, a[(k + n as usize - j) % n as usize])
    })?);
    let mut expected = f.one();
    for r in 0..n {
        let mut s = f.zero();
        for (k, &ak) in a.iter().enumerate() {
            s = s.add(&zeta_pow(n as usize, k as i64 * r).scale(&rat_int(ak)));
        }
        expected = expected.mul(&s);
    }
    Ok(equal(det_field(&m)?, expected))
}

pub(super) fn lem_oneplus(_ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = odd(p.int("n")?, 3)?;
    let m = n as usize;
    let prod = (1..n).fold(Cyc::integer(m, 1), |acc, k| {
        acc.mul(&Cyc::integer(m, 1).add(&zeta_pow(m, k)))
    });
    Ok(equal(prod, Cyc::integer(m, 1)))
}

pub(super) fn lem_onezeta(_ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let q = odd_prime(p.int("p")?)?;
    let m = q as usize;
    let prod = (1..q).fold(Cyc::integer(m, 1), |acc, k| {
        acc.mul(&Cyc::integer(m, 1).sub(&zeta_pow(m, k)))
    });
    Ok(equal(prod, Cyc::integer(m, q)))
}

pub(super) fn lem_gauss(_ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = odd(p.int("n")?, 3)?;
    let g = gauss_sum(n as usize)?;
    let h = (n - 1) / 2;
    Ok(equal(
        g.mul(&g),
        Cyc::rational(n as usize, sign(h) * rat_int(n)),
    ))
}

pub(super) fn lem_half(_ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = odd(p.int("n")?, 3)?;
    let m = n as usize;
    let h = (n - 1) / 2;
    let prod = (1..=h).fold(Cyc::integer(m, 1), |acc, k| {
        acc.mul(&Cyc::integer(m, 1).sub(&zeta_pow(m, k)))
    });
    // i^h sqrt(n) is the sign-corrected Gauss sum
    let e = ((n + 1) / 2) * ((n * n - 1) / 8);
    let expected = sqrt_carrier(m)?
        .mul(&zeta_pow(m, e))
        .scale(&rat_int(jacobi(-2, n)? as i64));
    Ok(equal(prod, expected))
}

/// Elementary symmetric sums of `zeta^1, ..., zeta^top`, as `e_1, ..., e_top`.
fn root_symmetric_sums(n: usize, top: usize) -> Vec<Cyc> {
    let mut e = vec![Cyc::integer(n, 1)];
    for i in 1..=top {
        let z = zeta_pow(n, i as i64);
        let mut next = e.clone();
        next.push(Cyc::zero(n));
        for k in 1..next.len() {
            next[k] = next[k].add(&e[k - 1].mul(&z));
        }
        e = next;
    }
    e.split_off(1)
}

fn join<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub(super) fn lem_sigma(_ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = p.int("n")?;
    if n < 1 {
        return Err(Error::InvalidArgument(format!("n = {n} must be positive")));
    }
    let m = n as usize;
    let (got, expected): (Vec<Cyc>, Vec<Cyc>) = match p.text("range")? {
        "1..n" => {
            let got = root_symmetric_sums(m, m);
            let expected = (1..=n)
                .map(|k| {
                    let v = if k < n {
                        0
                    } else if n % 2 == 1 {
                        1
                    } else {
                        -1
                    };
                    Cyc::integer(m, v)
                })
                .collect();
            (got, expected)
        }
        "1..n-1" => {
            let got = root_symmetric_sums(m, m - 1);
            let expected = (1..n)
                .map(|k| Cyc::integer(m, if k % 2 == 0 { 1 } else { -1 }))
                .collect();
            (got, expected)
        }
        other => return Err(Error::InvalidArgument(format!("unknown range `{other}`"))),
    };
    let ok = got == expected;
    Ok(property(join(&got), join(&expected), ok))
}

pub(super) fn lem_sym(_ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let q = odd_prime(p.int("p")?)?;
    let (top, power, last): (i64, u32, i64) = match p.text("power")? {
        "1" => (q - 1, 1, -1),
        "2" => ((q - 1) / 2, 2, if ((q + 1) / 2) % 2 == 0 { 1 } else { -1 }),
        other => return Err(Error::InvalidArgument(format!("unknown power `{other}`"))),
    };
    // e_k of 1^power, ..., top^power, mod p
    let mut e = vec![1i64];
    for i in 1..=top {
        let v = i.pow(power) % q;
        let mut next = e.clone();
        next.push(0);
        for k in 1..next.len() {
            next[k] = (next[k] + e[k - 1] * v) % q;
        }
        e = next;
    }
    let got: Vec<i64> = e[1..].to_vec();
    let expected: Vec<i64> = (1..=top)
        .map(|k| if k < top { 0 } else { last.rem_euclid(q) })
        .collect();
    let ok = got == expected;
    Ok(property(join(&got), join(&expected), ok))
}

fn units(n: i64) -> impl Iterator<Item = i64> {
    (1..n).filter(move |a| num_integer::gcd(*a, n) == 1)
}

pub(super) fn lem_jacobi(_ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = odd(p.int("n")?, 3)?;
    let got: Vec<i32> = units(n).map(|a| jacobi(a, n)).collect::<Result<_>>()?;
    let expected: Vec<i32> = units(n)
        .map(|a| jacobi_by_count(a, n))
        .collect::<Result<_>>()?;
    let ok = got == expected;
    Ok(property(join(&got), join(&expected), ok))
}

pub(super) fn lem_galois(_ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = odd(p.int("n")?, 3)?;
    let g = sqrt_carrier(n as usize)?;
    let mut got = Vec::new();
    let mut expected = Vec::new();
    for a in units(n) {
        let image = g.galois(a)?;
        // image is +g or -g
        let s = if image == g {
            1
        } else if image == g.neg() {
            -1
        } else {
            0
        };
        got.push(s);
        expected.push(jacobi(a, n)?);
    }
    let ok = got == expected;
    Ok(property(join(&got), join(&expected), ok))
}

pub(super) fn det_sec2(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = odd(p.int("n")?, 1)?;
    let m = ctx.matrix(cyclo::sec2_diff(n)?);
    let nd = dfact(n);
    let expected = rat_int(n).pow((n - 1) as i32) * &nd * &nd;
    Ok(equal(as_rational(&det_field(&m)?)?, expected))
}

pub(super) fn det_tan2(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = odd(p.int("n")?, 1)?;
    let m = ctx.matrix(cyclo::tan2_diff(n)?);
    let nd = dfact(n);
    let expected = rat_int(n - 1) * rat_int(n).pow((n - 2) as i32) * &nd * &nd;
    Ok(equal(as_rational(&det_field(&m)?)?, expected))
}

// ---- conjectures and remarks

pub(super) fn conj_qdet(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = odd(p.int("n")?, 3)?;
    let a = p.int("a")?;
    let j = rat_int(jacobi(a * (a + 1), n)? as i64);
    match p.text("matrix")? {
        "floor" => {
            let m = ctx.matrix(qpoly::qfloor_gen(a, n)?);
            let expected = LPoly::monomial(-j, (1 - 3 * n) / 2);
            Ok(equal(det_divfree(&m)?, expected))
        }
        "ceil" => {
            let m = ctx.matrix(qpoly::qceil_gen(a, n)?);
            let expected = LPoly::monomial(j, (n - 1) / 2);
            Ok(equal(det_divfree(&m)?, expected))
        }
        other => Err(Error::InvalidArgument(format!("unknown matrix `{other}`"))),
    }
}

pub(super) fn conj_bernoulli(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = p.int("n")?;
    let m = ctx.matrix(integer::floor_2jk(n)?);
    let expected = rat_int(2) * (pow2(n + 1) - rat_int(1)) * bernoulli((n + 1) as u32);
    Ok(equal(big(per(&m)?), expected))
}

pub(super) fn conj_absjk(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let q = odd_prime(p.int("p")?)?;
    let shift = p.int("shift")?;
    let expected = match shift {
        0 => rat(-1, 2),
        1 => rat(1, 2),
        _ => return Err(Error::InvalidArgument("shift must be 0 or 1".into())),
    };
    let m = ctx.matrix(integer::abs_diff(q, shift)?);
    congruent(&big(per(&m)?), &expected, q as u64)
}

fn masked_prime(p: &Params) -> Result<(i64, i64)> {
    let q = odd_prime(p.int("p")?)?;
    if q <= 3 {
        return Err(Error::InvalidArgument("needs p > 3".into()));
    }
    Ok((q, p.int("a")?))
}

/// At `p = 5` the matrix result is compared with direct enumeration.
fn cross_oracle(q: i64, a: i64, signed: bool, family: MaskedFamily, value: &Rat) -> Result<()> {
    if q != 5 {
        return Ok(());
    }
    let brute = sequences::masked_sum_bruteforce(q, a, signed, family)?;
    if &brute != value {
        return Err(Error::Internal(format!(
            "matrix value {value} differs from enumeration {brute}"
        )));
    }
    Ok(())
}

pub(super) fn conj_maskper(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let (q, a) = masked_prime(p)?;
    if a.rem_euclid(q) == 0 {
        return Err(Error::InvalidArgument(format!(
            "a = {a} must be nonzero mod {q}"
        )));
    }
    let m = ctx.matrix(rational::recip_aj_k(q, a)?);
    let v = per(&m)?;
    cross_oracle(q, a, false, MaskedFamily::AJplusK, &v)?;
    congruent(&v, &Rat::zero(), (q * q) as u64)
}

pub(super) fn conj_maskdet(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let (q, a) = masked_prime(p)?;
    let m = ctx.matrix(rational::recip_ajk(q, a)?);
    let core = (rat_int(3) - rat_int(a).pow((q - 1) as i32)) / rat_int(2);
    let (v, expected, signed) = match p.text("sum")? {
        "det" => {
            let leg = jacobi(a, q)?;
            (det_field(&m)?, rat_int(leg as i64) * core, true)
        }
        "per" => {
            if a.rem_euclid(q) == 0 {
                return Err(Error::InvalidArgument(format!(
                    "a = {a} must be nonzero mod {q}"
                )));
            }
            (per(&m)?, sign((q + 1) / 2) * core, false)
        }
        other => return Err(Error::InvalidArgument(format!("unknown sum `{other}`"))),
    };
    cross_oracle(q, a, signed, MaskedFamily::AplusJK, &v)?;
    congruent(&v, &expected, (q * q) as u64)
}

pub(super) fn conj_sqdiff(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let q = odd_prime(p.int("p")?)?;
    if q % 4 != 1 {
        return Err(Error::InvalidArgument(format!("p = {q} must be 1 mod 4")));
    }
    let m = ctx.matrix(rational::inv_sqdiff(q)?);
    let f = fact((q - 1) / 4);
    congruent(&per(&m)?, &(Rat::one() / (&f * &f)), q as u64)
}

pub(super) fn conj_derange(_ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = p.int("n")?;
    let h = (n - 1) / 2;
    let (variant, expected) = match p.text("sum")? {
        "unsigned" if n % 2 == 0 => {
            let d = dfact(n - 1);
            (DerangementVariant::UnsignedRecip, &d * &d / pow2(n))
        }
        "unsigned" => {
            let f = fact(h);
            (DerangementVariant::UnsignedRecip, &f * &f / rat_int(n))
        }
        "signed" => {
            let f = fact(h);
            (
                DerangementVariant::SignedRecip,
                sign(h) * &f * &f / rat_int(n),
            )
        }
        "cot_ratio" => {
            let d = dfact(n - 2);
            (
                DerangementVariant::SignedCotRatio,
                sign(h) * &d * &d / rat_int(n),
            )
        }
        other => return Err(Error::InvalidArgument(format!("unknown sum `{other}`"))),
    };
    Ok(equal(sequences::derangement_sum(n, variant)?, expected))
}

pub(super) fn conj_csign(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let q = odd_prime(p.int("n")?)?;
    let name = seq_name(p)?;
    let v = ctx.seq(name, q)?.value * sign((q - 1) / 2);
    Ok(match name {
        SeqName::C => {
            let ok = v.is_integer() && v.is_positive() && v.numer().bit(0);
            property(&v, "a positive odd integer", ok)
        }
        SeqName::CPrime => property(&v, "a positive integer", v.is_integer() && v.is_positive()),
        other => {
            return Err(Error::InvalidArgument(format!(
                "no sign claim for `{other}`"
            )))
        }
    })
}

fn divisible_by_index(ctx: &Ctx, name: SeqName, n: i64) -> Result<Outcome> {
    if is_prime(n as u64) {
        return Err(Error::InvalidArgument(format!("n = {n} must be composite")));
    }
    let v = ctx.seq(name, odd(n, 3)?)?.value;
    congruent(&v, &Rat::zero(), n as u64)
}

fn negative_iff(v: &Rat, predicate: bool, rule: &str) -> Outcome {
    let expected = if predicate { "negative" } else { "positive" };
    property(
        v,
        format!("{expected} ({rule})"),
        v.is_negative() == predicate && !v.is_zero(),
    )
}

pub(super) fn conj_ssign(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = p.int("n")?;
    match seq_name(p)? {
        SeqName::S if p.get("claim") == Some("divisible") => divisible_by_index(ctx, SeqName::S, n),
        SeqName::S => {
            let q = odd_prime(n)?;
            let v = ctx.seq(SeqName::S, q)?.value;
            Ok(negative_iff(&v, q % 12 == 5, "negative iff p = 5 mod 12"))
        }
        SeqName::SPrime => {
            let q = odd_prime(n)?;
            let v = ctx.seq(SeqName::SPrime, q)?.value;
            Ok(negative_iff(&v, q % 8 == 7, "negative iff p = 7 mod 8"))
        }
        other => Err(Error::InvalidArgument(format!(
            "no sign claim for `{other}`"
        ))),
    }
}

pub(super) fn conj_tsign(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = p.int("n")?;
    match seq_name(p)? {
        SeqName::Tn if p.get("claim") == Some("divisible") => {
            divisible_by_index(ctx, SeqName::Tn, n)
        }
        SeqName::Tn => {
            let q = odd_prime(n)?;
            let v = ctx.seq(SeqName::Tn, q)?.value * rat_int(jacobi(2, q)? as i64);
            Ok(property(&v, "(2/p) t_p negative", v.is_negative()))
        }
        SeqName::TPrime => {
            let q = odd_prime(n)?;
            let v = ctx.seq(SeqName::TPrime, q)?.value * rat_int(jacobi(-1, q)? as i64);
            Ok(property(&v, "(-1/p) t'_p negative", v.is_negative()))
        }
        other => Err(Error::InvalidArgument(format!(
            "no sign claim for `{other}`"
        ))),
    }
}

pub(super) fn rem_qdetabs(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = p.int("n")?;
    if n < 2 {
        return Err(Error::InvalidArgument("needs n > 1".into()));
    }
    let one_plus_q = &LPoly::one() + &LPoly::q();
    match p.text("matrix")? {
        "qabs_shift" => {
            let m = ctx.matrix(qpoly::qabs(n, 1)?);
            Ok(equal(det_divfree(&m)?, one_plus_q.pow((n - 2) as u32)))
        }
        "qabs" => {
            let m = ctx.matrix(qpoly::qabs(n, 0)?);
            let c = LPoly::constant(sign(n - 1) * rat_int(n - 1));
            Ok(equal(
                det_divfree(&m)?,
                &c * &one_plus_q.pow((n - 2) as u32),
            ))
        }
        "abs" => {
            let m = ctx.matrix(integer::abs_diff(n, 0)?);
            let expected = sign(n - 1) * rat_int(n - 1) * pow2(n - 2);
            Ok(equal(big(det_divfree(&m)?), expected))
        }
        other => Err(Error::InvalidArgument(format!("unknown matrix `{other}`"))),
    }
}

pub(super) fn rem_perhalf(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = odd(p.int("n")?, 3)?;
    let m = ctx.matrix(cyclo::cauchy_root(n, &rat_int(-1))?);
    let d = dfact(n);
    let expected = sign((n - 1) / 2) * &d * &d / (pow2(n) * rat_int(n));
    Ok(equal(as_rational(&per(&m)?)?, expected))
}

pub(super) fn rem_cp(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = p.int("n")?;
    let m = ctx.matrix(cyclo::recip_root_diff(n, DiffSize::Full)?);
    let expected = if n % 2 == 0 {
        let d = dfact(n - 1);
        sign(n / 2) * &d * &d / pow2(n)
    } else {
        Rat::zero()
    };
    Ok(equal(as_rational(&det_field(&m)?)?, expected))
}

pub(super) fn rem_tguess(ctx: &Ctx, p: &Params) -> Result<Outcome> {
    let n = odd(p.int("n")?, 3)?;
    let v = ctx.seq(SeqName::T, n)?.value * sign((n - 1) / 2) / rat_int(n);
    let ok = v.is_integer() && v.is_positive() && (v.numer() % 4u32) == BigInt::one();
    Ok(property(&v, "a positive integer = 1 mod 4", ok))
}
