//! Constructors for the structured matrix families.
//!
//! Every family has a typed constructor in one of the submodules and a
//! textual form `family:key=value,...` (see [`FamilySpec`]) dispatched by
//! [`build`]. Formula indices are 1-based unless a `range` parameter says
//! otherwise; matrices themselves are 0-based.
//!
//! Trigonometric families are built from roots of unity. The factor relating
//! the trigonometric permanent to the permanent of the built matrix is returned
//! as a [`Scale`] rather than multiplied into the entries.

pub mod cyclo;
pub mod integer;
pub mod qpoly;
pub mod rational;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::cyclotomic::CycField;
use crate::error::{Error, Result};
use crate::permanent::Mat;
use crate::ring::{is_prime, Integers, LaurentRing, Rat, Rationals};

/// Matrix family identifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    FloorShift,
    Linear,
    Quad,
    Abs,
    AbsShift,
    Floor2jk,
    QFloor,
    QAbs,
    QAbsShift,
    QFloorGen,
    QCeilGen,
    RootLinear,
    RootExpShift,
    CauchyRoot,
    TanShift,
    SinShift,
    CosShift,
    Cos2,
    Sec2,
    Sin2,
    Csc2,
    TanJk,
    CotJk,
    Sec2Diff,
    Tan2Diff,
    RecipRootDiff,
    CotRatio,
    InvSumSq,
    RecipAjk,
    RecipAjK,
    InvSqDiff,
}

/// Scalar ring a family is built over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingKind {
    Integer,
    QPoly,
    Cyclotomic,
    Rational,
}

impl Family {
    pub const ALL: [Family; 31] = [
        Family::FloorShift,
        Family::Linear,
        Family::Quad,
        Family::Abs,
        Family::AbsShift,
        Family::Floor2jk,
        Family::QFloor,
        Family::QAbs,
        Family::QAbsShift,
        Family::QFloorGen,
        Family::QCeilGen,
        Family::RootLinear,
        Family::RootExpShift,
        Family::CauchyRoot,
        Family::TanShift,
        Family::SinShift,
        Family::CosShift,
        Family::Cos2,
        Family::Sec2,
        Family::Sin2,
        Family::Csc2,
        Family::TanJk,
        Family::CotJk,
        Family::Sec2Diff,
        Family::Tan2Diff,
        Family::RecipRootDiff,
        Family::CotRatio,
        Family::InvSumSq,
        Family::RecipAjk,
        Family::RecipAjK,
        Family::InvSqDiff,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::FloorShift => "floor_shift",
            Family::Linear => "linear",
            Family::Quad => "quad",
            Family::Abs => "abs",
            Family::AbsShift => "abs_shift",
            Family::Floor2jk => "floor_2jk",
            Family::QFloor => "qfloor",
            Family::QAbs => "qabs",
            Family::QAbsShift => "qabs_shift",
            Family::QFloorGen => "qfloor_gen",
            Family::QCeilGen => "qceil_gen",
            Family::RootLinear => "root_linear",
            Family::RootExpShift => "root_exp_shift",
            Family::CauchyRoot => "cauchy_root",
            Family::TanShift => "tan_shift",
            Family::SinShift => "sin_shift",
            Family::CosShift => "cos_shift",
            Family::Cos2 => "cos2",
            Family::Sec2 => "sec2",
            Family::Sin2 => "sin2",
            Family::Csc2 => "csc2",
            Family::TanJk => "tan_jk",
            Family::CotJk => "cot_jk",
            Family::Sec2Diff => "sec2_diff",
            Family::Tan2Diff => "tan2_diff",
            Family::RecipRootDiff => "recip_root_diff",
            Family::CotRatio => "cot_ratio",
            Family::InvSumSq => "inv_sum_sq",
            Family::RecipAjk => "recip_ajk",
            Family::RecipAjK => "recip_aj_k",
            Family::InvSqDiff => "inv_sqdiff",
        }
    }

    pub fn ring(self) -> RingKind {
        use Family::*;
        match self {
            FloorShift | Linear | Quad | Abs | AbsShift | Floor2jk => RingKind::Integer,
            QFloor | QAbs | QAbsShift | QFloorGen | QCeilGen => RingKind::QPoly,
            InvSumSq | RecipAjk | RecipAjK | InvSqDiff => RingKind::Rational,
            _ => RingKind::Cyclotomic,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        let key = s.trim().to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown matrix family `{s}`")))
    }
}

/// A parameter value in a [`FamilySpec`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Int(i64),
    Rat(Rat),
    List(Vec<Rat>),
    Text(String),
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(v) => write!(f, "{v}"),
            Param::Rat(r) => write!(f, "{r}"),
            Param::List(xs) => {
                let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join(";"))
            }
            Param::Text(t) => f.write_str(t),
        }
    }
}

impl Param {
    fn parse(s: &str) -> Param {
        let s = s.trim();
        if let Ok(v) = s.parse::<i64>() {
            return Param::Int(v);
        }
        if let Some(r) = parse_rat(s) {
            return Param::Rat(r);
        }
        if s.contains(';') {
            let items: Option<Vec<Rat>> = s.split(';').map(parse_rat).collect();
            if let Some(items) = items {
                return Param::List(items);
            }
        }
        Param::Text(s.to_string())
    }
}

/// Parses `a` or `a/b` with integer `a`, nonzero `b`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<num_bigint::BigInt>().ok().map(Rat::from_integer),
        Some((a, b)) => {
            let a = a.trim().parse::<num_bigint::BigInt>().ok()?;
            let b = b.trim().parse::<num_bigint::BigInt>().ok()?;
            (!b.is_zero()).then(|| Rat::new(a, b))
        }
    }
}

/// A family together with its parameters; textual form `family:key=value,...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    params: BTreeMap<String, Param>,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        FamilySpec {
            family,
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: Param) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn int_param(self, key: &str, v: i64) -> Self {
        self.with(key, Param::Int(v))
    }

    pub fn rat_param(self, key: &str, v: Rat) -> Self {
        self.with(key, Param::Rat(v))
    }

    pub fn text_param(self, key: &str, v: &str) -> Self {
        self.with(key, Param::Text(v.to_string()))
    }

    pub fn params(&self) -> &BTreeMap<String, Param> {
        &self.params
    }

    fn missing(&self, key: &str) -> Error {
        Error::InvalidArgument(format!("{}: missing parameter `{key}`", self.family))
    }

    fn wrong(&self, key: &str, what: &str) -> Error {
        Error::InvalidArgument(format!("{}: parameter `{key}` must be {what}", self.family))
    }

    pub fn int(&self, key: &str) -> Result<i64> {
        match self.params.get(key) {
            Some(Param::Int(v)) => Ok(*v),
            Some(_) => Err(self.wrong(key, "an integer")),
            None => Err(self.missing(key)),
        }
    }

    pub fn rat(&self, key: &str) -> Result<Rat> {
        match self.params.get(key) {
            Some(Param::Int(v)) => Ok(Rat::from_integer((*v).into())),
            Some(Param::Rat(r)) => Ok(r.clone()),
            Some(_) => Err(self.wrong(key, "a rational number")),
            None => Err(self.missing(key)),
        }
    }

    pub fn list(&self, key: &str) -> Result<Vec<Rat>> {
        match self.params.get(key) {
            Some(Param::List(xs)) => Ok(xs.clone()),
            Some(Param::Int(_) | Param::Rat(_)) => Ok(vec![self.rat(key)?]),
            Some(_) => Err(self.wrong(key, "a `;`-separated list of rationals")),
            None => Err(self.missing(key)),
        }
    }

    /// A textual parameter, or `default` when absent.
    pub fn text(&self, key: &str, default: &str) -> Result<String> {
        match self.params.get(key) {
            Some(Param::Text(t)) => Ok(t.clone()),
            Some(p) => Ok(p.to_string()),
            None => Ok(default.to_string()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        for (i, (k, v)) in self.params.iter().enumerate() {
            write!(f, "{}{k}={v}", if i == 0 { ':' } else { ',' })?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<FamilySpec> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut spec = FamilySpec::new(name.parse()?);
        for item in rest.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| {
                Error::InvalidArgument(format!("expected key=value, got `{item}`"))
            })?;
            spec.params.insert(k.trim().to_string(), Param::parse(v));
        }
        Ok(spec)
    }
}

/// `trig permanent = 2^two * i^i_pow * per(matrix)`; `i_pow` is taken mod 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Scale {
    pub two: i64,
    pub i_pow: i64,
}

impl Scale {
    pub const ONE: Scale = Scale { two: 0, i_pow: 0 };

    pub fn new(two: i64, i_pow: i64) -> Scale {
        Scale {
            two,
            i_pow: i_pow.rem_euclid(4),
        }
    }

    /// The factor as a rational, when the power of `i` is even.
    pub fn as_rational(self) -> Option<Rat> {
        if self.i_pow % 2 != 0 {
            return None;
        }
        let sign = if self.i_pow == 2 {
            -Rat::one()
        } else {
            Rat::one()
        };
        Some(sign * pow2(self.two))
    }
}

/// `2^e` for any integer `e`.
pub fn pow2(e: i64) -> Rat {
    let p = Rat::from_integer(num_bigint::BigInt::one() << e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// A built matrix in its native ring.
#[derive(Clone, Debug)]
pub enum Built {
    Integer(Mat<Integers>),
    QPoly(Mat<LaurentRing>),
    Cyclotomic(Mat<CycField>, Scale),
    Rational(Mat<Rationals>),
}

impl Built {
    pub fn n(&self) -> usize {
        match self {
            Built::Integer(m) => m.n(),
            Built::QPoly(m) => m.n(),
            Built::Cyclotomic(m, _) => m.n(),
            Built::Rational(m) => m.n(),
        }
    }

    pub fn render(&self) -> String {
        match self {
            Built::Integer(m) => m.render(),
            Built::QPoly(m) => m.render(),
            Built::Cyclotomic(m, _) => m.render(),
            Built::Rational(m) => m.render(),
        }
    }
}

/// Builds any family from its description.
pub fn build(spec: &FamilySpec) -> Result<Built> {
    Ok(match spec.family.ring() {
        RingKind::Integer => Built::Integer(build_integer(spec)?),
        RingKind::QPoly => Built::QPoly(build_qpoly(spec)?),
        RingKind::Cyclotomic => {
            let (m, s) = build_cyclotomic(spec)?;
            Built::Cyclotomic(m, s)
        }
        RingKind::Rational => Built::Rational(build_rational(spec)?),
    })
}

fn wrong_ring(spec: &FamilySpec, want: &str) -> Error {
    Error::InvalidArgument(format!("{} is not a {want} family", spec.family))
}

pub fn build_integer(spec: &FamilySpec) -> Result<Mat<Integers>> {
    match spec.family {
        Family::FloorShift => integer::floor_shift(spec.int("n")?),
        Family::Linear => integer::linear(
            spec.int("p")?,
            spec.int("d")?,
            spec.text("range", "1..p-1")?.parse()?,
        ),
        Family::Quad => integer::quad(
            spec.int("p")?,
            spec.int("d")?,
            spec.text("range", "1..h")?.parse()?,
        ),
        Family::Abs => integer::abs_diff(spec.int("n")?, 0),
        Family::AbsShift => integer::abs_diff(spec.int("n")?, 1),
        Family::Floor2jk => integer::floor_2jk(spec.int("n")?),
        _ => Err(wrong_ring(spec, "integer")),
    }
}

pub fn build_qpoly(spec: &FamilySpec) -> Result<Mat<LaurentRing>> {
    match spec.family {
        Family::QFloor => qpoly::qfloor(spec.int("n")?),
        Family::QAbs => qpoly::qabs(spec.int("n")?, 0),
        Family::QAbsShift => qpoly::qabs(spec.int("n")?, 1),
        Family::QFloorGen => qpoly::qfloor_gen(spec.int("a")?, spec.int("n")?),
        Family::QCeilGen => qpoly::qceil_gen(spec.int("a")?, spec.int("n")?),
        _ => Err(wrong_ring(spec, "q-polynomial")),
    }
}

pub fn build_cyclotomic(spec: &FamilySpec) -> Result<(Mat<CycField>, Scale)> {
    let n = || spec.int("n");
    let one = |m: Result<Mat<CycField>>| m.map(|m| (m, Scale::ONE));
    match spec.family {
        Family::RootLinear => one(cyclo::root_linear(n()?, &spec.list("x")?)),
        Family::RootExpShift => one(cyclo::root_exp_shift(n()?, &spec.rat("x")?)),
        Family::CauchyRoot => one(cyclo::cauchy_root(n()?, &spec.rat("x")?)),
        Family::TanShift => cyclo::tan_shift(n()?),
        Family::SinShift => one(cyclo::sin_shift(n()?)),
        Family::CosShift => one(cyclo::cos_shift(n()?)),
        Family::Cos2 => cyclo::cos2(n()?),
        Family::Sec2 => cyclo::sec2(n()?),
        Family::Sin2 => cyclo::sin2(n()?),
        Family::Csc2 => cyclo::csc2(n()?),
        Family::TanJk => cyclo::tan_jk(n()?),
        Family::CotJk => cyclo::cot_jk(n()?),
        Family::Sec2Diff => one(cyclo::sec2_diff(n()?)),
        Family::Tan2Diff => one(cyclo::tan2_diff(n()?)),
        Family::RecipRootDiff => one(cyclo::recip_root_diff(
            n()?,
            spec.text("size", "n")?.parse()?,
        )),
        Family::CotRatio => one(cyclo::cot_ratio(n()?, spec.text("size", "n-1")?.parse()?)),
        _ => Err(wrong_ring(spec, "cyclotomic")),
    }
}

pub fn build_rational(spec: &FamilySpec) -> Result<Mat<Rationals>> {
    match spec.family {
        Family::InvSumSq => rational::inv_sum_sq(spec.int("p")?),
        Family::RecipAjk => rational::recip_ajk(spec.int("p")?, spec.int("a")?),
        Family::RecipAjK => rational::recip_aj_k(spec.int("p")?, spec.int("a")?),
        Family::InvSqDiff => rational::inv_sqdiff(spec.int("p")?),
        _ => Err(wrong_ring(spec, "rational")),
    }
}

pub(crate) fn require(ok: bool, family: Family, msg: impl fmt::Display) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{family}: {msg}")))
    }
}

pub(crate) fn require_odd_prime(p: i64, family: Family) -> Result<()> {
    require(
        p > 2 && is_prime(p as u64),
        family,
        format!("p = {p} must be an odd prime"),
    )
}

pub(crate) fn require_odd(n: i64, min: i64, family: Family) -> Result<()> {
    require(
        n >= min && n % 2 == 1,
        family,
        format!("n = {n} must be odd and >= {min}"),
    )
}
