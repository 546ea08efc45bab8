//! Registry of executable checks, one per claim, and the suite runner.
//!
//! A check is a named claim plus a generator of parameter instances per
//! [`Tier`]. Running an instance yields a [`Report`]. Conjecture checks report
//! evidence and do not gate the exit status unless strict mode is requested.

mod checks;
mod registry;
mod selftest;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::permanent::Mat;
use crate::ring::{Rat, Ring};
use crate::sequences::{self, SeqName, SeqValue};
use crate::zoo::parse_rat;

pub use registry::{registry, Check, MANIFEST};
pub use selftest::selftest;

/// Outcome of one check instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

/// What sort of claim a check tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Theorem,
    Corollary,
    Lemma,
    Remark,
    Conjecture,
    /// Internal consistency of the computation engines.
    Engine,
}

impl Kind {
    /// Whether a failure of this kind makes the run fail without `strict`.
    pub fn gating(self) -> bool {
        self != Kind::Conjecture
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Theorem => "theorem",
            Kind::Corollary => "corollary",
            Kind::Lemma => "lemma",
            Kind::Remark => "remark",
            Kind::Conjecture => "conjecture",
            Kind::Engine => "engine",
        })
    }
}

/// Run size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tier {
    /// `n <= 9`, `p <= 13`.
    Fast,
    /// `n <= 25` within per-family limits, `p <= 19` (a few checks reach 23).
    Full,
}

impl Tier {
    pub(crate) fn pick<T>(self, fast: T, full: T) -> T {
        match self {
            Tier::Fast => fast,
            Tier::Full => full,
        }
    }
}

impl FromStr for Tier {
    type Err = Error;
    fn from_str(s: &str) -> Result<Tier> {
        match s {
            "fast" => Ok(Tier::Fast),
            "full" => Ok(Tier::Full),
            _ => Err(Error::InvalidArgument(format!(
                "unknown tier `{s}` (expected fast or full)"
            ))),
        }
    }
}

/// Named check parameters, kept as strings and parsed on use.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn new() -> Params {
        Params::default()
    }

    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Params {
        self.0.insert(key.to_string(), value.to_string());
        self
    }

    pub fn insert(&mut self, key: &str, value: impl fmt::Display) {
        self.0.insert(key.to_string(), value.to_string());
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn require(&self, key: &str) -> Result<&str> {
        self.get(key)
            .ok_or_else(|| Error::InvalidArgument(format!("missing parameter `{key}`")))
    }

    pub fn int(&self, key: &str) -> Result<i64> {
        let s = self.require(key)?;
        s.parse().map_err(|_| {
            Error::InvalidArgument(format!("parameter `{key}` = `{s}` is not an integer"))
        })
    }

    pub fn rat(&self, key: &str) -> Result<Rat> {
        let s = self.require(key)?;
        parse_rat(s).ok_or_else(|| {
            Error::InvalidArgument(format!("parameter `{key}` = `{s}` is not a rational"))
        })
    }

    pub fn text(&self, key: &str) -> Result<&str> {
        self.require(key)
    }

    /// Whether every entry of `self` also appears in `other`.
    pub fn subset_of(&self, other: &Params) -> bool {
        self.iter().all(|(k, v)| other.get(k) == Some(v))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// Result of one check instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub id: String,
    pub kind: Kind,
    pub params: Params,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    /// Present for congruence checks; `computed` and `expected` are then residues.
    pub modulus: Option<String>,
    /// The unreduced exact value behind a residue.
    pub exact: Option<String>,
    /// Why an instance was skipped or could not be evaluated.
    pub reason: Option<String>,
    pub elapsed_ms: u64,
}

impl Report {
    /// Whether this report makes a run fail, given the strict flag.
    pub fn is_blocking(&self, strict: bool) -> bool {
        self.status == Status::Fail && (strict || self.kind.gating())
    }
}

/// What a check computed, before it is wrapped into a [`Report`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Compared {
        computed: String,
        expected: String,
        ok: bool,
    },
    Congruence {
        exact: String,
        computed: String,
        expected: String,
        modulus: String,
        ok: bool,
    },
    Skip(String),
}

/// Execution context shared by all checks of a run.
pub struct Ctx {
    seed: u64,
    tamper: bool,
    seq_cache: Mutex<HashMap<(SeqName, i64), SeqValue>>,
}

impl Ctx {
    pub fn new(seed: u64) -> Ctx {
        Ctx {
            seed,
            tamper: false,
            seq_cache: Mutex::new(HashMap::new()),
        }
    }

    /// A context whose matrix builders add one to entry `(0, 0)`.
    /// Used to confirm the suite notices a broken builder.
    pub fn tampered(seed: u64) -> Ctx {
        Ctx {
            tamper: true,
            ..Ctx::new(seed)
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Generator seeded by the run seed, the check id and its parameters.
    pub(crate) fn rng(&self, id: &str, params: &Params) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ fnv1a(format!("{id}|{params}").as_bytes()))
    }

    pub(crate) fn matrix<R: Ring>(&self, mut m: Mat<R>) -> Mat<R> {
        if self.tamper && m.n() > 0 {
            let ring = m.ring().clone();
            let v = ring.add(m.get(0, 0), &ring.one());
            m.set(0, 0, v);
        }
        m
    }

    pub(crate) fn seq(&self, name: SeqName, n: i64) -> Result<SeqValue> {
        if let Some(v) = self.seq_cache.lock().expect("cache lock").get(&(name, n)) {
            return Ok(v.clone());
        }
        let v = sequences::evaluate(name, n)?;
        self.seq_cache
            .lock()
            .expect("cache lock")
            .insert((name, n), v.clone());
        Ok(v)
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// Looks up a registered check.
pub fn find_check(id: &str) -> Result<&'static Check> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

fn run_instance(check: &Check, params: &Params, ctx: &Ctx) -> Report {
    let start = Instant::now();
    let result = (check.run)(ctx, params);
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let mut report = Report {
        id: check.id.to_string(),
        kind: check.kind,
        params: params.clone(),
        status: Status::Skip,
        computed: String::new(),
        expected: String::new(),
        modulus: None,
        exact: None,
        reason: None,
        elapsed_ms,
    };
    match result {
        Ok(Outcome::Compared {
            computed,
            expected,
            ok,
        }) => {
            report.status = if ok { Status::Pass } else { Status::Fail };
            report.computed = computed;
            report.expected = expected;
        }
        Ok(Outcome::Congruence {
            exact,
            computed,
            expected,
            modulus,
            ok,
        }) => {
            report.status = if ok { Status::Pass } else { Status::Fail };
            report.computed = computed;
            report.expected = expected;
            report.modulus = Some(modulus);
            report.exact = Some(exact);
        }
        Ok(Outcome::Skip(reason)) => report.reason = Some(reason),
        Err(
            e
            @ (Error::InvalidArgument(_) | Error::SingularFamily { .. } | Error::SizeLimit { .. }),
        ) => report.reason = Some(e.to_string()),
        Err(e) => {
            report.status = Status::Fail;
            report.reason = Some(e.to_string());
        }
    }
    report
}

/// Runs one check. With empty `params` every instance of `tier` runs;
/// otherwise the full-tier instances matching all given parameters run (`p`
/// and `n` name the same index), or, if none match, `params` itself is run as
/// a single instance.
pub fn run_check(id: &str, params: &Params, tier: Tier, ctx: &Ctx) -> Result<Vec<Report>> {
    let check = find_check(id)?;
    let instances = if params.is_empty() {
        (check.instances)(tier)
    } else {
        matching_instances(check, params)
    };
    Ok(run_all(check_jobs(check, instances), ctx))
}

fn matching_instances(check: &Check, params: &Params) -> Vec<Params> {
    let full = (check.instances)(Tier::Full);
    let swapped = swap_index_key(params);
    for wanted in [Some(params.clone()), swapped] {
        let Some(wanted) = wanted else { continue };
        let found: Vec<Params> = full
            .iter()
            .filter(|p| wanted.subset_of(p))
            .cloned()
            .collect();
        if !found.is_empty() {
            return found;
        }
    }
    vec![params.clone()]
}

fn swap_index_key(params: &Params) -> Option<Params> {
    let (from, to) = match (params.get("p"), params.get("n")) {
        (Some(_), None) => ("p", "n"),
        (None, Some(_)) => ("n", "p"),
        _ => return None,
    };
    let mut out = Params::new();
    for (k, v) in params.iter() {
        out.insert(if k == from { to } else { k }, v);
    }
    Some(out)
}

fn check_jobs(check: &'static Check, instances: Vec<Params>) -> Vec<(&'static Check, Params)> {
    instances.into_iter().map(|p| (check, p)).collect()
}

fn run_all(jobs: Vec<(&'static Check, Params)>, ctx: &Ctx) -> Vec<Report> {
    // collect keeps job order, which is id order then instance order
    jobs.par_iter()
        .map(|(check, params)| run_instance(check, params, ctx))
        .collect()
}

/// Every instance of every check in the tier, sorted by id.
pub fn run_suite(tier: Tier, ctx: &Ctx) -> Vec<Report> {
    run_ids(tier, ctx, |_| true)
}

/// Instances of the checks selected by `keep`, sorted by id.
pub fn run_ids(tier: Tier, ctx: &Ctx, keep: impl Fn(&Check) -> bool) -> Vec<Report> {
    let jobs = registry()
        .iter()
        .filter(|c| keep(c))
        .flat_map(|c| check_jobs(c, (c.instances)(tier)))
        .collect();
    run_all(jobs, ctx)
}
