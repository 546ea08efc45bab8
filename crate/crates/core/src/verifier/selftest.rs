//! Engine self-consistency: fast kernels against direct enumeration.

use std::time::Instant;

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Kind, Params, Report, Status};
use crate::cyclotomic::{gauss_sum, Cyc, CycField};
use crate::permanent::{det_divfree, det_field, per, per_naive, per_ryser, Mat};
use crate::ring::{rat, rat_int, Field, Integers, LPoly, LaurentRing, Rationals, Ring, ZMod};

fn report(id: &str, params: Params, mismatches: Vec<String>, start: Instant) -> Report {
    let ok = mismatches.is_empty();
    Report {
        id: id.to_string(),
        kind: Kind::Engine,
        params,
        status: if ok { Status::Pass } else { Status::Fail },
        computed: if ok {
            "all agree".into()
        } else {
            mismatches.join("; ")
        },
        expected: "all agree".into(),
        modulus: None,
        exact: None,
        reason: None,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// `per_ryser`, the ring's own kernel and `per_naive` on random square matrices.
fn permanents<R: Ring>(
    ring: R,
    n: usize,
    cases: usize,
    rng: &mut ChaCha8Rng,
    mut entry: impl FnMut(&mut ChaCha8Rng) -> R::Elem,
) -> Vec<String> {
    let mut bad = Vec::new();
    for case in 0..cases {
        let m = Mat::from_fn(ring.clone(), n, |_, _| entry(rng)).expect("entries in ring");
        let naive = per_naive(&m).expect("small matrix");
        let ryser = per_ryser(&m).expect("small matrix");
        let fast = per(&m).expect("small matrix");
        if !ring.equal(&naive, &ryser) || !ring.equal(&naive, &fast) {
            bad.push(format!("case {case}: {}", m.render()));
        }
    }
    bad
}

fn determinants<F: Field>(
    ring: F,
    n: usize,
    cases: usize,
    rng: &mut ChaCha8Rng,
    mut entry: impl FnMut(&mut ChaCha8Rng) -> F::Elem,
) -> Vec<String> {
    let mut bad = Vec::new();
    for case in 0..cases {
        let m = Mat::from_fn(ring.clone(), n, |_, _| entry(rng)).expect("entries in ring");
        let a = det_divfree(&m).expect("square");
        let b = det_field(&m).expect("field");
        if !ring.equal(&a, &b) {
            bad.push(format!("case {case}: {}", m.render()));
        }
    }
    bad
}

/// Runs the engine checks with `cases` random matrices per ring.
pub fn selftest(seed: u64, cases: usize) -> Vec<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let n = 6;
    let params = |ring: &str| {
        Params::new()
            .with("ring", ring)
            .with("n", n)
            .with("cases", cases)
    };

    let t = Instant::now();
    let bad = permanents(Integers, n, cases, &mut rng, |r| {
        BigInt::from(r.gen_range(-50..=50))
    });
    out.push(report("selftest.permanent", params("Z"), bad, t));

    let t = Instant::now();
    let z9 = ZMod::new(9).expect("modulus");
    let bad = permanents(z9, n, cases, &mut rng, |r| z9.elem(r.gen_range(0..9)));
    out.push(report("selftest.permanent", params("Z/9"), bad, t));

    let t = Instant::now();
    let bad = permanents(Rationals, n, cases, &mut rng, |r| {
        rat(r.gen_range(-9..=9), r.gen_range(1..=5))
    });
    out.push(report("selftest.permanent", params("Q"), bad, t));

    let t = Instant::now();
    let f7 = ZMod::new(7).expect("modulus");
    let bad = permanents(f7, n, cases, &mut rng, |r| f7.elem(r.gen_range(0..7)));
    out.push(report("selftest.permanent", params("F_7"), bad, t));

    let t = Instant::now();
    let q5 = CycField::new(5).expect("order");
    let cyc = |r: &mut ChaCha8Rng| {
        let coeffs: Vec<_> = (0..5).map(|_| rat_int(r.gen_range(-3..=3))).collect();
        Cyc::from_coeffs(5, &coeffs)
    };
    let bad = permanents(q5.clone(), n, cases, &mut rng, cyc);
    out.push(report("selftest.permanent", params("Q(zeta_5)"), bad, t));

    let t = Instant::now();
    let bad = permanents(LaurentRing, n, cases, &mut rng, |r| {
        LPoly::from_terms((0..2).map(|_| (r.gen_range(-2..=2), rat_int(r.gen_range(-3..=3)))))
    });
    out.push(report("selftest.permanent", params("Q[q,1/q]"), bad, t));

    let t = Instant::now();
    let mut bad = determinants(Rationals, n, cases / 2, &mut rng, |r| {
        rat(r.gen_range(-9..=9), r.gen_range(1..=5))
    });
    bad.extend(determinants(f7, n, cases / 2, &mut rng, |r| {
        f7.elem(r.gen_range(0..7))
    }));
    out.push(report(
        "selftest.determinant",
        Params::new()
            .with("rings", "Q;F_7")
            .with("n", n)
            .with("cases", cases),
        bad,
        t,
    ));

    let t = Instant::now();
    let mut bad = Vec::new();
    for m in (3..=51usize).step_by(2) {
        let g = gauss_sum(m).expect("odd order");
        let sign = if (m - 1) / 2 % 2 == 0 { 1 } else { -1 };
        if g.mul(&g) != Cyc::integer(m, sign * m as i64) {
            bad.push(format!("n = {m}"));
        }
    }
    out.push(report(
        "selftest.gauss",
        Params::new().with("nmax", 51),
        bad,
        t,
    ));
    out
}
