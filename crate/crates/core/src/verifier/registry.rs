//! The check table and the static manifest of claim ids.

use std::sync::OnceLock;

use super::checks::{self as c, TABLES};
use super::{Ctx, Kind, Outcome, Params, Tier};
use crate::error::Result;
use crate::ring::is_prime;
use crate::sequences::SeqName;

/// One registered claim.
pub struct Check {
    pub id: &'static str,
    pub kind: Kind,
    /// The claim in plain notation.
    pub claim: &'static str,
    pub instances: fn(Tier) -> Vec<Params>,
    pub run: fn(&Ctx, &Params) -> Result<Outcome>,
}

/// Every claim id that must be covered by exactly one check.
pub const MANIFEST: &[&str] = &[
    "conj.absjk",
    "conj.bernoulli",
    "conj.csign",
    "conj.derange",
    "conj.maskdet",
    "conj.maskper",
    "conj.qdet",
    "conj.sqdiff",
    "conj.ssign",
    "conj.tsign",
    "cor.cos",
    "cor.jdk",
    "cor.quadmod",
    "cor.sin",
    "det.sec2",
    "det.tan2",
    "lem.borchardt",
    "lem.cauchy",
    "lem.circulant",
    "lem.galois",
    "lem.gauss",
    "lem.half",
    "lem.jacobi",
    "lem.oneplus",
    "lem.onezeta",
    "lem.sigma",
    "lem.sym",
    "rem.cp",
    "rem.cvalues",
    "rem.perhalf",
    "rem.qdetabs",
    "rem.svalues",
    "rem.tanvalues",
    "rem.tguess",
    "rem.tvalues",
    "thcos.cong",
    "thcos.int",
    "thjk.cong",
    "thjk.int",
    "thnew.cauchyroot",
    "thnew.invsumsq",
    "thper.jdk1",
    "thper.jdk2",
    "thper.jdk3",
    "thper.jxk",
    "thper.quad",
    "thper.quad0",
    "thper.rootexp",
    "thper.rootlinear",
    "thq.det",
    "thq.floor",
    "thq.qfloor",
    "thsin.cong",
    "thsin.int",
    "thtan.cong",
    "thtan.int",
];

fn odd_primes(max: i64) -> impl Iterator<Item = i64> {
    (3..=max).filter(|&p| is_prime(p as u64))
}

fn odds(min: i64, max: i64) -> impl Iterator<Item = i64> {
    (min..=max).filter(|n| n % 2 == 1)
}

fn by(key: &'static str, values: impl Iterator<Item = i64>) -> Vec<Params> {
    values.map(|v| Params::new().with(key, v)).collect()
}

/// Each instance of `base` extended by every value of `key`.
fn cross<T: std::fmt::Display>(
    base: Vec<Params>,
    key: &str,
    values: impl Fn(&Params) -> Vec<T>,
) -> Vec<Params> {
    base.into_iter()
        .flat_map(|p| {
            values(&p)
                .into_iter()
                .map(move |v| p.clone().with(key, v))
                .collect::<Vec<_>>()
        })
        .collect()
}

fn int(p: &Params, key: &str) -> i64 {
    p.int(key).expect("generated parameter")
}

fn nonzero_d(t: Tier, min_p: i64) -> Vec<Params> {
    let primes = odd_primes(t.pick(13, 19)).filter(|&p| p >= min_p);
    cross(by("p", primes), "d", |p| (1..int(p, "p")).collect())
}

fn seq_instances(name: SeqName, indices: impl Iterator<Item = i64>) -> Vec<Params> {
    indices
        .map(|n| Params::new().with("seq", name).with("n", n))
        .collect()
}

fn table_instances(t: Tier, names: &[SeqName]) -> Vec<Params> {
    let limit = t.pick(13, 25);
    names
        .iter()
        .flat_map(|name| {
            let rows = TABLES
                .iter()
                .find(|(s, _)| s == name)
                .map(|(_, r)| *r)
                .unwrap_or(&[]);
            let limit = if *name == SeqName::T {
                t.pick(9, 13)
            } else {
                limit
            };
            seq_instances(
                *name,
                rows.iter().map(|(n, _)| *n).filter(move |&n| n <= limit),
            )
        })
        .collect()
}

fn composite_odds(max: i64) -> impl Iterator<Item = i64> {
    odds(9, max).filter(|&n| !is_prime(n as u64))
}

fn build() -> Vec<Check> {
    let mut checks = vec![
        Check {
            id: "thq.floor",
            kind: Kind::Theorem,
            claim: "per[floor((j+k-1)/n)]_{1<=j,k<=n} = 1",
            instances: |t| by("n", 1..=t.pick(9, 12)),
            run: c::thq_floor,
        },
        Check {
            id: "thq.qfloor",
            kind: Kind::Theorem,
            claim: "per[[floor((j+k)/n)]_q]_{1<=j,k<=n} = 2^(n-1) + q",
            instances: |t| by("n", 1..=t.pick(9, 12)),
            run: c::thq_qfloor,
        },
        Check {
            id: "thq.det",
            kind: Kind::Remark,
            claim: "det[floor((j+k-1)/n)] = (-1)^(n(n-1)/2); det[[floor((j+k)/n)]_q] = (-1)^(n(n+1)/2-1) q for n > 1",
            instances: |t| {
                let mut v = cross(by("n", 1..=t.pick(9, 12)), "matrix", |_| vec!["floor"]);
                v.extend(cross(by("n", 2..=t.pick(9, 12)), "matrix", |_| vec!["qfloor"]));
                v
            },
            run: c::thq_det,
        },
        Check {
            id: "thper.rootlinear",
            kind: Kind::Theorem,
            claim: "per[1 - zeta^j x_k]_{1<=j,k<=n} = n! (1 - x_1...x_n), at random x over Q(zeta_n) and over F_p",
            instances: |t| {
                let base = cross(by("n", 1..=t.pick(9, 10)), "backend", |_| {
                    vec!["cyclotomic", "finite"]
                });
                cross(base, "sample", |_| (0..5).collect())
            },
            run: c::thper_rootlinear,
        },
        Check {
            id: "thper.rootexp",
            kind: Kind::Theorem,
            claim: "per[1 + zeta^(j+k) x]_{1<=j,k<=n-1} = sum_{k<n} (n-1)!/C(n-1,k) x^k, at n distinct points",
            instances: |t| cross(by("n", 2..=t.pick(9, 10)), "point", |p| (0..int(p, "n")).collect()),
            run: c::thper_rootexp,
        },
        Check {
            id: "thper.jxk",
            kind: Kind::Theorem,
            claim: "per[j + x_k]_{1<=j,k<=p-1} = 1 - x_1...x_{p-1} (mod p), at random x in F_p",
            instances: |t| cross(by("p", odd_primes(t.pick(13, 19))), "sample", |_| (0..3).collect()),
            run: c::thper_jxk,
        },
        Check {
            id: "thper.jdk1",
            kind: Kind::Theorem,
            claim: "per[j + d k]_{1<=j,k<=p-1} = d^(p-1) - 3 - 4 (p-1)! (mod p^2)",
            instances: |t| nonzero_d(t, 3),
            run: c::thper_jdk1,
        },
        Check {
            id: "thper.jdk2",
            kind: Kind::Theorem,
            claim: "per[j + d k]_{1<=j,k<=p} = (d+1)/2 p (mod p^2)",
            instances: |t| nonzero_d(t, 3),
            run: c::thper_jdk2,
        },
        Check {
            id: "thper.jdk3",
            kind: Kind::Theorem,
            claim: "per[j + d k]_{0<=j,k<=p-1} = -(d+1)/2 p (mod p^2)",
            instances: |t| nonzero_d(t, 3),
            run: c::thper_jdk3,
        },
        Check {
            id: "thper.quad",
            kind: Kind::Theorem,
            claim: "per[j^2 + d k^2]_{1<=j,k<=(p-1)/2} = (d^((p-1)/2) + 1) ((p-1)/2)!^3 (mod p^2), p > 3",
            instances: |t| nonzero_d(t, 5),
            run: c::thper_quad,
        },
        Check {
            id: "thper.quad0",
            kind: Kind::Theorem,
            claim: "per[j^2 + d k^2]_{0<=j,k<=(p-1)/2} = (-1)^((p-1)/2) p/24 (d + (d/p)) ((p-1)/2)! (mod p^2), p > 3",
            instances: |t| nonzero_d(t, 5),
            run: c::thper_quad0,
        },
        Check {
            id: "cor.jdk",
            kind: Kind::Corollary,
            claim: "per[j + d k]_{1<=j,k<=p-1} = 2 (mod p)",
            instances: |t| nonzero_d(t, 3),
            run: c::cor_jdk,
        },
        Check {
            id: "cor.quadmod",
            kind: Kind::Corollary,
            claim: "per[j^2 + d k^2]_{1<=j,k<=(p-1)/2} = (-1)^((p+1)/2) (1 + (d/p)) ((p-1)/2)! (mod p)",
            instances: |t| nonzero_d(t, 3),
            run: c::cor_quadmod,
        },
        Check {
            id: "cor.sin",
            kind: Kind::Corollary,
            claim: "per[sin pi (j+k)/n]_{1<=j,k<=n-1} = (-1)^((n-1)/2) n!/(2^(n-2)(n+1)) for odd n, 0 for even n",
            instances: |t| by("n", 2..=t.pick(9, 12)),
            run: c::cor_sin,
        },
        Check {
            id: "cor.cos",
            kind: Kind::Corollary,
            claim: "per[cos pi (j+k)/n]_{1<=j,k<=n-1} = (n-1)!/(-2)^(n-1) sum_{k<n} 1/C(n-1,k)",
            instances: |t| by("n", 2..=t.pick(9, 12)),
            run: c::cor_cos,
        },
        Check {
            id: "thnew.cauchyroot",
            kind: Kind::Theorem,
            claim: "per[1/(1 - zeta^(j-k) x)]_{1<=j,k<=n} = prod_{r=1}^n (n x^n/(1 - x^n) + r)",
            instances: |t| {
                cross(by("n", 1..=t.pick(9, 10)), "x", |_| vec!["2", "-1", "1/2", "3/5"])
            },
            run: c::thnew_cauchyroot,
        },
        Check {
            id: "thnew.invsumsq",
            kind: Kind::Theorem,
            claim: "per[1/(j^2 + k^2)]_{1<=j,k<=(p-1)/2} = (-1)^((p+1)/4) / (4 ((p+1)/4)!^2) (mod p), p = 3 mod 4",
            instances: |t| by("p", t.pick(vec![3, 7, 11], vec![3, 7, 11, 19, 23]).into_iter()),
            run: c::thnew_invsumsq,
        },
        Check {
            id: "thjk.int",
            kind: Kind::Theorem,
            claim: "T(n) = per[tan pi (j+k)/n]_{1<=j,k<=n-1} is an integer",
            instances: |t| seq_instances(SeqName::T, odds(3, t.pick(9, 19))),
            run: c::seq_integral,
        },
        Check {
            id: "thjk.cong",
            kind: Kind::Theorem,
            claim: "T(p) = (-1)^((p+1)/2) 2p (mod p^2)",
            instances: |t| by("p", odd_primes(t.pick(13, 19))),
            run: c::thjk_cong,
        },
        Check {
            id: "thcos.int",
            kind: Kind::Theorem,
            claim: "c_n is an integer and the denominator of c'_n divides 2^(d_n)",
            instances: |t| {
                let mut v = seq_instances(SeqName::C, odds(3, t.pick(9, 25)));
                v.extend(seq_instances(SeqName::CPrime, odds(3, t.pick(9, 25))));
                v
            },
            run: c::seq_integral,
        },
        Check {
            id: "thcos.cong",
            kind: Kind::Theorem,
            claim: "per[cos 2 pi jk/p] = per[sec 2 pi jk/p] = ((p-1)/2)! (mod p)",
            instances: |t| cross(by("p", odd_primes(t.pick(13, 19))), "matrix", |_| vec!["cos", "sec"]),
            run: c::thcos_cong,
        },
        Check {
            id: "thsin.int",
            kind: Kind::Theorem,
            claim: "s_n and s'_p are integers",
            instances: |t| {
                let mut v = seq_instances(SeqName::S, odds(3, t.pick(9, 25)));
                v.extend(seq_instances(SeqName::SPrime, odd_primes(t.pick(13, 23))));
                v
            },
            run: c::seq_integral,
        },
        Check {
            id: "thsin.cong",
            kind: Kind::Theorem,
            claim: "s_p = (-1)^((p+1)/2) and s'_p = 1 (mod p)",
            instances: |t| {
                let mut v = seq_instances(SeqName::S, odd_primes(t.pick(13, 19)));
                v.extend(seq_instances(SeqName::SPrime, odd_primes(t.pick(13, 19))));
                v
            },
            run: c::sign_cong,
        },
        Check {
            id: "thtan.int",
            kind: Kind::Theorem,
            claim: "t_n and t'_p are integers",
            instances: |t| {
                let mut v = seq_instances(SeqName::Tn, odds(3, t.pick(9, 25)));
                v.extend(seq_instances(SeqName::TPrime, odd_primes(t.pick(13, 23))));
                v
            },
            run: c::seq_integral,
        },
        Check {
            id: "thtan.cong",
            kind: Kind::Theorem,
            claim: "t_p = (-1)^((p+1)/2) and t'_p = 1 (mod p)",
            instances: |t| {
                let mut v = seq_instances(SeqName::Tn, odd_primes(t.pick(13, 19)));
                v.extend(seq_instances(SeqName::TPrime, odd_primes(t.pick(13, 19))));
                v
            },
            run: c::sign_cong,
        },
        Check {
            id: "rem.tvalues",
            kind: Kind::Remark,
            claim: "T(n)/n = -1, 13, -285, 16569, -1218105, 164741445 for n = 3, ..., 13",
            instances: |t| table_instances(t, &[SeqName::T]),
            run: c::seq_table,
        },
        Check {
            id: "rem.cvalues",
            kind: Kind::Remark,
            claim: "tabulated c_n and c'_n for odd n <= 23",
            instances: |t| table_instances(t, &[SeqName::C, SeqName::CPrime]),
            run: c::seq_table,
        },
        Check {
            id: "rem.svalues",
            kind: Kind::Remark,
            claim: "tabulated s_n for odd n <= 23 and s'_p for p <= 23",
            instances: |t| table_instances(t, &[SeqName::S, SeqName::SPrime]),
            run: c::seq_table,
        },
        Check {
            id: "rem.tanvalues",
            kind: Kind::Remark,
            claim: "tabulated t_n for odd n <= 25 and t'_p for p <= 19",
            instances: |t| table_instances(t, &[SeqName::Tn, SeqName::TPrime]),
            run: c::seq_table,
        },
        Check {
            id: "lem.cauchy",
            kind: Kind::Lemma,
            claim: "det[1/(x_j + y_k)] = prod_{j<k} (x_k - x_j)(y_k - y_j) / prod_{j,k} (x_j + y_k)",
            instances: |_| cross(by("n", 1..=6), "sample", |_| (0..3).collect()),
            run: c::lem_cauchy,
        },
        Check {
            id: "lem.borchardt",
            kind: Kind::Lemma,
            claim: "det[1/(x_j - y_k)^2] = det[1/(x_j - y_k)] per[1/(x_j - y_k)]",
            instances: |_| cross(by("n", 1..=6), "sample", |_| (0..3).collect()),
            run: c::lem_borchardt,
        },
        Check {
            id: "lem.circulant",
            kind: Kind::Lemma,
            claim: "det of the circulant with first row a_1..a_n = prod_r sum_k a_k zeta^((k-1) r)",
            instances: |t| cross(by("n", 1..=t.pick(7, 9)), "sample", |_| (0..2).collect()),
            run: c::lem_circulant,
        },
        Check {
            id: "lem.oneplus",
            kind: Kind::Lemma,
            claim: "prod_{k=1}^{n-1} (1 + zeta^k) = 1 for odd n",
            instances: |t| by("n", odds(3, t.pick(9, 25))),
            run: c::lem_oneplus,
        },
        Check {
            id: "lem.onezeta",
            kind: Kind::Lemma,
            claim: "prod_{k=1}^{p-1} (1 - zeta^k) = p",
            instances: |t| by("p", odd_primes(t.pick(13, 23))),
            run: c::lem_onezeta,
        },
        Check {
            id: "lem.gauss",
            kind: Kind::Lemma,
            claim: "g^2 = (-1)^((n-1)/2) n for the quadratic Gauss sum g of odd n",
            instances: |t| by("n", odds(3, t.pick(25, 51))),
            run: c::lem_gauss,
        },
        Check {
            id: "lem.half",
            kind: Kind::Lemma,
            claim: "prod_{k=1}^{(n-1)/2} (1 - zeta^k) = (-2/n) i^((n-1)/2) sqrt(n) zeta^((n+1)/2 (n^2-1)/8)",
            instances: |t| by("n", odds(3, t.pick(9, 25))),
            run: c::lem_half,
        },
        Check {
            id: "lem.sigma",
            kind: Kind::Lemma,
            claim: "e_k(zeta, ..., zeta^n) = 0 for k < n and (-1)^(n-1) for k = n; e_k(zeta, ..., zeta^(n-1)) = (-1)^k",
            instances: |t| {
                let mut v = cross(by("n", 1..=t.pick(9, 12)), "range", |_| vec!["1..n"]);
                v.extend(cross(by("n", 2..=t.pick(9, 12)), "range", |_| vec!["1..n-1"]));
                v
            },
            run: c::lem_sigma,
        },
        Check {
            id: "lem.sym",
            kind: Kind::Lemma,
            claim: "e_k(1, ..., p-1) = 0 (k < p-1), -1 (k = p-1); e_k(1^2, ..., ((p-1)/2)^2) = 0 (k < (p-1)/2), (-1)^((p+1)/2) (mod p)",
            instances: |t| cross(by("p", odd_primes(t.pick(13, 19))), "power", |_| vec![1, 2]),
            run: c::lem_sym,
        },
        Check {
            id: "lem.jacobi",
            kind: Kind::Lemma,
            claim: "(a/n) = (-1)^#{1 <= k <= (n-1)/2 : {ka}_n > n/2}",
            instances: |t| by("n", odds(3, t.pick(9, 25))),
            run: c::lem_jacobi,
        },
        Check {
            id: "lem.galois",
            kind: Kind::Lemma,
            claim: "sigma_a(i^((n-1)/2) sqrt(n)) = (a/n) i^((n-1)/2) sqrt(n)",
            instances: |t| by("n", odds(3, t.pick(9, 25))),
            run: c::lem_galois,
        },
        Check {
            id: "det.sec2",
            kind: Kind::Theorem,
            claim: "det[sec^2 pi (j-k)/n]_{1<=j,k<=n} = n^(n-1) (n!!)^2 for odd n",
            instances: |t| by("n", odds(1, t.pick(9, 11))),
            run: c::det_sec2,
        },
        Check {
            id: "det.tan2",
            kind: Kind::Theorem,
            claim: "det[tan^2 pi (j-k)/n]_{1<=j,k<=n} = (n-1) n^(n-2) (n!!)^2 for odd n",
            instances: |t| by("n", odds(1, t.pick(9, 11))),
            run: c::det_tan2,
        },
        Check {
            id: "conj.qdet",
            kind: Kind::Conjecture,
            claim: "det[[floor((aj-(a+1)k)/n)]_q] = -(a(a+1)/n) q^((1-3n)/2); det[[ceil(((a+1)j-ak)/n)]_q] = (a(a+1)/n) q^((n-1)/2)",
            instances: |t| {
                let base = cross(by("n", odds(3, t.pick(7, 9))), "a", |_| (-3..=3).collect());
                cross(base, "matrix", |_| vec!["floor", "ceil"])
            },
            run: c::conj_qdet,
        },
        Check {
            id: "conj.bernoulli",
            kind: Kind::Conjecture,
            claim: "per[floor((2j-k)/n)]_{1<=j,k<=n} = 2 (2^(n+1) - 1) B_(n+1)",
            instances: |t| by("n", 1..=t.pick(9, 10)),
            run: c::conj_bernoulli,
        },
        Check {
            id: "conj.absjk",
            kind: Kind::Conjecture,
            claim: "per[|j-k|]_{1<=j,k<=p} = -1/2 and per[|j-k+1|]_{1<=j,k<=p} = 1/2 (mod p)",
            instances: |t| cross(by("p", odd_primes(t.pick(13, 19))), "shift", |_| vec![0, 1]),
            run: c::conj_absjk,
        },
        Check {
            id: "conj.maskper",
            kind: Kind::Conjecture,
            claim: "sum over tau in S_p avoiding p | aj + tau(j) of prod 1/(aj + tau(j)) = 0 (mod p^2), p > 3, p does not divide a",
            instances: |t| {
                let primes = t.pick(vec![5, 7], vec![5, 7, 11, 13]);
                cross(by("p", primes.into_iter()), "a", |p| (1..int(p, "p")).collect())
            },
            run: c::conj_maskper,
        },
        Check {
            id: "conj.maskdet",
            kind: Kind::Conjecture,
            claim: "signed sum over tau in S_(p-1) avoiding p | a + j tau(j) of prod 1/(a + j tau(j)) = (a/p)(3 - a^(p-1))/2 (mod p^2); unsigned = (-1)^((p+1)/2)(3 - a^(p-1))/2 for p not dividing a",
            instances: |t| {
                let primes = t.pick(vec![5, 7], vec![5, 7, 11, 13]);
                let base = by("p", primes.into_iter());
                let mut v = cross(base.clone(), "a", |p| (1..=int(p, "p")).collect());
                v = cross(v, "sum", |_| vec!["det"]);
                let per = cross(base, "a", |p| (1..int(p, "p")).collect());
                v.extend(cross(per, "sum", |_| vec!["per"]));
                v
            },
            run: c::conj_maskdet,
        },
        Check {
            id: "conj.sqdiff",
            kind: Kind::Conjecture,
            claim: "sum over derangements tau of 1..(p-1)/2 of prod 1/(j^2 - tau(j)^2) = ((p-1)/4)!^(-2) (mod p), p = 1 mod 4",
            instances: |t| by("p", t.pick(vec![5, 13], vec![5, 13, 17]).into_iter()),
            run: c::conj_sqdiff,
        },
        Check {
            id: "conj.derange",
            kind: Kind::Conjecture,
            claim: "derangement sums of prod 1/(1 - zeta^(j - tau(j))): ((n-1)!!)^2/2^n (even n); ((n-1)/2)!^2/n, signed (-1)^((n-1)/2)((n-1)/2)!^2/n, signed cot ratio (-1)^((n-1)/2)((n-2)!!)^2/n (odd n, size n-1)",
            instances: |t| {
                let mut v = cross(by("n", (2..=t.pick(9, 10)).filter(|n| n % 2 == 0)), "sum", |_| {
                    vec!["unsigned"]
                });
                v.extend(cross(by("n", odds(3, t.pick(9, 10))), "sum", |_| {
                    vec!["unsigned", "signed", "cot_ratio"]
                }));
                v
            },
            run: c::conj_derange,
        },
        Check {
            id: "conj.csign",
            kind: Kind::Conjecture,
            claim: "(-1)^((p-1)/2) c_p is a positive odd integer and (-1)^((p-1)/2) c'_p is a positive integer",
            instances: |t| {
                let mut v = seq_instances(SeqName::C, odd_primes(t.pick(13, 23)));
                v.extend(seq_instances(SeqName::CPrime, odd_primes(t.pick(13, 23))));
                v
            },
            run: c::conj_csign,
        },
        Check {
            id: "conj.ssign",
            kind: Kind::Conjecture,
            claim: "s_n = 0 (mod n) for odd composite n; s_p < 0 iff p = 5 (mod 12); s'_p < 0 iff p = 7 (mod 8)",
            instances: |t| {
                let mut v = cross(seq_instances(SeqName::S, composite_odds(t.pick(9, 25))), "claim", |_| {
                    vec!["divisible"]
                });
                let signs = seq_instances(SeqName::S, odd_primes(t.pick(13, 23)))
                    .into_iter()
                    .chain(seq_instances(SeqName::SPrime, odd_primes(t.pick(13, 23))));
                v.extend(signs.map(|p| p.with("claim", "sign")));
                v
            },
            run: c::conj_ssign,
        },
        Check {
            id: "conj.tsign",
            kind: Kind::Conjecture,
            claim: "t_n = 0 (mod n) for odd composite n; (2/p) t_p < 0; (-1/p) t'_p < 0",
            instances: |t| {
                let mut v = cross(seq_instances(SeqName::Tn, composite_odds(t.pick(9, 25))), "claim", |_| {
                    vec!["divisible"]
                });
                let signs = seq_instances(SeqName::Tn, odd_primes(t.pick(13, 23)))
                    .into_iter()
                    .chain(seq_instances(SeqName::TPrime, odd_primes(t.pick(13, 23))));
                v.extend(signs.map(|p| p.with("claim", "sign")));
                v
            },
            run: c::conj_tsign,
        },
        Check {
            id: "rem.qdetabs",
            kind: Kind::Remark,
            claim: "det[[|j-k+1|]_q] = (1+q)^(n-2); det[[|j-k|]_q] = (-1)^(n-1)(n-1)(1+q)^(n-2); det[|j-k|] = (-1)^(n-1)(n-1)2^(n-2)",
            instances: |t| {
                cross(by("n", 2..=t.pick(9, 12)), "matrix", |_| vec!["qabs_shift", "qabs", "abs"])
            },
            run: c::rem_qdetabs,
        },
        Check {
            id: "rem.perhalf",
            kind: Kind::Remark,
            claim: "per[1/(1 + zeta^(j-k))]_{1<=j,k<=n} = (-1)^((n-1)/2) (n!!)^2/(2^n n) for odd n",
            instances: |t| by("n", odds(3, t.pick(9, 11))),
            run: c::rem_perhalf,
        },
        Check {
            id: "rem.cp",
            kind: Kind::Remark,
            claim: "signed derangement sum of prod 1/(1 - zeta^(j - tau(j))) = (-1)^(n/2)((n-1)!!)^2/2^n (even n), 0 (odd n)",
            instances: |t| by("n", 2..=t.pick(9, 10)),
            run: c::rem_cp,
        },
        Check {
            id: "rem.tguess",
            kind: Kind::Conjecture,
            claim: "(-1)^((n-1)/2) T(n)/n is a positive integer = 1 (mod 4)",
            instances: |t| by("n", odds(3, t.pick(9, 19))),
            run: c::rem_tguess,
        },
    ];
    checks.sort_by_key(|c| c.id);
    checks
}

/// All checks, sorted by id.
pub fn registry() -> &'static [Check] {
    static REGISTRY: OnceLock<Vec<Check>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}
