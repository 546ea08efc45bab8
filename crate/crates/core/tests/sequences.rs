use arithper::permanent::for_each_permutation;
use arithper::ring::{bernoulli, Rat};
use arithper::sequences::{evaluate, seq_c_prime, seq_d, SeqName};
use num_bigint::BigInt;
use num_traits::{One, Signed};

/// Akiyama-Tanigawa; returns `B_k` with `B_1 = +1/2`.
fn bernoulli_reference(k: usize) -> Rat {
    let mut a: Vec<Rat> = (0..=k)
        .map(|m| Rat::new(BigInt::one(), BigInt::from(m + 1)))
        .collect();
    for m in (1..=k).rev() {
        for j in 0..m {
            a[j] = (&a[j] - &a[j + 1]) * Rat::from_integer(BigInt::from(j + 1));
        }
    }
    a[0].clone()
}

#[test]
fn bernoulli_numbers_match_reference() {
    assert_eq!(bernoulli(1).abs(), bernoulli_reference(1));
    for k in (0..=24).filter(|&k| k != 1) {
        assert_eq!(bernoulli(k as u32), bernoulli_reference(k), "B_{k}");
    }
}

#[test]
fn matching_number_by_enumeration() {
    for n in (3i64..=15).step_by(2) {
        let h = ((n - 1) / 2) as usize;
        let mut best = 0;
        for_each_permutation(h, |tau, _| {
            let hits = (0..h)
                .filter(|&j| ((j + 1) * (tau[j] + 1)) as i64 % n == 0)
                .count();
            best = best.max(hits);
        });
        let d = seq_d(n).unwrap().value;
        assert_eq!(d, Rat::from_integer(best.into()), "d_{n}");
    }
}

#[test]
fn integrality_at_every_computed_index() {
    for n in (3..=15).step_by(2) {
        for name in [SeqName::T, SeqName::C, SeqName::S, SeqName::Tn] {
            if name == SeqName::T && n > 11 {
                continue;
            }
            let v = evaluate(name, n).unwrap();
            assert!(v.is_integer, "{name}({n}) = {}", v.value);
        }
        let c = seq_c_prime(n).unwrap();
        assert!(c.within_bound(), "c'_{n} = {}", c.value);
    }
    for p in [3, 5, 7, 11, 13] {
        for name in [SeqName::SPrime, SeqName::TPrime, SeqName::CPrime] {
            assert!(evaluate(name, p).unwrap().is_integer, "{name}({p})");
        }
    }
}

#[test]
fn out_of_domain_indices_are_errors() {
    for (name, n) in [
        (SeqName::SPrime, 9),
        (SeqName::TPrime, 15),
        (SeqName::C, 4),
        (SeqName::T, 1),
        (SeqName::S, -3),
    ] {
        assert!(evaluate(name, n).is_err(), "{name}({n})");
    }
}

#[test]
fn names_round_trip() {
    for name in SeqName::ALL {
        assert_eq!(name.as_str().parse::<SeqName>().unwrap(), name);
    }
}
