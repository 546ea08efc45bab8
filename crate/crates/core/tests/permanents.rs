use arithper::cyclotomic::CycField;
use arithper::permanent::{
    det_divfree, det_field, for_each_permutation, per, per_naive, per_ryser, Mat,
};
use arithper::ring::{rat, Integers, Rat, Rationals, Ring, ZMod};
use num_bigint::BigInt;
use proptest::prelude::*;

fn int_matrix(max_n: usize, bound: i64) -> impl Strategy<Value = Mat<Integers>> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(-bound..=bound, n * n).prop_map(move |v| {
            Mat::new(Integers, n, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}

fn rat_matrix(max_n: usize) -> impl Strategy<Value = Mat<Rationals>> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((-9i64..=9, 1i64..=6), n * n).prop_map(move |v| {
            Mat::new(
                Rationals,
                n,
                v.into_iter().map(|(a, b)| rat(a, b)).collect(),
            )
            .unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ryser_matches_definition(m in int_matrix(7, 20)) {
        prop_assert_eq!(per_ryser(&m).unwrap(), per_naive(&m).unwrap());
        prop_assert_eq!(per(&m).unwrap(), per_naive(&m).unwrap());
    }

    #[test]
    fn huge_entries_leave_the_machine_word_path(m in int_matrix(6, 1 << 40)) {
        prop_assert_eq!(per(&m).unwrap(), per_naive(&m).unwrap());
    }

    #[test]
    fn rational_kernel_matches_definition(m in rat_matrix(6)) {
        prop_assert_eq!(per(&m).unwrap(), per_naive(&m).unwrap());
    }

    #[test]
    fn permanent_ignores_row_and_column_order(m in int_matrix(6, 9), seed in any::<u64>()) {
        let n = m.n();
        let mut rows: Vec<usize> = (0..n).collect();
        let mut cols: Vec<usize> = (0..n).collect();
        rows.rotate_left(seed as usize % n);
        cols.reverse();
        let p = m.permute(&rows, &cols).unwrap();
        prop_assert_eq!(per(&p).unwrap(), per(&m).unwrap());
        prop_assert_eq!(per(&m.transpose()).unwrap(), per(&m).unwrap());
    }

    #[test]
    fn permanent_is_linear_in_each_row(m in int_matrix(6, 9), extra in prop::collection::vec(-9i64..=9, 6), row in 0usize..6) {
        let n = m.n();
        let row = row % n;
        let mut other = m.clone();
        let mut sum = m.clone();
        for (k, &e) in extra.iter().enumerate().take(n) {
            other.set(row, k, BigInt::from(e));
            sum.set(row, k, m.get(row, k) + BigInt::from(e));
        }
        prop_assert_eq!(per(&sum).unwrap(), per(&m).unwrap() + per(&other).unwrap());
    }

    #[test]
    fn determinant_engines_agree(m in rat_matrix(6)) {
        prop_assert_eq!(det_divfree(&m).unwrap(), det_field(&m).unwrap());
    }

    #[test]
    fn determinant_is_multiplicative(a in int_matrix(5, 9), b in int_matrix(5, 9)) {
        prop_assume!(a.n() == b.n());
        prop_assert_eq!(det_divfree(&a.mul(&b)).unwrap(), det_divfree(&a).unwrap() * det_divfree(&b).unwrap());
    }

    #[test]
    fn residue_ring_permanent_is_reduction(m in int_matrix(6, 50)) {
        let z = ZMod::new(169).unwrap();
        let reduced = m.map(z, |v| z.elem(i64::try_from(v).unwrap())).unwrap();
        let exact = per(&m).unwrap();
        let expected = z.elem(i64::try_from(exact % BigInt::from(169)).unwrap());
        prop_assert_eq!(per(&reduced).unwrap(), expected);
    }
}

#[test]
fn leibniz_signs() {
    let mut sum = 0;
    let mut count = 0;
    for_each_permutation(5, |_, sign| {
        sum += sign;
        count += 1;
    });
    assert_eq!((count, sum), (120, 0));
}

#[test]
fn cyclotomic_permanent_matches_definition() {
    let f = CycField::new(7).unwrap();
    let m = Mat::from_fn(f.clone(), 5, |j, k| {
        f.add(
            &f.zeta_pow((j * k) as i64),
            &f.rational(rat(j as i64 + 1, k as i64 + 2)),
        )
    })
    .unwrap();
    assert!(f.equal(&per(&m).unwrap(), &per_naive(&m).unwrap()));
    assert!(f.equal(&det_field(&m).unwrap(), &det_divfree(&m).unwrap()));
}

#[test]
fn all_ones_permanent_is_factorial() {
    for n in 1..=10usize {
        let m = Mat::from_fn(Rationals, n, |_, _| Rat::from_integer(1.into())).unwrap();
        let fact: u64 = (1..=n as u64).product();
        assert_eq!(per(&m).unwrap(), Rat::from_integer(fact.into()));
    }
}

#[test]
fn empty_matrix_is_rejected() {
    let m = Mat::from_fn(Integers, 0, |_, _| BigInt::from(1)).unwrap();
    assert!(per(&m).is_err());
    assert!(per_ryser(&m).is_err());
}

#[test]
fn identity_determinant() {
    let z = ZMod::new(9).unwrap();
    let m = Mat::identity(z, 4);
    assert_eq!(det_divfree(&m).unwrap().value(), 1);
    assert!(z.equal(&per(&m).unwrap(), &z.one()));
}
