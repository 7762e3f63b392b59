use korolat_core::rational::ratio;
use korolat_core::thresholds::{
    alpha, beta, find_branch, n_delta, s_double_prime, s_min, s_prime, Branch, DimensionBound,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn in_branch(delta: &BigRational, m: u32, branch: Branch) -> bool {
    match branch {
        Branch::Case1 => &beta(m) <= delta && delta < &alpha(m),
        Branch::Case2 => &alpha(m + 1) <= delta && delta < &beta(m),
    }
}

#[test]
fn alpha_beta_interleave() {
    for m in 1..=60 {
        assert!(alpha(m + 1) < beta(m) && beta(m) < alpha(m), "m={m}");
        assert!(beta(m) > ratio(1, 4));
    }
}

#[test]
fn s_prime_is_non_increasing() {
    let mut last = u64::MAX;
    // dense grid over (1/4, 1), ascending
    for k in 2_501..10_000i64 {
        let s = s_prime(&ratio(k, 10_000)).unwrap();
        assert!(s <= last, "delta={k}/10000");
        assert!(s >= 3);
        last = s;
    }
}

#[test]
fn table_boundaries_are_left_inclusive() {
    // just below 3/4 the published value jumps from 3 to 4
    assert_eq!(s_min(&ratio(3, 4)).unwrap().s_min.as_u64(), Some(3));
    let below = ratio(3, 4) - BigRational::new(BigInt::from(1), BigInt::from(10).pow(30));
    assert_eq!(s_min(&below).unwrap().s_min.as_u64(), Some(4));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]
    #[test]
    fn exactly_one_branch(num in 1i64..1_000_000, extra in 1i64..1_000_000) {
        // delta in (1/4, 1)
        let delta = ratio(1, 4) + ratio(3, 4) * ratio(num, num + extra);
        let (m, branch) = find_branch(&delta).unwrap();
        prop_assert!(in_branch(&delta, m, branch));
        let matches = (1..=m + 1)
            .flat_map(|k| [(k, Branch::Case1), (k, Branch::Case2)])
            .filter(|&(k, b)| in_branch(&delta, k, b))
            .count();
        prop_assert_eq!(matches, 1);
    }

    #[test]
    fn s_double_prime_denominator_is_positive(num in 1i64..1_000_000, extra in 1i64..1_000_000) {
        let delta = ratio(num, num + extra);
        let n = n_delta(&delta).unwrap();
        let den = &delta * ratio(160 + n as i64, 81) - ratio(1, 1);
        prop_assert!(den > ratio(0, 1));
        match s_double_prime(&delta).unwrap() {
            DimensionBound::Finite(v) => prop_assert!(v >= 3u32.into()),
            DimensionBound::Overflow => prop_assert!(n > 1_000_000),
        }
    }

    #[test]
    fn s_prime_at_least_three(num in 1i64..1_000_000, extra in 1i64..1_000_000) {
        let delta = ratio(1, 4) + ratio(3, 4) * ratio(num, num + extra);
        prop_assert!(s_prime(&delta).unwrap() >= 3);
    }
}
