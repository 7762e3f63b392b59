use korolat_core::contfrac::{larcher_search, ContinuedFraction};
use korolat_core::modp::inv_mod;

mod oracles;

#[test]
fn round_trip_and_canonical_form() {
    for n in 2..=2000u64 {
        for x in 1..n {
            let e = ContinuedFraction::expand(x, n).unwrap();
            let g = oracles::gcd(x, n);
            assert_eq!(e.evaluate(), (x / g, n / g), "{x}/{n}");
            if e.len() >= 2 {
                assert!(*e.quotients().last().unwrap() >= 2);
            }
            assert!(e.quotients().iter().all(|&b| b >= 1));
        }
    }
}

#[test]
fn inverse_has_the_same_quotient_sum() {
    for n in 2..=500u64 {
        for x in (1..n).filter(|&x| oracles::gcd(x, n) == 1) {
            let inv = inv_mod(x, n).unwrap();
            assert_eq!(
                ContinuedFraction::expand(x, n).unwrap().quotient_sum(),
                ContinuedFraction::expand(inv, n).unwrap().quotient_sum(),
                "{x}/{n}"
            );
        }
    }
}

#[test]
fn larcher_matches_subtraction_oracle() {
    for n in 2..=300u64 {
        let mut best = (0, u64::MAX);
        for g in (1..n).filter(|&g| oracles::gcd(g, n) == 1) {
            let sum: u64 = oracles::cf_by_subtraction(g, n).iter().sum();
            if sum < best.1 {
                best = (g, sum);
            }
        }
        assert_eq!(larcher_search(n).unwrap(), best, "N={n}");
    }
}
