use num_bigint::BigUint;
use proptest::prelude::*;

use repeatscan::oracle::{minimal_period_naive, oracle_factorize, oracle_gapped, oracle_runs, oracle_subreps};
use repeatscan::random::random_word;
use repeatscan::{
    alpha_gapped_test, find_maximal_gapped_repeats, find_runs, find_subrepetitions, s_factorize, sum_exponents,
    ExponentSum, Rational, Word,
};

fn word(max_len: usize, sigma: u8) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..sigma, 0..=max_len).prop_map(|v| Word::from(v.into_iter().map(|c| b'a' + c).collect::<Vec<_>>()))
}

fn alpha() -> impl Strategy<Value = Rational> {
    (2u64..40, 1u64..12)
        .prop_filter("alpha > 1", |(n, d)| n > d)
        .prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn delta() -> impl Strategy<Value = Rational> {
    (1u64..12, 2u64..20)
        .prop_filter("delta < 1", |(n, d)| n < d)
        .prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn gapped_matches_oracle(w in word(60, 3), a in alpha()) {
        let mut got = find_maximal_gapped_repeats(&w, a).unwrap().to_sorted_vec();
        got.sort_unstable();
        prop_assert_eq!(got, oracle_gapped(&w, a).unwrap());
    }

    #[test]
    fn repeats_are_valid_and_gapped(w in word(80, 2), a in alpha()) {
        let lists = find_maximal_gapped_repeats(&w, a).unwrap();
        prop_assert!(lists.is_sorted_by_end());
        for g in lists.iter() {
            prop_assert!(g.is_valid_in(&w));
            prop_assert!(alpha_gapped_test(g.period as u64, g.copy_len as u64, a).unwrap());
        }
    }

    #[test]
    fn runs_match_oracle(w in word(80, 3)) {
        prop_assert_eq!(find_runs(&w), oracle_runs(&w));
    }

    #[test]
    fn runs_are_maximal_and_overlap_little(w in word(120, 2)) {
        let runs = find_runs(&w);
        for r in &runs {
            prop_assert!(r.is_valid_in(&w));
            prop_assert_eq!(minimal_period_naive(w.factor(r.start, r.end)), r.period);
        }
        // two distinct runs with the same period overlap by less than that period
        for (i, a) in runs.iter().enumerate() {
            for b in &runs[i + 1..] {
                if a.period == b.period && a.start < b.start {
                    prop_assert!(a.end < b.start + a.period - 1);
                }
            }
        }
        let bound = ExponentSum::from_integer(BigUint::from(4 * w.len()));
        prop_assert!(sum_exponents(&runs) <= bound);
    }

    #[test]
    fn factorization_matches_oracle(w in word(120, 3)) {
        prop_assume!(!w.is_empty());
        prop_assert_eq!(s_factorize(&w), oracle_factorize(&w));
    }

    #[test]
    fn subreps_match_oracle(w in word(60, 2), d in delta()) {
        prop_assert_eq!(find_subrepetitions(&w, d).unwrap(), oracle_subreps(&w, d).unwrap());
    }

    #[test]
    fn subreps_have_bounded_exponent(w in word(100, 2), d in delta()) {
        for s in find_subrepetitions(&w, d).unwrap() {
            prop_assert!(s.is_valid_in(&w));
            let (len, p) = (s.len() as u64, s.period as u64);
            // 1 + delta <= len/p < 2
            prop_assert!((d.num() + d.den()) * p <= len * d.den());
            prop_assert!(len < 2 * p);
        }
    }
}

#[test]
fn random_words_agree_with_oracles() {
    for seed in 0..6 {
        let w = random_word(700, 2 + seed as usize % 3, seed).unwrap();
        let a: Rational = "5/2".parse().unwrap();
        let mut got = find_maximal_gapped_repeats(&w, a).unwrap().to_sorted_vec();
        got.sort_unstable();
        assert_eq!(got, oracle_gapped(&w, a).unwrap());
        assert_eq!(find_runs(&w), oracle_runs(&w));
        let d: Rational = "2/5".parse().unwrap();
        assert_eq!(find_subrepetitions(&w, d).unwrap(), oracle_subreps(&w, d).unwrap());
    }
}
