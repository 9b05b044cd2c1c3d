//! Maximal repetitions by divide and conquer.
//!
//! At each node `[l, r)` with midpoint `m` the runs containing both `m - 1`
//! and `m` are found from four extension tables over the two halves. A
//! candidate region is reported only if it is maximal in the whole word;
//! regions clipped by the node boundary are rediscovered at an ancestor.

use num_bigint::BigUint;
use num_rational::Ratio;

use crate::extensions::{lp_cross, lp_self, ls_cross, ls_self};
use crate::types::Run;
use crate::word::Word;

/// Exact sum of exponents of a set of runs.
pub type ExponentSum = Ratio<BigUint>;

/// All maximal repetitions of `w` with their minimal periods, sorted by
/// `(start, period)`.
pub fn find_runs(w: &Word) -> Vec<Run> {
    let mut found = Vec::new();
    collect(w, 0, w.len(), &mut found);

    // A region found with period p may also be found with a divisor of p;
    // the span is then identical and the smallest period is the minimal one.
    found.sort_unstable_by_key(|&(s, e, p)| (s, e, p));
    found.dedup_by_key(|&mut (s, e, _)| (s, e));
    let mut runs: Vec<Run> = found
        .into_iter()
        .map(|(s, e, p)| Run {
            start: s + 1,
            end: e + 1,
            period: p,
        })
        .collect();
    runs.sort_unstable_by_key(|r| (r.start, r.period));
    runs
}

/// Is the periodic region `w[s..=e]` (0-based) with period `p` maximal in `w`?
#[inline]
fn maximal(w: &[u8], s: usize, e: usize, p: usize) -> bool {
    (s == 0 || w[s - 1] != w[s - 1 + p]) && (e + 1 == w.len() || w[e + 1] != w[e + 1 - p])
}

fn collect(w: &[u8], l: usize, r: usize, out: &mut Vec<(usize, usize, usize)>) {
    if r - l < 2 {
        return;
    }
    let m = l + (r - l) / 2;
    collect(w, l, m, out);
    collect(w, m, r, out);

    let u = &w[l..m];
    let v = &w[m..r];

    // Periodicity anchored in the right half: w[x] = w[x + p] holds at x = m.
    let fwd = lp_self(v);
    let back = ls_cross(u, v);
    for p in 1..v.len() {
        let ahead = fwd.get(p + 1);
        let behind = back.get(p);
        if behind >= 1 && ahead + behind >= p {
            let (s, e) = (m - behind, m + p + ahead - 1);
            if maximal(w, s, e, p) {
                out.push((s, e, p));
            }
        }
    }

    // Periodicity anchored in the left half: w[x] = w[x + p] holds at x = m - p.
    let back = ls_self(u);
    let fwd = lp_cross(u, v);
    for p in 1..=u.len() {
        let behind = back.try_get(p).unwrap_or(0);
        let ahead = fwd.get(p - 1);
        if ahead >= 1 && ahead + behind >= p {
            let (s, e) = (m - p - behind, m + ahead - 1);
            if maximal(w, s, e, p) {
                out.push((s, e, p));
            }
        }
    }
}

/// `E(w)`: sum of `|r| / p(r)` over the given runs.
pub fn sum_exponents(runs: &[Run]) -> ExponentSum {
    runs.iter().fold(ExponentSum::from_integer(BigUint::from(0u32)), |acc, r| {
        acc + ExponentSum::new(BigUint::from(r.len()), BigUint::from(r.period))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_runs;

    fn spans(s: &str) -> Vec<(usize, usize, usize)> {
        find_runs(&Word::from(s))
            .iter()
            .map(|r| (r.start, r.end, r.period))
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(
            spans("aabaabaa"),
            vec![(1, 2, 1), (1, 8, 3), (4, 5, 1), (7, 8, 1)]
        );
        assert_eq!(spans("aaaa"), vec![(1, 4, 1)]);
        assert!(spans("abc").is_empty());
        assert!(spans("").is_empty());
        assert!(spans("a").is_empty());
    }

    #[test]
    fn exponent_sums() {
        let e = sum_exponents(&find_runs(&Word::from("aabaabaa")));
        assert_eq!(e, ExponentSum::new(26u32.into(), 3u32.into()));
        assert_eq!(e.to_string(), "26/3");
        assert_eq!(sum_exponents(&[]).to_string(), "0");
        assert_eq!(sum_exponents(&find_runs(&Word::from("aaaa"))).to_string(), "4");
    }

    #[test]
    fn matches_oracle_on_small_ternary() {
        for n in 0..=7 {
            for code in 0..3usize.pow(n) {
                let mut c = code;
                let w: Vec<u8> = (0..n)
                    .map(|_| {
                        let b = b'a' + (c % 3) as u8;
                        c /= 3;
                        b
                    })
                    .collect();
                let w = Word::new(w);
                assert_eq!(find_runs(&w), oracle_runs(&w), "word {w}");
            }
        }
    }

    #[test]
    fn fibonacci_word() {
        let (mut a, mut b) = (b"a".to_vec(), b"ab".to_vec());
        for _ in 0..12 {
            let next = [b.as_slice(), a.as_slice()].concat();
            a = std::mem::replace(&mut b, next);
        }
        let w = Word::new(b);
        let runs = find_runs(&w);
        assert_eq!(runs, oracle_runs(&w));
        assert!(runs.iter().all(|r| r.is_valid_in(&w)));
    }
}
