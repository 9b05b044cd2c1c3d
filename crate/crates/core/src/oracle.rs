//! Brute-force reference implementations.
//!
//! Everything here works straight from the definitions in quadratic (or
//! worse) time and shares no helpers with the fast modules, so the two can
//! be compared against each other.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::types::{Factor, GappedRepeat, Run, Subrepetition};
use crate::word::Word;

/// Smallest `p >= 1` with `u[i] == u[i + p]` for all valid `i`, by trying
/// every candidate in turn. Returns 0 for the empty word.
pub fn minimal_period_naive(u: &[u8]) -> usize {
    (1..=u.len())
        .find(|&p| (0..u.len() - p).all(|i| u[i] == u[i + p]))
        .unwrap_or(0)
}

/// Maximal blocks of `w[i] == w[i + p]` as `(start, len)` pairs, 0-based.
fn match_blocks(w: &[u8], p: usize) -> Vec<(usize, usize)> {
    let mut blocks = Vec::new();
    let mut i = 0;
    while i + p < w.len() {
        if w[i] == w[i + p] {
            let start = i;
            while i + p < w.len() && w[i] == w[i + p] {
                i += 1;
            }
            blocks.push((start, i - start));
        } else {
            i += 1;
        }
    }
    blocks
}

/// All maximal `alpha`-gapped repeats, sorted by `(left start, period, copy length)`.
pub fn oracle_gapped(w: &Word, alpha: Rational) -> Result<Vec<GappedRepeat>> {
    if alpha.num() <= alpha.den() {
        return Err(Error::InvalidParameter(format!("alpha must exceed 1, got {alpha}")));
    }
    let mut out = Vec::new();
    for p in 1..w.len() {
        for (start, c) in match_blocks(w, p) {
            let gapped = (p as u128) * (alpha.den() as u128) <= (alpha.num() as u128) * (c as u128);
            if c < p && gapped {
                out.push(GappedRepeat::new(start + 1, c, p));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All maximal repetitions, sorted by `(start, period)`.
pub fn oracle_runs(w: &Word) -> Vec<Run> {
    let mut out: Vec<Run> = Vec::new();
    for p in 1..w.len() {
        for (start, c) in match_blocks(w, p) {
            if c < p {
                continue;
            }
            let span = &w[start..start + p + c];
            if minimal_period_naive(span) == p {
                out.push(Run {
                    start: start + 1,
                    end: start + p + c,
                    period: p,
                });
            }
        }
    }
    out.sort_by_key(|r| (r.start, r.end, r.period));
    out.dedup_by_key(|r| (r.start, r.end));
    out.sort_by_key(|r| (r.start, r.period));
    out
}

/// All maximal `delta`-subrepetitions, sorted by `(start, period)`.
pub fn oracle_subreps(w: &Word, delta: Rational) -> Result<Vec<Subrepetition>> {
    if delta.num() >= delta.den() {
        return Err(Error::InvalidParameter(format!("delta must lie in (0, 1), got {delta}")));
    }
    let mut out = Vec::new();
    for p in 1..w.len() {
        for (start, c) in match_blocks(w, p) {
            // c >= delta * p
            let long_enough = (c as u128) * (delta.den() as u128) >= (delta.num() as u128) * (p as u128);
            if c == 0 || c >= p || !long_enough {
                continue;
            }
            if minimal_period_naive(&w[start..start + p + c]) == p {
                out.push(Subrepetition {
                    start: start + 1,
                    end: start + p + c,
                    period: p,
                });
            }
        }
    }
    out.sort_by_key(|s| (s.start, s.period));
    Ok(out)
}

/// Non-overlapping s-factorization by quadratic search: at each position try
/// every earlier start and keep the longest match that ends in the prefix.
pub fn oracle_factorize(w: &Word) -> Vec<Factor> {
    let n = w.len();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < n {
        let mut best_len = 0;
        let mut best_src = 0;
        for src in 0..pos {
            let mut l = 0;
            while pos + l < n && src + l < pos && w[src + l] == w[pos + l] {
                l += 1;
            }
            if l > best_len {
                best_len = l;
                best_src = src;
            }
        }
        let (len, delta) = if best_len > 1 {
            (best_len, Some(pos - best_src))
        } else {
            (1, None)
        };
        out.push(Factor {
            index: out.len() + 1,
            start: pos + 1,
            len,
            delta,
        });
        pos += len;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn rep(ls: usize, le: usize, rs: usize) -> GappedRepeat {
        GappedRepeat::new(ls, le + 1 - ls, rs - ls)
    }

    #[test]
    fn naive_periods() {
        assert_eq!(minimal_period_naive(b"aabaa"), 3);
        assert_eq!(minimal_period_naive(b"a"), 1);
        assert_eq!(minimal_period_naive(b"abab"), 2);
    }

    #[test]
    fn gapped_examples() {
        let w = Word::from("aabaa");
        assert_eq!(
            oracle_gapped(&w, r("2")).unwrap(),
            vec![rep(1, 2, 4), rep(2, 2, 4)]
        );
        assert_eq!(
            oracle_gapped(&w, r("4")).unwrap(),
            vec![rep(1, 2, 4), rep(1, 1, 5), rep(2, 2, 4)]
        );
        assert!(oracle_gapped(&Word::from("abc"), r("2")).unwrap().is_empty());
        assert!(oracle_gapped(&w, r("1")).is_err());
    }

    #[test]
    fn runs_examples() {
        let runs = oracle_runs(&Word::from("aabaabaa"));
        let got: Vec<_> = runs.iter().map(|r| (r.start, r.end, r.period)).collect();
        assert_eq!(got, vec![(1, 2, 1), (1, 8, 3), (4, 5, 1), (7, 8, 1)]);
        let runs = oracle_runs(&Word::from("aaaa"));
        assert_eq!(runs, vec![Run { start: 1, end: 4, period: 1 }]);
        assert!(oracle_runs(&Word::from("abc")).is_empty());
    }

    #[test]
    fn subrep_examples() {
        let got: Vec<_> = oracle_subreps(&Word::from("abaab"), r("1/2"))
            .unwrap()
            .iter()
            .map(|s| (s.start, s.end, s.period))
            .collect();
        assert_eq!(got, vec![(1, 3, 2), (1, 5, 3)]);
        assert!(oracle_subreps(&Word::from("aaaa"), r("1/3")).unwrap().is_empty());
        assert!(oracle_subreps(&Word::from("abc"), r("1/2")).unwrap().is_empty());
        assert!(oracle_subreps(&Word::from("abc"), r("1")).is_err());
    }

    #[test]
    fn factorize_examples() {
        let shape = |s: &str| -> Vec<(usize, Option<usize>)> {
            oracle_factorize(&Word::from(s)).iter().map(|f| (f.len, f.delta)).collect()
        };
        assert_eq!(
            shape("abaabab"),
            vec![(1, None), (1, None), (1, None), (3, Some(3)), (1, None)]
        );
        assert_eq!(shape("aaaaa"), vec![(1, None), (1, None), (2, Some(2)), (1, None)]);
        assert_eq!(shape("abc"), vec![(1, None); 3]);
        assert!(oracle_factorize(&Word::default()).is_empty());
    }
}
