//! Non-overlapping s-factorization.
//!
//! The processed prefix `f_1 ... f_{i-1}` is kept in an online suffix
//! automaton. Every string the automaton accepts occurs inside that prefix,
//! so walking it from the root along `w[a_i..]` gives the longest factor
//! with a non-overlapping earlier occurrence. Each state remembers the end
//! of its first occurrence, which yields `Delta_i`.

use crate::types::Factor;
use crate::word::Word;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
struct State {
    len: u32,
    link: u32,
    /// 0-based end position of the first occurrence.
    first_end: u32,
    /// Sorted by symbol.
    next: Vec<(u8, u32)>,
}

impl State {
    #[inline]
    fn get(&self, c: u8) -> Option<u32> {
        self.next
            .binary_search_by_key(&c, |&(s, _)| s)
            .ok()
            .map(|k| self.next[k].1)
    }

    fn set(&mut self, c: u8, to: u32) {
        match self.next.binary_search_by_key(&c, |&(s, _)| s) {
            Ok(k) => self.next[k].1 = to,
            Err(k) => self.next.insert(k, (c, to)),
        }
    }
}

#[derive(Debug, Clone)]
struct SuffixAutomaton {
    states: Vec<State>,
    last: u32,
    fed: u32,
}

impl SuffixAutomaton {
    fn with_capacity(n: usize) -> Self {
        let mut states = Vec::with_capacity(2 * n.max(1));
        states.push(State {
            len: 0,
            link: NONE,
            first_end: 0,
            next: Vec::new(),
        });
        Self {
            states,
            last: 0,
            fed: 0,
        }
    }

    fn push(&mut self, c: u8) {
        let pos = self.fed;
        self.fed += 1;
        let cur = self.states.len() as u32;
        self.states.push(State {
            len: self.states[self.last as usize].len + 1,
            link: 0,
            first_end: pos,
            next: Vec::new(),
        });
        let mut p = self.last;
        while p != NONE && self.states[p as usize].get(c).is_none() {
            self.states[p as usize].set(c, cur);
            p = self.states[p as usize].link;
        }
        if p != NONE {
            let q = self.states[p as usize].get(c).unwrap();
            if self.states[p as usize].len + 1 == self.states[q as usize].len {
                self.states[cur as usize].link = q;
            } else {
                let clone = self.states.len() as u32;
                let mut cloned = self.states[q as usize].clone();
                cloned.len = self.states[p as usize].len + 1;
                self.states.push(cloned);
                while p != NONE && self.states[p as usize].get(c) == Some(q) {
                    self.states[p as usize].set(c, clone);
                    p = self.states[p as usize].link;
                }
                self.states[q as usize].link = clone;
                self.states[cur as usize].link = clone;
            }
        }
        self.last = cur;
    }

    /// Longest prefix of `s` accepted by the automaton, with the 0-based end
    /// of its first occurrence.
    fn longest_match(&self, s: &[u8]) -> (usize, usize) {
        let mut state = 0u32;
        let mut len = 0;
        for &c in s {
            match self.states[state as usize].get(c) {
                Some(to) => {
                    state = to;
                    len += 1;
                }
                None => break,
            }
        }
        (len, self.states[state as usize].first_end as usize)
    }
}

/// Computes the non-overlapping s-factorization of `w` with back-offsets.
///
/// The empty word has no factors.
pub fn s_factorize(w: &Word) -> Vec<Factor> {
    let n = w.len();
    assert!(n < u32::MAX as usize / 2, "word too long for 32-bit automaton");
    let mut factors = Vec::new();
    let mut sam = SuffixAutomaton::with_capacity(n);
    let mut pos = 0;
    while pos < n {
        let (matched, first_end) = sam.longest_match(&w[pos..]);
        let (len, delta) = if matched > 1 {
            let src = first_end + 1 - matched;
            (matched, Some(pos - src))
        } else {
            (1, None)
        };
        factors.push(Factor {
            index: factors.len() + 1,
            start: pos + 1,
            len,
            delta,
        });
        for &c in &w[pos..pos + len] {
            sam.push(c);
        }
        pos += len;
    }
    factors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_factorize;

    fn shape(s: &str) -> Vec<(usize, usize, Option<usize>)> {
        s_factorize(&Word::from(s))
            .iter()
            .map(|f| (f.start, f.len, f.delta))
            .collect()
    }

    /// Tiling, delta validity and greediness straight from the definition.
    fn check_contract(w: &Word, fs: &[Factor]) {
        let mut expect_start = 1;
        for (k, f) in fs.iter().enumerate() {
            assert_eq!(f.index, k + 1);
            assert_eq!(f.start, expect_start);
            assert!(f.len >= 1);
            let prefix = &w[..f.start - 1];
            match f.delta {
                Some(d) => {
                    assert!(f.len > 1 && d >= f.len && d < f.start);
                    let src = f.start - d;
                    assert_eq!(w.factor(src, src + f.len - 1), w.factor(f.start, f.end()));
                }
                None => assert_eq!(f.len, 1),
            }
            if f.end() < w.len() {
                let ext = w.factor(f.start, f.end() + 1);
                assert!(!prefix.windows(ext.len()).any(|win| win == ext));
            }
            expect_start += f.len;
        }
        assert_eq!(expect_start, w.len() + 1);
    }

    #[test]
    fn examples() {
        assert_eq!(
            shape("abaabab"),
            vec![(1, 1, None), (2, 1, None), (3, 1, None), (4, 3, Some(3)), (7, 1, None)]
        );
        assert_eq!(
            shape("aaaaa"),
            vec![(1, 1, None), (2, 1, None), (3, 2, Some(2)), (5, 1, None)]
        );
        assert_eq!(shape("abc"), vec![(1, 1, None), (2, 1, None), (3, 1, None)]);
        assert!(shape("").is_empty());
    }

    #[test]
    fn worked_factorizations() {
        let lens = |s: &str| s_factorize(&Word::from(s)).iter().map(|f| f.len).collect::<Vec<_>>();
        assert_eq!(lens("abyabcabyab"), vec![1, 1, 1, 2, 1, 5]);
        assert_eq!(lens("aabaaba"), vec![1, 1, 1, 3, 1]);
        assert_eq!(lens("qabzabcqabzab"), vec![1, 1, 1, 1, 2, 1, 6]);
        let f = s_factorize(&Word::from("zabcabzdzabcabz"));
        assert_eq!(f.len(), 8);
        assert_eq!((f[7].start, f[7].len, f[7].delta), (9, 7, Some(8)));
    }

    #[test]
    fn exhaustive_binary_contract() {
        for n in 1..=10 {
            for mask in 0u32..(1 << n) {
                let w: Word = (0..n).map(|i| b'a' + ((mask >> i) & 1) as u8).collect::<Vec<_>>().into();
                let fs = s_factorize(&w);
                check_contract(&w, &fs);
                let lens: Vec<_> = fs.iter().map(|f| (f.start, f.len)).collect();
                let oracle: Vec<_> = oracle_factorize(&w).iter().map(|f| (f.start, f.len)).collect();
                assert_eq!(lens, oracle, "word {w}");
            }
        }
    }

    #[test]
    fn large_alphabet() {
        let w = Word::new((0..=255u8).chain(0..=255u8).collect::<Vec<_>>());
        let fs = s_factorize(&w);
        check_contract(&w, &fs);
        assert_eq!(fs.len(), 257);
        assert_eq!(fs[256].len, 256);
        assert_eq!(fs[256].delta, Some(256));
    }
}
