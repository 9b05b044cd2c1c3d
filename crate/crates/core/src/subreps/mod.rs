//! Maximal δ-subrepetitions, obtained by discarding stretchable repeats
//! from the maximal `1/δ`-gapped repeats.

mod queue;

pub use queue::{BTreeQueue, PeriodQueue, VebQueue};

use crate::error::{logic_fault, Error, Result};
use crate::gapped::find_maximal_gapped_repeats;
use crate::rational::Rational;
use crate::runs::find_runs;
use crate::types::{minimal_period, GappedRepeat, Run, Subrepetition};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OsrKind {
    Run,
    Repeat,
}

/// A run or a gapped repeat reduced to `(beg, period, end)`. `source`
/// indexes the slice the element came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OsrElement {
    pub beg: usize,
    pub period: usize,
    pub end: usize,
    pub kind: OsrKind,
    pub source: usize,
}

fn counting_sort(items: Vec<OsrElement>, key: impl Fn(&OsrElement) -> usize, max_key: usize) -> Vec<OsrElement> {
    let mut count = vec![0usize; max_key + 2];
    for it in &items {
        count[key(it) + 1] += 1;
    }
    for i in 1..count.len() {
        count[i] += count[i - 1];
    }
    let mut out = vec![None; items.len()];
    for it in items {
        let slot = &mut count[key(&it)];
        out[*slot] = Some(it);
        *slot += 1;
    }
    out.into_iter().map(Option::unwrap).collect()
}

/// Merges runs and repeats ordered by `(beg, period)`. Two stable counting
/// passes, linear in the largest position plus the element count.
pub fn build_osr(runs: &[Run], repeats: &[GappedRepeat]) -> Vec<OsrElement> {
    let mut items = Vec::with_capacity(runs.len() + repeats.len());
    for (i, r) in runs.iter().enumerate() {
        items.push(OsrElement { beg: r.start, period: r.period, end: r.end, kind: OsrKind::Run, source: i });
    }
    for (i, g) in repeats.iter().enumerate() {
        items.push(OsrElement { beg: g.start(), period: g.period, end: g.end(), kind: OsrKind::Repeat, source: i });
    }
    let max_pos = items.iter().map(|e| e.end).max().unwrap_or(0);
    let by_period = counting_sort(items, |e| e.period, max_pos);
    counting_sort(by_period, |e| e.beg, max_pos)
}

/// Queue of `(period, end)` pairs kept strictly increasing in both
/// coordinates.
#[derive(Debug, Clone, Default)]
pub struct Srq<Q: PeriodQueue = BTreeQueue> {
    queue: Q,
}

impl Srq<BTreeQueue> {
    pub fn new() -> Self {
        Self::default()
    }
}

impl<Q: PeriodQueue> Srq<Q> {
    pub fn with_queue(queue: Q) -> Self {
        Self { queue }
    }

    /// Processes one element. Returns `true` if it is a stretchable repeat.
    pub fn offer(&mut self, el: &OsrElement) -> Result<bool> {
        let (p, q) = (el.period, el.end);
        if let Some((pi, qi)) = self.queue.predecessor(p) {
            if q <= qi {
                if pi == p {
                    return Err(logic_fault!(
                        "queue pair ({pi},{qi}) dominates element at beg {} with equal period",
                        el.beg
                    ));
                }
                if el.kind == OsrKind::Run {
                    return Err(logic_fault!(
                        "run ({},{},{p}) would be stretched by ({pi},{qi})",
                        el.beg,
                        el.end
                    ));
                }
                return Ok(true);
            }
        }
        self.queue.insert(p, q);
        while let Some((ps, qs)) = self.queue.successor(p) {
            if qs > q {
                break;
            }
            self.queue.remove(ps);
        }
        Ok(false)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.queue.pairs()
    }

    pub fn len(&self) -> usize {
        self.queue.len()
    }

    pub fn is_empty(&self) -> bool {
        self.queue.is_empty()
    }
}

/// Result of scanning an OSR sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterOutcome {
    /// Indices into the OSR sequence of elements marked stretchable.
    pub stretchable: Vec<usize>,
    /// Queue contents after the last element.
    pub final_queue: Vec<(usize, usize)>,
}

pub fn filter_stretchable(osr: &[OsrElement]) -> Result<FilterOutcome> {
    filter_stretchable_with(osr, BTreeQueue::new())
}

pub fn filter_stretchable_with<Q: PeriodQueue>(osr: &[OsrElement], queue: Q) -> Result<FilterOutcome> {
    let mut srq = Srq::with_queue(queue);
    let mut stretchable = Vec::new();
    for (idx, el) in osr.iter().enumerate() {
        if srq.offer(el)? {
            stretchable.push(idx);
        }
    }
    Ok(FilterOutcome { stretchable, final_queue: srq.pairs() })
}

fn check_delta(delta: Rational) -> Result<()> {
    if !delta.is_less_than_one() {
        return Err(Error::InvalidParameter(format!("delta must lie in (0,1), got {delta}")));
    }
    Ok(())
}

/// Every maximal `1/δ`-gapped repeat paired with its principal flag as
/// decided by the queue filter.
pub fn principal_verdicts(w: &Word, delta: Rational) -> Result<Vec<(GappedRepeat, bool)>> {
    check_delta(delta)?;
    let runs = find_runs(w);
    let repeats = find_maximal_gapped_repeats(w, delta.recip())?.to_sorted_vec();
    let osr = build_osr(&runs, &repeats);
    let universe = w.len() + 1;
    let outcome = if w.len() >= 1 << 16 {
        filter_stretchable_with(&osr, VebQueue::with_universe(universe))?
    } else {
        filter_stretchable(&osr)?
    };
    let mut principal = vec![true; repeats.len()];
    for idx in outcome.stretchable {
        principal[osr[idx].source] = false;
    }
    Ok(repeats.into_iter().zip(principal).collect())
}

/// All maximal δ-subrepetitions of `w`, sorted by `(start, period)`.
pub fn find_subrepetitions(w: &Word, delta: Rational) -> Result<Vec<Subrepetition>> {
    let mut out: Vec<Subrepetition> = principal_verdicts(w, delta)?
        .into_iter()
        .filter(|&(g, principal)| {
            principal && delta.mul_le(g.period as u64, g.copy_len as u64)
        })
        .map(|(g, _)| Subrepetition { start: g.start(), end: g.end(), period: g.period })
        .collect();
    out.sort_by_key(|s| (s.start, s.period));
    Ok(out)
}

/// Principal test by computing the minimal period of the repeat's span.
pub fn is_principal_direct(w: &Word, sigma: &GappedRepeat) -> bool {
    minimal_period(w.factor(sigma.start(), sigma.end())) == sigma.period
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn osr_of(text: &str, delta: &str) -> Vec<OsrElement> {
        let w = Word::from(text);
        let runs = find_runs(&w);
        let reps = find_maximal_gapped_repeats(&w, r(delta).recip()).unwrap().to_sorted_vec();
        build_osr(&runs, &reps)
    }

    fn triples(osr: &[OsrElement]) -> Vec<(usize, usize, usize, OsrKind)> {
        osr.iter().map(|e| (e.beg, e.period, e.end, e.kind)).collect()
    }

    #[test]
    fn osr_examples() {
        use OsrKind::*;
        assert_eq!(
            triples(&osr_of("aabaa", "1/2")),
            vec![(1, 1, 2, Run), (1, 3, 5, Repeat), (2, 2, 4, Repeat), (4, 1, 5, Run)]
        );
        assert_eq!(triples(&osr_of("aaaa", "1/3")), vec![(1, 1, 4, Run), (1, 3, 4, Repeat)]);
        assert!(build_osr(&[], &[]).is_empty());
    }

    #[test]
    fn filter_examples() {
        let osr = osr_of("aaaa", "1/3");
        let out = filter_stretchable(&osr).unwrap();
        assert_eq!(out.stretchable, vec![1]);
        assert_eq!(out.final_queue, vec![(1, 4)]);

        let out = filter_stretchable(&osr_of("aabaa", "1/2")).unwrap();
        assert!(out.stretchable.is_empty());
        assert_eq!(out.final_queue, vec![(1, 5)]);

        assert!(filter_stretchable(&[]).unwrap().stretchable.is_empty());
    }

    #[test]
    fn stretched_run_is_a_fault() {
        let el = |beg, period, end, kind| OsrElement { beg, period, end, kind, source: 0 };
        let osr = [el(1, 1, 9, OsrKind::Run), el(2, 2, 8, OsrKind::Run)];
        assert!(matches!(filter_stretchable(&osr), Err(Error::LogicFault(_))));
        let osr = [el(1, 2, 9, OsrKind::Run), el(3, 2, 8, OsrKind::Repeat)];
        assert!(matches!(filter_stretchable(&osr), Err(Error::LogicFault(_))));
    }

    #[test]
    fn subrepetition_examples() {
        let sub = |s, e, p| Subrepetition { start: s, end: e, period: p };
        let got = find_subrepetitions(&Word::from("abaab"), r("1/2")).unwrap();
        assert_eq!(got, vec![sub(1, 3, 2), sub(1, 5, 3)]);
        let got = find_subrepetitions(&Word::from("abyabcabyab"), r("1/2")).unwrap();
        assert_eq!(got, vec![sub(1, 5, 3), sub(1, 11, 6), sub(4, 8, 3), sub(7, 11, 3)]);
        assert!(find_subrepetitions(&Word::from("aaaa"), r("1/3")).unwrap().is_empty());
        assert!(find_subrepetitions(&Word::from("abc"), r("1/2")).unwrap().is_empty());
    }

    #[test]
    fn delta_must_be_proper_fraction() {
        let w = Word::from("abab");
        assert!(find_subrepetitions(&w, r("1")).is_err());
        assert!(find_subrepetitions(&w, r("3/2")).is_err());
    }

    #[test]
    fn principal_examples() {
        assert!(!is_principal_direct(&Word::from("aaaa"), &GappedRepeat::new(1, 1, 3)));
        assert!(is_principal_direct(&Word::from("abaab"), &GappedRepeat::new(1, 2, 3)));
        assert!(is_principal_direct(&Word::from("aabaa"), &GappedRepeat::new(2, 1, 2)));
    }

    #[test]
    fn filter_agrees_with_direct_test() {
        for n in 1..=10usize {
            for mask in 0u32..(1 << n) {
                let text: Vec<u8> = (0..n).map(|i| if mask >> i & 1 == 1 { b'b' } else { b'a' }).collect();
                let w = Word::from(text);
                for d in ["1/4", "1/3", "1/2"] {
                    for (g, principal) in principal_verdicts(&w, r(d)).unwrap() {
                        assert_eq!(principal, is_principal_direct(&w, &g), "{w} {g} delta {d}");
                    }
                }
            }
        }
    }

    #[derive(Default)]
    struct Checked(BTreeQueue);

    impl Checked {
        fn check(&self) {
            let pairs = self.0.pairs();
            assert!(pairs.windows(2).all(|x| x[0].0 < x[1].0 && x[0].1 < x[1].1), "{pairs:?}");
        }
    }

    impl PeriodQueue for Checked {
        fn predecessor(&self, p: usize) -> Option<(usize, usize)> {
            self.0.predecessor(p)
        }
        fn successor(&self, p: usize) -> Option<(usize, usize)> {
            self.0.successor(p)
        }
        fn insert(&mut self, p: usize, q: usize) {
            self.0.insert(p, q);
        }
        fn remove(&mut self, p: usize) {
            self.0.remove(p);
        }
        fn len(&self) -> usize {
            self.0.len()
        }
        fn pairs(&self) -> Vec<(usize, usize)> {
            self.0.pairs()
        }
    }

    #[test]
    fn queue_stays_doubly_monotone() {
        // the sweep after an insertion passes through non-monotone states,
        // so the check runs once per element
        for n in 1..=10usize {
            for mask in 0u32..(1 << n) {
                let text: Vec<u8> = (0..n).map(|i| if mask >> i & 1 == 1 { b'b' } else { b'a' }).collect();
                let w = Word::from(text);
                let runs = find_runs(&w);
                let reps = find_maximal_gapped_repeats(&w, r("3")).unwrap().to_sorted_vec();
                let osr = build_osr(&runs, &reps);
                let mut srq = Srq::with_queue(Checked::default());
                for el in &osr {
                    srq.offer(el).unwrap();
                    srq.queue.check();
                }
            }
        }
    }
}
