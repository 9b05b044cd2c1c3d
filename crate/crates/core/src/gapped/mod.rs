//! Maximal alpha-gapped repeats.
//!
//! The word is factorized with the non-overlapping s-factorization and
//! scanned factor by factor. Step `i` finds every repeat whose end lies in
//! `f_i`, split into five disjoint groups:
//!
//! * left copy contains the frontier before `f_i`,
//! * right copy contains that frontier,
//! * neither copy contains it but the repeat starts at or before `a_i`,
//! * repeats strictly inside `f_i`, copied from the earlier occurrence of `f_i`,
//! * repeats ending at `b_i` and starting after `a_i`.
//!
//! The first three are gathered per end position and then moved to
//! per-start lists, which keeps every start list sorted by end position and
//! lets the copying step take a prefix of each list.
//!
//! A rational `alpha` is handled by searching with `k = ceil(alpha)` and
//! keeping the candidates that pass the exact `alpha` test.

mod cases;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::factorization::s_factorize;
use crate::rational::{is_alpha_gapped, Rational};
use crate::types::{minimal_period, prefix_function, Factor, GappedRepeat, RepeatClass};
use crate::word::Word;

pub use cases::mid_ladder;
use cases::Step;

/// Found repeats grouped by start position; each group is sorted by
/// non-decreasing end position.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StartLists {
    lists: Vec<Vec<GappedRepeat>>,
    total: usize,
}

impl StartLists {
    fn new(n: usize) -> Self {
        Self {
            lists: vec![Vec::new(); n],
            total: 0,
        }
    }

    fn push(&mut self, r: GappedRepeat) {
        let list = &mut self.lists[r.left_start - 1];
        debug_assert!(list.last().is_none_or(|last| last.end() <= r.end()));
        list.push(r);
        self.total += 1;
    }

    /// Repeats starting at 1-based position `j`.
    pub fn get(&self, j: usize) -> &[GappedRepeat] {
        &self.lists[j - 1]
    }

    /// Length of the underlying word.
    pub fn word_len(&self) -> usize {
        self.lists.len()
    }

    /// Total number of repeats.
    pub fn len(&self) -> usize {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    /// All repeats, by start and then by end.
    pub fn iter(&self) -> impl Iterator<Item = &GappedRepeat> + '_ {
        self.lists.iter().flatten()
    }

    pub fn is_sorted_by_end(&self) -> bool {
        self.lists
            .iter()
            .all(|l| l.windows(2).all(|p| p[0].end() <= p[1].end()))
    }

    /// Flattened and sorted by `(left start, end, period)`.
    pub fn to_sorted_vec(&self) -> Vec<GappedRepeat> {
        let mut v: Vec<_> = self.iter().copied().collect();
        v.sort_unstable_by_key(GappedRepeat::output_key);
        v
    }
}

/// Which sub-search produced a repeat.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SearchCase {
    LeftCopyCrossing,
    RightCopyCrossing,
    Middle,
    Replicated,
    EndPinned,
}

/// Hooks into the step loop, for tests and diagnostics.
pub trait SearchObserver {
    /// Called once for every repeat accepted into the output.
    fn emitted(&mut self, _step: usize, _case: SearchCase, _repeat: &GappedRepeat) {}
    /// Called after step `step` has stored everything it found.
    fn step_done(&mut self, _step: usize, _lists: &StartLists) {}
}

impl SearchObserver for () {}

fn check_alpha(alpha: Rational) -> Result<()> {
    if alpha.is_greater_than_one() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("alpha must exceed 1, got {alpha}")))
    }
}

/// All maximal `alpha`-gapped repeats of `w`.
pub fn find_maximal_gapped_repeats(w: &Word, alpha: Rational) -> Result<StartLists> {
    find_maximal_gapped_repeats_observed(w, alpha, &mut ())
}

/// [`find_maximal_gapped_repeats`] reporting every emission and step to `obs`.
pub fn find_maximal_gapped_repeats_observed(
    w: &Word,
    alpha: Rational,
    obs: &mut impl SearchObserver,
) -> Result<StartLists> {
    check_alpha(alpha)?;
    let n = w.len();
    let mut lists = StartLists::new(n);
    if n == 0 {
        return Ok(lists);
    }
    let factors = s_factorize(w);
    let k = usize::try_from(alpha.ceil()).map_err(|_| Error::InvalidParameter("alpha too large".into()))?;
    let keep = |r: &GappedRepeat| is_alpha_gapped(r.period as u64, r.copy_len as u64, alpha);

    let mut found = Vec::new();
    // rungs depend only on (k, l); factor lengths repeat a lot
    let mut ladders: HashMap<usize, Vec<usize>> = HashMap::new();
    // fin[j - a_i]: repeats of the current step ending at j
    let mut fin: Vec<Vec<GappedRepeat>> = Vec::new();
    for i in 2..=factors.len() {
        let st = Step::new(n, &factors, i)?;
        fin.iter_mut().for_each(Vec::clear);
        if fin.len() < st.l {
            fin.resize(st.l, Vec::new());
        }

        let ladder = ladders.entry(st.l).or_insert_with(|| mid_ladder(k, st.l));
        for case in [SearchCase::LeftCopyCrossing, SearchCase::RightCopyCrossing, SearchCase::Middle] {
            found.clear();
            match case {
                SearchCase::LeftCopyCrossing => cases::left_crossing(w, &st, k, &mut found)?,
                SearchCase::RightCopyCrossing => cases::right_crossing(w, &st, k, &mut found)?,
                _ => cases::middle_with_ladder(w, &st, k, ladder, &mut found)?,
            }
            for r in found.iter().filter(|r| keep(r)) {
                obs.emitted(i, case, r);
                fin[r.end() - st.a].push(*r);
            }
        }
        for bucket in &fin[..st.l] {
            for &r in bucket {
                lists.push(r);
            }
        }

        found.clear();
        cases::replicate(w, &st, &lists, k, &mut found)?;
        for r in &found {
            obs.emitted(i, SearchCase::Replicated, r);
            lists.push(*r);
        }

        found.clear();
        cases::end_pinned(w, &st, k, &mut found)?;
        for r in found.iter().filter(|r| keep(r)) {
            obs.emitted(i, SearchCase::EndPinned, r);
            lists.push(*r);
        }

        obs.step_done(i, &lists);
    }
    Ok(lists)
}

fn checked_k(k: usize) -> Result<()> {
    if k >= 2 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")))
    }
}

macro_rules! single_case {
    ($(#[$doc:meta])* $name:ident => $inner:path) => {
        $(#[$doc])*
        pub fn $name(w: &Word, factors: &[Factor], i: usize, k: usize) -> Result<Vec<GappedRepeat>> {
            checked_k(k)?;
            let st = Step::new(w.len(), factors, i)?;
            let mut out = Vec::new();
            $inner(w, &st, k, &mut out)?;
            out.sort_unstable_by_key(GappedRepeat::output_key);
            Ok(out)
        }
    };
}

single_case!(
    /// Maximal `k`-gapped repeats ending in `f_i` whose left copy contains
    /// the frontier before `f_i`.
    fgr_lrt => cases::left_crossing
);
single_case!(
    /// Maximal `k`-gapped repeats ending in `f_i` whose right copy contains
    /// the frontier before `f_i`.
    fgr_rrt => cases::right_crossing
);
single_case!(
    /// Maximal `k`-gapped repeats ending in `f_i`, starting at or before
    /// `a_i`, with neither copy containing the frontier.
    fgr_mid => cases::middle
);
single_case!(
    /// Maximal `k`-gapped repeats ending exactly at `b_i` and starting after `a_i`.
    fgr_end => cases::end_pinned
);

/// Repeats strictly inside `f_i`, obtained by translating repeats already in
/// `lists` by `Delta_i`. `lists` must hold every repeat ending before `a_i`.
pub fn sgr_replicate(w: &Word, factors: &[Factor], i: usize, lists: &StartLists) -> Result<Vec<GappedRepeat>> {
    let st = Step::new(w.len(), factors, i)?;
    let mut out = Vec::new();
    cases::replicate(w, &st, lists, usize::MAX, &mut out)?;
    Ok(out)
}

/// True if some prefix of `u` of length at least `|u| / 2` is a repetition.
fn has_long_periodic_prefix(u: &[u8]) -> bool {
    let pi = prefix_function(u);
    let c = u.len();
    (c.div_ceil(2).max(1)..=c).any(|len| 2 * (len - pi[len - 1]) <= len)
}

/// Periodic / prefix-semiperiodic / suffix-semiperiodic / ordinary, judged on
/// the copy of `sigma`. A copy that is both prefix- and suffix-semiperiodic
/// is reported as prefix-semiperiodic.
pub fn classify(w: &Word, sigma: &GappedRepeat) -> RepeatClass {
    let copy = w.factor(sigma.left_start, sigma.left_end());
    if 2 * minimal_period(copy) <= copy.len() {
        return RepeatClass::Periodic;
    }
    if has_long_periodic_prefix(copy) {
        return RepeatClass::PrefixSemiperiodic;
    }
    let rev: Vec<u8> = copy.iter().rev().copied().collect();
    if has_long_periodic_prefix(&rev) {
        return RepeatClass::SuffixSemiperiodic;
    }
    RepeatClass::Ordinary
}
