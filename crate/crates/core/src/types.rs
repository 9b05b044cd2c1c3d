//! Result records. All positions are 1-based and inclusive.

use std::fmt;

use crate::word::Word;

/// Minimal period of `u` via the prefix (failure) function.
pub(crate) fn minimal_period(u: &[u8]) -> usize {
    if u.is_empty() {
        return 0;
    }
    let border = prefix_function(u)[u.len() - 1];
    u.len() - border
}

/// `pi[i]` is the length of the longest proper border of `u[..=i]`.
pub(crate) fn prefix_function(u: &[u8]) -> Vec<usize> {
    let mut pi = vec![0usize; u.len()];
    for i in 1..u.len() {
        let mut k = pi[i - 1];
        while k > 0 && u[i] != u[k] {
            k = pi[k - 1];
        }
        if u[i] == u[k] {
            k += 1;
        }
        pi[i] = k;
    }
    pi
}

/// A maximal repetition (run) `w[start..=end]` with minimal period `period`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Run {
    pub start: usize,
    pub end: usize,
    pub period: usize,
}

impl Run {
    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Checks every structural invariant against `w`, including minimality
    /// of the period. Costs O(len).
    pub fn is_valid_in(&self, w: &Word) -> bool {
        let n = w.len();
        if self.start == 0 || self.end > n || self.start > self.end || self.period == 0 {
            return false;
        }
        if self.len() < 2 * self.period {
            return false;
        }
        if minimal_period(w.factor(self.start, self.end)) != self.period {
            return false;
        }
        boundaries_maximal(w, self.start, self.end, self.period)
    }
}

fn boundaries_maximal(w: &Word, start: usize, end: usize, period: usize) -> bool {
    let n = w.len();
    if start > 1 && w.at(start - 1) == w.at(start - 1 + period) {
        return false;
    }
    if end < n && w.at(end + 1 - period) == w.at(end + 1) {
        return false;
    }
    true
}

/// A gapped repeat `(u', u'')` given by the start of its left copy, the copy
/// length and the period (distance between the copies' starts).
///
/// Two repeats covering the same span with different periods are different
/// values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GappedRepeat {
    pub left_start: usize,
    pub period: usize,
    pub copy_len: usize,
}

impl GappedRepeat {
    pub fn new(left_start: usize, copy_len: usize, period: usize) -> Self {
        Self {
            left_start,
            period,
            copy_len,
        }
    }

    pub fn left_end(&self) -> usize {
        self.left_start + self.copy_len - 1
    }

    pub fn right_start(&self) -> usize {
        self.left_start + self.period
    }

    pub fn right_end(&self) -> usize {
        self.left_start + self.period + self.copy_len - 1
    }

    pub fn start(&self) -> usize {
        self.left_start
    }

    pub fn end(&self) -> usize {
        self.right_end()
    }

    pub fn span_len(&self) -> usize {
        self.period + self.copy_len
    }

    pub fn gap_len(&self) -> usize {
        self.period - self.copy_len
    }

    /// The same repeat moved `by` positions to the right.
    pub fn shifted(&self, by: usize) -> Self {
        Self {
            left_start: self.left_start + by,
            ..*self
        }
    }

    /// Sort key used for printed output: `(left start, end, period)`.
    pub fn output_key(&self) -> (usize, usize, usize) {
        (self.left_start, self.end(), self.period)
    }

    /// Checks the copies are equal, the gap is nonempty and both copies are
    /// maximal. Costs O(copy_len).
    pub fn is_valid_in(&self, w: &Word) -> bool {
        let n = w.len();
        if self.left_start == 0 || self.copy_len == 0 || self.copy_len >= self.period {
            return false;
        }
        if self.end() > n {
            return false;
        }
        let left = w.factor(self.left_start, self.left_end());
        let right = w.factor(self.right_start(), self.right_end());
        left == right && boundaries_maximal(w, self.left_start, self.end(), self.period)
    }
}

impl fmt::Display for GappedRepeat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}..{}, {}..{}, p={})",
            self.left_start,
            self.left_end(),
            self.right_start(),
            self.right_end(),
            self.period
        )
    }
}

/// A maximal subrepetition `w[start..=end]` with minimal period `period` and
/// exponent in `[1 + delta, 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subrepetition {
    pub start: usize,
    pub end: usize,
    pub period: usize,
}

impl Subrepetition {
    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The gapped repeat formed by the prefix and suffix of length
    /// `len - period`.
    pub fn respective_repeat(&self) -> GappedRepeat {
        GappedRepeat::new(self.start, self.len() - self.period, self.period)
    }

    /// Structural checks except the `delta` bound: exponent in `(1, 2)`,
    /// minimal period and maximality. Costs O(len).
    pub fn is_valid_in(&self, w: &Word) -> bool {
        let n = w.len();
        if self.start == 0 || self.end > n || self.start > self.end || self.period == 0 {
            return false;
        }
        let len = self.len();
        if len <= self.period || len >= 2 * self.period {
            return false;
        }
        minimal_period(w.factor(self.start, self.end)) == self.period
            && boundaries_maximal(w, self.start, self.end, self.period)
    }
}

/// Structural class of a maximal gapped repeat, judged on its copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RepeatClass {
    /// The copy is itself a repetition.
    Periodic,
    /// Not periodic, but some prefix of at least half the copy is a repetition.
    PrefixSemiperiodic,
    /// Not periodic or prefix-semiperiodic, but a long enough suffix is.
    SuffixSemiperiodic,
    Ordinary,
}

impl RepeatClass {
    pub const ALL: [RepeatClass; 4] = [
        RepeatClass::Periodic,
        RepeatClass::PrefixSemiperiodic,
        RepeatClass::SuffixSemiperiodic,
        RepeatClass::Ordinary,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RepeatClass::Periodic => "periodic",
            RepeatClass::PrefixSemiperiodic => "prefix_semiperiodic",
            RepeatClass::SuffixSemiperiodic => "suffix_semiperiodic",
            RepeatClass::Ordinary => "ordinary",
        }
    }
}

impl fmt::Display for RepeatClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One factor of the non-overlapping s-factorization.
///
/// `delta` is present exactly when `len > 1`; then
/// `w[start - delta ..= start - delta + len - 1]` equals this factor and
/// ends before `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Factor {
    pub index: usize,
    pub start: usize,
    pub len: usize,
    pub delta: Option<usize>,
}

impl Factor {
    pub fn end(&self) -> usize {
        self.start + self.len - 1
    }
}
