//! Longest-extension tables `LP_u`, `LS_u`, `LP_{u|v}` and `LS_{u|v}`.
//!
//! Each table is built in `O(|u| + |v|)` from a Z-array of one operand and a
//! single left-to-right matching pass of the other against it. Suffix
//! variants run the same machinery over reversed copies. No separator symbol
//! is needed because the matching pass bounds every value by the pattern
//! length.

use std::ops::RangeInclusive;

/// Values of an extension function over a contiguous integer domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionTable {
    first: usize,
    values: Vec<usize>,
}

impl ExtensionTable {
    fn empty(first: usize) -> Self {
        Self {
            first,
            values: Vec::new(),
        }
    }

    /// Domain of the function; empty when the operands are too short.
    pub fn domain(&self) -> RangeInclusive<usize> {
        if self.values.is_empty() {
            #[allow(clippy::reversed_empty_ranges)]
            return 1..=0;
        }
        self.first..=self.first + self.values.len() - 1
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at `i`. Panics outside [`domain`](Self::domain).
    #[inline]
    pub fn get(&self, i: usize) -> usize {
        self.values[i - self.first]
    }

    /// Value at `i`, or `None` outside the domain.
    #[inline]
    pub fn try_get(&self, i: usize) -> Option<usize> {
        i.checked_sub(self.first).and_then(|k| self.values.get(k).copied())
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.values.iter().enumerate().map(move |(k, &v)| (k + self.first, v))
    }
}

/// `z[i]` = longest common prefix of `s` and `s[i..]`; `z[0] = |s|`.
pub(crate) fn z_array(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0usize; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0usize, 0usize);
    for i in 1..n {
        let mut k = if i < r { z[i - l].min(r - i) } else { 0 };
        while i + k < n && s[k] == s[i + k] {
            k += 1;
        }
        if i + k > r {
            l = i;
            r = i + k;
        }
        z[i] = k;
    }
    z
}

/// `out[j]` = longest common prefix of `text[j..]` and `pat`, using the
/// Z-array of `pat`.
pub(crate) fn prefix_matches(pat: &[u8], zpat: &[usize], text: &[u8]) -> Vec<usize> {
    let m = text.len();
    let mut out = vec![0usize; m];
    // text[l..r] == pat[..r - l]
    let (mut l, mut r) = (0usize, 0usize);
    for j in 0..m {
        let mut k = if j < r { zpat[j - l].min(r - j) } else { 0 };
        while k < pat.len() && j + k < m && text[j + k] == pat[k] {
            k += 1;
        }
        if j + k > r {
            l = j;
            r = j + k;
        }
        out[j] = k;
    }
    out
}

fn reversed(s: &[u8]) -> Vec<u8> {
    s.iter().rev().copied().collect()
}

/// `LP_u(i)` for `i = 2..=|u|`: longest common prefix of `u` and `u[i..]`.
pub fn lp_self(u: &[u8]) -> ExtensionTable {
    if u.len() < 2 {
        return ExtensionTable::empty(2);
    }
    let z = z_array(u);
    ExtensionTable {
        first: 2,
        values: z[1..].to_vec(),
    }
}

/// `LS_u(i)` for `i = 1..|u|`: longest common suffix of `u` and `u[1..|u|-i]`.
pub fn ls_self(u: &[u8]) -> ExtensionTable {
    if u.len() < 2 {
        return ExtensionTable::empty(1);
    }
    let z = z_array(&reversed(u));
    ExtensionTable {
        first: 1,
        values: z[1..].to_vec(),
    }
}

/// `LP_{u|v}(i)` for `i = 0..|u|`: longest common prefix of
/// `u[|u|-i..|u|] v` and `v`.
pub fn lp_cross(u: &[u8], v: &[u8]) -> ExtensionTable {
    if u.is_empty() || v.is_empty() {
        return ExtensionTable::empty(0);
    }
    let zv = z_array(v);
    let mut text = Vec::with_capacity(u.len() + v.len());
    text.extend_from_slice(u);
    text.extend_from_slice(v);
    let m = prefix_matches(v, &zv, &text);
    // i = |u| - 1 - j for start offset j in u
    let values = (0..u.len()).map(|i| m[u.len() - 1 - i]).collect();
    ExtensionTable { first: 0, values }
}

/// `LS_{u|v}(i)` for `i = 1..=|v|`: longest common suffix of `u` and
/// `u v[1..i]`, which never exceeds `|u|`.
pub fn ls_cross(u: &[u8], v: &[u8]) -> ExtensionTable {
    if u.is_empty() || v.is_empty() {
        return ExtensionTable::empty(1);
    }
    let ru = reversed(u);
    let zu = z_array(&ru);
    let mut text = Vec::with_capacity(u.len() + v.len());
    text.extend(v.iter().rev());
    text.extend_from_slice(&ru);
    let m = prefix_matches(&ru, &zu, &text);
    let values = (1..=v.len()).map(|i| m[v.len() - i]).collect();
    ExtensionTable { first: 1, values }
}
