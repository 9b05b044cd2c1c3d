//! The five per-step sub-searches.
//!
//! Positions in this file are 1-based, matching the factor records; `at`
//! converts to slice indices. Step `i` looks at factor `f_i = w[a..=b]`,
//! the frontier `bp = a - 1` and the extended factor `f'_i = w[a..=b+1]`
//! (clipped at the end of the word).

use num_bigint::BigUint;

use crate::error::{logic_fault, Error, Result};
use crate::extensions::{lp_cross, lp_self, ls_cross, ls_self};
use crate::types::{Factor, GappedRepeat};

use super::StartLists;

/// Geometry of step `i`.
#[derive(Debug, Clone, Copy)]
pub(super) struct Step {
    pub n: usize,
    /// Factor ordinal.
    pub i: usize,
    pub a: usize,
    pub b: usize,
    pub l: usize,
    pub a_prev: usize,
    pub l_prev: usize,
    pub delta: Option<usize>,
}

impl Step {
    pub fn new(n: usize, factors: &[Factor], i: usize) -> Result<Self> {
        if i < 2 || i > factors.len() {
            return Err(Error::InvalidParameter(format!(
                "factor ordinal {i} outside 2..={}",
                factors.len()
            )));
        }
        let f = factors[i - 1];
        let prev = factors[i - 2];
        Ok(Self {
            n,
            i,
            a: f.start,
            b: f.end(),
            l: f.len,
            a_prev: prev.start,
            l_prev: prev.len,
            delta: f.delta,
        })
    }

    /// End of the previous factor (the frontier).
    #[inline]
    fn bp(&self) -> usize {
        self.a - 1
    }

    /// Last position of `f'_i`.
    #[inline]
    fn ext_end(&self) -> usize {
        (self.b + 1).min(self.n)
    }
}

#[inline]
fn at(w: &[u8], pos: usize) -> u8 {
    w[pos - 1]
}

/// `w[from..=to]`, 1-based inclusive.
#[inline]
fn slice(w: &[u8], from: usize, to: usize) -> &[u8] {
    &w[from - 1..to]
}

/// O(1) re-check of a candidate: boundary columns of the copies agree, the
/// gap is nonempty, the repeat is `k`-gapped and both ends are maximal.
pub(super) fn recheck(w: &[u8], r: GappedRepeat, k: usize) -> Result<GappedRepeat> {
    let n = w.len();
    let ok = r.left_start >= 1
        && r.copy_len >= 1
        && r.copy_len < r.period
        && r.period <= k.saturating_mul(r.copy_len)
        && r.end() <= n
        && at(w, r.left_start) == at(w, r.right_start())
        && at(w, r.left_end()) == at(w, r.right_end())
        && (r.left_start == 1 || at(w, r.left_start - 1) != at(w, r.right_start() - 1))
        && (r.end() == n || at(w, r.left_end() + 1) != at(w, r.right_end() + 1));
    if ok {
        Ok(r)
    } else {
        Err(logic_fault!("candidate {r} fails the maximal {k}-gapped re-check"))
    }
}

/// Repeats whose left copy contains the frontier `bp`.
pub(super) fn left_crossing(w: &[u8], st: &Step, k: usize, out: &mut Vec<GappedRepeat>) -> Result<()> {
    let (a, b, l) = (st.a, st.b, st.l);
    let ext = slice(w, a, st.ext_end());
    let g = slice(w, a.saturating_sub(l).max(1), st.bp());
    let f = slice(w, a, b);
    let ahead_t = lp_self(ext);
    let behind_t = ls_cross(g, f);
    for p in 1..=l {
        let ahead = ahead_t.try_get(p + 1).unwrap_or(0);
        let behind = behind_t.get(p);
        let c = ahead + behind;
        if p <= k * c && c < p && ahead + p <= l {
            out.push(recheck(w, GappedRepeat::new(a - behind, c, p), k)?);
        }
    }
    Ok(())
}

/// Repeats whose right copy contains the frontier `bp`.
pub(super) fn right_crossing(w: &[u8], st: &Step, k: usize, out: &mut Vec<GappedRepeat>) -> Result<()> {
    let (a, l) = (st.a, st.l);
    let reach = k * (st.l_prev + l);
    let g = slice(w, st.a_prev.saturating_sub(reach).max(1), st.bp());
    let ext = slice(w, a, st.ext_end());
    let ahead_t = lp_cross(g, ext);
    let behind_t = ls_self(g);
    for p in 1..reach.min(g.len() + 1) {
        let ahead = ahead_t.get(p - 1);
        let behind = behind_t.try_get(p).unwrap_or(0);
        let c = ahead + behind;
        if p <= k * c && c < p && ahead > 0 && ahead <= l {
            out.push(recheck(w, GappedRepeat::new(a - p - behind, c, p), k)?);
        }
    }
    Ok(())
}

/// `d_0, d_1, ..., d_q` with `d_s = floor(((k-1)/k)^s * l) + 1`, stopping at
/// the first `d_s <= 2`.
///
/// Exact. While `(k-1)^s * l` and `k^s` fit in 128 bits the floor is a plain
/// division; after that the value is tracked as `quot + rem / k^s` with
/// `rem < k^s`, which needs only multiplications by small integers.
pub fn mid_ladder(k: usize, l: usize) -> Vec<usize> {
    assert!(k >= 2, "ladder needs k >= 2");
    let mut d = vec![l + 1];
    let (mut num, mut den) = (l as u128, 1u128);
    while *d.last().unwrap() > 2 {
        match (num.checked_mul(k as u128 - 1), den.checked_mul(k as u128)) {
            (Some(nn), Some(dd)) => {
                num = nn;
                den = dd;
                d.push((num / den) as usize + 1);
            }
            _ => {
                let quot = (num / den) as usize;
                let rem = BigUint::from(num % den);
                big_ladder_tail(k, quot, rem, BigUint::from(den), &mut d);
                break;
            }
        }
    }
    d
}

/// Continues the ladder from `x = quot + rem / pow`.
fn big_ladder_tail(k: usize, mut quot: usize, mut rem: BigUint, mut pow: BigUint, d: &mut Vec<usize>) {
    while *d.last().unwrap() > 2 {
        // x * (k-1) / k, with (k-1) * quot = k * hi + lo
        let scaled = (k - 1) * quot;
        let (hi, lo) = (scaled / k, scaled % k);
        rem = &pow * lo + rem * (k - 1);
        pow *= k;
        quot = hi;
        if rem >= pow {
            rem -= &pow;
            quot += 1;
        }
        d.push(quot + 1);
    }
}

/// Repeats in `FGR'_i` neither of whose copies contains the frontier. The
/// right copy lies inside `f'_i[2..]`; ladder rung `s` collects those that
/// cover `f'_i[d_s]` but not `f'_i[d_{s-1}]`.
pub(super) fn middle(w: &[u8], st: &Step, k: usize, out: &mut Vec<GappedRepeat>) -> Result<()> {
    middle_with_ladder(w, st, k, &mid_ladder(k, st.l), out)
}

pub(super) fn middle_with_ladder(
    w: &[u8],
    st: &Step,
    k: usize,
    ladder: &[usize],
    out: &mut Vec<GappedRepeat>,
) -> Result<()> {
    let (a, bp) = (st.a, st.bp());
    for rung in ladder.windows(2) {
        let (d_prev, d) = (rung[0], rung[1]);
        // h ends just before the covered letter, h' starts on it.
        let h = slice(w, a.saturating_sub(k * d_prev).max(1), bp + d - 1);
        let h2 = slice(w, bp + d, (bp + d_prev).min(st.n));
        let behind_t = ls_self(h);
        let ahead_t = lp_cross(h, h2);
        for p in 1..(k * d_prev).min(h.len() + 1) {
            let behind = behind_t.try_get(p).unwrap_or(0);
            let ahead = ahead_t.get(p - 1);
            let c = ahead + behind;
            if p <= k * c
                && c < p
                && ahead + d <= p
                && ahead > 0
                && ahead <= d_prev - d
                && behind + 1 < d
            {
                let right_start = bp + d - behind;
                out.push(recheck(w, GappedRepeat::new(right_start - p, c, p), k)?);
            }
        }
    }
    Ok(())
}

/// Repeats ending exactly at `b` and starting after `a` (the `FGR''_i` set).
pub(super) fn end_pinned(w: &[u8], st: &Step, k: usize, out: &mut Vec<GappedRepeat>) -> Result<()> {
    let (a, b, l) = (st.a, st.b, st.l);
    let f = slice(w, a, b);
    let behind_t = ls_self(f);
    for p in 1..l {
        let c = behind_t.get(p);
        // A match reaching the factor start may continue left of `a`; such a
        // repeat starts at or before `a` and belongs to FGR'.
        if c == l - p {
            continue;
        }
        if c == 0 || c >= p || p > k * c {
            continue;
        }
        if b < st.n && at(w, b - p + 1) == at(w, b + 1) {
            continue;
        }
        let left_start = b - p - c + 1;
        if at(w, left_start - 1) == at(w, left_start - 1 + p) {
            continue;
        }
        out.push(recheck(w, GappedRepeat::new(left_start, c, p), k)?);
    }
    Ok(())
}

/// Repeats strictly inside `f_i`, copied from the earlier occurrence
/// `f_i - Delta_i` whose repeats are already in `lists`. Output is ordered
/// by start, then by end.
pub(super) fn replicate(
    w: &[u8],
    st: &Step,
    lists: &StartLists,
    k: usize,
    out: &mut Vec<GappedRepeat>,
) -> Result<()> {
    let (a, b) = (st.a, st.b);
    let Some(delta) = st.delta else {
        return Ok(());
    };
    if st.l <= 1 {
        return Ok(());
    }
    if delta < st.l || delta >= a {
        return Err(logic_fault!(
            "factor {} has invalid back-offset {delta} (len {})",
            st.i,
            st.l
        ));
    }
    let limit = b - delta;
    for j in a + 1..b {
        for r in lists.get(j - delta).iter().take_while(|r| r.end() < limit) {
            let moved = r.shifted(delta);
            if moved.start() != j {
                return Err(logic_fault!("start list {} holds {r}", j - delta));
            }
            out.push(recheck(w, moved, k)?);
        }
    }
    Ok(())
}
