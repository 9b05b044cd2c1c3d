//! Predecessor structures over integer periods.

use std::collections::BTreeMap;

/// Ordered map from period to end position with predecessor and successor
/// queries.
pub trait PeriodQueue {
    /// Pair with the largest period `<= p`.
    fn predecessor(&self, p: usize) -> Option<(usize, usize)>;
    /// Pair with the smallest period `> p`.
    fn successor(&self, p: usize) -> Option<(usize, usize)>;
    /// Inserts `(p, q)`, replacing any pair with period `p`.
    fn insert(&mut self, p: usize, q: usize);
    fn remove(&mut self, p: usize);
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
    /// All pairs in increasing period order.
    fn pairs(&self) -> Vec<(usize, usize)>;
}

/// Balanced-tree queue, `O(log n)` per operation.
#[derive(Debug, Clone, Default)]
pub struct BTreeQueue {
    map: BTreeMap<usize, usize>,
}

impl BTreeQueue {
    pub fn new() -> Self {
        Self::default()
    }
}

impl PeriodQueue for BTreeQueue {
    fn predecessor(&self, p: usize) -> Option<(usize, usize)> {
        self.map.range(..=p).next_back().map(|(&k, &v)| (k, v))
    }

    fn successor(&self, p: usize) -> Option<(usize, usize)> {
        self.map.range(p + 1..).next().map(|(&k, &v)| (k, v))
    }

    fn insert(&mut self, p: usize, q: usize) {
        self.map.insert(p, q);
    }

    fn remove(&mut self, p: usize) {
        self.map.remove(&p);
    }

    fn len(&self) -> usize {
        self.map.len()
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        self.map.iter().map(|(&k, &v)| (k, v)).collect()
    }
}

const LEAF_BITS: u32 = 6;

/// van Emde Boas set over `[0, 2^bits)`. Leaves are 64-bit masks; inner
/// nodes keep their minimum out of the clusters and allocate clusters on
/// first use.
#[derive(Debug, Clone)]
struct Veb {
    bits: u32,
    mask: u64,
    min: Option<usize>,
    max: Option<usize>,
    summary: Option<Box<Veb>>,
    clusters: Vec<Option<Box<Veb>>>,
}

impl Veb {
    fn new(bits: u32) -> Self {
        let (summary, clusters) = if bits <= LEAF_BITS {
            (None, Vec::new())
        } else {
            let hi = bits - bits / 2;
            (Some(Box::new(Veb::new(hi))), vec![None; 1 << hi])
        };
        Self {
            bits,
            mask: 0,
            min: None,
            max: None,
            summary,
            clusters,
        }
    }

    #[inline]
    fn is_leaf(&self) -> bool {
        self.bits <= LEAF_BITS
    }

    #[inline]
    fn lo_bits(&self) -> u32 {
        self.bits / 2
    }

    #[inline]
    fn split(&self, x: usize) -> (usize, usize) {
        (x >> self.lo_bits(), x & ((1 << self.lo_bits()) - 1))
    }

    #[inline]
    fn join(&self, hi: usize, lo: usize) -> usize {
        (hi << self.lo_bits()) | lo
    }

    fn minimum(&self) -> Option<usize> {
        if self.is_leaf() {
            (self.mask != 0).then(|| self.mask.trailing_zeros() as usize)
        } else {
            self.min
        }
    }

    fn maximum(&self) -> Option<usize> {
        if self.is_leaf() {
            (self.mask != 0).then(|| 63 - self.mask.leading_zeros() as usize)
        } else {
            self.max
        }
    }

    fn cluster(&self, h: usize) -> Option<&Veb> {
        self.clusters[h].as_deref()
    }

    /// `x` must be absent.
    fn insert(&mut self, mut x: usize) {
        if self.is_leaf() {
            self.mask |= 1 << x;
            return;
        }
        let Some(min) = self.min else {
            self.min = Some(x);
            self.max = Some(x);
            return;
        };
        if x < min {
            self.min = Some(x);
            x = min;
        }
        if self.max.is_some_and(|m| x > m) {
            self.max = Some(x);
        }
        let (h, l) = self.split(x);
        let lo = self.lo_bits();
        let c = self.clusters[h].get_or_insert_with(|| Box::new(Veb::new(lo)));
        if c.minimum().is_none() {
            self.summary.as_mut().unwrap().insert(h);
        }
        c.insert(l);
    }

    /// `x` must be present.
    fn delete(&mut self, mut x: usize) {
        if self.is_leaf() {
            self.mask &= !(1 << x);
            return;
        }
        if self.min == self.max {
            self.min = None;
            self.max = None;
            return;
        }
        if Some(x) == self.min {
            // promote the smallest clustered element to the minimum
            let h = self.summary.as_ref().unwrap().minimum().unwrap();
            let l = self.cluster(h).unwrap().minimum().unwrap();
            x = self.join(h, l);
            self.min = Some(x);
        }
        let (h, l) = self.split(x);
        let c = self.clusters[h].as_mut().unwrap();
        c.delete(l);
        if c.minimum().is_none() {
            self.summary.as_mut().unwrap().delete(h);
            if Some(x) == self.max {
                self.max = match self.summary.as_ref().unwrap().maximum() {
                    None => self.min,
                    Some(sh) => Some(self.join(sh, self.cluster(sh).unwrap().maximum().unwrap())),
                };
            }
        } else if Some(x) == self.max {
            let l = c.maximum().unwrap();
            self.max = Some(self.join(h, l));
        }
    }

    /// Smallest element `> x`.
    fn successor(&self, x: usize) -> Option<usize> {
        if self.is_leaf() {
            let above = if x >= 63 { 0 } else { self.mask & (!0u64 << (x + 1)) };
            return (above != 0).then(|| above.trailing_zeros() as usize);
        }
        match self.min {
            None => return None,
            Some(m) if x < m => return Some(m),
            _ => {}
        }
        let (h, l) = self.split(x);
        if let Some(c) = self.cluster(h) {
            if c.maximum().is_some_and(|m| l < m) {
                return Some(self.join(h, c.successor(l).unwrap()));
            }
        }
        let sh = self.summary.as_ref().unwrap().successor(h)?;
        Some(self.join(sh, self.cluster(sh).unwrap().minimum().unwrap()))
    }

    /// Largest element `< x`.
    fn predecessor(&self, x: usize) -> Option<usize> {
        if self.is_leaf() {
            let below = if x >= 64 { self.mask } else { self.mask & ((1u64 << x) - 1) };
            return (below != 0).then(|| 63 - below.leading_zeros() as usize);
        }
        match self.max {
            None => return None,
            Some(m) if x > m => return Some(m),
            _ => {}
        }
        let (h, l) = self.split(x);
        if let Some(c) = self.cluster(h) {
            if c.minimum().is_some_and(|m| l > m) {
                return Some(self.join(h, c.predecessor(l).unwrap()));
            }
        }
        match self.summary.as_ref().unwrap().predecessor(h) {
            Some(ph) => Some(self.join(ph, self.cluster(ph).unwrap().maximum().unwrap())),
            None => self.min.filter(|&m| m < x),
        }
    }
}

/// van Emde Boas backed queue, `O(log log U)` per operation for periods in
/// `[0, U)`.
#[derive(Debug, Clone)]
pub struct VebQueue {
    set: Veb,
    ends: Vec<usize>,
    len: usize,
}

const ABSENT: usize = usize::MAX;

impl VebQueue {
    /// Queue accepting periods `0..universe`.
    pub fn with_universe(universe: usize) -> Self {
        let bits = universe.max(2).next_power_of_two().trailing_zeros().max(1);
        Self {
            set: Veb::new(bits),
            ends: vec![ABSENT; 1 << bits],
            len: 0,
        }
    }
}

impl PeriodQueue for VebQueue {
    fn predecessor(&self, p: usize) -> Option<(usize, usize)> {
        let p = p.min(self.ends.len() - 1);
        if self.ends[p] != ABSENT {
            return Some((p, self.ends[p]));
        }
        self.set.predecessor(p).map(|k| (k, self.ends[k]))
    }

    fn successor(&self, p: usize) -> Option<(usize, usize)> {
        if p + 1 >= self.ends.len() {
            return None;
        }
        self.set.successor(p).map(|k| (k, self.ends[k]))
    }

    fn insert(&mut self, p: usize, q: usize) {
        if self.ends[p] == ABSENT {
            self.set.insert(p);
            self.len += 1;
        }
        self.ends[p] = q;
    }

    fn remove(&mut self, p: usize) {
        if p < self.ends.len() && self.ends[p] != ABSENT {
            self.set.delete(p);
            self.ends[p] = ABSENT;
            self.len -= 1;
        }
    }

    fn len(&self) -> usize {
        self.len
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.len);
        let mut cur = self.set.minimum();
        while let Some(k) = cur {
            out.push((k, self.ends[k]));
            cur = self.set.successor(k);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[derive(Debug, Clone)]
    enum Op {
        Insert(usize, usize),
        Remove(usize),
    }

    fn op(universe: usize) -> impl Strategy<Value = Op> {
        prop_oneof![
            (0..universe, 0..1000usize).prop_map(|(p, q)| Op::Insert(p, q)),
            (0..universe).prop_map(Op::Remove),
        ]
    }

    #[test]
    fn btree_basics() {
        let mut q = BTreeQueue::new();
        q.insert(3, 10);
        q.insert(7, 20);
        assert_eq!(q.predecessor(5), Some((3, 10)));
        assert_eq!(q.predecessor(7), Some((7, 20)));
        assert_eq!(q.predecessor(2), None);
        assert_eq!(q.successor(3), Some((7, 20)));
        assert_eq!(q.successor(7), None);
        q.insert(3, 15);
        assert_eq!(q.pairs(), vec![(3, 15), (7, 20)]);
    }

    #[test]
    fn veb_basics() {
        let mut q = VebQueue::with_universe(1000);
        for p in [999, 0, 64, 65, 512, 3] {
            q.insert(p, p * 2);
        }
        assert_eq!(q.pairs().iter().map(|x| x.0).collect::<Vec<_>>(), vec![0, 3, 64, 65, 512, 999]);
        assert_eq!(q.predecessor(511), Some((65, 130)));
        assert_eq!(q.successor(65), Some((512, 1024)));
        q.remove(0);
        q.remove(999);
        assert_eq!(q.predecessor(2), None);
        assert_eq!(q.successor(512), None);
        assert_eq!(q.len(), 4);
    }

    proptest! {
        #[test]
        fn veb_matches_btree(universe in 1usize..5000, ops in prop::collection::vec(op(5000), 0..300), probes in prop::collection::vec(0usize..5000, 0..50)) {
            let mut a = BTreeQueue::new();
            let mut b = VebQueue::with_universe(universe);
            for o in ops {
                match o {
                    Op::Insert(p, q) if p < universe => { a.insert(p, q); b.insert(p, q); }
                    Op::Remove(p) => { a.remove(p); b.remove(p); }
                    _ => {}
                }
                prop_assert_eq!(a.len(), b.len());
            }
            prop_assert_eq!(a.pairs(), b.pairs());
            for p in probes.into_iter().filter(|&p| p < universe) {
                prop_assert_eq!(a.predecessor(p), b.predecessor(p));
                prop_assert_eq!(a.successor(p), b.successor(p));
            }
        }
    }
}
