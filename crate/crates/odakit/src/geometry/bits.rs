//! Minimal fixed-capacity bitset used for incidence bookkeeping.
//!
//! The double description method and the face-lattice tests live on subset
//! and intersection queries over row/vertex index sets; a `Vec<u64>` bitset
//! keeps those exact and cheap without pulling in a dependency.

/// Fixed-capacity set of small indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitSet {
    nbits: usize,
    words: Vec<u64>,
}

impl BitSet {
    /// An empty set with capacity for indices `0..nbits`.
    pub fn new(nbits: usize) -> Self {
        BitSet {
            nbits,
            words: vec![0; nbits.div_ceil(64)],
        }
    }

    /// Inserts an index.
    ///
    /// # Panics
    /// Panics if `i` is out of capacity.
    pub fn insert(&mut self, i: usize) {
        assert!(
            i < self.nbits,
            "bitset index {i} out of capacity {}",
            self.nbits
        );
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    /// Membership test (out-of-range indices are simply absent).
    pub fn contains(&self, i: usize) -> bool {
        i < self.nbits && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Number of members.
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True iff every member of `self` is a member of `other`.
    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
            && self.words[other.words.len().min(self.words.len())..]
                .iter()
                .all(|&w| w == 0)
    }

    /// The intersection as a new set (capacity of `self`).
    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect::<Vec<_>>();
        let mut out = BitSet {
            nbits: self.nbits,
            words,
        };
        out.words.resize(self.nbits.div_ceil(64), 0);
        out
    }

    /// Iterates members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nbits).filter(move |&i| self.contains(i))
    }
}

impl std::fmt::Debug for BitSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for BitSet {
    /// Collects indices into a set sized to the largest member + 1.
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let items: Vec<usize> = iter.into_iter().collect();
        let cap = items.iter().max().map_or(0, |m| m + 1);
        let mut s = BitSet::new(cap);
        for i in items {
            s.insert(i);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_operations() {
        let mut a = BitSet::new(130);
        a.insert(0);
        a.insert(64);
        a.insert(129);
        assert!(a.contains(64));
        assert!(!a.contains(63));
        assert_eq!(a.count(), 3);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 64, 129]);

        let mut b = BitSet::new(130);
        b.insert(64);
        b.insert(129);
        assert!(b.is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(a.intersection(&b), b);
    }

    #[test]
    fn subset_across_capacities() {
        let mut small = BitSet::new(3);
        small.insert(2);
        let mut large = BitSet::new(200);
        large.insert(2);
        large.insert(150);
        assert!(small.is_subset(&large));
        assert!(!large.is_subset(&small));
    }
}
