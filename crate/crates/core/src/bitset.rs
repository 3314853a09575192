//! Fixed-capacity vertex sets backed by a handful of machine words.

/// Hard cap on the number of vertices a graph may have. Eight 64-bit words
/// keep every set operation branch-free and every mask copyable.
pub const MAX_VERTICES: usize = 512;
const WORDS: usize = MAX_VERTICES / 64;

/// A subset of the vertices `0..n` of one host graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: [u64; WORDS],
    n: u16,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds cap {MAX_VERTICES}");
        VertexSet { words: [0; WORDS], n: n as u16 }
    }

    pub fn universe(n: usize) -> Self {
        let mut s = VertexSet::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = VertexSet::empty(n);
        s.insert(v);
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, iter: I) -> Self {
        let mut s = VertexSet::empty(n);
        for v in iter {
            s.insert(v);
        }
        s
    }

    /// Size of the host vertex range, not the cardinality of the set.
    pub fn host_len(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n as usize);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.n as usize);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n as usize && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    #[inline]
    pub fn and(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        let mut out = *self;
        for i in 0..WORDS {
            out.words[i] &= other.words[i];
        }
        out
    }

    #[inline]
    pub fn or(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        let mut out = *self;
        for i in 0..WORDS {
            out.words[i] |= other.words[i];
        }
        out
    }

    /// Set difference `self \ other`.
    #[inline]
    pub fn minus(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        let mut out = *self;
        for i in 0..WORDS {
            out.words[i] &= !other.words[i];
        }
        out
    }

    pub fn minus_vertex(&self, v: usize) -> VertexSet {
        let mut out = *self;
        out.remove(v);
        out
    }

    pub fn with_vertex(&self, v: usize) -> VertexSet {
        let mut out = *self;
        out.insert(v);
        out
    }

    /// Complement within the host range `0..n`.
    pub fn inverted(&self) -> VertexSet {
        let mut out = VertexSet::universe(self.n as usize);
        for i in 0..WORDS {
            out.words[i] &= !self.words[i];
        }
        out
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for i in 0..WORDS {
            self.words[i] |= other.words[i];
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for i in 0..WORDS {
            self.words[i] &= other.words[i];
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for i in 0..WORDS {
            self.words[i] &= !other.words[i];
        }
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        (0..WORDS).any(|i| self.words[i] & other.words[i] != 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        (0..WORDS).all(|i| self.words[i] & !other.words[i] == 0)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        !self.intersects(other)
    }

    pub fn iter(&self) -> Bits<'_> {
        Bits { set: self, word: 0, mask: self.words[0] }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending-order iterator over set members.
pub struct Bits<'a> {
    set: &'a VertexSet,
    word: usize,
    mask: u64,
}

impl Iterator for Bits<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.mask != 0 {
                let bit = self.mask.trailing_zeros() as usize;
                self.mask &= self.mask - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
            if self.word >= WORDS {
                return None;
            }
            self.mask = self.set.words[self.word];
        }
    }
}
