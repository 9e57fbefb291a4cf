//! Bitset-backed subsets of a finite carrier and of its square.

use std::fmt;

/// Subset of a carrier `{0, .., n-1}`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    carrier: usize,
    bits: Vec<u64>,
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl ElementSet {
    pub fn empty(carrier: usize) -> Self {
        ElementSet {
            carrier,
            bits: vec![0; words_for(carrier)],
        }
    }

    pub fn full(carrier: usize) -> Self {
        let mut s = Self::empty(carrier);
        for i in 0..carrier {
            s.insert(i);
        }
        s
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(carrier: usize, members: I) -> Self {
        let mut s = Self::empty(carrier);
        for m in members {
            assert!(m < carrier, "member {m} out of carrier {carrier}");
            s.insert(m);
        }
        s
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.carrier);
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.carrier);
        self.bits[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.carrier);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.carrier
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.carrier, other.carrier);
        ElementSet {
            carrier: self.carrier,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.carrier, other.carrier);
        ElementSet {
            carrier: self.carrier,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Complement within the carrier.
    pub fn complement(&self) -> Self {
        let mut out = Self::empty(self.carrier);
        for i in 0..self.carrier {
            if !self.contains(i) {
                out.insert(i);
            }
        }
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        assert_eq!(self.carrier, other.carrier);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.carrier).filter(move |&i| self.contains(i))
    }

    pub fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Subset of carrier x carrier, bit `(x, y)` at position `x*n + y`.
///
/// Used for the context of an element: the pairs `(x, y)` with `x*a*y` in a
/// fixed subset `H`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PairContext {
    carrier: usize,
    bits: Vec<u64>,
}

impl PairContext {
    pub fn empty(carrier: usize) -> Self {
        PairContext {
            carrier,
            bits: vec![0; words_for(carrier * carrier)],
        }
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        let i = x * self.carrier + y;
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        let i = x * self.carrier + y;
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.carrier * self.carrier
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.carrier {
            for y in 0..self.carrier {
                if self.contains(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

impl fmt::Debug for PairContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}
