//! Small fixed-capacity bit sets used for subsets of a carrier.

use std::fmt;

/// Largest carrier (or point set, or lattice) a [`ElemSet`] can index.
pub const MAX_ELEMS: usize = 64;

/// A subset of `{0, .., 63}` stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElemSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMS);
        if n == MAX_ELEMS {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        ElemSet(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMS && self.0 & (1u64 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn with(self, i: usize) -> Self {
        ElemSet(self.0 | (1u64 << i))
    }

    pub fn union(self, other: Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElemSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        ElemSet(!self.0).intersection(Self::full(n))
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Key used for the canonical ordering of families of sets:
    /// by cardinality first, then by bit pattern.
    pub fn size_key(self) -> (u32, u64) {
        (self.0.count_ones(), self.0)
    }

    /// All subsets of `self` with between 1 and `max` elements, in a fixed order.
    pub fn nonempty_subsets_up_to(self, max: usize) -> Vec<ElemSet> {
        let items: Vec<usize> = self.iter().collect();
        let mut out = Vec::new();
        let mut stack: Vec<(usize, ElemSet)> = vec![(0, ElemSet::EMPTY)];
        while let Some((start, acc)) = stack.pop() {
            if !acc.is_empty() {
                out.push(acc);
            }
            if acc.len() == max {
                continue;
            }
            for (k, &item) in items.iter().enumerate().skip(start).rev() {
                stack.push((k + 1, acc.with(item)));
            }
        }
        out.sort_by_key(|s| s.size_key());
        out
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_up_to_two() {
        let s: ElemSet = [0, 2, 5].into_iter().collect();
        let subs = s.nonempty_subsets_up_to(2);
        assert_eq!(subs.len(), 6);
        assert!(subs.iter().all(|x| x.is_subset(s) && !x.is_empty() && x.len() <= 2));
    }

    #[test]
    fn complement_stays_in_range() {
        let s = ElemSet::singleton(1);
        assert_eq!(s.complement(3), [0, 2].into_iter().collect());
        assert_eq!(ElemSet::full(64).len(), 64);
    }
}
