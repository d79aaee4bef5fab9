//! Small fixed-capacity bitset over vertex ids.
//!
//! Graphs at oracle scale fit in one or two 64-bit words; the inline
//! capacity of the backing `SmallVec` keeps the checkers allocation-free
//! there while still working for arbitrarily large vertex counts.

use smallvec::SmallVec;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Bits {
    words: SmallVec<[u64; 2]>,
    len: usize,
}

impl Bits {
    pub fn empty(len: usize) -> Self {
        let n_words = len.div_ceil(WORD).max(1);
        Bits {
            words: smallvec::smallvec![0; n_words],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut b = Bits::empty(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    pub fn from_slice(len: usize, items: &[usize]) -> Self {
        let mut b = Bits::empty(len);
        for &i in items {
            b.insert(i);
        }
        b
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] |= 1u64 << (i % WORD);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] &= !(1u64 << (i % WORD));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn union_with(&mut self, other: &Bits) {
        debug_assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_disjoint(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// `self ∩ other == {bit}`.
    pub fn and_equals_bit(&self, other: &Bits, bit: usize) -> bool {
        debug_assert!(bit < self.len);
        for (idx, (a, b)) in self.words.iter().zip(&other.words).enumerate() {
            let expected = if idx == bit / WORD { 1u64 << (bit % WORD) } else { 0 };
            if a & b != expected {
                return false;
            }
        }
        true
    }

    /// Least member of `self ∖ other`, if any.
    pub fn first_missing_from(&self, other: &Bits) -> Option<usize> {
        for (idx, (a, b)) in self.words.iter().zip(&other.words).enumerate() {
            let diff = a & !b;
            if diff != 0 {
                return Some(idx * WORD + diff.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Least vertex id set in `self`.
    pub fn first(&self) -> Option<usize> {
        for (idx, w) in self.words.iter().enumerate() {
            if *w != 0 {
                return Some(idx * WORD + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(idx, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(idx * WORD + bit)
                }
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_remove() {
        let mut b = Bits::empty(130);
        b.insert(0);
        b.insert(64);
        b.insert(129);
        assert!(b.contains(0) && b.contains(64) && b.contains(129));
        assert!(!b.contains(63));
        b.remove(64);
        assert!(!b.contains(64));
        assert_eq!(b.count(), 2);
    }

    #[test]
    fn first_missing() {
        let full = Bits::full(70);
        let mut part = Bits::full(70);
        part.remove(65);
        assert_eq!(full.first_missing_from(&part), Some(65));
        assert_eq!(part.first_missing_from(&full), None);
    }

    #[test]
    fn iter_yields_sorted_members() {
        let b = Bits::from_slice(200, &[5, 66, 199, 0]);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 5, 66, 199]);
        assert_eq!(b.first(), Some(0));
    }
}
