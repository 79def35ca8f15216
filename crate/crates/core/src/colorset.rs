//! Small color sets backed by a single `u64` bitmask.

use std::fmt;

/// Largest color identifier a [`ColorSet`] can hold.
pub const MAX_COLOR: u32 = 63;

/// A set of color identifiers drawn from `0..=63`.
///
/// Bit `c` is set when color `c` is a member, so iteration order is ascending
/// color order. All list and coloring arithmetic in the crate is done on this
/// type.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        ColorSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The interval `{lo, lo+1, ..., hi}`.
    pub fn range(lo: u32, hi: u32) -> Self {
        assert!(hi <= MAX_COLOR, "color {hi} out of range");
        if lo > hi {
            return ColorSet::EMPTY;
        }
        let width = hi - lo + 1;
        let bits = if width == 64 { u64::MAX } else { ((1u64 << width) - 1) << lo };
        ColorSet(bits)
    }

    pub fn singleton(c: u32) -> Self {
        assert!(c <= MAX_COLOR, "color {c} out of range");
        ColorSet(1u64 << c)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, c: u32) -> bool {
        c <= MAX_COLOR && self.0 & (1u64 << c) != 0
    }

    #[inline]
    pub fn insert(&mut self, c: u32) {
        assert!(c <= MAX_COLOR, "color {c} out of range");
        self.0 |= 1u64 << c;
    }

    #[inline]
    pub fn remove(&mut self, c: u32) {
        if c <= MAX_COLOR {
            self.0 &= !(1u64 << c);
        }
    }

    #[inline]
    pub fn with(mut self, c: u32) -> Self {
        self.insert(c);
        self
    }

    #[inline]
    pub fn without(mut self, c: u32) -> Self {
        self.remove(c);
        self
    }

    #[inline]
    pub fn union(self, other: ColorSet) -> Self {
        ColorSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: ColorSet) -> Self {
        ColorSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: ColorSet) -> Self {
        ColorSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: ColorSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member.
    #[inline]
    pub fn min(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros())
        }
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// The `k` smallest members, or `None` when there are fewer than `k`.
    pub fn lowest(self, k: usize) -> Option<ColorSet> {
        if self.len() < k {
            return None;
        }
        let mut out = ColorSet::EMPTY;
        for c in self.iter().take(k) {
            out.insert(c);
        }
        Some(out)
    }

    /// A `k`-element subset containing `required`, filled with the smallest
    /// remaining members. `None` if `required` is not a subset or is too big.
    pub fn extend_to(self, required: ColorSet, k: usize) -> Option<ColorSet> {
        if !required.is_subset(self) || required.len() > k {
            return None;
        }
        let fill = self.difference(required).lowest(k - required.len())?;
        Some(required.union(fill))
    }

    /// Drops the largest members not in `keep` until at most `k` remain.
    /// Members of `keep` are never dropped.
    pub fn truncate_keeping(self, k: usize, keep: ColorSet) -> ColorSet {
        let keep = keep.intersection(self);
        if self.len() <= k || keep.len() >= k {
            return if self.len() <= k { self } else { keep };
        }
        let fill = self.difference(keep).lowest(k - keep.len()).unwrap_or(ColorSet::EMPTY);
        keep.union(fill)
    }

    /// All `k`-element subsets in lexicographic order of their sorted members.
    pub fn subsets(self, k: usize) -> Subsets {
        Subsets::new(self, k)
    }
}

impl FromIterator<u32> for ColorSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl<const N: usize> From<[u32; N]> for ColorSet {
    fn from(colors: [u32; N]) -> Self {
        colors.into_iter().collect()
    }
}

impl IntoIterator for ColorSet {
    type Item = u32;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Space-separated ascending members, the form used by the text formats.
impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = u32;
    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let c = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(c)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Iterator over fixed-size subsets of a [`ColorSet`].
pub struct Subsets {
    members: Vec<u32>,
    idx: Vec<usize>,
    done: bool,
}

impl Subsets {
    fn new(set: ColorSet, k: usize) -> Self {
        let members: Vec<u32> = set.iter().collect();
        let done = k > members.len();
        Subsets { members, idx: (0..k).collect(), done }
    }
}

impl Iterator for Subsets {
    type Item = ColorSet;

    fn next(&mut self) -> Option<ColorSet> {
        if self.done {
            return None;
        }
        let out: ColorSet = self.idx.iter().map(|&i| self.members[i]).collect();
        let n = self.members.len();
        let k = self.idx.len();
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = ColorSet::range(1, 5);
        let b = ColorSet::from([4, 5, 6]);
        assert_eq!(a.len(), 5);
        assert_eq!(a.union(b), ColorSet::range(1, 6));
        assert_eq!(a.intersection(b), ColorSet::from([4, 5]));
        assert_eq!(a.difference(b), ColorSet::range(1, 3));
        assert!(ColorSet::from([2, 3]).is_subset(a));
        assert_eq!(a.to_string(), "1 2 3 4 5");
        assert_eq!(ColorSet::range(0, 63).len(), 64);
        assert!(ColorSet::range(3, 2).is_empty());
    }

    #[test]
    fn subsets_are_lexicographic_and_complete() {
        let s = ColorSet::from([2, 4, 7, 9]);
        let all: Vec<_> = s.subsets(2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], ColorSet::from([2, 4]));
        assert_eq!(all[5], ColorSet::from([7, 9]));
        assert_eq!(s.subsets(0).count(), 1);
        assert_eq!(s.subsets(5).count(), 0);
        assert_eq!(ColorSet::range(1, 11).subsets(3).count(), 165);
    }

    #[test]
    fn truncation_keeps_required_colors() {
        let s = ColorSet::range(1, 8);
        let t = s.truncate_keeping(5, ColorSet::from([7, 8]));
        assert_eq!(t, ColorSet::from([1, 2, 3, 7, 8]));
        assert_eq!(ColorSet::from([1, 2]).truncate_keeping(5, ColorSet::EMPTY), ColorSet::from([1, 2]));
        assert_eq!(s.extend_to(ColorSet::from([8]), 3), Some(ColorSet::from([1, 2, 8])));
        assert_eq!(s.extend_to(ColorSet::from([9]), 3), None);
    }
}
