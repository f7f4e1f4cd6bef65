use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::Poset;
use crate::error::OrderError;

/// Largest poset whose downsets can be represented.
pub const MAX_DOWNSET_ELEMENTS: usize = 64;

/// A downward-closed subset of a poset with at most 64 elements.
///
/// Ordered canonically: by cardinality, then by bit pattern.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Downset(u64);

impl Downset {
    pub const EMPTY: Downset = Downset(0);

    /// Wraps `bits` if it is downward closed in `poset`.
    pub fn new(poset: &Poset, bits: u64) -> Option<Self> {
        is_downward_closed(poset, bits).then_some(Downset(bits))
    }

    pub(crate) const fn from_bits_unchecked(bits: u64) -> Self {
        Downset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, element: usize) -> bool {
        self.0 >> element & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Downset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Downset) -> Downset {
        Downset(self.0 | other.0)
    }

    pub fn intersection(self, other: Downset) -> Downset {
        Downset(self.0 & other.0)
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        BitIter(self.0)
    }
}

impl Ord for Downset {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.0.count_ones(), self.0).cmp(&(other.0.count_ones(), other.0))
    }
}

impl PartialOrd for Downset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Downset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

pub(crate) struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
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

pub(crate) fn check_size(poset: &Poset) -> Result<(), OrderError> {
    if poset.len() > MAX_DOWNSET_ELEMENTS {
        Err(OrderError::TooLarge {
            n: poset.len(),
            max: MAX_DOWNSET_ELEMENTS,
        })
    } else {
        Ok(())
    }
}

/// Bit mask of a principal down-set or any `FixedBitSet` row.
pub(crate) fn mask_of(row: &fixedbitset::FixedBitSet) -> u64 {
    row.ones().fold(0, |m, i| m | 1 << i)
}

fn is_downward_closed(poset: &Poset, bits: u64) -> bool {
    if poset.len() < 64 && bits >> poset.len() != 0 {
        return false;
    }
    BitIter(bits).all(|x| {
        let below = mask_of(poset.down_set(x));
        below & !bits == 0
    })
}

/// `↓x` as a downset.
pub fn principal_downset(poset: &Poset, x: usize) -> Downset {
    Downset(mask_of(poset.down_set(x)))
}

/// All downsets of `poset`, each once, in canonical order.
pub fn enumerate_downsets(poset: &Poset) -> Result<Vec<Downset>, OrderError> {
    check_size(poset)?;
    let order = poset.linear_extension();
    let strictly_below: Vec<u64> = order
        .iter()
        .map(|&x| mask_of(poset.down_set(x)) & !(1u64 << x))
        .collect();
    let mut out = Vec::new();
    // Decide elements in linear-extension order; an element may join only
    // when everything strictly below it already has.
    let mut stack = alloc::vec![(0usize, 0u64)];
    while let Some((k, mask)) = stack.pop() {
        if k == order.len() {
            out.push(Downset(mask));
            continue;
        }
        stack.push((k + 1, mask));
        if strictly_below[k] & !mask == 0 {
            stack.push((k + 1, mask | 1 << order[k]));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Position of `d` in a canonically sorted downset list.
pub fn downset_index(downsets: &[Downset], d: Downset) -> Option<usize> {
    downsets.binary_search(&d).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sample() -> Poset {
        Poset::from_covers(4, &[(0, 2), (1, 2), (1, 3)]).unwrap()
    }

    fn brute_force(poset: &Poset) -> Vec<Downset> {
        let mut out: Vec<Downset> = (0u64..1 << poset.len())
            .filter(|&m| is_downward_closed(poset, m))
            .map(Downset)
            .collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn sample_downsets() {
        let ds = enumerate_downsets(&sample()).unwrap();
        // ∅, a, b, ab, bd, abc, abd, abcd
        let bits: Vec<u64> = ds.iter().map(|d| d.bits()).collect();
        assert_eq!(bits, vec![0, 0b1, 0b10, 0b11, 0b1010, 0b111, 0b1011, 0b1111]);
    }

    #[test]
    fn antichain_and_chain_counts() {
        assert_eq!(enumerate_downsets(&Poset::antichain(5)).unwrap().len(), 32);
        assert_eq!(enumerate_downsets(&Poset::chain(5)).unwrap().len(), 6);
        assert_eq!(enumerate_downsets(&Poset::chain(64)).unwrap().len(), 65);
        assert!(enumerate_downsets(&Poset::chain(65)).is_err());
    }

    #[test]
    fn membership_checks() {
        let p = sample();
        assert!(Downset::new(&p, 0b1010).is_some());
        assert!(Downset::new(&p, 0b1000).is_none());
        assert_eq!(principal_downset(&p, 2).bits(), 0b111);
    }

    proptest::proptest! {
        #[test]
        fn enumeration_matches_subset_filter(n in 0usize..8, arcs in proptest::collection::vec((0usize..8, 0usize..8), 0..12)) {
            let covers: Vec<_> = arcs.into_iter().filter(|&(a, b)| a < b && b < n).collect();
            let p = Poset::from_covers(n, &covers).unwrap();
            proptest::prop_assert_eq!(enumerate_downsets(&p).unwrap(), brute_force(&p));
        }
    }
}
