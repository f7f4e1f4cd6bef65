use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::error::OrderError;

/// A finite partial order on `0..n`.
///
/// Both the principal up-sets and down-sets are stored as bit rows, so `≤`
/// is a single bit lookup.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
}

impl Poset {
    /// Reflexive-transitive closure of the given cover arcs `(lower, upper)`.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self, OrderError> {
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in covers {
            for element in [a, b] {
                if element >= n {
                    return Err(OrderError::ElementOutOfRange { element, n });
                }
            }
            if a == b {
                return Err(OrderError::Cycle { a, b });
            }
            succ[a].push(b);
        }
        let mut up = Vec::with_capacity(n);
        for start in 0..n {
            let mut seen = FixedBitSet::with_capacity(n);
            seen.insert(start);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &succ[x] {
                    if !seen.put(y) {
                        stack.push(y);
                    }
                }
            }
            up.push(seen);
        }
        for a in 0..n {
            for b in up[a].ones() {
                if b != a && up[b].contains(a) {
                    return Err(OrderError::Cycle { a, b });
                }
            }
        }
        Ok(Self::from_up_sets(up))
    }

    /// Builds a poset from an arbitrary relation, checking the order axioms.
    pub fn from_relation<F>(n: usize, leq: F) -> Result<Self, OrderError>
    where
        F: Fn(usize, usize) -> bool,
    {
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (a, row) in up.iter_mut().enumerate() {
            for b in 0..n {
                if leq(a, b) {
                    row.insert(b);
                }
            }
        }
        for a in 0..n {
            if !up[a].contains(a) {
                return Err(OrderError::NotAnOrder { a, b: a });
            }
            for b in up[a].ones() {
                if a != b && up[b].contains(a) {
                    return Err(OrderError::NotAnOrder { a, b });
                }
                if !up[b].is_subset(&up[a]) {
                    return Err(OrderError::NotAnOrder { a, b });
                }
            }
        }
        Ok(Self::from_up_sets(up))
    }

    /// Trusts that `up` already describes a partial order.
    pub(crate) fn from_up_sets(up: Vec<FixedBitSet>) -> Self {
        let n = up.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (a, row) in up.iter().enumerate() {
            for b in row.ones() {
                down[b].insert(a);
            }
        }
        Self { up, down }
    }

    /// The chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Self {
        let up = (0..n)
            .map(|a| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert_range(a..);
                row
            })
            .collect();
        Self::from_up_sets(up)
    }

    pub fn antichain(n: usize) -> Self {
        let up = (0..n)
            .map(|a| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert(a);
                row
            })
            .collect();
        Self::from_up_sets(up)
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// `↑a`, all elements above `a` (inclusive).
    pub fn up_set(&self, a: usize) -> &FixedBitSet {
        &self.up[a]
    }

    /// `↓a`, all elements below `a` (inclusive).
    pub fn down_set(&self, a: usize) -> &FixedBitSet {
        &self.down[a]
    }

    /// All pairs `(a, b)` with `a ≤ b`, loops included, in lexicographic order.
    pub fn comparabilities(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.ones().map(move |b| (a, b)))
    }

    pub fn upper_covers(&self, a: usize) -> Vec<usize> {
        self.up[a]
            .ones()
            .filter(|&b| b != a && self.up[a].ones().all(|c| c == a || c == b || !self.lt(c, b)))
            .collect()
    }

    pub fn lower_covers(&self, b: usize) -> Vec<usize> {
        self.down[b]
            .ones()
            .filter(|&a| a != b && self.down[b].ones().all(|c| c == a || c == b || !self.lt(a, c)))
            .collect()
    }

    /// The cover relation `a ≺ b` (Hasse diagram), lexicographically sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| self.upper_covers(a).into_iter().map(move |b| (a, b)))
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| self.down[a].count_ones(..) == 1)
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| self.up[a].count_ones(..) == 1)
            .collect()
    }

    /// A linear extension: elements sorted by the size of their down-set.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&a| (self.down[a].count_ones(..), a));
        order
    }

    /// Sub-poset on `elements`; element `k` of the result is `elements[k]`.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let up = elements
            .iter()
            .map(|&a| {
                let mut row = FixedBitSet::with_capacity(elements.len());
                for (k, &b) in elements.iter().enumerate() {
                    if self.leq(a, b) {
                        row.insert(k);
                    }
                }
                row
            })
            .collect();
        Self::from_up_sets(up)
    }

    /// The order with `≤` reversed.
    pub fn dual(&self) -> Poset {
        Poset {
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Renames element `a` to `new_index[a]`.
    pub fn relabeled(&self, new_index: &[usize]) -> Poset {
        let n = self.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (a, b) in self.comparabilities() {
            up[new_index[a]].insert(new_index[b]);
        }
        Self::from_up_sets(up)
    }

    /// Finds an order isomorphism `self → other` by backtracking, returned as
    /// the image of each element.
    pub fn isomorphism(&self, other: &Poset) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() {
            return None;
        }
        let signature = |p: &Poset, a: usize| (p.down[a].count_ones(..), p.up[a].count_ones(..));
        let mut mine: Vec<_> = (0..n).map(|a| signature(self, a)).collect();
        let mut theirs: Vec<_> = (0..n).map(|a| signature(other, a)).collect();
        let (sig_self, sig_other) = (mine.clone(), theirs.clone());
        mine.sort_unstable();
        theirs.sort_unstable();
        if mine != theirs {
            return None;
        }
        let mut image = vec![usize::MAX; n];
        let mut used = FixedBitSet::with_capacity(n);
        fn extend(
            a: usize,
            src: &Poset,
            dst: &Poset,
            sig_src: &[(usize, usize)],
            sig_dst: &[(usize, usize)],
            image: &mut [usize],
            used: &mut FixedBitSet,
        ) -> bool {
            if a == src.len() {
                return true;
            }
            for b in 0..dst.len() {
                if used.contains(b) || sig_src[a] != sig_dst[b] {
                    continue;
                }
                let consistent = (0..a).all(|c| {
                    src.leq(c, a) == dst.leq(image[c], b) && src.leq(a, c) == dst.leq(b, image[c])
                });
                if !consistent {
                    continue;
                }
                image[a] = b;
                used.insert(b);
                if extend(a + 1, src, dst, sig_src, sig_dst, image, used) {
                    return true;
                }
                used.set(b, false);
            }
            false
        }
        extend(0, self, other, &sig_self, &sig_other, &mut image, &mut used).then_some(image)
    }

    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.isomorphism(other).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// a=0, b=1, c=2, d=3 with a<c, b<c, b<d.
    pub(crate) fn sample() -> Poset {
        Poset::from_covers(4, &[(0, 2), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn covers_of_sample() {
        let p = sample();
        let strict: Vec<_> = p.comparabilities().filter(|(a, b)| a != b).collect();
        assert_eq!(strict, vec![(0, 2), (1, 2), (1, 3)]);
        assert_eq!(p.covers(), vec![(0, 2), (1, 2), (1, 3)]);
        assert_eq!(p.minimal_elements(), vec![0, 1]);
        assert_eq!(p.maximal_elements(), vec![2, 3]);
    }

    #[test]
    fn closure_and_covers() {
        let p = Poset::from_covers(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(p, Poset::chain(3));
    }

    #[test]
    fn antichain_and_cycle() {
        let p = Poset::from_covers(3, &[]).unwrap();
        assert_eq!(p, Poset::antichain(3));
        assert!(matches!(
            Poset::from_covers(2, &[(0, 1), (1, 0)]),
            Err(OrderError::Cycle { .. })
        ));
        assert!(matches!(
            Poset::from_covers(2, &[(0, 4)]),
            Err(OrderError::ElementOutOfRange { element: 4, n: 2 })
        ));
    }

    #[test]
    fn relation_axioms() {
        assert!(Poset::from_relation(3, |a, b| a <= b).is_ok());
        assert!(Poset::from_relation(2, |a, b| a != b || a == 0).is_err());
        // not transitive: 0<1, 1<2 but not 0<2
        assert!(Poset::from_relation(3, |a, b| a == b || (a, b) == (0, 1) || (a, b) == (1, 2)).is_err());
    }

    #[test]
    fn isomorphism_of_sample_relabelled() {
        let p = sample();
        let q = p.relabeled(&[3, 0, 2, 1]);
        assert!(p.is_isomorphic(&q));
        assert!(!p.is_isomorphic(&Poset::chain(4)));
        assert!(!Poset::antichain(2).is_isomorphic(&Poset::chain(2)));
    }
}
