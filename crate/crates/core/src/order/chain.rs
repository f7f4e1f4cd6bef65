use alloc::vec;
use alloc::vec::Vec;

use super::Poset;
use crate::error::OrderError;

/// A family of chains covering every element of a poset.
///
/// Chains may overlap; an element in several chains gets several labels.
/// Chain `i` lists its elements bottom-up, so the label `c^α_i` is
/// `chains[i][α - 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCover {
    chains: Vec<Vec<usize>>,
}

impl ChainCover {
    pub fn new(poset: &Poset, chains: Vec<Vec<usize>>) -> Result<Self, OrderError> {
        let n = poset.len();
        let mut covered = vec![false; n];
        for chain in &chains {
            for &x in chain {
                if x >= n {
                    return Err(OrderError::ElementOutOfRange { element: x, n });
                }
                covered[x] = true;
            }
            for w in chain.windows(2) {
                if !poset.lt(w[0], w[1]) {
                    return Err(OrderError::NotComparable { x: w[0], y: w[1] });
                }
            }
        }
        if let Some(element) = covered.iter().position(|&c| !c) {
            return Err(OrderError::Uncovered { element });
        }
        Ok(Self {
            chains: chains.into_iter().filter(|c| !c.is_empty()).collect(),
        })
    }

    /// One two-element chain per non-loop arc, then a singleton chain for
    /// each element no arc touches.
    pub fn from_digraph<I>(poset: &Poset, arcs: I) -> Result<Self, OrderError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut chains = Vec::new();
        let mut touched = vec![false; poset.len()];
        for (x, y) in arcs {
            if x == y {
                continue;
            }
            if x >= poset.len() || y >= poset.len() || !poset.lt(x, y) {
                return Err(OrderError::NotComparable { x, y });
            }
            touched[x] = true;
            touched[y] = true;
            chains.push(vec![x, y]);
        }
        chains.extend((0..poset.len()).filter(|&x| !touched[x]).map(|x| vec![x]));
        Ok(Self { chains })
    }

    /// Disjoint chains obtained by repeatedly removing the lexicographically
    /// least among the longest chains of what remains.
    pub fn greedy_decomposition(poset: &Poset) -> Self {
        let n = poset.len();
        let mut remaining = vec![true; n];
        let topo = poset.linear_extension();
        let mut chains = Vec::new();
        while remaining.iter().any(|&r| r) {
            // longest[x] = length of the longest chain of remaining elements starting at x
            let mut longest = vec![0usize; n];
            for &x in topo.iter().rev() {
                if remaining[x] {
                    longest[x] = 1 + (0..n)
                        .filter(|&y| remaining[y] && poset.lt(x, y))
                        .map(|y| longest[y])
                        .max()
                        .unwrap_or(0);
                }
            }
            let best = *longest.iter().max().unwrap_or(&0);
            let mut x = (0..n).find(|&x| longest[x] == best).expect("some element remains");
            let mut chain = vec![x];
            while longest[x] > 1 {
                x = (0..n)
                    .find(|&y| remaining[y] && poset.lt(x, y) && longest[y] == longest[x] - 1)
                    .expect("longest chain continues");
                chain.push(x);
            }
            for &y in &chain {
                remaining[y] = false;
            }
            chains.push(chain);
        }
        Self { chains }
    }

    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    /// Number of chains.
    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.chains.iter().map(Vec::len).collect()
    }

    /// `c^α_i` with 1-based `alpha`.
    pub fn label(&self, chain: usize, alpha: usize) -> usize {
        self.chains[chain][alpha - 1]
    }

    /// All labels `(i, α)` carried by `element`.
    pub fn labels_of(&self, element: usize) -> Vec<(usize, usize)> {
        self.chains
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.iter().position(|&x| x == element).map(|p| (i, p + 1)))
            .collect()
    }

    /// Sum of chain lengths, i.e. the total number of labels.
    pub fn total_labels(&self) -> usize {
        self.chains.iter().map(Vec::len).sum()
    }

    /// True when the chains are pairwise disjoint.
    pub fn is_decomposition(&self) -> bool {
        let mut seen = Vec::new();
        for &x in self.chains.iter().flatten() {
            if seen.contains(&x) {
                return false;
            }
            seen.push(x);
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // a=0, b=1, c=2, d=3
    fn sample() -> Poset {
        Poset::from_covers(4, &[(0, 2), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn from_digraph_examples() {
        let p = sample();
        let c = ChainCover::from_digraph(&p, [(1, 2)]).unwrap();
        assert_eq!(c.chains(), &[vec![1, 2], vec![0], vec![3]]);
        let c = ChainCover::from_digraph(&p, []).unwrap();
        assert_eq!(c.chains(), &[vec![0], vec![1], vec![2], vec![3]]);
        let c = ChainCover::from_digraph(&p, [(0, 2), (1, 3)]).unwrap();
        assert_eq!(c.chains(), &[vec![0, 2], vec![1, 3]]);
        assert!(c.is_decomposition());
        assert!(ChainCover::from_digraph(&p, [(2, 3)]).is_err());
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(ChainCover::greedy_decomposition(&Poset::chain(4)).chains(), &[vec![0, 1, 2, 3]]);
        assert_eq!(ChainCover::greedy_decomposition(&Poset::antichain(3)).len(), 3);
        let c = ChainCover::greedy_decomposition(&sample());
        assert_eq!(c.chains(), &[vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn validation() {
        let p = sample();
        assert!(ChainCover::new(&p, vec![vec![0, 2], vec![1, 3]]).is_ok());
        assert!(matches!(
            ChainCover::new(&p, vec![vec![0, 2], vec![1]]),
            Err(OrderError::Uncovered { element: 3 })
        ));
        assert!(ChainCover::new(&p, vec![vec![2, 0], vec![1, 3]]).is_err());
        let overlap = ChainCover::new(&p, vec![vec![0, 2], vec![1, 2], vec![1, 3]]).unwrap();
        assert!(!overlap.is_decomposition());
        assert_eq!(overlap.labels_of(2), vec![(0, 2), (1, 2)]);
        assert_eq!(overlap.total_labels(), 6);
        assert_eq!(overlap.label(2, 2), 3);
    }
}
