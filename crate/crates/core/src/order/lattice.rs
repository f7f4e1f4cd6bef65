use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use super::downset::{check_size, downset_index, enumerate_downsets, Downset};
use super::Poset;
use crate::error::{Bound, LatticeError};

/// A finite lattice on `0..n` with tabulated meet and join.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    order: Poset,
    meet: Vec<usize>,
    join: Vec<usize>,
    zero: usize,
    one: usize,
}

/// The downset lattice `D(P)` together with the downset behind each element.
#[derive(Clone, Debug)]
pub struct DownsetLattice {
    pub lattice: Lattice,
    /// Canonically ordered; element `k` of the lattice is `downsets[k]`.
    pub downsets: Vec<Downset>,
}

impl DownsetLattice {
    pub fn index_of(&self, d: Downset) -> Option<usize> {
        downset_index(&self.downsets, d)
    }
}

/// Birkhoff representation of a distributive lattice `L ≅ D(J_L)`.
#[derive(Clone, Debug)]
pub struct Birkhoff {
    /// The poset `J_L` of join-irreducibles.
    pub poset: Poset,
    /// Lattice element behind each element of `J_L`.
    pub irreducibles: Vec<usize>,
    /// Downset of `J_L` representing each lattice element.
    pub representation: Vec<Downset>,
    downsets: Vec<Downset>,
    element_of_downset: Vec<usize>,
}

impl Birkhoff {
    /// Lattice element represented by the downset `d` of `J_L`.
    pub fn element_of(&self, d: Downset) -> Option<usize> {
        downset_index(&self.downsets, d).map(|k| self.element_of_downset[k])
    }
}

fn bound_of(rows: &[FixedBitSet], x: usize, y: usize) -> Option<usize> {
    let mut common = rows[x].clone();
    common.intersect_with(&rows[y]);
    let size = common.count_ones(..);
    common.ones().find(|&m| rows[m].count_ones(..) == size && common.is_subset(&rows[m]))
}

impl Lattice {
    /// Tabulates meet and join of `order`, which must have minimum `zero`
    /// and maximum `one`.
    pub fn from_order(order: Poset, zero: usize, one: usize) -> Result<Self, LatticeError> {
        let n = order.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if zero >= n || one >= n || (0..n).any(|x| !order.leq(zero, x) || !order.leq(x, one)) {
            return Err(LatticeError::WrongBounds { zero, one });
        }
        let downs: Vec<FixedBitSet> = (0..n).map(|x| order.down_set(x).clone()).collect();
        let ups: Vec<FixedBitSet> = (0..n).map(|x| order.up_set(x).clone()).collect();
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let m = bound_of(&downs, x, y).ok_or(LatticeError::NotALattice {
                    x,
                    y,
                    bound: Bound::Meet,
                })?;
                let j = bound_of(&ups, x, y).ok_or(LatticeError::NotALattice {
                    x,
                    y,
                    bound: Bound::Join,
                })?;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
                join[x * n + y] = j;
                join[y * n + x] = j;
            }
        }
        Ok(Self {
            order,
            meet,
            join,
            zero,
            one,
        })
    }

    /// Like [`Lattice::from_order`], locating the bounds itself.
    pub fn from_order_auto(order: Poset) -> Result<Self, LatticeError> {
        let zero = order.minimal_elements().first().copied().unwrap_or(0);
        let one = order.maximal_elements().first().copied().unwrap_or(0);
        Self::from_order(order, zero, one)
    }

    /// The lattice `D(P)` of downsets ordered by inclusion.
    pub fn of_downsets(poset: &Poset) -> Result<DownsetLattice, LatticeError> {
        check_size(poset)?;
        let downsets = enumerate_downsets(poset)?;
        let n = downsets.len();
        let up = downsets
            .iter()
            .map(|d| {
                let mut row = FixedBitSet::with_capacity(n);
                for (k, e) in downsets.iter().enumerate() {
                    if d.is_subset(*e) {
                        row.insert(k);
                    }
                }
                row
            })
            .collect();
        let index = |d: Downset| downset_index(&downsets, d).expect("downsets are closed under ∩ and ∪");
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                meet[x * n + y] = index(downsets[x].intersection(downsets[y]));
                join[x * n + y] = index(downsets[x].union(downsets[y]));
            }
        }
        let lattice = Lattice {
            order: Poset::from_up_sets(up),
            meet,
            join,
            zero: 0,
            one: n - 1,
        };
        Ok(DownsetLattice { lattice, downsets })
    }

    /// The chain `0 < 1 < … < n-1`, `n ≥ 1`.
    pub fn chain(n: usize) -> Self {
        assert!(n > 0, "a lattice needs at least one element");
        let meet = (0..n * n).map(|k| (k / n).min(k % n)).collect();
        let join = (0..n * n).map(|k| (k / n).max(k % n)).collect();
        Self {
            order: Poset::chain(n),
            meet,
            join,
            zero: 0,
            one: n - 1,
        }
    }

    /// Product lattice; element `(a, b)` has index `a * other.len() + b`.
    pub fn product(&self, other: &Lattice) -> Lattice {
        let (n, m) = (self.len(), other.len());
        let size = n * m;
        let split = |k: usize| (k / m, k % m);
        let up = (0..size)
            .map(|k| {
                let (a, b) = split(k);
                let mut row = FixedBitSet::with_capacity(size);
                for l in 0..size {
                    let (c, d) = split(l);
                    if self.leq(a, c) && other.leq(b, d) {
                        row.insert(l);
                    }
                }
                row
            })
            .collect();
        let mut meet = vec![0; size * size];
        let mut join = vec![0; size * size];
        for k in 0..size {
            let (a, b) = split(k);
            for l in 0..size {
                let (c, d) = split(l);
                meet[k * size + l] = self.meet(a, c) * m + other.meet(b, d);
                join[k * size + l] = self.join(a, c) * m + other.join(b, d);
            }
        }
        Lattice {
            order: Poset::from_up_sets(up),
            meet,
            join,
            zero: self.zero * m + other.zero,
            one: self.one * m + other.one,
        }
    }

    /// Stacks the lattices one above the other: every element of an earlier
    /// lattice lies below every element of a later one. Elements are
    /// numbered consecutively, block by block.
    pub fn simple_join(lattices: &[Lattice]) -> Result<Lattice, LatticeError> {
        if lattices.is_empty() {
            return Err(LatticeError::Empty);
        }
        let mut block = Vec::new();
        let mut offset = Vec::new();
        for (b, l) in lattices.iter().enumerate() {
            offset.push(block.len());
            block.extend(core::iter::repeat_n(b, l.len()));
        }
        let size = block.len();
        let local = |k: usize| k - offset[block[k]];
        let leq = |x: usize, y: usize| match block[x].cmp(&block[y]) {
            core::cmp::Ordering::Less => true,
            core::cmp::Ordering::Greater => false,
            core::cmp::Ordering::Equal => lattices[block[x]].leq(local(x), local(y)),
        };
        let up = (0..size)
            .map(|x| {
                let mut row = FixedBitSet::with_capacity(size);
                for y in 0..size {
                    if leq(x, y) {
                        row.insert(y);
                    }
                }
                row
            })
            .collect();
        let mut meet = vec![0; size * size];
        let mut join = vec![0; size * size];
        for x in 0..size {
            for y in 0..size {
                let (m, j) = if block[x] == block[y] {
                    let l = &lattices[block[x]];
                    let base = offset[block[x]];
                    (base + l.meet(local(x), local(y)), base + l.join(local(x), local(y)))
                } else if block[x] < block[y] {
                    (x, y)
                } else {
                    (y, x)
                };
                meet[x * size + y] = m;
                join[x * size + y] = j;
            }
        }
        let first = &lattices[0];
        let last = lattices.last().expect("non-empty");
        Ok(Lattice {
            order: Poset::from_up_sets(up),
            meet,
            join,
            zero: first.zero,
            one: offset[lattices.len() - 1] + last.one,
        })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.order.leq(x, y)
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y]
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// Cover pairs `x ≺ y` of the lattice order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.order.covers()
    }

    /// Checks `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` for all triples, returning
    /// the first failing triple.
    pub fn check_distributive(&self) -> Result<(), [usize; 3]> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z)) {
                        return Err([x, y, z]);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_distributive(&self) -> bool {
        self.check_distributive().is_ok()
    }

    /// Join-irreducible elements: non-zero elements with exactly one lower
    /// cover.
    pub fn join_irreducible_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| x != self.zero && self.order.lower_covers(x).len() == 1)
            .collect()
    }

    /// Birkhoff's representation `L ≅ D(J_L)`.
    pub fn join_irreducibles(&self) -> Result<Birkhoff, LatticeError> {
        if let Err([x, y, z]) = self.check_distributive() {
            return Err(LatticeError::NotDistributive { x, y, z });
        }
        let irreducibles = self.join_irreducible_elements();
        let poset = self.order.induced(&irreducibles);
        check_size(&poset)?;
        let representation: Vec<Downset> = (0..self.len())
            .map(|x| {
                let bits = irreducibles
                    .iter()
                    .enumerate()
                    .filter(|&(_, &j)| self.leq(j, x))
                    .fold(0u64, |m, (k, _)| m | 1 << k);
                Downset::from_bits_unchecked(bits)
            })
            .collect();
        let downsets = enumerate_downsets(&poset)?;
        let mut element_of_downset = vec![usize::MAX; downsets.len()];
        for (x, &d) in representation.iter().enumerate() {
            let k = downset_index(&downsets, d).ok_or(LatticeError::NotDistributive { x, y: x, z: x })?;
            if element_of_downset[k] != usize::MAX {
                let y = element_of_downset[k];
                return Err(LatticeError::NotDistributive { x, y, z: y });
            }
            element_of_downset[k] = x;
        }
        if element_of_downset.contains(&usize::MAX) {
            return Err(LatticeError::NotDistributive {
                x: self.zero,
                y: self.zero,
                z: self.zero,
            });
        }
        Ok(Birkhoff {
            poset,
            irreducibles,
            representation,
            downsets,
            element_of_downset,
        })
    }

    /// Renames element `x` to `new_index[x]`.
    pub fn relabeled(&self, new_index: &[usize]) -> Lattice {
        let n = self.len();
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                meet[new_index[x] * n + new_index[y]] = new_index[self.meet(x, y)];
                join[new_index[x] * n + new_index[y]] = new_index[self.join(x, y)];
            }
        }
        Lattice {
            order: self.order.relabeled(new_index),
            meet,
            join,
            zero: new_index[self.zero],
            one: new_index[self.one],
        }
    }

    /// Sublattice on `elements` (which must be closed under meet and join);
    /// element `k` of the result is `elements[k]`.
    pub fn restricted(&self, elements: &[usize]) -> Option<Lattice> {
        let n = self.len();
        let mut local = vec![usize::MAX; n];
        for (k, &x) in elements.iter().enumerate() {
            local[x] = k;
        }
        let m = elements.len();
        let mut meet = vec![0; m * m];
        let mut join = vec![0; m * m];
        for (a, &x) in elements.iter().enumerate() {
            for (b, &y) in elements.iter().enumerate() {
                let (mm, jj) = (local[self.meet(x, y)], local[self.join(x, y)]);
                if mm == usize::MAX || jj == usize::MAX {
                    return None;
                }
                meet[a * m + b] = mm;
                join[a * m + b] = jj;
            }
        }
        let order = self.order.induced(elements);
        let zero = (0..m).find(|&a| (0..m).all(|b| order.leq(a, b)))?;
        let one = (0..m).find(|&a| (0..m).all(|b| order.leq(b, a)))?;
        Some(Lattice {
            order,
            meet,
            join,
            zero,
            one,
        })
    }

    pub fn is_isomorphic(&self, other: &Lattice) -> bool {
        self.order.is_isomorphic(&other.order)
    }
}
