//! Exhaustive ground truth for small instances: every labelled poset on a
//! few elements, and every compatible lattice of a small graph.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use fixedbitset::FixedBitSet;

use crate::compat::is_compatible;
use crate::error::OracleError;
use crate::graph::ReflexiveGraph;
use crate::order::{Lattice, Poset};

/// Largest `n` accepted by [`enumerate_posets`].
pub const MAX_POSET_ELEMENTS: usize = 7;
/// Largest graph accepted by [`oracle_recognize`].
pub const MAX_ORACLE_VERTICES: usize = 6;

struct Search<'a, F> {
    n: usize,
    pairs: Vec<(usize, usize)>,
    // bit y of leq[x] <=> x ≤ y; bit y of apart[x] <=> x, y declared incomparable
    leq: [u8; MAX_POSET_ELEMENTS],
    apart: [u8; MAX_POSET_ELEMENTS],
    visit: &'a mut F,
}

impl<F: FnMut(&Poset) -> ControlFlow<()>> Search<'_, F> {
    fn run(&mut self, k: usize) -> ControlFlow<()> {
        let Some(&(i, j)) = self.pairs.get(k) else {
            let poset = self.poset();
            return (self.visit)(&poset);
        };
        if self.comparable(i, j) {
            return self.run(k + 1);
        }
        let (leq, apart) = (self.leq, self.apart);
        self.apart[i] |= 1 << j;
        self.apart[j] |= 1 << i;
        self.run(k + 1)?;
        self.apart = apart;
        for (a, b) in [(i, j), (j, i)] {
            if self.add(a, b) {
                self.run(k + 1)?;
            }
            self.leq = leq;
            self.apart = apart;
        }
        ControlFlow::Continue(())
    }

    fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq[a] >> b & 1 == 1 || self.leq[b] >> a & 1 == 1
    }

    /// Adds `a < b` with its transitive consequences; false if that makes a
    /// pair declared incomparable comparable.
    fn add(&mut self, a: usize, b: usize) -> bool {
        let above_b = self.leq[b];
        for x in 0..self.n {
            if self.leq[x] >> a & 1 == 1 {
                if self.apart[x] & above_b != 0 {
                    return false;
                }
                self.leq[x] |= above_b;
            }
        }
        true
    }

    fn poset(&self) -> Poset {
        let up = (0..self.n)
            .map(|x| {
                let mut row = FixedBitSet::with_capacity(self.n);
                for y in 0..self.n {
                    if self.leq[x] >> y & 1 == 1 {
                        row.insert(y);
                    }
                }
                row
            })
            .collect();
        Poset::from_up_sets(up)
    }
}

/// Calls `visit` once for every partial order on `0..n`. Pairs `(i, j)`,
/// `i < j`, are decided in lexicographic order, trying incomparable, then
/// `i < j`, then `j < i`.
pub fn for_each_poset<F>(n: usize, mut visit: F) -> Result<(), OracleError>
where
    F: FnMut(&Poset) -> ControlFlow<()>,
{
    if n > MAX_POSET_ELEMENTS {
        return Err(OracleError::TooLarge {
            n,
            max: MAX_POSET_ELEMENTS,
        });
    }
    let mut leq = [0u8; MAX_POSET_ELEMENTS];
    for (x, row) in leq.iter_mut().enumerate().take(n) {
        *row = 1 << x;
    }
    let mut search = Search {
        n,
        pairs: (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
        leq,
        apart: [0; MAX_POSET_ELEMENTS],
        visit: &mut visit,
    };
    let _ = search.run(0);
    Ok(())
}

pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>, OracleError> {
    let mut out = Vec::new();
    for_each_poset(n, |p| {
        out.push(p.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    pub distributive_only: bool,
    /// Skip orders whose covers are not all edges. Only applied when the
    /// graph is connected.
    pub hasse_prune: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            distributive_only: true,
            hasse_prune: true,
        }
    }
}

/// Every lattice order on the vertices of `graph` compatible with it.
pub fn oracle_recognize(graph: &ReflexiveGraph, options: OracleOptions) -> Result<Vec<Lattice>, OracleError> {
    if graph.len() > MAX_ORACLE_VERTICES {
        return Err(OracleError::TooLarge {
            n: graph.len(),
            max: MAX_ORACLE_VERTICES,
        });
    }
    let mut out = Vec::new();
    for_each_poset(graph.len(), |p| {
        if let Some(l) = test_order(graph, p, options) {
            out.push(l);
        }
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Same as [`oracle_recognize`] over a precomputed list of orders, all on
/// `graph.len()` elements.
pub fn oracle_recognize_in(graph: &ReflexiveGraph, posets: &[Poset], options: OracleOptions) -> Vec<Lattice> {
    posets.iter().filter_map(|p| test_order(graph, p, options)).collect()
}

fn test_order(graph: &ReflexiveGraph, poset: &Poset, options: OracleOptions) -> Option<Lattice> {
    if options.hasse_prune
        && graph.is_connected()
        && !poset.covers().into_iter().all(|(a, b)| graph.adjacent(a, b))
    {
        return None;
    }
    let lattice = Lattice::from_order_auto(poset.clone()).ok()?;
    if options.distributive_only && !lattice.is_distributive() {
        return None;
    }
    is_compatible(graph, &lattice).then_some(lattice)
}
