//! The downset graph `G(P, A)`.
//!
//! For a poset `P` and a set `A` of its comparabilities (loops included),
//! `G(P, A)` lives on the downsets of `P`: two downsets are adjacent when
//! every comparability lying inside one side of their symmetric difference
//! belongs to `A`. Its downset lattice is always compatible with it, and
//! every DL-pair arises this way.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{CompatError, OrderError};
use crate::graph::ReflexiveGraph;
use crate::order::{
    mask_of, principal_downset, BitIter, Birkhoff, Downset, DownsetLattice, Lattice, Poset,
    MAX_DOWNSET_ELEMENTS,
};

/// A set of arcs `(x, y)` with `x ≤ y` in an associated poset. Loops
/// `(x, x)` are ordinary members.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArcSet {
    // bit y of rows[x] <=> (x, y) in the set
    rows: Vec<u64>,
}

impl ArcSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_DOWNSET_ELEMENTS, "arc sets support at most 64 elements");
        Self { rows: vec![0; n] }
    }

    /// Every comparability of `poset`, loops included.
    pub fn all(poset: &Poset) -> Self {
        let mut a = Self::empty(poset.len());
        for (x, y) in poset.comparabilities() {
            a.insert(x, y);
        }
        a
    }

    /// Only the loops `(x, x)`.
    pub fn loops(n: usize) -> Self {
        let mut a = Self::empty(n);
        for x in 0..n {
            a.insert(x, x);
        }
        a
    }

    /// Collects `arcs`, rejecting any pair that is not a comparability.
    pub fn from_arcs<I>(poset: &Poset, arcs: I) -> Result<Self, OrderError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if poset.len() > MAX_DOWNSET_ELEMENTS {
            return Err(OrderError::TooLarge {
                n: poset.len(),
                max: MAX_DOWNSET_ELEMENTS,
            });
        }
        let mut a = Self::empty(poset.len());
        for (x, y) in arcs {
            if x >= poset.len() || y >= poset.len() || !poset.leq(x, y) {
                return Err(OrderError::NotComparable { x, y });
            }
            a.insert(x, y);
        }
        Ok(a)
    }

    /// Number of poset elements the set refers to.
    pub fn element_count(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.rows[x] |= 1 << y;
    }

    pub fn remove(&mut self, x: usize, y: usize) {
        self.rows[x] &= !(1 << y);
    }

    #[inline]
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x] >> y & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// Arcs in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, &r)| BitIter(r).map(move |y| (x, y)))
    }

    pub fn non_loop_arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.iter().filter(|(x, y)| x != y)
    }

    /// Every arc is a comparability of `poset`.
    pub fn is_valid_for(&self, poset: &Poset) -> bool {
        self.rows.len() == poset.len() && self.iter().all(|(x, y)| poset.leq(x, y))
    }

    /// `Ā`: comparabilities of `poset` missing from the set.
    pub fn complement(&self, poset: &Poset) -> ArcSet {
        let mut c = ArcSet::empty(poset.len());
        for (x, y) in poset.comparabilities() {
            if !self.contains(x, y) {
                c.insert(x, y);
            }
        }
        c
    }

    /// Arcs among `elements`, renumbered so `elements[k]` becomes `k`.
    pub fn restrict(&self, elements: &[usize]) -> ArcSet {
        let mut r = ArcSet::empty(elements.len());
        for (a, &x) in elements.iter().enumerate() {
            for (b, &y) in elements.iter().enumerate() {
                if self.contains(x, y) {
                    r.insert(a, b);
                }
            }
        }
        r
    }

    /// Renames element `x` to `new_index[x]`.
    pub fn relabeled(&self, new_index: &[usize]) -> ArcSet {
        let mut r = ArcSet::empty(self.rows.len());
        for (x, y) in self.iter() {
            r.insert(new_index[x], new_index[y]);
        }
        r
    }
}

/// Bit mask of the interval `[lo, hi]`.
fn interval(poset: &Poset, lo: usize, hi: usize) -> u64 {
    mask_of(poset.up_set(lo)) & mask_of(poset.down_set(hi))
}

/// True when every comparability `(x, y)` with `lo ≤ x ≤ y ≤ hi`, except
/// possibly `(lo, hi)` itself when `skip_outer`, lies in `arcs`.
fn interval_intact(poset: &Poset, arcs: &ArcSet, lo: usize, hi: usize, skip_outer: bool) -> bool {
    let span = interval(poset, lo, hi);
    BitIter(span).all(|x| {
        let mut needed = mask_of(poset.up_set(x)) & span;
        if skip_outer && x == lo {
            needed &= !(1 << hi);
        }
        arcs.rows[x] & needed == needed
    })
}

/// Drops every arc whose interval contains a missing arc. The result
/// satisfies the directed min-max identity and defines the same graph.
pub fn normalize_arcs(poset: &Poset, arcs: &ArcSet) -> ArcSet {
    let mut out = ArcSet::empty(poset.len());
    for (x, y) in arcs.iter() {
        if interval_intact(poset, arcs, x, y, false) {
            out.insert(x, y);
        }
    }
    out
}

/// The interval-minimal missing arcs: comparabilities `(x, y) ∉ A` whose
/// interval contains no other missing arc.
pub fn reduced_complement(poset: &Poset, arcs: &ArcSet) -> ArcSet {
    let mut out = ArcSet::empty(poset.len());
    for (x, y) in poset.comparabilities() {
        if !arcs.contains(x, y) && interval_intact(poset, arcs, x, y, true) {
            out.insert(x, y);
        }
    }
    out
}

/// Adjacency in `G(P, A)` straight from the definition: both `D ∖ D'` and
/// `D' ∖ D` contain only arcs of `A`.
pub fn adjacent(poset: &Poset, arcs: &ArcSet, d: Downset, e: Downset) -> bool {
    let side_ok = |side: u64| {
        BitIter(side).all(|x| {
            let needed = mask_of(poset.up_set(x)) & side;
            arcs.rows[x] & needed == needed
        })
    };
    side_ok(d.bits() & !e.bits()) && side_ok(e.bits() & !d.bits())
}

/// Adjacency via the complement: for every missing arc `(y, x)` with `x` in
/// one downset, `y` must lie in the other.
pub fn adjacency_alt(poset: &Poset, arcs: &ArcSet, d: Downset, e: Downset) -> bool {
    let missing = arcs.complement(poset);
    let one_way = |from: Downset, to: Downset| {
        missing
            .iter()
            .all(|(y, x)| !from.contains(x) || to.contains(y))
    };
    one_way(d, e) && one_way(e, d)
}

/// `G(P, A)` on the canonically ordered downsets of `P`.
pub fn construct_gpa(poset: &Poset, arcs: &ArcSet) -> Result<ReflexiveGraph, OrderError> {
    Ok(construct_gpa_with_lattice(poset, arcs)?.0)
}

/// `G(P, A)` together with `D(P)`, whose element `k` is vertex `k`.
pub fn construct_gpa_with_lattice(
    poset: &Poset,
    arcs: &ArcSet,
) -> Result<(ReflexiveGraph, DownsetLattice), OrderError> {
    if let Some((x, y)) = arcs.iter().find(|&(x, y)| x >= poset.len() || y >= poset.len() || !poset.leq(x, y)) {
        return Err(OrderError::NotComparable { x, y });
    }
    let dl = Lattice::of_downsets(poset).map_err(|e| match e {
        crate::error::LatticeError::Order(o) => o,
        _ => OrderError::TooLarge {
            n: poset.len(),
            max: MAX_DOWNSET_ELEMENTS,
        },
    })?;
    let graph = graph_on_downsets(poset, arcs, &dl.downsets);
    Ok((graph, dl))
}

pub(crate) fn graph_on_downsets(poset: &Poset, arcs: &ArcSet, downsets: &[Downset]) -> ReflexiveGraph {
    let n = downsets.len();
    let mut g = ReflexiveGraph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if adjacent(poset, arcs, downsets[a], downsets[b]) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// Arcs recovered from a compatible distributive pair.
#[derive(Clone, Debug)]
pub struct ExtractedArcs {
    pub birkhoff: Birkhoff,
    /// Arc set on the poset `J_L` of join-irreducibles.
    pub arcs: ArcSet,
}

impl ExtractedArcs {
    /// When the lattice is `D(P)`, re-expresses the arcs on `P` itself by
    /// sending each irreducible `↓p` back to `p`.
    pub fn arcs_on(&self, poset: &Poset, dl: &DownsetLattice) -> Option<ArcSet> {
        let mut to_poset = Vec::with_capacity(self.birkhoff.irreducibles.len());
        for &x in &self.birkhoff.irreducibles {
            let d = dl.downsets[x];
            to_poset.push((0..poset.len()).find(|&p| principal_downset(poset, p) == d)?);
        }
        let mut out = ArcSet::empty(poset.len());
        for (y, x) in self.arcs.iter() {
            out.insert(to_poset[y], to_poset[x]);
        }
        Some(out)
    }
}

/// Recovers `A` with `G ≅ G(J_L, A)` from a graph compatible with the
/// distributive lattice `lattice` (vertex `k` is lattice element `k`).
///
/// An arc `(y, x)` of `J_L` is kept when `↓x ∩ C_y` and `↓x` are adjacent,
/// where `C_y` is the largest downset avoiding `y`. The reconstruction is
/// checked pair by pair before returning.
pub fn extract_arcs(graph: &ReflexiveGraph, lattice: &Lattice) -> Result<ExtractedArcs, CompatError> {
    if graph.len() != lattice.len() {
        return Err(CompatError::SizeMismatch {
            graph: graph.len(),
            lattice: lattice.len(),
        });
    }
    let birkhoff = lattice.join_irreducibles()?;
    let j = &birkhoff.poset;
    let all = if j.len() == 64 { u64::MAX } else { (1u64 << j.len()) - 1 };
    let mut arcs = ArcSet::empty(j.len());
    for (y, x) in j.comparabilities() {
        let below_x = principal_downset(j, x);
        let avoid_y = Downset::new(j, all & !mask_of(j.up_set(y))).expect("complement of an up-set");
        let lower = birkhoff
            .element_of(below_x.intersection(avoid_y))
            .expect("every downset is a lattice element");
        let upper = birkhoff.element_of(below_x).expect("every downset is a lattice element");
        if graph.adjacent(lower, upper) {
            arcs.insert(y, x);
        }
    }
    for u in 0..graph.len() {
        for v in u + 1..graph.len() {
            let rebuilt = adjacent(j, &arcs, birkhoff.representation[u], birkhoff.representation[v]);
            if rebuilt != graph.adjacent(u, v) {
                return Err(CompatError::RoundTrip { u, v });
            }
        }
    }
    Ok(ExtractedArcs { birkhoff, arcs })
}
