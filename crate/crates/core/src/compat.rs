//! Compatibility of a lattice with a reflexive graph and the identities it
//! implies.

use alloc::vec::Vec;

use crate::error::CompatError;
use crate::graph::{MinMaxViolation, ReflexiveGraph};
use crate::order::Lattice;

fn same_size(graph: &ReflexiveGraph, lattice: &Lattice) -> Result<(), CompatError> {
    if graph.len() != lattice.len() {
        return Err(CompatError::SizeMismatch {
            graph: graph.len(),
            lattice: lattice.len(),
        });
    }
    Ok(())
}

/// Checks that meet and join are polymorphisms: `u ~ u'` and `v ~ v'` give
/// `u∧v ~ u'∧v'` and `u∨v ~ u'∨v'`.
///
/// Ordered edge pairs (loops included) are scanned lexicographically, so the
/// reported counterexample is the least one.
pub fn check_compatible(graph: &ReflexiveGraph, lattice: &Lattice) -> Result<(), CompatError> {
    same_size(graph, lattice)?;
    let n = graph.len();
    for u in 0..n {
        for u2 in graph.neighborhood(u).ones() {
            for v in 0..n {
                for v2 in graph.neighborhood(v).ones() {
                    let meet = !graph.adjacent(lattice.meet(u, v), lattice.meet(u2, v2));
                    if meet || !graph.adjacent(lattice.join(u, v), lattice.join(u2, v2)) {
                        return Err(CompatError::NotPreserved { u, u2, v, v2, meet });
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn is_compatible(graph: &ReflexiveGraph, lattice: &Lattice) -> bool {
    check_compatible(graph, lattice).is_ok()
}

/// Vertices `u ~ v ~ w` with `v` above or below both `u` and `w`, yet `u ≁ w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VeeViolation {
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

/// Outcome of the min-max and vee identity checks under a lattice order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub min_max: Result<(), MinMaxViolation>,
    pub vee: Result<(), VeeViolation>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.min_max.is_ok() && self.vee.is_ok()
    }
}

/// Tests both identities that every compatible lattice order satisfies.
pub fn check_identities(graph: &ReflexiveGraph, lattice: &Lattice) -> Result<IdentityReport, CompatError> {
    same_size(graph, lattice)?;
    Ok(IdentityReport {
        min_max: min_max(graph, lattice),
        vee: vee(graph, lattice),
    })
}

fn min_max(graph: &ReflexiveGraph, lattice: &Lattice) -> Result<(), MinMaxViolation> {
    let order = lattice.order();
    let n = graph.len();
    for low in 0..n {
        for high in order.up_set(low).ones() {
            if graph.adjacent(low, high) {
                continue;
            }
            for outer_low in order.down_set(low).ones() {
                let mut outer = graph.neighborhood(outer_low).clone();
                outer.intersect_with(order.up_set(high));
                if let Some(outer_high) = outer.ones().next() {
                    return Err(MinMaxViolation {
                        outer_low,
                        low,
                        high,
                        outer_high,
                    });
                }
            }
        }
    }
    Ok(())
}

fn vee(graph: &ReflexiveGraph, lattice: &Lattice) -> Result<(), VeeViolation> {
    let order = lattice.order();
    for v in 0..graph.len() {
        for side in [order.down_set(v), order.up_set(v)] {
            let mut arm = graph.neighborhood(v).clone();
            arm.intersect_with(side);
            for u in arm.ones() {
                if let Some(w) = arm.ones().find(|&w| !graph.adjacent(u, w)) {
                    return Err(VeeViolation { u, v, w });
                }
            }
        }
    }
    Ok(())
}

/// Whether every cover `x ≺ y` of the lattice is an edge of the graph.
pub fn check_hasse_subgraph(graph: &ReflexiveGraph, lattice: &Lattice) -> bool {
    graph.len() == lattice.len() && lattice.covers().into_iter().all(|(x, y)| graph.adjacent(x, y))
}

/// The ternary term `(x∧y) ∨ (y∧z) ∨ (x∧z)` tabulated over a lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MajorityTable {
    n: usize,
    table: Vec<usize>,
}

impl MajorityTable {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize, z: usize) -> usize {
        self.table[(x * self.n + y) * self.n + z]
    }

    /// `f(x,x,y) = f(x,y,x) = f(y,x,x) = x` everywhere.
    pub fn is_majority(&self) -> bool {
        (0..self.n).all(|x| {
            (0..self.n).all(|y| self.get(x, x, y) == x && self.get(x, y, x) == x && self.get(y, x, x) == x)
        })
    }

    /// Brute force over ordered edge triples; returns the first triple of
    /// edges whose images are not adjacent.
    pub fn check_polymorphism(&self, graph: &ReflexiveGraph) -> Result<(), [(usize, usize); 3]> {
        let edges: Vec<(usize, usize)> = (0..graph.len())
            .flat_map(|u| graph.neighborhood(u).ones().map(move |v| (u, v)))
            .collect();
        for &(x, x2) in &edges {
            for &(y, y2) in &edges {
                for &(z, z2) in &edges {
                    if !graph.adjacent(self.get(x, y, z), self.get(x2, y2, z2)) {
                        return Err([(x, x2), (y, y2), (z, z2)]);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_polymorphism(&self, graph: &ReflexiveGraph) -> bool {
        graph.len() == self.n && self.check_polymorphism(graph).is_ok()
    }
}

pub fn majority_from_lattice(lattice: &Lattice) -> MajorityTable {
    let n = lattice.len();
    let mut table = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let xy = lattice.meet(x, y);
                let yz = lattice.meet(y, z);
                let xz = lattice.meet(x, z);
                table.push(lattice.join(lattice.join(xy, yz), xz));
            }
        }
    }
    MajorityTable { n, table }
}
