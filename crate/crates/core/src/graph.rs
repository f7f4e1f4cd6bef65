//! Reflexive graphs.
//!
//! Every vertex carries a loop, so neighbourhoods are always closed
//! (`v ∈ N(v)`). Input edge lists never mention loops.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::error::GraphError;

/// A symmetric, reflexive adjacency relation on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReflexiveGraph {
    adj: Vec<FixedBitSet>,
}

/// A linear order on the vertices: `order[k]` is the vertex at position `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexLabeling {
    order: Vec<usize>,
}

impl VertexLabeling {
    pub fn new(order: Vec<usize>) -> Result<Self, GraphError> {
        let n = order.len();
        let mut seen = FixedBitSet::with_capacity(n);
        for &v in &order {
            if v >= n || seen.contains(v) {
                return Err(GraphError::BadLabeling { n });
            }
            seen.insert(v);
        }
        Ok(Self { order })
    }

    /// The identity order `0 < 1 < … < n-1`.
    pub fn natural(n: usize) -> Self {
        Self {
            order: (0..n).collect(),
        }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Vertices `(u', u, v, v')` with `u' ≤ u ≤ v ≤ v'`, `u' ~ v'` but `u ≁ v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinMaxViolation {
    pub outer_low: usize,
    pub low: usize,
    pub high: usize,
    pub outer_high: usize,
}

/// BFS layers `N_0, N_1, …` around a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceLayers {
    pub layers: Vec<Vec<usize>>,
    pub unreachable: Vec<usize>,
}

impl ReflexiveGraph {
    /// `n` looped vertices and no other edges.
    pub fn new(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert(v);
                row
            })
            .collect();
        Self { adj }
    }

    /// Builds the graph with exactly the given non-loop edges plus all loops.
    /// Pairs `(v, v)` are accepted and ignored.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n);
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut full = FixedBitSet::with_capacity(n);
        full.insert_range(..);
        Self {
            adj: vec![full; n],
        }
    }

    /// Reflexive path `0 – 1 – … – (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Reflexive cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// Reflexive star `K_{1,leaves}` with centre `0`.
    pub fn star(leaves: usize) -> Self {
        let mut g = Self::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    /// Adds the edge `uv`. Panics if an endpoint is out of range.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Removes the non-loop edge `uv`; loops are never removed.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].set(v, false);
            self.adj[v].set(u, false);
        }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Closed neighbourhood of `v`.
    #[inline]
    pub fn neighborhood(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    /// Number of neighbours other than `v` itself.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..) - 1
    }

    /// Non-loop edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// Partition of the vertices by equal closed neighbourhood. Classes are
    /// listed by smallest member, members ascending.
    pub fn r_thin_classes(&self) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        'vertex: for v in 0..self.len() {
            for class in classes.iter_mut() {
                if self.adj[class[0]] == self.adj[v] {
                    class.push(v);
                    continue 'vertex;
                }
            }
            classes.push(vec![v]);
        }
        classes
    }

    pub fn is_r_thin(&self) -> bool {
        (0..self.len()).all(|u| (u + 1..self.len()).all(|v| self.adj[u] != self.adj[v]))
    }

    /// Quotient by neighbourhood equality. Returns the quotient and the map
    /// sending each vertex to its class (quotient vertex) index.
    pub fn r_thin_reduction(&self) -> (ReflexiveGraph, Vec<usize>) {
        let classes = self.r_thin_classes();
        let mut class_of = vec![0; self.len()];
        for (c, members) in classes.iter().enumerate() {
            for &v in members {
                class_of[v] = c;
            }
        }
        let mut quotient = ReflexiveGraph::new(classes.len());
        for (u, v) in self.edges() {
            quotient.add_edge(class_of[u], class_of[v]);
        }
        (quotient, class_of)
    }

    /// BFS distance from `root`, `None` when unreachable.
    pub fn distances(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        let mut queue = VecDeque::new();
        dist[root] = Some(0);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for w in self.adj[u].ones() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance_layers(&self, root: usize) -> DistanceLayers {
        let dist = self.distances(root);
        let depth = dist.iter().flatten().copied().max().unwrap_or(0);
        let mut layers = vec![Vec::new(); depth + 1];
        let mut unreachable = Vec::new();
        for (v, d) in dist.into_iter().enumerate() {
            match d {
                Some(d) => layers[d].push(v),
                None => unreachable.push(v),
            }
        }
        DistanceLayers {
            layers,
            unreachable,
        }
    }

    /// Connected components ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = FixedBitSet::with_capacity(self.len());
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(u) = stack.pop() {
                comp.push(u);
                for w in self.adj[u].ones() {
                    if !seen.put(w) {
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Checks the min-max identity under `labeling`: whenever
    /// `u' ≤ u ≤ v ≤ v'` and `u' ~ v'`, also `u ~ v`. On failure returns the
    /// lexicographically least violating quadruple of positions.
    pub fn check_min_max_form(&self, labeling: &VertexLabeling) -> Result<(), MinMaxViolation> {
        let order = labeling.order();
        let n = order.len();
        assert_eq!(n, self.len(), "labeling size must match the graph");
        let adj = |p: usize, q: usize| self.adjacent(order[p], order[q]);
        // reach[p] = furthest position adjacent to p
        let reach: Vec<usize> = (0..n)
            .map(|p| (p..n).rev().find(|&q| adj(p, q)).unwrap_or(p))
            .collect();
        for outer_low in 0..n {
            for low in outer_low..n {
                for high in low..=reach[outer_low] {
                    if adj(low, high) {
                        continue;
                    }
                    let outer_high = (high..n)
                        .find(|&q| adj(outer_low, q))
                        .expect("reach bounds an adjacent position");
                    return Err(MinMaxViolation {
                        outer_low: order[outer_low],
                        low: order[low],
                        high: order[high],
                        outer_high: order[outer_high],
                    });
                }
            }
        }
        Ok(())
    }

    /// Subgraph induced on `vertices`; vertex `k` of the result is `vertices[k]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> ReflexiveGraph {
        let mut g = ReflexiveGraph::new(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.adjacent(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Categorical product; vertex `(a, b)` has index `a * other.len() + b`.
    pub fn product(&self, other: &ReflexiveGraph) -> ReflexiveGraph {
        let m = other.len();
        let mut g = ReflexiveGraph::new(self.len() * m);
        for a in 0..self.len() {
            for b in 0..m {
                for a2 in self.adj[a].ones() {
                    for b2 in other.adj[b].ones() {
                        g.add_edge(a * m + b, a2 * m + b2);
                    }
                }
            }
        }
        g
    }

    /// Renames vertex `v` to `new_index[v]`.
    pub fn relabeled(&self, new_index: &[usize]) -> ReflexiveGraph {
        let mut g = ReflexiveGraph::new(self.len());
        for (u, v) in self.edges() {
            g.add_edge(new_index[u], new_index[v]);
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_small_graphs() {
        let g = ReflexiveGraph::from_edges(1, []).unwrap();
        assert!(g.adjacent(0, 0));
        assert_eq!(g.edge_count(), 0);

        let g = ReflexiveGraph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(g, ReflexiveGraph::complete(2));

        let g = ReflexiveGraph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(g, ReflexiveGraph::star(4));
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(3), 1);
    }

    #[test]
    fn out_of_range_endpoint() {
        assert_eq!(
            ReflexiveGraph::from_edges(2, [(0, 5)]),
            Err(GraphError::VertexOutOfRange { vertex: 5, n: 2 })
        );
    }

    #[test]
    fn r_thin_classes_examples() {
        assert_eq!(ReflexiveGraph::complete(3).r_thin_classes(), vec![vec![0, 1, 2]]);
        let star = ReflexiveGraph::star(4);
        assert_eq!(star.r_thin_classes().len(), 5);
        assert!(star.is_r_thin());
        assert!(ReflexiveGraph::path(3).is_r_thin());
    }

    #[test]
    fn r_thin_reduction_examples() {
        let (q, map) = ReflexiveGraph::complete(3).r_thin_reduction();
        assert_eq!(q, ReflexiveGraph::new(1));
        assert_eq!(map, vec![0, 0, 0]);

        let p = ReflexiveGraph::path(4);
        let (q, map) = p.r_thin_reduction();
        assert_eq!(q, p);
        assert_eq!(map, vec![0, 1, 2, 3]);

        let two = ReflexiveGraph::new(2);
        assert_eq!(two.r_thin_reduction().0, two);
    }

    #[test]
    fn reduction_is_idempotent_on_a_fat_path() {
        // 0,1 twins; 2; 3,4 twins
        let g = ReflexiveGraph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let (q, _) = g.r_thin_reduction();
        assert_eq!(q, ReflexiveGraph::path(3));
        assert_eq!(q.r_thin_reduction().0, q);
    }

    #[test]
    fn layers() {
        let p = ReflexiveGraph::path(3);
        assert_eq!(p.distance_layers(2).layers, vec![vec![2], vec![1], vec![0]]);
        let k = ReflexiveGraph::complete(4);
        assert_eq!(k.distance_layers(1).layers, vec![vec![1], vec![0, 2, 3]]);
        let d = ReflexiveGraph::new(2).distance_layers(0);
        assert_eq!(d.layers, vec![vec![0]]);
        assert_eq!(d.unreachable, vec![1]);
    }

    #[test]
    fn components_examples() {
        assert_eq!(ReflexiveGraph::path(4).components().len(), 1);
        assert_eq!(ReflexiveGraph::new(3).components().len(), 3);
        let g = ReflexiveGraph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn min_max_examples() {
        let natural = VertexLabeling::natural(3);
        assert!(ReflexiveGraph::path(3).check_min_max_form(&natural).is_ok());
        let g = ReflexiveGraph::from_edges(3, [(0, 2), (1, 2)]).unwrap();
        assert_eq!(
            g.check_min_max_form(&natural),
            Err(MinMaxViolation {
                outer_low: 0,
                low: 0,
                high: 1,
                outer_high: 2
            })
        );
        let order = VertexLabeling::new(vec![2, 0, 3, 1]).unwrap();
        assert!(ReflexiveGraph::complete(4).check_min_max_form(&order).is_ok());
        // same graph relabelled 0-2-1 is a path in the order 0,2,1
        let relabel = VertexLabeling::new(vec![0, 2, 1]).unwrap();
        assert!(g.check_min_max_form(&relabel).is_ok());
    }

    #[test]
    fn labeling_must_be_a_permutation() {
        assert!(VertexLabeling::new(vec![0, 0, 1]).is_err());
        assert!(VertexLabeling::new(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn product_of_paths_is_king_grid() {
        let g = ReflexiveGraph::path(3).product(&ReflexiveGraph::path(3));
        assert_eq!(g.len(), 9);
        // centre is adjacent to everything
        assert_eq!(g.degree(4), 8);
        // corners (0,0) and (2,2) are not adjacent
        assert!(!g.adjacent(0, 8));
        assert_eq!(g.edge_count(), 20);
    }

    /// Brute-force check of the min-max identity over all quadruples.
    fn min_max_brute(g: &ReflexiveGraph, order: &[usize]) -> Option<[usize; 4]> {
        let n = order.len();
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    for d in c..n {
                        if g.adjacent(order[a], order[d]) && !g.adjacent(order[b], order[c]) {
                            return Some([order[a], order[b], order[c], order[d]]);
                        }
                    }
                }
            }
        }
        None
    }

    proptest::proptest! {
        #[test]
        fn min_max_matches_brute_force(n in 1usize..7, bits in proptest::num::u32::ANY) {
            let mut g = ReflexiveGraph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits >> k & 1 == 1 {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            let natural = VertexLabeling::natural(n);
            let fast = g.check_min_max_form(&natural).err().map(|w| [w.outer_low, w.low, w.high, w.outer_high]);
            proptest::prop_assert_eq!(fast, min_max_brute(&g, natural.order()));
            let (q, _) = g.r_thin_reduction();
            proptest::prop_assert!(q.is_r_thin());
            proptest::prop_assert_eq!(q.r_thin_reduction().0, q.clone());
        }
    }
}
