//! Embeddings of `(G(P, A), D(P))` into products of proper interval graphs.
//!
//! A chain cover `C_1, …, C_d` of `P` sends a downset `D` to the tuple
//! `x_i = |D ∩ C_i|`. The graph is then the product of the factor graphs
//! `G(C_i, A|C_i)` restricted to the image, minus a family of edge blocks
//! coming from missing arcs that no chain sees.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::OrderError;
use crate::gpa::{construct_gpa, normalize_arcs, reduced_complement, ArcSet};
use crate::graph::ReflexiveGraph;
use crate::order::{enumerate_downsets, ChainCover, Downset, Poset};

/// The product of chains `0..=n_1 × … × 0..=n_d` with the componentwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainProduct {
    sizes: Vec<usize>,
}

impl ChainProduct {
    pub fn new(sizes: Vec<usize>) -> Self {
        Self { sizes }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn dimension(&self) -> usize {
        self.sizes.len()
    }

    /// Number of tuples.
    pub fn len(&self) -> usize {
        self.sizes.iter().map(|&n| n + 1).product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Mixed-radix index; the first coordinate is the most significant.
    pub fn index_of(&self, x: &[usize]) -> usize {
        x.iter().zip(&self.sizes).fold(0, |acc, (&xi, &n)| acc * (n + 1) + xi)
    }

    pub fn tuple_of(&self, mut index: usize) -> Vec<usize> {
        let mut x = vec![0; self.sizes.len()];
        for (xi, &n) in x.iter_mut().zip(&self.sizes).rev() {
            *xi = index % (n + 1);
            index /= n + 1;
        }
        x
    }

    /// All tuples in index order.
    pub fn vertices(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.len()).map(|k| self.tuple_of(k))
    }

    pub fn leq(x: &[usize], y: &[usize]) -> bool {
        x.iter().zip(y).all(|(a, b)| a <= b)
    }
}

/// `V[α,i;β,j] = {x : x_i ≥ α and x_j ≤ β}`. Chain indices are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexInterval {
    pub alpha: usize,
    pub i: usize,
    pub beta: usize,
    pub j: usize,
}

impl VertexInterval {
    pub fn contains(&self, x: &[usize]) -> bool {
        x[self.i] >= self.alpha && x[self.j] <= self.beta
    }

    /// True when no tuple of `product` lies in the interval.
    pub fn is_empty_in(&self, product: &ChainProduct) -> bool {
        (self.i == self.j && self.alpha > self.beta) || self.alpha > product.sizes[self.i]
    }
}

/// `E[α,i;β,j]`: pairs `{x, y}` with `x_i ≥ α` and `y_j ≤ β`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeBlock {
    pub alpha: usize,
    pub i: usize,
    pub beta: usize,
    pub j: usize,
}

impl EdgeBlock {
    pub fn contains(&self, x: &[usize], y: &[usize]) -> bool {
        let hit = |a: &[usize], b: &[usize]| a[self.i] >= self.alpha && b[self.j] <= self.beta;
        hit(x, y) || hit(y, x)
    }
}

/// A lattice embedding of `D(P)` into a product of chains together with the
/// factor graphs and removed regions describing `G(P, A)` inside it.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub cover: ChainCover,
    pub product: ChainProduct,
    /// Vertex `k` of `G(P, A)` is `downsets[k]`.
    pub downsets: Vec<Downset>,
    pub coords: Vec<Vec<usize>>,
    pub factors: Vec<ReflexiveGraph>,
    pub removed_vertices: Vec<VertexInterval>,
    pub removed_edges: Vec<EdgeBlock>,
    pub tight: bool,
    pub induced: bool,
    pub nontight_cover_count: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EmbedOptions {
    /// Drop vertex intervals that contain no tuple.
    pub omit_empty: bool,
}

/// `x_i = |D ∩ C_i|` for each downset.
pub fn embed_coordinates(cover: &ChainCover, downsets: &[Downset]) -> Vec<Vec<usize>> {
    downsets
        .iter()
        .map(|d| {
            cover
                .chains()
                .iter()
                .map(|c| c.iter().filter(|&&x| d.contains(x)).count())
                .collect()
        })
        .collect()
}

/// `G(C_i, A|C_i)` for each chain; vertex `p` is the prefix of length `p`.
pub fn factor_graphs(arcs: &ArcSet, cover: &ChainCover) -> Vec<ReflexiveGraph> {
    cover
        .chains()
        .iter()
        .map(|c| construct_gpa(&Poset::chain(c.len()), &arcs.restrict(c)).expect("chain arcs are comparabilities"))
        .collect()
}

/// Vertex intervals from label comparabilities `c^{β+1}_j ≤ c^α_i` and edge
/// blocks from the reduced complement of `arcs`.
pub fn removed_regions(
    poset: &Poset,
    arcs: &ArcSet,
    cover: &ChainCover,
    options: EmbedOptions,
) -> (Vec<VertexInterval>, Vec<EdgeBlock>) {
    let product = ChainProduct::new(cover.sizes());
    let chains = cover.chains();
    let mut vertices = Vec::new();
    for (i, ci) in chains.iter().enumerate() {
        for (a, &x) in ci.iter().enumerate() {
            for (j, cj) in chains.iter().enumerate() {
                for (b, &y) in cj.iter().enumerate() {
                    if poset.leq(y, x) {
                        let v = VertexInterval {
                            alpha: a + 1,
                            i,
                            beta: b,
                            j,
                        };
                        if !options.omit_empty || !v.is_empty_in(&product) {
                            vertices.push(v);
                        }
                    }
                }
            }
        }
    }
    let mut edges = Vec::new();
    for (y, x) in reduced_complement(poset, arcs).iter() {
        for (i, alpha) in cover.labels_of(x) {
            for (j, b) in cover.labels_of(y) {
                edges.push(EdgeBlock {
                    alpha,
                    i,
                    beta: b - 1,
                    j,
                });
            }
        }
    }
    vertices.sort_unstable();
    vertices.dedup();
    edges.sort_unstable();
    edges.dedup();
    (vertices, edges)
}

/// Whether every non-loop missing arc of `reduced` lies inside one chain.
pub fn is_induced_embedding(cover: &ChainCover, reduced: &ArcSet) -> bool {
    reduced.non_loop_arcs().all(|(y, x)| {
        cover.chains().iter().any(|c| {
            let py = c.iter().position(|&e| e == y);
            let px = c.iter().position(|&e| e == x);
            matches!((py, px), (Some(a), Some(b)) if a < b)
        })
    })
}

/// One two-element chain per non-loop arc of `reduced`, singletons for the rest.
pub fn induced_cover(poset: &Poset, reduced: &ArcSet) -> Result<ChainCover, OrderError> {
    ChainCover::from_digraph(poset, reduced.non_loop_arcs())
}

/// Whether the cover is a decomposition, and how many lattice covers of
/// `D(P)` move more than one unit step in the product.
pub fn tightness(poset: &Poset, cover: &ChainCover) -> Result<(bool, usize), OrderError> {
    let downsets = enumerate_downsets(poset)?;
    let coords = embed_coordinates(cover, &downsets);
    Ok((cover.is_decomposition(), nontight_covers(&downsets, &coords)))
}

fn nontight_covers(downsets: &[Downset], coords: &[Vec<usize>]) -> usize {
    let mut count = 0;
    for (u, d) in downsets.iter().enumerate() {
        for (v, e) in downsets.iter().enumerate() {
            if d.is_subset(*e) && e.len() == d.len() + 1 {
                let step: usize = coords[u].iter().zip(&coords[v]).map(|(a, b)| b - a).sum();
                if step > 1 {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Builds the embedding of `(G(P, A), D(P))` given by `cover`.
pub fn embed(poset: &Poset, arcs: &ArcSet, cover: &ChainCover, options: EmbedOptions) -> Result<Embedding, OrderError> {
    if let Some((x, y)) = arcs.iter().find(|&(x, y)| !poset.leq(x, y)) {
        return Err(OrderError::NotComparable { x, y });
    }
    let arcs = normalize_arcs(poset, arcs);
    let downsets = enumerate_downsets(poset)?;
    let coords = embed_coordinates(cover, &downsets);
    let factors = factor_graphs(&arcs, cover);
    let (removed_vertices, removed_edges) = removed_regions(poset, &arcs, cover, options);
    let nontight_cover_count = nontight_covers(&downsets, &coords);
    let induced = is_induced_embedding(cover, &reduced_complement(poset, &arcs));
    Ok(Embedding {
        product: ChainProduct::new(cover.sizes()),
        cover: cover.clone(),
        downsets,
        coords,
        factors,
        removed_vertices,
        removed_edges,
        tight: cover.is_decomposition(),
        induced,
        nontight_cover_count,
    })
}

impl Embedding {
    fn factor_adjacent(&self, x: &[usize], y: &[usize]) -> bool {
        self.factors
            .iter()
            .zip(x.iter().zip(y))
            .all(|(f, (&a, &b))| f.adjacent(a, b))
    }

    /// Product-graph vertices outside every removed vertex interval.
    pub fn surviving_vertices(&self) -> Vec<Vec<usize>> {
        self.product
            .vertices()
            .filter(|x| !self.removed_vertices.iter().any(|v| v.contains(x)))
            .collect()
    }

    /// The product of the factors on the image, minus the edge blocks.
    pub fn reconstruct_graph(&self) -> ReflexiveGraph {
        let n = self.coords.len();
        let mut g = ReflexiveGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                let (x, y) = (&self.coords[u], &self.coords[v]);
                if self.factor_adjacent(x, y) && !self.removed_edges.iter().any(|e| e.contains(x, y)) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Whether `graph` equals the product of the factors restricted to the
    /// image, i.e. no edge block removes anything.
    pub fn is_induced_in_product(&self, graph: &ReflexiveGraph) -> bool {
        let n = self.coords.len();
        (0..n).all(|u| (u + 1..n).all(|v| self.factor_adjacent(&self.coords[u], &self.coords[v]) == graph.adjacent(u, v)))
    }
}

/// Twin positions left unmerged because merging broke the embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub factor: usize,
    pub position: usize,
}

#[derive(Clone, Debug)]
pub struct Tightened {
    pub embedding: Embedding,
    /// `(factor, a)` for each applied merge of positions `a` and `a + 1`.
    pub contractions: Vec<(usize, usize)>,
    pub obstructions: Vec<Obstruction>,
}

/// Greedily merges adjacent twin positions `a, a+1` of a factor, keeping
/// each merge only if the result is still an injective lattice embedding
/// whose product graph induces `graph` on the image.
///
/// Afterwards the removed vertex intervals are the maximal ones avoiding
/// the image and the edge blocks are empty.
pub fn tighten_factors(embedding: &Embedding, graph: &ReflexiveGraph) -> Tightened {
    let mut emb = embedding.clone();
    let mut contractions = Vec::new();
    'search: loop {
        for (f, a) in twin_positions(&emb) {
            let candidate = contract(&emb, f, a);
            if embeds(&candidate, graph) {
                emb = candidate;
                contractions.push((f, a));
                continue 'search;
            }
        }
        break;
    }
    let obstructions = twin_positions(&emb)
        .into_iter()
        .map(|(factor, position)| Obstruction { factor, position })
        .collect();
    emb.removed_vertices = maximal_gaps(&emb.product, &emb.coords);
    emb.removed_edges.clear();
    emb.induced = emb.is_induced_in_product(graph);
    emb.nontight_cover_count = nontight_covers(&emb.downsets, &emb.coords);
    emb.tight = emb.nontight_cover_count == 0;
    Tightened {
        embedding: emb,
        contractions,
        obstructions,
    }
}

fn twin_positions(emb: &Embedding) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (f, factor) in emb.factors.iter().enumerate() {
        for a in 0..factor.len().saturating_sub(1) {
            if factor.neighborhood(a) == factor.neighborhood(a + 1) {
                out.push((f, a));
            }
        }
    }
    out
}

fn contract(emb: &Embedding, f: usize, a: usize) -> Embedding {
    let mut out = emb.clone();
    for x in out.coords.iter_mut() {
        if x[f] > a {
            x[f] -= 1;
        }
    }
    let keep: Vec<usize> = (0..emb.factors[f].len()).filter(|&p| p != a + 1).collect();
    out.factors[f] = emb.factors[f].induced_subgraph(&keep);
    let mut sizes = emb.product.sizes.clone();
    sizes[f] -= 1;
    out.product = ChainProduct::new(sizes);
    out
}

fn embeds(emb: &Embedding, graph: &ReflexiveGraph) -> bool {
    let n = emb.coords.len();
    let mut seen: Vec<&Vec<usize>> = emb.coords.iter().collect();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != n {
        return false;
    }
    for u in 0..n {
        for v in 0..n {
            let meet = emb.downsets[u].intersection(emb.downsets[v]);
            let join = emb.downsets[u].union(emb.downsets[v]);
            let m = emb.downsets.binary_search(&meet).expect("downsets are closed under meet");
            let j = emb.downsets.binary_search(&join).expect("downsets are closed under join");
            let (x, y) = (&emb.coords[u], &emb.coords[v]);
            if (0..x.len()).any(|k| emb.coords[m][k] != x[k].min(y[k]) || emb.coords[j][k] != x[k].max(y[k])) {
                return false;
            }
        }
    }
    emb.is_induced_in_product(graph)
}

/// For each ordered pair of axes, the maximal intervals `V[α,i;β,j]` that
/// contain no image tuple.
fn maximal_gaps(product: &ChainProduct, coords: &[Vec<usize>]) -> Vec<VertexInterval> {
    let mut out = Vec::new();
    let d = product.dimension();
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            let mut previous: Option<usize> = None;
            for alpha in 1..=product.sizes[i] {
                let lowest = coords.iter().filter(|x| x[i] >= alpha).map(|x| x[j]).min();
                let beta = match lowest {
                    Some(0) => None,
                    Some(m) => Some(m - 1),
                    None => Some(product.sizes[j]),
                };
                if let Some(beta) = beta {
                    if previous.is_none_or(|p| beta > p) {
                        out.push(VertexInterval { alpha, i, beta, j });
                    }
                }
                previous = beta.or(previous);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    // a=0, b=1, c=2, d=3
    fn sample() -> (Poset, ArcSet) {
        let p = Poset::from_covers(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
        let mut a = ArcSet::all(&p);
        a.remove(1, 2);
        (p, a)
    }

    fn split_cover(p: &Poset) -> ChainCover {
        ChainCover::new(p, vec![vec![1, 2], vec![0], vec![3]]).unwrap()
    }

    #[test]
    fn product_indexing() {
        let pr = ChainProduct::new(vec![2, 1, 1]);
        assert_eq!(pr.len(), 12);
        for k in 0..12 {
            assert_eq!(pr.index_of(&pr.tuple_of(k)), k);
        }
        assert_eq!(pr.tuple_of(11), vec![2, 1, 1]);
    }

    #[test]
    fn coordinates_of_sample() {
        let (p, _) = sample();
        let ds = enumerate_downsets(&p).unwrap();
        let c = split_cover(&p);
        let x = embed_coordinates(&c, &ds);
        assert_eq!(x[0], vec![0, 0, 0]);
        assert_eq!(x[7], vec![2, 1, 1]);
        let dec = ChainCover::new(&p, vec![vec![0, 2], vec![1, 3]]).unwrap();
        let x = embed_coordinates(&dec, &ds);
        // abc is vertex 5
        assert_eq!(x[5], vec![2, 1]);
        let mut sorted = x.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 8);
    }

    #[test]
    fn split_cover_embedding() {
        let (p, a) = sample();
        let emb = embed(&p, &a, &split_cover(&p), EmbedOptions { omit_empty: true }).unwrap();
        assert_eq!(emb.product.len(), 12);
        assert!(emb.induced && emb.tight);
        assert_eq!(emb.nontight_cover_count, 0);
        assert_eq!(emb.removed_vertices.len(), 2);
        assert_eq!(emb.product.len() - emb.surviving_vertices().len(), 4);
        assert_eq!(emb.factors[0], ReflexiveGraph::path(3));
        assert_eq!(emb.factors[1], ReflexiveGraph::complete(2));
        assert_eq!(emb.reconstruct_graph(), construct_gpa(&p, &a).unwrap());
    }

    #[test]
    fn decomposition_is_not_induced() {
        let (p, a) = sample();
        let dec = ChainCover::new(&p, vec![vec![0, 2], vec![1, 3]]).unwrap();
        let emb = embed(&p, &a, &dec, EmbedOptions { omit_empty: true }).unwrap();
        assert!(!emb.induced);
        assert_eq!(
            emb.removed_vertices,
            vec![VertexInterval {
                alpha: 2,
                i: 0,
                beta: 0,
                j: 1
            }]
        );
        assert_eq!(emb.surviving_vertices().len(), 8);
        assert!(!emb.removed_edges.is_empty());
        let g = construct_gpa(&p, &a).unwrap();
        assert_eq!(emb.reconstruct_graph(), g);
        assert!(!emb.is_induced_in_product(&g));
    }

    #[test]
    fn chain_covered_by_itself() {
        let p = Poset::chain(3);
        let c = ChainCover::new(&p, vec![vec![0, 1, 2]]).unwrap();
        let mut a = ArcSet::loops(3);
        a.insert(0, 1);
        let emb = embed(&p, &a, &c, EmbedOptions { omit_empty: true }).unwrap();
        assert!(emb.removed_vertices.is_empty());
        assert_eq!(emb.coords, vec![vec![0], vec![1], vec![2], vec![3]]);
        assert!(emb.induced);
    }

    #[test]
    fn induced_flag_needs_same_chain_only() {
        let p = Poset::chain(3);
        let c = ChainCover::new(&p, vec![vec![0, 1, 2]]).unwrap();
        let mut a = ArcSet::all(&p);
        a.remove(0, 2);
        let red = reduced_complement(&p, &a);
        assert_eq!(red.iter().collect::<Vec<_>>(), vec![(0, 2)]);
        assert!(is_induced_embedding(&c, &red));
        let emb = embed(&p, &a, &c, EmbedOptions::default()).unwrap();
        assert!(emb.is_induced_in_product(&construct_gpa(&p, &a).unwrap()));
    }

    #[test]
    fn induced_cover_of_sample() {
        let (p, a) = sample();
        let c = induced_cover(&p, &reduced_complement(&p, &a)).unwrap();
        assert_eq!(c.chains(), &[vec![1, 2], vec![0], vec![3]]);
        assert!(is_induced_embedding(&c, &reduced_complement(&p, &a)));
        let c = induced_cover(&p, &ArcSet::empty(4)).unwrap();
        assert_eq!(c.len(), 4);
        let mut red = ArcSet::empty(4);
        red.insert(0, 2);
        red.insert(1, 2);
        let c = induced_cover(&p, &red).unwrap();
        assert!(!c.is_decomposition());
    }

    #[test]
    fn tightness_of_covers() {
        let (p, _) = sample();
        assert_eq!(tightness(&p, &split_cover(&p)).unwrap(), (true, 0));
        let overlapping = ChainCover::new(&p, vec![vec![0, 2], vec![1, 2], vec![1, 3]]).unwrap();
        let (tight, count) = tightness(&p, &overlapping).unwrap();
        assert!(!tight);
        assert!(count > 0);
    }

    #[test]
    fn tightening_merges_complete_factor() {
        // P = 0 < 1 covered by {0,1} and {1}; A = everything, so G = K3
        let p = Poset::chain(2);
        let a = ArcSet::all(&p);
        let c = ChainCover::new(&p, vec![vec![0, 1], vec![1]]).unwrap();
        let emb = embed(&p, &a, &c, EmbedOptions::default()).unwrap();
        let g = construct_gpa(&p, &a).unwrap();
        assert_eq!(emb.factors[0], ReflexiveGraph::complete(3));
        let t = tighten_factors(&emb, &g);
        assert_eq!(t.contractions, vec![(0, 1)]);
        assert!(t.embedding.factors.iter().all(|f| f.len() <= 2));
        assert!(t.embedding.induced);
    }

    #[test]
    fn tightening_leaves_r_thin_factors_alone() {
        let (p, a) = sample();
        let emb = embed(&p, &a, &split_cover(&p), EmbedOptions::default()).unwrap();
        let g = construct_gpa(&p, &a).unwrap();
        let t = tighten_factors(&emb, &g);
        assert!(t.contractions.is_empty());
        assert_eq!(t.embedding.factors, emb.factors);
        assert_eq!(t.embedding.surviving_vertices().len(), 8);
    }
}
