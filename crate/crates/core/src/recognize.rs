//! Recognition of DL-graphs.
//!
//! For an R-thin connected graph the skeleton `S` (the graph minus its
//! dispensable edges) is oriented layer by layer from a candidate top
//! element; when every skeleton edge gets a direction and the transitive
//! closure is a lattice with the candidate bottom, the lattice is verified
//! and returned. Trying all `(0, 1)` candidates decides the graph.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use fixedbitset::FixedBitSet;

use crate::compat::is_compatible;
use crate::error::{LatticeError, OrderError, RecognizeError};
use crate::graph::ReflexiveGraph;
use crate::oracle::{oracle_recognize, OracleOptions, MAX_ORACLE_VERTICES};
use crate::order::{Lattice, Poset};

/// The graph with its dispensable edges removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    /// Dispensable edges `(x, y)`, `x < y`, lexicographically sorted.
    pub dispensable: Vec<(usize, usize)>,
    pub graph: ReflexiveGraph,
}

fn strict_subset(a: &FixedBitSet, b: &FixedBitSet) -> bool {
    a.is_subset(b) && a != b
}

fn is_dispensable(g: &ReflexiveGraph, x: usize, y: usize) -> bool {
    let (nx, ny) = (g.neighborhood(x), g.neighborhood(y));
    let mut nxy = nx.clone();
    nxy.intersect_with(ny);
    (0..g.len()).any(|z| {
        let nz = g.neighborhood(z);
        if strict_subset(nx, nz) && strict_subset(nz, ny) || strict_subset(ny, nz) && strict_subset(nz, nx) {
            return true;
        }
        let mut nxz = nx.clone();
        nxz.intersect_with(nz);
        let mut nyz = ny.clone();
        nyz.intersect_with(nz);
        strict_subset(&nxy, &nxz) && strict_subset(&nxy, &nyz)
    })
}

/// Finds the dispensable edges and the skeleton `S` (loops kept).
pub fn dispensable_edges(graph: &ReflexiveGraph) -> Skeleton {
    let dispensable: Vec<(usize, usize)> = graph.edges().filter(|&(x, y)| is_dispensable(graph, x, y)).collect();
    let mut skeleton = graph.clone();
    for &(x, y) in &dispensable {
        skeleton.remove_edge(x, y);
    }
    Skeleton {
        dispensable,
        graph: skeleton,
    }
}

/// Direction of a skeleton edge `(u, v)` with `u < v`. An arc `u → v`
/// means `v` lies below `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeState {
    Unoriented,
    /// `u → v`.
    Forward,
    /// `v → u`.
    Backward,
    Conflict,
}

/// Directions assigned to the non-loop edges of a skeleton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialOrientation {
    n: usize,
    edges: Vec<(usize, usize)>,
    states: Vec<EdgeState>,
}

impl PartialOrientation {
    fn new(skeleton: &ReflexiveGraph) -> Self {
        let edges: Vec<_> = skeleton.edges().collect();
        let states = vec![EdgeState::Unoriented; edges.len()];
        Self {
            n: skeleton.len(),
            edges,
            states,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Skeleton edges `(u, v)`, `u < v`, with their states.
    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), EdgeState)> + '_ {
        self.edges.iter().copied().zip(self.states.iter().copied())
    }

    pub fn state(&self, u: usize, v: usize) -> Option<EdgeState> {
        let key = (u.min(v), u.max(v));
        let k = self.edges.binary_search(&key).ok()?;
        Some(self.states[k])
    }

    /// Whether the arc `from → to` has been set without conflict.
    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        match self.state(from, to) {
            Some(EdgeState::Forward) => from < to,
            Some(EdgeState::Backward) => from > to,
            _ => false,
        }
    }

    /// Oriented arcs `(from, to)`.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges().filter_map(|((u, v), s)| match s {
            EdgeState::Forward => Some((u, v)),
            EdgeState::Backward => Some((v, u)),
            _ => None,
        })
    }

    pub fn is_complete(&self) -> bool {
        self.states
            .iter()
            .all(|s| matches!(s, EdgeState::Forward | EdgeState::Backward))
    }

    fn set(&mut self, from: usize, to: usize) {
        let key = (from.min(to), from.max(to));
        let k = self.edges.binary_search(&key).expect("skeleton edge");
        let wanted = if from < to { EdgeState::Forward } else { EdgeState::Backward };
        self.states[k] = match self.states[k] {
            EdgeState::Unoriented => wanted,
            s if s == wanted => s,
            _ => EdgeState::Conflict,
        };
    }
}

/// Orients the skeleton from `one` towards `zero`.
///
/// Round `j` handles the skeleton edges meeting the BFS layer `N_j` of
/// `one`: edges from `N_{j-1}` point down into `N_j`, and an edge `uv`
/// inside `N_j` gets `u → v` when
///
/// - some `u' ∈ N(u) ∖ N(v)` in layers `< j` reaches every vertex of
///   `N(v)` in layers `< j` by a directed path,
/// - some `v' ∈ N(v) ∖ N(u)` in layers `< j` is reached that way from
///   every vertex of `N(u)` in layers `< j`, or
/// - `N(v) ∖ N(u)` is non-empty and misses `N_{j-1}`.
///
/// Paths only use arcs between layers `< j`, all of which were set in
/// earlier rounds. If both directions qualify the edge is marked as a
/// conflict.
pub fn orient_skeleton(graph: &ReflexiveGraph, skeleton: &ReflexiveGraph, one: usize, zero: usize) -> PartialOrientation {
    let n = graph.len();
    let mut orientation = PartialOrientation::new(skeleton);
    let dist = graph.distances(one);
    let Some(depth) = dist[zero] else {
        return orientation;
    };
    let layer = |v: usize| dist[v].unwrap_or(usize::MAX);
    for j in 1..=depth {
        let mut below = FixedBitSet::with_capacity(n);
        for v in (0..n).filter(|&v| layer(v) < j) {
            below.insert(v);
        }
        let reach = strict_reachability(&orientation, &below);
        let edges: Vec<(usize, usize)> = orientation.edges.clone();
        let mut decisions = Vec::new();
        for (u, v) in edges {
            let (lu, lv) = (layer(u), layer(v));
            if lu == j - 1 && lv == j {
                decisions.push((u, v));
            } else if lv == j - 1 && lu == j {
                decisions.push((v, u));
            } else if lu == j && lv == j {
                if points_down(graph, &below, &reach, &dist, j, u, v) {
                    decisions.push((u, v));
                }
                if points_down(graph, &below, &reach, &dist, j, v, u) {
                    decisions.push((v, u));
                }
            }
        }
        for (from, to) in decisions {
            orientation.set(from, to);
        }
    }
    orientation
}

/// `reach[a]` holds the vertices reachable from `a` by a non-empty directed
/// path inside `within`.
fn strict_reachability(orientation: &PartialOrientation, within: &FixedBitSet) -> Vec<FixedBitSet> {
    let n = orientation.n;
    let mut succ = vec![Vec::new(); n];
    for (a, b) in orientation.arcs() {
        if within.contains(a) && within.contains(b) {
            succ[a].push(b);
        }
    }
    (0..n)
        .map(|start| {
            let mut seen = FixedBitSet::with_capacity(n);
            let mut stack: Vec<usize> = succ[start].clone();
            while let Some(x) = stack.pop() {
                if !seen.put(x) {
                    stack.extend(succ[x].iter().copied());
                }
            }
            seen
        })
        .collect()
}

fn points_down(
    graph: &ReflexiveGraph,
    below: &FixedBitSet,
    reach: &[FixedBitSet],
    dist: &[Option<usize>],
    j: usize,
    u: usize,
    v: usize,
) -> bool {
    let (nu, nv) = (graph.neighborhood(u), graph.neighborhood(v));
    let mut nu_below = nu.clone();
    nu_below.intersect_with(below);
    let mut nv_below = nv.clone();
    nv_below.intersect_with(below);

    let rule_a = nu_below
        .ones()
        .filter(|&a| !nv.contains(a))
        .any(|a| nv_below.is_subset(&reach[a]));
    let rule_b = || {
        nv_below
            .ones()
            .filter(|&b| !nu.contains(b))
            .any(|b| nu_below.ones().all(|a| reach[a].contains(b)))
    };
    let rule_c = || {
        let mut private = nv.ones().filter(|&w| !nu.contains(w)).peekable();
        private.peek().is_some() && private.all(|w| dist[w].is_none_or(|d| d >= j))
    };
    rule_a || rule_b() || rule_c()
}

/// Why an orientation does not describe a lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrientationFailure {
    Unoriented { u: usize, v: usize },
    Conflict { u: usize, v: usize },
    Cycle { a: usize, b: usize },
    NotALattice { x: usize, y: usize },
    WrongBounds,
}

impl fmt::Display for OrientationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Unoriented { u, v } => write!(f, "skeleton edge {u}-{v} is unoriented"),
            Self::Conflict { u, v } => write!(f, "skeleton edge {u}-{v} received both directions"),
            Self::Cycle { a, b } => write!(f, "orientation has a directed cycle through {a} and {b}"),
            Self::NotALattice { x, y } => write!(f, "{x} and {y} have no meet or join"),
            Self::WrongBounds => write!(f, "the chosen 0 and 1 are not the bounds of the order"),
        }
    }
}

/// Transitive closure of a complete orientation as a lattice with the
/// given bounds.
pub fn lattice_from_orientation(
    orientation: &PartialOrientation,
    zero: usize,
    one: usize,
) -> Result<Lattice, OrientationFailure> {
    let mut covers = Vec::new();
    for ((u, v), s) in orientation.edges() {
        match s {
            EdgeState::Unoriented => return Err(OrientationFailure::Unoriented { u, v }),
            EdgeState::Conflict => return Err(OrientationFailure::Conflict { u, v }),
            EdgeState::Forward => covers.push((v, u)),
            EdgeState::Backward => covers.push((u, v)),
        }
    }
    let order = Poset::from_covers(orientation.n, &covers).map_err(|e| match e {
        OrderError::Cycle { a, b } => OrientationFailure::Cycle { a, b },
        _ => OrientationFailure::WrongBounds,
    })?;
    Lattice::from_order(order, zero, one).map_err(|e| match e {
        LatticeError::NotALattice { x, y, .. } => OrientationFailure::NotALattice { x, y },
        _ => OrientationFailure::WrongBounds,
    })
}

/// Why a graph has no compatible distributive lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoReason {
    EmptyGraph,
    /// More than two vertices of degree one; only `0` and `1` may have it.
    TooManyLeaves { leaves: Vec<usize> },
    /// No choice of `0` and `1` produced a verified lattice.
    NoCandidate,
    /// The R-thin reduction of a component is already rejected.
    Reduction(Box<NoReason>),
    /// The brute-force search found nothing for a small component.
    OracleEmpty,
    Component { component: usize, reason: Box<NoReason> },
}

impl fmt::Display for NoReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyGraph => write!(f, "graph has no vertices"),
            Self::TooManyLeaves { leaves } => write!(f, "{} vertices of degree one: {:?}", leaves.len(), leaves),
            Self::NoCandidate => write!(f, "no choice of 0 and 1 yields a compatible distributive lattice"),
            Self::Reduction(r) => write!(f, "R-thin reduction rejected: {r}"),
            Self::OracleEmpty => write!(f, "exhaustive search found no compatible distributive lattice"),
            Self::Component { component, reason } => write!(f, "component {component}: {reason}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InconclusiveReason {
    /// The R-thin reduction of this component is a DL-graph, which does not
    /// settle the component itself, and it is too big for the oracle.
    ReductionAccepted { component: usize, size: usize },
}

impl fmt::Display for InconclusiveReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ReductionAccepted { component, size } => write!(
                f,
                "component {component} ({size} vertices) is not R-thin and its reduction is a DL-graph"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecognitionResult {
    Yes(Lattice),
    No(NoReason),
    Inconclusive(InconclusiveReason),
}

impl RecognitionResult {
    pub fn is_yes(&self) -> bool {
        matches!(self, Self::Yes(_))
    }

    pub fn lattice(&self) -> Option<&Lattice> {
        match self {
            Self::Yes(l) => Some(l),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecognizeOptions {
    /// Restrict `(0, 1)` to plausible candidates. Never changes the verdict.
    pub prune_candidates: bool,
    /// Non-R-thin components up to this size are settled by brute force.
    pub oracle_fallback_max: usize,
}

impl Default for RecognizeOptions {
    fn default() -> Self {
        Self {
            prune_candidates: true,
            oracle_fallback_max: MAX_ORACLE_VERTICES,
        }
    }
}

/// Candidate `(zero, one)` pairs in lexicographic order, or the leaves that
/// rule out every pair.
pub fn candidate_pairs(graph: &ReflexiveGraph, skeleton: &ReflexiveGraph, prune: bool) -> Result<Vec<(usize, usize)>, Vec<usize>> {
    let n = graph.len();
    let mut allowed: Vec<bool> = vec![true; n];
    let mut leaves = Vec::new();
    if prune {
        leaves = (0..n).filter(|&v| graph.degree(v) == 1).collect();
        if leaves.len() > 2 {
            return Err(leaves);
        }
        for (v, ok) in allowed.iter_mut().enumerate() {
            *ok = skeleton.degree(v) > 0;
        }
    }
    let mut pairs = Vec::new();
    for zero in 0..n {
        for one in 0..n {
            if zero == one || !allowed[zero] || !allowed[one] {
                continue;
            }
            if leaves.iter().any(|&l| l != zero && l != one) {
                continue;
            }
            pairs.push((zero, one));
        }
    }
    Ok(pairs)
}

/// Runs the orientation for one `(zero, one)` and returns the lattice if it
/// is distributive and compatible with `graph`.
pub fn try_candidate(graph: &ReflexiveGraph, skeleton: &ReflexiveGraph, zero: usize, one: usize) -> Option<Lattice> {
    let orientation = orient_skeleton(graph, skeleton, one, zero);
    let lattice = lattice_from_orientation(&orientation, zero, one).ok()?;
    (lattice.is_distributive() && is_compatible(graph, &lattice)).then_some(lattice)
}

fn check_input(graph: &ReflexiveGraph) -> Result<(), RecognizeError> {
    if graph.is_empty() {
        return Err(RecognizeError::Empty);
    }
    if !graph.is_connected() {
        return Err(RecognizeError::Disconnected);
    }
    if let Some(class) = graph.r_thin_classes().into_iter().find(|c| c.len() > 1) {
        return Err(RecognizeError::NotRThin { u: class[0], v: class[1] });
    }
    Ok(())
}

/// Decides whether a connected R-thin graph is a DL-graph.
pub fn recognize_dl(graph: &ReflexiveGraph, options: RecognizeOptions) -> Result<RecognitionResult, RecognizeError> {
    check_input(graph)?;
    if graph.len() == 1 {
        return Ok(RecognitionResult::Yes(Lattice::chain(1)));
    }
    let skeleton = dispensable_edges(graph).graph;
    let pairs = match candidate_pairs(graph, &skeleton, options.prune_candidates) {
        Ok(p) => p,
        Err(leaves) => return Ok(RecognitionResult::No(NoReason::TooManyLeaves { leaves })),
    };
    for (zero, one) in pairs {
        if let Some(l) = try_candidate(graph, &skeleton, zero, one) {
            return Ok(RecognitionResult::Yes(l));
        }
    }
    Ok(RecognitionResult::No(NoReason::NoCandidate))
}

/// Decides an arbitrary reflexive graph component by component.
///
/// R-thin components go through [`recognize_dl`]. Any other component is
/// rejected when its R-thin reduction is; otherwise it is settled by the
/// oracle if small enough and left inconclusive if not. When every
/// component is accepted the answer is the simple join of their lattices.
pub fn recognize_driver(graph: &ReflexiveGraph, options: RecognizeOptions) -> RecognitionResult {
    recognize_components(graph, options, |g| recognize_dl(g, options).expect("connected R-thin component"))
}

/// [`recognize_driver`] with a caller-supplied decision procedure for the
/// connected R-thin pieces.
pub fn recognize_components<F>(graph: &ReflexiveGraph, options: RecognizeOptions, mut decide: F) -> RecognitionResult
where
    F: FnMut(&ReflexiveGraph) -> RecognitionResult,
{
    if graph.is_empty() {
        return RecognitionResult::No(NoReason::EmptyGraph);
    }
    let components = graph.components();
    let mut lattices = Vec::with_capacity(components.len());
    let mut inconclusive = None;
    for (c, vertices) in components.iter().enumerate() {
        let sub = graph.induced_subgraph(vertices);
        let verdict = if sub.is_r_thin() {
            decide(&sub)
        } else {
            let (reduced, _) = sub.r_thin_reduction();
            match decide(&reduced) {
                RecognitionResult::No(r) => RecognitionResult::No(NoReason::Reduction(Box::new(r))),
                _ if sub.len() <= options.oracle_fallback_max.min(MAX_ORACLE_VERTICES) => {
                    let found = oracle_recognize(&sub, OracleOptions::default()).expect("size checked");
                    match found.into_iter().next() {
                        Some(l) => RecognitionResult::Yes(l),
                        None => RecognitionResult::No(NoReason::OracleEmpty),
                    }
                }
                _ => RecognitionResult::Inconclusive(InconclusiveReason::ReductionAccepted {
                    component: c,
                    size: sub.len(),
                }),
            }
        };
        match verdict {
            RecognitionResult::Yes(l) => lattices.push(l),
            RecognitionResult::No(reason) => {
                return RecognitionResult::No(if components.len() == 1 {
                    reason
                } else {
                    NoReason::Component {
                        component: c,
                        reason: Box::new(reason),
                    }
                })
            }
            RecognitionResult::Inconclusive(r) => {
                inconclusive.get_or_insert(r);
            }
        }
    }
    if let Some(r) = inconclusive {
        return RecognitionResult::Inconclusive(r);
    }
    let joined = Lattice::simple_join(&lattices).expect("at least one component");
    // block k of the join lists the vertices of component k in order
    let new_index: Vec<usize> = components.iter().flatten().copied().collect();
    RecognitionResult::Yes(joined.relabeled(&new_index))
}
