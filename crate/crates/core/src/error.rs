use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("labeling is not a permutation of 0..{n}")]
    BadLabeling { n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("element {element} out of range for a poset on {n} elements")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("order relation has a cycle through {a} and {b}")]
    Cycle { a: usize, b: usize },
    #[error("relation is not a partial order at ({a}, {b})")]
    NotAnOrder { a: usize, b: usize },
    #[error("poset has {n} elements; downset operations support at most {max}")]
    TooLarge { n: usize, max: usize },
    #[error("({x}, {y}) is not a strict comparability of the poset")]
    NotComparable { x: usize, y: usize },
    #[error("element {element} is not covered by any chain")]
    Uncovered { element: usize },
}

/// Which bound of a pair is missing or ambiguous.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Meet,
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("{bound:?} of {x} and {y} does not exist")]
    NotALattice { x: usize, y: usize, bound: Bound },
    #[error("{zero} / {one} are not the minimum / maximum of the order")]
    WrongBounds { zero: usize, one: usize },
    #[error("lattice is empty")]
    Empty,
    #[error("lattice is not distributive at ({x}, {y}, {z})")]
    NotDistributive { x: usize, y: usize, z: usize },
    #[error(transparent)]
    Order(#[from] OrderError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompatError {
    #[error("graph has {graph} vertices but lattice has {lattice} elements")]
    SizeMismatch { graph: usize, lattice: usize },
    #[error(
        "edges {u}~{u2} and {v}~{v2} are not preserved by {}",
        if *.meet { "meet" } else { "join" }
    )]
    NotPreserved {
        u: usize,
        u2: usize,
        v: usize,
        v2: usize,
        meet: bool,
    },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("graph is not G(J_L, A) for the extracted arcs: vertices {u} and {v} disagree")]
    RoundTrip { u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle supports at most {max} elements, got {n}")]
    TooLarge { n: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizeError {
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is disconnected; decide each component separately")]
    Disconnected,
    #[error("vertices {u} and {v} have the same neighbourhood; reduce the graph first")]
    NotRThin { u: usize, v: usize },
}
