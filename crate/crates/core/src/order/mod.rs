//! Posets, downsets, lattices and chain covers.

mod chain;
mod downset;
mod lattice;
mod poset;

pub use chain::ChainCover;
pub use downset::{
    downset_index, enumerate_downsets, principal_downset, Downset, MAX_DOWNSET_ELEMENTS,
};
pub(crate) use downset::{mask_of, BitIter};
pub use lattice::{Birkhoff, DownsetLattice, Lattice};
pub use poset::Poset;
