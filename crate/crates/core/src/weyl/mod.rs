//! Weyl group combinatorics for simply-laced types.

mod diagram;
mod group;
mod perm;
mod sequences;
mod word;

pub use diagram::{DynkinDiagram, Kind};
pub use group::{is_negative, Weyl, WeylElement};
pub use perm::Perm;
pub use word::Word;
