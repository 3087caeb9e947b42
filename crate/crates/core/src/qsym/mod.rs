//! Compositions, quasi-symmetric and noncommutative symmetric functions,
//! and a minimal layer of symmetric functions.
//!
//! Canonical forms are `F` for QSym and `R` for NCSF; other bases go
//! through per-degree transition matrices indexed by descent sets.

mod basis;
mod composition;
mod sym;

pub use basis::{
    from_canonical_matrix, pairing, quasi_shuffle, ribbon_product, shuffle_product, to_canonical_matrix, Basis,
    Expansion, Tensor,
};
pub use composition::Composition;
pub use sym::{partitions, Partition, SymFunction};
