//! The Hecke group algebra `HW` of a finite Coxeter group, generated on
//! `kW` by right multiplications and the 0-Hecke sorting operators.

mod algebra;
mod modules;
mod relations;
mod variants;

pub use algebra::{
    disjoint_descent_pair_count, pair_count_from_sizes, symmetric_descent_class_sizes, symmetric_pair_count,
    BasisElement, CommonDescent, HeckeGroupAlgebra,
};
pub use modules::{MatrixUnit, PreorderGraph, Projective, Simple};
pub use relations::{multiplication_table, render_combination, RelationCheck};
pub use variants::{variant_generators, variant_monoid, MonoidVariant};
