//! Sparse exact linear algebra over any [`Scalar`](crate::Scalar).

mod closure;
mod matrix;
mod module;
mod solve;
mod subspace;
mod vector;

pub use closure::{monoid_closure, operator_monoid, OperatorAlgebra, Transformation};
pub use matrix::SparseMatrix;
pub use module::{hom_space, hom_space_dim, module_induce, ModulePresentation};
pub use solve::{check_closed, commutant, radical, radical_dim, solve_constraints};
pub use subspace::{common_kernel, invert, rank, solve_in_basis, SubspaceBasis};
pub use vector::SparseVec;
