//! Hecke group algebras of finite Coxeter groups, the 0-Hecke monoid,
//! monoids of non-decreasing (parking) functions, and the
//! quasi-symmetric / noncommutative symmetric function bookkeeping for
//! their representation theory.

pub mod coxeter;
pub mod error;
pub mod hecke;
pub mod linalg;
pub mod nd;
pub mod qsym;
pub mod scalar;
pub mod tower;

pub use error::{Error, Result};
pub use scalar::{ratio, Scalar};

/// Exact rational scalars.
pub type Rational = num_rational::BigRational;
/// Machine-word rationals, for small experiments only.
pub type SmallRational = num_rational::Rational64;
pub type Operator = linalg::SparseMatrix<Rational>;
pub type Vector = linalg::SparseVec<Rational>;
pub type Subspace = linalg::SubspaceBasis<Rational>;
pub type Module = linalg::ModulePresentation<Rational>;
