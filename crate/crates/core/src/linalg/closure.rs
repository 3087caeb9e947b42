use std::collections::HashSet;
use std::hash::Hash;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::matrix::SparseMatrix;
use crate::linalg::subspace::SubspaceBasis;
use crate::linalg::vector::SparseVec;
use crate::scalar::Scalar;

/// The span of all products of a set of `n x n` operators, stored as
/// flattened matrices in reduced echelon form.
#[derive(Clone, Debug)]
pub struct OperatorAlgebra<F> {
    n: usize,
    generators: Vec<SparseMatrix<F>>,
    span: SubspaceBasis<F>,
}

impl<F: Scalar> OperatorAlgebra<F> {
    /// Closes the span of `generators` (and the identity, if asked) under
    /// right multiplication by generators. Products of each frontier are
    /// computed in parallel and inserted in a fixed order, so the result is
    /// independent of thread scheduling.
    pub fn closure(n: usize, generators: &[SparseMatrix<F>], include_identity: bool) -> Result<Self> {
        for g in generators {
            if g.nrows() != n || g.ncols() != n {
                return Err(Error::DimensionMismatch { expected: n, found: g.nrows().max(g.ncols()) });
            }
        }
        let mut span = SubspaceBasis::new(n * n);
        let seeds: Vec<SparseMatrix<F>> =
            if include_identity { vec![SparseMatrix::identity(n)] } else { generators.to_vec() };
        let mut frontier = Vec::new();
        for s in seeds {
            if span.span_insert(&s.flatten())? {
                frontier.push(s);
            }
        }
        while !frontier.is_empty() {
            let products: Vec<SparseMatrix<F>> =
                frontier.par_iter().flat_map_iter(|b| generators.iter().map(move |g| b.mul(g))).collect();
            frontier = Vec::new();
            for p in products {
                if span.span_insert(&p.flatten())? {
                    frontier.push(p);
                }
            }
        }
        Ok(OperatorAlgebra { n, generators: generators.to_vec(), span })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn generators(&self) -> &[SparseMatrix<F>] {
        &self.generators
    }

    pub fn span(&self) -> &SubspaceBasis<F> {
        &self.span
    }

    /// Basis elements (reduced echelon rows) as operators.
    pub fn basis(&self) -> Vec<SparseMatrix<F>> {
        self.span.rows().map(|r| SparseMatrix::unflatten(self.n, self.n, r)).collect()
    }

    pub fn contains(&self, op: &SparseMatrix<F>) -> bool {
        self.span.contains(&op.flatten())
    }

    pub fn coordinates(&self, op: &SparseMatrix<F>) -> Option<SparseVec<F>> {
        self.span.coordinates(&op.flatten()).map(|c| SparseVec::from_dense(&c))
    }
}

/// Breadth-first closure of a monoid under right multiplication by
/// generators. Elements are returned in discovery order.
pub fn monoid_closure<T, M>(generators: &[T], identity: T, mul: M, limit: Option<usize>) -> Result<Vec<T>>
where
    T: Clone + Eq + Hash + Send + Sync,
    M: Fn(&T, &T) -> T + Sync,
{
    let mut seen: HashSet<T> = HashSet::new();
    let mut elements = vec![identity.clone()];
    seen.insert(identity);
    let mut start = 0;
    while start < elements.len() {
        let end = elements.len();
        let products: Vec<T> =
            elements[start..end].par_iter().flat_map_iter(|x| generators.iter().map(|g| mul(x, g))).collect();
        for p in products {
            if seen.insert(p.clone()) {
                elements.push(p);
                if limit.is_some_and(|l| elements.len() > l) {
                    return Err(Error::Precondition(format!("monoid exceeds {} elements", limit.unwrap_or(0))));
                }
            }
        }
        start = end;
    }
    Ok(elements)
}

/// A map on `{0..n}` acting on the right: `x.then(y)` applies `x` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation(pub Vec<u32>);

impl Transformation {
    pub fn identity(n: usize) -> Self {
        Transformation((0..n as u32).collect())
    }

    pub fn then(&self, other: &Self) -> Self {
        Transformation(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn image_size(&self) -> usize {
        self.0.iter().collect::<HashSet<_>>().len()
    }

    pub fn to_matrix<F: Scalar>(&self) -> SparseMatrix<F> {
        SparseMatrix::from_map(self.0.len(), |i| Some(self.0[i] as usize))
    }
}

/// Monoid generated by arbitrary operators (the identity included).
pub fn operator_monoid<F: Scalar + Hash + Eq>(
    n: usize,
    generators: &[SparseMatrix<F>],
    limit: Option<usize>,
) -> Result<Vec<SparseMatrix<F>>> {
    monoid_closure(generators, SparseMatrix::identity(n), |a, b| a.mul(b), limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn symmetric_group_algebra_on_three_points() {
        let s1 = SparseMatrix::<Rational>::from_map(3, |i| Some([1, 0, 2][i]));
        let s2 = SparseMatrix::<Rational>::from_map(3, |i| Some([0, 2, 1][i]));
        // the permutation representation of S_3 is 1 + 2-dim standard: 1 + 4 = 5
        let a = OperatorAlgebra::closure(3, &[s1.clone(), s2.clone()], true).unwrap();
        assert_eq!(a.dim(), 5);
        let m = operator_monoid(3, &[s1, s2], None).unwrap();
        assert_eq!(m.len(), 6);
    }

    #[test]
    fn transformation_monoid_limit() {
        let g = vec![Transformation(vec![1, 0, 2]), Transformation(vec![1, 2, 0]), Transformation(vec![0, 0, 2])];
        let all = monoid_closure(&g, Transformation::identity(3), Transformation::then, None).unwrap();
        assert_eq!(all.len(), 27);
        assert!(monoid_closure(&g, Transformation::identity(3), Transformation::then, Some(10)).is_err());
    }
}
