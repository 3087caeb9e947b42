use crate::error::{Error, Result};
use crate::linalg::vector::{Accumulator, SparseVec};
use crate::scalar::Scalar;

/// Row-sparse matrix. Operators act on row vectors: `v -> v * A`,
/// so row `i` is the image of basis vector `i` and `A * B` means
/// "apply `A`, then `B`".
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseMatrix<F> {
    ncols: usize,
    rows: Vec<SparseVec<F>>,
}

impl<F: Scalar> SparseMatrix<F> {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { ncols, rows: vec![SparseVec::zero(ncols); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { ncols: n, rows: (0..n).map(|i| SparseVec::unit(n, i)).collect() }
    }

    pub fn from_rows(ncols: usize, rows: Vec<SparseVec<F>>) -> Self {
        assert!(rows.iter().all(|r| r.dim() == ncols), "row length mismatch");
        SparseMatrix { ncols, rows }
    }

    /// Operator sending basis vector `i` to `Σ c * e_j` for `(j, c)` in `f(i)`.
    pub fn from_fn(n: usize, f: impl Fn(usize) -> Vec<(usize, F)>) -> Self {
        SparseMatrix { ncols: n, rows: (0..n).map(|i| SparseVec::from_entries(n, f(i))).collect() }
    }

    /// Operator sending basis vector `i` to `e_{map(i)}`, or to zero on `None`.
    pub fn from_map(n: usize, map: impl Fn(usize) -> Option<usize>) -> Self {
        Self::from_fn(n, |i| map(i).map(|j| vec![(j, F::one())]).unwrap_or_default())
    }

    pub fn from_dense(rows: &[Vec<F>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        SparseMatrix { ncols, rows: rows.iter().map(|r| SparseVec::from_dense(r)).collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    pub fn row(&self, i: usize) -> &SparseVec<F> {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> F {
        self.rows[i].get(j)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SparseVec::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(SparseVec::nnz).sum()
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        assert_eq!(v.dim(), self.nrows(), "dimension mismatch");
        let mut acc = Accumulator::new(self.ncols);
        for (i, c) in v.iter() {
            acc.add_scaled(c, &self.rows[i]);
        }
        acc.finish()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows(), "dimension mismatch");
        SparseMatrix { ncols: other.ncols, rows: self.rows.iter().map(|r| other.apply(r)).collect() }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.ncols != other.nrows() {
            return Err(Error::DimensionMismatch { expected: self.ncols, found: other.nrows() });
        }
        Ok(self.mul(other))
    }

    pub fn add_scaled(&self, c: &F, other: &Self) -> Self {
        assert_eq!((self.nrows(), self.ncols), (other.nrows(), other.ncols), "shape mismatch");
        SparseMatrix {
            ncols: self.ncols,
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a.add_scaled(c, b)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(&F::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(&-F::one(), other)
    }

    pub fn scaled(&self, c: &F) -> Self {
        SparseMatrix { ncols: self.ncols, rows: self.rows.iter().map(|r| r.scaled(c)).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<Vec<(usize, F)>> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r.iter() {
                cols[j].push((i, v.clone()));
            }
        }
        let n = self.nrows();
        SparseMatrix { ncols: n, rows: cols.into_iter().map(|c| SparseVec::from_sorted_unchecked(n, c)).collect() }
    }

    pub fn trace(&self) -> F {
        (0..self.nrows().min(self.ncols)).fold(F::zero(), |acc, i| acc + self.entry(i, i))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Row-major flattening: entry `(r, c)` goes to index `r * ncols + c`.
    pub fn flatten(&self) -> SparseVec<F> {
        let n = self.ncols;
        let entries = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r * n + c, v.clone())))
            .collect();
        SparseVec::from_sorted_unchecked(self.nrows() * n, entries)
    }

    pub fn unflatten(nrows: usize, ncols: usize, v: &SparseVec<F>) -> Self {
        assert_eq!(v.dim(), nrows * ncols, "dimension mismatch");
        let mut rows: Vec<Vec<(usize, F)>> = vec![Vec::new(); nrows];
        for (k, x) in v.iter() {
            rows[k / ncols].push((k % ncols, x.clone()));
        }
        SparseMatrix { ncols, rows: rows.into_iter().map(|r| SparseVec::from_sorted_unchecked(ncols, r)).collect() }
    }

    /// Kronecker product; `(i, k) -> i * other.nrows() + k`.
    pub fn kron(&self, other: &Self) -> Self {
        let (p, q) = (other.nrows(), other.ncols);
        let mut rows = Vec::with_capacity(self.nrows() * p);
        for a in &self.rows {
            for b in &other.rows {
                let mut entries = Vec::with_capacity(a.nnz() * b.nnz());
                for (j, x) in a.iter() {
                    for (l, y) in b.iter() {
                        entries.push((j * q + l, x.clone() * y.clone()));
                    }
                }
                rows.push(SparseVec::from_sorted_unchecked(self.ncols * q, entries));
            }
        }
        let _ = p;
        SparseMatrix { ncols: self.ncols * q, rows }
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let ncols = self.ncols + other.ncols;
        let off = self.ncols;
        let rows = self
            .rows
            .iter()
            .map(|r| r.embed(ncols, |j| j))
            .chain(other.rows.iter().map(|r| r.embed(ncols, |j| j + off)))
            .collect();
        SparseMatrix { ncols, rows }
    }

    /// Matrix of the operator restricted to the rows/columns in `idx`.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        let pos: std::collections::HashMap<usize, usize> = idx.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let n = idx.len();
        let rows = idx
            .iter()
            .map(|&i| {
                SparseVec::from_entries(
                    n,
                    self.rows[i].iter().filter_map(|(j, v)| pos.get(&j).map(|&k| (k, v.clone()))),
                )
            })
            .collect();
        SparseMatrix { ncols: n, rows }
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        self.rows.iter().map(SparseVec::to_dense).collect()
    }

    pub fn map_scalar<G: Scalar>(&self, f: impl Fn(&F) -> G) -> SparseMatrix<G> {
        SparseMatrix {
            ncols: self.ncols,
            rows: self
                .rows
                .iter()
                .map(|r| SparseVec::from_entries(self.ncols, r.iter().map(|(j, v)| (j, f(v)))))
                .collect(),
        }
    }
}
