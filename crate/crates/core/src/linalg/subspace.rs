use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::matrix::SparseMatrix;
use crate::linalg::vector::{Accumulator, SparseVec};
use crate::scalar::Scalar;

/// A subspace kept in fully reduced row echelon form. Every row is
/// normalized to 1 at its pivot and vanishes at every other pivot, so
/// the coordinates of a vector in the span are its entries at the pivots.
#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceBasis<F> {
    ambient: usize,
    rows: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Scalar> SubspaceBasis<F> {
    pub fn new(ambient: usize) -> Self {
        SubspaceBasis { ambient, rows: BTreeMap::new() }
    }

    pub fn full(ambient: usize) -> Self {
        SubspaceBasis { ambient, rows: (0..ambient).map(|i| (i, SparseVec::unit(ambient, i))).collect() }
    }

    pub fn spanned_by<'a>(ambient: usize, vectors: impl IntoIterator<Item = &'a SparseVec<F>>) -> Result<Self> {
        let mut b = Self::new(ambient);
        for v in vectors {
            b.span_insert(v)?;
        }
        Ok(b)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.rows.contains_key(&i)
    }

    /// Rows in increasing pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<F>> {
        self.rows.values()
    }

    pub fn row_at_pivot(&self, p: usize) -> Option<&SparseVec<F>> {
        self.rows.get(&p)
    }

    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient).filter(|i| !self.rows.contains_key(i)).collect()
    }

    fn check(&self, v: &SparseVec<F>) -> Result<()> {
        if v.dim() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: v.dim() });
        }
        Ok(())
    }

    /// Remainder of `v` modulo the span; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let hits: Vec<(usize, &F)> = v.iter().filter(|(i, _)| self.rows.contains_key(i)).collect();
        match hits.len() {
            0 => v.clone(),
            1 => v.add_scaled(&-hits[0].1.clone(), &self.rows[&hits[0].0]),
            _ => {
                let mut acc = Accumulator::new(self.ambient);
                acc.add_scaled(&F::one(), v);
                for (p, c) in hits {
                    acc.add_scaled(&-c.clone(), &self.rows[&p]);
                }
                acc.finish()
            }
        }
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        v.dim() == self.ambient && self.reduce(v).is_zero()
    }

    /// Coordinates of `v` with respect to the rows (pivot order), or `None`
    /// if `v` is outside the span.
    pub fn coordinates(&self, v: &SparseVec<F>) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.rows.keys().map(|&p| v.get(p)).collect())
    }

    /// Inserts `v`; returns whether the dimension grew.
    pub fn span_insert(&mut self, v: &SparseVec<F>) -> Result<bool> {
        self.check(v)?;
        let w = self.reduce(v);
        Ok(self.insert_reduced(w))
    }

    fn insert_reduced(&mut self, mut w: SparseVec<F>) -> bool {
        let Some((p, lead)) = w.leading() else { return false };
        let inv = F::one() / lead.clone();
        w.scale(&inv);
        for row in self.rows.values_mut() {
            if let Some(c) = row.get_ref(p) {
                let c = c.clone();
                *row = row.add_scaled(&-c, &w);
            }
        }
        self.rows.insert(p, w);
        true
    }

    pub fn extend<'a>(&mut self, vs: impl IntoIterator<Item = &'a SparseVec<F>>) -> Result<usize> {
        let mut grown = 0;
        for v in vs {
            grown += usize::from(self.span_insert(v)?);
        }
        Ok(grown)
    }

    /// Solutions `x` of `⟨row, x⟩ = 0` for every row.
    pub fn annihilator(&self) -> SubspaceBasis<F> {
        let mut free_cols: BTreeMap<usize, Vec<(usize, F)>> =
            self.non_pivots().into_iter().map(|j| (j, vec![(j, F::one())])).collect();
        for (&p, row) in &self.rows {
            for (j, v) in row.iter() {
                if j != p {
                    free_cols.get_mut(&j).expect("reduced rows vanish at other pivots").push((p, -v.clone()));
                }
            }
        }
        let mut out = SubspaceBasis::new(self.ambient);
        for (_, entries) in free_cols {
            let w = out.reduce(&SparseVec::from_entries(self.ambient, entries));
            out.insert_reduced(w);
        }
        out
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.extend(other.rows())?;
        Ok(out)
    }

    /// Image of the subspace under a linear operator (rows times `op`).
    pub fn image(&self, op: &SparseMatrix<F>) -> Result<Self> {
        let mut out = SubspaceBasis::new(op.ncols());
        for r in self.rows() {
            out.span_insert(&op.apply(r))?;
        }
        Ok(out)
    }

    pub fn is_invariant(&self, op: &SparseMatrix<F>) -> bool {
        self.rows().all(|r| self.contains(&op.apply(r)))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        // x in both  <=>  x annihilated by both annihilators
        let mut forms = self.annihilator();
        forms.extend(other.annihilator().rows())?;
        Ok(forms.annihilator())
    }

    /// Matrix whose rows are the basis rows.
    pub fn to_matrix(&self) -> SparseMatrix<F> {
        SparseMatrix::from_rows(self.ambient, self.rows().cloned().collect())
    }
}

/// Kernel of the row-vector action of a family of operators:
/// all `x` with `x * op = 0` for every `op`.
pub fn common_kernel<F: Scalar>(n: usize, ops: &[SparseMatrix<F>]) -> Result<SubspaceBasis<F>> {
    let mut forms = SubspaceBasis::new(n);
    for op in ops {
        if op.nrows() != n {
            return Err(Error::DimensionMismatch { expected: n, found: op.nrows() });
        }
        forms.extend(op.transpose().rows())?;
    }
    Ok(forms.annihilator())
}

pub fn rank<F: Scalar>(vectors: &[SparseVec<F>]) -> Result<usize> {
    let Some(first) = vectors.first() else { return Ok(0) };
    Ok(SubspaceBasis::spanned_by(first.dim(), vectors)?.dim())
}

/// Expresses each target in terms of a linearly independent family.
/// Fails with `Precondition` if the family is dependent or a target is
/// outside its span.
pub fn solve_in_basis<F: Scalar>(basis: &[SparseVec<F>], targets: &[SparseVec<F>]) -> Result<Vec<SparseVec<F>>> {
    let r = basis.len();
    let Some(n) = basis.first().map(SparseVec::dim) else {
        return if targets.iter().all(SparseVec::is_zero) {
            Ok(targets.iter().map(|_| SparseVec::zero(0)).collect())
        } else {
            Err(Error::Precondition("target outside an empty span".into()))
        };
    };
    let mut aug = SubspaceBasis::new(n + r);
    for (k, b) in basis.iter().enumerate() {
        let v = SparseVec::from_sorted_unchecked(
            n + r,
            b.entries().iter().cloned().chain(std::iter::once((n + k, F::one()))).collect(),
        );
        aug.span_insert(&v)?;
    }
    if aug.pivots().iter().any(|&p| p >= n) {
        return Err(Error::Precondition("basis vectors are linearly dependent".into()));
    }
    targets
        .iter()
        .map(|t| {
            let rem = aug.reduce(&t.embed(n + r, |i| i));
            if rem.iter().any(|(i, _)| i < n) {
                return Err(Error::Precondition("target outside the span".into()));
            }
            Ok(SparseVec::from_entries(r, rem.iter().map(|(i, v)| (i - n, -v.clone()))))
        })
        .collect()
}

/// Inverse of a square matrix.
pub fn invert<F: Scalar>(m: &SparseMatrix<F>) -> Result<SparseMatrix<F>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch { expected: m.nrows(), found: m.ncols() });
    }
    let n = m.nrows();
    let units: Vec<SparseVec<F>> = (0..n).map(|i| SparseVec::unit(n, i)).collect();
    let rows = solve_in_basis(m.rows(), &units)?;
    Ok(SparseMatrix::from_rows(n, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::Zero;

    fn v(xs: &[i64]) -> SparseVec<Rational> {
        SparseVec::from_dense(&xs.iter().map(|&x| Rational::from_int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn rref_is_reduced() {
        let b = SubspaceBasis::spanned_by(3, &[v(&[0, 2, 4]), v(&[1, 1, 1]), v(&[1, 2, 3])]).unwrap();
        assert_eq!(b.dim(), 2);
        assert_eq!(b.pivots(), vec![0, 1]);
        assert_eq!(b.row_at_pivot(0).unwrap(), &v(&[1, 0, -1]));
        assert_eq!(b.row_at_pivot(1).unwrap(), &v(&[0, 1, 2]));
        assert_eq!(b.coordinates(&v(&[2, 3, 4])), Some(vec![Rational::from_int(2), Rational::from_int(3)]));
    }

    #[test]
    fn annihilator_dimension() {
        let b = SubspaceBasis::spanned_by(4, &[v(&[1, 1, 0, 0]), v(&[0, 0, 1, 1])]).unwrap();
        let k = b.annihilator();
        assert_eq!(k.dim(), 2);
        for r in k.rows() {
            for s in b.rows() {
                assert!(r.dot(s).is_zero());
            }
        }
    }

    #[test]
    fn solve_and_invert() {
        let basis = vec![v(&[1, 1, 0]), v(&[0, 1, 1])];
        let c = solve_in_basis(&basis, &[v(&[1, 3, 2])]).unwrap();
        assert_eq!(c[0], v(&[1, 2]));
        assert!(solve_in_basis(&basis, &[v(&[1, 0, 0])]).is_err());
        let m = SparseMatrix::from_rows(2, vec![v(&[2, 1]), v(&[1, 1])]);
        let inv = invert(&m).unwrap();
        assert_eq!(m.mul(&inv), SparseMatrix::identity(2));
    }
}
