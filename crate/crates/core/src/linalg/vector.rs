use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Sparse vector: sorted `(index, value)` pairs, zeros never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec<F> {
    dim: usize,
    entries: Vec<(usize, F)>,
}

impl<F: Scalar> SparseVec<F> {
    pub fn zero(dim: usize) -> Self {
        SparseVec { dim, entries: Vec::new() }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i < dim, "index {i} out of range for dimension {dim}");
        SparseVec { dim, entries: vec![(i, F::one())] }
    }

    /// Builds a vector from arbitrary entries; duplicates are summed.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, F)>) -> Self {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for (i, v) in entries {
            assert!(i < dim, "index {i} out of range for dimension {dim}");
            let slot = acc.entry(i).or_insert_with(F::zero);
            *slot = slot.clone() + v;
        }
        SparseVec { dim, entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    pub fn from_dense(values: &[F]) -> Self {
        SparseVec {
            dim: values.len(),
            entries: values.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect(),
        }
    }

    /// Trusts the caller: entries sorted, unique, nonzero.
    pub(crate) fn from_sorted_unchecked(dim: usize, entries: Vec<(usize, F)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        SparseVec { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &F)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn get(&self, i: usize) -> F {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn get_ref(&self, i: usize) -> Option<&F> {
        self.entries.binary_search_by_key(&i, |(j, _)| *j).ok().map(|k| &self.entries[k].1)
    }

    /// First nonzero coordinate.
    pub fn leading(&self) -> Option<(usize, &F)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn scale(&mut self, c: &F) {
        if c.is_zero() {
            self.entries.clear();
        } else {
            for (_, v) in &mut self.entries {
                *v = v.clone() * c.clone();
            }
        }
    }

    pub fn scaled(&self, c: &F) -> Self {
        let mut out = self.clone();
        out.scale(c);
        out
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &F, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, c.clone() * y.clone()));
                        b.next();
                    } else {
                        let s = x.clone() + c.clone() * y.clone();
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, c.clone() * y.clone()));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { dim: self.dim, entries: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(&F::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(&-F::one(), other)
    }

    pub fn dot(&self, other: &Self) -> F {
        let mut acc = F::zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                acc = acc + x.clone() * y.clone();
                a.next();
                b.next();
            }
        }
        acc
    }

    pub fn to_dense(&self) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    /// Reindexes into a larger (or equal) ambient space.
    pub fn embed(&self, dim: usize, map: impl Fn(usize) -> usize) -> Self {
        SparseVec::from_entries(dim, self.entries.iter().map(|(i, v)| (map(*i), v.clone())))
    }
}

/// Accumulates a linear combination of sparse vectors.
pub(crate) struct Accumulator<F> {
    dim: usize,
    acc: BTreeMap<usize, F>,
}

impl<F: Scalar> Accumulator<F> {
    pub fn new(dim: usize) -> Self {
        Accumulator { dim, acc: BTreeMap::new() }
    }

    pub fn add_term(&mut self, i: usize, v: F) {
        let slot = self.acc.entry(i).or_insert_with(F::zero);
        *slot = slot.clone() + v;
    }

    pub fn add_scaled(&mut self, c: &F, v: &SparseVec<F>) {
        for (i, x) in v.iter() {
            self.add_term(i, c.clone() * x.clone());
        }
    }

    pub fn finish(self) -> SparseVec<F> {
        SparseVec::from_sorted_unchecked(self.dim, self.acc.into_iter().filter(|(_, v)| !v.is_zero()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    #[test]
    fn add_scaled_cancels() {
        let a = SparseVec::from_dense(&[q(1), q(2), q(0)]);
        let b = SparseVec::from_dense(&[q(1), q(0), q(3)]);
        let c = a.add_scaled(&q(-1), &b);
        assert_eq!(c.entries(), &[(1, q(2)), (2, q(-3))]);
        assert_eq!(a.dot(&b), q(1));
    }

    #[test]
    fn duplicates_are_summed() {
        let v = SparseVec::from_entries(4, vec![(2, q(1)), (0, q(5)), (2, q(-1))]);
        assert_eq!(v.entries(), &[(0, q(5))]);
    }
}
