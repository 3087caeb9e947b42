use crate::error::{Error, Result};
use crate::linalg::closure::OperatorAlgebra;
use crate::linalg::matrix::SparseMatrix;
use crate::linalg::subspace::SubspaceBasis;
use crate::linalg::vector::{Accumulator, SparseVec};
use crate::scalar::Scalar;

/// All `n x n` operators `f` (flattened row-major) with `L * f * R = 0`
/// for every pair `(L, R)`.
pub fn solve_constraints<F: Scalar>(
    n: usize,
    pairs: &[(SparseMatrix<F>, SparseMatrix<F>)],
) -> Result<SubspaceBasis<F>> {
    let mut forms = SubspaceBasis::new(n * n);
    for (l, r) in pairs {
        for m in [l, r] {
            if m.nrows() != n || m.ncols() != n {
                return Err(Error::DimensionMismatch { expected: n, found: m.nrows() });
            }
        }
        let rt = r.transpose();
        for a in 0..n {
            let la = l.row(a);
            if la.is_zero() {
                continue;
            }
            for b in 0..n {
                let rb = rt.row(b);
                if rb.is_zero() {
                    continue;
                }
                // (L f R)[a][b] = Σ_{c,d} L[a][c] f[c][d] R[d][b]
                let mut acc = Accumulator::new(n * n);
                for (c, x) in la.iter() {
                    for (d, y) in rb.iter() {
                        acc.add_term(c * n + d, x.clone() * y.clone());
                    }
                }
                forms.span_insert(&acc.finish())?;
            }
        }
    }
    Ok(forms.annihilator())
}

/// Elements of `ambient` (flattened `n x n` operators) commuting with
/// every generator.
pub fn commutant<F: Scalar>(
    n: usize,
    generators: &[SparseMatrix<F>],
    ambient: &SubspaceBasis<F>,
) -> Result<SubspaceBasis<F>> {
    if ambient.ambient() != n * n {
        return Err(Error::DimensionMismatch { expected: n * n, found: ambient.ambient() });
    }
    let basis: Vec<SparseMatrix<F>> = ambient.rows().map(|r| SparseMatrix::unflatten(n, n, r)).collect();
    let r = basis.len();
    // Column i of the linear map x -> Σ x_i [B_i, G] is the concatenation
    // over generators of the flattened commutators.
    let mut cols: Vec<Vec<(usize, F)>> = Vec::with_capacity(r);
    for b in &basis {
        let mut col = Vec::new();
        for (k, g) in generators.iter().enumerate() {
            col.extend(b.commutator(g).flatten().iter().map(|(j, v)| (k * n * n + j, v.clone())));
        }
        cols.push(col);
    }
    let out_dim = generators.len() * n * n;
    let mut rows: Vec<Vec<(usize, F)>> = vec![Vec::new(); out_dim];
    for (i, col) in cols.into_iter().enumerate() {
        for (j, v) in col {
            rows[j].push((i, v));
        }
    }
    let mut forms = SubspaceBasis::new(r);
    for row in rows.into_iter().filter(|x| !x.is_empty()) {
        forms.span_insert(&SparseVec::from_entries(r, row))?;
    }
    let kernel = forms.annihilator();
    let mut out = SubspaceBasis::new(n * n);
    for x in kernel.rows() {
        let mut acc = Accumulator::new(n * n);
        for (i, c) in x.iter() {
            acc.add_scaled(c, &basis[i].flatten());
        }
        out.span_insert(&acc.finish())?;
    }
    Ok(out)
}

fn sample_indices(r: usize) -> Vec<usize> {
    if r <= 24 {
        (0..r).collect()
    } else {
        let step = r / 24;
        (0..r).step_by(step.max(1)).collect()
    }
}

/// Checks closure of a span of operators under multiplication on a
/// deterministic sample of products.
pub fn check_closed<F: Scalar>(n: usize, span: &SubspaceBasis<F>) -> Result<()> {
    let basis: Vec<SparseMatrix<F>> = span.rows().map(|r| SparseMatrix::unflatten(n, n, r)).collect();
    let idx = sample_indices(basis.len());
    for &i in &idx {
        for &j in &idx {
            if !span.contains(&basis[i].mul(&basis[j]).flatten()) {
                return Err(Error::NotClosed);
            }
        }
    }
    Ok(())
}

/// Radical of a finite-dimensional operator algebra over a field of
/// characteristic zero: the kernel of the trace form `(a, b) -> tr(ab)`.
pub fn radical<F: Scalar>(n: usize, span: &SubspaceBasis<F>) -> Result<SubspaceBasis<F>> {
    if span.ambient() != n * n {
        return Err(Error::DimensionMismatch { expected: n * n, found: span.ambient() });
    }
    check_closed(n, span)?;
    let basis: Vec<SparseMatrix<F>> = span.rows().map(|r| SparseMatrix::unflatten(n, n, r)).collect();
    let flat: Vec<SparseVec<F>> = basis.iter().map(SparseMatrix::flatten).collect();
    let flat_t: Vec<SparseVec<F>> = basis.iter().map(|b| b.transpose().flatten()).collect();
    let r = basis.len();
    let mut gram = SubspaceBasis::new(r);
    for a in &flat {
        let row: Vec<F> = flat_t.iter().map(|bt| a.dot(bt)).collect();
        gram.span_insert(&SparseVec::from_dense(&row))?;
    }
    let kernel = gram.annihilator();
    let mut out = SubspaceBasis::new(n * n);
    for x in kernel.rows() {
        let mut acc = Accumulator::new(n * n);
        for (i, c) in x.iter() {
            acc.add_scaled(c, &flat[i]);
        }
        out.span_insert(&acc.finish())?;
    }
    Ok(out)
}

pub fn radical_dim<F: Scalar>(n: usize, span: &SubspaceBasis<F>) -> Result<usize> {
    Ok(radical(n, span)?.dim())
}

impl<F: Scalar> OperatorAlgebra<F> {
    pub fn radical(&self) -> Result<SubspaceBasis<F>> {
        radical(self.n(), self.span())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn unit(n: usize, i: usize, j: usize) -> SparseMatrix<Rational> {
        SparseMatrix::from_fn(n, |r| if r == i { vec![(j, Rational::from_int(1))] } else { vec![] })
    }

    #[test]
    fn upper_triangular_radical() {
        let gens = vec![unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 1)];
        let a = OperatorAlgebra::closure(2, &gens, false).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.radical().unwrap().dim(), 1);
    }

    #[test]
    fn not_closed_is_reported() {
        let span = SubspaceBasis::spanned_by(4, &[unit(2, 0, 1).flatten(), unit(2, 1, 0).flatten()]).unwrap();
        assert_eq!(radical_dim(2, &span), Err(Error::NotClosed));
    }

    #[test]
    fn commutant_of_diagonal() {
        let d = SparseMatrix::from_dense(&[
            vec![Rational::from_int(1), Rational::from_int(0)],
            vec![Rational::from_int(0), Rational::from_int(2)],
        ]);
        let c = commutant(2, &[d], &SubspaceBasis::full(4)).unwrap();
        assert_eq!(c.dim(), 2);
        let sol = solve_constraints(2, &[(unit(2, 0, 0), SparseMatrix::identity(2))]).unwrap();
        assert_eq!(sol.dim(), 2);
    }
}
