use crate::error::{Error, Result};
use crate::linalg::closure::OperatorAlgebra;
use crate::linalg::matrix::SparseMatrix;
use crate::linalg::subspace::SubspaceBasis;
use crate::linalg::vector::{Accumulator, SparseVec};
use crate::scalar::Scalar;

/// A finite-dimensional right module given by the matrices of a fixed
/// list of algebra generators.
#[derive(Clone, Debug, PartialEq)]
pub struct ModulePresentation<F> {
    dim: usize,
    generators: Vec<SparseMatrix<F>>,
    names: Vec<String>,
}

impl<F: Scalar> ModulePresentation<F> {
    pub fn new(dim: usize, generators: Vec<SparseMatrix<F>>, names: Vec<String>) -> Result<Self> {
        if names.len() != generators.len() {
            return Err(Error::DimensionMismatch { expected: generators.len(), found: names.len() });
        }
        for g in &generators {
            if g.nrows() != dim || g.ncols() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: g.nrows() });
            }
        }
        Ok(ModulePresentation { dim, generators, names })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[SparseMatrix<F>] {
        &self.generators
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn action(&self, name: &str) -> Option<&SparseMatrix<F>> {
        self.names.iter().position(|n| n == name).map(|i| &self.generators[i])
    }

    /// Matrix of a word in the generators (applied left to right).
    pub fn word(&self, word: &[usize]) -> SparseMatrix<F> {
        word.iter().fold(SparseMatrix::identity(self.dim), |acc, &g| acc.mul(&self.generators[g]))
    }

    pub fn algebra(&self) -> Result<OperatorAlgebra<F>> {
        OperatorAlgebra::closure(self.dim, &self.generators, true)
    }

    /// Smallest invariant subspace containing `vectors`.
    pub fn generate(&self, vectors: &[SparseVec<F>]) -> Result<SubspaceBasis<F>> {
        let mut sub = SubspaceBasis::new(self.dim);
        let mut queue: Vec<SparseVec<F>> = Vec::new();
        for v in vectors {
            if sub.span_insert(v)? {
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for g in &self.generators {
                let w = g.apply(&v);
                if sub.span_insert(&w)? {
                    queue.push(w);
                }
            }
        }
        Ok(sub)
    }

    pub fn is_invariant(&self, sub: &SubspaceBasis<F>) -> bool {
        self.generators.iter().all(|g| sub.is_invariant(g))
    }

    /// Action on an invariant subspace, in the basis of its echelon rows.
    pub fn submodule(&self, sub: &SubspaceBasis<F>) -> Result<Self> {
        let pivots = sub.pivots();
        let mut gens = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let mut rows = Vec::with_capacity(sub.dim());
            for r in sub.rows() {
                let img = g.apply(r);
                if !sub.contains(&img) {
                    return Err(Error::Precondition("subspace is not invariant".into()));
                }
                rows.push(SparseVec::from_dense(&pivots.iter().map(|&p| img.get(p)).collect::<Vec<_>>()));
            }
            gens.push(SparseMatrix::from_rows(sub.dim(), rows));
        }
        Self::new(sub.dim(), gens, self.names.clone())
    }

    /// Action on `self / sub`, in the basis of the non-pivot unit vectors.
    pub fn quotient(&self, sub: &SubspaceBasis<F>) -> Result<Self> {
        if !self.is_invariant(sub) {
            return Err(Error::Precondition("subspace is not invariant".into()));
        }
        Ok(self.quotient_unchecked(sub))
    }

    fn quotient_unchecked(&self, sub: &SubspaceBasis<F>) -> Self {
        let free = sub.non_pivots();
        let mut pos = vec![usize::MAX; self.dim];
        for (k, &j) in free.iter().enumerate() {
            pos[j] = k;
        }
        let q = free.len();
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let rows = free
                    .iter()
                    .map(|&j| {
                        let red = sub.reduce(g.row(j));
                        SparseVec::from_entries(q, red.iter().map(|(i, v)| (pos[i], v.clone())))
                    })
                    .collect();
                SparseMatrix::from_rows(q, rows)
            })
            .collect();
        ModulePresentation { dim: q, generators: gens, names: self.names.clone() }
    }

    /// Restriction along a map from the generators of a subalgebra to
    /// the generators of this module's algebra.
    pub fn restrict(&self, embedding: &[usize], names: Vec<String>) -> Result<Self> {
        let gens = embedding
            .iter()
            .map(|&j| {
                self.generators
                    .get(j)
                    .cloned()
                    .ok_or_else(|| Error::InconsistentEmbedding(format!("generator {j} out of range")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.dim, gens, names)
    }

    /// Outer tensor product, a module over the tensor product of the two
    /// algebras with generators `[self..., other...]`.
    pub fn tensor(&self, other: &Self) -> Self {
        let (ia, ib) = (SparseMatrix::identity(self.dim), SparseMatrix::identity(other.dim));
        let gens =
            self.generators.iter().map(|g| g.kron(&ib)).chain(other.generators.iter().map(|g| ia.kron(g))).collect();
        let names =
            self.names.iter().map(|n| format!("{n}⊗1")).chain(other.names.iter().map(|n| format!("1⊗{n}"))).collect();
        ModulePresentation { dim: self.dim * other.dim, generators: gens, names }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.generators.len() != other.generators.len() {
            return Err(Error::DimensionMismatch { expected: self.generators.len(), found: other.generators.len() });
        }
        let gens = self.generators.iter().zip(&other.generators).map(|(a, b)| a.direct_sum(b)).collect();
        Self::new(self.dim + other.dim, gens, self.names.clone())
    }

    /// `M·rad(A)`, with `A` the image of the algebra in `End(M)`.
    pub fn radical_submodule(&self) -> Result<SubspaceBasis<F>> {
        let algebra = self.algebra()?;
        let rad = algebra.radical()?;
        let mut sub = SubspaceBasis::new(self.dim);
        for r in rad.rows() {
            let op = SparseMatrix::unflatten(self.dim, self.dim, r);
            for i in 0..self.dim {
                sub.span_insert(op.row(i))?;
            }
        }
        Ok(sub)
    }

    /// `M / M·rad(A)`.
    pub fn top(&self) -> Result<Self> {
        self.quotient(&self.radical_submodule()?)
    }

    /// Trace of the action of a word in the generators.
    pub fn trace(&self, word: &[usize]) -> F {
        self.word(word).trace()
    }
}

/// Module homomorphisms `M -> N` as flattened `dim M x dim N` matrices
/// `X` with `G_M X = X G_N` for each generator.
pub fn hom_space<F: Scalar>(m: &ModulePresentation<F>, n: &ModulePresentation<F>) -> Result<SubspaceBasis<F>> {
    if m.generators.len() != n.generators.len() {
        return Err(Error::DimensionMismatch { expected: m.generators.len(), found: n.generators.len() });
    }
    let (dm, dn) = (m.dim, n.dim);
    let mut forms = SubspaceBasis::new(dm * dn);
    for (gm, gn) in m.generators.iter().zip(&n.generators) {
        let gnt = gn.transpose();
        for a in 0..dm {
            for b in 0..dn {
                let mut acc = Accumulator::new(dm * dn);
                for (c, x) in gm.row(a).iter() {
                    acc.add_term(c * dn + b, x.clone());
                }
                for (d, y) in gnt.row(b).iter() {
                    acc.add_term(a * dn + d, -y.clone());
                }
                forms.span_insert(&acc.finish())?;
            }
        }
    }
    Ok(forms.annihilator())
}

pub fn hom_space_dim<F: Scalar>(m: &ModulePresentation<F>, n: &ModulePresentation<F>) -> Result<usize> {
    Ok(hom_space(m, n)?.dim())
}

/// Induction `M ⊗_A C` along a map sending generator `i` of `M`'s algebra
/// to generator `embedding[i]` of `C`. The result is presented on
/// `C`'s generators.
pub fn module_induce<F: Scalar>(
    m: &ModulePresentation<F>,
    embedding: &[usize],
    c: &OperatorAlgebra<F>,
    names: Vec<String>,
) -> Result<ModulePresentation<F>> {
    if embedding.len() != m.generators.len() {
        return Err(Error::InconsistentEmbedding(format!(
            "{} generators mapped, module has {}",
            embedding.len(),
            m.generators.len()
        )));
    }
    if let Some(&bad) = embedding.iter().find(|&&j| j >= c.generators().len()) {
        return Err(Error::InconsistentEmbedding(format!("generator {bad} out of range")));
    }
    let basis = c.basis();
    let dc = basis.len();
    let dm = m.dim;
    let coords = |op: &SparseMatrix<F>| -> Result<SparseVec<F>> {
        c.coordinates(op).ok_or_else(|| Error::InconsistentEmbedding("product left the target algebra".into()))
    };
    // coordinates of ι(g) c_j
    let left: Vec<Vec<SparseVec<F>>> = embedding
        .iter()
        .map(|&j| basis.iter().map(|cj| coords(&c.generators()[j].mul(cj))).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let total = dm * dc;
    let mut rel = SubspaceBasis::new(total);
    for (g, gm) in m.generators.iter().enumerate() {
        for i in 0..dm {
            for (j, lj) in left[g].iter().enumerate() {
                let mut acc = Accumulator::new(total);
                for (a, x) in gm.row(i).iter() {
                    acc.add_term(a * dc + j, x.clone());
                }
                for (k, y) in lj.iter() {
                    acc.add_term(i * dc + k, -y.clone());
                }
                rel.span_insert(&acc.finish())?;
            }
        }
    }
    // right action of C's generators on the tensor space
    let right: Vec<Vec<SparseVec<F>>> = c
        .generators()
        .iter()
        .map(|h| basis.iter().map(|cj| coords(&cj.mul(h))).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let tensor_gens: Vec<SparseMatrix<F>> = right
        .iter()
        .map(|rh| {
            SparseMatrix::from_fn(total, |t| {
                let (i, j) = (t / dc, t % dc);
                rh[j].iter().map(|(k, v)| (i * dc + k, v.clone())).collect()
            })
        })
        .collect();
    let tensor = ModulePresentation { dim: total, generators: tensor_gens, names: names.clone() };
    if names.len() != c.generators().len() {
        return Err(Error::DimensionMismatch { expected: c.generators().len(), found: names.len() });
    }
    Ok(tensor.quotient_unchecked(&rel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn perm(p: &[usize]) -> SparseMatrix<Rational> {
        SparseMatrix::from_map(p.len(), |i| Some(p[i]))
    }

    fn names(k: usize) -> Vec<String> {
        (1..=k).map(|i| format!("s{i}")).collect()
    }

    #[test]
    fn permutation_module_splits() {
        let m = ModulePresentation::new(3, vec![perm(&[1, 0, 2]), perm(&[0, 2, 1])], names(2)).unwrap();
        let ones = SparseVec::from_dense(&vec![Rational::from_int(1); 3]);
        let triv = m.generate(&[ones]).unwrap();
        assert_eq!(triv.dim(), 1);
        let q = m.quotient(&triv).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(hom_space_dim(&m, &m).unwrap(), 2);
        assert_eq!(hom_space_dim(&m.submodule(&triv).unwrap(), &m).unwrap(), 1);
    }

    #[test]
    fn induction_from_trivial_subgroup_is_regular() {
        // C = group algebra of S_2 in its regular representation; induce the
        // trivial module of the trivial algebra (no generators).
        let s = perm(&[1, 0]);
        let c = OperatorAlgebra::closure(2, &[s], true).unwrap();
        let triv = ModulePresentation::new(1, vec![], vec![]).unwrap();
        let ind = module_induce(&triv, &[], &c, names(1)).unwrap();
        assert_eq!(ind.dim(), 2);
        // induce trivial S_2 module to S_2: stays trivial
        let t = ModulePresentation::new(1, vec![SparseMatrix::identity(1)], names(1)).unwrap();
        let ind = module_induce(&t, &[0], &c, names(1)).unwrap();
        assert_eq!(ind.dim(), 1);
        assert_eq!(ind.generators()[0], SparseMatrix::identity(1));
        assert!(module_induce(&t, &[3], &c, names(1)).is_err());
    }
}
