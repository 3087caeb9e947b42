use std::collections::HashMap;

use crate::coxeter::DescentSet;
use crate::error::{Error, Result};
use crate::hecke::HeckeGroupAlgebra;
use crate::linalg::{rank, solve_in_basis, ModulePresentation, SparseMatrix, SparseVec};
use crate::nd::function::{k_subsets, ndf_enumerate, NdFunction, Subset};
use crate::scalar::Scalar;

/// Basis `e_S` of `⊕_{k=1}^n Λ^k`, ordered by size then lexicographically.
#[derive(Clone, Debug)]
pub struct ExteriorBasis {
    n: usize,
    subsets: Vec<Subset>,
    index: HashMap<Subset, usize>,
}

impl ExteriorBasis {
    pub fn new(n: usize) -> Self {
        let subsets: Vec<Subset> = DescentSet::all(n).into_iter().filter(|s| !s.is_empty()).collect();
        let index = subsets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        ExteriorBasis { n, subsets, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.subsets.len()
    }

    pub fn subsets(&self) -> &[Subset] {
        &self.subsets
    }

    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.index.get(&s).copied()
    }

    /// Action of `f` on the whole exterior algebra minus `Λ⁰`.
    pub fn operator<F: Scalar>(&self, f: &NdFunction) -> SparseMatrix<F> {
        SparseMatrix::from_map(self.dim(), |i| f.apply_set(self.subsets[i]).map(|t| self.index[&t]))
    }
}

/// `e_S·f = e_{f(S)}` when `f` is injective on `S`, else 0; on `Λ^k`.
pub fn exterior_action<F: Scalar>(f: &NdFunction, k: usize) -> SparseMatrix<F> {
    let basis = k_subsets(f.n(), k);
    let index: HashMap<Subset, usize> = basis.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    SparseMatrix::from_map(basis.len(), |i| f.apply_set(basis[i]).map(|t| index[&t]))
}

/// Rank of the span of the exterior operators of all of `NDF_n`.
pub fn exterior_rep_rank<F: Scalar>(n: usize) -> Result<usize> {
    let basis = ExteriorBasis::new(n);
    let flats: Vec<SparseVec<F>> = ndf_enumerate(n).iter().map(|f| basis.operator::<F>(f).flatten()).collect();
    rank(&flats)
}

/// Generators `[π̄_1.., π_1..]` of `NDF_n` on `⊕ Λ^k`.
pub fn ndf_exterior_generators<F: Scalar>(n: usize) -> Vec<SparseMatrix<F>> {
    let basis = ExteriorBasis::new(n);
    (1..n)
        .map(|i| basis.operator(&NdFunction::pibar(n, i)))
        .chain((1..n).map(|i| basis.operator(&NdFunction::pi(n, i))))
        .collect()
}

/// `e_S := ± Σ (−1)^{ℓ(σ)} σ` over `σ` with `σ(S) = {1..k}` increasing off
/// `S`, signed so the shortest such `σ` has coefficient 1.
pub fn hecke_e_s<F: Scalar>(h: &HeckeGroupAlgebra<F>, s: Subset) -> SparseVec<F> {
    let g = h.group();
    let k = s.len() as i64;
    let entries = g.elements().filter_map(|w| {
        let line = g.one_line(w);
        let small = line.iter().enumerate().all(|(p, &v)| s.contains(p + 1) == (v <= k));
        let rest: Vec<i64> = line.iter().enumerate().filter(|(p, _)| !s.contains(p + 1)).map(|(_, &v)| v).collect();
        (small && rest.windows(2).all(|x| x[0] < x[1]))
            .then(|| (w.0, if g.length(w).is_multiple_of(2) { F::one() } else { -F::one() }))
    });
    let v = SparseVec::from_entries(h.n(), entries);
    if v.iter().next().is_some_and(|(_, c)| c.is_negative()) {
        v.scaled(&-F::one())
    } else {
        v
    }
}

/// `P_n^k = P_{1..k−1} / Σ_{s > k} P_{1..k−1,s}` presented in the basis of
/// the images of `e_S`, together with `π̄_i` on it.
#[derive(Clone, Debug)]
pub struct HeckeExterior<F> {
    pub k: usize,
    pub subsets: Vec<Subset>,
    /// Generators of `HS_n` in their usual order.
    pub module: ModulePresentation<F>,
    pub pibar: Vec<SparseMatrix<F>>,
}

pub fn hecke_exterior<F: Scalar>(h: &HeckeGroupAlgebra<F>, k: usize) -> Result<HeckeExterior<F>> {
    let n = h.rank() + 1;
    if k == 0 || k > n {
        return Err(Error::Precondition(format!("need 1 ≤ k ≤ {n}, got {k}")));
    }
    let base = DescentSet::from_elems(1..k);
    let mut rel = crate::linalg::SubspaceBasis::new(h.n());
    for s in k + 1..n {
        let p = h.projective(base.with(s))?;
        for v in &p.vi_basis {
            rel.span_insert(v)?;
        }
    }
    let subsets = k_subsets(n, k);
    let top = h.projective(base)?;
    let mut combined: Vec<SparseVec<F>> = subsets.iter().map(|&s| hecke_e_s(h, s)).collect();
    if let Some(bad) = combined.iter().position(|v| !top.span.contains(v)) {
        return Err(Error::Precondition(format!("e_{} is not in P_{base}", subsets[bad])));
    }
    let d = combined.len();
    combined.extend(rel.rows().cloned());
    let act = |op: &SparseMatrix<F>| -> Result<SparseMatrix<F>> {
        let images: Vec<SparseVec<F>> = combined[..d].iter().map(|b| op.apply(b)).collect();
        let coords = solve_in_basis(&combined, &images)?;
        let rows = coords
            .into_iter()
            .map(|c| SparseVec::from_entries(d, c.iter().filter(|(j, _)| *j < d).map(|(j, v)| (j, v.clone()))))
            .collect();
        Ok(SparseMatrix::from_rows(d, rows))
    };
    let gens = h.generators().iter().map(act).collect::<Result<Vec<_>>>()?;
    let pibar = (1..n).map(|i| act(h.pibar(i))).collect::<Result<Vec<_>>>()?;
    Ok(HeckeExterior { k, subsets, module: ModulePresentation::new(d, gens, h.generator_names())?, pibar })
}

/// Operators of `HS_n` on `⊕_k P_n^k`, read off the quotients.
#[derive(Clone, Debug)]
pub struct HeckeExteriorRep<F> {
    pub n: usize,
    pub s: Vec<SparseMatrix<F>>,
    pub pi: Vec<SparseMatrix<F>>,
    pub pibar: Vec<SparseMatrix<F>>,
}

impl<F: Scalar> HeckeExteriorRep<F> {
    pub fn dim(&self) -> usize {
        (1usize << self.n) - 1
    }
}

pub fn heckesg_exterior<F: Scalar>(n: usize) -> Result<HeckeExteriorRep<F>> {
    let h = HeckeGroupAlgebra::<F>::symmetric(n)?;
    let r = n.saturating_sub(1);
    let mut parts = Vec::new();
    for k in 1..=n {
        parts.push(hecke_exterior(&h, k)?);
    }
    let sum = |pick: &dyn Fn(&HeckeExterior<F>) -> SparseMatrix<F>| -> SparseMatrix<F> {
        parts.iter().skip(1).fold(pick(&parts[0]), |acc, p| acc.direct_sum(&pick(p)))
    };
    let s = (0..r).map(|i| sum(&|p| p.module.generators()[i].clone())).collect();
    let pi = (0..r).map(|i| sum(&|p| p.module.generators()[r + i].clone())).collect();
    let pibar = (0..r).map(|i| sum(&|p| p.pibar[i].clone())).collect();
    Ok(HeckeExteriorRep { n, s, pi, pibar })
}

/// `R(f)`: the smallest preimage of each value of `f`.
pub fn first_preimages(f: &NdFunction) -> Subset {
    let mut out = Subset::EMPTY;
    let mut last = 0;
    for (i, &v) in f.values().iter().enumerate() {
        if v != last {
            out = out.with(i + 1);
            last = v;
        }
    }
    out
}

/// Counterexamples to the two readings of the triangularity behind
/// faithfulness, over all pairs with `g(R(f)) = im f`:
/// the strict one asks `im g = im f` and `R(g) ≤_lex R(f)`; the weak one
/// also allows `|im g| > |im f|` and compares `R` componentwise.
#[derive(Clone, Debug, Default, serde::Serialize)]
pub struct Triangularity {
    pub pairs: usize,
    pub strict_failures: Vec<(NdFunction, NdFunction)>,
    pub weak_failures: Vec<(NdFunction, NdFunction)>,
}

pub fn faithfulness_triangularity(n: usize) -> Triangularity {
    let all = ndf_enumerate(n);
    let mut out = Triangularity::default();
    for f in &all {
        let (im_f, r_f) = (f.image(), first_preimages(f));
        for g in all.iter().filter(|g| g.apply_set(r_f) == Some(im_f)) {
            out.pairs += 1;
            let (im_g, r_g) = (g.image(), first_preimages(g));
            let lex = r_g.to_vec() <= r_f.to_vec();
            let componentwise = r_g.len() == r_f.len() && r_g.iter().zip(r_f.iter()).all(|(a, b)| a <= b);
            if !(im_g == im_f && lex) {
                out.strict_failures.push((f.clone(), g.clone()));
            }
            if !(im_g.len() > im_f.len() || (im_g == im_f && componentwise)) {
                out.weak_failures.push((f.clone(), g.clone()));
            }
        }
    }
    out
}
