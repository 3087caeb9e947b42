use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::RelationCheck;
use crate::linalg::{hom_space_dim, rank, ModulePresentation, OperatorAlgebra, SparseMatrix, SparseVec, SubspaceBasis};
use crate::nd::exterior::{exterior_action, heckesg_exterior};
use crate::nd::function::{binomial, catalan, k_subsets, ndf_enumerate, NdFunction};
use crate::scalar::Scalar;

/// An element of the monoid algebra `k[NDF_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NdElement<F> {
    n: usize,
    terms: BTreeMap<NdFunction, F>,
}

impl<F: Scalar> NdElement<F> {
    pub fn zero(n: usize) -> Self {
        NdElement { n, terms: BTreeMap::new() }
    }

    pub fn basis(f: NdFunction) -> Self {
        let n = f.n();
        NdElement { n, terms: BTreeMap::from([(f, F::one())]) }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(NdFunction::identity(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<NdFunction, F> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, f: NdFunction, c: F) {
        let e = self.terms.entry(f).or_insert_with(F::zero);
        *e = e.clone() + c;
        let dead: Vec<NdFunction> = self.terms.iter().filter(|(_, v)| v.is_zero()).map(|(k, _)| k.clone()).collect();
        for k in dead {
            self.terms.remove(&k);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (f, c) in &other.terms {
            out.push(f.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scaled(&-F::one()))
    }

    pub fn scaled(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        NdElement { n: self.n, terms: self.terms.iter().map(|(f, v)| (f.clone(), v.clone() * c.clone())).collect() }
    }

    /// Product with `self` applied first.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (f, a) in &self.terms {
            for (g, b) in &other.terms {
                out.push(f.then(g), a.clone() * b.clone());
            }
        }
        out
    }

    /// Coordinates against an enumeration of the monoid.
    pub fn to_vector(&self, index: &BTreeMap<NdFunction, usize>) -> SparseVec<F> {
        SparseVec::from_entries(index.len(), self.terms.iter().map(|(f, c)| (index[f], c.clone())))
    }

    /// Image in `End(Λ^k)`.
    pub fn exterior(&self, k: usize) -> SparseMatrix<F> {
        let d = binomial(self.n, k) as usize;
        self.terms.iter().fold(SparseMatrix::zero(d, d), |acc, (f, c)| acc.add(&exterior_action::<F>(f, k).scaled(c)))
    }
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::Precondition(format!("need 1 ≤ k ≤ n, got n = {n}, k = {k}")));
    }
    Ok(())
}

fn pi_part<F: Scalar>(n: usize, k: usize) -> NdElement<F> {
    (k..n).rev().fold(NdElement::one(n), |e, i| e.mul(&NdElement::basis(NdFunction::pi(n, i))))
}

fn one_minus_pi<F: Scalar>(n: usize, i: usize) -> NdElement<F> {
    NdElement::one(n).sub(&NdElement::basis(NdFunction::pi(n, i)))
}

/// `e_n^k = π_{n−1} ⋯ π_k · ∏ (1 − π_j)`, the second product along the
/// reduced word `1 (2 1) (3 2 1) ⋯ (k−1 ⋯ 1)` of the longest element of
/// `S_{1..k−1}`.
pub fn idempotent_e<F: Scalar>(n: usize, k: usize) -> Result<NdElement<F>> {
    check_k(n, k)?;
    let mut e = pi_part(n, k);
    for j in 1..k {
        for i in (1..=j).rev() {
            e = e.mul(&one_minus_pi(n, i));
        }
    }
    Ok(e)
}

/// `π_{n−1} ⋯ π_k (1 − π_{k−1}) ⋯ (1 − π_1)`, a single decreasing pass.
/// Idempotent only for `k ≤ 2` or `n ≤ 2`.
pub fn idempotent_e_single_pass<F: Scalar>(n: usize, k: usize) -> Result<NdElement<F>> {
    check_k(n, k)?;
    Ok((1..k).rev().fold(pi_part(n, k), |e, i| e.mul(&one_minus_pi(n, i))))
}

#[derive(Clone, Debug, Serialize)]
pub struct IdempotentReport {
    pub n: usize,
    pub k: usize,
    pub idempotent: bool,
    /// `e·π_i = e` for `i ≥ k` and `0` below.
    pub pi_rule: bool,
    pub principal_dim: usize,
    pub expected_dim: u128,
    /// Rank of `x ↦ e_{1..k}·x` on `e·NDFA_n`.
    pub intertwiner_rank: usize,
    /// Whether the single-pass product is idempotent too.
    pub single_pass_idempotent: bool,
    pub pass: bool,
}

pub fn idempotent_report<F: Scalar>(n: usize, k: usize) -> Result<IdempotentReport> {
    let e = idempotent_e::<F>(n, k)?;
    let idempotent = e.mul(&e) == e;
    let pi_rule = (1..n).all(|i| {
        let p = e.mul(&NdElement::basis(NdFunction::pi(n, i)));
        if i >= k {
            p == e
        } else {
            p.is_zero()
        }
    });
    let monoid = ndf_enumerate(n);
    let index: BTreeMap<NdFunction, usize> = monoid.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    let products: Vec<NdElement<F>> = monoid.iter().map(|f| e.mul(&NdElement::basis(f.clone()))).collect();
    let principal =
        SubspaceBasis::spanned_by(monoid.len(), &products.iter().map(|p| p.to_vector(&index)).collect::<Vec<_>>())?;
    // e_{1..k} is the first k-subset in lexicographic order
    let images: Vec<SparseVec<F>> = products.iter().map(|p| p.exterior(k).row(0).clone()).collect();
    let intertwiner_rank = rank(&images)?;
    let expected_dim = binomial(n, k);
    let single = idempotent_e_single_pass::<F>(n, k)?;
    let single_pass_idempotent = single.mul(&single) == single;
    let pass =
        idempotent && pi_rule && principal.dim() as u128 == expected_dim && intertwiner_rank as u128 == expected_dim;
    Ok(IdempotentReport {
        n,
        k,
        idempotent,
        pi_rule,
        principal_dim: principal.dim(),
        expected_dim,
        intertwiner_rank,
        single_pass_idempotent,
        pass,
    })
}

/// `δ: Λ^k → Λ^{k−1}`, `S ↦ Σ_i (−1)^{k−i} S ∖ {s_i}`.
pub fn border_delta<F: Scalar>(n: usize, k: usize) -> SparseMatrix<F> {
    let src = k_subsets(n, k);
    let dst = k_subsets(n, k.saturating_sub(1));
    if k == 0 {
        return SparseMatrix::zero(1, 0);
    }
    let rows = src
        .iter()
        .map(|&s| {
            let entries = s.iter().enumerate().map(|(i, x)| {
                let col = dst.iter().position(|&d| d == s.without(x)).expect("subset of size k - 1");
                let sign = if (k - 1 - i).is_multiple_of(2) { F::one() } else { -F::one() };
                (col, sign)
            });
            SparseVec::from_entries(dst.len(), entries)
        })
        .collect();
    SparseMatrix::from_rows(dst.len(), rows)
}

/// Generator names `[pibar1.., pi1..]` of `NDFA_n`.
pub fn ndfa_generator_names(n: usize) -> Vec<String> {
    (1..n).map(|i| format!("pibar{i}")).chain((1..n).map(|i| format!("pi{i}"))).collect()
}

pub fn ndfa_generators(n: usize) -> Vec<NdFunction> {
    (1..n).map(|i| NdFunction::pibar(n, i)).chain((1..n).map(|i| NdFunction::pi(n, i))).collect()
}

/// `P_n^k = Λ^k` as an `NDFA_n`-module.
pub fn ndfa_projective<F: Scalar>(n: usize, k: usize) -> Result<ModulePresentation<F>> {
    let gens = ndfa_generators(n).iter().map(|f| exterior_action(f, k)).collect();
    ModulePresentation::new(binomial(n, k) as usize, gens, ndfa_generator_names(n))
}

/// `S_n^k = P_n^k / ker δ`.
pub fn ndfa_simple<F: Scalar>(n: usize, k: usize) -> Result<ModulePresentation<F>> {
    let p = ndfa_projective::<F>(n, k)?;
    p.quotient(&kernel_of(&border_delta::<F>(n, k))?)
}

/// Row vectors `v` with `v·M = 0`.
pub fn kernel_of<F: Scalar>(m: &SparseMatrix<F>) -> Result<SubspaceBasis<F>> {
    let cols = m.transpose();
    let forms = SubspaceBasis::spanned_by(m.nrows(), cols.rows())?;
    Ok(forms.annihilator())
}

pub fn simple_dims(n: usize) -> Result<Vec<usize>> {
    (1..=n).map(|k| ndfa_simple::<crate::Rational>(n, k).map(|m| m.dim())).collect()
}

/// `dim Hom(P_n^k, P_n^l)`, rows `k`, columns `l`, both `1..=n`.
pub fn ndfa_cartan<F: Scalar>(n: usize) -> Result<Vec<Vec<usize>>> {
    let ps: Vec<ModulePresentation<F>> = (1..=n).map(|k| ndfa_projective(n, k)).collect::<Result<_>>()?;
    ps.iter().map(|a| ps.iter().map(|b| hom_space_dim(a, b)).collect()).collect()
}

/// Whether `δ` intertwines the action of every generator on `Λ^k → Λ^{k−1}`.
pub fn delta_intertwines<F: Scalar>(n: usize, k: usize) -> bool {
    let d = border_delta::<F>(n, k);
    ndfa_generators(n).iter().all(|f| exterior_action::<F>(f, k).mul(&d) == d.mul(&exterior_action(f, k - 1)))
}

/// `rank δ_k + rank δ_{k+1} = C(n, k)` for `0 ≤ k ≤ n`.
pub fn delta_sequence_exact<F: Scalar>(n: usize) -> Result<bool> {
    let ranks: Vec<usize> = (0..=n + 1)
        .map(|k| if k == 0 || k > n { Ok(0) } else { rank(border_delta::<F>(n, k).rows()) })
        .collect::<Result<_>>()?;
    Ok((0..=n).all(|k| (ranks[k] + ranks[k + 1]) as u128 == binomial(n, k)))
}

#[derive(Clone, Debug, Serialize)]
pub struct TemperleyLieb {
    pub n: usize,
    pub vacuous: bool,
    pub relations: Vec<RelationCheck>,
    pub dim: usize,
    pub catalan: u128,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientChain {
    pub n: usize,
    /// Closure of `{s_i, π_i}` on `⊕ Λ^k`.
    pub dim_s_pi: usize,
    pub ndfa_dim: u128,
    /// Closure of `{π_i}`.
    pub dim_pi: usize,
    pub catalan: u128,
    pub temperley_lieb: TemperleyLieb,
    pub pass: bool,
}

fn check<F: Scalar>(name: String, lhs: SparseMatrix<F>, rhs: SparseMatrix<F>) -> RelationCheck {
    RelationCheck { name, holds: lhs == rhs }
}

/// `e_i = π_i − π̄_i` on the exterior representation of `HS_n`.
pub fn temperley_lieb_check<F: Scalar>(n: usize) -> Result<TemperleyLieb> {
    let rep = heckesg_exterior::<F>(n)?;
    tl_from(&rep)
}

fn tl_from<F: Scalar>(rep: &crate::nd::HeckeExteriorRep<F>) -> Result<TemperleyLieb> {
    let n = rep.n;
    let d = rep.dim();
    let e: Vec<SparseMatrix<F>> = rep.pi.iter().zip(&rep.pibar).map(|(a, b)| a.sub(b)).collect();
    let mut relations = Vec::new();
    let zero = SparseMatrix::zero(d, d);
    for i in 0..e.len() {
        relations.push(check(format!("e{}^2 = 0", i + 1), e[i].mul(&e[i]), zero.clone()));
        for j in 0..e.len() {
            if i.abs_diff(j) == 1 {
                relations.push(check(
                    format!("e{} e{} e{} = -e{}", i + 1, j + 1, i + 1, i + 1),
                    e[i].mul(&e[j]).mul(&e[i]),
                    e[i].scaled(&-F::one()),
                ));
            } else if j > i + 1 {
                relations.push(check(
                    format!("e{} e{} = e{} e{}", i + 1, j + 1, j + 1, i + 1),
                    e[i].mul(&e[j]),
                    e[j].mul(&e[i]),
                ));
            }
        }
    }
    let dim = OperatorAlgebra::closure(d, &e, true)?.dim();
    let catalan = catalan(n);
    let pass = relations.iter().all(|r| r.holds) && dim as u128 == catalan;
    Ok(TemperleyLieb { n, vacuous: e.is_empty(), relations, dim, catalan, pass })
}

pub fn quotient_chain<F: Scalar>(n: usize) -> Result<QuotientChain> {
    let rep = heckesg_exterior::<F>(n)?;
    let d = rep.dim();
    let s_pi: Vec<SparseMatrix<F>> = rep.s.iter().chain(&rep.pi).cloned().collect();
    let dim_s_pi = OperatorAlgebra::closure(d, &s_pi, true)?.dim();
    let dim_pi = OperatorAlgebra::closure(d, &rep.pi, true)?.dim();
    let temperley_lieb = tl_from(&rep)?;
    let ndfa_dim = binomial(2 * n - 1, n - 1);
    let catalan = catalan(n);
    let pass = dim_s_pi as u128 == ndfa_dim && dim_pi as u128 == catalan && temperley_lieb.pass;
    Ok(QuotientChain { n, dim_s_pi, ndfa_dim, dim_pi, catalan, temperley_lieb, pass })
}
