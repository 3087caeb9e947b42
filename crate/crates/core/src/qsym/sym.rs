use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{solve_in_basis, SparseVec};
use crate::qsym::basis::{Basis, Expansion};
use crate::qsym::composition::Composition;
use crate::scalar::Scalar;

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Precondition(format!("partition {parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Distinct rearrangements as compositions.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let n = self.size();
        Composition::all(n).into_iter().filter(|c| c.to_partition() == self.0).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Partitions of `n`, reverse lexicographic (`[n]` first).
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A symmetric function in the monomial basis `m_λ`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymFunction<F: Scalar> {
    terms: BTreeMap<Partition, F>,
}

impl<F: Scalar> SymFunction<F> {
    pub fn zero() -> Self {
        SymFunction { terms: BTreeMap::new() }
    }

    pub fn monomial(l: Partition) -> Self {
        let mut s = Self::zero();
        s.add_term(l, F::one());
        s
    }

    pub fn add_term(&mut self, l: Partition, v: F) {
        let e = self.terms.entry(l.clone()).or_insert_with(F::zero);
        *e = e.clone() + v;
        if e.is_zero() {
            self.terms.remove(&l);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, F> {
        &self.terms
    }

    pub fn coeff(&self, l: &Partition) -> F {
        self.terms.get(l).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, v) in &other.terms {
            out.add_term(l.clone(), v.clone());
        }
        out
    }

    pub fn scaled(&self, c: &F) -> Self {
        let mut out = Self::zero();
        for (l, v) in &self.terms {
            out.add_term(l.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn to_qsym(&self) -> Expansion<F> {
        let mut e = Expansion::zero(Basis::M);
        for (l, v) in &self.terms {
            for c in l.rearrangements() {
                e.add_term(c, v.clone());
            }
        }
        e
    }

    /// Fails unless the coefficient of `M_I` depends only on the sorted `I`.
    pub fn from_qsym(x: &Expansion<F>) -> Result<Self> {
        let m = x.to_basis(Basis::M)?;
        let mut out = Self::zero();
        for (c, v) in m.terms() {
            let l = Partition(c.to_partition());
            if l.rearrangements().iter().any(|r| m.coeff(r) != *v) {
                return Err(Error::Precondition(format!("not symmetric at M{c}")));
            }
            if l.0 == c.parts() {
                out.add_term(l, v.clone());
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::from_qsym(&self.to_qsym().mul(&other.to_qsym())?)
    }

    fn product_of(parts: &[usize], single: impl Fn(usize) -> Expansion<F>) -> Result<Self> {
        let mut acc = Expansion::element(Basis::M, Composition::empty());
        for &p in parts {
            acc = acc.mul(&single(p))?;
        }
        Self::from_qsym(&acc)
    }

    /// `h_λ`, with `h_n = Σ_{I ⊨ n} M_I`.
    pub fn h(parts: &[usize]) -> Result<Self> {
        Self::product_of(parts, |p| {
            Expansion::from_terms(Basis::M, Composition::all(p).into_iter().map(|c| (c, F::one())))
        })
    }

    /// `e_λ`, with `e_n = M_{1^n}`.
    pub fn e(parts: &[usize]) -> Result<Self> {
        Self::product_of(parts, |p| Expansion::element(Basis::M, Composition::new(vec![1; p]).expect("positive parts")))
    }

    /// `p_λ`, with `p_n = M_{(n)}`.
    pub fn p(parts: &[usize]) -> Result<Self> {
        Self::product_of(parts, |p| Expansion::element(Basis::M, Composition::single(p)))
    }

    /// Commutative image of an NCSF element: `S^I ↦ h_I`.
    pub fn abelianize(x: &Expansion<F>) -> Result<Self> {
        let s = x.to_basis(Basis::S)?;
        let mut out = Self::zero();
        for (c, v) in s.terms() {
            out = out.add(&Self::h(c.parts())?.scaled(v));
        }
        Ok(out)
    }

    /// Ribbon Schur function, the commutative image of `R_K`.
    pub fn ribbon(k: &Composition) -> Result<Self> {
        Self::abelianize(&Expansion::element(Basis::R, k.clone()))
    }

    /// Coefficients in the `h_λ` basis, degree `n`.
    pub fn h_coefficients(&self, n: usize) -> Result<BTreeMap<Partition, F>> {
        let parts = partitions(n);
        let index: BTreeMap<&Partition, usize> = parts.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let vec_of = |f: &Self| -> Result<SparseVec<F>> {
            let mut entries = Vec::new();
            for (l, v) in &f.terms {
                let i = index.get(l).ok_or(Error::DegreeMismatch(l.size(), n))?;
                entries.push((*i, v.clone()));
            }
            Ok(SparseVec::from_entries(parts.len(), entries))
        };
        let rows = parts.iter().map(|l| vec_of(&Self::h(l.parts())?)).collect::<Result<Vec<_>>>()?;
        let coords = solve_in_basis(&rows, &[vec_of(self)?])?;
        Ok(coords[0].iter().map(|(i, v)| (parts[i].clone(), v.clone())).collect())
    }

    /// Hall inner product, `⟨h_λ, m_μ⟩ = δ`.
    pub fn hall(&self, other: &Self) -> Result<F> {
        let Some(n) = self.terms.keys().next().map(Partition::size) else {
            return Ok(F::zero());
        };
        let h = self.h_coefficients(n)?;
        Ok(h.iter().map(|(l, v)| v.clone() * other.coeff(l)).fold(F::zero(), |a, b| a + b))
    }

    /// Value of the `S_n` character with Frobenius image `self` on cycle type `rho`.
    pub fn character(&self, rho: &[usize]) -> Result<F> {
        self.hall(&Self::p(rho)?)
    }
}

#[derive(Serialize)]
struct SymTermJson {
    label: Vec<usize>,
    coeff: String,
}

#[derive(Serialize)]
struct SymJson {
    basis: &'static str,
    degree: Option<usize>,
    terms: Vec<SymTermJson>,
}

impl<F: Scalar> Serialize for SymFunction<F> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next();
        let degree = first.filter(|&d| sizes.all(|x| x == d));
        SymJson {
            basis: "m",
            degree,
            terms: self
                .terms
                .iter()
                .map(|(l, v)| SymTermJson { label: l.0.clone(), coeff: v.to_exact_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<F: Scalar> fmt::Display for SymFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(l, v)| if v.is_one() { format!("m{l}") } else { format!("{v}*m{l}") }).collect();
        f.write_str(&parts.join(" + "))
    }
}
