use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{invert, SparseMatrix, SparseVec};
use crate::nd::grassmann_leq;
use crate::qsym::composition::Composition;
use crate::scalar::Scalar;

/// Bases of QSym (`M`, `F`, `X`) and NCSF (`S`, `Lambda`, `R`, `G`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    M,
    F,
    X,
    S,
    Lambda,
    R,
    G,
}

impl Basis {
    pub const ALL: [Basis; 7] = [Basis::M, Basis::F, Basis::X, Basis::S, Basis::Lambda, Basis::R, Basis::G];

    pub fn is_qsym(self) -> bool {
        matches!(self, Basis::M | Basis::F | Basis::X)
    }

    /// `F` on the QSym side, `R` on the NCSF side.
    pub fn canonical(self) -> Basis {
        if self.is_qsym() {
            Basis::F
        } else {
            Basis::R
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Basis::M => "M",
            Basis::F => "F",
            Basis::X => "X",
            Basis::S => "S",
            Basis::Lambda => "Lambda",
            Basis::R => "R",
            Basis::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "M" => Basis::M,
            "F" => Basis::F,
            "X" => Basis::X,
            "S" => Basis::S,
            "Lambda" | "L" | "Λ" => Basis::Lambda,
            "R" => Basis::R,
            "G" => Basis::G,
            _ => return Err(Error::Parse(format!("unknown basis {s:?}"))),
        })
    }
}

fn sign<F: Scalar>(k: usize) -> F {
    if k.is_multiple_of(2) {
        F::one()
    } else {
        -F::one()
    }
}

fn row_from<F: Scalar>(n: usize, entries: impl IntoIterator<Item = (Composition, F)>) -> SparseVec<F> {
    let comps = Composition::all(n);
    let index: BTreeMap<&Composition, usize> = comps.iter().enumerate().map(|(i, c)| (c, i)).collect();
    SparseVec::from_entries(comps.len(), entries.into_iter().map(|(c, v)| (index[&c], v)))
}

/// Row `i` is the expansion of the `i`-th composition of `n` (descent-set
/// order) in the canonical basis of its side.
pub fn to_canonical_matrix<F: Scalar>(basis: Basis, n: usize) -> Result<SparseMatrix<F>> {
    let comps = Composition::all(n);
    let size = comps.len();
    let rows: Vec<SparseVec<F>> = match basis {
        Basis::F | Basis::R => return Ok(SparseMatrix::identity(size)),
        Basis::M => comps
            .iter()
            .map(|i| row_from(n, i.refinements().into_iter().map(|j| (j.clone(), sign(j.len() - i.len())))))
            .collect(),
        Basis::S => comps.iter().map(|i| row_from(n, i.coarsenings().into_iter().map(|j| (j, F::one())))).collect(),
        Basis::Lambda => {
            comps.iter().map(|i| row_from(n, i.coarsenings().into_iter().map(|j| (j.complement(), F::one())))).collect()
        }
        Basis::X => {
            let lambda = to_canonical_matrix::<F>(Basis::Lambda, n)?;
            return Ok(invert(&lambda)?.transpose());
        }
        Basis::G => {
            let r_to_g = SparseMatrix::from_fn(size, |i| {
                let di = comps[i].descent_set();
                (0..size).filter(|&j| grassmann_leq(comps[j].descent_set(), di)).map(|j| (j, F::one())).collect()
            });
            return invert(&r_to_g);
        }
    };
    Ok(SparseMatrix::from_rows(size, rows))
}

/// Inverse of [`to_canonical_matrix`].
pub fn from_canonical_matrix<F: Scalar>(basis: Basis, n: usize) -> Result<SparseMatrix<F>> {
    invert(&to_canonical_matrix::<F>(basis, n)?)
}

/// A finite linear combination of basis elements `B_I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion<F: Scalar> {
    basis: Basis,
    terms: BTreeMap<Composition, F>,
}

impl<F: Scalar> Expansion<F> {
    pub fn zero(basis: Basis) -> Self {
        Expansion { basis, terms: BTreeMap::new() }
    }

    pub fn element(basis: Basis, label: Composition) -> Self {
        Self::from_terms(basis, [(label, F::one())])
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Composition, F)>) -> Self {
        let mut e = Self::zero(basis);
        for (c, v) in terms {
            e.add_term(c, v);
        }
        e
    }

    pub fn add_term(&mut self, label: Composition, v: F) {
        let entry = self.terms.entry(label.clone()).or_insert_with(F::zero);
        *entry = entry.clone() + v;
        if entry.is_zero() {
            self.terms.remove(&label);
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Composition, F> {
        &self.terms
    }

    pub fn coeff(&self, label: &Composition) -> F {
        self.terms.get(label).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common degree of all labels; `None` when empty or mixed.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|c| c.size());
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    fn same_side(&self, other: &Self) -> Result<()> {
        if self.basis.is_qsym() != other.basis.is_qsym() {
            return Err(Error::UnsupportedPath { from: self.basis.to_string(), to: other.basis.to_string() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let other = other.to_basis(self.basis)?;
        let mut out = self.clone();
        for (c, v) in other.terms {
            out.add_term(c, v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scaled(&-F::one()))
    }

    pub fn scaled(&self, c: &F) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(k, v)| (k.clone(), v.clone() * c.clone())))
    }

    /// Same element, written in `target`.
    pub fn to_basis(&self, target: Basis) -> Result<Self> {
        if target == self.basis {
            return Ok(self.clone());
        }
        if target.is_qsym() != self.basis.is_qsym() {
            return Err(Error::UnsupportedPath { from: self.basis.to_string(), to: target.to_string() });
        }
        let mut by_degree: BTreeMap<usize, Vec<(&Composition, &F)>> = BTreeMap::new();
        for (c, v) in &self.terms {
            by_degree.entry(c.size()).or_default().push((c, v));
        }
        let mut out = Self::zero(target);
        for (n, terms) in by_degree {
            let comps = Composition::all(n);
            let index: BTreeMap<&Composition, usize> = comps.iter().enumerate().map(|(i, c)| (c, i)).collect();
            let v = SparseVec::from_entries(comps.len(), terms.into_iter().map(|(c, x)| (index[c], x.clone())));
            let to = to_canonical_matrix::<F>(self.basis, n)?;
            let from = from_canonical_matrix::<F>(target, n)?;
            let w = from.apply(&to.apply(&v));
            for (i, x) in w.iter() {
                out.add_term(comps[i].clone(), x.clone());
            }
        }
        Ok(out)
    }

    /// Product, returned in the basis of `self`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_side(other)?;
        let canon = self.basis.canonical();
        let (a, b) = (self.to_basis(canon)?, other.to_basis(canon)?);
        let mut out = Self::zero(canon);
        for (i, x) in &a.terms {
            for (j, y) in &b.terms {
                let c = x.clone() * y.clone();
                let prod = if canon == Basis::R { ribbon_product(i, j) } else { shuffle_product(i, j) };
                for (k, m) in prod {
                    out.add_term(k, c.clone() * F::from_int(m));
                }
            }
        }
        out.to_basis(self.basis)
    }

    /// Coproduct, with both tensor factors in the basis of `self`.
    pub fn coproduct(&self) -> Result<Tensor<F>> {
        let mut out = Tensor::zero(self.basis.canonical());
        match self.basis.canonical() {
            Basis::F => {
                for (i, x) in &self.to_basis(Basis::F)?.terms {
                    for k in 0..=i.size() {
                        let (l, r) = i.split_at(k);
                        out.add_term(l, r, x.clone());
                    }
                }
            }
            _ => {
                // S^I is multiplicative with ΔS^n = Σ S^k ⊗ S^{n−k}.
                out.basis = Basis::S;
                for (i, x) in &self.to_basis(Basis::S)?.terms {
                    let mut acc: BTreeMap<(Composition, Composition), F> =
                        [((Composition::empty(), Composition::empty()), x.clone())].into();
                    for &p in i.parts() {
                        let mut next = BTreeMap::new();
                        for ((l, r), v) in &acc {
                            for a in 0..=p {
                                let la = if a == 0 { l.clone() } else { l.concat(&Composition::single(a)) };
                                let rb = if a == p { r.clone() } else { r.concat(&Composition::single(p - a)) };
                                let e = next.entry((la, rb)).or_insert_with(F::zero);
                                *e = e.clone() + v.clone();
                            }
                        }
                        acc = next;
                    }
                    for ((l, r), v) in acc {
                        out.add_term(l, r, v);
                    }
                }
            }
        }
        out.to_basis(self.basis)
    }
}

/// `R_I · R_J = R_{I·J} + R_{I▹J}`.
pub fn ribbon_product(i: &Composition, j: &Composition) -> Vec<(Composition, i64)> {
    let mut out = vec![(i.concat(j), 1)];
    if let Some(k) = i.near_concat(j) {
        out.push((k, 1));
    }
    out
}

/// A permutation (one-line, values `0..n`) whose descent composition is `i`:
/// each block is increasing, blocks decrease.
fn word_with_descents(i: &Composition) -> Vec<usize> {
    let n = i.size();
    let mut w = Vec::with_capacity(n);
    let mut top = n;
    for &p in i.parts() {
        w.extend(top - p..top);
        top -= p;
    }
    w
}

fn descent_composition(w: &[usize]) -> Composition {
    let d = crate::coxeter::DescentSet::from_elems((1..w.len()).filter(|&k| w[k - 1] > w[k]));
    Composition::from_set(d, w.len())
}

/// `F_I · F_J` by shuffling words with descent compositions `I` and `J`.
pub fn shuffle_product(i: &Composition, j: &Composition) -> Vec<(Composition, i64)> {
    let (m, n) = (i.size(), j.size());
    let u = word_with_descents(i);
    let v: Vec<usize> = word_with_descents(j).into_iter().map(|x| x + m).collect();
    let mut counts: BTreeMap<Composition, i64> = BTreeMap::new();
    let mut w = Vec::with_capacity(m + n);
    fn rec(u: &[usize], v: &[usize], w: &mut Vec<usize>, counts: &mut BTreeMap<Composition, i64>) {
        if u.is_empty() && v.is_empty() {
            *counts.entry(descent_composition(w)).or_default() += 1;
            return;
        }
        if let Some((&a, rest)) = u.split_first() {
            w.push(a);
            rec(rest, v, w, counts);
            w.pop();
        }
        if let Some((&b, rest)) = v.split_first() {
            w.push(b);
            rec(u, rest, w, counts);
            w.pop();
        }
    }
    rec(&u, &v, &mut w, &mut counts);
    counts.into_iter().collect()
}

/// Quasi-shuffle `M_I · M_J`.
pub fn quasi_shuffle(i: &[usize], j: &[usize]) -> Vec<Vec<usize>> {
    match (i.split_first(), j.split_first()) {
        (None, _) => vec![j.to_vec()],
        (_, None) => vec![i.to_vec()],
        (Some((&a, ri)), Some((&b, rj))) => {
            let mut out = Vec::new();
            for (head, x, y) in [(a, ri, j), (b, i, rj), (a + b, ri, rj)] {
                for mut tail in quasi_shuffle(x, y) {
                    tail.insert(0, head);
                    out.push(tail);
                }
            }
            out
        }
    }
}

/// Element of `A ⊗ A` with both factors in one basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor<F: Scalar> {
    basis: Basis,
    terms: BTreeMap<(Composition, Composition), F>,
}

impl<F: Scalar> Tensor<F> {
    pub fn zero(basis: Basis) -> Self {
        Tensor { basis, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, l: Composition, r: Composition, v: F) {
        let key = (l, r);
        let e = self.terms.entry(key.clone()).or_insert_with(F::zero);
        *e = e.clone() + v;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<(Composition, Composition), F> {
        &self.terms
    }

    pub fn coeff(&self, l: &Composition, r: &Composition) -> F {
        self.terms.get(&(l.clone(), r.clone())).cloned().unwrap_or_else(F::zero)
    }

    pub fn to_basis(&self, target: Basis) -> Result<Self> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let mut out = Tensor::zero(target);
        for ((l, r), v) in &self.terms {
            let a = Expansion::<F>::element(self.basis, l.clone()).to_basis(target)?;
            let b = Expansion::<F>::element(self.basis, r.clone()).to_basis(target)?;
            for (x, p) in &a.terms {
                for (y, q) in &b.terms {
                    out.add_term(x.clone(), y.clone(), v.clone() * p.clone() * q.clone());
                }
            }
        }
        Ok(out)
    }

    /// The part with left factor of degree `m`.
    pub fn component(&self, m: usize) -> Self {
        Tensor {
            basis: self.basis,
            terms: self.terms.iter().filter(|((l, _), _)| l.size() == m).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }
}

/// `⟨x, y⟩` for `x` in NCSF and `y` in QSym, with `⟨R_I, F_J⟩ = δ`.
pub fn pairing<F: Scalar>(x: &Expansion<F>, y: &Expansion<F>) -> Result<F> {
    if x.basis.is_qsym() || !y.basis.is_qsym() {
        return Err(Error::UnsupportedPath { from: x.basis.to_string(), to: y.basis.to_string() });
    }
    if let (Some(a), Some(b)) = (x.degree(), y.degree()) {
        if a != b {
            return Err(Error::DegreeMismatch(a, b));
        }
    }
    let (r, f) = (x.to_basis(Basis::R)?, y.to_basis(Basis::F)?);
    Ok(r.terms.iter().map(|(c, v)| v.clone() * f.coeff(c)).fold(F::zero(), |a, b| a + b))
}

#[derive(Serialize)]
struct TermJson {
    label: Vec<usize>,
    coeff: String,
}

#[derive(Serialize)]
struct ExpansionJson {
    basis: String,
    degree: Option<usize>,
    terms: Vec<TermJson>,
}

impl<F: Scalar> Serialize for Expansion<F> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExpansionJson {
            basis: self.basis.to_string(),
            degree: self.degree(),
            terms: self
                .terms
                .iter()
                .map(|(c, v)| TermJson { label: c.parts().to_vec(), coeff: v.to_exact_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<F: Scalar> fmt::Display for Expansion<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, v)| if v.is_one() { format!("{}{c}", self.basis) } else { format!("{v}*{}{c}", self.basis) })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
