use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coxeter::{DescentSet, Element};
use crate::error::{Error, Result};
use crate::hecke::HeckeGroupAlgebra;
use crate::linalg::{hom_space_dim, ModulePresentation, OperatorAlgebra, SparseMatrix, SparseVec};
use crate::nd::{
    ndfa_generator_names, ndfa_generators, ndfa_projective, ndfa_simple, ndpf_projective, ndpfa_generator_names,
    ndpfa_generators, pi_simple, ExteriorBasis,
};
use crate::scalar::Scalar;

/// Towers of algebras with an inclusion `A_m ⊗ A_n → A_{m+n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TowerKind {
    H0,
    HS,
    #[serde(rename = "HS*")]
    HSAdjoint,
    NDFA,
    NDPFA,
}

impl TowerKind {
    pub const ALL: [TowerKind; 5] =
        [TowerKind::H0, TowerKind::HS, TowerKind::HSAdjoint, TowerKind::NDFA, TowerKind::NDPFA];
}

impl fmt::Display for TowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TowerKind::H0 => "H0",
            TowerKind::HS => "HS",
            TowerKind::HSAdjoint => "HS*",
            TowerKind::NDFA => "NDFA",
            TowerKind::NDPFA => "NDPFA",
        })
    }
}

impl FromStr for TowerKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "H0" | "H(0)" => TowerKind::H0,
            "HS" => TowerKind::HS,
            "HS*" | "HS-ADJOINT" | "HSADJ" => TowerKind::HSAdjoint,
            "NDFA" => TowerKind::NDFA,
            "NDPFA" => TowerKind::NDPFA,
            _ => return Err(Error::Parse(format!("unknown tower {s:?}"))),
        })
    }
}

/// Index of a simple (and of its projective cover).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Set(DescentSet),
    Degree(usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Set(s) => write!(f, "{s}"),
            Label::Degree(k) => write!(f, "{k}"),
        }
    }
}

/// One algebra of a tower: its simples, their projective covers and a
/// faithful operator image.
#[derive(Clone, Debug)]
pub struct Level<F: Scalar> {
    pub kind: TowerKind,
    pub n: usize,
    pub labels: Vec<Label>,
    pub names: Vec<String>,
    pub projectives: Vec<ModulePresentation<F>>,
    pub simples: Vec<ModulePresentation<F>>,
    /// `dim End(S)`.
    pub end_dims: Vec<usize>,
    pub algebra: OperatorAlgebra<F>,
}

/// `x ← 3x² − 2x³` until idempotent.
pub fn lift_idempotent<F: Scalar>(x: &SparseMatrix<F>) -> Result<SparseMatrix<F>> {
    let mut e = x.clone();
    for _ in 0..64 {
        let e2 = e.mul(&e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = e2.mul(&e);
        e = e2.scaled(&F::from_int(3)).sub(&e3.scaled(&F::from_int(2)));
    }
    Err(Error::Precondition("idempotent lifting did not converge".into()))
}

impl<F: Scalar> Level<F> {
    pub fn new(kind: TowerKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("levels start at n = 1".into()));
        }
        let sets = || DescentSet::all(n - 1).into_iter().map(Label::Set).collect::<Vec<_>>();
        let (labels, names, projectives, simples, algebra) = match kind {
            TowerKind::HS => {
                let h = HeckeGroupAlgebra::<F>::symmetric(n)?;
                let labels = sets();
                let mut ps = Vec::new();
                let mut ss = Vec::new();
                for l in &labels {
                    let Label::Set(i) = *l else { unreachable!() };
                    ps.push(h.projective(i)?.module);
                    ss.push(h.simple(i)?.module);
                }
                (labels, h.generator_names(), ps, ss, h.closure()?)
            }
            TowerKind::HSAdjoint => {
                let h = HeckeGroupAlgebra::<F>::symmetric(n)?;
                let labels = sets();
                let mut ps = Vec::new();
                let mut ss = Vec::new();
                for l in &labels {
                    let Label::Set(i) = *l else { unreachable!() };
                    let (_, p) = h.adjoint_projective(i)?;
                    ss.push(p.top()?);
                    ps.push(p);
                }
                let algebra = OperatorAlgebra::closure(h.n(), &h.adjoint_generators(), true)?;
                (labels, h.generator_names(), ps, ss, algebra)
            }
            TowerKind::H0 => {
                let h = HeckeGroupAlgebra::<F>::symmetric(n)?;
                let pis: Vec<SparseMatrix<F>> = (1..n).map(|i| h.pi(i).clone()).collect();
                let names: Vec<String> = (1..n).map(|i| format!("pi{i}")).collect();
                let regular = ModulePresentation::new(h.n(), pis.clone(), names.clone())?;
                let id = SparseMatrix::identity(h.n());
                let unit = SparseVec::unit(h.n(), Element(0).index());
                let labels = sets();
                let mut ps = Vec::new();
                let mut ss = Vec::new();
                for l in &labels {
                    let Label::Set(i) = *l else { unreachable!() };
                    let x = (1..n).fold(id.clone(), |acc, s| {
                        acc.mul(&if i.contains(s) { id.sub(&pis[s - 1]) } else { pis[s - 1].clone() })
                    });
                    let e = lift_idempotent(&x)?;
                    let span = regular.generate(&[e.apply(&unit)])?;
                    ps.push(regular.submodule(&span)?);
                    ss.push(pi_simple(n, i));
                }
                (labels, names, ps, ss, OperatorAlgebra::closure(h.n(), &pis, true)?)
            }
            TowerKind::NDPFA => {
                let labels = sets();
                let mut ps = Vec::new();
                let mut ss = Vec::new();
                for l in &labels {
                    let Label::Set(i) = *l else { unreachable!() };
                    ps.push(ndpf_projective(n, i)?.1);
                    ss.push(pi_simple(n, i));
                }
                let d = ExteriorBasis::new(n).dim();
                (labels, ndpfa_generator_names(n), ps, ss, OperatorAlgebra::closure(d, &ndpfa_generators(n), true)?)
            }
            TowerKind::NDFA => {
                let labels: Vec<Label> = (1..=n).map(Label::Degree).collect();
                let ps = (1..=n).map(|k| ndfa_projective(n, k)).collect::<Result<Vec<_>>>()?;
                let ss = (1..=n).map(|k| ndfa_simple(n, k)).collect::<Result<Vec<_>>>()?;
                let basis = ExteriorBasis::new(n);
                let gens: Vec<SparseMatrix<F>> = ndfa_generators(n).iter().map(|f| basis.operator(f)).collect();
                (labels, ndfa_generator_names(n), ps, ss, OperatorAlgebra::closure(basis.dim(), &gens, true)?)
            }
        };
        let end_dims = simples.iter().map(|s| hom_space_dim(s, s)).collect::<Result<Vec<_>>>()?;
        Ok(Level { kind, n, labels, names, projectives, simples, end_dims, algebra })
    }

    pub fn index_of(&self, l: Label) -> Option<usize> {
        self.labels.iter().position(|&x| x == l)
    }

    /// `[P_K : S_J]`, rows `K`.
    pub fn cartan(&self) -> Result<Vec<Vec<usize>>> {
        self.projectives.iter().map(|p| self.composition_factors(p)).collect()
    }

    /// `[M : S_K] = dim Hom(P_K, M) / dim End(S_K)`.
    pub fn composition_factors(&self, m: &ModulePresentation<F>) -> Result<Vec<usize>> {
        self.projectives.iter().zip(&self.end_dims).map(|(p, e)| Ok(hom_space_dim(p, m)? / e)).collect()
    }

    /// `dim Hom(M, S_K) / dim End(S_K)`: the multiplicity of `P_K` when `M`
    /// is projective.
    pub fn top_multiplicities(&self, m: &ModulePresentation<F>) -> Result<Vec<usize>> {
        self.simples.iter().zip(&self.end_dims).map(|(s, e)| Ok(hom_space_dim(m, s)? / e)).collect()
    }
}

/// Where the generators of `A_m ⊗ A_n` go in `A_{m+n}`.
pub fn tower_embedding(kind: TowerKind, m: usize, n: usize) -> Vec<usize> {
    let r = m + n - 1;
    match kind {
        TowerKind::H0 | TowerKind::NDPFA => (1..m).map(|i| i - 1).chain((1..n).map(|i| m + i - 1)).collect(),
        TowerKind::HS | TowerKind::HSAdjoint | TowerKind::NDFA => (1..m)
            .map(|i| i - 1)
            .chain((1..m).map(|i| r + i - 1))
            .chain((1..n).map(|i| m + i - 1))
            .chain((1..n).map(|i| r + m + i - 1))
            .collect(),
    }
}
