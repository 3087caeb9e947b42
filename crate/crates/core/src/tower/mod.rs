//! Induction and restriction along towers `A_m ⊗ A_n → A_{m+n}`, compared
//! with the products and coproducts of QSym, NCSF and Sym.

mod level;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coxeter::DescentSet;
use crate::error::{Error, Result};
use crate::hecke::HeckeGroupAlgebra;
use crate::linalg::{hom_space_dim, module_induce};
use crate::nd::ndpf_cartan;
use crate::qsym::{from_canonical_matrix, partitions, Basis, Composition, Expansion, SymFunction, Tensor};
use crate::scalar::Scalar;

pub use level::{lift_idempotent, tower_embedding, Label, Level, TowerKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Operation {
    InduceProjective,
    InduceSimple,
    RestrictProjective,
    RestrictSimple,
}

/// A module predicted to occur: a projective cover or a simple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Piece {
    P(Label),
    S(Label),
}

/// Multiplicities of `X ⊗ Y` summands in a restriction.
type PieceCounts = BTreeMap<(Piece, Piece), usize>;

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub tower: TowerKind,
    pub operation: Operation,
    pub m: usize,
    pub n: usize,
    pub input: String,
    /// Which rule produced the prediction.
    pub rule: String,
    pub dim: usize,
    pub composition: BTreeMap<String, usize>,
    /// Multiplicities of projective summands, for modules built from projectives.
    pub top: Option<BTreeMap<String, usize>>,
    /// `Σ top · dim P = dim`.
    pub projective: Option<bool>,
    pub predicted_dim: Option<usize>,
    pub predicted_composition: Option<BTreeMap<String, usize>>,
    pub predicted_top: Option<BTreeMap<String, usize>>,
    /// Counted by the acceptance criterion.
    pub asserted: bool,
    pub pass: Option<bool>,
}

/// All levels `1..=max` of a tower.
pub struct Tower<F: Scalar> {
    pub kind: TowerKind,
    levels: BTreeMap<usize, Level<F>>,
}

fn set_of(l: Label) -> DescentSet {
    match l {
        Label::Set(s) => s,
        Label::Degree(_) => unreachable!("set-labelled tower"),
    }
}

fn comp_of(l: Label, n: usize) -> Composition {
    Composition::from_set(set_of(l), n)
}

fn label_of(c: &Composition) -> Label {
    Label::Set(c.descent_set())
}

fn count<K: Ord>(it: impl IntoIterator<Item = (K, usize)>) -> BTreeMap<K, usize> {
    let mut out = BTreeMap::new();
    for (k, v) in it {
        *out.entry(k).or_insert(0) += v;
    }
    out.retain(|_, v| *v > 0);
    out
}

fn nonneg<F: Scalar>(v: &F) -> Result<usize> {
    v.to_int()
        .filter(|&x| x >= 0)
        .map(|x| x as usize)
        .ok_or_else(|| Error::Precondition(format!("coefficient {v} is not a multiplicity")))
}

fn expansion_pieces<F: Scalar>(
    x: &Expansion<F>,
    piece: impl Fn(&Composition) -> Piece,
) -> Result<BTreeMap<Piece, usize>> {
    x.terms().iter().map(|(c, v)| Ok((piece(c), nonneg(v)?))).collect::<Result<Vec<_>>>().map(count)
}

fn tensor_pieces<F: Scalar>(
    t: &Tensor<F>,
    m: usize,
    piece: impl Fn(&Composition) -> Piece,
) -> Result<BTreeMap<(Piece, Piece), usize>> {
    t.component(m)
        .terms()
        .iter()
        .map(|((a, b), v)| Ok(((piece(a), piece(b)), nonneg(v)?)))
        .collect::<Result<Vec<_>>>()
        .map(count)
}

/// A composition of `n` with `k` parts.
fn composition_of_length(n: usize, k: usize) -> Composition {
    let mut parts = vec![1; k];
    parts[0] = n + 1 - k;
    Composition::new(parts).expect("1 <= k <= n")
}

/// A partition of `n` with `k` parts.
fn partition_of_length(n: usize, k: usize) -> Vec<usize> {
    composition_of_length(n, k).parts().to_vec()
}

impl<F: Scalar> Tower<F> {
    pub fn new(kind: TowerKind, max: usize) -> Result<Self> {
        let levels = (1..=max).map(|n| Ok((n, Level::new(kind, n)?))).collect::<Result<_>>()?;
        Ok(Tower { kind, levels })
    }

    pub fn level(&self, n: usize) -> Result<&Level<F>> {
        self.levels.get(&n).ok_or_else(|| Error::Precondition(format!("level {n} not built")))
    }

    /// `[piece : S_K]` from the Cartan matrix.
    fn piece_composition(&self, n: usize, p: Piece, cartan: &[Vec<usize>]) -> Result<Vec<usize>> {
        let lv = self.level(n)?;
        let mut out = vec![0; lv.labels.len()];
        match p {
            Piece::P(l) => out.clone_from(&cartan[lv.index_of(l).expect("label")]),
            Piece::S(l) => out[lv.index_of(l).expect("label")] = 1,
        }
        Ok(out)
    }

    fn single_prediction(
        &self,
        op: Operation,
        a: Label,
        b: Label,
        m: usize,
        n: usize,
    ) -> Result<Vec<(String, BTreeMap<Piece, usize>)>> {
        let e = |basis, c| Expansion::<F>::element(basis, c);
        let prod = |basis: Basis, x: Composition, y: Composition, piece: &dyn Fn(&Composition) -> Piece| {
            expansion_pieces(&e(basis, x).mul(&e(basis, y))?, piece)
        };
        Ok(match (self.kind, op) {
            (TowerKind::HS, Operation::InduceProjective) => {
                vec![("F product".into(), prod(Basis::F, comp_of(a, m), comp_of(b, n), &|c| Piece::P(label_of(c)))?)]
            }
            (TowerKind::HS, Operation::InduceSimple) => {
                vec![("M product".into(), prod(Basis::M, comp_of(a, m), comp_of(b, n), &|c| Piece::S(label_of(c)))?)]
            }
            (TowerKind::H0 | TowerKind::NDPFA, Operation::InduceProjective) => {
                vec![("R product".into(), prod(Basis::R, comp_of(a, m), comp_of(b, n), &|c| Piece::P(label_of(c)))?)]
            }
            (TowerKind::H0, Operation::InduceSimple) => {
                vec![("F product".into(), prod(Basis::F, comp_of(a, m), comp_of(b, n), &|c| Piece::S(label_of(c)))?)]
            }
            (TowerKind::NDPFA, Operation::InduceSimple) => {
                vec![("G product".into(), prod(Basis::G, comp_of(a, m), comp_of(b, n), &|c| Piece::S(label_of(c)))?)]
            }
            (TowerKind::HSAdjoint, Operation::InduceProjective) => vec![(
                "F product on complements".into(),
                prod(Basis::F, comp_of(a, m).complement(), comp_of(b, n).complement(), &|c| {
                    Piece::P(label_of(&c.complement()))
                })?,
            )],
            (TowerKind::HSAdjoint, Operation::InduceSimple) => {
                vec![("X product".into(), prod(Basis::X, comp_of(a, m), comp_of(b, n), &|c| Piece::S(label_of(c)))?)]
            }
            (TowerKind::NDFA, Operation::InduceProjective) => {
                let (Label::Degree(k1), Label::Degree(k2)) = (a, b) else { unreachable!() };
                vec![(
                    "R product".into(),
                    prod(Basis::R, composition_of_length(m, k1), composition_of_length(n, k2), &|c| {
                        Piece::P(Label::Degree(c.len()))
                    })?,
                )]
            }
            (TowerKind::NDFA, Operation::InduceSimple) => {
                let (Label::Degree(k1), Label::Degree(k2)) = (a, b) else { unreachable!() };
                let h = SymFunction::<F>::h(&partition_of_length(m, k1))?
                    .mul(&SymFunction::h(&partition_of_length(n, k2))?)?;
                let coeffs = h.h_coefficients(m + n)?;
                let pieces = coeffs
                    .iter()
                    .map(|(l, v)| Ok((Piece::S(Label::Degree(l.len())), nonneg(v)?)))
                    .collect::<Result<Vec<_>>>()?;
                vec![("h product".into(), count(pieces))]
            }
            _ => return Err(Error::Precondition(format!("{op:?} is not an induction"))),
        })
    }

    fn restriction_prediction(
        &self,
        op: Operation,
        k: Label,
        m: usize,
        n: usize,
    ) -> Result<Vec<(String, bool, Option<PieceCounts>)>> {
        let big = m + n;
        let e = |basis, c| Expansion::<F>::element(basis, c);
        let set_p = |c: &Composition| Piece::P(label_of(c));
        let set_s = |c: &Composition| Piece::S(label_of(c));
        let comp_p = |c: &Composition| Piece::P(label_of(&c.complement()));
        let comp_s = |c: &Composition| Piece::S(label_of(&c.complement()));
        Ok(match (self.kind, op) {
            (TowerKind::HS, Operation::RestrictProjective) => vec![(
                "Lambda coproduct on complements".into(),
                true,
                Some(tensor_pieces(&e(Basis::Lambda, comp_of(k, big).complement()).coproduct()?, m, comp_p)?),
            )],
            (TowerKind::HS, Operation::RestrictSimple) => {
                vec![(
                    "R coproduct".into(),
                    true,
                    Some(tensor_pieces(&e(Basis::R, comp_of(k, big)).coproduct()?, m, set_s)?),
                )]
            }
            (TowerKind::H0, Operation::RestrictProjective) => {
                vec![(
                    "R coproduct".into(),
                    true,
                    Some(tensor_pieces(&e(Basis::R, comp_of(k, big)).coproduct()?, m, set_p)?),
                )]
            }
            (TowerKind::H0 | TowerKind::NDPFA, Operation::RestrictSimple) => {
                vec![(
                    "F coproduct".into(),
                    true,
                    Some(tensor_pieces(&e(Basis::F, comp_of(k, big)).coproduct()?, m, set_s)?),
                )]
            }
            (TowerKind::NDPFA, Operation::RestrictProjective) => vec![("no prediction".into(), false, None)],
            (TowerKind::HSAdjoint, Operation::RestrictProjective) => vec![(
                "S coproduct on complements".into(),
                true,
                Some(tensor_pieces(&e(Basis::S, comp_of(k, big).complement()).coproduct()?, m, comp_p)?),
            )],
            (TowerKind::HSAdjoint, Operation::RestrictSimple) => vec![(
                "R coproduct on complements".into(),
                true,
                Some(tensor_pieces(&e(Basis::R, comp_of(k, big).complement()).coproduct()?, m, comp_s)?),
            )],
            (TowerKind::NDFA, Operation::RestrictProjective) => {
                let Label::Degree(k) = k else { unreachable!() };
                let literal = count(
                    (1..=m)
                        .flat_map(|k1| (1..=n).map(move |k2| (k1, k2)))
                        .filter(|&(k1, k2)| k1 + k2 == k)
                        .map(|(k1, k2)| ((Piece::P(Label::Degree(k1)), Piece::P(Label::Degree(k2))), 1)),
                );
                // Λ^0 is the trivial module, isomorphic to S^1.
                let lam = |j: usize| if j == 0 { Piece::S(Label::Degree(1)) } else { Piece::P(Label::Degree(j)) };
                let full = count(
                    (0..=m)
                        .flat_map(|k1| (0..=n).map(move |k2| (k1, k2)))
                        .filter(|&(k1, k2)| k1 + k2 == k)
                        .map(|(k1, k2)| ((lam(k1), lam(k2)), 1)),
                );
                vec![
                    ("P restriction rule, 1 <= k_i <= n_i".into(), false, Some(literal)),
                    ("Lambda^k(V + W), k_i >= 0".into(), true, Some(full)),
                ]
            }
            (TowerKind::NDFA, Operation::RestrictSimple) => {
                let Label::Degree(k) = k else { unreachable!() };
                let rule = count(
                    (1..=m)
                        .flat_map(|k1| (1..=n).map(move |k2| (k1, k2)))
                        .filter(|&(k1, k2)| k1 + k2 == k || k1 + k2 == k + 1)
                        .map(|(k1, k2)| ((Piece::S(Label::Degree(k1)), Piece::S(Label::Degree(k2))), 1)),
                );
                let mut out = vec![("S restriction rule, k_1 + k_2 in {k, k+1}".into(), true, Some(rule))];
                for i in Composition::all(big).into_iter().filter(|i| i.len() == k) {
                    let t = e(Basis::F, i.clone()).coproduct()?;
                    let pieces = tensor_pieces(&t, m, |c| Piece::S(Label::Degree(c.len())))?;
                    out.push((format!("F coproduct of F{i}"), false, Some(pieces)));
                }
                out
            }
            _ => return Err(Error::Precondition(format!("{op:?} is not a restriction"))),
        })
    }

    /// Every induction and restriction certificate between levels `m`, `n`
    /// and `m + n`.
    pub fn certificates(&self, m: usize, n: usize) -> Result<Vec<Certificate>> {
        let big = m + n;
        let (lm, ln, lb) = (self.level(m)?, self.level(n)?, self.level(big)?);
        let emb = tower_embedding(self.kind, m, n);
        let (cm, cn, cb) = (lm.cartan()?, ln.cartan()?, lb.cartan()?);
        let dims_of = |lv: &Level<F>, p: Piece| -> usize {
            match p {
                Piece::P(l) => lv.projectives[lv.index_of(l).expect("label")].dim(),
                Piece::S(l) => lv.simples[lv.index_of(l).expect("label")].dim(),
            }
        };
        let mut out = Vec::new();
        // Inductions.
        for (op, use_proj) in [(Operation::InduceProjective, true), (Operation::InduceSimple, false)] {
            for (ia, &a) in lm.labels.iter().enumerate() {
                for (ib, &b) in ln.labels.iter().enumerate() {
                    let (x, y) = if use_proj {
                        (&lm.projectives[ia], &ln.projectives[ib])
                    } else {
                        (&lm.simples[ia], &ln.simples[ib])
                    };
                    let induced = module_induce(&x.tensor(y), &emb, &lb.algebra, lb.names.clone())?;
                    let comp = lb.composition_factors(&induced)?;
                    let named = |v: &[usize]| -> BTreeMap<String, usize> {
                        count(lb.labels.iter().zip(v).map(|(l, &c)| (l.to_string(), c)))
                    };
                    let (top, projective) = if use_proj {
                        let t = lb.top_multiplicities(&induced)?;
                        let total: usize = t.iter().zip(&lb.projectives).map(|(c, p)| c * p.dim()).sum();
                        (Some(named(&t)), Some(total == induced.dim()))
                    } else {
                        (None, None)
                    };
                    let tag = if use_proj { "P" } else { "S" };
                    for (rule, pieces) in self.single_prediction(op, a, b, m, n)? {
                        let mut pc = vec![0; lb.labels.len()];
                        let mut pdim = 0;
                        for (&p, &c) in &pieces {
                            for (acc, v) in pc.iter_mut().zip(self.piece_composition(big, p, &cb)?) {
                                *acc += c * v;
                            }
                            pdim += c * dims_of(lb, p);
                        }
                        let ptop = use_proj.then(|| {
                            count(pieces.iter().map(|(p, &c)| match p {
                                Piece::P(l) => (l.to_string(), c),
                                Piece::S(l) => (format!("S{l}"), c),
                            }))
                        });
                        let pcomp = named(&pc);
                        let pass = comp == pc
                            && pdim == induced.dim()
                            && (ptop.is_none() || (top == ptop && projective == Some(true)));
                        out.push(Certificate {
                            tower: self.kind,
                            operation: op,
                            m,
                            n,
                            input: format!("{tag}{a} ⊗ {tag}{b}"),
                            rule,
                            dim: induced.dim(),
                            composition: named(&comp),
                            top: top.clone(),
                            projective,
                            predicted_dim: Some(pdim),
                            predicted_composition: Some(pcomp),
                            predicted_top: ptop,
                            asserted: true,
                            pass: Some(pass),
                        });
                    }
                }
            }
        }
        // Restrictions.
        let pairs: Vec<(usize, usize)> =
            (0..lm.labels.len()).flat_map(|i| (0..ln.labels.len()).map(move |j| (i, j))).collect();
        let pair_name = |i: usize, j: usize| format!("{} ⊗ {}", lm.labels[i], ln.labels[j]);
        let tensor_names: Vec<String> = lm.projectives[0].tensor(&ln.projectives[0]).names().to_vec();
        for (op, use_proj) in [(Operation::RestrictProjective, true), (Operation::RestrictSimple, false)] {
            for (ik, &k) in lb.labels.iter().enumerate() {
                let module = if use_proj { &lb.projectives[ik] } else { &lb.simples[ik] };
                let res = module.restrict(&emb, tensor_names.clone())?;
                let mut comp = BTreeMap::new();
                let mut top = BTreeMap::new();
                let mut total = 0;
                for &(i, j) in &pairs {
                    let e = lm.end_dims[i] * ln.end_dims[j];
                    let pij = lm.projectives[i].tensor(&ln.projectives[j]);
                    let c = hom_space_dim(&pij, &res)? / e;
                    if c > 0 {
                        comp.insert(pair_name(i, j), c);
                    }
                    if use_proj {
                        let sij = lm.simples[i].tensor(&ln.simples[j]);
                        let t = hom_space_dim(&res, &sij)? / e;
                        total += t * pij.dim();
                        if t > 0 {
                            top.insert(pair_name(i, j), t);
                        }
                    }
                }
                let (top, projective) = if use_proj { (Some(top), Some(total == res.dim())) } else { (None, None) };
                let tag = if use_proj { "P" } else { "S" };
                for (rule, asserted, pred) in self.restriction_prediction(op, k, m, n)? {
                    let (mut pdim, mut pcomp, mut ptop) = (None, None, None);
                    let mut pass = None;
                    if let Some(pieces) = pred {
                        let mut d = 0;
                        let mut pc: BTreeMap<String, usize> = BTreeMap::new();
                        let mut all_projective = true;
                        let mut tp: BTreeMap<String, usize> = BTreeMap::new();
                        for (&(a, b), &c) in &pieces {
                            d += c * dims_of(lm, a) * dims_of(ln, b);
                            let ca = self.piece_composition(m, a, &cm)?;
                            let cbb = self.piece_composition(n, b, &cn)?;
                            for &(i, j) in &pairs {
                                let v = c * ca[i] * cbb[j];
                                if v > 0 {
                                    *pc.entry(pair_name(i, j)).or_insert(0) += v;
                                }
                            }
                            match (a, b) {
                                (Piece::P(x), Piece::P(y)) => *tp.entry(format!("{x} ⊗ {y}")).or_insert(0) += c,
                                _ => all_projective = false,
                            }
                        }
                        let top_ok =
                            !(use_proj && all_projective) || (top.as_ref() == Some(&tp) && projective == Some(true));
                        pass = Some(pc == comp && d == res.dim() && top_ok);
                        pdim = Some(d);
                        pcomp = Some(pc);
                        ptop = (use_proj && all_projective).then_some(tp);
                    }
                    out.push(Certificate {
                        tower: self.kind,
                        operation: op,
                        m,
                        n,
                        input: format!("{tag}{k}"),
                        rule,
                        dim: res.dim(),
                        composition: comp.clone(),
                        top: top.clone(),
                        projective,
                        predicted_dim: pdim,
                        predicted_composition: pcomp,
                        predicted_top: ptop,
                        asserted,
                        pass,
                    });
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TowerReport {
    pub tower: TowerKind,
    pub m: usize,
    pub n: usize,
    pub asserted: usize,
    pub passed: usize,
    pub certificates: Vec<Certificate>,
    pub pass: bool,
}

pub fn tower_report<F: Scalar>(kind: TowerKind, m: usize, n: usize) -> Result<TowerReport> {
    if m == 0 || n == 0 {
        return Err(Error::Precondition("m and n must be positive".into()));
    }
    let tower = Tower::<F>::new(kind, m + n)?;
    let certificates = tower.certificates(m, n)?;
    let asserted = certificates.iter().filter(|c| c.asserted).count();
    let passed = certificates.iter().filter(|c| c.asserted && c.pass == Some(true)).count();
    Ok(TowerReport { tower: kind, m, n, asserted, passed, pass: asserted == passed, certificates })
}

#[derive(Clone, Debug, Serialize)]
pub struct GBasisReport {
    pub n: usize,
    pub labels: Vec<String>,
    /// Row `I`: `R_I` in the `G` basis.
    pub transition: Vec<Vec<i64>>,
    pub cartan: Vec<Vec<usize>>,
    pub pass: bool,
}

/// `R ↔ G` against the Cartan matrix of `NDPFA_n`.
pub fn g_basis_report<F: Scalar>(n: usize) -> Result<GBasisReport> {
    let t = from_canonical_matrix::<F>(Basis::G, n)?;
    let transition: Vec<Vec<i64>> = t
        .to_dense()
        .iter()
        .map(|r| r.iter().map(|v| v.to_int().ok_or_else(|| Error::Precondition(format!("entry {v}")))).collect())
        .collect::<Result<_>>()?;
    let cartan = ndpf_cartan::<F>(n)?;
    let pass = transition.iter().zip(&cartan).all(|(a, b)| a.iter().zip(b).all(|(&x, &y)| x == y as i64));
    let labels = Composition::all(n).iter().map(|c| c.to_string()).collect();
    Ok(GBasisReport { n, labels, transition, cartan, pass })
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterRow {
    pub subset: String,
    pub characteristic: String,
    pub cycle_type: Vec<usize>,
    pub trace: String,
    pub predicted: String,
}

/// Characters of the `HS_n` projectives restricted to `S_n`, against
/// `e_K` for `K` the complement of `C(I)`.
pub fn projective_characters<F: Scalar>(n: usize) -> Result<(Vec<CharacterRow>, bool)> {
    let h = HeckeGroupAlgebra::<F>::symmetric(n)?;
    let mut rows = Vec::new();
    let mut pass = true;
    for i in DescentSet::all(n.saturating_sub(1)) {
        let p = h.projective(i)?.module;
        let k = Composition::from_set(i, n).complement();
        let e = SymFunction::<F>::e(k.parts())?;
        for rho in partitions(n) {
            // A product of cycles on consecutive letters.
            let mut word = Vec::new();
            let mut start = 0;
            for &a in rho.parts() {
                word.extend(start..start + a - 1);
                start += a;
            }
            let trace = p.word(&word).trace();
            let predicted = e.character(rho.parts())?;
            pass &= trace == predicted;
            rows.push(CharacterRow {
                subset: i.to_string(),
                characteristic: format!("e{k}"),
                cycle_type: rho.parts().to_vec(),
                trace: trace.to_exact_string(),
                predicted: predicted.to_exact_string(),
            });
        }
    }
    Ok((rows, pass))
}
