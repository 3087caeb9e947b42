use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::coxeter::DescentSet;
use crate::error::{Error, Result};
use crate::hecke::HeckeGroupAlgebra;
use crate::linalg::{hom_space_dim, ModulePresentation, OperatorAlgebra, SparseMatrix, SparseVec, SubspaceBasis};
use crate::nd::exterior::{exterior_action, ExteriorBasis};
use crate::nd::function::{catalan, k_subsets, NdFunction, Subset};
use crate::scalar::Scalar;

/// `S ≤_G T`: same size and `s_i ≤ t_i` after sorting.
pub fn grassmann_leq(s: Subset, t: Subset) -> bool {
    s.len() == t.len() && s.iter().zip(t.iter()).all(|(a, b)| a <= b)
}

/// Componentwise minimum of two `k`-subsets.
pub fn grassmann_meet(s: Subset, t: Subset) -> Subset {
    Subset::from_elems(s.iter().zip(t.iter()).map(|(a, b)| a.min(b)))
}

pub fn grassmann_join(s: Subset, t: Subset) -> Subset {
    Subset::from_elems(s.iter().zip(t.iter()).map(|(a, b)| a.max(b)))
}

/// `#{(S, T) : S ≤_G T}` in `G_{n,k}`.
pub fn grassmann_pairs(n: usize, k: usize) -> usize {
    let sets = k_subsets(n, k);
    sets.iter().map(|&s| sets.iter().filter(|&&t| grassmann_leq(s, t)).count()).sum()
}

/// `Σ_{k=0}^{n−1} #{S ≤_G T in G_{n−1,k}}`.
pub fn incidence_dimension(n: usize) -> usize {
    (0..n).map(|k| grassmann_pairs(n - 1, k)).sum()
}

pub fn ndpfa_generator_names(n: usize) -> Vec<String> {
    (1..n).map(|i| format!("pi{i}")).collect()
}

/// `π_i` of `NDPF_n` on `⊕_{k ≥ 1} Λ^k`.
pub fn ndpfa_generators<F: Scalar>(n: usize) -> Vec<SparseMatrix<F>> {
    let basis = ExteriorBasis::new(n);
    (1..n).map(|i| basis.operator(&NdFunction::pi(n, i))).collect()
}

/// The one-dimensional module `η_I`: `π_i` acts by 0 for `i ∈ I`, else by 1.
pub fn pi_simple<F: Scalar>(n: usize, i: DescentSet) -> ModulePresentation<F> {
    let gens =
        (1..n).map(|s| if i.contains(s) { SparseMatrix::zero(1, 1) } else { SparseMatrix::identity(1) }).collect();
    ModulePresentation::new(1, gens, ndpfa_generator_names(n)).expect("consistent sizes")
}

/// `P_I = e_{{1} ∪ (I+1)}·NDPFA_n ⊂ Λ^{|I|+1}`, with the subsets labelling
/// its basis.
pub fn ndpf_projective<F: Scalar>(n: usize, i: DescentSet) -> Result<(Vec<Subset>, ModulePresentation<F>)> {
    if i.iter().any(|s| s >= n) {
        return Err(Error::Precondition(format!("{i} is not a subset of 1..{n}")));
    }
    let k = i.len() + 1;
    let top = Subset::from_elems(std::iter::once(1).chain(i.iter().map(|s| s + 1)));
    let sets = k_subsets(n, k);
    let gens: Vec<SparseMatrix<F>> = (1..n).map(|s| exterior_action(&NdFunction::pi(n, s), k)).collect();
    let lam = ModulePresentation::new(sets.len(), gens, ndpfa_generator_names(n))?;
    let start = sets.iter().position(|&s| s == top).expect("top subset");
    let span = lam.generate(&[SparseVec::unit(sets.len(), start)])?;
    // the orbit is a set of basis vectors
    let labels: Vec<Subset> = span.pivots().into_iter().map(|p| sets[p]).collect();
    Ok((labels, lam.submodule(&span)?))
}

/// `[M : η_J]` for every `J`, read off traces of
/// `∏_{i ∈ J} (1 − π_i) ∏_{i ∉ J} π_i`. Valid for modules over algebras
/// generated by idempotents `π_i` whose images modulo the radical commute.
pub fn pi_composition_factors<F: Scalar>(
    m: &ModulePresentation<F>,
    rank: usize,
) -> Result<BTreeMap<DescentSet, usize>> {
    let id = SparseMatrix::identity(m.dim());
    let pis: Vec<&SparseMatrix<F>> = (1..=rank)
        .map(|i| m.action(&format!("pi{i}")).ok_or_else(|| Error::Config(format!("module has no pi{i}"))))
        .collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for j in DescentSet::all(rank) {
        let e = (1..=rank).fold(id.clone(), |acc, i| {
            let f = if j.contains(i) { id.sub(pis[i - 1]) } else { pis[i - 1].clone() };
            acc.mul(&f)
        });
        let t = e.trace();
        let c = t
            .to_int()
            .filter(|&c| c >= 0)
            .ok_or_else(|| Error::Precondition(format!("trace {t} is not a multiplicity")))?;
        if c > 0 {
            out.insert(j, c as usize);
        }
    }
    Ok(out)
}

/// Whether `π_i ↦ 0/1` extends to a character of the monoid `NDPF_n`.
pub fn character_is_consistent(n: usize, i: DescentSet) -> bool {
    let mut value: HashMap<NdFunction, bool> = HashMap::from([(NdFunction::identity(n), true)]);
    let mut queue = vec![NdFunction::identity(n)];
    while let Some(f) = queue.pop() {
        for s in 1..n {
            let g = f.then(&NdFunction::pi(n, s));
            let v = value[&f] && !i.contains(s);
            match value.get(&g) {
                Some(&old) if old != v => return false,
                Some(_) => {}
                None => {
                    value.insert(g.clone(), v);
                    queue.push(g);
                }
            }
        }
    }
    true
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelReport {
    pub n: usize,
    /// Every reduced word of `w` maps to the same parking function.
    pub well_defined: bool,
    pub kernel_dim: usize,
    pub expected_kernel_dim: usize,
    pub radical_dim: usize,
    pub contained_in_radical: bool,
}

/// `ker(H_n(0) → NDPFA_n)` against `rad H_n(0)`, with `H_n(0)` acting on `kS_n`.
pub fn zero_hecke_kernel<F: Scalar>(n: usize) -> Result<KernelReport> {
    let h = HeckeGroupAlgebra::<F>::symmetric(n)?;
    let g = h.group();
    let to_nd = |word: &[usize]| NdFunction::from_word(n, &word.iter().map(|&s| s as i32).collect::<Vec<_>>());
    let well_defined = g.elements().all(|w| {
        let f = to_nd(g.reduced_word(w));
        g.all_reduced_words(w).iter().all(|word| to_nd(word) == f)
    });
    let mut fibres: BTreeMap<NdFunction, Vec<usize>> = BTreeMap::new();
    for w in g.elements() {
        fibres.entry(to_nd(g.reduced_word(w))).or_default().push(w.0);
    }
    let ops: Vec<SparseVec<F>> = g.elements().map(|w| h.pi_word(w).flatten()).collect();
    let mut kernel = SubspaceBasis::new(h.n() * h.n());
    for members in fibres.values() {
        for &w in &members[1..] {
            kernel.span_insert(&ops[w].sub(&ops[members[0]]))?;
        }
    }
    let pis: Vec<SparseMatrix<F>> = g.generators().map(|s| h.pi(s).clone()).collect();
    let algebra = OperatorAlgebra::closure(h.n(), &pis, true)?;
    let rad = algebra.radical()?;
    let contained_in_radical = kernel.rows().all(|r| rad.contains(r));
    Ok(KernelReport {
        n,
        well_defined,
        kernel_dim: kernel.dim(),
        expected_kernel_dim: h.n() - fibres.len(),
        radical_dim: rad.dim(),
        contained_in_radical,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NdpfaReport {
    pub n: usize,
    pub dim: usize,
    pub catalan: u128,
    pub incidence_dim: usize,
    pub radical_dim: usize,
    /// `dim NDPFA_n / rad`, the number of simples when all are 1-dimensional.
    pub semisimple_quotient_dim: usize,
    /// Commutators of generators lie in the radical.
    pub quotient_commutative: bool,
    pub characters_consistent: bool,
    /// `[P_I : S_J]` by traces, rows and columns in `DescentSet::all` order.
    pub cartan: Vec<Vec<usize>>,
    /// The same matrix from `dim Hom(P_J, P_I)`.
    pub cartan_by_hom: Vec<Vec<usize>>,
    pub cartan_matches_grassmann: bool,
    pub projective_dims_sum: usize,
    pub kernel: Option<KernelReport>,
    pub pass: bool,
}

/// Cartan matrix `[P_I : S_J]` of `NDPFA_n` by composition factors.
pub fn ndpf_cartan<F: Scalar>(n: usize) -> Result<Vec<Vec<usize>>> {
    let subsets = DescentSet::all(n.saturating_sub(1));
    subsets
        .iter()
        .map(|&i| {
            let (_, p) = ndpf_projective::<F>(n, i)?;
            let f = pi_composition_factors(&p, n.saturating_sub(1))?;
            Ok(subsets.iter().map(|j| f.get(j).copied().unwrap_or(0)).collect())
        })
        .collect()
}

pub fn ndpfa_structure<F: Scalar>(n: usize, with_kernel: bool) -> Result<NdpfaReport> {
    let r = n.saturating_sub(1);
    let d = (1usize << n) - 1;
    let gens = ndpfa_generators::<F>(n);
    let algebra = OperatorAlgebra::closure(d, &gens, true)?;
    let rad = algebra.radical()?;
    let quotient_commutative = gens.iter().all(|a| gens.iter().all(|b| rad.contains(&a.commutator(b).flatten())));
    let subsets = DescentSet::all(r);
    let characters_consistent = subsets.iter().all(|&i| character_is_consistent(n, i));
    let cartan = ndpf_cartan::<F>(n)?;
    let projectives: Vec<ModulePresentation<F>> =
        subsets.iter().map(|&i| ndpf_projective::<F>(n, i).map(|x| x.1)).collect::<Result<_>>()?;
    let cartan_by_hom = projectives
        .iter()
        .map(|pi| projectives.iter().map(|pj| hom_space_dim(pj, pi)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let cartan_matches_grassmann = subsets
        .iter()
        .enumerate()
        .all(|(a, &i)| subsets.iter().enumerate().all(|(b, &j)| cartan[a][b] == usize::from(grassmann_leq(j, i))));
    let projective_dims_sum = projectives.iter().map(ModulePresentation::dim).sum();
    let kernel = if with_kernel { Some(zero_hecke_kernel::<F>(n)?) } else { None };
    let catalan = catalan(n);
    let incidence_dim = incidence_dimension(n);
    let semisimple_quotient_dim = algebra.dim() - rad.dim();
    let pass = algebra.dim() as u128 == catalan
        && incidence_dim as u128 == catalan
        && semisimple_quotient_dim == 1 << r
        && quotient_commutative
        && characters_consistent
        && cartan == cartan_by_hom
        && cartan_matches_grassmann
        && projective_dims_sum as u128 == catalan
        && kernel
            .as_ref()
            .is_none_or(|k| k.well_defined && k.contained_in_radical && k.kernel_dim == k.expected_kernel_dim);
    Ok(NdpfaReport {
        n,
        dim: algebra.dim(),
        catalan,
        incidence_dim,
        radical_dim: rad.dim(),
        semisimple_quotient_dim,
        quotient_commutative,
        characters_consistent,
        cartan,
        cartan_by_hom,
        cartan_matches_grassmann,
        projective_dims_sum,
        kernel,
        pass,
    })
}
