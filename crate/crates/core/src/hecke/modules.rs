use petgraph::algo::{condensation, has_path_connecting};
use petgraph::graph::{DiGraph, NodeIndex};

use crate::coxeter::{CoxeterGroup, DescentSet, Element};
use crate::error::{Error, Result};
use crate::hecke::HeckeGroupAlgebra;
use crate::linalg::{
    common_kernel, hom_space_dim, invert, solve_in_basis, ModulePresentation, SparseMatrix, SparseVec, SubspaceBasis,
};
use crate::scalar::Scalar;

/// The projective module `P_I ⊂ kW`.
#[derive(Clone, Debug)]
pub struct Projective<F> {
    pub subset: DescentSet,
    /// Recoil class `ᴵW`, indexing both bases.
    pub reps: Vec<Element>,
    /// `v_I · σ` for `σ` in `reps`.
    pub vi_basis: Vec<SparseVec<F>>,
    /// `v_σ` for `σ` in `reps`.
    pub vsigma_basis: Vec<SparseVec<F>>,
    pub span: SubspaceBasis<F>,
    /// Action in the basis `vi_basis`.
    pub module: ModulePresentation<F>,
}

/// The simple module `S_I`, presented on the images of `v_σ` with
/// `iDes(σ) = S ∖ I`.
#[derive(Clone, Debug)]
pub struct Simple<F> {
    pub subset: DescentSet,
    pub reps: Vec<Element>,
    pub module: ModulePresentation<F>,
}

/// A matrix unit `e_{σ,τ}` sending `v_σ` to `v_τ` and killing the other `v`'s.
#[derive(Clone, Debug)]
pub struct MatrixUnit<F> {
    pub sigma: Element,
    pub tau: Element,
    pub op: SparseMatrix<F>,
}

impl<F: Scalar> HeckeGroupAlgebra<F> {
    /// `v · w` for a vector `v` of `kW`.
    pub fn right_mul_vec(&self, v: &SparseVec<F>, w: Element) -> SparseVec<F> {
        let g = self.group();
        SparseVec::from_entries(self.n(), v.iter().map(|(x, c)| (g.mul(Element(x), w).0, c.clone())))
    }

    /// `v_I = Σ_{ν ∈ W_I} (−1)^{ℓ(ν)} ν`.
    pub fn v_subset(&self, i: DescentSet) -> SparseVec<F> {
        let g = self.group();
        SparseVec::from_entries(
            self.n(),
            g.parabolic(i)
                .into_iter()
                .map(|nu| (nu.0, if g.length(nu).is_multiple_of(2) { F::one() } else { -F::one() })),
        )
    }

    /// `v_σ = v_{S ∖ iDes(σ)} · σ`.
    pub fn v_sigma(&self, sigma: Element) -> SparseVec<F> {
        let g = self.group();
        let i = g.recoils(sigma).complement(g.rank());
        self.right_mul_vec(&self.v_subset(i), sigma)
    }

    /// Matrix whose rows are the `v_σ` in canonical order.
    pub fn v_basis_matrix(&self) -> SparseMatrix<F> {
        SparseMatrix::from_rows(self.n(), self.group().elements().map(|s| self.v_sigma(s)).collect())
    }

    /// Renders a vector of `kW` as a signed sum of group elements.
    pub fn format_vector(&self, v: &SparseVec<F>) -> String {
        let names: Vec<String> = self.group().elements().map(|w| self.group().format(w)).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        crate::hecke::render_combination(&refs, &v.to_dense())
    }

    /// `⋂_{s ∈ I} ker(1 + λ_s)`.
    pub fn antisymmetric_subspace(&self, i: DescentSet) -> Result<SubspaceBasis<F>> {
        let id = self.identity();
        let ops: Vec<SparseMatrix<F>> = i.iter().map(|s| id.add(self.lambda(s))).collect();
        common_kernel(self.n(), &ops)
    }

    pub fn projective(&self, i: DescentSet) -> Result<Projective<F>> {
        let g = self.group();
        let reps = g.recoil_class(i);
        let vi = self.v_subset(i);
        let vi_basis: Vec<SparseVec<F>> = reps.iter().map(|&s| self.right_mul_vec(&vi, s)).collect();
        let vsigma_basis: Vec<SparseVec<F>> = reps.iter().map(|&s| self.v_sigma(s)).collect();
        let span = SubspaceBasis::spanned_by(self.n(), &vi_basis)?;
        if span.dim() != reps.len() {
            return Err(Error::Precondition(format!("v_I·σ family is dependent for I = {i}")));
        }
        let module = self.module_on_basis(&vi_basis)?;
        Ok(Projective { subset: i, reps, vi_basis, vsigma_basis, span, module })
    }

    /// Action of the generators on an invariant subspace, written in the
    /// given (independent) basis of it.
    pub fn module_on_basis(&self, basis: &[SparseVec<F>]) -> Result<ModulePresentation<F>> {
        let d = basis.len();
        let mut gens = Vec::new();
        for op in self.generators() {
            let images: Vec<SparseVec<F>> = basis.iter().map(|b| op.apply(b)).collect();
            let rows =
                solve_in_basis(basis, &images).map_err(|_| Error::Precondition("subspace is not invariant".into()))?;
            gens.push(SparseMatrix::from_rows(d, rows));
        }
        ModulePresentation::new(d, gens, self.generator_names())
    }

    /// Elements `σ` with `iDes(σ) = S ∖ I`.
    pub fn simple_reps(&self, i: DescentSet) -> Vec<Element> {
        let g = self.group();
        let target = i.complement(g.rank());
        g.elements().filter(|&w| g.recoils(w) == target).collect()
    }

    /// Radical of `P_I`: `Σ_{J ⊋ I} P_J`.
    pub fn projective_radical(&self, i: DescentSet) -> Result<SubspaceBasis<F>> {
        let g = self.group();
        let mut rad = SubspaceBasis::new(self.n());
        for s in g.generators().filter(|&s| !i.contains(s)) {
            let j = i.with(s);
            let vj = self.v_subset(j);
            for w in g.recoil_class(j) {
                rad.span_insert(&self.right_mul_vec(&vj, w))?;
            }
        }
        Ok(rad)
    }

    pub fn simple(&self, i: DescentSet) -> Result<Simple<F>> {
        let reps = self.simple_reps(i);
        let rad = self.projective_radical(i)?;
        let mut combined: Vec<SparseVec<F>> = reps.iter().map(|&s| self.v_sigma(s)).collect();
        let d = combined.len();
        combined.extend(rad.rows().cloned());
        let mut gens = Vec::new();
        for op in self.generators() {
            let images: Vec<SparseVec<F>> = combined[..d].iter().map(|b| op.apply(b)).collect();
            let coords = solve_in_basis(&combined, &images)?;
            let rows = coords
                .into_iter()
                .map(|c| SparseVec::from_entries(d, c.iter().filter(|(k, _)| *k < d).map(|(k, v)| (k, v.clone()))))
                .collect();
            gens.push(SparseMatrix::from_rows(d, rows));
        }
        Ok(Simple { subset: i, reps, module: ModulePresentation::new(d, gens, self.generator_names())? })
    }

    /// `dim Hom(P_I, P_J)` for subsets in [`DescentSet::all`] order.
    pub fn cartan_matrix(&self) -> Result<Vec<Vec<usize>>> {
        let subsets = DescentSet::all(self.rank());
        let modules: Vec<ModulePresentation<F>> =
            subsets.iter().map(|&i| self.projective(i).map(|p| p.module)).collect::<Result<_>>()?;
        modules.iter().map(|m| modules.iter().map(|n| hom_space_dim(m, n)).collect()).collect()
    }

    /// All `e_{σ,τ}` with `iDes(σ) ⊇ iDes(τ)`.
    pub fn matrix_units(&self) -> Result<Vec<MatrixUnit<F>>> {
        let g = self.group();
        let v = self.v_basis_matrix();
        let vinv_t = invert(&v)?.transpose();
        let mut out = Vec::new();
        for sigma in g.elements() {
            for tau in g.elements() {
                if g.recoils(tau).is_subset(g.recoils(sigma)) {
                    out.push(MatrixUnit { sigma, tau, op: self.outer(vinv_t.row(sigma.0), v.row(tau.0)) });
                }
            }
        }
        Ok(out)
    }

    /// The single matrix unit `e_{σ,τ}` (no containment check).
    pub fn matrix_unit(&self, sigma: Element, tau: Element) -> Result<SparseMatrix<F>> {
        let v = self.v_basis_matrix();
        let vinv_t = invert(&v)?.transpose();
        Ok(self.outer(vinv_t.row(sigma.0), v.row(tau.0)))
    }

    fn outer(&self, col: &SparseVec<F>, row: &SparseVec<F>) -> SparseMatrix<F> {
        let n = self.n();
        SparseMatrix::from_fn(n, |i| {
            let c = col.get(i);
            if c.is_zero() {
                Vec::new()
            } else {
                row.iter().map(|(j, v)| (j, c.clone() * v.clone())).collect()
            }
        })
    }

    /// `α(I)`: the first element in canonical order with `iDes = S ∖ I`.
    pub fn alpha(&self, i: DescentSet) -> Element {
        self.simple_reps(i)[0]
    }

    /// `dim e·HW·e` for `e = Σ_I e_{α(I),α(I)}`.
    pub fn morita_dimension(&self) -> Result<usize> {
        let v = self.v_basis_matrix();
        let vinv_t = invert(&v)?.transpose();
        let mut e = SparseMatrix::zero(self.n(), self.n());
        for i in DescentSet::all(self.rank()) {
            let a = self.alpha(i);
            e = e.add(&self.outer(vinv_t.row(a.0), v.row(a.0)));
        }
        let closure = self.closure()?;
        let mut span = SubspaceBasis::new(self.n() * self.n());
        for b in closure.basis() {
            span.span_insert(&e.mul(&b).mul(&e).flatten())?;
        }
        Ok(span.dim())
    }

    /// Generators of the adjoint algebra `HW*` (transposes).
    pub fn adjoint_generators(&self) -> Vec<SparseMatrix<F>> {
        self.generators().iter().map(SparseMatrix::transpose).collect()
    }

    /// `P*_I`: the `HW*`-module generated by `Σ_{ν ∈ W_I} ν`.
    pub fn adjoint_projective(&self, i: DescentSet) -> Result<(SubspaceBasis<F>, ModulePresentation<F>)> {
        let m = ModulePresentation::new(self.n(), self.adjoint_generators(), self.generator_names())?;
        let sym = SparseVec::from_entries(self.n(), self.group().parabolic(i).into_iter().map(|nu| (nu.0, F::one())));
        let span = m.generate(&[sym])?;
        let module = m.submodule(&span)?;
        Ok((span, module))
    }

    /// `⋂_{s ∈ I} ker(1 − λ_s)`.
    pub fn symmetric_subspace(&self, i: DescentSet) -> Result<SubspaceBasis<F>> {
        let id = self.identity();
        let ops: Vec<SparseMatrix<F>> = i.iter().map(|s| id.sub(self.lambda(s))).collect();
        common_kernel(self.n(), &ops)
    }
}

/// The graph on `W` with an edge `σ → σs` whenever `iDes(σ) ⊆ iDes(σs)`.
#[derive(Clone, Debug)]
pub struct PreorderGraph {
    pub graph: DiGraph<Element, usize>,
}

impl PreorderGraph {
    pub fn new(group: &CoxeterGroup) -> Self {
        let mut graph = DiGraph::new();
        let nodes: Vec<NodeIndex> = group.elements().map(|w| graph.add_node(w)).collect();
        for w in group.elements() {
            for s in group.generators() {
                let ws = group.right_mul(w, s);
                if group.recoils(w).is_subset(group.recoils(ws)) {
                    graph.add_edge(nodes[w.0], nodes[ws.0], s);
                }
            }
        }
        PreorderGraph { graph }
    }

    /// Strongly connected components, each sorted, in order of their
    /// smallest element.
    pub fn components(&self) -> Vec<Vec<Element>> {
        let cond = condensation(self.graph.clone(), true);
        let mut comps: Vec<Vec<Element>> = cond.node_weights().cloned().collect();
        for c in &mut comps {
            c.sort();
        }
        comps.sort();
        comps
    }

    /// Whether the transitive closure is exactly containment of recoil sets.
    pub fn matches_recoil_containment(&self, group: &CoxeterGroup) -> bool {
        let nodes: Vec<NodeIndex> = self.graph.node_indices().collect();
        group.elements().all(|u| {
            group.elements().all(|v| {
                let reach = has_path_connecting(&self.graph, nodes[u.0], nodes[v.0], None);
                reach == group.recoils(u).is_subset(group.recoils(v))
            })
        })
    }

    /// Whether the condensation, ordered by reachability, is the boolean
    /// lattice of subsets of `S` (each class carries a distinct recoil set,
    /// every subset occurs, and reachability is inclusion).
    pub fn condensation_is_boolean_lattice(&self, group: &CoxeterGroup) -> bool {
        let cond = condensation(self.graph.clone(), true);
        let labels: Vec<Option<DescentSet>> = cond
            .node_weights()
            .map(|c| {
                let d = group.recoils(c[0]);
                c.iter().all(|&w| group.recoils(w) == d).then_some(d)
            })
            .collect();
        let Some(labels) = labels.into_iter().collect::<Option<Vec<_>>>() else { return false };
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted != DescentSet::all(group.rank()) || sorted.len() != labels.len() {
            return false;
        }
        let idx: Vec<NodeIndex> = cond.node_indices().collect();
        idx.iter().zip(&labels).all(|(&a, &la)| {
            idx.iter().zip(&labels).all(|(&b, &lb)| has_path_connecting(&cond, a, b, None) == la.is_subset(lb))
        })
    }
}
