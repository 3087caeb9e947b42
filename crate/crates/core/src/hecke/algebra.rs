use std::collections::BTreeMap;

use crate::coxeter::{CoxeterGroup, CoxeterType, DescentSet, Element};
use crate::error::{Error, Result};
use crate::linalg::{solve_constraints, ModulePresentation, OperatorAlgebra, SparseMatrix, SparseVec, SubspaceBasis};
use crate::scalar::Scalar;
use crate::Rational;

/// The operators `s`, `π_s`, `π̄_s` (right actions) and `λ_s` (left
/// multiplication) on the group algebra `kW`, whose basis is `W` in
/// canonical order.
#[derive(Clone, Debug)]
pub struct HeckeGroupAlgebra<F = Rational> {
    group: CoxeterGroup,
    s: Vec<SparseMatrix<F>>,
    pi: Vec<SparseMatrix<F>>,
    pibar: Vec<SparseMatrix<F>>,
    lambda: Vec<SparseMatrix<F>>,
}

/// An element `σπ_τ` of the basis `B`.
#[derive(Clone, Debug)]
pub struct BasisElement<F> {
    pub sigma: Element,
    pub tau: Element,
    pub op: SparseMatrix<F>,
}

/// Which common descent picks the linear form `R_{μ,ν}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CommonDescent {
    #[default]
    Smallest,
    Largest,
}

impl<F: Scalar> HeckeGroupAlgebra<F> {
    pub fn new(group: CoxeterGroup) -> Self {
        let n = group.order();
        let op = |f: &dyn Fn(Element) -> Element| SparseMatrix::from_map(n, |i| Some(f(Element(i)).0));
        let gens: Vec<usize> = group.generators().collect();
        let s = gens.iter().map(|&s| op(&|w| group.act_s(w, s))).collect();
        let pi = gens.iter().map(|&s| op(&|w| group.act_pi(w, s))).collect();
        let pibar = gens.iter().map(|&s| op(&|w| group.act_pibar(w, s))).collect();
        let lambda = gens.iter().map(|&s| op(&|w| group.left_mul(w, s))).collect();
        HeckeGroupAlgebra { group, s, pi, pibar, lambda }
    }

    pub fn of_type(t: CoxeterType) -> Result<Self> {
        Ok(Self::new(CoxeterGroup::new(t)?))
    }

    /// `HS_n`, built on the symmetric group `S_n`.
    pub fn symmetric(n: usize) -> Result<Self> {
        Self::of_type(CoxeterType::symmetric(n))
    }

    pub fn group(&self) -> &CoxeterGroup {
        &self.group
    }

    /// Dimension of `kW`.
    pub fn n(&self) -> usize {
        self.group.order()
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn s(&self, i: usize) -> &SparseMatrix<F> {
        &self.s[i - 1]
    }

    pub fn pi(&self, i: usize) -> &SparseMatrix<F> {
        &self.pi[i - 1]
    }

    pub fn pibar(&self, i: usize) -> &SparseMatrix<F> {
        &self.pibar[i - 1]
    }

    pub fn lambda(&self, i: usize) -> &SparseMatrix<F> {
        &self.lambda[i - 1]
    }

    pub fn identity(&self) -> SparseMatrix<F> {
        SparseMatrix::identity(self.n())
    }

    /// Generators in the order `s_1..s_r, π_1..π_r`.
    pub fn generators(&self) -> Vec<SparseMatrix<F>> {
        self.s.iter().chain(&self.pi).cloned().collect()
    }

    pub fn generator_names(&self) -> Vec<String> {
        let r = self.rank();
        (1..=r).map(|i| format!("s{i}")).chain((1..=r).map(|i| format!("pi{i}"))).collect()
    }

    /// `kW` as a right module.
    pub fn regular_module(&self) -> ModulePresentation<F> {
        ModulePresentation::new(self.n(), self.generators(), self.generator_names()).expect("square generators")
    }

    pub fn closure(&self) -> Result<OperatorAlgebra<F>> {
        OperatorAlgebra::closure(self.n(), &self.generators(), true)
    }

    /// Pairs `(1 − λ_s, 1 + λ_s)` of the sandwich equations.
    pub fn sandwich_constraints(&self) -> Vec<(SparseMatrix<F>, SparseMatrix<F>)> {
        let id = self.identity();
        self.lambda.iter().map(|l| (id.sub(l), id.add(l))).collect()
    }

    pub fn sandwich_space(&self) -> Result<SubspaceBasis<F>> {
        solve_constraints(self.n(), &self.sandwich_constraints())
    }

    /// `σπ_τ`: right multiplication by `σ`, then `π` along a reduced word of `τ`.
    pub fn sigma_pi_tau(&self, sigma: Element, tau: Element) -> SparseMatrix<F> {
        let g = &self.group;
        SparseMatrix::from_map(self.n(), |x| Some(g.act_pi_word(g.mul(Element(x), sigma), tau).0))
    }

    /// The family `{σπ_τ : Des(σ) ∩ iDes(τ) = ∅}`.
    pub fn basis_b(&self) -> Vec<BasisElement<F>> {
        let g = &self.group;
        let mut out = Vec::new();
        for sigma in g.elements() {
            let des = g.descents(sigma);
            for tau in g.elements() {
                if des.is_disjoint(g.recoils(tau)) {
                    out.push(BasisElement { sigma, tau, op: self.sigma_pi_tau(sigma, tau) });
                }
            }
        }
        out
    }

    /// Checks the triangularity property of `σπ_τ`: the smallest output
    /// label is `τ`, reached with coefficient 1 from exactly the inputs
    /// in `W_{iDes(τ)} σ⁻¹`.
    pub fn check_triangularity(&self, b: &BasisElement<F>) -> bool {
        let g = &self.group;
        let t = b.op.transpose();
        let first = (0..self.n()).find(|&c| !t.row(c).is_zero());
        if first != Some(b.tau.0) {
            return false;
        }
        let sinv = g.inverse(b.sigma);
        let expected: Vec<usize> = {
            let mut v: Vec<usize> = g.parabolic(g.recoils(b.tau)).into_iter().map(|nu| g.mul(nu, sinv).0).collect();
            v.sort_unstable();
            v
        };
        let col = t.row(b.tau.0);
        col.iter().map(|(i, _)| i).collect::<Vec<_>>() == expected && col.iter().all(|(_, v)| v.is_one())
    }

    /// `T_s(q) = (q − 1)(1 − π_s) + q s`.
    pub fn hecke_q_generator(&self, s: usize, q: &F) -> SparseMatrix<F> {
        let id = self.identity();
        id.sub(self.pi(s)).scaled(&(q.clone() - F::one())).add(&self.s(s).scaled(q))
    }

    /// Linear forms `R_{μ,ν}` for pairs with a common left descent; the
    /// entry of `(1 − λ_s) f (1 + λ_s)` at row `ν`, column `μ`.
    pub fn relation_forms(&self, choice: CommonDescent) -> Vec<SparseVec<F>> {
        let g = &self.group;
        let n = self.n();
        let mut out = Vec::new();
        for mu in g.elements() {
            for nu in g.elements() {
                let common = g.recoils(mu).intersection(g.recoils(nu));
                let s = match choice {
                    CommonDescent::Smallest => common.iter().next(),
                    CommonDescent::Largest => common.iter().last(),
                };
                let Some(s) = s else { continue };
                let (smu, snu) = (g.left_mul(mu, s), g.left_mul(nu, s));
                // stored entry F[a][b]: a = input, b = output
                let at = |a: Element, b: Element| a.0 * n + b.0;
                let one = F::one();
                out.push(SparseVec::from_entries(
                    n * n,
                    vec![
                        (at(nu, mu), one.clone()),
                        (at(nu, smu), one.clone()),
                        (at(snu, mu), -one.clone()),
                        (at(snu, smu), -one),
                    ],
                ));
            }
        }
        out
    }

    /// The operator whose action is the group element `w` on the right.
    pub fn group_element(&self, w: Element) -> SparseMatrix<F> {
        SparseMatrix::from_map(self.n(), |x| Some(self.group.mul(Element(x), w).0))
    }

    pub fn pi_word(&self, w: Element) -> SparseMatrix<F> {
        SparseMatrix::from_map(self.n(), |x| Some(self.group.act_pi_word(Element(x), w).0))
    }
}

/// `h = Σ c_I c_J` over disjoint pairs of descent classes.
pub fn disjoint_descent_pair_count(group: &CoxeterGroup) -> u128 {
    let sizes = group.descent_class_sizes();
    pair_count_from_sizes(&sizes)
}

pub fn pair_count_from_sizes(sizes: &BTreeMap<DescentSet, usize>) -> u128 {
    let mut h = 0u128;
    for (i, ci) in sizes {
        for (j, cj) in sizes {
            if i.is_disjoint(*j) {
                h += (*ci as u128) * (*cj as u128);
            }
        }
    }
    h
}

/// Descent class sizes of `S_n` without tabulating the group:
/// `#{w : Des(w) ⊆ D}` is a multinomial, then Möbius inversion.
pub fn symmetric_descent_class_sizes(n: usize) -> Result<BTreeMap<DescentSet, u128>> {
    if n > 20 {
        return Err(Error::Config(format!("n = {n} is too large for the pair count")));
    }
    let r = n.saturating_sub(1);
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let mut at_most: BTreeMap<DescentSet, u128> = BTreeMap::new();
    for d in DescentSet::all(r) {
        // permutations with descents inside D: multinomial over the blocks
        let mut prev = 0;
        let mut denom = 1u128;
        for cut in d.iter().chain(std::iter::once(n)) {
            denom *= fact(cut - prev);
            prev = cut;
        }
        at_most.insert(d, fact(n) / denom);
    }
    let mut exact = BTreeMap::new();
    for d in DescentSet::all(r) {
        let mut v: i128 = 0;
        for e in DescentSet::all(r) {
            if e.is_subset(d) {
                let sign = if (d.len() - e.len()) % 2 == 0 { 1 } else { -1 };
                v += sign * at_most[&e] as i128;
            }
        }
        exact.insert(d, v as u128);
    }
    Ok(exact)
}

/// Dimension of `HS_n` by the pair count, for `n` beyond the reach of
/// group tabulation.
pub fn symmetric_pair_count(n: usize) -> Result<u128> {
    let sizes = symmetric_descent_class_sizes(n)?;
    let mut h = 0u128;
    for (i, ci) in &sizes {
        for (j, cj) in &sizes {
            if i.is_disjoint(*j) {
                h += ci * cj;
            }
        }
    }
    Ok(h)
}
