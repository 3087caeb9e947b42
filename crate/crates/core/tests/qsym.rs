use heckegroup::coxeter::DescentSet;
use heckegroup::nd::ndpf_cartan;
use heckegroup::qsym::{
    from_canonical_matrix, pairing, partitions, quasi_shuffle, to_canonical_matrix, Basis, Composition, Expansion,
    Partition, SymFunction,
};
use heckegroup::{Rational, Scalar};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

type E = Expansion<Rational>;

fn c(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

fn el(b: Basis, parts: &[usize]) -> E {
    E::element(b, c(parts))
}

fn int(v: i64) -> Rational {
    Rational::from_int(v)
}

#[test]
fn compositions_and_sets() {
    assert_eq!(Composition::from_set(DescentSet::from_elems([2, 3]), 4), c(&[2, 1, 1]));
    assert_eq!(Composition::from_set(DescentSet::from_elems([]), 5), c(&[5]));
    for n in 1..=5 {
        for s in DescentSet::all(n - 1) {
            let i = Composition::from_set(s, n);
            assert_eq!(i.descent_set(), s);
            assert_eq!(i.len(), s.len() + 1);
            assert_eq!(i.complement().descent_set(), s.complement(n - 1));
            for t in DescentSet::all(n - 1) {
                assert_eq!(i.is_finer(&Composition::from_set(t, n)), t.is_subset(s));
            }
        }
    }
    assert_eq!(c(&[1, 2]).near_concat(&c(&[3])), Some(c(&[1, 5])));
    assert_eq!(c(&[2, 1, 1]).to_string(), "(2,1,1)");
    assert_eq!("(2,1,1)".parse::<Composition>().unwrap(), c(&[2, 1, 1]));
    assert_eq!("()".parse::<Composition>().unwrap(), Composition::empty());
    assert!(Composition::new(vec![1, 0]).is_err());
}

#[test]
fn round_trips() {
    for n in 0..=6 {
        for b in Basis::ALL {
            let t = to_canonical_matrix::<Rational>(b, n).unwrap();
            let f = from_canonical_matrix::<Rational>(b, n).unwrap();
            assert_eq!(t.mul(&f), heckegroup::linalg::SparseMatrix::identity(t.nrows()));
            for i in Composition::all(n) {
                let x = E::element(b, i);
                for target in Basis::ALL.into_iter().filter(|t| t.is_qsym() == b.is_qsym()) {
                    assert_eq!(x.to_basis(target).unwrap().to_basis(b).unwrap(), x);
                }
            }
        }
    }
}

#[test]
fn unitriangular_transitions() {
    for n in 1..=6 {
        let comps = Composition::all(n);
        for b in [Basis::M, Basis::S, Basis::G] {
            let t = to_canonical_matrix::<Rational>(b, n).unwrap();
            for (i, ci) in comps.iter().enumerate() {
                assert!(t.entry(i, i).is_one(), "{b} diagonal");
                for (j, cj) in comps.iter().enumerate() {
                    let v = t.entry(i, j);
                    assert!(v.is_zero() || v.abs().is_one());
                    if !v.is_zero() && i != j && b != Basis::G {
                        assert!(ci.is_finer(cj) || cj.is_finer(ci));
                    }
                }
            }
        }
    }
}

#[test]
fn fundamental_is_sum_over_finer_monomials() {
    for n in 1..=5 {
        for i in Composition::all(n) {
            let f = el(Basis::F, i.parts()).to_basis(Basis::M).unwrap();
            let expect = E::from_terms(Basis::M, i.refinements().into_iter().map(|j| (j, Rational::one())));
            assert_eq!(f, expect);
        }
    }
    let fn_ = el(Basis::F, &[3]).to_basis(Basis::M).unwrap();
    assert_eq!(fn_.terms().len(), 4);
}

#[test]
fn lambda_and_s_examples() {
    assert_eq!(el(Basis::Lambda, &[2]).to_basis(Basis::R).unwrap(), el(Basis::R, &[1, 1]));
    assert_eq!(el(Basis::S, &[2]).to_basis(Basis::R).unwrap(), el(Basis::R, &[2]));
    let s21 = el(Basis::S, &[2, 1]).to_basis(Basis::R).unwrap();
    assert_eq!(s21, el(Basis::R, &[2, 1]).add(&el(Basis::R, &[3])).unwrap());
}

#[test]
fn dual_bases() {
    for n in 0..=5 {
        for i in Composition::all(n) {
            for j in Composition::all(n) {
                let d = if i == j { Rational::one() } else { Rational::zero() };
                for (a, b) in [(Basis::R, Basis::F), (Basis::S, Basis::M), (Basis::Lambda, Basis::X)] {
                    let x = E::element(a, i.clone());
                    let y = E::element(b, j.clone());
                    assert_eq!(pairing(&x, &y).unwrap(), d, "<{a}{i},{b}{j}>");
                }
            }
        }
    }
    assert!(pairing(&el(Basis::R, &[2]), &el(Basis::F, &[1])).is_err());
    assert!(pairing(&el(Basis::F, &[1]), &el(Basis::R, &[1])).is_err());
}

#[test]
fn products() {
    let r1 = el(Basis::R, &[1]);
    assert_eq!(r1.mul(&r1).unwrap(), el(Basis::R, &[2]).add(&el(Basis::R, &[1, 1])).unwrap());
    let unit = E::element(Basis::R, Composition::empty());
    let x = el(Basis::R, &[2, 1]);
    assert_eq!(x.mul(&unit).unwrap(), x);
    assert_eq!(unit.mul(&x).unwrap(), x);
    assert!(x.mul(&el(Basis::F, &[1])).is_err());
}

#[test]
fn multiplicative_bases() {
    for a in 0..=3 {
        for b in 0..=3 {
            for i in Composition::all(a) {
                for j in Composition::all(b) {
                    let ij = i.concat(&j);
                    for basis in [Basis::S, Basis::Lambda] {
                        let p = E::element(basis, i.clone()).mul(&E::element(basis, j.clone())).unwrap();
                        assert_eq!(p, E::element(basis, ij.clone()));
                    }
                    let mij: Vec<E> = quasi_shuffle(i.parts(), j.parts())
                        .into_iter()
                        .map(|k| E::element(Basis::M, Composition::new(k).unwrap()))
                        .collect();
                    let expect = mij.iter().fold(E::zero(Basis::M), |acc, k| acc.add(k).unwrap());
                    let got = E::element(Basis::M, i.clone()).mul(&E::element(Basis::M, j.clone())).unwrap();
                    assert_eq!(got, expect, "M{i} M{j}");
                }
            }
        }
    }
}

#[test]
fn f_coproduct_example() {
    let d = el(Basis::F, &[2]).coproduct().unwrap();
    assert_eq!(d.terms().len(), 3);
    for (l, r) in [(c(&[]), c(&[2])), (c(&[1]), c(&[1])), (c(&[2]), c(&[]))] {
        assert!(d.coeff(&l, &r).is_one());
    }
}

#[test]
fn hopf_duality() {
    for n in 0..=4 {
        for i in Composition::all(n) {
            let dr = E::element(Basis::R, i.clone()).coproduct().unwrap();
            let df = E::element(Basis::F, i.clone()).coproduct().unwrap();
            for m in 0..=n {
                for j in Composition::all(m) {
                    for k in Composition::all(n - m) {
                        let fj = E::element(Basis::F, j.clone());
                        let fk = E::element(Basis::F, k.clone());
                        let prod = fj.mul(&fk).unwrap();
                        assert_eq!(dr.coeff(&j, &k), prod.coeff(&i), "Δ R{i} at {j}⊗{k}");
                        let rj = E::element(Basis::R, j.clone());
                        let rk = E::element(Basis::R, k.clone());
                        assert_eq!(df.coeff(&j, &k), rj.mul(&rk).unwrap().coeff(&i), "Δ F{i} at {j}⊗{k}");
                    }
                }
            }
        }
    }
}

#[test]
fn g_transition_is_ndpfa_cartan() {
    assert_eq!(el(Basis::R, &[2]).to_basis(Basis::G).unwrap(), el(Basis::G, &[2]));
    assert_eq!(el(Basis::R, &[1, 1]).to_basis(Basis::G).unwrap(), el(Basis::G, &[1, 1]));
    for n in 1..=4 {
        let r_in_g = from_canonical_matrix::<Rational>(Basis::G, n).unwrap();
        let cartan = ndpf_cartan::<Rational>(n).unwrap();
        let dense: Vec<Vec<usize>> =
            r_in_g.to_dense().iter().map(|r| r.iter().map(|v| v.to_int().unwrap() as usize).collect()).collect();
        assert_eq!(dense, cartan, "n = {n}");
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn descents(w: &[usize]) -> DescentSet {
    DescentSet::from_elems((1..w.len()).filter(|&k| w[k - 1] > w[k]))
}

fn inverse(w: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; w.len()];
    for (i, &x) in w.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

#[test]
fn ribbon_schur_functions() {
    for n in 1..=4 {
        let perms = permutations(n);
        for k in Composition::all(n) {
            let r = SymFunction::<Rational>::ribbon(&k).unwrap();
            let mut f = E::zero(Basis::F);
            for w in perms.iter().filter(|w| descents(w) == k.descent_set()) {
                f.add_term(Composition::from_set(descents(&inverse(w)), n), Rational::one());
            }
            assert_eq!(r.to_qsym().to_basis(Basis::F).unwrap(), f, "r{k}");
        }
        for i in Composition::all(n) {
            let e = SymFunction::<Rational>::e(i.parts()).unwrap();
            let sum = i
                .coarsenings()
                .into_iter()
                .fold(SymFunction::zero(), |acc, j| acc.add(&SymFunction::ribbon(&j.complement()).unwrap()));
            assert_eq!(e, sum, "e{i}");
        }
    }
}

#[test]
fn hall_product() {
    for n in 1..=4 {
        let ps = partitions(n);
        for a in &ps {
            for b in &ps {
                let h = SymFunction::<Rational>::h(a.parts()).unwrap();
                let m = SymFunction::<Rational>::monomial(b.clone());
                assert_eq!(h.hall(&m).unwrap(), if a == b { int(1) } else { int(0) });
            }
        }
        // ⟨h_n, p_ρ⟩ = 1: the trivial character.
        for rho in &ps {
            assert!(SymFunction::<Rational>::h(&[n]).unwrap().character(rho.parts()).unwrap().is_one());
        }
    }
    assert_eq!(partitions(4).len(), 5);
    assert_eq!(Partition::new(vec![1, 2]).unwrap().parts(), &[2, 1]);
}

#[test]
fn json_shape() {
    let x = el(Basis::R, &[2, 1]).add(&el(Basis::R, &[3]).scaled(&Rational::new(1.into(), 2.into()))).unwrap();
    let v = serde_json::to_value(&x).unwrap();
    assert_eq!(v["basis"], "R");
    assert_eq!(v["degree"], 3);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    assert!(v["terms"].as_array().unwrap().iter().any(|t| t["coeff"] == "1/2" && t["label"] == serde_json::json!([3])));
}

fn comp_strategy(max: usize) -> impl Strategy<Value = Composition> {
    (0..=max)
        .prop_flat_map(|n| {
            let k = n.saturating_sub(1);
            (Just(n), proptest::collection::vec(any::<bool>(), k))
        })
        .prop_map(|(n, bits)| {
            Composition::from_set(
                DescentSet::from_elems(bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i + 1)),
                n,
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ribbon_product_associative(a in comp_strategy(2), b in comp_strategy(2), c in comp_strategy(2)) {
        let (x, y, z) = (E::element(Basis::R, a), E::element(Basis::R, b), E::element(Basis::R, c));
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
    }

    #[test]
    fn shuffle_is_commutative(a in comp_strategy(3), b in comp_strategy(3)) {
        let (x, y) = (E::element(Basis::F, a), E::element(Basis::F, b));
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
    }

    #[test]
    fn coproducts_coassociative(a in comp_strategy(4), ncsf in any::<bool>()) {
        let b = if ncsf { Basis::R } else { Basis::F };
        let d = E::element(b, a).coproduct().unwrap();
        // (Δ ⊗ 1)Δ and (1 ⊗ Δ)Δ, compared as triples.
        let mut left = std::collections::BTreeMap::new();
        let mut right = std::collections::BTreeMap::new();
        for ((l, r), v) in d.terms() {
            for ((ll, lr), w) in E::element(b, l.clone()).coproduct().unwrap().terms() {
                *left.entry((ll.clone(), lr.clone(), r.clone())).or_insert_with(Rational::zero) += v * w;
            }
            for ((rl, rr), w) in E::element(b, r.clone()).coproduct().unwrap().terms() {
                *right.entry((l.clone(), rl.clone(), rr.clone())).or_insert_with(Rational::zero) += v * w;
            }
        }
        left.retain(|_, v| !v.is_zero());
        right.retain(|_, v| !v.is_zero());
        prop_assert_eq!(left, right);
    }
}
