use heckegroup::hecke::HeckeGroupAlgebra;
use heckegroup::nd::*;
use heckegroup::Rational;

#[test]
fn hecke_quotient_matches_ndf_action() {
    for n in 2..=4 {
        let h = HeckeGroupAlgebra::<Rational>::symmetric(n).unwrap();
        for k in 1..=n {
            let ext = hecke_exterior(&h, k).unwrap();
            for i in 1..n {
                let pi = ext.module.action(&format!("pi{i}")).unwrap();
                assert_eq!(pi, &exterior_action::<Rational>(&NdFunction::pibar(n, i), k), "pi{i} n={n} k={k}");
                assert_eq!(
                    &ext.pibar[i - 1],
                    &exterior_action::<Rational>(&NdFunction::pi(n, i), k),
                    "pibar{i} n={n} k={k}"
                );
            }
        }
    }
}

fn r(x: i64) -> Rational {
    heckegroup::ratio(x, 1)
}

#[test]
fn counts() {
    for n in 1..=8 {
        assert_eq!(ndf_enumerate(n).len() as u128, binomial(2 * n - 1, n - 1));
    }
    for n in 1..=10 {
        let ndpf = ndpf_enumerate(n);
        assert_eq!(ndpf.len() as u128, catalan(n));
    }
    assert_eq!(ndf_enumerate(3).len(), 10);
    assert_eq!(ndpf_enumerate(3).len(), 5);
    assert_eq!(ndpf_enumerate(1), vec![NdFunction::identity(1)]);
    // counted by image size
    for n in 1..=7 {
        let mut by_size = vec![0u128; n + 1];
        for f in ndf_enumerate(n) {
            by_size[f.image().len()] += 1;
        }
        for (k, &c) in by_size.iter().enumerate().skip(1) {
            assert_eq!(c, binomial(n, k) * binomial(n - 1, k - 1));
        }
    }
}

#[test]
fn generators_and_relations() {
    use heckegroup::linalg::monoid_closure;
    for n in 1..=6 {
        let all: Vec<NdFunction> = ndf_generators_both(n);
        let closure = monoid_closure(&all, NdFunction::identity(n), |a, b| a.then(b), None).unwrap();
        assert_eq!(closure.len(), ndf_enumerate(n).len());
        let pis: Vec<NdFunction> = (1..n).map(|i| NdFunction::pi(n, i)).collect();
        let mut sub = monoid_closure(&pis, NdFunction::identity(n), |a, b| a.then(b), None).unwrap();
        sub.sort();
        assert_eq!(sub, ndpf_enumerate(n));
    }
    let n = 3;
    let w = |word: &[i32]| NdFunction::from_word(n, word);
    assert_eq!(w(&[2, 1, 2]), w(&[1, 2, 1]));
    assert_eq!(w(&[2, 1, 2]), w(&[2, 1]));
    assert_eq!(w(&[1, 1]), w(&[1]));
    assert_eq!(w(&[-1, -1]), w(&[-1]));
    let f: NdFunction = "(1,1,2)".parse().unwrap();
    assert_eq!(NdFunction::identity(3).then(&f), f);
    assert_eq!(f.to_string(), "(1,1,2)");
    assert!("(2,1,3)".parse::<NdFunction>().is_err());
}

fn ndf_generators_both(n: usize) -> Vec<NdFunction> {
    (1..n).flat_map(|i| [NdFunction::pi(n, i), NdFunction::pibar(n, i)]).collect()
}

#[test]
fn exterior_examples() {
    let f: NdFunction = "(1,1,2)".parse().unwrap();
    let m = exterior_action::<Rational>(&f, 2);
    let subsets = k_subsets(3, 2);
    let idx = |s: &str| subsets.iter().position(|x| x.to_string() == s).unwrap();
    assert_eq!(m.entry(idx("{2,3}"), idx("{1,2}")), r(1));
    assert!(m.row(idx("{1,2}")).is_zero());
    for k in 1..=3 {
        assert_eq!(
            exterior_action::<Rational>(&NdFunction::identity(3), k),
            heckegroup::linalg::SparseMatrix::identity(binomial(3, k) as usize)
        );
    }
}

#[test]
fn exterior_is_a_homomorphism() {
    for n in 1..=4 {
        let b = ExteriorBasis::new(n);
        let all = ndf_enumerate(n);
        for f in &all {
            for g in &all {
                assert_eq!(b.operator::<Rational>(f).mul(&b.operator(g)), b.operator(&f.then(g)));
            }
        }
    }
}

#[test]
fn faithful_exterior_rank() {
    for (n, expect) in [(1, 1), (2, 3), (3, 10), (4, 35), (5, 126)] {
        assert_eq!(exterior_rep_rank::<Rational>(n).unwrap(), expect);
    }
}

#[test]
fn quotient_chain_dims() {
    for n in 1..=5 {
        let q = quotient_chain::<Rational>(n).unwrap();
        assert!(q.pass, "{q:?}");
    }
    let tl = temperley_lieb_check::<Rational>(1).unwrap();
    assert!(tl.vacuous && tl.pass);
    assert_eq!(temperley_lieb_check::<Rational>(3).unwrap().dim, 5);
}

#[test]
fn idempotents() {
    for n in 1..=6 {
        for k in 1..=n {
            let rep = idempotent_report::<Rational>(n, k).unwrap();
            assert!(rep.pass, "{rep:?}");
            assert_eq!(rep.single_pass_idempotent, k <= 2, "{rep:?}");
            let top = (k..n).rev().fold(NdElement::one(n), |e, i| e.mul(&NdElement::basis(NdFunction::pi(n, i))));
            let increasing =
                (1..k).fold(top, |e, i| e.mul(&NdElement::one(n).sub(&NdElement::basis(NdFunction::pi(n, i)))));
            assert_eq!(idempotent_e::<Rational>(n, k).unwrap(), increasing);
        }
    }
    let e = idempotent_e::<Rational>(3, 2).unwrap();
    let pi = |i| NdElement::basis(NdFunction::pi(3, i));
    assert_eq!(e, pi(2).mul(&NdElement::one(3).sub(&pi(1))));
}

#[test]
fn border_map() {
    for n in 1..=6 {
        for k in 2..=n {
            assert!(border_delta::<Rational>(n, k).mul(&border_delta(n, k - 1)).is_zero());
        }
        for k in 1..=n {
            assert!(delta_intertwines::<Rational>(n, k));
        }
        let dims = simple_dims(n).unwrap();
        let expect: Vec<usize> = (1..=n).map(|k| binomial(n - 1, k - 1) as usize).collect();
        assert_eq!(dims, expect);
        assert_eq!(dims.iter().sum::<usize>(), 1 << (n - 1));
        assert!(delta_sequence_exact::<Rational>(n).unwrap());
    }
    assert_eq!(simple_dims(4).unwrap(), vec![1, 3, 3, 1]);
}

#[test]
fn cartan_bidiagonal() {
    assert_eq!(ndfa_cartan::<Rational>(3).unwrap(), vec![vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, 1]]);
    for n in 1..=5 {
        let c = ndfa_cartan::<Rational>(n).unwrap();
        for k in 1..=n {
            for l in 1..=n {
                assert_eq!(c[k - 1][l - 1], usize::from(k == l || k == l + 1), "n={n} ({k},{l})");
            }
        }
    }
}

#[test]
fn triangularity() {
    let f: NdFunction = "(1,1,3)".parse().unwrap();
    assert_eq!(first_preimages(&f).to_string(), "{1,3}");
    for n in 1..=4 {
        let t = faithfulness_triangularity(n);
        assert!(t.weak_failures.is_empty(), "n={n}: {:?}", t.weak_failures);
    }
    let t = faithfulness_triangularity(3);
    assert!(t.strict_failures.contains(&(f, NdFunction::identity(3))));
}
