use heckegroup::coxeter::DescentSet;
use heckegroup::nd::*;
use heckegroup::Rational;
use proptest::prelude::*;

fn set(s: &str) -> DescentSet {
    DescentSet::parse(s).unwrap()
}

#[test]
fn incidence_identity() {
    for n in 1..=7 {
        assert_eq!(incidence_dimension(n) as u128, catalan(n), "n={n}");
    }
    assert_eq!((0..3).map(|k| grassmann_pairs(2, k)).collect::<Vec<_>>(), vec![1, 3, 1]);
}

#[test]
fn structure() {
    for n in 1..=5 {
        let rep = ndpfa_structure::<Rational>(n, n <= 4).unwrap();
        assert!(rep.pass, "{rep:?}");
        assert_eq!(rep.semisimple_quotient_dim, 1 << (n - 1));
    }
    let k = zero_hecke_kernel::<Rational>(4).unwrap();
    assert_eq!(k.kernel_dim, 10);
    assert!(k.contained_in_radical);
    assert_eq!(k.radical_dim, 24 - 8);
}

#[test]
fn small_projectives() {
    let (labels, p) = ndpf_projective::<Rational>(2, DescentSet::EMPTY).unwrap();
    assert_eq!(p.dim(), 1);
    assert_eq!(labels, vec![set("{1}")]);
    let (labels, p) = ndpf_projective::<Rational>(2, set("{1}")).unwrap();
    assert_eq!(p.dim(), 1);
    assert_eq!(labels, vec![set("{1,2}")]);
    // basis of P_I is {T ≤_G top}
    let (labels, _) = ndpf_projective::<Rational>(4, set("{2}")).unwrap();
    assert_eq!(labels, vec![set("{1,2}"), set("{1,3}")]);
}

#[test]
fn simples_by_trace() {
    for n in 1..=4 {
        for i in DescentSet::all(n - 1) {
            let s = pi_simple::<Rational>(n, i);
            let f = pi_composition_factors(&s, n - 1).unwrap();
            assert_eq!(f.into_iter().collect::<Vec<_>>(), vec![(i, 1)]);
        }
    }
}

fn k_subset(n: usize) -> impl Strategy<Value = (DescentSet, DescentSet)> {
    (1..=n).prop_flat_map(move |k| {
        let sets = k_subsets(n, k);
        let m = sets.len();
        (0..m, 0..m).prop_map(move |(a, b)| (sets[a], sets[b]))
    })
}

proptest! {
    #[test]
    fn grassmann_is_a_lattice((s, t) in (1usize..=5).prop_flat_map(k_subset)) {
        let m = grassmann_meet(s, t);
        let j = grassmann_join(s, t);
        prop_assert!(grassmann_leq(m, s) && grassmann_leq(m, t));
        prop_assert!(grassmann_leq(s, j) && grassmann_leq(t, j));
        let n = 5;
        for u in k_subsets(n, s.len()) {
            if grassmann_leq(u, s) && grassmann_leq(u, t) {
                prop_assert!(grassmann_leq(u, m));
            }
            if grassmann_leq(s, u) && grassmann_leq(t, u) {
                prop_assert!(grassmann_leq(j, u));
            }
        }
        prop_assert_eq!(grassmann_leq(s, t) && grassmann_leq(t, s), s == t);
    }

    #[test]
    fn grassmann_order_is_reachability((s, t) in (1usize..=4).prop_flat_map(k_subset)) {
        let n = 4;
        let reach = ndpf_enumerate(n).iter().any(|f| f.apply_set(t) == Some(s));
        prop_assert_eq!(reach, grassmann_leq(s, t));
    }
}
