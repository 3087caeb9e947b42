use heckegroup::coxeter::{CoxeterGroup, CoxeterType};
use heckegroup::hecke::{disjoint_descent_pair_count, symmetric_pair_count, CommonDescent, HeckeGroupAlgebra};
use heckegroup::linalg::rank;
use heckegroup::{ratio, Rational};

type Hs = HeckeGroupAlgebra<Rational>;

#[test]
fn dimension_three_ways() {
    for (n, h) in [(1, 1), (2, 3), (3, 19), (4, 211)] {
        let a = Hs::symmetric(n).unwrap();
        assert_eq!(disjoint_descent_pair_count(a.group()), h as u128);
        assert_eq!(a.closure().unwrap().dim(), h, "closure n={n}");
        assert_eq!(a.sandwich_space().unwrap().dim(), h, "sandwich n={n}");
    }
}

#[test]
fn pair_count_sequence() {
    let seq: Vec<u128> = (0..=6).map(|n| symmetric_pair_count(n).unwrap()).collect();
    assert_eq!(seq, [1, 1, 3, 19, 211, 3651, 90921]);
    let tail: Vec<u128> = (7..=11).map(|n| symmetric_pair_count(n).unwrap()).collect();
    assert_eq!(tail, [3081513, 136407699, 7642177651, 528579161353, 44237263696473]);
    let i24 = CoxeterGroup::new(CoxeterType::I2(4)).unwrap();
    assert_eq!(disjoint_descent_pair_count(&i24), 33);
}

#[test]
fn other_families_agree() {
    for t in ["B2", "I2(3)", "I2(4)", "I2(5)", "I2(6)"] {
        let a = Hs::of_type(t.parse().unwrap()).unwrap();
        let h = disjoint_descent_pair_count(a.group()) as usize;
        assert_eq!(a.closure().unwrap().dim(), h, "{t}");
        assert_eq!(a.sandwich_space().unwrap().dim(), h, "{t}");
        assert_eq!(a.basis_b().len(), h, "{t}");
    }
}

#[test]
fn basis_b_is_triangular_and_spans() {
    for n in 1..=4 {
        let a = Hs::symmetric(n).unwrap();
        let b = a.basis_b();
        assert!(b.iter().all(|e| a.check_triangularity(e)), "n={n}");
        let closure = a.closure().unwrap();
        assert!(b.iter().all(|e| closure.contains(&e.op)));
        let flat: Vec<_> = b.iter().map(|e| e.op.flatten()).collect();
        assert_eq!(rank(&flat).unwrap(), b.len());
    }
}

#[test]
fn relation_forms_independent() {
    for n in 1..=4 {
        let a = Hs::symmetric(n).unwrap();
        let total = a.n() * a.n();
        let h = disjoint_descent_pair_count(a.group()) as usize;
        for choice in [CommonDescent::Smallest, CommonDescent::Largest] {
            let forms = a.relation_forms(choice);
            assert_eq!(forms.len(), total - h);
            assert_eq!(rank(&forms).unwrap(), total - h);
        }
    }
}

#[test]
fn relations_hold() {
    for n in 1..=5 {
        let a = Hs::symmetric(n).unwrap();
        for r in a.relation_pack().into_iter().chain(a.rewrite_relations()) {
            assert!(r.holds, "n={n}: {}", r.name);
        }
    }
}

#[test]
fn hs2_table_verbatim() {
    let a = Hs::symmetric(2).unwrap();
    let names = ["1", "s1", "pi1"];
    let ops = [a.identity(), a.s(1).clone(), a.pi(1).clone()];
    let table = heckegroup::hecke::multiplication_table(&names, &ops).unwrap();
    let expected = [["1", "s1", "pi1"], ["s1", "1", "pi1"], ["pi1", "1 + s1 - pi1", "pi1"]];
    assert_eq!(table, expected.map(|r| r.map(String::from).to_vec()).to_vec());
    assert_eq!(a.pibar(1), &a.identity().add(a.s(1)).sub(a.pi(1)));
}

#[test]
fn generic_q_quadratic() {
    for n in 1..=4 {
        let a = Hs::symmetric(n).unwrap();
        for q in [ratio(2, 1), ratio(-1, 1), ratio(1, 3)] {
            for r in a.hecke_q_relations(&q) {
                assert!(r.holds, "n={n}: {}", r.name);
            }
        }
    }
}
