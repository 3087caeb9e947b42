use heckegroup::coxeter::DescentSet;
use heckegroup::tower::{
    g_basis_report, projective_characters, tower_embedding, tower_report, Label, Level, Operation, TowerKind,
};
use heckegroup::Rational;

const PAIRS: [(usize, usize); 6] = [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)];

#[test]
fn embeddings() {
    assert_eq!(tower_embedding(TowerKind::HS, 2, 2), vec![0, 3, 2, 5]);
    assert_eq!(tower_embedding(TowerKind::H0, 2, 2), vec![0, 2]);
    assert_eq!(tower_embedding(TowerKind::NDFA, 1, 1), Vec::<usize>::new());
    assert_eq!(tower_embedding(TowerKind::NDPFA, 3, 1), vec![0, 1]);
}

#[test]
fn levels_are_consistent() {
    for kind in TowerKind::ALL {
        for n in 1..=3 {
            let lv = Level::<Rational>::new(kind, n).unwrap();
            let cartan = lv.cartan().unwrap();
            // Regular module: Σ dim P_K · dim S_K / dim End(S_K).
            let total: usize =
                lv.projectives.iter().zip(&lv.simples).zip(&lv.end_dims).map(|((p, s), e)| p.dim() * s.dim() / e).sum();
            assert_eq!(total, lv.algebra.dim(), "{kind} n={n}");
            for (k, row) in cartan.iter().enumerate() {
                assert_eq!(row[k], 1, "{kind} n={n}: P has its simple on top once");
                let d: usize = row.iter().zip(&lv.simples).map(|(c, s)| c * s.dim()).sum();
                assert_eq!(d, lv.projectives[k].dim());
            }
        }
    }
}

#[test]
fn zero_hecke_projectives() {
    let lv = Level::<Rational>::new(TowerKind::H0, 4).unwrap();
    let dims: Vec<usize> = lv.projectives.iter().map(|p| p.dim()).collect();
    // Number of permutations of 4 with descent set I.
    assert_eq!(dims, vec![1, 3, 5, 3, 3, 5, 3, 1]);
    assert_eq!(dims.iter().sum::<usize>(), 24);
}

#[test]
fn certificates_pass() {
    for kind in [TowerKind::H0, TowerKind::HS, TowerKind::HSAdjoint, TowerKind::NDPFA] {
        for (m, n) in PAIRS {
            let r = tower_report::<Rational>(kind, m, n).unwrap();
            for c in r.certificates.iter().filter(|c| c.asserted) {
                assert_eq!(c.pass, Some(true), "{kind} {m}+{n} {:?} {} [{}]", c.operation, c.input, c.rule);
            }
            assert!(r.pass);
        }
    }
}

#[test]
fn hs_induction_example() {
    let r = tower_report::<Rational>(TowerKind::HS, 1, 1).unwrap();
    let c = r.certificates.iter().find(|c| c.operation == Operation::InduceProjective).unwrap();
    assert_eq!(c.dim, 3);
    let top = c.top.as_ref().unwrap();
    assert_eq!(top.get("{}"), Some(&1));
    assert_eq!(top.get("{1}"), Some(&1));
}

#[test]
fn ndfa_tower() {
    for (m, n) in PAIRS {
        let r = tower_report::<Rational>(TowerKind::NDFA, m, n).unwrap();
        for c in r.certificates.iter().filter(|c| c.asserted) {
            let expect = c.operation != Operation::InduceSimple;
            assert_eq!(c.pass, Some(expect), "{m}+{n} {:?} {} [{}]", c.operation, c.input, c.rule);
        }
        let literal: Vec<_> = r.certificates.iter().filter(|c| c.rule.starts_with("P restriction rule")).collect();
        assert!(literal.iter().all(|c| !c.asserted));
        if m >= 2 || n >= 2 {
            assert!(literal.iter().any(|c| c.pass == Some(false)));
        }
    }
    let r = tower_report::<Rational>(TowerKind::NDFA, 1, 1).unwrap();
    let c = r.certificates.iter().find(|c| c.operation == Operation::InduceSimple).unwrap();
    assert_eq!(c.dim, 3);
    assert_eq!(c.composition.get("1"), Some(&1));
    assert_eq!(c.composition.get("2"), Some(&2));
}

#[test]
fn ndpfa_projective_restriction_is_reported() {
    let r = tower_report::<Rational>(TowerKind::NDPFA, 2, 1).unwrap();
    let c = r
        .certificates
        .iter()
        .find(|c| {
            c.operation == Operation::RestrictProjective
                && c.input == format!("P{}", Label::Set(DescentSet::singleton(2)))
        })
        .unwrap();
    assert!(!c.asserted);
    assert_eq!(c.pass, None);
    assert_eq!(c.projective, Some(true));
    assert_eq!(c.dim, 2);
}

#[test]
fn g_basis() {
    for n in 1..=4 {
        assert!(g_basis_report::<Rational>(n).unwrap().pass, "n = {n}");
    }
    let r = g_basis_report::<Rational>(3).unwrap();
    assert_eq!(r.transition, vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 1, 1, 0], vec![0, 0, 0, 1]]);
}

#[test]
fn hs_projective_characters() {
    for n in 1..=4 {
        let (rows, pass) = projective_characters::<Rational>(n).unwrap();
        assert!(pass, "n = {n}");
        assert!(!rows.is_empty());
    }
}

#[test]
fn bad_input() {
    assert!(tower_report::<Rational>(TowerKind::HS, 0, 2).is_err());
    assert!("XYZ".parse::<TowerKind>().is_err());
    assert_eq!("hs*".parse::<TowerKind>().unwrap(), TowerKind::HSAdjoint);
}
