use heckegroup::coxeter::{CoxeterGroup, CoxeterType};
use heckegroup::hecke::{variant_monoid, HeckeGroupAlgebra, MonoidVariant};
use heckegroup::linalg::operator_monoid;
use heckegroup::Rational;

#[test]
fn sizes() {
    let expect = [(MonoidVariant::SPi, [1, 4, 66, 6264]), (MonoidVariant::PiPibar, [1, 3, 23, 477])];
    for (variant, sizes) in expect {
        for (n, size) in (1..=4).zip(sizes) {
            let g = CoxeterGroup::new(CoxeterType::symmetric(n)).unwrap();
            assert_eq!(variant_monoid(&g, variant, None).unwrap().len(), size, "{variant} n={n}");
        }
    }
}

#[test]
fn matrices_agree() {
    for n in 1..=3 {
        let h = HeckeGroupAlgebra::<Rational>::symmetric(n).unwrap();
        let g = h.group();
        let spi: Vec<_> = g.generators().flat_map(|i| [h.s(i).clone(), h.pi(i).clone()]).collect();
        let ppb: Vec<_> = g.generators().flat_map(|i| [h.pibar(i).clone(), h.pi(i).clone()]).collect();
        assert_eq!(
            operator_monoid(h.n(), &spi, None).unwrap().len(),
            variant_monoid(g, MonoidVariant::SPi, None).unwrap().len()
        );
        assert_eq!(
            operator_monoid(h.n(), &ppb, None).unwrap().len(),
            variant_monoid(g, MonoidVariant::PiPibar, None).unwrap().len()
        );
    }
}

#[test]
fn limit_is_enforced() {
    let g = CoxeterGroup::new(CoxeterType::symmetric(4)).unwrap();
    assert!(variant_monoid(&g, MonoidVariant::SPi, Some(100)).is_err());
    assert_eq!("pi-pibar".parse::<MonoidVariant>().unwrap(), MonoidVariant::PiPibar);
    assert!("pi".parse::<MonoidVariant>().is_err());
}
