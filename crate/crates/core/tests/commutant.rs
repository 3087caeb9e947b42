use heckegroup::nd::{evaluation_commutant, CommutantVariant};
use heckegroup::Rational;

#[test]
fn words() {
    for (n, a, end_e, h) in [(2, 2, 6, 3), (2, 3, 15, 3), (3, 3, 93, 19)] {
        let r = evaluation_commutant::<Rational>(n, CommutantVariant::Words { alphabet: a }).unwrap();
        assert_eq!((r.end_e_dim, r.commutant_dim, r.s_pi_dim), (end_e, h, h), "{r:?}");
        assert!(r.s_pi_in_commutant);
    }
    assert!(evaluation_commutant::<Rational>(3, CommutantVariant::Words { alphabet: 2 }).is_err());
}

#[test]
fn parking_and_initial() {
    for (n, h) in [(2, 3), (3, 19)] {
        for v in [CommutantVariant::Parking, CommutantVariant::Initial] {
            let r = evaluation_commutant::<Rational>(n, v).unwrap();
            assert_eq!((r.commutant_dim, r.s_pi_dim), (h, h), "{r:?}");
            assert!(r.s_pi_in_commutant);
        }
    }
}
