//! Finite Coxeter groups of types A, B and I2(m).

mod descent;
mod group;

pub use descent::DescentSet;
pub use group::{CoxeterGroup, CoxeterType, Element, MAX_GROUP_ORDER};

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize) -> CoxeterGroup {
        CoxeterGroup::new(CoxeterType::symmetric(n)).unwrap()
    }

    fn el(g: &CoxeterGroup, x: &str) -> Element {
        g.parse_element(x).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(s(3).order(), 6);
        assert_eq!(CoxeterGroup::new("I2(5)".parse().unwrap()).unwrap().order(), 10);
        assert_eq!(CoxeterGroup::new("B2".parse().unwrap()).unwrap().order(), 8);
        assert_eq!(CoxeterGroup::new("A0".parse().unwrap()).unwrap().order(), 1);
        assert!("D4".parse::<CoxeterType>().is_err());
        assert!("I2(1)".parse::<CoxeterType>().is_err());
    }

    #[test]
    fn descents_and_recoils() {
        let g = s(4);
        assert_eq!(g.descents(el(&g, "3142")), DescentSet::from_elems([1, 3]));
        let g = s(3);
        assert_eq!(g.recoils(el(&g, "312")), DescentSet::singleton(2));
        assert!(g.descents(g.identity()).is_empty());
    }

    #[test]
    fn sorting_actions() {
        let g = s(3);
        assert_eq!(g.format(g.act_pi(el(&g, "231"), 1)), "321");
        assert_eq!(g.format(g.act_pi(el(&g, "231"), 2)), "231");
        assert_eq!(g.format(g.act_pi_word(el(&g, "213"), el(&g, "132"))), "231");
        for t in g.elements() {
            assert_eq!(g.act_pi_word(g.identity(), t), t);
            assert_eq!(g.act_pi_word(g.longest(), t), g.longest());
        }
    }

    #[test]
    fn classes() {
        let g = s(3);
        let rc: Vec<String> = g.recoil_class(DescentSet::singleton(1)).into_iter().map(|w| g.format(w)).collect();
        assert_eq!(rc, ["123", "132", "312"]);
        let sizes: Vec<usize> = g.descent_class_sizes().values().copied().collect();
        assert_eq!(sizes, [1, 2, 2, 1]);
        assert!(g.weak_right_leq(el(&g, "213"), el(&g, "231")));
        assert!(!g.weak_right_leq(el(&g, "132"), el(&g, "231")));
    }

    #[test]
    fn serialization_round_trips() {
        for t in ["A3", "B2", "B3", "I2(5)", "I2(2)"] {
            let g = CoxeterGroup::new(t.parse().unwrap()).unwrap();
            assert_eq!(g.ctype().to_string(), t);
            for w in g.elements() {
                assert_eq!(g.parse_element(&g.format(w)).unwrap(), w);
            }
        }
        let b = CoxeterGroup::new(CoxeterType::B(2)).unwrap();
        assert_eq!(b.format(b.from_word(&[2])), "+1-2");
        assert_eq!(b.length(b.parse_element("-2+1").unwrap()), 2);
    }
}
