//! Seminorm values against closed forms.

use num_traits::Signed;
use proptest::prelude::*;

use ellone::corpus;
use ellone::rational::{int, rat, Rational};
use ellone::seminorm::{duality_check, fundamental_class, l1_seminorm, linf_seminorm, DualityStatus};
use ellone::{kronecker, Chain, Cochain};

proptest! {
    /// On the `k`-edge circle every cochain is cohomologous to the constant
    /// (in cycle orientation) with the same pairing, so its seminorm is
    /// `|<f, z>| / k`.
    #[test]
    fn circle_cochain_seminorm(k in 3usize..=6, values in prop::collection::vec((-6i64..=6, 1i64..=3), 6)) {
        let complex = corpus::circle(k);
        let f = Cochain::from_pairs(1, (0..k).map(|i| (i, rat(values[i].0, values[i].1))));
        let z = corpus::circle_cycle(k);
        let expected = kronecker(&f, &z).unwrap().abs() / int(k as i64);
        prop_assert_eq!(linf_seminorm(&complex, &f).unwrap().value, expected);
    }

    /// Without `(n+1)`-simplices the seminorm is the norm.
    #[test]
    fn graph_cycle_seminorm(k in 3usize..=6, c in -5i64..=5) {
        let complex = corpus::circle(k);
        let z = corpus::circle_cycle(k).scaled(&int(c));
        prop_assert_eq!(l1_seminorm(&complex, &z).unwrap().value, int(c.abs() * k as i64));
    }
}

#[test]
fn boundaries_have_zero_seminorm() {
    let k = corpus::triangle();
    let z = k.boundary(&k.simplex_chain(2, 0)).unwrap();
    let report = duality_check(&k, &z).unwrap();
    assert_eq!(report.l1.value, Rational::from_integer(0.into()));
    assert_eq!(report.status, DualityStatus::Degenerate);
}

#[test]
fn two_circles_add() {
    let k = corpus::circle(3).disjoint_union(&corpus::circle(4));
    let z: Chain = &corpus::circle_cycle(3) + &Chain::from_pairs(1, corpus::circle_cycle(4).iter().map(|(i, a)| (i + 3, a.clone())));
    let report = duality_check(&k, &z).unwrap();
    assert_eq!(report.l1.value, int(7));
    assert_eq!(report.linf, Some(rat(1, 7)));
}

#[test]
fn surfaces_count_top_simplices() {
    for (k, top) in [(corpus::tetrahedron_boundary(), 4), (corpus::torus7(), 14)] {
        let z = fundamental_class(&k).unwrap().chain;
        assert_eq!(l1_seminorm(&k, &z).unwrap().value, int(top));
    }
    assert!(fundamental_class(&corpus::projective_plane6()).is_err());
}
