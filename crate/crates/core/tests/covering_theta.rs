use proptest::prelude::*;

use ellone::corpus;
use ellone::covering::{LineBruhat, LineCover};
use ellone::homology::coboundary_primitive;
use ellone::rational::{int, rat};
use ellone::{kronecker, Cochain};

fn cochain(k: usize, values: &[(i64, i64)]) -> Cochain {
    Cochain::from_pairs(1, (0..k).map(|i| (i, rat(values[i].0, values[i].1))))
}

proptest! {
    /// With the hat function `theta(f)` is the constant cochain carrying the
    /// pairing of `f` with the fundamental cycle, spread over `k` edges.
    #[test]
    fn hat_theta_is_averaged(k in 3usize..=6, values in prop::collection::vec((-6i64..=6, 1i64..=3), 6)) {
        let line = LineCover::new(k, LineBruhat::Hat);
        let f = cochain(k, &values);
        let t = line.theta(&f).unwrap();
        let z = corpus::circle_cycle(k);
        let mean = kronecker(&f, &z).unwrap() / int(k as i64);
        for (i, a) in z.iter() {
            prop_assert_eq!(t.value(i), &mean * a);
        }
    }

    /// The indicator gives a cohomologous cochain whose norm is bounded by
    /// `k ||f||` only.
    #[test]
    fn indicator_theta_is_cohomologous(k in 3usize..=5, values in prop::collection::vec((-6i64..=6, 1i64..=3), 5)) {
        let line = LineCover::new(k, LineBruhat::Indicator);
        let f = cochain(k, &values);
        let t = line.theta(&f).unwrap();
        prop_assert!(coboundary_primitive(line.base(), &(&t - &f)).unwrap().is_some());
        prop_assert!(t.linf_norm() <= int(k as i64) * f.linf_norm());
    }
}

/// With the indicator of the fundamental domain all of `theta(f)` sits on
/// the edge `[0, k-1]` whose lift leaves the domain, so the bound `k ||f||`
/// is attained by the cycle-oriented constant cochain.
#[test]
fn indicator_concentrates_on_the_wrapping_edge() {
    let line = LineCover::new(3, LineBruhat::Indicator);
    let f = Cochain::from_pairs(1, [(0, int(1)), (1, int(1)), (2, int(-1))]);
    let t = line.theta(&f).unwrap();
    assert_eq!(t, Cochain::from_pairs(1, [(2, int(-3))]));
    assert_eq!(t.linf_norm(), int(3) * f.linf_norm());
}

proptest! {
    #[test]
    fn theta_commutes_with_coboundary(k in 3usize..=6, values in prop::collection::vec(-6i64..=6, 6), hat in any::<bool>()) {
        let line = LineCover::new(k, if hat { LineBruhat::Hat } else { LineBruhat::Indicator });
        let g = Cochain::from_pairs(0, (0..k).map(|i| (i, int(values[i]))));
        let base = line.base();
        let left = base.coboundary(&line.theta(&g).unwrap()).unwrap();
        let right = line.theta(&base.coboundary(&g).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}
