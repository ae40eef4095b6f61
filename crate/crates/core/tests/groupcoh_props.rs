//! Bar resolution identities and the extension to the bar resolution.

use num_traits::Zero;
use proptest::prelude::*;

use ellone::groupcoh::{extend_to_bar, BarCochain, FiniteGroup, SetResolution, StrongResolution};
use ellone::rational::{max_abs, rat, Rational};

fn group(index: usize) -> FiniteGroup {
    match index {
        0 => FiniteGroup::cyclic(2),
        1 => FiniteGroup::cyclic(3),
        2 => FiniteGroup::cyclic(4),
        3 => FiniteGroup::symmetric3(),
        _ => FiniteGroup::dihedral(4),
    }
}

fn values(len: usize, seed: &[(i64, i64)]) -> Vec<Rational> {
    (0..len).map(|i| { let (p, q) = seed[(i * 5 + 3) % seed.len()]; rat(p, q) }).collect()
}

proptest! {
    #[test]
    fn differential_squares_to_zero(g in 0usize..5, n in 0usize..2, seed in prop::collection::vec((-5i64..=5, 1i64..=3), 16)) {
        let group = group(g);
        let order = group.order();
        let f = BarCochain::from_values(order, n, values(order.pow(n as u32 + 1), &seed)).unwrap();
        prop_assert!(f.differential().differential().is_zero());
    }

    #[test]
    fn extension_is_norm_non_increasing(g in 0usize..4, n in 0usize..=2, copies in 1usize..=2, seed in prop::collection::vec((-5i64..=5, 1i64..=3), 16)) {
        let group = group(g);
        let e = SetResolution::free(&group, copies);
        let v = values(e.dim(n), &seed);
        let image = extend_to_bar(&e, n, &v).unwrap();
        prop_assert!(image.linf_norm() <= max_abs(&v));
        if n < 2 {
            let next = extend_to_bar(&e, n + 1, &e.differential(n, &v)).unwrap();
            prop_assert_eq!(next, image.differential());
        }
    }

    #[test]
    fn bar_extension_is_identity(g in 0usize..4, n in 0usize..=2, seed in prop::collection::vec((-5i64..=5, 1i64..=3), 16)) {
        let group = group(g);
        let e = SetResolution::bar(&group);
        let v = values(e.dim(n), &seed);
        // on the bar resolution the extension reproduces invariant inputs
        let mut inv = vec![Rational::zero(); v.len()];
        for h in group.elements() {
            for (slot, x) in inv.iter_mut().zip(e.act(h, n, &v)) {
                *slot += x;
            }
        }
        let image = extend_to_bar(&e, n, &inv).unwrap();
        prop_assert_eq!(image.values(), &inv[..]);
    }
}
