//! Chain complex identities on random complexes.

use proptest::prelude::*;

use ellone::complex::OrientedComplex;
use ellone::homology::{betti_numbers, homology_rank};
use ellone::rational::int;
use ellone::{kronecker, Chain, Cochain};

fn complex_strategy() -> impl Strategy<Value = OrientedComplex> {
    (3usize..=6)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(prop::collection::btree_set(0..n, 1..=3), 1..8)))
        .prop_map(|(n, tops)| {
            let tops: Vec<Vec<usize>> = tops.into_iter().map(|s| s.into_iter().collect()).collect();
            OrientedComplex::from_simplices(n, &tops).unwrap()
        })
}

fn coeffs(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, len)
}

proptest! {
    #[test]
    fn boundary_squares_to_zero(k in complex_strategy(), seed in coeffs(64)) {
        for d in 2..=k.dim() {
            let c = Chain::from_pairs(d, (0..k.count(d)).map(|i| (i, int(seed[i % seed.len()]))));
            prop_assert!(k.boundary(&k.boundary(&c).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn coboundary_is_adjoint(k in complex_strategy(), a in coeffs(64), b in coeffs(64)) {
        for d in 1..=k.dim() {
            let c = Chain::from_pairs(d, (0..k.count(d)).map(|i| (i, int(a[i % a.len()]))));
            let f = Cochain::from_pairs(d - 1, (0..k.count(d - 1)).map(|i| (i, int(b[(i * 7) % b.len()]))));
            let left = kronecker(&k.coboundary(&f).unwrap(), &c).unwrap();
            let right = kronecker(&f, &k.boundary(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn euler_characteristic_from_betti_numbers(k in complex_strategy()) {
        let alternating: i64 = betti_numbers(&k)
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        prop_assert_eq!(alternating, k.euler_characteristic());
    }

    #[test]
    fn cones_are_acyclic(k in complex_strategy()) {
        let (cone, _) = k.cone();
        prop_assert_eq!(homology_rank(&cone, 0), 1);
        for d in 1..=cone.dim() {
            prop_assert_eq!(homology_rank(&cone, d), 0);
        }
    }

    #[test]
    fn components_give_h0(k in complex_strategy()) {
        let count = k.components().iter().collect::<std::collections::BTreeSet<_>>().len();
        prop_assert_eq!(homology_rank(&k, 0), count);
    }
}

#[test]
fn rejects_out_of_range_vertices() {
    assert!(OrientedComplex::from_simplices(2, &[vec![0usize, 2]]).is_err());
}

/// Rank of a dense rational matrix by Gaussian elimination.
fn dense_rank(mut rows: Vec<Vec<ellone::Rational>>) -> usize {
    use num_traits::Zero;
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let factor = &row[c] / &pivot_row[c];
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x -= &factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[allow(clippy::needless_range_loop)]
fn dense_boundary(k: &OrientedComplex, d: usize) -> Vec<Vec<ellone::Rational>> {
    let mut m = vec![vec![int(0); k.count(d)]; k.count(d - 1)];
    for j in 0..k.count(d) {
        for (sign, i) in k.faces(d, j) {
            m[i][j] = int(sign.into());
        }
    }
    m
}

fn dense_betti(k: &OrientedComplex, d: usize) -> usize {
    let rank_out = if d >= 1 && k.count(d - 1) > 0 { dense_rank(dense_boundary(k, d)) } else { 0 };
    let rank_in = if d < k.dim() { dense_rank(dense_boundary(k, d + 1)) } else { 0 };
    k.count(d) - rank_out - rank_in
}

#[test]
fn ranks_match_dense_elimination() {
    for (name, k) in ellone::corpus::small(200) {
        for d in 0..=k.dim() {
            assert_eq!(homology_rank(&k, d), dense_betti(&k, d), "{name} degree {d}");
        }
    }
}

proptest! {
    #[test]
    fn random_ranks_match_dense_elimination(k in complex_strategy()) {
        for d in 0..=k.dim() {
            prop_assert_eq!(homology_rank(&k, d), dense_betti(&k, d));
        }
    }

    #[test]
    fn norms_are_norms(a in coeffs(12), b in coeffs(12), s in -4i64..=4) {
        let x = Chain::from_pairs(1, a.iter().enumerate().map(|(i, &v)| (i, int(v))));
        let y = Chain::from_pairs(1, b.iter().enumerate().map(|(i, &v)| (i, int(v))));
        prop_assert!((&x + &y).l1_norm() <= x.l1_norm() + y.l1_norm());
        prop_assert_eq!(x.scaled(&int(s)).l1_norm(), int(s.abs()) * x.l1_norm());
        let f = Cochain::from_pairs(1, a.iter().enumerate().map(|(i, &v)| (i, int(v))));
        let g = Cochain::from_pairs(1, b.iter().enumerate().map(|(i, &v)| (i, int(v))));
        prop_assert!((&f + &g).linf_norm() <= f.linf_norm() + g.linf_norm());
        prop_assert_eq!(f.scaled(&int(s)).linf_norm(), int(s.abs()) * f.linf_norm());
    }
}
