//! Small named complexes used by tests, benchmarks and the CLI.

use crate::chain::Chain;
use crate::complex::OrientedComplex;
use crate::rational::int;

pub fn point() -> OrientedComplex {
    OrientedComplex::point()
}

/// The `k`-edge circle: edges `[i, i+1]` for `i < k-1`, then `[0, k-1]`.
pub fn circle(k: usize) -> OrientedComplex {
    assert!(k >= 3, "a simplicial circle needs at least 3 vertices");
    let mut edges: Vec<[usize; 2]> = (0..k - 1).map(|i| [i, i + 1]).collect();
    edges.push([0, k - 1]);
    OrientedComplex::from_simplices(k, edges).expect("valid circle")
}

/// The loop `0 -> 1 -> ... -> k-1 -> 0` on [`circle`].
pub fn circle_cycle(k: usize) -> Chain {
    let mut pairs: Vec<_> = (0..k - 1).map(|i| (i, int(1))).collect();
    pairs.push((k - 1, int(-1)));
    Chain::from_pairs(1, pairs)
}

/// A single `n`-simplex with all its faces.
pub fn simplex(n: usize) -> OrientedComplex {
    OrientedComplex::from_simplices(n + 1, [(0..=n).collect::<Vec<_>>()]).expect("valid simplex")
}

pub fn triangle() -> OrientedComplex {
    simplex(2)
}

/// The boundary of the tetrahedron, a 2-sphere.
pub fn tetrahedron_boundary() -> OrientedComplex {
    OrientedComplex::from_simplices(4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).expect("valid sphere")
}

/// The minimal 7-vertex torus.
pub fn torus7() -> OrientedComplex {
    let mut tris = Vec::new();
    for i in 0..7 {
        tris.push([i, (i + 1) % 7, (i + 3) % 7]);
        tris.push([i, (i + 2) % 7, (i + 3) % 7]);
    }
    OrientedComplex::from_simplices(7, tris).expect("valid torus")
}

fn grid(m: usize, n: usize, twisted: bool) -> OrientedComplex {
    assert!(m >= 3 && n >= 3, "grid quotients need at least 3 rows and columns");
    let vertex = |i: usize, j: usize| {
        let (i, j) = if i == m && twisted { (0, (n - j % n) % n) } else { (i % m, j % n) };
        i * n + j
    };
    let mut tris = Vec::with_capacity(2 * m * n);
    for i in 0..m {
        for j in 0..n {
            tris.push([vertex(i, j), vertex(i + 1, j), vertex(i + 1, j + 1)]);
            tris.push([vertex(i, j), vertex(i, j + 1), vertex(i + 1, j + 1)]);
        }
    }
    OrientedComplex::from_simplices(m * n, tris).expect("valid grid quotient")
}

/// Torus from an `m x n` grid of squares, vertex `(i, j)` has id `i*n + j`.
pub fn torus_grid(m: usize, n: usize) -> OrientedComplex {
    grid(m, n, false)
}

/// Klein bottle from an `m x n` grid glued with a flip along the rows.
pub fn klein_grid(m: usize, n: usize) -> OrientedComplex {
    grid(m, n, true)
}

/// The 6-vertex real projective plane.
pub fn projective_plane6() -> OrientedComplex {
    let tris = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 5, 1],
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 1],
        [4, 5, 2],
        [5, 1, 3],
    ];
    OrientedComplex::from_simplices(6, tris).expect("valid projective plane")
}

/// The 5-vertex Möbius strip.
pub fn mobius5() -> OrientedComplex {
    let tris: Vec<[usize; 3]> = (0..5).map(|i| [i, (i + 1) % 5, (i + 2) % 5]).collect();
    OrientedComplex::from_simplices(5, tris).expect("valid Möbius strip")
}

/// Cone over `base` with apex `base.vertex_count()`.
pub fn cone_over(base: &OrientedComplex) -> OrientedComplex {
    base.cone().0
}

/// The test corpus of named complexes.
pub fn standard() -> Vec<(&'static str, OrientedComplex)> {
    vec![
        ("point", point()),
        ("circle3", circle(3)),
        ("circle4", circle(4)),
        ("circle5", circle(5)),
        ("circle6", circle(6)),
        ("two_circles", circle(3).disjoint_union(&circle(4))),
        ("triangle", triangle()),
        ("sphere", tetrahedron_boundary()),
        ("torus7", torus7()),
        ("klein", klein_grid(3, 4)),
        ("projective_plane", projective_plane6()),
        ("mobius", mobius5()),
        ("cone_circle4", cone_over(&circle(4))),
        ("cone_triangle", cone_over(&triangle())),
    ]
}

/// The corpus members of dimension at most 2 with at most `max_simplices`
/// simplices.
pub fn small(max_simplices: usize) -> Vec<(&'static str, OrientedComplex)> {
    standard().into_iter().filter(|(_, k)| k.dim() <= 2 && k.total_count() <= max_simplices).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::betti_numbers;

    fn is_closed_surface(k: &OrientedComplex) -> bool {
        let mut count = vec![0; k.count(1)];
        for i in 0..k.count(2) {
            for (_, e) in k.faces(2, i) {
                count[e] += 1;
            }
        }
        count.iter().all(|&c| c == 2)
    }

    #[test]
    fn surfaces() {
        for (k, chi) in [(torus7(), 0), (torus_grid(3, 3), 0), (klein_grid(3, 4), 0), (projective_plane6(), 1)] {
            assert!(is_closed_surface(&k));
            assert_eq!(k.euler_characteristic(), chi);
        }
        assert_eq!(torus7().count(2), 14);
        assert_eq!(betti_numbers(&torus7()), vec![1, 2, 1]);
        assert_eq!(betti_numbers(&klein_grid(3, 4)), vec![1, 1, 0]);
        assert_eq!(betti_numbers(&projective_plane6()), vec![1, 0, 0]);
        assert_eq!(torus_grid(25, 20).count(2), 1000);
    }

    #[test]
    fn circle_cycle_is_closed() {
        for k in 3..7 {
            assert!(circle(k).boundary(&circle_cycle(k)).unwrap().is_zero());
        }
    }
}
