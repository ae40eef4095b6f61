//! Finite regular combinatorial coverings `p: X~ -> X` with deck group
//! `Gamma`, and the indicator Bruhat function of a fundamental domain.
//!
//! The projection is required to be strictly increasing along every simplex
//! of `X~`. Deck transformations then map ascending vertex tuples to
//! ascending vertex tuples, so they act on cochains without signs and
//! ordered-simplex formulas transport along them unchanged.

use num_traits::{One, Zero};

use crate::chain::Cochain;
use crate::complex::OrientedComplex;
use crate::error::{Error, Result};
use crate::groupcoh::group::permutation_closure;
use crate::groupcoh::FiniteGroup;
use crate::rational::Rational;

/// Largest deck group accepted.
pub const DECK_ORDER_CAP: usize = 64;

#[derive(Clone, Debug)]
pub struct CoveringDatum {
    base: OrientedComplex,
    total: OrientedComplex,
    projection: Vec<usize>,
    group: FiniteGroup,
    /// `perms[g][v] = g . v`, numbered like `group`.
    perms: Vec<Vec<usize>>,
    domain: Vec<usize>,
    /// `orbit_rep[v] = (g, x)` with `x` in the domain and `g . x = v`.
    orbit_rep: Vec<(usize, usize)>,
}

impl CoveringDatum {
    pub fn new(
        base: OrientedComplex,
        total: OrientedComplex,
        projection: Vec<usize>,
        generators: &[Vec<usize>],
        domain: Vec<usize>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidCovering(msg));
        let nv = total.vertex_count();
        if projection.len() != nv || projection.iter().any(|&b| b >= base.vertex_count()) {
            return bad("projection must map every total vertex to a base vertex".into());
        }
        if base.dim() != total.dim() {
            return bad("base and total complex have different dimensions".into());
        }
        for d in 0..=total.dim() {
            for s in total.simplices(d) {
                let image: Vec<usize> = s.iter().map(|&v| projection[v]).collect();
                if image.windows(2).any(|w| w[0] >= w[1]) {
                    return bad(format!("projection is not increasing along {s:?}"));
                }
                if !base.contains(&image) {
                    return bad(format!("image of {s:?} is not a simplex of the base"));
                }
            }
        }
        let elements = permutation_closure(nv, generators, DECK_ORDER_CAP).map_err(|e| match e {
            Error::InvalidGroup(m) => Error::InvalidCovering(m),
            other => other,
        })?;
        let group = FiniteGroup::from_permutations(nv, generators, DECK_ORDER_CAP)?;
        for p in &elements {
            if (0..nv).any(|v| projection[p[v]] != projection[v]) {
                return bad(format!("deck transformation {p:?} does not commute with the projection"));
            }
            for d in 1..=total.dim() {
                for s in total.simplices(d) {
                    let image: Vec<usize> = s.iter().map(|&v| p[v]).collect();
                    if !total.contains(&image) {
                        return bad(format!("deck transformation {p:?} moves {s:?} off the complex"));
                    }
                }
            }
            let identity = p.iter().enumerate().all(|(v, &w)| v == w);
            if !identity && (0..nv).any(|v| p[v] == v) {
                return bad(format!("deck transformation {p:?} has a fixed vertex"));
            }
        }
        let order = elements.len();
        for d in 0..=base.dim() {
            let mut fiber = vec![0usize; base.count(d)];
            for s in total.simplices(d) {
                let image: Vec<usize> = s.iter().map(|&v| projection[v]).collect();
                fiber[base.index_of(&image).expect("checked above")] += 1;
            }
            if let Some(i) = fiber.iter().position(|&c| c != order) {
                return bad(format!("base simplex {:?} has {} lifts, expected {order}", base.simplex(d, i), fiber[i]));
            }
        }
        let mut orbit_rep = vec![None; nv];
        for &x in &domain {
            if x >= nv {
                return bad(format!("domain vertex {x} out of range"));
            }
            for (g, p) in elements.iter().enumerate() {
                if orbit_rep[p[x]].is_some() {
                    return bad(format!("fundamental domain meets the orbit of {x} twice"));
                }
                orbit_rep[p[x]] = Some((g, x));
            }
        }
        let orbit_rep: Vec<(usize, usize)> = match orbit_rep.into_iter().collect::<Option<Vec<_>>>() {
            Some(r) => r,
            None => return bad("fundamental domain misses an orbit".into()),
        };
        Ok(Self { base, total, projection, group, perms: elements, domain, orbit_rep })
    }

    /// The identity covering `X -> X`.
    pub fn trivial(k: &OrientedComplex) -> Self {
        let n = k.vertex_count();
        Self::new(k.clone(), k.clone(), (0..n).collect(), &[], (0..n).collect()).expect("trivial covering")
    }

    pub fn base(&self) -> &OrientedComplex {
        &self.base
    }

    pub fn total(&self) -> &OrientedComplex {
        &self.total
    }

    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    /// Basepoint `x0`: the first vertex of the fundamental domain.
    pub fn basepoint(&self) -> usize {
        self.domain[0]
    }

    pub fn act_vertex(&self, g: usize, v: usize) -> usize {
        self.perms[g][v]
    }

    /// The deck element carrying the domain representative of `v`'s orbit to `v`.
    pub fn domain_element(&self, v: usize) -> usize {
        self.orbit_rep[v].0
    }

    /// Image of a simplex of `X~`, again ascending.
    pub fn act_simplex(&self, g: usize, s: &[usize]) -> Vec<usize> {
        s.iter().map(|&v| self.perms[g][v]).collect()
    }

    /// `(g.f)(s) = f(g^-1 s)`.
    pub fn act_cochain(&self, g: usize, f: &Cochain) -> Cochain {
        let d = f.degree();
        let gi = self.group.inv(g);
        let mut out = Cochain::zero(d);
        for i in 0..self.total.count(d) {
            let moved = self.act_simplex(gi, self.total.simplex(d, i));
            out.set(i, f.value(self.total.index_of(&moved).expect("deck maps simplices to simplices")));
        }
        out
    }

    pub fn is_invariant(&self, f: &Cochain) -> bool {
        self.group.elements().all(|g| self.act_cochain(g, f) == *f)
    }

    pub fn project_simplex(&self, s: &[usize]) -> Vec<usize> {
        s.iter().map(|&v| self.projection[v]).collect()
    }

    /// `p^* f`.
    pub fn lift_cochain(&self, f: &Cochain) -> Result<Cochain> {
        self.base.validate_cochain(f)?;
        let d = f.degree();
        let mut out = Cochain::zero(d);
        for i in 0..self.total.count(d) {
            let image = self.project_simplex(self.total.simplex(d, i));
            out.set(i, f.value(self.base.index_of(&image).expect("validated covering")));
        }
        Ok(out)
    }

    /// Inverse of [`CoveringDatum::lift_cochain`] on invariant cochains.
    pub fn descend(&self, f: &Cochain) -> Result<Cochain> {
        self.total.validate_cochain(f)?;
        if !self.is_invariant(f) {
            return Err(Error::Precondition("cochain is not invariant under the deck group".into()));
        }
        let d = f.degree();
        let mut out = Cochain::zero(d);
        for i in 0..self.total.count(d) {
            let image = self.project_simplex(self.total.simplex(d, i));
            out.set(self.base.index_of(&image).expect("validated covering"), f.value(i));
        }
        Ok(out)
    }

    /// The indicator of the fundamental domain.
    pub fn bruhat(&self) -> BruhatFunction {
        let mut values = vec![Rational::zero(); self.total.vertex_count()];
        for &x in &self.domain {
            values[x] = Rational::one();
        }
        BruhatFunction { values }
    }

    /// `sum_g h(g.x)` for every vertex `x`.
    pub fn orbit_sums(&self, h: &BruhatFunction) -> Vec<Rational> {
        (0..self.total.vertex_count())
            .map(|x| self.group.elements().map(|g| h.values[self.perms[g][x]].clone()).sum())
            .collect()
    }

    /// A lift of base simplex `(d, i)`, preferring one whose first vertex
    /// lies in the fundamental domain.
    pub fn lift_simplex(&self, d: usize, i: usize) -> Vec<usize> {
        let target = self.base.simplex(d, i);
        self.total
            .simplices(d)
            .iter()
            .filter(|s| self.project_simplex(s) == target)
            .min_by_key(|s| !self.domain.contains(&s[0]))
            .cloned()
            .expect("validated covering has lifts")
    }
}

/// A function on the vertices of `X~` with `sum_g h(g.x) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruhatFunction {
    pub values: Vec<Rational>,
}

impl BruhatFunction {
    pub fn value(&self, v: usize) -> &Rational {
        &self.values[v]
    }
}

/// Coverings used by tests and the CLI.
pub mod examples {
    use super::*;
    use crate::corpus;

    /// `Z/m` acting on the `m k`-cycle over the `k`-cycle. Total vertex
    /// `(b, s)` (base vertex `b`, sheet `s`) has id `m b + s`; going once
    /// around the base moves one sheet up.
    pub fn cyclic_cover_of_circle(k: usize, m: usize) -> CoveringDatum {
        let base = corpus::circle(k);
        let id = |b: usize, s: usize| m * b + s % m;
        let mut edges = Vec::new();
        for s in 0..m {
            for b in 0..k - 1 {
                edges.push([id(b, s), id(b + 1, s)]);
            }
            edges.push([id(0, s + 1), id(k - 1, s)]);
        }
        let total = OrientedComplex::from_simplices(k * m, edges).expect("valid cycle");
        let projection = (0..k * m).map(|v| v / m).collect();
        let shift: Vec<usize> = (0..k * m).map(|v| id(v / m, v % m + 1)).collect();
        let domain = (0..k).map(|b| id(b, 0)).collect();
        CoveringDatum::new(base, total, projection, &[shift], domain).expect("valid covering")
    }

    /// The torus from a `2m x n` grid over the one from an `m x n` grid,
    /// with `Z/2` shifting rows by `m`. Grid vertex `(i, j)` of the total
    /// torus has id `2 (i' n + j) + s` where `i = i' + s m`.
    pub fn double_torus_grid(m: usize, n: usize) -> CoveringDatum {
        let base = corpus::torus_grid(m, n);
        let id = |i: usize, j: usize| {
            let i = i % (2 * m);
            2 * ((i % m) * n + j % n) + i / m
        };
        let mut tris = Vec::new();
        for i in 0..2 * m {
            for j in 0..n {
                tris.push([id(i, j), id(i + 1, j), id(i + 1, j + 1)]);
                tris.push([id(i, j), id(i, j + 1), id(i + 1, j + 1)]);
            }
        }
        let nv = 2 * m * n;
        let total = OrientedComplex::from_simplices(nv, tris).expect("valid torus");
        let projection = (0..nv).map(|v| v / 2).collect();
        let shift: Vec<usize> = (0..nv).map(|v| v ^ 1).collect();
        let domain = (0..m * n).map(|b| 2 * b).collect();
        CoveringDatum::new(base, total, projection, &[shift], domain).expect("valid covering")
    }

    pub fn standard() -> Vec<(&'static str, CoveringDatum)> {
        vec![
            ("trivial_torus7", CoveringDatum::trivial(&corpus::torus7())),
            ("z2_over_circle4", cyclic_cover_of_circle(4, 2)),
            ("z3_over_circle3", cyclic_cover_of_circle(3, 3)),
            ("z2_over_torus3x3", double_torus_grid(3, 3)),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::homology::indicator;
    use crate::rational::int;

    #[test]
    fn corpus_coverings_are_valid() {
        for (_, c) in examples::standard() {
            let h = c.bruhat();
            assert!(c.orbit_sums(&h).iter().all(|s| s.is_one()));
        }
    }

    #[test]
    fn lift_of_indicator_is_fiber_indicator() {
        let c = examples::cyclic_cover_of_circle(4, 2);
        let lifted = c.lift_cochain(&indicator(1, 0)).unwrap();
        assert_eq!(lifted.len(), 2);
        assert!(c.is_invariant(&lifted));
        assert_eq!(c.descend(&lifted).unwrap(), indicator(1, 0));
    }

    #[test]
    fn rejects_bad_data() {
        let k = corpus::circle(3);
        let swap = vec![1, 0, 2];
        assert!(CoveringDatum::new(k.clone(), k.clone(), vec![0, 1, 2], &[swap], vec![0, 1, 2]).is_err());
        assert!(CoveringDatum::new(k.clone(), k.clone(), vec![0, 1, 2], &[], vec![0, 1]).is_err());
        let _ = int(0);
    }
}
