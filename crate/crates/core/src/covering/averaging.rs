//! Averaging over deck orbits with a Bruhat function: extension of
//! `Gamma`-maps along injections, the map from the bar resolution of `Gamma`
//! to cochains of `X~`, and averaged primitives of invariant coboundaries.

use num_traits::{One, Zero};

use crate::chain::Cochain;
use crate::error::{Error, Result};
use crate::groupcoh::BarCochain;
use crate::rational::{max_abs, Rational};

use super::datum::{BruhatFunction, CoveringDatum};

/// A concrete extension problem for the averaging formula
/// `beta(b)(s) = sum_g h(g^-1 s_0) alpha(g sigma(g^-1 b))(s)`.
///
/// `A` is the permutation module on the `n`-simplices of `X~`, `B` the one
/// on two copies of them (coordinate `2 i + c`), `iota` the diagonal, and
/// `sigma(b)(i) = b(i, choice[i])`, a left inverse of `iota` which is not
/// `Gamma`-equivariant for a non-invariant choice. `alpha` mixes the
/// identity with the projection onto invariants:
/// `alpha(a) = (1 - t) a + t avg_g (g.a)`.
#[derive(Clone, Debug)]
pub struct ExtensionProblem<'a> {
    covering: &'a CoveringDatum,
    h: BruhatFunction,
    degree: usize,
    choice: Vec<usize>,
    mix: Rational,
}

impl<'a> ExtensionProblem<'a> {
    pub fn new(covering: &'a CoveringDatum, degree: usize, choice: Vec<usize>, mix: Rational) -> Result<Self> {
        let count = covering.total().count(degree);
        if choice.len() != count || choice.iter().any(|&c| c > 1) {
            return Err(Error::Precondition(format!("choice needs {count} entries in {{0, 1}}")));
        }
        if mix < Rational::zero() || mix > Rational::one() {
            return Err(Error::Precondition("mixing weight must lie in [0, 1]".into()));
        }
        let p = Self { covering, h: covering.bruhat(), degree, choice, mix };
        p.check_left_inverse()?;
        Ok(p)
    }

    pub fn a_dim(&self) -> usize {
        self.covering.total().count(self.degree)
    }

    pub fn b_dim(&self) -> usize {
        2 * self.a_dim()
    }

    fn simplex_perm(&self, g: usize, i: usize) -> usize {
        let total = self.covering.total();
        let moved = self.covering.act_simplex(g, total.simplex(self.degree, i));
        total.index_of(&moved).expect("deck maps simplices to simplices")
    }

    pub fn act_a(&self, g: usize, a: &[Rational]) -> Vec<Rational> {
        let gi = self.covering.group().inv(g);
        (0..self.a_dim()).map(|i| a[self.simplex_perm(gi, i)].clone()).collect()
    }

    pub fn act_b(&self, g: usize, b: &[Rational]) -> Vec<Rational> {
        let gi = self.covering.group().inv(g);
        (0..self.b_dim()).map(|j| b[2 * self.simplex_perm(gi, j / 2) + j % 2].clone()).collect()
    }

    pub fn iota(&self, a: &[Rational]) -> Vec<Rational> {
        (0..self.b_dim()).map(|j| a[j / 2].clone()).collect()
    }

    pub fn sigma(&self, b: &[Rational]) -> Vec<Rational> {
        (0..self.a_dim()).map(|i| b[2 * i + self.choice[i]].clone()).collect()
    }

    pub fn alpha(&self, a: &[Rational]) -> Cochain {
        let group = self.covering.group();
        let order = Rational::from_integer(group.order().into());
        let mut avg = vec![Rational::zero(); self.a_dim()];
        for g in group.elements() {
            for (slot, v) in avg.iter_mut().zip(self.act_a(g, a)) {
                *slot += v;
            }
        }
        let keep = Rational::one() - &self.mix;
        let values: Vec<Rational> = a.iter().zip(avg).map(|(x, s)| &keep * x + &self.mix * s / &order).collect();
        Cochain::from_dense(self.degree, &values)
    }

    fn check_left_inverse(&self) -> Result<()> {
        for i in 0..self.a_dim() {
            let mut e = vec![Rational::zero(); self.a_dim()];
            e[i] = Rational::one();
            if self.sigma(&self.iota(&e)) != e {
                return Err(Error::Precondition("sigma is not a left inverse of iota".into()));
            }
        }
        Ok(())
    }

    /// The extension `beta: B -> C^n(X~)`.
    pub fn beta(&self, b: &[Rational]) -> Cochain {
        let group = self.covering.group();
        let total = self.covering.total();
        let mut out = Cochain::zero(self.degree);
        for g in group.elements() {
            let gi = group.inv(g);
            let image = self.alpha(&self.act_a(g, &self.sigma(&self.act_b(gi, b))));
            for i in 0..total.count(self.degree) {
                let x0 = total.simplex(self.degree, i)[0];
                let w = self.h.value(self.covering.act_vertex(gi, x0));
                if !w.is_zero() {
                    out.add_term(i, w * image.value(i));
                }
            }
        }
        out
    }
}

/// `beta^n(f)(s) = sum h(g_0^-1 s_0) ... h(g_n^-1 s_n) f(g_0, ..., g_n)` over
/// the deck group.
pub fn bar_to_cochains(covering: &CoveringDatum, h: &BruhatFunction, f: &BarCochain) -> Result<Cochain> {
    let group = covering.group();
    if f.order() != group.order() {
        return Err(Error::Precondition("bar cochain is over a group of a different order".into()));
    }
    let n = f.degree();
    let total = covering.total();
    if n > total.dim() {
        return Err(Error::DegreeOutOfRange { degree: n, valid: format!("0..={}", total.dim()) });
    }
    let weights: Vec<Vec<(usize, Rational)>> = (0..total.vertex_count())
        .map(|x| {
            group
                .elements()
                .filter_map(|g| {
                    let w = h.value(covering.act_vertex(group.inv(g), x));
                    (!w.is_zero()).then(|| (g, w.clone()))
                })
                .collect()
        })
        .collect();
    let mut out = Cochain::zero(n);
    for i in 0..total.count(n) {
        let s = total.simplex(n, i);
        let mut acc = Rational::zero();
        let mut tuple = vec![0usize; n + 1];
        accumulate(&weights, s, 0, Rational::one(), &mut tuple, f, &mut acc);
        out.set(i, acc);
    }
    Ok(out)
}

fn accumulate(
    weights: &[Vec<(usize, Rational)>],
    s: &[usize],
    pos: usize,
    w: Rational,
    tuple: &mut Vec<usize>,
    f: &BarCochain,
    acc: &mut Rational,
) {
    if pos == s.len() {
        *acc += w * f.get(tuple);
        return;
    }
    for (g, wg) in &weights[s[pos]] {
        tuple[pos] = *g;
        accumulate(weights, s, pos + 1, &w * wg, tuple, f, acc);
    }
}

/// Result of [`average_primitive`].
#[derive(Clone, Debug)]
pub struct AveragedPrimitive {
    /// `F_c(x) = sum_g h(g^-1 x) F(g x0)`.
    pub averaged: Cochain,
    /// `k = F - F_c`, invariant under the deck group.
    pub invariant_part: Cochain,
}

/// Splits a primitive `F` of an invariant 1-coboundary `f` as
/// `F = F_c + k` with `k` invariant.
pub fn average_primitive(covering: &CoveringDatum, f: &Cochain, primitive: &Cochain) -> Result<AveragedPrimitive> {
    let total = covering.total();
    if f.degree() != 1 || primitive.degree() != 0 {
        return Err(Error::Precondition("expected a 1-cochain and a 0-cochain primitive".into()));
    }
    total.validate_cochain(f)?;
    total.validate_cochain(primitive)?;
    if !covering.is_invariant(f) {
        return Err(Error::Precondition("cochain is not invariant under the deck group".into()));
    }
    if total.coboundary(primitive)? != *f {
        return Err(Error::Precondition("supplied 0-cochain is not a primitive".into()));
    }
    let group = covering.group();
    let nv = total.vertex_count();
    // F(g y) - F(g x) = F(y) - F(x): the displacement of each g is constant.
    for g in group.elements() {
        let shift = |x: usize| primitive.value(covering.act_vertex(g, x)) - primitive.value(x);
        let first = shift(0);
        if (1..nv).any(|x| shift(x) != first) {
            return Err(Error::Precondition("primitive does not satisfy the equivariance relation".into()));
        }
    }
    let h = covering.bruhat();
    let x0 = covering.basepoint();
    let mut averaged = Cochain::zero(0);
    for x in 0..nv {
        let mut v = Rational::zero();
        for g in group.elements() {
            let w = h.value(covering.act_vertex(group.inv(g), x));
            if !w.is_zero() {
                v += w * primitive.value(covering.act_vertex(g, x0));
            }
        }
        averaged.set(x, v);
    }
    let invariant_part = primitive - &averaged;
    if !covering.is_invariant(&invariant_part) {
        return Err(Error::Invariant("averaged remainder is not invariant".into()));
    }
    Ok(AveragedPrimitive { averaged, invariant_part })
}

/// `max |beta(f)| <= max |f|` check helper.
pub fn norm_decreasing(input: &[Rational], output: &Cochain) -> bool {
    output.linf_norm() <= max_abs(input)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::datum::examples;
    use crate::rational::{int, rat};

    #[test]
    fn extension_restricts_to_alpha() {
        let c = examples::cyclic_cover_of_circle(4, 2);
        let choice = (0..8).map(|i| i % 2).collect();
        let p = ExtensionProblem::new(&c, 1, choice, rat(1, 3)).unwrap();
        let a: Vec<Rational> = (0..8).map(|i| int(i - 3)).collect();
        assert_eq!(p.beta(&p.iota(&a)), p.alpha(&a));
        let b: Vec<Rational> = (0..16).map(|i| int((5 * i) % 7 - 3)).collect();
        for g in c.group().elements() {
            assert_eq!(p.beta(&p.act_b(g, &b)), c.act_cochain(g, &p.beta(&b)));
        }
    }

    #[test]
    fn bar_map_is_a_chain_map() {
        let c = examples::cyclic_cover_of_circle(3, 3);
        let f = BarCochain::from_fn(3, 0, |t| int(t[0] as i64 * 2 - 1));
        let h = c.bruhat();
        let lhs = c.total().coboundary(&bar_to_cochains(&c, &h, &f).unwrap()).unwrap();
        let rhs = bar_to_cochains(&c, &h, &f.differential()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn trivial_group_average_is_constant() {
        let c = CoveringDatum::trivial(&crate::corpus::circle(4));
        let big = Cochain::from_dense(0, &[int(2), int(5), int(-1), int(0)]);
        let f = c.total().coboundary(&big).unwrap();
        let out = average_primitive(&c, &f, &big).unwrap();
        assert!(out.averaged.iter().all(|(_, v)| *v == int(2)));
        assert_eq!(out.invariant_part.value(0), int(0));
    }
}
