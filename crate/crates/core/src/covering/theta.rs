//! The map `theta` from cochains on `X` to cochains on `X` through the bar
//! resolution of the deck group, for a contractible `X~` with an explicit
//! cone operator:
//!
//! `theta(f)(s) = sum h(g_0^-1 s_0) ... h(g_n^-1 s_n) (p^* f)(sbar(g_0, ..., g_n))`
//!
//! with `sbar(g_0) = g_0 x0` and
//! `sbar(g_0, ..., g_{n+1}) = g_0 T(g_0^-1 sbar(g_1, ..., g_{n+1}))`.
//!
//! Two shapes are supported: the trivial group acting on a cone, and the
//! integers acting on the triangulated line over a `k`-edge circle.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::chain::{Chain, Cochain};
use crate::complex::OrientedComplex;
use crate::corpus;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::simplicial::ConeDatum;

/// A finitely supported chain on the line, degree 0 (keyed by vertex) or 1
/// (keyed by the left end `y` of the edge `[y, y+1]`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LineChain {
    pub degree: usize,
    pub terms: BTreeMap<i64, Rational>,
}

impl LineChain {
    pub fn zero(degree: usize) -> Self {
        Self { degree, terms: BTreeMap::new() }
    }

    pub fn vertex(y: i64) -> Self {
        Self { degree: 0, terms: BTreeMap::from([(y, Rational::one())]) }
    }

    fn add_term(&mut self, key: i64, a: Rational) {
        let e = self.terms.entry(key).or_insert_with(Rational::zero);
        *e += a;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn translate(&self, by: i64) -> Self {
        Self { degree: self.degree, terms: self.terms.iter().map(|(y, a)| (y + by, a.clone())).collect() }
    }

    pub fn boundary(&self) -> Self {
        let mut out = Self::zero(0);
        if self.degree == 1 {
            for (y, a) in &self.terms {
                out.add_term(y + 1, a.clone());
                out.add_term(*y, -a);
            }
        }
        out
    }

    pub fn l1_norm(&self) -> Rational {
        self.terms.values().map(|a| a.abs()).sum()
    }
}

/// Choice of partition of unity on the line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineBruhat {
    /// Indicator of `{0, ..., k-1}`.
    Indicator,
    /// `h(y) = max(0, 1 - |y|/k)`.
    Hat,
}

/// The integers acting by translation by multiples of `k` on the line
/// triangulated by the integers, with quotient the `k`-edge circle.
/// The deck element `m` is translation by `m k`; the basepoint is `0` and
/// `T` sends a vertex `y` to the edge path from `0` to `y`.
#[derive(Clone, Debug)]
pub struct LineCover {
    k: usize,
    base: OrientedComplex,
    bruhat: LineBruhat,
}

impl LineCover {
    pub fn new(k: usize, bruhat: LineBruhat) -> Self {
        Self { k, base: corpus::circle(k), bruhat }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn base(&self) -> &OrientedComplex {
        &self.base
    }

    pub fn project(&self, y: i64) -> usize {
        y.rem_euclid(self.k as i64) as usize
    }

    /// `h(y)`.
    pub fn h(&self, y: i64) -> Rational {
        let k = self.k as i64;
        match self.bruhat {
            LineBruhat::Indicator => {
                if (0..k).contains(&y) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }
            LineBruhat::Hat => {
                if y.abs() >= k {
                    Rational::zero()
                } else {
                    Rational::new((k - y.abs()).into(), k.into())
                }
            }
        }
    }

    /// Deck elements `m` with `h(y - m k) != 0`, with their weights.
    pub fn weights(&self, y: i64) -> Vec<(i64, Rational)> {
        let k = self.k as i64;
        let q = y.div_euclid(k);
        (q - 1..=q + 1).filter_map(|m| Some((m, self.h(y - m * k))).filter(|(_, w)| !w.is_zero())).collect()
    }

    /// `sum_m h(y + m k)`, equal to one for every `y`.
    pub fn orbit_sum(&self, y: i64) -> Rational {
        self.weights(y).into_iter().map(|(_, w)| w).sum()
    }

    /// The cone operator at `0`: `T(y)` is the path from `0` to `y`; `T` is
    /// zero on edges.
    pub fn cone(&self, c: &LineChain) -> LineChain {
        let mut out = LineChain::zero(c.degree + 1);
        if c.degree == 0 {
            for (y, a) in &c.terms {
                if *y >= 0 {
                    for i in 0..*y {
                        out.add_term(i, a.clone());
                    }
                } else {
                    for i in *y..0 {
                        out.add_term(i, -a);
                    }
                }
            }
        }
        out
    }

    /// `sbar(g_0, ..., g_n)` for deck elements given as integers.
    pub fn sbar(&self, g: &[i64]) -> Result<LineChain> {
        let k = self.k as i64;
        match g {
            [] => Err(Error::Precondition("sbar needs at least one group element".into())),
            [g0] => Ok(LineChain::vertex(g0 * k)),
            [g0, rest @ ..] => {
                let inner = self.sbar(rest)?;
                Ok(self.cone(&inner.translate(-g0 * k)).translate(g0 * k))
            }
        }
    }

    /// `(p^* f)(c)`.
    pub fn pullback_eval(&self, f: &Cochain, c: &LineChain) -> Result<Rational> {
        if f.degree() != c.degree {
            return Err(Error::DegreeMismatch { left: f.degree(), right: c.degree });
        }
        let mut acc = Rational::zero();
        for (y, a) in &c.terms {
            let value = if c.degree == 0 {
                f.value(self.project(*y))
            } else {
                let (lo, hi) = (self.project(*y), self.project(y + 1));
                let (i, sign) = self.base.oriented_index(&[lo, hi]).expect("edge of the circle");
                if sign > 0 {
                    f.value(i)
                } else {
                    -f.value(i)
                }
            };
            acc += a * value;
        }
        Ok(acc)
    }

    /// Value of `theta~(p^* f)` on the singular simplex with vertices `ys`.
    pub fn theta_lifted(&self, f: &Cochain, ys: &[i64]) -> Result<Rational> {
        let weights: Vec<Vec<(i64, Rational)>> = ys.iter().map(|&y| self.weights(y)).collect();
        let mut acc = Rational::zero();
        let mut tuple = vec![0i64; ys.len()];
        self.theta_rec(f, &weights, 0, Rational::one(), &mut tuple, &mut acc)?;
        Ok(acc)
    }

    fn theta_rec(
        &self,
        f: &Cochain,
        weights: &[Vec<(i64, Rational)>],
        pos: usize,
        w: Rational,
        tuple: &mut Vec<i64>,
        acc: &mut Rational,
    ) -> Result<()> {
        if pos == weights.len() {
            *acc += w * self.pullback_eval(f, &self.sbar(tuple)?)?;
            return Ok(());
        }
        for (g, wg) in &weights[pos] {
            tuple[pos] = *g;
            self.theta_rec(f, weights, pos + 1, &w * wg, tuple, acc)?;
        }
        Ok(())
    }

    /// A lift of a base simplex as a vertex sequence in the base order: the
    /// vertices `0..k-1` themselves, except that the edge `[0, k-1]` lifts to
    /// `(0, -1)`.
    pub fn lift(&self, s: &[usize]) -> Vec<i64> {
        match s {
            [0, last] if *last == self.k - 1 => vec![0, -1],
            _ => s.iter().map(|&v| v as i64).collect(),
        }
    }

    /// `theta^n(f)` as a cochain on the circle.
    pub fn theta(&self, f: &Cochain) -> Result<Cochain> {
        self.base.validate_cochain(f)?;
        let n = f.degree();
        let mut out = Cochain::zero(n);
        for i in 0..self.base.count(n) {
            out.set(i, self.theta_lifted(f, &self.lift(self.base.simplex(n, i)))?);
        }
        Ok(out)
    }
}

/// `theta` for the trivial group acting on a cone, with `h = 1` and `x0` the apex.
pub fn cone_theta(cone: &ConeDatum, f: &Cochain) -> Result<Cochain> {
    let k = cone.complex();
    k.validate_cochain(f)?;
    let n = f.degree();
    let sbar = cone_sbar(cone, n)?;
    let value = crate::chain::kronecker(f, &sbar)?;
    Ok(Cochain::from_pairs(n, (0..k.count(n)).map(|i| (i, value.clone()))))
}

/// `sbar(e, ..., e)` with `n + 1` entries for the trivial group on a cone.
pub fn cone_sbar(cone: &ConeDatum, n: usize) -> Result<Chain> {
    let mut c = Chain::from_pairs(0, [(cone.apex(), Rational::one())]);
    for _ in 0..n {
        c = cone.homotopy(&c)?;
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::indicator;
    use crate::rational::{int, rat};

    #[test]
    fn sbar_unrolls_to_paths() {
        let line = LineCover::new(3, LineBruhat::Indicator);
        let path = line.sbar(&[0, 1]).unwrap();
        assert_eq!(path.terms.keys().copied().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(path.boundary(), {
            let mut b = LineChain::vertex(3);
            b.add_term(0, int(-1));
            b
        });
        assert_eq!(line.sbar(&[2]).unwrap(), LineChain::vertex(6));
    }

    #[test]
    fn partition_of_unity() {
        for bruhat in [LineBruhat::Indicator, LineBruhat::Hat] {
            let line = LineCover::new(4, bruhat);
            assert!((-20..20).all(|y| line.orbit_sum(y).is_one()));
        }
    }

    #[test]
    fn theta_of_edge_indicator() {
        let line = LineCover::new(3, LineBruhat::Hat);
        let f = indicator(1, 0);
        let t = line.theta(&f).unwrap();
        assert_eq!(t.value(0), rat(1, 3));
        assert_eq!(t.value(2), rat(-1, 3));
        let z = corpus::circle_cycle(3);
        assert_eq!(crate::kronecker(&t, &z).unwrap(), crate::kronecker(&f, &z).unwrap());
    }

    #[test]
    fn cone_case() {
        let cone = ConeDatum::over(&corpus::circle(3));
        let f0 = Cochain::from_pairs(0, [(cone.apex(), int(7)), (0, int(2))]);
        let t = cone_theta(&cone, &f0).unwrap();
        assert!(t.iter().all(|(_, v)| *v == int(7)));
        assert!(cone_sbar(&cone, 1).unwrap().is_zero());
    }
}
