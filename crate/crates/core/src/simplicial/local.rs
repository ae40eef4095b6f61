//! Cochains on affine singular simplices, locally zero cochains, and the dual
//! of the cover homotopy `omega`.

use num_traits::Zero;

use crate::chain::Cochain;
use crate::complex::OrientedComplex;
use crate::error::{Error, Result};
use crate::rational::Rational;

use super::affine::{sd_power, AffineChain, AffineSimplex};
use super::cover::OpenCover;

/// A cochain on affine singular simplices of `|K|`.
pub trait AffineCochain {
    fn degree(&self) -> usize;

    fn eval_simplex(&self, s: &AffineSimplex) -> Result<Rational>;

    fn eval(&self, c: &AffineChain) -> Result<Rational> {
        if c.degree() != self.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: c.degree() });
        }
        let mut acc = Rational::zero();
        for (s, a) in c.iter() {
            acc += a * self.eval_simplex(s)?;
        }
        Ok(acc)
    }

    /// Values on the simplices of `k` (ascending vertex tuples).
    fn restrict(&self, k: &OrientedComplex) -> Result<Cochain> {
        let d = self.degree();
        let mut out = Cochain::zero(d);
        for i in 0..k.count(d) {
            out.set(i, self.eval_simplex(&AffineSimplex::from_vertices(k.simplex(d, i)))?);
        }
        Ok(out)
    }
}

impl<T: AffineCochain + ?Sized> AffineCochain for &T {
    fn degree(&self) -> usize {
        (**self).degree()
    }
    fn eval_simplex(&self, s: &AffineSimplex) -> Result<Rational> {
        (**self).eval_simplex(s)
    }
}

/// A simplicial cochain of `K` extended by zero: its value on an affine
/// simplex is `f(sigma)` when the simplex is the ascending vertex tuple of
/// `sigma`, and zero otherwise.
pub struct ExtendedCochain<'a> {
    complex: &'a OrientedComplex,
    cochain: &'a Cochain,
}

impl<'a> ExtendedCochain<'a> {
    pub fn new(complex: &'a OrientedComplex, cochain: &'a Cochain) -> Result<Self> {
        complex.validate_cochain(cochain)?;
        Ok(Self { complex, cochain })
    }
}

impl AffineCochain for ExtendedCochain<'_> {
    fn degree(&self) -> usize {
        self.cochain.degree()
    }

    fn eval_simplex(&self, s: &AffineSimplex) -> Result<Rational> {
        let value = s
            .as_vertex_tuple()
            .filter(|v| v.windows(2).all(|w| w[0] < w[1]))
            .and_then(|v| self.complex.index_of(&v))
            .map(|i| self.cochain.value(i))
            .unwrap_or_else(Rational::zero);
        Ok(value)
    }
}

/// Cochain given by a closure.
pub struct FnCochain<F> {
    degree: usize,
    f: F,
}

impl<F: Fn(&AffineSimplex) -> Rational> FnCochain<F> {
    pub fn new(degree: usize, f: F) -> Self {
        Self { degree, f }
    }
}

impl<F: Fn(&AffineSimplex) -> Rational> AffineCochain for FnCochain<F> {
    fn degree(&self) -> usize {
        self.degree
    }
    fn eval_simplex(&self, s: &AffineSimplex) -> Result<Rational> {
        Ok((self.f)(s))
    }
}

/// `delta g`, evaluated as `g(d s)`.
pub struct Coboundary<C>(pub C);

impl<C: AffineCochain> AffineCochain for Coboundary<C> {
    fn degree(&self) -> usize {
        self.0.degree() + 1
    }
    fn eval_simplex(&self, s: &AffineSimplex) -> Result<Rational> {
        self.0.eval(&AffineChain::simplex(s.clone()).boundary())
    }
}

/// Sum `a + b` of two cochains of the same degree.
pub struct Sum<A, B>(pub A, pub B);

impl<A: AffineCochain, B: AffineCochain> AffineCochain for Sum<A, B> {
    fn degree(&self) -> usize {
        self.0.degree()
    }
    fn eval_simplex(&self, s: &AffineSimplex) -> Result<Rational> {
        Ok(self.0.eval_simplex(s)? + self.1.eval_simplex(s)?)
    }
}

/// The dual of `omega`: `(Omega f)(s) = f(omega(s))`, of degree one less than `f`.
pub struct OmegaDual<'a, C> {
    cover: &'a OpenCover,
    inner: C,
}

impl<C: AffineCochain> AffineCochain for OmegaDual<'_, C> {
    fn degree(&self) -> usize {
        self.inner.degree() - 1
    }
    fn eval_simplex(&self, s: &AffineSimplex) -> Result<Rational> {
        self.inner.eval(&self.cover.omega(&AffineChain::simplex(s.clone()))?)
    }
}

/// Small affine simplices of degree `degree` used to test local vanishing:
/// the small simplices of `k` and the small pieces of `sd^j` of simplices of
/// `k` for `j <= depth`.
pub fn small_probes(k: &OrientedComplex, cover: &OpenCover, degree: usize, depth: usize) -> Vec<AffineSimplex> {
    let mut out = Vec::new();
    for s in k.simplices(degree) {
        let base = AffineChain::simplex(AffineSimplex::from_vertices(s));
        for j in 0..=depth {
            for (piece, _) in sd_power(&base, j).iter() {
                if cover.is_small(piece) {
                    out.push(piece.clone());
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Checks that `f` vanishes on every probe from [`small_probes`].
pub fn check_locally_zero<C: AffineCochain>(
    k: &OrientedComplex,
    cover: &OpenCover,
    f: &C,
    depth: usize,
) -> Result<()> {
    for s in small_probes(k, cover, f.degree(), depth) {
        let value = f.eval_simplex(&s)?;
        if !value.is_zero() {
            return Err(Error::NotLocallyZero { value });
        }
    }
    Ok(())
}

/// Probe depth used by [`omega_dual_locally_zero`].
pub const PROBE_DEPTH: usize = 1;

/// Applies the dual of `omega` to a cochain `f` that vanishes on small
/// simplices (checked on the probe family). The result again vanishes on
/// small simplices; for a locally zero cocycle, `f + delta(Omega f) = 0`.
pub fn omega_dual_locally_zero<'a, C: AffineCochain>(
    k: &OrientedComplex,
    cover: &'a OpenCover,
    f: C,
) -> Result<OmegaDual<'a, C>> {
    if f.degree() == 0 {
        return Err(Error::DegreeOutOfRange { degree: 0, valid: "1..".into() });
    }
    check_locally_zero(k, cover, &f, PROBE_DEPTH)?;
    Ok(OmegaDual { cover, inner: f })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::rational::int;

    #[test]
    fn zero_maps_to_zero() {
        let k = corpus::circle(3);
        let cover = OpenCover::open_stars(&k);
        let zero = Cochain::zero(1);
        let f = ExtendedCochain::new(&k, &zero).unwrap();
        let omega = omega_dual_locally_zero(&k, &cover, f).unwrap();
        assert!(omega.restrict(&k).unwrap().is_zero());
    }

    #[test]
    fn rejects_non_locally_zero() {
        let k = corpus::circle(3);
        let cover = OpenCover::whole(&k);
        let g = Cochain::from_pairs(1, [(0, int(1))]);
        let f = ExtendedCochain::new(&k, &g).unwrap();
        assert!(matches!(omega_dual_locally_zero(&k, &cover, f), Err(Error::NotLocallyZero { .. })));
    }
}
