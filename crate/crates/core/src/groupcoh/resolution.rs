//! Strong resolutions of the trivial module `R` and the extension of the
//! identity of `R` to a norm non-increasing chain map into the bar resolution.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{max_abs, Rational};

use super::bar::{decode, encode, BarCochain};
use super::group::FiniteGroup;

/// An augmented complex `R -> E^0 -> E^1 -> ...` of normed `G`-modules with a
/// contracting homotopy `k^n : E^n -> E^{n-1}` (with `E^{-1} = R`).
/// Elements of `E^n` are dense coordinate vectors; `E^{-1}` has dimension 1.
pub trait StrongResolution {
    fn group(&self) -> &FiniteGroup;

    /// Dimension of `E^n`.
    fn dim(&self, n: usize) -> usize;

    /// `g . v` for `v` in `E^n`.
    fn act(&self, g: usize, n: usize, v: &[Rational]) -> Vec<Rational>;

    /// `E^n -> E^{n+1}`.
    fn differential(&self, n: usize, v: &[Rational]) -> Vec<Rational>;

    /// The augmentation `R -> E^0`.
    fn augmentation(&self, c: &Rational) -> Vec<Rational>;

    /// `k^n : E^n -> E^{n-1}`; for `n = 0` the result has length 1.
    fn homotopy(&self, n: usize, v: &[Rational]) -> Option<Vec<Rational>>;

    fn norm(&self, _n: usize, v: &[Rational]) -> Rational {
        max_abs(v)
    }
}

/// The resolution `E^n = {f : X^{n+1} -> R}` for a finite free `G`-set `X`,
/// with `k(f)(x_0, ..., x_{n-1}) = f(b, x_0, ..., x_{n-1})` for a base
/// point `b`. With `X = G` and `b = e` it is the bar resolution.
#[derive(Clone, Debug)]
pub struct SetResolution {
    group: FiniteGroup,
    /// `perm[g][x] = g . x`.
    perm: Vec<Vec<usize>>,
    base: usize,
}

impl SetResolution {
    pub fn new(group: FiniteGroup, perm: Vec<Vec<usize>>, base: usize) -> Result<Self> {
        let size = perm.first().map_or(0, Vec::len);
        if perm.len() != group.order() || perm.iter().any(|p| p.len() != size) || base >= size {
            return Err(Error::Precondition("action table has the wrong shape".into()));
        }
        for a in group.elements() {
            for b in group.elements() {
                let ab = group.mul(a, b);
                if (0..size).any(|x| perm[ab][x] != perm[a][perm[b][x]]) {
                    return Err(Error::Precondition("table is not a left action".into()));
                }
            }
        }
        Ok(Self { group, perm, base })
    }

    pub fn bar(group: &FiniteGroup) -> Self {
        let perm = group.elements().map(|g| group.elements().map(|x| group.mul(g, x)).collect()).collect();
        Self { group: group.clone(), perm, base: group.identity() }
    }

    /// `X = G x {0..copies}` with `g.(h, s) = (gh, s)`, point `(h, s)` has id
    /// `s |G| + h`, base point `(e, 0)`.
    pub fn free(group: &FiniteGroup, copies: usize) -> Self {
        let n = group.order();
        let perm = group
            .elements()
            .map(|g| (0..n * copies).map(|x| (x / n) * n + group.mul(g, x % n)).collect())
            .collect();
        Self { group: group.clone(), perm, base: group.identity() }
    }

    pub fn set_size(&self) -> usize {
        self.perm[0].len()
    }
}

impl StrongResolution for SetResolution {
    fn group(&self) -> &FiniteGroup {
        &self.group
    }

    fn dim(&self, n: usize) -> usize {
        self.set_size().pow(n as u32 + 1)
    }

    fn act(&self, g: usize, n: usize, v: &[Rational]) -> Vec<Rational> {
        let size = self.set_size();
        let gi = self.group.inv(g);
        (0..self.dim(n))
            .map(|i| {
                let moved: Vec<usize> = decode(size, n, i).iter().map(|&x| self.perm[gi][x]).collect();
                v[encode(size, &moved)].clone()
            })
            .collect()
    }

    fn differential(&self, n: usize, v: &[Rational]) -> Vec<Rational> {
        BarCochain::from_values(self.set_size(), n, v.to_vec()).expect("dimension").differential().into_values()
    }

    fn augmentation(&self, c: &Rational) -> Vec<Rational> {
        vec![c.clone(); self.set_size()]
    }

    fn homotopy(&self, n: usize, v: &[Rational]) -> Option<Vec<Rational>> {
        let size = self.set_size();
        if n == 0 {
            return Some(vec![v[self.base].clone()]);
        }
        let out = (0..self.dim(n - 1))
            .map(|i| {
                let mut t = vec![self.base];
                t.extend(decode(size, n - 1, i));
                v[encode(size, &t)].clone()
            })
            .collect();
        Some(out)
    }
}

/// `alpha^n(v)(g_0, ..., g_n) = alpha^{n-1}(g_0 k^n(g_0^-1 v))(g_1, ..., g_n)`,
/// with `alpha^{-1}` the identity of `R`.
pub fn extend_to_bar<E: StrongResolution + ?Sized>(e: &E, n: usize, v: &[Rational]) -> Result<BarCochain> {
    if v.len() != e.dim(n) {
        return Err(Error::Precondition(format!("element of E^{n} needs {} coordinates", e.dim(n))));
    }
    let group = e.group();
    let order = group.order();
    let missing = || Error::Precondition("resolution has no contracting homotopy".into());
    let mut values = vec![Rational::zero(); order.pow(n as u32 + 1)];
    let block = order.pow(n as u32);
    for g0 in group.elements() {
        let moved = e.act(group.inv(g0), n, v);
        let lowered = e.homotopy(n, &moved).ok_or_else(missing)?;
        if n == 0 {
            values[g0] = lowered[0].clone();
            continue;
        }
        let back = e.act(g0, n - 1, &lowered);
        let sub = extend_to_bar(e, n - 1, &back)?;
        for (j, x) in sub.into_values().into_iter().enumerate() {
            values[g0 * block + j] = x;
        }
    }
    BarCochain::from_values(order, n, values)
}
