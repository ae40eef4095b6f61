//! Dense cochains of the homogeneous bar resolution `F^n(G) = {f: G^{n+1} -> R}`.
//!
//! A tuple `(g_0, ..., g_n)` is stored at index `sum_i g_i |G|^(n-i)`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{max_abs, Rational};

use super::group::FiniteGroup;

/// Largest bar degree accepted by default.
pub const DEFAULT_DEGREE_CAP: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarCochain {
    order: usize,
    degree: usize,
    values: Vec<Rational>,
}

/// Decodes an index into its tuple.
pub fn decode(order: usize, degree: usize, mut index: usize) -> Vec<usize> {
    let mut tuple = vec![0; degree + 1];
    for slot in tuple.iter_mut().rev() {
        *slot = index % order;
        index /= order;
    }
    tuple
}

pub fn encode(order: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &g| acc * order + g)
}

impl BarCochain {
    pub fn zero(order: usize, degree: usize) -> Self {
        Self { order, degree, values: vec![Rational::zero(); order.pow(degree as u32 + 1)] }
    }

    pub fn from_values(order: usize, degree: usize, values: Vec<Rational>) -> Result<Self> {
        if values.len() != order.pow(degree as u32 + 1) {
            return Err(Error::Precondition(format!(
                "bar cochain of degree {degree} over a group of order {order} needs {} values, got {}",
                order.pow(degree as u32 + 1),
                values.len()
            )));
        }
        Ok(Self { order, degree, values })
    }

    pub fn from_fn(order: usize, degree: usize, mut f: impl FnMut(&[usize]) -> Rational) -> Self {
        let len = order.pow(degree as u32 + 1);
        let values = (0..len).map(|i| f(&decode(order, degree, i))).collect();
        Self { order, degree, values }
    }

    /// The constant cochain `c` in degree 0, the image of `c` under the
    /// augmentation `R -> F^0(G)`.
    pub fn constant(order: usize, c: Rational) -> Self {
        Self { order, degree: 0, values: vec![c; order] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }

    pub fn get(&self, tuple: &[usize]) -> &Rational {
        &self.values[encode(self.order, tuple)]
    }

    pub fn linf_norm(&self) -> Rational {
        max_abs(&self.values)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// `(g.f)(g_0, ..., g_n) = f(g^-1 g_0, ..., g^-1 g_n)`.
    pub fn act(&self, group: &FiniteGroup, g: usize) -> Self {
        let gi = group.inv(g);
        Self::from_fn(self.order, self.degree, |t| {
            let moved: Vec<usize> = t.iter().map(|&x| group.mul(gi, x)).collect();
            self.get(&moved).clone()
        })
    }

    pub fn is_invariant(&self, group: &FiniteGroup) -> bool {
        group.elements().all(|g| self.act(group, g) == *self)
    }

    /// `(delta f)(g_0, ..., g_{n+1}) = sum_i (-1)^i f(g_0, ..., ^g_i, ..., g_{n+1})`.
    pub fn differential(&self) -> Self {
        let mut scratch = Vec::with_capacity(self.degree + 1);
        Self::from_fn(self.order, self.degree + 1, |t| {
            let mut acc = Rational::zero();
            for i in 0..t.len() {
                scratch.clear();
                scratch.extend(t.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &g)| g));
                let v = &self.values[encode(self.order, &scratch)];
                if i % 2 == 0 {
                    acc += v;
                } else {
                    acc -= v;
                }
            }
            acc
        })
    }

    /// `k(f)(g_0, ..., g_{n-1}) = f(e, g_0, ..., g_{n-1})` for `n >= 1`.
    /// Together with [`BarCochain::augmentation_value`] in degree 0 it
    /// satisfies `delta k + k delta = Id`.
    pub fn contracting_homotopy(&self, group: &FiniteGroup) -> Result<Self> {
        if self.degree == 0 {
            return Err(Error::DegreeOutOfRange { degree: 0, valid: "1.. (use augmentation_value)".into() });
        }
        let e = group.identity();
        let mut scratch = Vec::with_capacity(self.degree + 1);
        Ok(Self::from_fn(self.order, self.degree - 1, |t| {
            scratch.clear();
            scratch.push(e);
            scratch.extend_from_slice(t);
            self.values[encode(self.order, &scratch)].clone()
        }))
    }

    /// `k^0(f) = f(e)`, the homotopy from degree 0 to the coefficients.
    pub fn augmentation_value(&self, group: &FiniteGroup) -> Result<Rational> {
        if self.degree != 0 {
            return Err(Error::DegreeOutOfRange { degree: self.degree, valid: "0".into() });
        }
        Ok(self.values[group.identity()].clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree || self.order != other.order {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(Self { order: self.order, degree: self.degree, values })
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self { order: self.order, degree: self.degree, values: self.values.iter().map(|v| v * c).collect() }
    }

    /// Sum over the orbit of a tuple under the diagonal left action; these
    /// sums form a basis of the invariant cochains.
    pub fn orbit_sum(group: &FiniteGroup, degree: usize, tuple: &[usize]) -> Self {
        let order = group.order();
        let mut out = Self::zero(order, degree);
        for g in group.elements() {
            let moved: Vec<usize> = tuple.iter().map(|&x| group.mul(g, x)).collect();
            out.values[encode(order, &moved)] += Rational::one();
        }
        out
    }
}

/// Checks the bar degree against `cap`.
pub fn check_degree(degree: usize, cap: usize) -> Result<()> {
    if degree > cap {
        return Err(Error::CapExceeded(format!("bar degree {degree} exceeds cap {cap}")));
    }
    Ok(())
}
