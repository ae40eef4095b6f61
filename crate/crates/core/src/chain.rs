//! Sparse chains and cochains indexed by simplex index.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

macro_rules! sparse_vector {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Debug, PartialEq, Eq, Hash)]
        pub struct $name {
            degree: usize,
            coeffs: BTreeMap<usize, Rational>,
        }

        impl $name {
            pub fn zero(degree: usize) -> Self {
                Self { degree, coeffs: BTreeMap::new() }
            }

            pub fn from_pairs(degree: usize, pairs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
                let mut out = Self::zero(degree);
                for (i, a) in pairs {
                    out.add_term(i, a);
                }
                out
            }

            /// Dense values, index `i` at position `i`.
            pub fn from_dense(degree: usize, values: &[Rational]) -> Self {
                Self::from_pairs(degree, values.iter().cloned().enumerate())
            }

            pub fn degree(&self) -> usize {
                self.degree
            }

            pub fn get(&self, index: usize) -> Option<&Rational> {
                self.coeffs.get(&index)
            }

            /// Coefficient, zero when absent.
            pub fn value(&self, index: usize) -> Rational {
                self.coeffs.get(&index).cloned().unwrap_or_else(Rational::zero)
            }

            pub fn set(&mut self, index: usize, value: Rational) {
                if value.is_zero() {
                    self.coeffs.remove(&index);
                } else {
                    self.coeffs.insert(index, value);
                }
            }

            pub fn add_term(&mut self, index: usize, value: Rational) {
                if value.is_zero() {
                    return;
                }
                let entry = self.coeffs.entry(index).or_insert_with(Rational::zero);
                *entry += value;
                if entry.is_zero() {
                    self.coeffs.remove(&index);
                }
            }

            /// Nonzero entries in increasing index order.
            pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
                self.coeffs.iter().map(|(&i, a)| (i, a))
            }

            pub fn len(&self) -> usize {
                self.coeffs.len()
            }

            pub fn is_empty(&self) -> bool {
                self.coeffs.is_empty()
            }

            pub fn is_zero(&self) -> bool {
                self.coeffs.is_empty()
            }

            pub fn to_dense(&self, len: usize) -> Vec<Rational> {
                let mut out = vec![Rational::zero(); len];
                for (i, a) in self.iter() {
                    out[i] = a.clone();
                }
                out
            }

            pub fn scaled(&self, factor: &Rational) -> Self {
                if factor.is_zero() {
                    return Self::zero(self.degree);
                }
                Self {
                    degree: self.degree,
                    coeffs: self.coeffs.iter().map(|(&i, a)| (i, a * factor)).collect(),
                }
            }

            fn combine(&self, other: &Self, sign: bool) -> Self {
                assert_eq!(self.degree, other.degree, "degree mismatch in chain arithmetic");
                let mut out = self.clone();
                for (i, a) in other.iter() {
                    out.add_term(i, if sign { a.clone() } else { -a });
                }
                out
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: Self) -> $name {
                self.combine(rhs, true)
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: Self) -> $name {
                self.combine(rhs, false)
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name {
                    degree: self.degree,
                    coeffs: self.coeffs.iter().map(|(&i, a)| (i, -a)).collect(),
                }
            }
        }
    };
}

sparse_vector!(Chain, "A finite linear combination of `degree`-simplices.");
sparse_vector!(Cochain, "A linear functional on `degree`-chains, stored by its values on simplices.");

impl Chain {
    /// Sum of absolute values of coefficients.
    pub fn l1_norm(&self) -> Rational {
        self.coeffs.values().map(|a| a.abs()).sum()
    }
}

impl Cochain {
    /// Maximum absolute value over all simplices (zero for the zero cochain).
    pub fn linf_norm(&self) -> Rational {
        crate::rational::max_abs(self.coeffs.values())
    }

    /// Evaluation on a chain of the same degree.
    pub fn eval(&self, c: &Chain) -> Result<Rational> {
        kronecker(self, c)
    }
}

/// Kronecker pairing `<f, c>`.
pub fn kronecker(f: &Cochain, c: &Chain) -> Result<Rational> {
    if f.degree() != c.degree() {
        return Err(Error::DegreeMismatch { left: f.degree(), right: c.degree() });
    }
    let mut sum = Rational::zero();
    if f.len() <= c.len() {
        for (i, a) in f.iter() {
            if let Some(b) = c.get(i) {
                sum += a * b;
            }
        }
    } else {
        for (i, b) in c.iter() {
            if let Some(a) = f.get(i) {
                sum += a * b;
            }
        }
    }
    Ok(sum)
}
