//! Cone complexes and their contracting homotopy.

use crate::chain::Chain;
use crate::complex::{sort_with_sign, OrientedComplex};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A complex that is a cone with apex `apex`: joining the apex to any simplex
/// gives a simplex.
#[derive(Clone, Debug)]
pub struct ConeDatum {
    complex: OrientedComplex,
    apex: usize,
}

impl ConeDatum {
    pub fn new(complex: OrientedComplex, apex: usize) -> Result<Self> {
        if apex >= complex.vertex_count() {
            return Err(Error::NotACone { apex });
        }
        for layer in complex.layers() {
            for s in layer {
                if s.binary_search(&apex).is_ok() {
                    continue;
                }
                let mut joined = s.clone();
                joined.push(apex);
                joined.sort_unstable();
                if !complex.contains(&joined) {
                    return Err(Error::NotACone { apex });
                }
            }
        }
        Ok(Self { complex, apex })
    }

    /// Cone over `base` with a fresh apex.
    pub fn over(base: &OrientedComplex) -> Self {
        let (complex, apex) = base.cone();
        Self { complex, apex }
    }

    pub fn complex(&self) -> &OrientedComplex {
        &self.complex
    }

    pub fn apex(&self) -> usize {
        self.apex
    }

    /// `T_n : C_n -> C_{n+1}`, `T[v_0..v_n] = [apex, v_0, .., v_n]` (reordered
    /// with sign), zero on simplices containing the apex.
    pub fn homotopy(&self, c: &Chain) -> Result<Chain> {
        self.complex.validate_chain(c)?;
        let d = c.degree();
        let mut out = Chain::zero(d + 1);
        for (i, a) in c.iter() {
            let s = self.complex.simplex(d, i);
            let mut joined = Vec::with_capacity(s.len() + 1);
            joined.push(self.apex);
            joined.extend_from_slice(s);
            let Some(sign) = sort_with_sign(&mut joined) else { continue };
            let j = self.complex.index_of(&joined).ok_or(Error::NotACone { apex: self.apex })?;
            out.add_term(j, if sign > 0 { a.clone() } else { -a });
        }
        Ok(out)
    }

    /// `T_{-1}(t) = t * apex`.
    pub fn augmentation_section(&self, t: &Rational) -> Chain {
        Chain::from_pairs(0, [(self.apex, t.clone())])
    }

    /// `(T d + d T)(c)` in positive degree, `(T_{-1} eps + d T)(c)` in degree 0.
    /// Equals `c` for every chain.
    pub fn homotopy_identity(&self, c: &Chain) -> Result<Chain> {
        let tc = self.homotopy(c)?;
        let dt = if tc.is_zero() { Chain::zero(c.degree()) } else { self.complex.boundary(&tc)? };
        let td = if c.degree() == 0 {
            self.augmentation_section(&self.complex.augmentation(c)?)
        } else {
            self.homotopy(&self.complex.boundary(c)?)?
        };
        Ok(&dt + &td)
    }
}
