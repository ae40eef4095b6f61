//! Degree-homogeneous linear maps between chain groups, stored as sparse
//! matrices (rows index the target, columns the source).

use crate::chain::{Chain, Cochain};
use crate::complex::OrientedComplex;
use crate::error::{Error, Result};
use crate::homology::boundary_matrix;
use crate::linalg::SparseMatrix;

#[derive(Clone, Debug)]
pub struct ChainOperator {
    name: String,
    source_degree: usize,
    target_degree: usize,
    matrix: SparseMatrix,
}

impl ChainOperator {
    pub fn new(name: impl Into<String>, source_degree: usize, target_degree: usize, matrix: SparseMatrix) -> Self {
        Self { name: name.into(), source_degree, target_degree, matrix }
    }

    /// Tabulates a linear map from its values on basis simplices.
    pub fn from_fn(
        name: impl Into<String>,
        source: (usize, usize),
        target: (usize, usize),
        mut f: impl FnMut(usize) -> Result<Chain>,
    ) -> Result<Self> {
        let (source_degree, source_count) = source;
        let (target_degree, target_count) = target;
        let mut matrix = SparseMatrix::new(target_count, source_count);
        for j in 0..source_count {
            let image = f(j)?;
            if image.degree() != target_degree {
                return Err(Error::DegreeMismatch { left: target_degree, right: image.degree() });
            }
            for (i, a) in image.iter() {
                if i >= target_count {
                    return Err(Error::IndexOutOfRange { degree: target_degree, index: i });
                }
                matrix.add(i, j, a.clone());
            }
        }
        Ok(Self::new(name, source_degree, target_degree, matrix))
    }

    /// The boundary `d_n` of `k` as an operator.
    pub fn boundary(k: &OrientedComplex, n: usize) -> Result<Self> {
        if n == 0 || n > k.dim() {
            return Err(Error::DegreeOutOfRange { degree: n, valid: format!("1..={}", k.dim()) });
        }
        Ok(Self::new(format!("d{n}"), n, n - 1, boundary_matrix(k, n)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source_degree(&self) -> usize {
        self.source_degree
    }

    pub fn target_degree(&self) -> usize {
        self.target_degree
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn apply(&self, c: &Chain) -> Result<Chain> {
        if c.degree() != self.source_degree {
            return Err(Error::DegreeMismatch { left: self.source_degree, right: c.degree() });
        }
        let dense = c.to_dense(self.matrix.cols());
        Ok(Chain::from_dense(self.target_degree, &self.matrix.mul_vec(&dense)))
    }

    /// Pullback of cochains along the operator.
    pub fn transpose_apply(&self, f: &Cochain) -> Result<Cochain> {
        if f.degree() != self.target_degree {
            return Err(Error::DegreeMismatch { left: self.target_degree, right: f.degree() });
        }
        let dense = f.to_dense(self.matrix.rows());
        Ok(Cochain::from_dense(self.source_degree, &self.matrix.transpose().mul_vec(&dense)))
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ChainOperator) -> Result<ChainOperator> {
        if first.target_degree != self.source_degree || first.matrix.rows() != self.matrix.cols() {
            return Err(Error::DegreeMismatch { left: self.source_degree, right: first.target_degree });
        }
        Ok(Self::new(
            format!("{}.{}", self.name, first.name),
            first.source_degree,
            self.target_degree,
            self.matrix.mul(&first.matrix),
        ))
    }
}
