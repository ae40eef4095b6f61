//! Ranks of homology and cohomology, cycle bases and primitives.

use num_traits::One;

use crate::chain::{Chain, Cochain};
use crate::complex::OrientedComplex;
use crate::error::{Error, Result};
use crate::linalg::{sparse_row, Echelon, SparseMatrix};
use crate::rational::Rational;

/// Matrix of `d_n : C_n -> C_{n-1}` (rows: (n-1)-simplices). Empty for `n = 0`
/// or above the top dimension.
pub fn boundary_matrix(k: &OrientedComplex, n: usize) -> SparseMatrix {
    if n == 0 {
        return SparseMatrix::new(0, k.count(0));
    }
    let mut m = SparseMatrix::new(k.count(n - 1), k.count(n));
    for j in 0..k.count(n) {
        for (sign, f) in k.faces(n, j) {
            m.add(f, j, Rational::from_integer(sign.into()));
        }
    }
    m
}

/// Matrix of `delta^n : C^n -> C^{n+1}`.
pub fn coboundary_matrix(k: &OrientedComplex, n: usize) -> SparseMatrix {
    let mut m = SparseMatrix::new(k.count(n + 1), k.count(n));
    for j in 0..k.count(n + 1) {
        for (sign, f) in k.faces(n + 1, j) {
            m.add(j, f, Rational::from_integer(sign.into()));
        }
    }
    m
}

/// `dim ker d_n - dim im d_{n+1}`; zero above the top dimension.
pub fn homology_rank(k: &OrientedComplex, n: usize) -> usize {
    let cn = k.count(n);
    if cn == 0 {
        return 0;
    }
    let kernel = cn - boundary_matrix(k, n).rank();
    kernel - boundary_matrix(k, n + 1).rank()
}

/// `dim ker delta^n - dim im delta^{n-1}`, computed from coboundary matrices.
pub fn cohomology_rank(k: &OrientedComplex, n: usize) -> usize {
    let cn = k.count(n);
    if cn == 0 {
        return 0;
    }
    let kernel = cn - coboundary_matrix(k, n).rank();
    let image = if n == 0 { 0 } else { coboundary_matrix(k, n - 1).rank() };
    kernel - image
}

pub fn betti_numbers(k: &OrientedComplex) -> Vec<usize> {
    (0..=k.dim()).map(|n| homology_rank(k, n)).collect()
}

/// Basis of `ker d_n`.
pub fn cycle_basis(k: &OrientedComplex, n: usize) -> Vec<Chain> {
    let m = if n == 0 { SparseMatrix::new(0, k.count(0)) } else { boundary_matrix(k, n) };
    m.kernel_basis().iter().map(|v| Chain::from_dense(n, v)).collect()
}

/// Cycles whose classes form a basis of `H_n`.
pub fn homology_basis(k: &OrientedComplex, n: usize) -> Vec<Chain> {
    let mut ech = Echelon::new(k.count(n));
    let dn1 = boundary_matrix(k, n + 1).transpose();
    for r in 0..dn1.rows() {
        ech.insert(dn1.row(r).clone(), Rational::from_integer(0.into()));
    }
    cycle_basis(k, n)
        .into_iter()
        .filter(|z| ech.insert(z.iter().map(|(i, a)| (i, a.clone())).collect(), Rational::from_integer(0.into())).independent)
        .collect()
}

/// Cocycles whose classes form a basis of `H^n`.
pub fn cohomology_basis(k: &OrientedComplex, n: usize) -> Vec<Cochain> {
    let mut ech = Echelon::new(k.count(n));
    if n > 0 {
        let image = coboundary_matrix(k, n - 1).transpose();
        for r in 0..image.rows() {
            ech.insert(image.row(r).clone(), Rational::from_integer(0.into()));
        }
    }
    coboundary_matrix(k, n)
        .kernel_basis()
        .into_iter()
        .filter(|v| ech.insert(sparse_row(v), Rational::from_integer(0.into())).independent)
        .map(|v| Cochain::from_dense(n, &v))
        .collect()
}

/// A chain `b` with `d b = c`, if one exists.
pub fn boundary_primitive(k: &OrientedComplex, c: &Chain) -> Result<Option<Chain>> {
    k.validate_chain(c)?;
    let n = c.degree();
    if n >= k.dim() {
        return Ok(c.is_zero().then(|| Chain::zero(n + 1)));
    }
    let m = boundary_matrix(k, n + 1);
    Ok(m.solve(&c.to_dense(k.count(n))).map(|x| Chain::from_dense(n + 1, &x)))
}

/// A cochain `e` with `delta e = f`, if one exists. `f` of degree 0 has a
/// primitive only when it is zero.
pub fn coboundary_primitive(k: &OrientedComplex, f: &Cochain) -> Result<Option<Cochain>> {
    k.validate_cochain(f)?;
    let n = f.degree();
    if n == 0 {
        return Err(Error::DegreeOutOfRange { degree: 0, valid: format!("1..={}", k.dim()) });
    }
    let m = coboundary_matrix(k, n - 1);
    Ok(m.solve(&f.to_dense(k.count(n))).map(|x| Cochain::from_dense(n - 1, &x)))
}

/// Checks `d z = 0`, reporting the l1 norm of the residual otherwise.
pub fn ensure_cycle(k: &OrientedComplex, z: &Chain) -> Result<()> {
    k.validate_chain(z)?;
    if z.degree() == 0 {
        return Ok(());
    }
    let dz = k.boundary(z)?;
    if dz.is_zero() {
        Ok(())
    } else {
        Err(Error::NotACycle { residual: dz.l1_norm() })
    }
}

pub fn ensure_cocycle(k: &OrientedComplex, f: &Cochain) -> Result<()> {
    let df = k.coboundary_or_zero(f)?;
    if df.is_zero() {
        Ok(())
    } else {
        Err(Error::NotACocycle { residual: df.linf_norm() })
    }
}

/// Elementary cochain with value one on simplex `(d, i)`.
pub fn indicator(d: usize, i: usize) -> Cochain {
    Cochain::from_pairs(d, [(i, Rational::one())])
}
