//! Cohomology of the invariant bar complex `F^*(G)^G`, with the canonical
//! seminorm of each basis class.
//!
//! Two independent pipelines are provided. The homogeneous one works inside
//! the full bar complex: it computes a basis of the invariant subspace as a
//! kernel and measures sup norms over all of `G^{n+1}`. The normalized one
//! identifies an invariant cochain with its values `f(e, h_1, ..., h_n)` and
//! writes the differential in those coordinates. For a finite group every
//! bar cochain is bounded, so both compute bounded cohomology as well.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{sparse_row, Echelon, SparseMatrix};
use crate::rational::Rational;
use crate::seminorm::{linf_quotient, PivotRule};

use super::bar::{check_degree, decode, encode, BarCochain, DEFAULT_DEGREE_CAP};
use super::group::{FiniteGroup, DEFAULT_ORDER_CAP};

/// Matrix whose columns are the given vectors.
fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> SparseMatrix {
    let mut m = SparseMatrix::new(rows, columns.len());
    for (j, col) in columns.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            if !v.is_zero() {
                m.add(i, j, v.clone());
            }
        }
    }
    m
}

fn matrix_columns(m: &SparseMatrix) -> Vec<Vec<Rational>> {
    let t = m.transpose();
    (0..t.rows())
        .map(|j| {
            let mut col = vec![Rational::zero(); m.rows()];
            for (&i, v) in t.row(j) {
                col[i] = v.clone();
            }
            col
        })
        .collect()
}

/// Cocycle coefficient vectors (as columns of `basis`) that are independent
/// modulo the span of `image`.
fn class_basis(delta_here: &SparseMatrix, image: &SparseMatrix, basis: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    let mut ech = Echelon::new(dim);
    for col in matrix_columns(image) {
        ech.insert(sparse_row(&col), Rational::zero());
    }
    let mut out = Vec::new();
    for c in delta_here.kernel_basis() {
        let mut v = vec![Rational::zero(); dim];
        for (coef, b) in c.iter().zip(basis) {
            if coef.is_zero() {
                continue;
            }
            for (slot, x) in v.iter_mut().zip(b) {
                *slot += coef * x;
            }
        }
        if ech.insert(sparse_row(&v), Rational::zero()).independent {
            out.push(v);
        }
    }
    out
}

/// Basis of `F^n(G)^G` as vectors in `F^n(G)`, from the kernel of
/// `f -> g.f - f` over all `g`.
pub fn invariant_basis(group: &FiniteGroup, n: usize) -> Vec<Vec<Rational>> {
    let order = group.order();
    let dim = order.pow(n as u32 + 1);
    let mut m = SparseMatrix::new(0, dim);
    for g in group.elements() {
        let gi = group.inv(g);
        for i in 0..dim {
            // (g.f - f)(t) = f(g^-1 t) - f(t)
            let t = decode(order, n, i);
            let moved: Vec<usize> = t.iter().map(|&x| group.mul(gi, x)).collect();
            let j = encode(order, &moved);
            if j != i {
                let mut row = std::collections::BTreeMap::new();
                row.insert(j, Rational::one());
                row.insert(i, -Rational::one());
                m.push_row(row);
            }
        }
    }
    m.kernel_basis()
}

/// The differential of the full bar complex applied to each vector.
fn apply_differential(order: usize, n: usize, vectors: &[Vec<Rational>]) -> SparseMatrix {
    let images: Vec<Vec<Rational>> = vectors
        .iter()
        .map(|v| BarCochain::from_values(order, n, v.clone()).expect("dimension").differential().into_values())
        .collect();
    from_columns(order.pow(n as u32 + 2), &images)
}

/// Normalized coordinates `(t_0^-1 t_1, ..., t_0^-1 t_n)` of a tuple.
fn normalized_index(group: &FiniteGroup, t: &[usize]) -> usize {
    let inv = group.inv(t[0]);
    t[1..].iter().fold(0, |acc, &x| acc * group.order() + group.mul(inv, x))
}

/// Differential `F^n(G)^G -> F^{n+1}(G)^G` in normalized coordinates.
pub fn normalized_differential(group: &FiniteGroup, n: usize) -> SparseMatrix {
    let order = group.order();
    let rows = order.pow(n as u32 + 1);
    let mut m = SparseMatrix::new(rows, order.pow(n as u32));
    for r in 0..rows {
        // the tuple (e, h_1, ..., h_{n+1})
        let mut t = vec![group.identity()];
        t.extend(if n + 1 == 0 { Vec::new() } else { decode(order, n, r) });
        for i in 0..t.len() {
            let mut face = t.clone();
            face.remove(i);
            let sign = if i % 2 == 0 { Rational::one() } else { -Rational::one() };
            m.add(r, normalized_index(group, &face), sign);
        }
    }
    m
}

/// Normalized coordinates of an invariant cochain.
pub fn normalize(group: &FiniteGroup, f: &BarCochain) -> Vec<Rational> {
    let n = f.degree();
    let order = group.order();
    (0..order.pow(n as u32))
        .map(|i| {
            let mut t = vec![group.identity()];
            if n > 0 {
                t.extend(decode(order, n - 1, i));
            }
            f.get(&t).clone()
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassSeminorm {
    /// Representative cocycle, as values on `G^{n+1}` in index order.
    #[serde(skip)]
    pub cocycle: Vec<Rational>,
    #[serde(with = "crate::rational::as_string")]
    pub homogeneous: Rational,
    #[serde(with = "crate::rational::as_string")]
    pub normalized: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupCohomology {
    pub order: usize,
    pub degree: usize,
    pub rank_homogeneous: usize,
    pub rank_normalized: usize,
    pub classes: Vec<ClassSeminorm>,
}

impl GroupCohomology {
    /// Both pipelines give the same rank and the same seminorm on every class.
    pub fn pipelines_agree(&self) -> bool {
        self.rank_homogeneous == self.rank_normalized && self.classes.iter().all(|c| c.homogeneous == c.normalized)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub order: usize,
    pub degree: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { order: DEFAULT_ORDER_CAP, degree: DEFAULT_DEGREE_CAP }
    }
}

/// `H^n(F^*(G)^G)` by both pipelines, with the canonical seminorm of each
/// basis class.
pub fn group_cohomology(group: &FiniteGroup, n: usize, caps: Caps) -> Result<GroupCohomology> {
    group.check_order(caps.order)?;
    check_degree(n, caps.degree)?;
    let order = group.order();
    let rule = PivotRule::Bland;

    // Homogeneous pipeline.
    let basis = invariant_basis(group, n);
    let delta_here = apply_differential(order, n, &basis);
    let (image, prev_dim) = if n == 0 {
        (SparseMatrix::new(order, 0), 0)
    } else {
        let prev = invariant_basis(group, n - 1);
        (apply_differential(order, n - 1, &prev), prev.len())
    };
    let image_rank = image.rank();
    let rank_homogeneous = basis.len() - delta_here.rank() - image_rank;
    let dim = order.pow(n as u32 + 1);
    let classes = class_basis(&delta_here, &image, &basis, dim);
    if classes.len() != rank_homogeneous {
        return Err(Error::Invariant("class basis size differs from the rank".into()));
    }

    // Normalized pipeline.
    let d_here = normalized_differential(group, n);
    let d_prev = if n == 0 { SparseMatrix::new(1, 0) } else { normalized_differential(group, n - 1) };
    let coords = order.pow(n as u32);
    let rank_normalized = coords - d_here.rank() - d_prev.rank();
    debug_assert!(prev_dim == 0 || prev_dim == order.pow(n as u32 - 1));

    let mut rows = Vec::with_capacity(classes.len());
    for cocycle in classes {
        let homogeneous = linf_quotient(&cocycle, &image, rule)?.value;
        let f = BarCochain::from_values(order, n, cocycle.clone())?;
        let normalized = linf_quotient(&normalize(group, &f), &d_prev, rule)?.value;
        rows.push(ClassSeminorm { cocycle, homogeneous, normalized });
    }
    Ok(GroupCohomology { order, degree: n, rank_homogeneous, rank_normalized, classes: rows })
}
