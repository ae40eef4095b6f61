//! Exact sparse linear algebra over the rationals: rank, linear solves and
//! kernel bases by incremental row echelon reduction.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::rational::Rational;

pub type SparseRow = BTreeMap<usize, Rational>;

/// Row-major sparse matrix.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![SparseRow::new(); rows] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &SparseRow {
        &self.data[r]
    }

    pub fn add(&mut self, r: usize, c: usize, value: Rational) {
        debug_assert!(r < self.rows && c < self.cols);
        if value.is_zero() {
            return;
        }
        let e = self.data[r].entry(c).or_insert_with(Rational::zero);
        *e += value;
        if e.is_zero() {
            self.data[r].remove(&c);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.data[r].get(&c).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn push_row(&mut self, row: SparseRow) {
        debug_assert!(row.keys().all(|&c| c < self.cols));
        self.data.push(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::new(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for (&c, v) in row {
                t.data[c].insert(r, v.clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                let mut acc = Rational::zero();
                for (&c, v) in row {
                    if !x[c].is_zero() {
                        acc += v * &x[c];
                    }
                }
                acc
            })
            .collect()
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = SparseMatrix::new(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            for (&k, a) in row {
                for (&c, b) in &other.data[k] {
                    out.add(r, c, a * b);
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.cols);
        for row in &self.data {
            ech.insert(row.clone(), Rational::zero());
        }
        ech.rank()
    }

    /// Some `x` with `self * x = b`, free variables set to zero.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let mut ech = Echelon::new(self.cols);
        for (row, rhs) in self.data.iter().zip(b) {
            if !ech.insert(row.clone(), rhs.clone()).consistent {
                return None;
            }
        }
        Some(ech.back_substitute(&BTreeMap::new()))
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut ech = Echelon::new(self.cols);
        for row in &self.data {
            ech.insert(row.clone(), Rational::zero());
        }
        ech.kernel_basis()
    }
}

/// Outcome of inserting a row into an [`Echelon`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Insertion {
    /// The row was linearly independent of the rows inserted before.
    pub independent: bool,
    /// The augmented system is still consistent.
    pub consistent: bool,
}

/// Incrementally maintained row echelon form with pivot rows normalized to a
/// leading one, together with right-hand sides.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    pivots: BTreeMap<usize, (SparseRow, Rational)>,
}

fn axpy(row: &mut SparseRow, factor: &Rational, other: &SparseRow) {
    for (&c, v) in other {
        let e = row.entry(c).or_insert_with(Rational::zero);
        *e -= factor * v;
        if e.is_zero() {
            row.remove(&c);
        }
    }
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Self { cols, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces `row` against the current pivots without inserting it.
    pub fn reduce(&self, mut row: SparseRow, mut rhs: Rational) -> (SparseRow, Rational) {
        let mut from = 0;
        while let Some((&lead, val)) = row.range(from..).next() {
            let val = val.clone();
            match self.pivots.get(&lead) {
                Some((prow, prhs)) => {
                    axpy(&mut row, &val, prow);
                    rhs -= &val * prhs;
                }
                None => from = lead + 1,
            }
        }
        (row, rhs)
    }

    pub fn insert(&mut self, row: SparseRow, rhs: Rational) -> Insertion {
        let (mut row, mut rhs) = self.reduce(row, rhs);
        let Some((&lead, val)) = row.iter().next() else {
            return Insertion { independent: false, consistent: rhs.is_zero() };
        };
        let inv = Rational::one() / val;
        for v in row.values_mut() {
            *v *= &inv;
        }
        rhs *= &inv;
        self.pivots.insert(lead, (row, rhs));
        Insertion { independent: true, consistent: true }
    }

    /// Whether `row` lies in the span of the inserted rows.
    pub fn spans(&self, row: SparseRow) -> bool {
        self.reduce(row, Rational::zero()).0.is_empty()
    }

    /// Solution of the inserted system with the given free-variable values.
    pub fn back_substitute(&self, free: &BTreeMap<usize, Rational>) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.cols];
        for (&c, v) in free {
            x[c] = v.clone();
        }
        for (&lead, (row, rhs)) in self.pivots.iter().rev() {
            let mut value = rhs.clone();
            for (&c, v) in row.range(lead + 1..) {
                if !x[c].is_zero() {
                    value -= v * &x[c];
                }
            }
            x[lead] = value;
        }
        x
    }

    /// Kernel basis of the homogeneous system.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let homogeneous = Echelon {
            cols: self.cols,
            pivots: self.pivots.iter().map(|(&c, (r, _))| (c, (r.clone(), Rational::zero()))).collect(),
        };
        (0..self.cols)
            .filter(|c| !self.pivots.contains_key(c))
            .map(|f| homogeneous.back_substitute(&BTreeMap::from([(f, Rational::one())])))
            .collect()
    }
}

/// Sparse row from dense values.
pub fn sparse_row(values: &[Rational]) -> SparseRow {
    values.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect()
}
