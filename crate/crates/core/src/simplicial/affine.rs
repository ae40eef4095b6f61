//! Affine singular chains in the geometric realization of a complex.
//!
//! A [`Point`] is a barycentric coordinate vector over the vertices of the
//! ambient complex. An [`AffineSimplex`] is an ordered tuple of points (an
//! affine singular simplex, possibly degenerate). Barycentric subdivision and
//! the prism operator are endomorphisms of this chain group, so their
//! homotopy identities hold exactly.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::chain::Chain;
use crate::complex::{sort_with_sign, OrientedComplex};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Point of `|K|`: positive weights on a set of vertices summing to one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(Arc<[(usize, Rational)]>);

impl Point {
    pub fn vertex(v: usize) -> Self {
        Point(Arc::from(vec![(v, Rational::one())]))
    }

    /// Builds a point from weights; weights are normalized and must be nonnegative.
    pub fn from_weights(weights: impl IntoIterator<Item = (usize, Rational)>) -> Result<Self> {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (v, w) in weights {
            if w < Rational::zero() {
                return Err(Error::Precondition("negative barycentric weight".into()));
            }
            *acc.entry(v).or_insert_with(Rational::zero) += w;
        }
        acc.retain(|_, w| !w.is_zero());
        let total: Rational = acc.values().cloned().sum();
        if total.is_zero() {
            return Err(Error::Precondition("point with zero total weight".into()));
        }
        Ok(Point(acc.into_iter().map(|(v, w)| (v, w / &total)).collect::<Vec<_>>().into()))
    }

    pub fn coords(&self) -> &[(usize, Rational)] {
        &self.0
    }

    /// Vertices with nonzero weight, ascending: the open cell containing the point.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().map(|(v, _)| *v).collect()
    }

    /// Original vertex if this is a vertex point.
    pub fn as_vertex(&self) -> Option<usize> {
        match &*self.0 {
            [(v, _)] => Some(*v),
            _ => None,
        }
    }

    /// Average of `points` (repetitions count with multiplicity).
    pub fn barycenter(points: &[Point]) -> Point {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for p in points {
            for (v, w) in p.0.iter() {
                *acc.entry(*v).or_insert_with(Rational::zero) += w;
            }
        }
        let n = Rational::from_integer((points.len() as i64).into());
        Point(acc.into_iter().map(|(v, w)| (v, w / &n)).collect::<Vec<_>>().into())
    }

    /// Whether the point is the barycenter of the face spanned by its support.
    pub fn is_face_barycenter(&self) -> bool {
        let n = self.0.len() as i64;
        let expected = Rational::new(1.into(), n.into());
        self.0.iter().all(|(_, w)| *w == expected)
    }
}

/// Ordered tuple of points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineSimplex(Vec<Point>);

impl AffineSimplex {
    pub fn new(points: Vec<Point>) -> Self {
        assert!(!points.is_empty(), "affine simplex needs at least one point");
        AffineSimplex(points)
    }

    /// The simplex of `K` spanned by the ascending vertex tuple.
    pub fn from_vertices(vertices: &[usize]) -> Self {
        AffineSimplex(vertices.iter().map(|&v| Point::vertex(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn points(&self) -> &[Point] {
        &self.0
    }

    /// Face opposite to point `i`.
    pub fn face(&self, i: usize) -> AffineSimplex {
        let mut pts = self.0.clone();
        pts.remove(i);
        AffineSimplex(pts)
    }

    pub fn barycenter(&self) -> Point {
        Point::barycenter(&self.0)
    }

    /// `[apex, p_0, ..., p_n]`.
    pub fn cone(&self, apex: &Point) -> AffineSimplex {
        let mut pts = Vec::with_capacity(self.0.len() + 1);
        pts.push(apex.clone());
        pts.extend(self.0.iter().cloned());
        AffineSimplex(pts)
    }

    /// The vertex tuple if every point is a vertex of `K`.
    pub fn as_vertex_tuple(&self) -> Option<Vec<usize>> {
        self.0.iter().map(Point::as_vertex).collect()
    }

    /// Union of the supports of all points: the smallest face of `K`
    /// containing the image.
    pub fn carrier(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.0.iter().flat_map(|p| p.support()).collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// All open cells of `K` met by the image: unions of supports of nonempty
    /// subsets of the (distinct) points.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        let mut supports: Vec<Vec<usize>> = self.0.iter().map(Point::support).collect();
        supports.sort();
        supports.dedup();
        let m = supports.len();
        assert!(m < 16, "too many distinct points in an affine simplex");
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for mask in 1u32..(1 << m) {
            let mut cell: Vec<usize> = (0..m)
                .filter(|i| mask & (1 << i) != 0)
                .flat_map(|i| supports[i].iter().copied())
                .collect();
            cell.sort_unstable();
            cell.dedup();
            cells.push(cell);
        }
        cells.sort();
        cells.dedup();
        cells
    }
}

/// Finite linear combination of affine simplices of a fixed degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineChain {
    degree: usize,
    terms: BTreeMap<AffineSimplex, Rational>,
}

impl AffineChain {
    pub fn zero(degree: usize) -> Self {
        Self { degree, terms: BTreeMap::new() }
    }

    pub fn simplex(s: AffineSimplex) -> Self {
        let mut c = Self::zero(s.dim());
        c.add_term(s, Rational::one());
        c
    }

    /// Embeds a chain of `K` (ascending vertex tuples).
    pub fn embed(k: &OrientedComplex, c: &Chain) -> Result<Self> {
        k.validate_chain(c)?;
        let mut out = Self::zero(c.degree());
        for (i, a) in c.iter() {
            out.add_term(AffineSimplex::from_vertices(k.simplex(c.degree(), i)), a.clone());
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&AffineSimplex, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, s: &AffineSimplex) -> Rational {
        self.terms.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, s: AffineSimplex, a: Rational) {
        debug_assert_eq!(s.dim(), self.degree);
        if a.is_zero() {
            return;
        }
        match self.terms.entry(s) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += a;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(a);
            }
        }
    }

    pub fn add_chain(&mut self, other: &AffineChain, factor: &Rational) {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        if factor.is_zero() {
            return;
        }
        for (s, a) in other.iter() {
            self.add_term(s.clone(), a * factor);
        }
    }

    pub fn plus(&self, other: &AffineChain) -> AffineChain {
        let mut out = self.clone();
        out.add_chain(other, &Rational::one());
        out
    }

    pub fn minus(&self, other: &AffineChain) -> AffineChain {
        let mut out = self.clone();
        out.add_chain(other, &-Rational::one());
        out
    }

    pub fn scaled(&self, factor: &Rational) -> AffineChain {
        let mut out = AffineChain::zero(self.degree);
        out.add_chain(self, factor);
        out
    }

    /// Ordered-simplex boundary `sum (-1)^i face_i`; degree 0 maps to zero.
    pub fn boundary(&self) -> AffineChain {
        if self.degree == 0 {
            return AffineChain::zero(0);
        }
        let mut out = AffineChain::zero(self.degree - 1);
        for (s, a) in self.iter() {
            for i in 0..=s.dim() {
                out.add_term(s.face(i), if i % 2 == 0 { a.clone() } else { -a });
            }
        }
        out
    }

    /// Sum of coefficients of a 0-chain.
    pub fn augmentation(&self) -> Rational {
        assert_eq!(self.degree, 0);
        self.terms.values().cloned().sum()
    }

    /// `apex * c`, prepending the apex to every simplex.
    pub fn cone(&self, apex: &Point) -> AffineChain {
        let mut out = AffineChain::zero(self.degree + 1);
        for (s, a) in self.iter() {
            out.add_term(s.cone(apex), a.clone());
        }
        out
    }

    /// Union of carriers of all simplices.
    pub fn support_vertices(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.terms.keys().flat_map(|s| s.carrier()).collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// Image in the oriented chains of `K` when every simplex is a tuple of
    /// vertices spanning a simplex of `K`; degenerate tuples map to zero.
    pub fn to_oriented(&self, k: &OrientedComplex) -> Option<Chain> {
        let mut out = Chain::zero(self.degree);
        for (s, a) in self.iter() {
            let mut v = s.as_vertex_tuple()?;
            match sort_with_sign(&mut v) {
                None => continue,
                Some(sign) => {
                    let i = k.index_of(&v)?;
                    out.add_term(i, if sign > 0 { a.clone() } else { -a });
                }
            }
        }
        Some(out)
    }
}

/// Barycentric subdivision: `sd(v) = v`, `sd(s) = b_s * sd(ds)`.
pub fn sd(c: &AffineChain) -> AffineChain {
    let mut out = AffineChain::zero(c.degree());
    for (s, a) in c.iter() {
        out.add_chain(&sd_simplex(s), a);
    }
    out
}

pub fn sd_simplex(s: &AffineSimplex) -> AffineChain {
    if s.dim() == 0 {
        return AffineChain::simplex(s.clone());
    }
    let faces = AffineChain::simplex(s.clone()).boundary();
    sd(&faces).cone(&s.barycenter())
}

/// `sd^k`.
pub fn sd_power(c: &AffineChain, k: usize) -> AffineChain {
    let mut out = c.clone();
    for _ in 0..k {
        out = sd(&out);
    }
    out
}

/// Prism operator with `d D + D d = sd - Id`: `D_0 = 0` and
/// `D(s) = b_s * (-s - D(ds))`.
pub fn prism(c: &AffineChain) -> AffineChain {
    let mut out = AffineChain::zero(c.degree() + 1);
    for (s, a) in c.iter() {
        out.add_chain(&prism_simplex(s), a);
    }
    out
}

pub fn prism_simplex(s: &AffineSimplex) -> AffineChain {
    if s.dim() == 0 {
        return AffineChain::zero(1);
    }
    let single = AffineChain::simplex(s.clone());
    let inner = prism(&single.boundary());
    let mut base = single.scaled(&-Rational::one());
    base.add_chain(&inner, &-Rational::one());
    base.cone(&s.barycenter())
}
