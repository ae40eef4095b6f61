//! Finite ordered simplicial complexes.
//!
//! Simplices are stored as strictly ascending vertex tuples and indexed per
//! dimension. Vertex `v` is always the 0-simplex with index `v`. Orientation
//! signs come from vertex order.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_traits::{One, Zero};

use crate::chain::{Chain, Cochain};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct OrientedComplex {
    vertex_count: usize,
    simplices: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

/// Sorts `vertices` in place and returns the sign of the sorting permutation,
/// or `None` if a vertex repeats.
pub fn sort_with_sign(vertices: &mut [usize]) -> Option<i8> {
    let mut sign = 1i8;
    // insertion sort: the number of swaps gives the parity
    for i in 1..vertices.len() {
        let mut j = i;
        while j > 0 && vertices[j - 1] > vertices[j] {
            vertices.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if vertices.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

impl OrientedComplex {
    /// Builds a complex on `vertex_count` vertices from a list of simplices.
    ///
    /// Each listed simplex is sorted; faces are added automatically. Within
    /// each dimension, listed simplices keep their first-occurrence order and
    /// auto-completed faces follow in lexicographic order.
    pub fn from_simplices<I, S>(vertex_count: usize, simplices: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[usize]>,
    {
        if vertex_count == 0 {
            return Err(Error::InvalidComplex("complex has no vertices".into()));
        }
        let mut listed: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for s in simplices {
            let mut s = s.as_ref().to_vec();
            if s.is_empty() {
                return Err(Error::InvalidComplex("empty simplex".into()));
            }
            if sort_with_sign(&mut s).is_none() {
                return Err(Error::InvalidComplex(format!("repeated vertex in simplex {s:?}")));
            }
            if let Some(&v) = s.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::InvalidComplex(format!(
                    "vertex {v} out of range (vertex count {vertex_count})"
                )));
            }
            let d = s.len() - 1;
            if d == 0 {
                continue;
            }
            if listed.len() <= d {
                listed.resize(d + 1, Vec::new());
            }
            if seen.insert(s.clone()) {
                listed[d].push(s);
            }
        }
        let top = listed.len() - 1;
        let mut extra: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); top + 1];
        for d in (2..=top).rev() {
            let current: Vec<Vec<usize>> =
                listed[d].iter().chain(extra[d].iter()).cloned().collect();
            for s in current {
                for i in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(i);
                    if !seen.contains(&face) {
                        extra[d - 1].insert(face);
                    }
                }
            }
        }
        let mut all = vec![(0..vertex_count).map(|v| vec![v]).collect::<Vec<_>>()];
        for d in 1..=top {
            let mut layer = std::mem::take(&mut listed[d]);
            layer.extend(std::mem::take(&mut extra[d]));
            all.push(layer);
        }
        while all.len() > 1 && all.last().is_some_and(|l| l.is_empty()) {
            all.pop();
        }
        Ok(Self::from_layers(vertex_count, all))
    }

    /// Builds from per-dimension layers that are already face-closed and sorted.
    pub(crate) fn from_layers(vertex_count: usize, simplices: Vec<Vec<Vec<usize>>>) -> Self {
        let index = simplices
            .iter()
            .map(|layer| layer.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Self { vertex_count, simplices, index }
    }

    /// The complex consisting of a single vertex.
    pub fn point() -> Self {
        Self::from_layers(1, vec![vec![vec![0]]])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Top dimension.
    pub fn dim(&self) -> usize {
        self.simplices.len() - 1
    }

    /// Number of simplices of dimension `d` (zero above the top dimension).
    pub fn count(&self, d: usize) -> usize {
        self.simplices.get(d).map_or(0, |l| l.len())
    }

    pub fn total_count(&self) -> usize {
        self.simplices.iter().map(|l| l.len()).sum()
    }

    pub fn simplex(&self, d: usize, i: usize) -> &[usize] {
        &self.simplices[d][i]
    }

    pub fn simplices(&self, d: usize) -> &[Vec<usize>] {
        self.simplices.get(d).map_or(&[], |l| l.as_slice())
    }

    /// All layers, the published index assignment.
    pub fn layers(&self) -> &[Vec<Vec<usize>>] {
        &self.simplices
    }

    /// Index of an ascending vertex tuple.
    pub fn index_of(&self, vertices: &[usize]) -> Option<usize> {
        if vertices.is_empty() {
            return None;
        }
        self.index.get(vertices.len() - 1)?.get(vertices).copied()
    }

    /// Index and orientation sign of an arbitrary vertex tuple.
    pub fn oriented_index(&self, vertices: &[usize]) -> Option<(usize, i8)> {
        let mut v = vertices.to_vec();
        let sign = sort_with_sign(&mut v)?;
        Some((self.index_of(&v)?, sign))
    }

    pub fn contains(&self, vertices: &[usize]) -> bool {
        self.index_of(vertices).is_some()
    }

    /// Signed codimension-one faces of simplex `(d, i)`: `(sign, face index)`.
    pub fn faces(&self, d: usize, i: usize) -> impl Iterator<Item = (i8, usize)> + '_ {
        let s = &self.simplices[d][i];
        let n = if d == 0 { 0 } else { s.len() };
        (0..n).map(move |k| {
            let mut face = s.clone();
            face.remove(k);
            let sign = if k % 2 == 0 { 1 } else { -1 };
            (sign, self.index[d - 1][&face])
        })
    }

    /// Codimension-one cofaces of every `d`-simplex, as `(sign, coface index)`
    /// where `sign` is the coefficient of the face in the boundary of the coface.
    pub fn cofaces(&self, d: usize) -> Vec<Vec<(i8, usize)>> {
        let mut out = vec![Vec::new(); self.count(d)];
        for j in 0..self.count(d + 1) {
            for (sign, f) in self.faces(d + 1, j) {
                out[f].push((sign, j));
            }
        }
        out
    }

    fn check_chain(&self, degree: usize, max_index: Option<usize>) -> Result<()> {
        if degree > self.dim() {
            return Err(Error::DegreeOutOfRange { degree, valid: format!("0..={}", self.dim()) });
        }
        if let Some(i) = max_index {
            if i >= self.count(degree) {
                return Err(Error::IndexOutOfRange { degree, index: i });
            }
        }
        Ok(())
    }

    pub fn validate_chain(&self, c: &Chain) -> Result<()> {
        self.check_chain(c.degree(), c.iter().map(|(i, _)| i).last())
    }

    pub fn validate_cochain(&self, f: &Cochain) -> Result<()> {
        self.check_chain(f.degree(), f.iter().map(|(i, _)| i).last())
    }

    /// Alternating face sum, `d_n : C_n -> C_{n-1}`. Degree 0 is rejected; use
    /// [`OrientedComplex::augmentation`] for the augmented differential.
    pub fn boundary(&self, c: &Chain) -> Result<Chain> {
        self.validate_chain(c)?;
        let d = c.degree();
        if d == 0 {
            return Err(Error::DegreeOutOfRange { degree: 0, valid: format!("1..={}", self.dim()) });
        }
        let mut out = Chain::zero(d - 1);
        for (i, a) in c.iter() {
            for (sign, f) in self.faces(d, i) {
                out.add_term(f, if sign > 0 { a.clone() } else { -a });
            }
        }
        Ok(out)
    }

    /// Augmentation `C_0 -> Q`, the sum of coefficients of a 0-chain.
    pub fn augmentation(&self, c: &Chain) -> Result<Rational> {
        self.validate_chain(c)?;
        if c.degree() != 0 {
            return Err(Error::DegreeMismatch { left: c.degree(), right: 0 });
        }
        Ok(c.iter().map(|(_, a)| a.clone()).sum())
    }

    /// Dual differential, `<coboundary(f), c> = <f, boundary(c)>`.
    pub fn coboundary(&self, f: &Cochain) -> Result<Cochain> {
        self.validate_cochain(f)?;
        let d = f.degree();
        if d >= self.dim() {
            return Err(Error::DegreeOutOfRange { degree: d, valid: format!("0..{}", self.dim()) });
        }
        let mut out = Cochain::zero(d + 1);
        for j in 0..self.count(d + 1) {
            let mut value = Rational::zero();
            for (sign, face) in self.faces(d + 1, j) {
                if let Some(a) = f.get(face) {
                    if sign > 0 {
                        value += a;
                    } else {
                        value -= a;
                    }
                }
            }
            out.set(j, value);
        }
        Ok(out)
    }

    /// Coboundary allowing the top degree, where it is zero.
    pub fn coboundary_or_zero(&self, f: &Cochain) -> Result<Cochain> {
        if f.degree() == self.dim() {
            self.validate_cochain(f)?;
            return Ok(Cochain::zero(f.degree() + 1));
        }
        self.coboundary(f)
    }

    /// Elementary chain on one simplex.
    pub fn simplex_chain(&self, d: usize, i: usize) -> Chain {
        let mut c = Chain::zero(d);
        c.set(i, Rational::one());
        c
    }

    /// Cone over `self` with a new apex vertex `vertex_count()`.
    pub fn cone(&self) -> (Self, usize) {
        let apex = self.vertex_count;
        let mut list: Vec<Vec<usize>> = Vec::new();
        for layer in &self.simplices {
            for s in layer {
                list.push(s.clone());
                let mut c = s.clone();
                c.push(apex);
                list.push(c);
            }
        }
        let cone = Self::from_simplices(apex + 1, list).expect("cone of a valid complex");
        (cone, apex)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.vertex_count;
        let list = self
            .simplices
            .iter()
            .flatten()
            .cloned()
            .chain(other.simplices.iter().flatten().map(|s| s.iter().map(|v| v + shift).collect()));
        Self::from_simplices(shift + other.vertex_count, list.collect::<Vec<Vec<usize>>>())
            .expect("union of valid complexes")
    }

    /// Maximal simplices (those that are not a face of a bigger one).
    pub fn maximal_simplices(&self) -> Vec<Vec<usize>> {
        let mut has_coface: Vec<Vec<bool>> = self.simplices.iter().map(|l| vec![false; l.len()]).collect();
        for d in 1..=self.dim() {
            for j in 0..self.count(d) {
                for (_, f) in self.faces(d, j) {
                    has_coface[d - 1][f] = true;
                }
            }
        }
        let mut out = Vec::new();
        for (d, layer) in self.simplices.iter().enumerate() {
            for (i, s) in layer.iter().enumerate() {
                if !has_coface[d][i] {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// Connected components of the 1-skeleton, as a component id per vertex.
    pub fn components(&self) -> Vec<usize> {
        let n = self.vertex_count;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for e in self.simplices(1) {
            let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut label = HashMap::new();
        (0..n)
            .map(|v| {
                let r = find(&mut parent, v);
                let next = label.len();
                *label.entry(r).or_insert(next)
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, l)| if d % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn triangle() -> OrientedComplex {
        OrientedComplex::from_simplices(3, [[0, 1, 2]]).unwrap()
    }

    #[test]
    fn face_completion_order() {
        let k = OrientedComplex::from_simplices(4, vec![vec![2, 3], vec![0, 2, 1]]).unwrap();
        assert_eq!(k.simplices(1), &[vec![2, 3], vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(k.simplices(2), &[vec![0, 1, 2]]);
        assert_eq!(k.count(0), 4);
    }

    #[test]
    fn rejects_bad_simplices() {
        assert!(OrientedComplex::from_simplices(2, [[0, 0]]).is_err());
        assert!(OrientedComplex::from_simplices(2, [[0, 5]]).is_err());
        assert!(OrientedComplex::from_simplices(0, Vec::<Vec<usize>>::new()).is_err());
    }

    #[test]
    fn edge_boundary() {
        let k = OrientedComplex::from_simplices(2, [[0, 1]]).unwrap();
        let d = k.boundary(&k.simplex_chain(1, 0)).unwrap();
        assert_eq!(d.get(1), Some(&int(1)));
        assert_eq!(d.get(0), Some(&int(-1)));
    }

    #[test]
    fn boundary_of_vertex_is_error() {
        let k = triangle();
        assert!(k.boundary(&k.simplex_chain(0, 0)).is_err());
        assert_eq!(k.augmentation(&k.simplex_chain(0, 1)).unwrap(), int(1));
    }

    #[test]
    fn boundary_squared_on_triangle() {
        let k = triangle();
        let dd = k.boundary(&k.boundary(&k.simplex_chain(2, 0)).unwrap()).unwrap();
        assert!(dd.is_zero());
    }

    #[test]
    fn constant_cochain_is_closed() {
        let k = OrientedComplex::from_simplices(3, [[0, 1], [1, 2], [0, 2]]).unwrap();
        let f = Cochain::from_pairs(0, (0..3).map(|i| (i, rat(7, 3))));
        assert!(k.coboundary(&f).unwrap().is_zero());
        let top = Cochain::from_pairs(1, [(0, int(1))]);
        assert!(k.coboundary(&top).is_err());
        assert!(k.coboundary_or_zero(&top).unwrap().is_zero());
    }

    #[test]
    fn sort_sign() {
        let mut v = vec![2, 0, 1];
        assert_eq!(sort_with_sign(&mut v), Some(1));
        let mut v = vec![1, 0, 2];
        assert_eq!(sort_with_sign(&mut v), Some(-1));
        let mut v = vec![1, 1];
        assert_eq!(sort_with_sign(&mut v), None);
    }

    #[test]
    fn cone_and_union() {
        let circle = OrientedComplex::from_simplices(3, [[0, 1], [1, 2], [0, 2]]).unwrap();
        let (cone, apex) = circle.cone();
        assert_eq!(apex, 3);
        assert_eq!(cone.count(2), 3);
        assert_eq!(cone.euler_characteristic(), 1);
        let two = circle.disjoint_union(&circle);
        assert_eq!(two.components().iter().max(), Some(&1));
    }
}
