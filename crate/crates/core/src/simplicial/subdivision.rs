//! Barycentric subdivision as a new complex.
//!
//! Vertices of `sd K` are the faces of `K`: the face with index `i` in
//! dimension `d` becomes vertex `offset[d] + i`, where `offset[d]` counts the
//! faces of lower dimension. Original vertices keep their ids. Simplices are
//! flags of faces; since ids grow with dimension, the ascending vertex tuple
//! of a simplex lists its flag from the smallest face up.

use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::chain::Chain;
use crate::complex::{sort_with_sign, OrientedComplex};
use crate::error::{Error, Result};
use crate::operator::ChainOperator;

use super::affine::{sd, AffineChain};

/// Default bound on the number of iterated subdivision rounds.
pub const DEFAULT_ROUND_CAP: usize = 6;

#[derive(Clone, Debug)]
pub struct SubdividedComplex {
    original: OrientedComplex,
    complex: OrientedComplex,
    offsets: Vec<usize>,
    faces: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexProvenance {
    pub id: usize,
    pub face: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubdivisionReport {
    pub original_counts: Vec<usize>,
    pub counts: Vec<usize>,
    pub offsets: Vec<usize>,
    pub vertices: Vec<VertexProvenance>,
}

impl SubdividedComplex {
    pub fn new(original: &OrientedComplex) -> Self {
        let mut offsets = Vec::with_capacity(original.dim() + 1);
        let mut faces = Vec::with_capacity(original.total_count());
        let mut total = 0;
        for d in 0..=original.dim() {
            offsets.push(total);
            total += original.count(d);
            faces.extend((0..original.count(d)).map(|i| (d, i)));
        }
        let all: Vec<(usize, usize)> = faces.clone();
        let flags: Vec<Vec<Vec<usize>>> = all
            .par_iter()
            .map(|&(d, i)| flags_ending_at(original, &offsets, original.simplex(d, i)))
            .collect();
        let mut layers: Vec<Vec<Vec<usize>>> = vec![Vec::new(); original.dim() + 1];
        for flag in flags.into_iter().flatten() {
            layers[flag.len() - 1].push(flag);
        }
        layers.par_iter_mut().for_each(|layer| layer.sort_unstable());
        let complex = OrientedComplex::from_layers(total, layers);
        Self { original: original.clone(), complex, offsets, faces }
    }

    pub fn original(&self) -> &OrientedComplex {
        &self.original
    }

    pub fn complex(&self) -> &OrientedComplex {
        &self.complex
    }

    /// Vertex id of the barycenter of face `(d, i)` of the original complex.
    pub fn vertex_id(&self, d: usize, i: usize) -> usize {
        self.offsets[d] + i
    }

    /// The original face whose barycenter is vertex `v`.
    pub fn face_of_vertex(&self, v: usize) -> &[usize] {
        let (d, i) = self.faces[v];
        self.original.simplex(d, i)
    }

    /// Smallest original face containing the image of simplex `(d, i)`: the
    /// face of its last vertex.
    pub fn carrier(&self, d: usize, i: usize) -> &[usize] {
        let last = *self.complex.simplex(d, i).last().expect("nonempty simplex");
        self.face_of_vertex(last)
    }

    /// `sd` of a chain of the original complex, as a chain of `sd K`.
    pub fn sd_chain(&self, c: &Chain) -> Result<Chain> {
        self.original.validate_chain(c)?;
        let affine = sd(&AffineChain::embed(&self.original, c)?);
        let mut out = Chain::zero(c.degree());
        for (s, a) in affine.iter() {
            let mut ids = Vec::with_capacity(s.dim() + 1);
            for p in s.points() {
                let support = p.support();
                let i = self
                    .original
                    .index_of(&support)
                    .ok_or_else(|| Error::Invariant(format!("support {support:?} is not a face")))?;
                ids.push(self.vertex_id(support.len() - 1, i));
            }
            let sign = sort_with_sign(&mut ids)
                .ok_or_else(|| Error::Invariant("degenerate piece in a subdivision".into()))?;
            let i = self
                .complex
                .index_of(&ids)
                .ok_or_else(|| Error::Invariant(format!("{ids:?} is not a flag")))?;
            out.add_term(i, if sign > 0 { a.clone() } else { -a });
        }
        Ok(out)
    }

    /// `sd` in degree `n` as an operator from `K` to `sd K`.
    pub fn sd_operator(&self, n: usize) -> Result<ChainOperator> {
        ChainOperator::from_fn(
            format!("sd{n}"),
            (n, self.original.count(n)),
            (n, self.complex.count(n)),
            |j| self.sd_chain(&self.original.simplex_chain(n, j)),
        )
    }

    /// The simplicial map `sd K -> K` sending each barycenter to the largest
    /// vertex of its face, applied to a chain. It is a chain map and a left
    /// inverse of `sd`.
    pub fn flatten(&self, c: &Chain) -> Result<Chain> {
        self.complex.validate_chain(c)?;
        let d = c.degree();
        let mut out = Chain::zero(d);
        for (i, a) in c.iter() {
            let mut image: Vec<usize> = self
                .complex
                .simplex(d, i)
                .iter()
                .map(|&v| *self.face_of_vertex(v).last().expect("nonempty face"))
                .collect();
            if let Some(sign) = sort_with_sign(&mut image) {
                let j = self
                    .original
                    .index_of(&image)
                    .ok_or_else(|| Error::Invariant(format!("{image:?} is not a simplex")))?;
                out.add_term(j, if sign > 0 { a.clone() } else { -a });
            }
        }
        Ok(out)
    }

    pub fn report(&self) -> SubdivisionReport {
        let vertices = (0..self.complex.vertex_count())
            .map(|v| VertexProvenance { id: v, face: self.face_of_vertex(v).to_vec() })
            .collect();
        SubdivisionReport {
            original_counts: (0..=self.original.dim()).map(|d| self.original.count(d)).collect(),
            counts: (0..=self.complex.dim()).map(|d| self.complex.count(d)).collect(),
            offsets: self.offsets.clone(),
            vertices,
        }
    }
}

fn flags_ending_at(k: &OrientedComplex, offsets: &[usize], top: &[usize]) -> Vec<Vec<usize>> {
    let id = |s: &[usize]| offsets[s.len() - 1] + k.index_of(s).expect("faces of a simplex are listed");
    let mut memo: HashMap<u32, Vec<Vec<usize>>> = HashMap::new();
    let full = (1u32 << top.len()) - 1;
    flags_rec(top, full, &id, &mut memo)
}

fn flags_rec(
    top: &[usize],
    mask: u32,
    id: &impl Fn(&[usize]) -> usize,
    memo: &mut HashMap<u32, Vec<Vec<usize>>>,
) -> Vec<Vec<usize>> {
    if let Some(done) = memo.get(&mask) {
        return done.clone();
    }
    let face: Vec<usize> = (0..top.len()).filter(|i| mask & (1 << i) != 0).map(|i| top[i]).collect();
    let me = id(&face);
    let mut out = vec![vec![me]];
    let mut sub = (mask - 1) & mask;
    while sub != 0 {
        for mut flag in flags_rec(top, sub, id, memo) {
            flag.push(me);
            out.push(flag);
        }
        sub = (sub - 1) & mask;
    }
    memo.insert(mask, out.clone());
    out
}

/// Simplex counts per dimension of `sd^r K` for `r = 0..=rounds`.
pub fn iterated_counts(k: &OrientedComplex, rounds: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
    if rounds > cap {
        return Err(Error::CapExceeded(format!("{rounds} subdivision rounds requested, cap is {cap}")));
    }
    let counts = |c: &OrientedComplex| (0..=c.dim()).map(|d| c.count(d)).collect::<Vec<_>>();
    let mut out = vec![counts(k)];
    let mut current = k.clone();
    for _ in 0..rounds {
        current = SubdividedComplex::new(&current).complex;
        out.push(counts(&current));
    }
    Ok(out)
}

/// Predicted simplex counts of `sd K` from those of `K`: a `d`-simplex of
/// `sd K` is a flag of `d + 1` faces, and an `m`-simplex has
/// `(j+1)! S(m+1, j+1)` flags of length `j + 1` ending at it.
pub fn predicted_counts(counts: &[usize]) -> Vec<usize> {
    let n = counts.len();
    let mut out = vec![0usize; n];
    for (m, &c) in counts.iter().enumerate() {
        for (j, slot) in out.iter_mut().enumerate().take(m + 1) {
            *slot += c * ordered_partitions(m + 1, j + 1);
        }
    }
    out
}

/// Number of chains `F_0 < ... < F_{j-1} = S` of nonempty subsets of an
/// `n`-set `S`, i.e. surjections from `n` onto `j` ordered blocks.
fn ordered_partitions(n: usize, j: usize) -> usize {
    // inclusion-exclusion: sum_i (-1)^i C(j,i) (j-i)^n
    let mut total: i128 = 0;
    let mut binom: i128 = 1;
    for i in 0..=j {
        let term = binom * (j as i128 - i as i128).pow(n as u32);
        total += if i % 2 == 0 { term } else { -term };
        binom = binom * (j as i128 - i as i128) / (i as i128 + 1);
    }
    total as usize
}

/// Checks `flatten(sd(c)) = c` on a chain.
pub fn flatten_is_left_inverse(s: &SubdividedComplex, c: &Chain) -> Result<bool> {
    let back = s.flatten(&s.sd_chain(c)?)?;
    Ok((&back - c).iter().all(|(_, a)| a.is_zero()))
}
