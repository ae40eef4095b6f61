//! Covers of `|K|` by unions of open cells and the cover-relative
//! subdivision operators `xi`, `tau` and `omega`.
//!
//! A cover set is a set of simplices of `K`, read as the union of their open
//! cells. An affine simplex is small for the cover when its image lies in a
//! single cover set, i.e. every cell met by the image belongs to that set.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_traits::One;

use crate::complex::OrientedComplex;
use crate::error::{Error, Result};
use crate::rational::Rational;

use super::affine::{prism, sd, sd_power, AffineChain, AffineSimplex};

/// Default bound on the number of subdivision rounds tried by [`OpenCover::xi`].
pub const DEFAULT_XI_CAP: usize = 20;

#[derive(Clone, Debug)]
pub struct OpenCover {
    names: Vec<String>,
    sets: Vec<HashSet<Vec<usize>>>,
    cap: usize,
}

impl OpenCover {
    /// Validates that every cell is a simplex of `k` and that the open star of
    /// every vertex lies in some cover set. The latter makes every affine
    /// simplex small after finitely many subdivisions.
    pub fn new(k: &OrientedComplex, sets: Vec<(String, Vec<Vec<usize>>)>) -> Result<Self> {
        let mut names = Vec::with_capacity(sets.len());
        let mut cells = Vec::with_capacity(sets.len());
        for (name, list) in sets {
            let mut set = HashSet::new();
            for mut s in list {
                s.sort_unstable();
                if !k.contains(&s) {
                    return Err(Error::InvalidCover(format!("{name}: {s:?} is not a simplex of the complex")));
                }
                set.insert(s);
            }
            names.push(name);
            cells.push(set);
        }
        let cover = Self { names, sets: cells, cap: DEFAULT_XI_CAP };
        for v in 0..k.vertex_count() {
            let star = open_star(k, v);
            if !cover.sets.iter().any(|set| star.iter().all(|s| set.contains(s))) {
                return Err(Error::InvalidCover(format!("open star of vertex {v} lies in no cover set")));
            }
        }
        Ok(cover)
    }

    /// Single set containing every simplex.
    pub fn whole(k: &OrientedComplex) -> Self {
        let all = k.layers().iter().flatten().cloned().collect();
        Self { names: vec!["X".into()], sets: vec![all], cap: DEFAULT_XI_CAP }
    }

    /// The cover by open vertex stars.
    pub fn open_stars(k: &OrientedComplex) -> Self {
        let sets = (0..k.vertex_count()).map(|v| (format!("st{v}"), open_star(k, v))).collect();
        Self::new(k, sets).expect("open stars always cover")
    }

    /// The cover by closed vertex stars.
    pub fn closed_stars(k: &OrientedComplex) -> Self {
        let sets = (0..k.vertex_count())
            .map(|v| {
                let mut cells: HashSet<Vec<usize>> = HashSet::new();
                for s in open_star(k, v) {
                    for face in subfaces(&s) {
                        cells.insert(face);
                    }
                }
                (format!("St{v}"), cells.into_iter().collect())
            })
            .collect();
        Self::new(k, sets).expect("closed stars always cover")
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn cells(&self, i: usize) -> impl Iterator<Item = &Vec<usize>> {
        self.sets[i].iter()
    }

    /// Index of a cover set containing the image of `s`.
    pub fn containing_set(&self, s: &AffineSimplex) -> Option<usize> {
        let cells = s.cells();
        self.sets.iter().position(|set| cells.iter().all(|c| set.contains(c)))
    }

    pub fn is_small(&self, s: &AffineSimplex) -> bool {
        self.containing_set(s).is_some()
    }

    pub fn is_small_chain(&self, c: &AffineChain) -> bool {
        c.iter().all(|(s, _)| self.is_small(s))
    }

    /// Least `n` such that `sd^n(s)` is a small chain.
    pub fn xi(&self, s: &AffineSimplex) -> Result<usize> {
        let mut c = AffineChain::simplex(s.clone());
        for n in 0..=self.cap {
            if self.is_small_chain(&c) {
                return Ok(n);
            }
            if n < self.cap {
                c = sd(&c);
            }
        }
        Err(Error::XiCapExceeded { cap: self.cap })
    }

    fn xi_cached(&self, s: &AffineSimplex, cache: &mut HashMap<AffineSimplex, usize>) -> Result<usize> {
        if let Some(&n) = cache.get(s) {
            return Ok(n);
        }
        let n = self.xi(s)?;
        cache.insert(s.clone(), n);
        Ok(n)
    }

    /// `tau(s) = sd^xi(s)(s) - sum_i (-1)^i sum_{xi(s_i) <= j < xi(s)} D(sd^j(s_i))`,
    /// extended linearly. Together with [`OpenCover::omega`] it satisfies
    /// `tau - Id = d omega + omega d`, and `tau` is the identity on small chains.
    pub fn tau(&self, c: &AffineChain) -> Result<AffineChain> {
        let mut cache = HashMap::new();
        let mut out = AffineChain::zero(c.degree());
        for (s, a) in c.iter() {
            let n = self.xi_cached(s, &mut cache)?;
            let mut piece = sd_power(&AffineChain::simplex(s.clone()), n);
            if s.dim() > 0 {
                for i in 0..=s.dim() {
                    let face = s.face(i);
                    let m = self.xi_cached(&face, &mut cache)?;
                    if m > n {
                        return Err(Error::Invariant(format!(
                            "xi of a face ({m}) exceeds xi of the simplex ({n})"
                        )));
                    }
                    let sign = if i % 2 == 0 { -Rational::one() } else { Rational::one() };
                    let mut iterate = sd_power(&AffineChain::simplex(face), m);
                    for _ in m..n {
                        piece.add_chain(&prism(&iterate), &sign);
                        iterate = sd(&iterate);
                    }
                }
            }
            out.add_chain(&piece, a);
        }
        Ok(out)
    }

    /// `omega(s) = sum_{0 <= j < xi(s)} D(sd^j(s))`, extended linearly.
    pub fn omega(&self, c: &AffineChain) -> Result<AffineChain> {
        let mut cache = HashMap::new();
        let mut out = AffineChain::zero(c.degree() + 1);
        for (s, a) in c.iter() {
            let n = self.xi_cached(s, &mut cache)?;
            let mut iterate = AffineChain::simplex(s.clone());
            for _ in 0..n {
                out.add_chain(&prism(&iterate), a);
                iterate = sd(&iterate);
            }
        }
        Ok(out)
    }

    /// Values of `xi` on every simplex of `k`, per dimension.
    pub fn xi_table(&self, k: &OrientedComplex) -> Result<BTreeMap<(usize, usize), usize>> {
        let mut out = BTreeMap::new();
        for (d, layer) in k.layers().iter().enumerate() {
            for (i, s) in layer.iter().enumerate() {
                out.insert((d, i), self.xi(&AffineSimplex::from_vertices(s))?);
            }
        }
        Ok(out)
    }
}

/// Simplices of `k` having `v` as a vertex.
pub fn open_star(k: &OrientedComplex, v: usize) -> Vec<Vec<usize>> {
    k.layers().iter().flatten().filter(|s| s.binary_search(&v).is_ok()).cloned().collect()
}

fn subfaces(s: &[usize]) -> Vec<Vec<usize>> {
    let n = s.len();
    (1u32..(1 << n))
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).collect())
        .collect()
}
