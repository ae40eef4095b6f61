//! Transfer of cochains from a free subgroup `Gamma <= G` of simplicial
//! automorphisms to `G`, by averaging over right coset representatives
//! with total weight one.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::chain::{Chain, Cochain};
use crate::complex::{sort_with_sign, OrientedComplex};
use crate::error::{Error, Result};
use crate::groupcoh::group::permutation_closure;
use crate::groupcoh::FiniteGroup;
use crate::homology::coboundary_matrix;
use crate::linalg::SparseMatrix;
use crate::rational::Rational;
use crate::seminorm::{linf_quotient, PivotRule};

/// Largest automorphism group accepted.
pub const ISOMETRY_ORDER_CAP: usize = 64;

#[derive(Clone, Debug)]
pub struct IsometryGroupDatum {
    complex: OrientedComplex,
    group: FiniteGroup,
    perms: Vec<Vec<usize>>,
    subgroup: Vec<usize>,
    representatives: Vec<usize>,
}

impl IsometryGroupDatum {
    /// `G` and `Gamma` are generated by vertex permutations; every element
    /// of `Gamma` must lie in `G`.
    pub fn new(complex: OrientedComplex, g_generators: &[Vec<usize>], gamma_generators: &[Vec<usize>]) -> Result<Self> {
        let nv = complex.vertex_count();
        let perms = permutation_closure(nv, g_generators, ISOMETRY_ORDER_CAP)?;
        let group = FiniteGroup::from_permutations(nv, g_generators, ISOMETRY_ORDER_CAP)?;
        for p in &perms {
            for d in 1..=complex.dim() {
                for s in complex.simplices(d) {
                    let mut image: Vec<usize> = s.iter().map(|&v| p[v]).collect();
                    image.sort_unstable();
                    if !complex.contains(&image) {
                        return Err(Error::InvalidGroup(format!("{p:?} is not a simplicial automorphism")));
                    }
                }
            }
        }
        let index: BTreeMap<&Vec<usize>, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut subgroup = Vec::new();
        for p in permutation_closure(nv, gamma_generators, ISOMETRY_ORDER_CAP)? {
            let &i = index.get(&p).ok_or_else(|| Error::InvalidGroup(format!("{p:?} is not in G")))?;
            let identity = p.iter().enumerate().all(|(v, &w)| v == w);
            if !identity && (0..nv).any(|v| p[v] == v) {
                return Err(Error::InvalidGroup(format!("{p:?} in Gamma has a fixed vertex")));
            }
            subgroup.push(i);
        }
        subgroup.sort_unstable();
        let mut covered = vec![false; group.order()];
        let mut representatives = Vec::new();
        for g in group.elements() {
            if covered[g] {
                continue;
            }
            representatives.push(g);
            for &h in &subgroup {
                covered[group.mul(h, g)] = true;
            }
        }
        Ok(Self { complex, group, perms, subgroup, representatives })
    }

    pub fn complex(&self) -> &OrientedComplex {
        &self.complex
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn subgroup(&self) -> &[usize] {
        &self.subgroup
    }

    /// Right coset representatives: each coset `Gamma g` is met once.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    /// `g . sigma` as a signed simplex.
    pub fn act_simplex(&self, g: usize, d: usize, i: usize) -> (i8, usize) {
        let mut image: Vec<usize> = self.complex.simplex(d, i).iter().map(|&v| self.perms[g][v]).collect();
        let sign = sort_with_sign(&mut image).expect("automorphisms are injective");
        (sign, self.complex.index_of(&image).expect("checked automorphism"))
    }

    pub fn act_chain(&self, g: usize, c: &Chain) -> Chain {
        let mut out = Chain::zero(c.degree());
        for (i, a) in c.iter() {
            let (sign, j) = self.act_simplex(g, c.degree(), i);
            out.add_term(j, if sign > 0 { a.clone() } else { -a });
        }
        out
    }

    /// `(g.f)(s) = f(g^-1 s)`.
    pub fn act_cochain(&self, g: usize, f: &Cochain) -> Cochain {
        let d = f.degree();
        let gi = self.group.inv(g);
        let mut out = Cochain::zero(d);
        for i in 0..self.complex.count(d) {
            let (sign, j) = self.act_simplex(gi, d, i);
            let v = f.value(j);
            out.set(i, if sign > 0 { v } else { -v });
        }
        out
    }

    fn invariant_under(&self, elements: &[usize], f: &Cochain) -> bool {
        elements.iter().all(|&g| self.act_cochain(g, f) == *f)
    }

    pub fn is_gamma_invariant(&self, f: &Cochain) -> bool {
        self.invariant_under(&self.subgroup, f)
    }

    pub fn is_g_invariant(&self, f: &Cochain) -> bool {
        let all: Vec<usize> = self.group.elements().collect();
        self.invariant_under(&all, f)
    }

    /// `tr(f)(s) = (1/|F|) sum_{g in F} f(g s)`.
    pub fn transfer(&self, f: &Cochain) -> Result<Cochain> {
        self.complex.validate_cochain(f)?;
        if !self.is_gamma_invariant(f) {
            return Err(Error::Precondition("cochain is not invariant under the subgroup".into()));
        }
        let d = f.degree();
        let weight = Rational::new(One::one(), self.representatives.len().into());
        let mut out = Cochain::zero(d);
        for i in 0..self.complex.count(d) {
            let mut acc = Rational::zero();
            for &g in &self.representatives {
                let (sign, j) = self.act_simplex(g, d, i);
                let v = f.value(j);
                acc += if sign > 0 { v } else { -v };
            }
            out.set(i, acc * &weight);
        }
        Ok(out)
    }

    /// Inclusion of `G`-invariant cochains among `Gamma`-invariant ones.
    pub fn restrict(&self, f: &Cochain) -> Result<Cochain> {
        if !self.is_g_invariant(f) {
            return Err(Error::Precondition("cochain is not invariant under G".into()));
        }
        Ok(f.clone())
    }

    /// Basis of cochains of degree `d` invariant under `elements`, as columns.
    fn invariant_columns(&self, elements: &[usize], d: usize) -> SparseMatrix {
        let count = self.complex.count(d);
        let mut m = SparseMatrix::new(0, count);
        for &g in elements {
            for i in 0..count {
                // (g.f)(s_i) - f(s_i) = sign f(s_j) - f(s_i)
                let (sign, j) = self.act_simplex(self.group.inv(g), d, i);
                let mut row = BTreeMap::new();
                let s = Rational::from_integer(sign.into());
                *row.entry(j).or_insert_with(Rational::zero) += s;
                *row.entry(i).or_insert_with(Rational::zero) -= Rational::one();
                row.retain(|_, v: &mut Rational| !v.is_zero());
                if !row.is_empty() {
                    m.push_row(row);
                }
            }
        }
        let basis = m.kernel_basis();
        let mut out = SparseMatrix::new(count, basis.len());
        for (c, v) in basis.iter().enumerate() {
            for (r, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    out.add(r, c, x.clone());
                }
            }
        }
        out
    }

    /// linf seminorm of `[f]` in the complex of cochains invariant under `elements`.
    fn invariant_seminorm(&self, elements: &[usize], f: &Cochain) -> Result<Rational> {
        let n = f.degree();
        let m = if n == 0 {
            SparseMatrix::new(self.complex.count(0), 0)
        } else {
            coboundary_matrix(&self.complex, n - 1).mul(&self.invariant_columns(elements, n - 1))
        };
        Ok(linf_quotient(&f.to_dense(self.complex.count(n)), &m, PivotRule::Bland)?.value)
    }

    /// Seminorm of a `G`-invariant cocycle class computed among `G`-invariant
    /// cochains and among `Gamma`-invariant cochains.
    pub fn res_isometry_check(&self, f: &Cochain) -> Result<IsometryReport> {
        self.restrict(f)?;
        crate::homology::ensure_cocycle(&self.complex, f)?;
        let all: Vec<usize> = self.group.elements().collect();
        let g_seminorm = self.invariant_seminorm(&all, f)?;
        let gamma_seminorm = self.invariant_seminorm(&self.subgroup, f)?;
        Ok(IsometryReport { equal: g_seminorm == gamma_seminorm, g_seminorm, gamma_seminorm })
    }

    /// Projection of any cochain onto the `G`-invariant ones (full average).
    pub fn average(&self, f: &Cochain) -> Cochain {
        let weight = Rational::new(One::one(), self.group.order().into());
        let mut out = Cochain::zero(f.degree());
        for g in self.group.elements() {
            out = &out + &self.act_cochain(g, f);
        }
        out.scaled(&weight)
    }

    /// Projection onto the `Gamma`-invariant cochains.
    pub fn gamma_average(&self, f: &Cochain) -> Cochain {
        let weight = Rational::new(One::one(), self.subgroup.len().into());
        let mut out = Cochain::zero(f.degree());
        for &g in &self.subgroup {
            out = &out + &self.act_cochain(g, f);
        }
        out.scaled(&weight)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IsometryReport {
    #[serde(with = "crate::rational::as_string")]
    pub g_seminorm: Rational,
    #[serde(with = "crate::rational::as_string")]
    pub gamma_seminorm: Rational,
    pub equal: bool,
}

/// Automorphism data used by tests and the CLI.
pub mod examples {
    use super::*;
    use crate::corpus;

    fn rotation(n: usize, by: usize) -> Vec<usize> {
        (0..n).map(|i| (i + by) % n).collect()
    }

    pub fn standard() -> Vec<(&'static str, IsometryGroupDatum)> {
        let reflection3: Vec<usize> = (0..3).map(|i| (3 - i) % 3).collect();
        vec![
            (
                "z2_on_circle4",
                IsometryGroupDatum::new(corpus::circle(4), &[rotation(4, 2)], &[]).expect("valid"),
            ),
            (
                "z4_over_z2_on_circle4",
                IsometryGroupDatum::new(corpus::circle(4), &[rotation(4, 1)], &[rotation(4, 2)]).expect("valid"),
            ),
            (
                "s3_over_z3_on_circle3",
                IsometryGroupDatum::new(corpus::circle(3), &[rotation(3, 1), reflection3], &[rotation(3, 1)])
                    .expect("valid"),
            ),
            ("z7_on_torus7", IsometryGroupDatum::new(corpus::torus7(), &[rotation(7, 1)], &[]).expect("valid")),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::indicator;
    use crate::rational::{int, rat};

    #[test]
    fn half_on_orbit() {
        let (_, d) = &examples::standard()[0];
        let t = d.transfer(&indicator(1, 0)).unwrap();
        // the rotation by two carries [0,1] to [2,3]
        assert_eq!(t.value(0), rat(1, 2));
        assert_eq!(t.value(2), rat(1, 2));
        assert!(d.is_g_invariant(&t));
    }

    #[test]
    fn transfer_fixes_invariants() {
        for (_, d) in examples::standard() {
            let f = d.average(&indicator(1, 0));
            assert_eq!(d.transfer(&d.restrict(&f).unwrap()).unwrap(), f);
        }
        let _ = int(0);
    }
}
