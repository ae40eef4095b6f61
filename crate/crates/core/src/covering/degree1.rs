//! Primitives of 1-cochains by integration along spanning-tree paths.

use std::collections::VecDeque;

use num_traits::Zero;

use crate::chain::Cochain;
use crate::complex::OrientedComplex;
use crate::error::{Error, Result};
use crate::homology::cycle_basis;
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct Integration {
    /// `F` with `delta F = f` and `F(base) = 0`.
    pub primitive: Cochain,
    pub base: usize,
    /// Largest number of edges on a tree path from the base vertex.
    pub depth: usize,
    /// `||F||_inf`, at most `depth * ||f||_inf`.
    pub norm: Rational,
}

/// Integrates `f` along breadth-first tree paths from vertex 0:
/// `F(q) = f(s_q)` where `s_q` is the tree path from the base to `q`.
pub fn integrate_degree1(k: &OrientedComplex, f: &Cochain) -> Result<Integration> {
    k.validate_cochain(f)?;
    if f.degree() != 1 {
        return Err(Error::DegreeMismatch { left: 1, right: f.degree() });
    }
    if !k.is_connected() {
        return Err(Error::Precondition("complex is not connected".into()));
    }
    for z in cycle_basis(k, 1) {
        let value = crate::chain::kronecker(f, &z)?;
        if !value.is_zero() {
            return Err(Error::Precondition(format!("cochain takes value {value} on a cycle")));
        }
    }
    let n = k.vertex_count();
    let mut adjacent: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); n];
    for (i, e) in k.simplices(1).iter().enumerate() {
        adjacent[e[0]].push((e[1], i, true));
        adjacent[e[1]].push((e[0], i, false));
    }
    let base = 0;
    let mut values: Vec<Option<Rational>> = vec![None; n];
    let mut depth = vec![0usize; n];
    values[base] = Some(Rational::zero());
    let mut queue = VecDeque::from([base]);
    while let Some(v) = queue.pop_front() {
        let here = values[v].clone().expect("visited");
        for &(w, edge, forward) in &adjacent[v] {
            if values[w].is_some() {
                continue;
            }
            let step = f.value(edge);
            values[w] = Some(if forward { &here + step } else { &here - step });
            depth[w] = depth[v] + 1;
            queue.push_back(w);
        }
    }
    let values: Vec<Rational> = values.into_iter().map(|v| v.expect("connected")).collect();
    let primitive = Cochain::from_dense(0, &values);
    if k.coboundary(&primitive)? != *f {
        return Err(Error::Invariant("integrated primitive has the wrong coboundary".into()));
    }
    let norm = primitive.linf_norm();
    Ok(Integration { primitive, base, depth: depth.into_iter().max().unwrap_or(0), norm })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::homology::indicator;
    use crate::rational::int;

    #[test]
    fn recovers_primitive_up_to_constant() {
        let k = corpus::torus7();
        let f0 = Cochain::from_dense(0, &(0..7).map(|i| int(i * i % 5)).collect::<Vec<_>>());
        let f = k.coboundary(&f0).unwrap();
        let out = integrate_degree1(&k, &f).unwrap();
        let shift = &f0.value(0) - out.primitive.value(0);
        for v in 0..7 {
            assert_eq!(out.primitive.value(v) + &shift, f0.value(v));
        }
        assert!(out.norm <= int(out.depth as i64) * f.linf_norm());
    }

    #[test]
    fn rejects_non_exact() {
        let k = corpus::circle(4);
        assert!(matches!(integrate_degree1(&k, &indicator(1, 0)), Err(Error::Precondition(_))));
        let zero = integrate_degree1(&k, &Cochain::zero(1)).unwrap();
        assert!(zero.primitive.is_zero());
    }
}
