//! Fundamental classes of closed oriented pseudomanifolds.

use std::collections::VecDeque;

use num_traits::Zero;

use crate::chain::Chain;
use crate::complex::OrientedComplex;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct FundamentalClass {
    /// One coefficient `+-1` per top simplex.
    pub chain: Chain,
    /// Number of codimension-one faces on which the two adjacent top
    /// simplices were checked to induce opposite orientations.
    pub faces_checked: usize,
}

/// Orients the top simplices of a closed pseudomanifold coherently, one
/// connected component at a time, starting from `+1` on the lowest index.
pub fn fundamental_class(k: &OrientedComplex) -> Result<FundamentalClass> {
    let n = k.dim();
    if n == 0 {
        if k.vertex_count() == 1 {
            return Ok(FundamentalClass { chain: Chain::from_pairs(0, [(0, Rational::from_integer(1.into()))]), faces_checked: 0 });
        }
        return Err(Error::NotPseudomanifold("zero-dimensional with more than one vertex".into()));
    }
    let maximal = k.maximal_simplices();
    if let Some(s) = maximal.iter().find(|s| s.len() != n + 1) {
        return Err(Error::NotPseudomanifold(format!("{s:?} is maximal but not top-dimensional")));
    }
    let mut incident: Vec<Vec<(usize, i8)>> = vec![Vec::new(); k.count(n - 1)];
    for i in 0..k.count(n) {
        for (sign, f) in k.faces(n, i) {
            incident[f].push((i, sign));
        }
    }
    if let Some(f) = incident.iter().position(|t| t.len() != 2) {
        return Err(Error::NotPseudomanifold(format!(
            "face {:?} lies in {} top simplices",
            k.simplex(n - 1, f),
            incident[f].len()
        )));
    }
    let mut faces_of: Vec<Vec<usize>> = vec![Vec::new(); k.count(n)];
    for (f, pair) in incident.iter().enumerate() {
        for &(i, _) in pair {
            faces_of[i].push(f);
        }
    }
    let mut orientation: Vec<i8> = vec![0; k.count(n)];
    let mut checked = 0;
    for start in 0..k.count(n) {
        if orientation[start] != 0 {
            continue;
        }
        orientation[start] = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for &f in &faces_of[i] {
                let pair = &incident[f];
                let (mine, other) = if pair[0].0 == i { (pair[0], pair[1]) } else { (pair[1], pair[0]) };
                // Coherence: orientation[i]*sign_i + orientation[j]*sign_j = 0.
                let wanted = -orientation[i] * mine.1 * other.1;
                if orientation[other.0] == 0 {
                    orientation[other.0] = wanted;
                    queue.push_back(other.0);
                } else if orientation[other.0] != wanted {
                    return Err(Error::NonOrientable);
                }
            }
        }
    }
    for pair in &incident {
        let total = orientation[pair[0].0] * pair[0].1 + orientation[pair[1].0] * pair[1].1;
        if total != 0 {
            return Err(Error::NonOrientable);
        }
        checked += 1;
    }
    let chain = Chain::from_pairs(n, orientation.iter().enumerate().map(|(i, &o)| (i, Rational::from_integer(o.into()))));
    debug_assert!(k.boundary(&chain).map(|c| c.is_zero()).unwrap_or(false));
    debug_assert!(chain.iter().all(|(_, a)| !a.is_zero()));
    Ok(FundamentalClass { chain, faces_checked: checked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn sphere_and_torus() {
        for k in [corpus::tetrahedron_boundary(), corpus::torus7(), corpus::circle(3)] {
            let z = fundamental_class(&k).unwrap();
            assert!(k.boundary(&z.chain).unwrap().is_zero());
            assert_eq!(z.chain.len(), k.count(k.dim()));
        }
    }

    #[test]
    fn non_orientable_and_non_closed() {
        assert!(matches!(fundamental_class(&corpus::projective_plane6()), Err(Error::NonOrientable)));
        assert!(matches!(fundamental_class(&corpus::klein_grid(3, 4)), Err(Error::NonOrientable)));
        assert!(matches!(fundamental_class(&corpus::mobius5()), Err(Error::NotPseudomanifold(_))));
    }
}
