//! Finite groups given by multiplication tables.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

/// Largest group order accepted by the constructors.
pub const DEFAULT_ORDER_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty multiplication table".into()));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidGroup("table is not an n x n table with entries below n".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for (a, row) in table.iter().enumerate() {
            let inv = (0..n)
                .find(|&b| row[b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
            inverse.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(Self { table, identity, inverse })
    }

    /// The group generated by permutations of `0..degree` (composition
    /// `(p q)(x) = p(q(x))`). Elements are numbered in breadth-first order
    /// from the identity.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<Self> {
        let elements = permutation_closure(degree, generators, cap)?;
        let index: BTreeMap<&Vec<usize>, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let table = elements
            .iter()
            .map(|p| elements.iter().map(|q| index[&compose(p, q)]).collect())
            .collect();
        Self::from_table(table)
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(table).expect("cyclic group table")
    }

    pub fn symmetric3() -> Self {
        Self::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], DEFAULT_ORDER_CAP).expect("S3")
    }

    /// Dihedral group of order `2n`, as symmetries of an `n`-gon.
    pub fn dihedral(n: usize) -> Self {
        let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        Self::from_permutations(n, &[rotation, reflection], 2 * n).expect("dihedral group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Checks the order against `cap`.
    pub fn check_order(&self, cap: usize) -> Result<()> {
        if self.order() > cap {
            return Err(Error::CapExceeded(format!("group order {} exceeds cap {cap}", self.order())));
        }
        Ok(())
    }
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

/// All products of the generators, capped at `cap` elements.
pub fn permutation_closure(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<Vec<Vec<usize>>> {
    for g in generators {
        let mut seen = vec![false; degree];
        if g.len() != degree || g.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
            return Err(Error::InvalidGroup(format!("{g:?} is not a permutation of 0..{degree}")));
        }
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut known: BTreeMap<Vec<usize>, usize> = BTreeMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in generators {
            let p = compose(g, &elements[i]);
            if !known.contains_key(&p) {
                if elements.len() == cap {
                    return Err(Error::CapExceeded(format!("generated group has more than {cap} elements")));
                }
                known.insert(p.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(p);
            }
        }
    }
    Ok(elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(FiniteGroup::cyclic(4).order(), 4);
        assert_eq!(FiniteGroup::symmetric3().order(), 6);
        assert_eq!(FiniteGroup::dihedral(4).order(), 8);
        let s3 = FiniteGroup::symmetric3();
        assert!((0..6).any(|a| (0..6).any(|b| s3.mul(a, b) != s3.mul(b, a))));
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroup::from_permutations(3, &[vec![0, 0, 1]], 12).is_err());
        assert!(matches!(
            FiniteGroup::from_permutations(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]], 12),
            Err(Error::CapExceeded(_))
        ));
    }
}
