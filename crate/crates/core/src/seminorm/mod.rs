//! l1 seminorms of homology classes, linf seminorms of cohomology classes and
//! their duality, all computed by exact linear programs.
//!
//! Values are seminorms in the fixed simplicial model: the infimum runs over
//! simplicial representatives only.

pub mod fundamental;
pub mod lp;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::chain::{kronecker, Chain, Cochain};
use crate::complex::OrientedComplex;
use crate::error::{Error, Result};
use crate::homology::{boundary_matrix, coboundary_matrix, ensure_cocycle, ensure_cycle};
use crate::linalg::SparseMatrix;
use crate::rational::Rational;

pub use fundamental::{fundamental_class, FundamentalClass};
pub use lp::{Direction, LpCertificate, LpProblem, LpStatus, PivotRule, Relation};

/// Optimum of a quotient-norm LP: `representative = base + M * shift`.
#[derive(Clone, Debug)]
pub struct QuotientOptimum {
    pub value: Rational,
    pub representative: Vec<Rational>,
    pub shift: Vec<Rational>,
    pub problem: LpProblem,
    pub certificate: LpCertificate,
}

fn optimum(problem: LpProblem, rule: PivotRule) -> Result<(LpProblem, LpCertificate, Rational)> {
    let cert = problem.solve_with(rule);
    let value = cert.optimum()?.clone();
    cert.verify(&problem)?;
    Ok((problem, cert, value))
}

/// `min ||base + M eta||_inf` over free `eta`. Variable 0 is the bound `t`,
/// variables `1..` are `eta`.
pub fn linf_quotient(base: &[Rational], m: &SparseMatrix, rule: PivotRule) -> Result<QuotientOptimum> {
    assert_eq!(base.len(), m.rows(), "linf_quotient: shape mismatch");
    let k = m.cols();
    let mut objective = vec![Rational::zero(); k + 1];
    objective[0] = Rational::one();
    let mut p = LpProblem::minimize(objective);
    for j in 1..=k {
        p.set_free(j);
    }
    for (i, b) in base.iter().enumerate() {
        let row: Vec<(usize, Rational)> = m.row(i).iter().map(|(&j, a)| (j + 1, a.clone())).collect();
        // t - (M eta)_i >= b_i and t + (M eta)_i >= -b_i
        let mut upper = vec![(0, Rational::one())];
        upper.extend(row.iter().map(|(j, a)| (*j, -a)));
        p.add_constraint(upper, Relation::Ge, b.clone())?;
        let mut lower = vec![(0, Rational::one())];
        lower.extend(row);
        p.add_constraint(lower, Relation::Ge, -b)?;
    }
    let (problem, certificate, value) = optimum(p, rule)?;
    let shift = certificate.primal[1..].to_vec();
    let representative = shifted(base, m, &shift);
    Ok(QuotientOptimum { value, representative, shift, problem, certificate })
}

/// `min ||base + M gamma||_1` over free `gamma`. Variables are `beta+`,
/// `beta-` (one pair per coordinate) followed by `gamma`.
pub fn l1_quotient(base: &[Rational], m: &SparseMatrix, rule: PivotRule) -> Result<QuotientOptimum> {
    assert_eq!(base.len(), m.rows(), "l1_quotient: shape mismatch");
    let n = base.len();
    let k = m.cols();
    let mut objective = vec![Rational::one(); 2 * n];
    objective.extend(std::iter::repeat_n(Rational::zero(), k));
    let mut p = LpProblem::minimize(objective);
    for j in 0..k {
        p.set_free(2 * n + j);
    }
    for (i, b) in base.iter().enumerate() {
        // beta+_i - beta-_i - (M gamma)_i = b_i
        let mut row = vec![(2 * i, Rational::one()), (2 * i + 1, -Rational::one())];
        row.extend(m.row(i).iter().map(|(&j, a)| (2 * n + j, -a)));
        p.add_constraint(row, Relation::Eq, b.clone())?;
    }
    let (problem, certificate, value) = optimum(p, rule)?;
    let shift = certificate.primal[2 * n..].to_vec();
    let representative = shifted(base, m, &shift);
    Ok(QuotientOptimum { value, representative, shift, problem, certificate })
}

fn shifted(base: &[Rational], m: &SparseMatrix, shift: &[Rational]) -> Vec<Rational> {
    m.mul_vec(shift).into_iter().zip(base).map(|(a, b)| a + b).collect()
}

#[derive(Clone, Debug)]
pub struct ChainSeminorm {
    pub value: Rational,
    pub representative: Chain,
    pub certificate: LpCertificate,
    pub problem: LpProblem,
}

#[derive(Clone, Debug)]
pub struct CochainSeminorm {
    pub value: Rational,
    pub representative: Cochain,
    pub certificate: LpCertificate,
    pub problem: LpProblem,
}

/// `min ||z + d gamma||_1` over `(n+1)`-chains `gamma`.
pub fn l1_seminorm(k: &OrientedComplex, z: &Chain) -> Result<ChainSeminorm> {
    l1_seminorm_with(k, z, PivotRule::Bland)
}

pub fn l1_seminorm_with(k: &OrientedComplex, z: &Chain, rule: PivotRule) -> Result<ChainSeminorm> {
    ensure_cycle(k, z)?;
    let n = z.degree();
    let opt = l1_quotient(&z.to_dense(k.count(n)), &boundary_matrix(k, n + 1), rule)?;
    Ok(ChainSeminorm {
        value: opt.value,
        representative: Chain::from_dense(n, &opt.representative),
        certificate: opt.certificate,
        problem: opt.problem,
    })
}

/// `min ||f + delta eta||_inf` over `(n-1)`-cochains `eta`.
pub fn linf_seminorm(k: &OrientedComplex, f: &Cochain) -> Result<CochainSeminorm> {
    linf_seminorm_with(k, f, PivotRule::Bland)
}

pub fn linf_seminorm_with(k: &OrientedComplex, f: &Cochain, rule: PivotRule) -> Result<CochainSeminorm> {
    k.validate_cochain(f)?;
    ensure_cocycle(k, f)?;
    let n = f.degree();
    let m = if n == 0 { SparseMatrix::new(k.count(0), 0) } else { coboundary_matrix(k, n - 1) };
    let opt = linf_quotient(&f.to_dense(k.count(n)), &m, rule)?;
    Ok(CochainSeminorm {
        value: opt.value,
        representative: Cochain::from_dense(n, &opt.representative),
        certificate: opt.certificate,
        problem: opt.problem,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DualityStatus {
    /// Both optima exist and `l1 * linf = 1`.
    Attained,
    /// The class is zero: no cocycle pairs to one with it.
    Degenerate,
}

#[derive(Clone, Debug)]
pub struct DualityReport {
    pub status: DualityStatus,
    pub l1: ChainSeminorm,
    /// Least linf norm of a cocycle pairing to one with the class.
    pub linf: Option<Rational>,
    /// An optimal normalized cocycle.
    pub cocycle: Option<Cochain>,
    pub dual_certificate: LpCertificate,
    pub dual_problem: LpProblem,
}

impl DualityReport {
    /// `sup 1/||f||` over cocycles with `<f, z> = 1`.
    pub fn dual_value(&self) -> Option<Rational> {
        self.linf.as_ref().map(|v| v.recip())
    }
}

/// Computes the l1 seminorm of `[z]` and, by a second LP, the least linf norm
/// of a cocycle `f` with `<f, z> = 1`; checks that the two are reciprocal.
pub fn duality_check(k: &OrientedComplex, z: &Chain) -> Result<DualityReport> {
    duality_check_with(k, z, PivotRule::Bland)
}

pub fn duality_check_with(k: &OrientedComplex, z: &Chain, rule: PivotRule) -> Result<DualityReport> {
    let l1 = l1_seminorm_with(k, z, rule)?;
    let n = z.degree();
    let cells = k.count(n);
    // variables: t, f_0 .. f_{cells-1}
    let mut objective = vec![Rational::zero(); cells + 1];
    objective[0] = Rational::one();
    let mut p = LpProblem::minimize(objective);
    for j in 1..=cells {
        p.set_free(j);
    }
    let delta = coboundary_matrix(k, n);
    for r in 0..delta.rows() {
        let row = delta.row(r).iter().map(|(&j, a)| (j + 1, a.clone())).collect();
        p.add_constraint(row, Relation::Eq, Rational::zero())?;
    }
    p.add_constraint(z.iter().map(|(j, a)| (j + 1, a.clone())).collect(), Relation::Eq, Rational::one())?;
    for j in 1..=cells {
        p.add_constraint(vec![(0, Rational::one()), (j, -Rational::one())], Relation::Ge, Rational::zero())?;
        p.add_constraint(vec![(0, Rational::one()), (j, Rational::one())], Relation::Ge, Rational::zero())?;
    }
    let cert = p.solve_with(rule);
    match cert.status {
        LpStatus::Infeasible => {
            if !l1.value.is_zero() {
                return Err(Error::Invariant("no normalized cocycle for a class of positive seminorm".into()));
            }
            Ok(DualityReport {
                status: DualityStatus::Degenerate,
                l1,
                linf: None,
                cocycle: None,
                dual_certificate: cert,
                dual_problem: p,
            })
        }
        LpStatus::Unbounded => Err(Error::Invariant("normalized cocycle LP is unbounded".into())),
        LpStatus::Optimal => {
            cert.verify(&p)?;
            let value = cert.optimum()?.clone();
            let cocycle = Cochain::from_dense(n, &cert.primal[1..]);
            if &l1.value * &value != Rational::one() {
                return Err(Error::Invariant(format!("duality fails: l1 = {}, linf = {}", l1.value, value)));
            }
            if kronecker(&cocycle, z)? != Rational::one() {
                return Err(Error::Invariant("optimal cocycle does not pair to one".into()));
            }
            Ok(DualityReport {
                status: DualityStatus::Attained,
                l1,
                linf: Some(value),
                cocycle: Some(cocycle),
                dual_certificate: cert,
                dual_problem: p,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::homology::indicator;
    use crate::rational::{int, rat};

    #[test]
    fn circle_values() {
        let k = corpus::circle(3);
        let z = corpus::circle_cycle(3);
        assert_eq!(l1_seminorm(&k, &z).unwrap().value, int(3));
        let f = indicator(1, 0);
        let s = linf_seminorm(&k, &f).unwrap();
        assert_eq!(s.value, rat(1, 3));
        let report = duality_check(&k, &z).unwrap();
        assert_eq!(report.status, DualityStatus::Attained);
        assert_eq!(report.dual_value(), Some(int(3)));
        assert_eq!(report.cocycle.unwrap().linf_norm(), rat(1, 3));
    }

    #[test]
    fn boundaries_vanish() {
        let k = corpus::triangle();
        let z = k.boundary(&k.simplex_chain(2, 0)).unwrap();
        assert_eq!(l1_seminorm(&k, &z).unwrap().value, int(0));
        assert_eq!(duality_check(&k, &z).unwrap().status, DualityStatus::Degenerate);
        let f = k.coboundary(&indicator(0, 1)).unwrap();
        assert_eq!(linf_seminorm(&k, &f).unwrap().value, int(0));
    }

    #[test]
    fn rejects_non_cycles() {
        let k = corpus::circle(3);
        let c = Chain::from_pairs(1, [(0, int(1))]);
        assert!(matches!(l1_seminorm(&k, &c), Err(Error::NotACycle { .. })));
    }
}
