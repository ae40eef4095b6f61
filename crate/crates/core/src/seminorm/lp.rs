//! Exact rational linear programming by the two-phase primal simplex method.
//!
//! Every optimal answer carries a primal solution and a dual solution, and
//! [`LpCertificate::verify`] rechecks feasibility, strong duality and
//! complementary slackness from scratch against the problem data.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Minimize,
    Maximize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PivotRule {
    /// Smallest-index entering and leaving variables; never cycles.
    Bland,
    /// Most negative reduced cost. Falls back to Bland after a long run of
    /// degenerate pivots.
    Dantzig,
}

impl PivotRule {
    /// Reads `ELLONE_PIVOT`; only `bland` is accepted.
    pub fn from_env() -> Result<Self> {
        match std::env::var("ELLONE_PIVOT") {
            Err(_) => Ok(PivotRule::Bland),
            Ok(v) if v.eq_ignore_ascii_case("bland") => Ok(PivotRule::Bland),
            Ok(v) => Err(Error::Parse(format!("ELLONE_PIVOT: unsupported pivot rule {v:?}"))),
        }
    }
}

impl fmt::Display for PivotRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PivotRule::Bland => "bland",
            PivotRule::Dantzig => "dantzig",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<(usize, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// `min/max c.x` subject to linear constraints; each variable is either
/// nonnegative or free.
#[derive(Clone, Debug)]
pub struct LpProblem {
    direction: Direction,
    objective: Vec<Rational>,
    free: Vec<bool>,
    constraints: Vec<Constraint>,
}

impl LpProblem {
    pub fn new(direction: Direction, objective: Vec<Rational>) -> Self {
        let n = objective.len();
        Self { direction, objective, free: vec![false; n], constraints: Vec::new() }
    }

    pub fn minimize(objective: Vec<Rational>) -> Self {
        Self::new(Direction::Minimize, objective)
    }

    pub fn maximize(objective: Vec<Rational>) -> Self {
        Self::new(Direction::Maximize, objective)
    }

    pub fn set_free(&mut self, var: usize) {
        self.free[var] = true;
    }

    pub fn add_constraint(&mut self, coeffs: Vec<(usize, Rational)>, relation: Relation, rhs: Rational) -> Result<()> {
        if let Some((j, _)) = coeffs.iter().find(|(j, _)| *j >= self.objective.len()) {
            return Err(Error::Precondition(format!("constraint mentions variable {j} of {}", self.objective.len())));
        }
        self.constraints.push(Constraint { coeffs, relation, rhs });
        Ok(())
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn is_free(&self, var: usize) -> bool {
        self.free[var]
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn solve(&self) -> LpCertificate {
        self.solve_with(PivotRule::Bland)
    }

    pub fn solve_with(&self, rule: PivotRule) -> LpCertificate {
        Tableau::build(self).run(self, rule)
    }

    fn row_value(&self, c: &Constraint, x: &[Rational]) -> Rational {
        c.coeffs.iter().map(|(j, a)| a * &x[*j]).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Result of a solve. For an optimal status, `primal` and `dual` are an
/// optimal pair; the dual has one multiplier per constraint, with the sign
/// convention of the problem's own direction.
#[derive(Clone, Debug)]
pub struct LpCertificate {
    pub status: LpStatus,
    pub value: Option<Rational>,
    pub primal: Vec<Rational>,
    pub dual: Vec<Rational>,
    pub pivots: usize,
    pub rule: PivotRule,
}

#[derive(Serialize)]
struct CertificateJson<'a> {
    status: LpStatus,
    value: Option<String>,
    primal: Vec<String>,
    dual: Vec<String>,
    pivot_rule: &'a str,
}

impl LpCertificate {
    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }

    /// The optimal value, or an error naming the status.
    pub fn optimum(&self) -> Result<&Rational> {
        self.value.as_ref().ok_or_else(|| Error::Precondition(format!("linear program is {:?}", self.status)))
    }

    /// Rechecks an optimal certificate against `p` in exact arithmetic.
    pub fn verify(&self, p: &LpProblem) -> Result<()> {
        let fail = |what: &str| Err(Error::Invariant(format!("LP certificate: {what}")));
        if !self.is_optimal() {
            return fail("not optimal");
        }
        let (x, y) = (&self.primal, &self.dual);
        if x.len() != p.num_vars() || y.len() != p.constraints.len() {
            return fail("dimension mismatch");
        }
        // Work in the minimization form: objective s*c, multipliers s*y.
        let s = if p.direction == Direction::Minimize { Rational::one() } else { -Rational::one() };
        for (j, xj) in x.iter().enumerate() {
            if !p.free[j] && xj.is_negative() {
                return fail("negative primal variable");
            }
        }
        let mut aty = vec![Rational::zero(); p.num_vars()];
        for (c, yi) in p.constraints.iter().zip(y) {
            let lhs = p.row_value(c, x);
            let slack = &lhs - &c.rhs;
            let ok = match c.relation {
                Relation::Le => !slack.is_positive(),
                Relation::Ge => !slack.is_negative(),
                Relation::Eq => slack.is_zero(),
            };
            if !ok {
                return fail("primal constraint violated");
            }
            let ym = &s * yi;
            let sign_ok = match c.relation {
                Relation::Le => !ym.is_positive(),
                Relation::Ge => !ym.is_negative(),
                Relation::Eq => true,
            };
            if !sign_ok {
                return fail("dual multiplier has the wrong sign");
            }
            if !(&ym * &slack).is_zero() {
                return fail("complementary slackness (constraints)");
            }
            for (j, a) in &c.coeffs {
                aty[*j] += a * &ym;
            }
        }
        for j in 0..p.num_vars() {
            let reduced = &s * &p.objective[j] - &aty[j];
            if p.free[j] && !reduced.is_zero() {
                return fail("dual equality violated for a free variable");
            }
            if reduced.is_negative() {
                return fail("dual constraint violated");
            }
            if !(&reduced * &x[j]).is_zero() {
                return fail("complementary slackness (variables)");
            }
        }
        let primal_value: Rational = p.objective.iter().zip(x).map(|(c, v)| c * v).sum();
        let dual_value: Rational = p.constraints.iter().zip(y).map(|(c, v)| &c.rhs * v).sum();
        if Some(&primal_value) != self.value.as_ref() || primal_value != dual_value {
            return fail("primal and dual objective values differ");
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let strings = |v: &[Rational]| v.iter().map(format_rational).collect();
        serde_json::to_value(CertificateJson {
            status: self.status,
            value: self.value.as_ref().map(format_rational),
            primal: strings(&self.primal),
            dual: strings(&self.dual),
            pivot_rule: &self.rule.to_string(),
        })
        .expect("certificate serializes")
    }
}

/// Standard-form tableau `A x = b, x >= 0, b >= 0` with one identity column
/// (slack or artificial) per row.
struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Standard column of each original variable, and of its negative part if free.
    columns: Vec<(usize, Option<usize>)>,
    /// Identity column of each row in the initial tableau.
    unit: Vec<usize>,
    flipped: Vec<bool>,
    artificial_start: usize,
    width: usize,
}

const DANTZIG_DEGENERATE_LIMIT: usize = 200;

impl Tableau {
    fn build(p: &LpProblem) -> Self {
        let mut columns = Vec::with_capacity(p.num_vars());
        let mut next = 0;
        for j in 0..p.num_vars() {
            if p.free[j] {
                columns.push((next, Some(next + 1)));
                next += 2;
            } else {
                columns.push((next, None));
                next += 1;
            }
        }
        let structural = next;
        let slack_count = p.constraints.iter().filter(|c| c.relation != Relation::Eq).count();
        let m = p.constraints.len();
        let artificial_start = structural + slack_count;
        let width = artificial_start + m;
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut flipped = Vec::with_capacity(m);
        let mut unit = Vec::with_capacity(m);
        let mut slack = structural;
        for (i, c) in p.constraints.iter().enumerate() {
            let mut row = vec![Rational::zero(); width];
            for (j, a) in &c.coeffs {
                let (pos, neg) = columns[*j];
                row[pos] += a;
                if let Some(neg) = neg {
                    row[neg] -= a;
                }
            }
            let slack_col = match c.relation {
                Relation::Le => Some((slack, Rational::one())),
                Relation::Ge => Some((slack, -Rational::one())),
                Relation::Eq => None,
            };
            if let Some((col, v)) = &slack_col {
                row[*col] = v.clone();
                slack += 1;
            }
            let mut b = c.rhs.clone();
            let flip = b.is_negative();
            if flip {
                for v in row.iter_mut() {
                    *v = -&*v;
                }
                b = -b;
            }
            let ready = slack_col.map(|(col, _)| col).filter(|&col| row[col].is_one());
            let basic = match ready {
                Some(col) => col,
                None => {
                    row[artificial_start + i] = Rational::one();
                    artificial_start + i
                }
            };
            unit.push(basic);
            rows.push(row);
            rhs.push(b);
            flipped.push(flip);
        }
        let basis = unit.clone();
        Self { rows, rhs, basis, columns, unit, flipped, artificial_start, width }
    }

    fn reduced_costs(&self, cost: &[Rational]) -> (Vec<Rational>, Rational) {
        let mut r = cost.to_vec();
        let mut value = Rational::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (j, a) in self.rows[i].iter().enumerate() {
                if !a.is_zero() {
                    r[j] -= cb * a;
                }
            }
            value += cb * &self.rhs[i];
        }
        (r, value)
    }

    fn pivot(&mut self, r: usize, e: usize, costs: &mut [Rational], value: &mut Rational) {
        let inv = Rational::one() / &self.rows[r][e];
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        self.rhs[r] *= &inv;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        let nonzero: Vec<usize> = (0..self.width).filter(|&j| !pivot_row[j].is_zero()).collect();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][e].is_zero() {
                continue;
            }
            let factor = self.rows[i][e].clone();
            for &j in &nonzero {
                let delta = &factor * &pivot_row[j];
                self.rows[i][j] -= delta;
            }
            self.rhs[i] -= &factor * &pivot_rhs;
        }
        let factor = costs[e].clone();
        if !factor.is_zero() {
            for &j in &nonzero {
                let delta = &factor * &pivot_row[j];
                costs[j] -= delta;
            }
            *value += &factor * &pivot_rhs;
        }
        self.basis[r] = e;
    }

    /// Runs the simplex loop on columns `< allowed`. Returns `false` if unbounded.
    fn optimize(&mut self, costs: &mut [Rational], value: &mut Rational, allowed: usize, rule: PivotRule, pivots: &mut usize) -> bool {
        let mut degenerate_run = 0;
        loop {
            let use_bland = rule == PivotRule::Bland || degenerate_run > DANTZIG_DEGENERATE_LIMIT;
            let entering = if use_bland {
                (0..allowed).find(|&j| costs[j].is_negative())
            } else {
                let mut best: Option<usize> = None;
                for j in 0..allowed {
                    if costs[j].is_negative() && best.is_none_or(|b| costs[j] < costs[b]) {
                        best = Some(j);
                    }
                }
                best
            };
            let Some(e) = entering else { return true };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][e];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, ratio)) = leave else { return false };
            degenerate_run = if ratio.is_zero() { degenerate_run + 1 } else { 0 };
            self.pivot(r, e, costs, value);
            *pivots += 1;
        }
    }

    fn run(mut self, p: &LpProblem, rule: PivotRule) -> LpCertificate {
        let mut pivots = 0;
        let n = p.num_vars();
        let empty = |status| LpCertificate { status, value: None, primal: Vec::new(), dual: Vec::new(), pivots: 0, rule };

        // Phase I: minimize the sum of artificial variables.
        let mut phase1 = vec![Rational::zero(); self.width];
        for c in &mut phase1[self.artificial_start..] {
            *c = Rational::one();
        }
        let (mut costs, mut value) = self.reduced_costs(&phase1);
        value = -value;
        let width = self.width;
        self.optimize(&mut costs, &mut value, width, rule, &mut pivots);
        let infeasibility: Rational = self
            .basis
            .iter()
            .zip(&self.rhs)
            .filter(|(b, _)| **b >= self.artificial_start)
            .map(|(_, v)| v.clone())
            .sum();
        if infeasibility.is_positive() {
            return LpCertificate { pivots, ..empty(LpStatus::Infeasible) };
        }
        // Drive zero-level artificials out of the basis where possible; rows
        // where this fails are redundant and keep their artificial at zero.
        for r in 0..self.rows.len() {
            if self.basis[r] < self.artificial_start {
                continue;
            }
            if let Some(e) = (0..self.artificial_start).find(|&j| !self.rows[r][j].is_zero()) {
                let mut scratch = vec![Rational::zero(); self.width];
                let mut v = Rational::zero();
                self.pivot(r, e, &mut scratch, &mut v);
                pivots += 1;
            }
        }

        // Phase II on the structural and slack columns.
        let sign = if p.direction == Direction::Minimize { Rational::one() } else { -Rational::one() };
        let mut cost = vec![Rational::zero(); self.width];
        for (j, c) in p.objective.iter().enumerate() {
            let (pos, neg) = self.columns[j];
            cost[pos] = &sign * c;
            if let Some(neg) = neg {
                cost[neg] = -(&sign * c);
            }
        }
        let (mut costs, mut value) = self.reduced_costs(&cost);
        let allowed = self.artificial_start;
        if !self.optimize(&mut costs, &mut value, allowed, rule, &mut pivots) {
            return LpCertificate { pivots, ..empty(LpStatus::Unbounded) };
        }

        let mut standard = vec![Rational::zero(); self.width];
        for (i, &b) in self.basis.iter().enumerate() {
            standard[b] = self.rhs[i].clone();
        }
        let primal: Vec<Rational> = (0..n)
            .map(|j| {
                let (pos, neg) = self.columns[j];
                let mut v = standard[pos].clone();
                if let Some(neg) = neg {
                    v -= &standard[neg];
                }
                v
            })
            .collect();
        // The reduced cost of the identity column of row i is -y_i.
        let dual: Vec<Rational> = (0..self.rows.len())
            .map(|i| {
                let y = -costs[self.unit[i]].clone();
                let y = if self.flipped[i] { -y } else { y };
                &sign * y
            })
            .collect();
        let objective: Rational = p.objective.iter().zip(&primal).map(|(c, x)| c * x).sum();
        LpCertificate { status: LpStatus::Optimal, value: Some(objective), primal, dual, pivots, rule }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn bounded_max() {
        let mut p = LpProblem::maximize(vec![int(1)]);
        p.add_constraint(vec![(0, int(1))], Relation::Le, int(3)).unwrap();
        let cert = p.solve();
        assert_eq!(cert.value, Some(int(3)));
        cert.verify(&p).unwrap();
    }

    #[test]
    fn infeasible() {
        let mut p = LpProblem::minimize(vec![int(0)]);
        p.add_constraint(vec![(0, int(1))], Relation::Le, int(-1)).unwrap();
        assert_eq!(p.solve().status, LpStatus::Infeasible);
    }

    #[test]
    fn unbounded() {
        let mut p = LpProblem::maximize(vec![int(1), int(0)]);
        p.add_constraint(vec![(0, int(1)), (1, int(-1))], Relation::Le, int(1)).unwrap();
        assert_eq!(p.solve().status, LpStatus::Unbounded);
    }

    #[test]
    fn free_variables_and_equalities() {
        // min |x - 1/2| + |x + 1/3| written with t >= +-(...)
        let mut p = LpProblem::minimize(vec![int(0), int(1), int(1)]);
        p.set_free(0);
        p.add_constraint(vec![(1, int(1)), (0, int(-1))], Relation::Ge, rat(-1, 2)).unwrap();
        p.add_constraint(vec![(1, int(1)), (0, int(1))], Relation::Ge, rat(1, 2)).unwrap();
        p.add_constraint(vec![(2, int(1)), (0, int(-1))], Relation::Ge, rat(1, 3)).unwrap();
        p.add_constraint(vec![(2, int(1)), (0, int(1))], Relation::Ge, rat(-1, 3)).unwrap();
        for rule in [PivotRule::Bland, PivotRule::Dantzig] {
            let cert = p.solve_with(rule);
            assert_eq!(cert.value, Some(rat(5, 6)));
            cert.verify(&p).unwrap();
        }
    }

    #[test]
    fn redundant_equalities() {
        let mut p = LpProblem::minimize(vec![int(1), int(2)]);
        p.add_constraint(vec![(0, int(1)), (1, int(1))], Relation::Eq, int(2)).unwrap();
        p.add_constraint(vec![(0, int(2)), (1, int(2))], Relation::Eq, int(4)).unwrap();
        let cert = p.solve();
        assert_eq!(cert.value, Some(int(2)));
        cert.verify(&p).unwrap();
    }
}
