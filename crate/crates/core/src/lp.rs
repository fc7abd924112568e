//! Exact rational simplex for `max c·x  s.t.  Ax = b, Gx (<=|>=) h, x >= 0`.
//!
//! Two-phase tableau method with Bland's rule, so degenerate problems cannot
//! cycle. Every optimal result carries a dual vector `y` (one entry per
//! equality row followed by one per inequality row) satisfying
//! `yᵀ[A; G] >= cᵀ`, `y_i >= 0` on `<=` rows, `y_i <= 0` on `>=` rows, and
//! `b·y + h·y_G = c·x`.

use std::cell::Cell;
use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::{One, Signed, Zero};

use crate::linalg;
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Inequality {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram {
    objective: Vec<Rational>,
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
    inequalities: Vec<Inequality>,
}

impl LinearProgram {
    pub fn new(objective: Vec<Rational>, a: Vec<Vec<Rational>>, b: Vec<Rational>) -> Result<Self> {
        let n = objective.len();
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch {
                expected: a.len(),
                found: b.len(),
            });
        }
        for row in &a {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        Ok(Self {
            objective,
            a,
            b,
            inequalities: Vec::new(),
        })
    }

    pub fn with_inequality(
        mut self,
        coeffs: Vec<Rational>,
        relation: Relation,
        rhs: Rational,
    ) -> Result<Self> {
        if coeffs.len() != self.num_vars() {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars(),
                found: coeffs.len(),
            });
        }
        self.inequalities.push(Inequality {
            coeffs,
            relation,
            rhs,
        });
        Ok(self)
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    /// Equality rows plus inequality rows.
    pub fn num_rows(&self) -> usize {
        self.a.len() + self.inequalities.len()
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn equalities(&self) -> (&[Vec<Rational>], &[Rational]) {
        (&self.a, &self.b)
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.inequalities
    }

    fn row(&self, i: usize) -> (&[Rational], &Rational) {
        if i < self.a.len() {
            (&self.a[i], &self.b[i])
        } else {
            let q = &self.inequalities[i - self.a.len()];
            (&q.coeffs, &q.rhs)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpResult {
    pub status: LpStatus,
    pub x: Option<Vec<Rational>>,
    pub value: Option<Rational>,
    pub y: Option<Vec<Rational>>,
}

impl LpResult {
    fn without_solution(status: LpStatus) -> Self {
        Self {
            status,
            x: None,
            value: None,
            y: None,
        }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

thread_local! {
    static SOLVES: Cell<u64> = const { Cell::new(0) };
}

static OPTIMAL: AtomicU64 = AtomicU64::new(0);
static CERTIFIED: AtomicU64 = AtomicU64::new(0);

/// Number of [`solve`] calls made on the current thread.
pub fn solve_count() -> u64 {
    SOLVES.with(Cell::get)
}

/// Number of optimal results returned by [`solve`], across all threads.
pub fn optimal_count() -> u64 {
    OPTIMAL.load(Ordering::Relaxed)
}

/// Number of optimal results that passed the full certificate check inside
/// [`solve`], across all threads.
pub fn certified_count() -> u64 {
    CERTIFIED.load(Ordering::Relaxed)
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    /// Reduced costs, with `-z` in the last slot.
    obj: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn rhs_col(&self) -> usize {
        self.obj.len() - 1
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in &mut self.rows[r] {
            *x *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (x, p) in self.obj.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Runs Bland's rule over columns `< allowed`. Returns false if unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        let rhs = self.rhs_col();
        loop {
            let Some(c) = (0..allowed).find(|&j| self.obj[j].is_positive()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[c];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }
}

/// Solves the program exactly.
pub fn solve(lp: &LinearProgram) -> LpResult {
    SOLVES.with(|s| s.set(s.get() + 1));
    let result = solve_inner(lp);
    if result.is_optimal() {
        OPTIMAL.fetch_add(1, Ordering::Relaxed);
        if let Err(e) = certify(lp, &result) {
            panic!("simplex produced an uncertified optimum: {e}");
        }
        CERTIFIED.fetch_add(1, Ordering::Relaxed);
    }
    result
}

fn solve_inner(lp: &LinearProgram) -> LpResult {
    let n = lp.num_vars();
    let m_eq = lp.a.len();
    let k = lp.inequalities.len();
    let rows_total = m_eq + k;
    let structural = n + k;
    let width = structural + rows_total + 1;

    // Augmented rows with slacks, flipped so that every rhs is non-negative.
    let mut flips = vec![false; rows_total];
    let mut rows = Vec::with_capacity(rows_total);
    for i in 0..rows_total {
        let (coeffs, rhs) = lp.row(i);
        let mut row = vec![Rational::zero(); width];
        row[..n].clone_from_slice(coeffs);
        if i >= m_eq {
            let q = &lp.inequalities[i - m_eq];
            row[n + (i - m_eq)] = match q.relation {
                Relation::Le => Rational::one(),
                Relation::Ge => -Rational::one(),
            };
        }
        row[width - 1] = rhs.clone();
        if rhs.is_negative() {
            flips[i] = true;
            for x in &mut row {
                *x = -&*x;
            }
        }
        row[structural + i] = Rational::one();
        rows.push(row);
    }

    // Phase 1: maximize -sum(artificials).
    let mut obj = vec![Rational::zero(); width];
    for row in &rows {
        for j in 0..structural {
            obj[j] += &row[j];
        }
        obj[width - 1] += &row[width - 1];
    }
    let mut t = Tableau {
        rows,
        obj,
        basis: (structural..structural + rows_total).collect(),
    };
    t.optimize(structural);
    if !t.obj[width - 1].is_zero() {
        return LpResult::without_solution(LpStatus::Infeasible);
    }

    // Drive zero-level artificials out of the basis; rows where that is
    // impossible are linear combinations of the others.
    let mut kept: Vec<usize> = (0..rows_total).collect();
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= structural {
            if let Some(c) = (0..structural).find(|&j| !t.rows[r][j].is_zero()) {
                t.pivot(r, c);
            } else {
                t.rows.remove(r);
                t.basis.remove(r);
                kept.remove(r);
                continue;
            }
        }
        r += 1;
    }

    // Phase 2.
    let mut cost = vec![Rational::zero(); structural];
    cost[..n].clone_from_slice(&lp.objective);
    let mut obj = vec![Rational::zero(); width];
    obj[..structural].clone_from_slice(&cost);
    for (row, &bcol) in t.rows.iter().zip(&t.basis) {
        let cb = &cost[bcol];
        if cb.is_zero() {
            continue;
        }
        for j in 0..structural {
            obj[j] -= cb * &row[j];
        }
        obj[width - 1] -= cb * &row[width - 1];
    }
    t.obj = obj;
    if !t.optimize(structural) {
        return LpResult::without_solution(LpStatus::Unbounded);
    }

    let mut x = vec![Rational::zero(); n];
    for (row, &bcol) in t.rows.iter().zip(&t.basis) {
        if bcol < n {
            x[bcol] = row[width - 1].clone();
        }
    }
    let value: Rational = x.iter().zip(&lp.objective).map(|(a, c)| a * c).sum();

    // Duals from Bᵀ y = c_B on the kept rows of the (flipped) augmented system.
    let column = |i: usize, j: usize| -> Rational {
        let v = if j < n {
            lp.row(i).0[j].clone()
        } else if i >= m_eq && j - n == i - m_eq {
            match lp.inequalities[i - m_eq].relation {
                Relation::Le => Rational::one(),
                Relation::Ge => -Rational::one(),
            }
        } else {
            Rational::zero()
        };
        if flips[i] {
            -v
        } else {
            v
        }
    };
    let bt: Vec<Vec<Rational>> = t
        .basis
        .iter()
        .map(|&bcol| kept.iter().map(|&i| column(i, bcol)).collect())
        .collect();
    let cb: Vec<Rational> = t.basis.iter().map(|&bcol| cost[bcol].clone()).collect();
    let reduced = linalg::solve_square(&bt, &cb).expect("optimal basis is nonsingular");
    let mut y = vec![Rational::zero(); rows_total];
    for (yi, &i) in reduced.into_iter().zip(&kept) {
        y[i] = if flips[i] { -yi } else { yi };
    }

    LpResult {
        status: LpStatus::Optimal,
        x: Some(x),
        value: Some(value),
        y: Some(y),
    }
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Certificate(what()))
    }
}

/// Verifies primal feasibility, dual feasibility, strong duality and
/// complementary slackness of an optimal result.
pub fn certify(lp: &LinearProgram, result: &LpResult) -> Result<()> {
    let (Some(x), Some(value), Some(y)) = (&result.x, &result.value, &result.y) else {
        return Err(Error::NoDualAvailable);
    };
    let n = lp.num_vars();
    let m_eq = lp.a.len();
    check(x.len() == n && y.len() == lp.num_rows(), || "length".into())?;
    check(x.iter().all(|v| !v.is_negative()), || "x >= 0".into())?;

    let dot =
        |a: &[Rational], b: &[Rational]| -> Rational { a.iter().zip(b).map(|(p, q)| p * q).sum() };
    check(dot(&lp.objective, x) == *value, || "objective value".into())?;

    for (i, yi) in y.iter().enumerate() {
        let (coeffs, rhs) = lp.row(i);
        let ax = dot(coeffs, x);
        if i < m_eq {
            check(ax == *rhs, || format!("equality row {i}"))?;
        } else {
            let slack = match lp.inequalities[i - m_eq].relation {
                Relation::Le => rhs - &ax,
                Relation::Ge => &ax - rhs,
            };
            check(!slack.is_negative(), || format!("inequality row {i}"))?;
            let sign_ok = match lp.inequalities[i - m_eq].relation {
                Relation::Le => !yi.is_negative(),
                Relation::Ge => !yi.is_positive(),
            };
            check(sign_ok, || format!("dual sign on row {i}"))?;
            check(slack.is_zero() || yi.is_zero(), || {
                format!("complementary slackness on row {i}")
            })?;
        }
    }

    for (j, xj) in x.iter().enumerate() {
        let col: Rational = (0..lp.num_rows()).map(|i| &y[i] * &lp.row(i).0[j]).sum();
        let reduced = &col - &lp.objective[j];
        check(!reduced.is_negative(), || {
            format!("dual feasibility on column {j}")
        })?;
        check(xj.is_zero() || reduced.is_zero(), || {
            format!("complementary slackness on column {j}")
        })?;
    }

    let dual_value: Rational = (0..lp.num_rows()).map(|i| &y[i] * lp.row(i).1).sum();
    check(dual_value == *value, || "strong duality".into())
}

/// Returns the certified dual vector of an optimal result.
pub fn dual_witness(lp: &LinearProgram, result: &LpResult) -> Result<Vec<Rational>> {
    if !result.is_optimal() {
        return Err(Error::NoDualAvailable);
    }
    certify(lp, result)?;
    Ok(result.y.clone().expect("optimal result has duals"))
}
