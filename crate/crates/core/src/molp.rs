//! Multiobjective linear programs and the LP subproblems shared by both
//! outer approximation drivers.
//!
//! An instance maximizes `Cx` over `X = {x | Ax = b, x >= 0}`. The outcome
//! set is `Y = {Cx | x ∈ X}`. Two efficiency-equivalent targets are used:
//!
//! * [`Target::Yleq`], every point dominated by some outcome;
//! * [`Target::Ysquare`], the same set truncated below by an anchor `ŷ`
//!   that every outcome strictly dominates.

use num_traits::{One, Signed, Zero};

use crate::lp::{self, LinearProgram, LpStatus, Relation};
use crate::projective::HHalfspace;
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MolpInstance {
    c: Vec<Vec<Rational>>,
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn check_matrix(name: &str, m: &[Vec<Rational>], cols: usize) -> Result<()> {
    for (i, row) in m.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::InvalidInstance(format!(
                "row {i} of {name} has {} entries, expected {cols}",
                row.len()
            )));
        }
    }
    Ok(())
}

impl MolpInstance {
    /// Validates dimensions and checks that `X` is nonempty and bounded.
    pub fn new(c: Vec<Vec<Rational>>, a: Vec<Vec<Rational>>, b: Vec<Rational>) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::InvalidInstance(
                "at least one objective is required".into(),
            ));
        }
        let n = c[0].len();
        if n == 0 {
            return Err(Error::InvalidInstance(
                "at least one variable is required".into(),
            ));
        }
        check_matrix("C", &c, n)?;
        check_matrix("A", &a, n)?;
        if a.len() != b.len() {
            return Err(Error::InvalidInstance(format!(
                "A has {} rows but b has {} entries",
                a.len(),
                b.len()
            )));
        }
        let inst = Self { c, a, b };
        // X is bounded iff sum(x) is bounded, since x >= 0.
        let res = lp::solve(&inst.program(vec![Rational::one(); n]));
        match res.status {
            LpStatus::Optimal => Ok(inst),
            LpStatus::Infeasible => Err(Error::InfeasibleInstance),
            LpStatus::Unbounded => Err(Error::UnboundedInstance),
        }
    }

    /// Number of objectives `p`.
    pub fn num_objectives(&self) -> usize {
        self.c.len()
    }

    /// Number of variables `n`.
    pub fn num_vars(&self) -> usize {
        self.c[0].len()
    }

    /// Number of equality constraints `m`.
    pub fn num_constraints(&self) -> usize {
        self.a.len()
    }

    pub fn objectives(&self) -> &[Vec<Rational>] {
        &self.c
    }

    pub fn constraint_matrix(&self) -> &[Vec<Rational>] {
        &self.a
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.b
    }

    /// The outcome `Cx`.
    pub fn outcome(&self, x: &[Rational]) -> Vec<Rational> {
        self.c.iter().map(|row| dot(row, x)).collect()
    }

    /// The same feasible set with only the objective rows in `rows`.
    pub fn restrict_objectives(&self, rows: &[usize]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidInstance(
                "at least one objective is required".into(),
            ));
        }
        let c =
            rows.iter()
                .map(|&i| {
                    self.c.get(i).cloned().ok_or_else(|| {
                        Error::InvalidInstance(format!("objective {i} out of range"))
                    })
                })
                .collect::<Result<_>>()?;
        Ok(Self {
            c,
            a: self.a.clone(),
            b: self.b.clone(),
        })
    }

    /// A program over `x` alone with the feasibility constraints of `X`.
    fn program(&self, objective: Vec<Rational>) -> LinearProgram {
        LinearProgram::new(objective, self.a.clone(), self.b.clone()).expect("validated dimensions")
    }

    /// Like [`Self::program`] with `extra` trailing variables that do not
    /// appear in `Ax = b`.
    fn extended_program(&self, objective: Vec<Rational>, extra: usize) -> LinearProgram {
        let a = self
            .a
            .iter()
            .map(|row| {
                let mut r = row.clone();
                r.extend(std::iter::repeat_n(Rational::zero(), extra));
                r
            })
            .collect();
        LinearProgram::new(objective, a, self.b.clone()).expect("validated dimensions")
    }

    /// Some point of `X`.
    pub fn feasible_point(&self) -> Vec<Rational> {
        lp::solve(&self.program(vec![Rational::zero(); self.num_vars()]))
            .x
            .expect("validated instance is feasible")
    }

    fn optimize_objective(&self, row: usize, sign: i64) -> Rational {
        let obj = self.c[row]
            .iter()
            .map(|x| x * Rational::from_integer(sign.into()))
            .collect();
        let v = lp::solve(&self.program(obj))
            .value
            .expect("validated instance is feasible and bounded");
        v * Rational::from_integer(sign.into())
    }
}

/// The anchor `ŷ`, the ideal point and the componentwise objective minima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchorData {
    pub y_hat: Vec<Rational>,
    pub y_max: Vec<Rational>,
    pub y_min: Vec<Rational>,
}

/// Componentwise maxima of the objectives over `X`.
pub fn ideal_point(inst: &MolpInstance) -> Vec<Rational> {
    (0..inst.num_objectives())
        .map(|i| inst.optimize_objective(i, 1))
        .collect()
}

fn objective_minima(inst: &MolpInstance) -> Vec<Rational> {
    (0..inst.num_objectives())
        .map(|i| inst.optimize_objective(i, -1))
        .collect()
}

/// `ŷ = y_min - 1`, strictly dominated by every outcome.
pub fn anchor_point(inst: &MolpInstance) -> Vec<Rational> {
    objective_minima(inst)
        .into_iter()
        .map(|v| v - Rational::one())
        .collect()
}

pub fn anchor_data(inst: &MolpInstance) -> AnchorData {
    let y_min = objective_minima(inst);
    let y_hat = y_min.iter().map(|v| v - Rational::one()).collect();
    AnchorData {
        y_hat,
        y_max: ideal_point(inst),
        y_min,
    }
}

/// A point strictly inside the box-truncated target: the midpoint between
/// `ŷ` and some outcome.
pub fn interior_point(inst: &MolpInstance, y_hat: &[Rational]) -> Vec<Rational> {
    let y = inst.outcome(&inst.feasible_point());
    let half = Rational::new(1.into(), 2.into());
    y.iter().zip(y_hat).map(|(a, b)| (a + b) * &half).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Yleq,
    Ysquare { y_hat: Vec<Rational> },
}

impl Target {
    fn floor(&self) -> Option<&[Rational]> {
        match self {
            Target::Yleq => None,
            Target::Ysquare { y_hat } => Some(y_hat),
        }
    }
}

/// Whether `z` belongs to the target set.
pub fn member(inst: &MolpInstance, z: &[Rational], target: &Target) -> bool {
    if let Some(y_hat) = target.floor() {
        if z.iter().zip(y_hat).any(|(a, b)| a < b) {
            return false;
        }
    }
    let mut prog = inst.program(vec![Rational::zero(); inst.num_vars()]);
    for (row, zi) in inst.c.iter().zip(z) {
        prog = prog
            .with_inequality(row.clone(), Relation::Ge, zi.clone())
            .expect("dimensions");
    }
    lp::solve(&prog).is_optimal()
}

/// Whether an outcome-dominated point `y` is efficient, i.e. no outcome
/// dominates it.
pub fn efficiency_check(inst: &MolpInstance, y: &[Rational]) -> Result<bool> {
    let n = inst.num_vars();
    let obj: Vec<Rational> = (0..n)
        .map(|j| inst.c.iter().map(|row| &row[j]).sum())
        .collect();
    let mut prog = inst.program(obj);
    for (row, yi) in inst.c.iter().zip(y) {
        prog = prog
            .with_inequality(row.clone(), Relation::Ge, yi.clone())
            .expect("dimensions");
    }
    let res = lp::solve(&prog);
    match res.value {
        Some(v) => Ok(v == y.iter().sum::<Rational>()),
        None => Err(Error::NotInOutcomeSet),
    }
}

/// Boundary crossing of the segment from an interior point `ybar` to an
/// outside point `v`.
///
/// Solves `max λ` subject to `ybar + λ(v - ybar)` lying in the target, with
/// `0 <= λ <= 1`. Returns the crossing point and `λ*`.
pub fn boundary_point(
    inst: &MolpInstance,
    v: &[Rational],
    ybar: &[Rational],
    target: &Target,
) -> Result<(Vec<Rational>, Rational)> {
    let p = inst.num_objectives();
    if v.len() != p || ybar.len() != p {
        return Err(Error::BadSegment("dimension mismatch".into()));
    }
    let n = inst.num_vars();
    let dir: Vec<Rational> = v.iter().zip(ybar).map(|(a, b)| a - b).collect();
    let mut obj = vec![Rational::zero(); n + 1];
    obj[n] = Rational::one();
    let mut prog = inst.extended_program(obj, 1);
    for i in 0..p {
        let mut row = inst.c[i].clone();
        row.push(-&dir[i]);
        prog = prog
            .with_inequality(row, Relation::Ge, ybar[i].clone())
            .expect("dimensions");
    }
    let mut cap = vec![Rational::zero(); n + 1];
    cap[n] = Rational::one();
    prog = prog
        .with_inequality(cap, Relation::Le, Rational::one())
        .expect("dimensions");
    if let Some(y_hat) = target.floor() {
        for i in 0..p {
            let mut row = vec![Rational::zero(); n + 1];
            row[n] = dir[i].clone();
            prog = prog
                .with_inequality(row, Relation::Ge, &y_hat[i] - &ybar[i])
                .expect("dimensions");
        }
    }
    let res = lp::solve(&prog);
    let Some(x) = res.x else {
        return Err(Error::BadSegment(
            "interior point is not in the target".into(),
        ));
    };
    let lambda = x[n].clone();
    if lambda.is_one() {
        return Err(Error::BadSegment("outer point is in the target".into()));
    }
    if lambda.is_zero() {
        return Err(Error::BadSegment(
            "interior point lies on the boundary".into(),
        ));
    }
    let point = ybar
        .iter()
        .zip(&dir)
        .map(|(y, d)| y + &lambda * d)
        .collect();
    Ok((point, lambda))
}

/// A half-space containing the target whose boundary passes through the
/// boundary point `x`.
///
/// For points on the dominated-set boundary this solves
/// `max t  s.t.  Cx' >= x + t·1, x' ∈ X`. At a boundary point `t* = 0`, and
/// the duals `w >= 0` of the `p` objective rows sum to one and give the
/// supporting half-space `w·y <= w·x`. Points on a floor face of the box
/// target get that face.
pub fn cut_halfspace(inst: &MolpInstance, x: &[Rational], target: &Target) -> Result<HHalfspace> {
    let p = inst.num_objectives();
    if x.len() != p {
        return Err(Error::DimensionMismatch {
            expected: p,
            found: x.len(),
        });
    }
    if let Some(y_hat) = target.floor() {
        if x.iter().zip(y_hat).any(|(a, b)| a < b) {
            return Err(Error::NotOnBoundary);
        }
        if let Some(i) = (0..p).find(|&i| x[i] == y_hat[i]) {
            let mut normal = vec![Rational::zero(); p];
            normal[i] = Rational::one();
            return HHalfspace::at_least(&normal, &y_hat[i]);
        }
    }
    let n = inst.num_vars();
    let mut obj = vec![Rational::zero(); n + 2];
    obj[n] = Rational::one();
    obj[n + 1] = -Rational::one();
    let mut prog = inst.extended_program(obj, 2);
    for (c_row, xi) in inst.c.iter().zip(x) {
        let mut row = c_row.clone();
        row.push(-Rational::one());
        row.push(Rational::one());
        prog = prog
            .with_inequality(row, Relation::Ge, xi.clone())
            .expect("dimensions");
    }
    let res = lp::solve(&prog);
    match &res.value {
        Some(t) if t.is_zero() => {}
        _ => return Err(Error::NotOnBoundary),
    }
    let y = lp::dual_witness(&prog, &res)?;
    let m = inst.num_constraints();
    // Duals of `>=` rows in a maximization are non-positive.
    let w: Vec<Rational> = y[m..m + p].iter().map(|u| -u).collect();
    debug_assert!(w.iter().all(|u| !u.is_negative()));
    let offset = dot(&w, x);
    HHalfspace::at_most(&w, &offset)
}

/// Vertices of the box-truncated target that strictly dominate `ŷ`; these
/// are exactly its efficient vertices.
pub fn efficient_filter(vertices: &[Vec<Rational>], y_hat: &[Rational]) -> Vec<Vec<Rational>> {
    vertices
        .iter()
        .filter(|v| v.iter().zip(y_hat).all(|(a, b)| a > b))
        .cloned()
        .collect()
}
