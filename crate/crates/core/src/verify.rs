//! Running the solvers side by side and checking them against each other.

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Instant;

use crate::molp::{self, MolpInstance};
use crate::oracle;
use crate::outer::{self, RunStats, SolveResult};
use crate::projective::{HPoint, PointClass};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Projective,
    Euclidean,
    Oracle,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Projective => "projective",
            Algorithm::Euclidean => "euclidean",
            Algorithm::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "projective" => Ok(Algorithm::Projective),
            "euclidean" => Ok(Algorithm::Euclidean),
            "oracle" => Ok(Algorithm::Oracle),
            _ => Err(Error::Parse(format!("unknown algorithm {s:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub algorithm: Algorithm,
    /// Efficient extreme outcomes, sorted.
    pub outcomes: Vec<Vec<Rational>>,
    pub stats: RunStats,
}

/// Runs one algorithm. The oracle reports zero iterations; its vertex count
/// is the number of outcome vertices.
pub fn solve(inst: &MolpInstance, algorithm: Algorithm, budget: u128) -> Result<Solution> {
    let (outcomes, stats) = match algorithm {
        Algorithm::Projective => {
            let r = outer::run_projective(inst)?;
            (r.outcomes, r.stats)
        }
        Algorithm::Euclidean => {
            let r = outer::run_euclidean(inst)?;
            (r.outcomes, r.stats)
        }
        Algorithm::Oracle => {
            let start = Instant::now();
            let before = crate::lp::solve_count();
            let vertices = oracle::enumerate_outcome_vertices(inst, budget)?;
            let mut outcomes = Vec::new();
            for v in &vertices {
                if molp::efficiency_check(inst, v)? {
                    outcomes.push(v.clone());
                }
            }
            outcomes.sort();
            let stats = RunStats {
                iterations: 0,
                lp_solves: crate::lp::solve_count() - before,
                vertex_counts: Vec::new(),
                final_vertex_count: vertices.len(),
                final_non_efficient_count: vertices.len() - outcomes.len(),
                wall_time: start.elapsed(),
            };
            (outcomes, stats)
        }
    };
    Ok(Solution {
        algorithm,
        outcomes,
        stats,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub p: usize,
    pub projective: SolveResult,
    pub euclidean: SolveResult,
    pub oracle: Vec<Vec<Rational>>,
    pub vsquare: Option<Vec<Vec<Rational>>>,
    pub checks: Vec<Check>,
}

fn show(points: &[Vec<Rational>]) -> String {
    let items: Vec<String> = points
        .iter()
        .map(|v| {
            let parts: Vec<String> = v.iter().map(crate::format::format_rational).collect();
            format!("({})", parts.join(", "))
        })
        .collect();
    format!("{{{}}}", items.join(", "))
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name,
        passed,
        detail: detail.into(),
    }
}

/// Runs both outer approximation variants and the oracle and checks that
/// they agree, along with the structural properties each variant must have.
pub fn verify_instance(inst: &MolpInstance, budget: u128) -> Result<VerifyReport> {
    let p = inst.num_objectives();
    let projective = outer::run_projective(inst)?;
    let euclidean = outer::run_euclidean(inst)?;
    let truth = oracle::brute_efficient_extremes(inst, budget)?;
    let mut oracle_sorted = truth.clone();
    oracle_sorted.sort();

    let mut checks = Vec::new();
    checks.push(check(
        "projective matches oracle",
        projective.outcomes == oracle_sorted,
        format!(
            "projective {} vs oracle {}",
            show(&projective.outcomes),
            show(&oracle_sorted)
        ),
    ));
    checks.push(check(
        "euclidean matches oracle",
        euclidean.outcomes == oracle_sorted,
        format!(
            "euclidean {} vs oracle {}",
            show(&euclidean.outcomes),
            show(&oracle_sorted)
        ),
    ));

    let mut infinite: Vec<HPoint> = projective
        .final_polytope
        .vertices()
        .iter()
        .filter(|v| v.classify() == PointClass::Infinite)
        .cloned()
        .collect();
    infinite.sort();
    let stats = &projective.stats;
    checks.push(check(
        "projective non-efficient vertices are -e_i",
        infinite == outer::negative_axis_points(p) && stats.final_non_efficient_count == p,
        format!(
            "{} non-efficient, {} at infinity, p = {p}",
            stats.final_non_efficient_count,
            infinite.len()
        ),
    ));
    let floor = (1usize << p) - 1;
    checks.push(check(
        "euclidean non-efficient vertices >= 2^p - 1",
        euclidean.stats.final_non_efficient_count >= floor,
        format!(
            "{} non-efficient, bound {floor}",
            euclidean.stats.final_non_efficient_count
        ),
    ));

    let mut final_euclid: Vec<Vec<Rational>> = euclidean
        .final_polytope
        .vertices()
        .iter()
        .map(|v| v.project())
        .collect::<Result<_>>()?;
    final_euclid.sort();
    let vsquare = match oracle::vsquare_vertices(inst, budget) {
        Ok(v) => Some(v),
        Err(Error::Internal(msg)) => {
            checks.push(check("V(S) sets are disjoint", false, msg));
            None
        }
        Err(e) => return Err(e),
    };
    if let Some(v) = &vsquare {
        checks.push(check(
            "V(S) union equals final euclidean vertices",
            *v == final_euclid,
            format!("V(S) {} vs euclidean {}", show(v), show(&final_euclid)),
        ));
    }

    Ok(VerifyReport {
        p,
        projective,
        euclidean,
        oracle: oracle_sorted,
        vsquare,
        checks,
    })
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Plain-text table of the run statistics followed by one line per check.
    pub fn render(&self, color: bool) -> String {
        let paint = |ok: bool| -> String {
            let word = if ok { "PASS" } else { "FAIL" };
            match (color, ok) {
                (false, _) => word.to_string(),
                (true, true) => format!("\x1b[32m{word}\x1b[0m"),
                (true, false) => format!("\x1b[31m{word}\x1b[0m"),
            }
        };
        let counts = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<11} {:>10} {:>9} {:>14} {:>13}  vertices per iteration",
            "algorithm", "iterations", "lp solves", "final vertices", "non-efficient"
        );
        for (name, r) in [
            ("projective", &self.projective),
            ("euclidean", &self.euclidean),
        ] {
            let s = &r.stats;
            let _ = writeln!(
                out,
                "{:<11} {:>10} {:>9} {:>14} {:>13}  {}",
                name,
                s.iterations,
                s.lp_solves,
                s.final_vertex_count,
                s.final_non_efficient_count,
                counts(&s.vertex_counts)
            );
        }
        let _ = writeln!(out, "efficient extreme outcomes: {}", self.oracle.len());
        for c in &self.checks {
            let _ = writeln!(out, "{}  {}: {}", paint(c.passed), c.name, c.detail);
        }
        out
    }
}
