//! Brute-force ground truth for small instances.
//!
//! Outcome vertices come from enumerating every basic solution of `X` and
//! filtering the images by a convex-hull LP. The `V(S)` sets split the
//! vertices of the box-truncated target by which coordinates sit at the
//! anchor: for `S ⊆ {0..p}` they are the efficient extreme outcomes of the
//! subproblem on objectives `S`, padded with `ŷ_i` elsewhere.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};

use crate::linalg;
use crate::lp::{self, LinearProgram};
use crate::molp::{self, MolpInstance};
use crate::{Error, Rational, Result};

/// Default cap on the number of basic column subsets examined.
pub const DEFAULT_BUDGET: u128 = 200_000;

/// A subset `S` of objective indices (0-based, sorted).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VSetIndex(pub Vec<usize>);

impl VSetIndex {
    /// All subsets of `{0, ..., p-1}`, by size then lexicographically.
    pub fn all(p: usize) -> Vec<VSetIndex> {
        let mut out: Vec<VSetIndex> = (0u64..1 << p)
            .map(|mask| VSetIndex((0..p).filter(|i| mask >> i & 1 == 1).collect()))
            .collect();
        out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        out
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| {
        acc.saturating_mul((n - i) as u128) / (i as u128 + 1)
    })
}

/// Visits every `k`-subset of `0..n` in lexicographic order.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Whether `q` is a convex combination of `others`.
fn in_hull(q: &[Rational], others: &[&Vec<Rational>]) -> bool {
    if others.is_empty() {
        return false;
    }
    let k = others.len();
    let mut a: Vec<Vec<Rational>> = (0..q.len())
        .map(|i| others.iter().map(|o| o[i].clone()).collect())
        .collect();
    a.push(vec![Rational::one(); k]);
    let mut b = q.to_vec();
    b.push(Rational::one());
    let prog = LinearProgram::new(vec![Rational::zero(); k], a, b).expect("dimensions");
    lp::solve(&prog).is_optimal()
}

/// Vertices of the outcome set, from all basic feasible solutions of `X`.
pub fn enumerate_outcome_vertices(inst: &MolpInstance, budget: u128) -> Result<Vec<Vec<Rational>>> {
    let n = inst.num_vars();
    let a = inst.constraint_matrix();
    let rows = linalg::independent_rows(a, n);
    let m = rows.len();
    let needed = binomial(n, m);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let a_red: Vec<&Vec<Rational>> = rows.iter().map(|&i| &a[i]).collect();
    let b_red: Vec<Rational> = rows.iter().map(|&i| inst.rhs()[i].clone()).collect();

    let mut images = BTreeSet::new();
    for_each_subset(n, m, |cols| {
        let square: Vec<Vec<Rational>> = a_red
            .iter()
            .map(|row| cols.iter().map(|&j| row[j].clone()).collect())
            .collect();
        let Some(xb) = linalg::solve_square(&square, &b_red) else {
            return;
        };
        if xb.iter().any(|v| v.is_negative()) {
            return;
        }
        let mut x = vec![Rational::zero(); n];
        for (&j, v) in cols.iter().zip(xb) {
            x[j] = v;
        }
        images.insert(inst.outcome(&x));
    });

    let candidates: Vec<Vec<Rational>> = images.into_iter().collect();
    Ok(candidates
        .iter()
        .enumerate()
        .filter(|(i, q)| {
            let others: Vec<&Vec<Rational>> = candidates
                .iter()
                .enumerate()
                .filter(|(j, _)| j != i)
                .map(|(_, o)| o)
                .collect();
            !in_hull(q, &others)
        })
        .map(|(_, q)| q.clone())
        .collect())
}

/// Efficient extreme outcomes by definition.
pub fn brute_efficient_extremes(inst: &MolpInstance, budget: u128) -> Result<Vec<Vec<Rational>>> {
    let mut out = Vec::new();
    for v in enumerate_outcome_vertices(inst, budget)? {
        if molp::efficiency_check(inst, &v)? {
            out.push(v);
        }
    }
    Ok(out)
}

/// The set `V(S)` for anchor `y_hat`.
pub fn vset(
    inst: &MolpInstance,
    s: &VSetIndex,
    y_hat: &[Rational],
    budget: u128,
) -> Result<Vec<Vec<Rational>>> {
    if s.0.is_empty() {
        return Ok(vec![y_hat.to_vec()]);
    }
    let sub = inst.restrict_objectives(&s.0)?;
    let points = brute_efficient_extremes(&sub, budget)?;
    Ok(points
        .into_iter()
        .map(|q| {
            let mut full = y_hat.to_vec();
            for (&i, v) in s.0.iter().zip(q) {
                full[i] = v;
            }
            full
        })
        .collect())
}

/// All `V(S)` sets for the instance's anchor, keyed by `S`.
pub fn vsets(inst: &MolpInstance, budget: u128) -> Result<BTreeMap<VSetIndex, Vec<Vec<Rational>>>> {
    let p = inst.num_objectives();
    if p >= 32 || (1u128 << p) > budget {
        return Err(Error::BudgetExceeded {
            needed: 1u128.checked_shl(p as u32).unwrap_or(u128::MAX),
            budget,
        });
    }
    let y_hat = molp::anchor_point(inst);
    VSetIndex::all(p)
        .into_iter()
        .map(|s| {
            let pts = vset(inst, &s, &y_hat, budget)?;
            Ok((s, pts))
        })
        .collect()
}

/// Union of every `V(S)`, which is the vertex set of the box-truncated
/// target. Fails with an internal error if two sets overlap.
pub fn vsquare_vertices(inst: &MolpInstance, budget: u128) -> Result<Vec<Vec<Rational>>> {
    let mut owner: BTreeMap<Vec<Rational>, VSetIndex> = BTreeMap::new();
    for (s, pts) in vsets(inst, budget)? {
        for q in pts {
            if let Some(prev) = owner.insert(q.clone(), s.clone()) {
                return Err(Error::Internal(format!(
                    "V({:?}) and V({:?}) share {q:?}",
                    prev.0, s.0
                )));
            }
        }
    }
    Ok(owner.into_keys().collect())
}
