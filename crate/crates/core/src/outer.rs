//! Outer approximation drivers.
//!
//! Both drivers start from a simplex containing the target, repeatedly pick
//! a vertex outside the target, find where the segment from an interior
//! point to that vertex leaves the target, and cut along a supporting
//! half-space through that boundary point. The double description engine
//! maintains the vertex list after each cut.
//!
//! [`run_euclidean`] approximates the box-truncated target in Euclidean
//! space. [`run_projective`] approximates the unbounded dominated set in
//! oriented projective space, where it is a polytope with exactly `p`
//! vertices at infinity; its visible vertices at termination are the
//! efficient extreme outcomes.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dd::DDPolytope;
use crate::lp;
use crate::molp::{self, AnchorData, MolpInstance, Target};
use crate::projective::{HHalfspace, HPoint, PointClass, Sign};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunStats {
    /// Number of cuts performed.
    pub iterations: usize,
    pub lp_solves: u64,
    /// Vertex count after each cut.
    pub vertex_counts: Vec<usize>,
    pub final_vertex_count: usize,
    pub final_non_efficient_count: usize,
    pub wall_time: Duration,
}

/// One cut of an outer approximation run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Iteration {
    /// The vertex found outside the target.
    pub rejected: HPoint,
    /// Where the segment towards it leaves the target.
    pub boundary: Vec<Rational>,
    pub halfspace: HHalfspace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// Efficient extreme outcomes, sorted lexicographically.
    pub outcomes: Vec<Vec<Rational>>,
    pub stats: RunStats,
    pub final_polytope: DDPolytope,
    pub history: Vec<Iteration>,
}

/// How the next vertex outside the target is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VertexSelection {
    /// The first outside vertex in canonical vertex order.
    #[default]
    FirstInOrder,
    /// A uniformly random outside vertex, from a seeded generator.
    Random(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OuterOptions {
    pub selection: VertexSelection,
    /// Abort with an internal error after this many cuts.
    pub max_iterations: usize,
}

impl Default for OuterOptions {
    fn default() -> Self {
        Self {
            selection: VertexSelection::FirstInOrder,
            max_iterations: 100_000,
        }
    }
}

fn unit(p: usize, i: usize, scale: Rational) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); p];
    e[i] = scale;
    e
}

/// Simplex `conv{ŷ, ŷ + αe_1, ..., ŷ + αe_p}` with `α = Σ(y_max - ŷ) + 1`.
pub fn initial_simplex_euclidean(anchor: &AnchorData) -> Result<DDPolytope> {
    let p = anchor.y_hat.len();
    let alpha: Rational = anchor
        .y_max
        .iter()
        .zip(&anchor.y_hat)
        .map(|(a, b)| a - b)
        .sum::<Rational>()
        + Rational::one();
    let mut vertices = vec![HPoint::lift(&anchor.y_hat)];
    for i in 0..p {
        let v: Vec<Rational> = anchor
            .y_hat
            .iter()
            .zip(unit(p, i, alpha.clone()))
            .map(|(a, b)| a + b)
            .collect();
        vertices.push(HPoint::lift(&v));
    }
    let mut halfspaces = (0..p)
        .map(|i| HHalfspace::at_least(&unit(p, i, Rational::one()), &anchor.y_hat[i]))
        .collect::<Result<Vec<_>>>()?;
    let top = anchor.y_hat.iter().sum::<Rational>() + &alpha;
    halfspaces.push(HHalfspace::at_most(&vec![Rational::one(); p], &top)?);
    DDPolytope::with_witness(vertices, halfspaces, HHalfspace::visible(p))
}

/// Projective simplex with the visible vertex `y_max` and the `p` points at
/// infinity `-e_i`.
pub fn initial_simplex_projective(anchor: &AnchorData) -> Result<DDPolytope> {
    let p = anchor.y_max.len();
    let mut vertices = vec![HPoint::lift(&anchor.y_max)];
    for i in 0..p {
        vertices.push(HPoint::at_infinity(&unit(p, i, -Rational::one()))?);
    }
    let mut halfspaces = (0..p)
        .map(|i| HHalfspace::at_most(&unit(p, i, Rational::one()), &anchor.y_max[i]))
        .collect::<Result<Vec<_>>>()?;
    halfspaces.push(HHalfspace::visible(p));
    // x_1 + ... + x_p <= (Σ y_max + 1) x_{p+1} holds strictly at every vertex.
    let witness = HHalfspace::at_most(
        &vec![Rational::one(); p],
        &(anchor.y_max.iter().sum::<Rational>() + Rational::one()),
    )?;
    DDPolytope::with_witness(vertices, halfspaces, witness)
}

/// The canonical points at infinity `-e_1, ..., -e_p`, sorted.
pub fn negative_axis_points(p: usize) -> Vec<HPoint> {
    let mut pts: Vec<HPoint> = (0..p)
        .map(|i| {
            let mut c = vec![BigInt::zero(); p + 1];
            c[i] = -BigInt::one();
            HPoint::from_integers(c).expect("nonzero")
        })
        .collect();
    pts.sort();
    pts
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Euclidean,
    Projective,
}

pub fn run_euclidean(inst: &MolpInstance) -> Result<SolveResult> {
    run_euclidean_with(inst, &OuterOptions::default())
}

pub fn run_euclidean_with(inst: &MolpInstance, opts: &OuterOptions) -> Result<SolveResult> {
    run(inst, Mode::Euclidean, opts)
}

pub fn run_projective(inst: &MolpInstance) -> Result<SolveResult> {
    run_projective_with(inst, &OuterOptions::default())
}

pub fn run_projective_with(inst: &MolpInstance, opts: &OuterOptions) -> Result<SolveResult> {
    run(inst, Mode::Projective, opts)
}

fn run(inst: &MolpInstance, mode: Mode, opts: &OuterOptions) -> Result<SolveResult> {
    let started = Instant::now();
    let solves_before = lp::solve_count();
    let p = inst.num_objectives();
    let anchor = molp::anchor_data(inst);
    let (target, ybar, mut poly) = match mode {
        Mode::Euclidean => (
            Target::Ysquare {
                y_hat: anchor.y_hat.clone(),
            },
            molp::interior_point(inst, &anchor.y_hat),
            initial_simplex_euclidean(&anchor)?,
        ),
        Mode::Projective => (
            Target::Yleq,
            anchor.y_hat.clone(),
            initial_simplex_projective(&anchor)?,
        ),
    };
    let at_infinity = negative_axis_points(p);
    let mut rng = match opts.selection {
        VertexSelection::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        VertexSelection::FirstInOrder => None,
    };

    // Membership is a property of the point alone, so results carry over
    // between iterations.
    let mut membership: HashMap<HPoint, bool> = HashMap::new();
    let mut is_member = |v: &HPoint| -> bool {
        *membership
            .entry(v.clone())
            .or_insert_with(|| molp::member(inst, &v.project().expect("visible"), &target))
    };

    let mut stats = RunStats::default();
    let mut history = Vec::new();
    loop {
        let visible = poly.vertices().iter().filter(|v| v.is_visible());
        let chosen = match rng.as_mut() {
            None => visible.into_iter().find(|v| !is_member(v)).cloned(),
            Some(rng) => {
                let outside: Vec<&HPoint> = visible.filter(|v| !is_member(v)).collect();
                outside.choose(rng).map(|v| (*v).clone())
            }
        };
        let Some(v) = chosen else {
            break;
        };
        if stats.iterations >= opts.max_iterations {
            return Err(Error::Internal(format!(
                "no convergence after {} cuts",
                opts.max_iterations
            )));
        }
        let (x, _) = molp::boundary_point(inst, &v.project()?, &ybar, &target)?;
        let h = molp::cut_halfspace(inst, &x, &target)?;

        let lifted = HPoint::lift(&x);
        if h.side(&lifted)? != Sign::Zero || h.side(&v)? != Sign::Negative {
            return Err(Error::Internal(
                "cut does not separate the rejected vertex".into(),
            ));
        }
        for prior in poly.halfspaces() {
            if prior.side(&lifted)? == Sign::Negative {
                return Err(Error::Internal(
                    "boundary point violates an earlier cut".into(),
                ));
            }
        }

        poly = poly.cut(&h)?;
        if mode == Mode::Projective {
            let inf: Vec<HPoint> = poly
                .vertices()
                .iter()
                .filter(|v| !v.is_visible())
                .cloned()
                .collect();
            if inf != at_infinity {
                return Err(Error::Internal(format!(
                    "vertices at infinity changed to {inf:?}"
                )));
            }
        }
        stats.iterations += 1;
        stats.vertex_counts.push(poly.num_vertices());
        history.push(Iteration {
            rejected: v,
            boundary: x,
            halfspace: h,
        });
    }

    let visible = poly.visible_points();
    let mut outcomes = match mode {
        Mode::Euclidean => molp::efficient_filter(&visible, &anchor.y_hat),
        Mode::Projective => {
            debug_assert_eq!(poly.vertices_of_class(PointClass::Infinite).count(), p);
            visible
        }
    };
    outcomes.sort();
    stats.final_vertex_count = poly.num_vertices();
    stats.final_non_efficient_count = poly.num_vertices() - outcomes.len();
    stats.lp_solves = lp::solve_count() - solves_before;
    stats.wall_time = started.elapsed();
    Ok(SolveResult {
        outcomes,
        stats,
        final_polytope: poly,
        history,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rvec};
    use std::collections::BTreeSet;

    fn simplex2() -> MolpInstance {
        MolpInstance::new(
            vec![rvec(&[1, 0, 0]), rvec(&[0, 1, 0])],
            vec![rvec(&[1, 1, 1])],
            rvec(&[1]),
        )
        .unwrap()
    }

    fn pt(xs: &[i64]) -> HPoint {
        HPoint::from_i64(xs).unwrap()
    }

    fn hs(xs: &[i64]) -> HHalfspace {
        HHalfspace::from_i64(xs).unwrap()
    }

    #[test]
    fn euclidean_initial_simplex() {
        let anchor = molp::anchor_data(&simplex2());
        let p0 = initial_simplex_euclidean(&anchor).unwrap();
        let verts: BTreeSet<HPoint> = p0.vertices().iter().cloned().collect();
        let expected: BTreeSet<HPoint> = [pt(&[-1, -1, 1]), pt(&[4, -1, 1]), pt(&[-1, 4, 1])]
            .into_iter()
            .collect();
        assert_eq!(verts, expected);
        assert_eq!(p0.halfspaces().len(), 3);
        for y in [rvec(&[0, 0]), rvec(&[1, 0]), rvec(&[0, 1])] {
            for h in p0.halfspaces() {
                assert!(h.contains(&HPoint::lift(&y)).unwrap());
            }
        }
    }

    #[test]
    fn projective_initial_simplex() {
        let anchor = molp::anchor_data(&simplex2());
        let q0 = initial_simplex_projective(&anchor).unwrap();
        let verts: BTreeSet<HPoint> = q0.vertices().iter().cloned().collect();
        let expected: BTreeSet<HPoint> = [pt(&[1, 1, 1]), pt(&[-1, 0, 0]), pt(&[0, -1, 0])]
            .into_iter()
            .collect();
        assert_eq!(verts, expected);
        assert_eq!(
            q0.halfspaces(),
            &[hs(&[-1, 0, 1]), hs(&[0, -1, 1]), hs(&[0, 0, 1])][..]
        );
        let visible_boundary = 2;
        for (i, v) in q0.vertices().iter().enumerate() {
            if v.classify() == PointClass::Infinite {
                assert!(q0.incidence(i).contains(visible_boundary));
                assert_eq!(q0.incidence(i).count_ones(..), 2);
            }
        }
    }

    #[test]
    fn projective_simplex2_trace() {
        let r = run_projective(&simplex2()).unwrap();
        assert_eq!(r.stats.iterations, 1);
        assert_eq!(r.history[0].halfspace, hs(&[-1, -1, 1]));
        let verts: BTreeSet<HPoint> = r.final_polytope.vertices().iter().cloned().collect();
        let expected: BTreeSet<HPoint> = [
            pt(&[1, 0, 1]),
            pt(&[0, 1, 1]),
            pt(&[-1, 0, 0]),
            pt(&[0, -1, 0]),
        ]
        .into_iter()
        .collect();
        assert_eq!(verts, expected);
        assert_eq!(r.outcomes, vec![rvec(&[0, 1]), rvec(&[1, 0])]);
        assert_eq!(r.stats.final_non_efficient_count, 2);
    }

    #[test]
    fn euclidean_simplex2_trace() {
        let r = run_euclidean(&simplex2()).unwrap();
        assert_eq!(r.outcomes, vec![rvec(&[0, 1]), rvec(&[1, 0])]);
        assert_eq!(r.stats.final_vertex_count, 5);
        assert_eq!(r.stats.final_non_efficient_count, 3);
        assert_eq!(r.stats.vertex_counts.len(), r.stats.iterations);
        let pentagon: BTreeSet<Vec<Rational>> = [
            rvec(&[1, 0]),
            rvec(&[0, 1]),
            rvec(&[-1, 1]),
            rvec(&[-1, -1]),
            rvec(&[1, -1]),
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<Vec<Rational>> = r.final_polytope.visible_points().into_iter().collect();
        assert_eq!(got, pentagon);
    }

    #[test]
    fn single_objective() {
        let inst =
            MolpInstance::new(vec![rvec(&[3, 1, 2])], vec![rvec(&[1, 1, 1])], rvec(&[2])).unwrap();
        let e = run_euclidean(&inst).unwrap();
        let q = run_projective(&inst).unwrap();
        assert_eq!(e.outcomes, vec![vec![rat(6)]]);
        assert_eq!(q.outcomes, vec![vec![rat(6)]]);
        assert_eq!(q.stats.iterations, 0);
        assert_eq!(e.stats.final_non_efficient_count, 1);
    }

    #[test]
    fn selection_order_does_not_change_result() {
        let inst = MolpInstance::new(
            vec![
                rvec(&[3, 1, 0, 2]),
                rvec(&[0, 2, 3, 1]),
                rvec(&[1, 0, 1, 3]),
            ],
            vec![rvec(&[1, 1, 1, 1])],
            rvec(&[1]),
        )
        .unwrap();
        let base_e = run_euclidean(&inst).unwrap();
        let base_q = run_projective(&inst).unwrap();
        for seed in 0..4 {
            let opts = OuterOptions {
                selection: VertexSelection::Random(seed),
                ..OuterOptions::default()
            };
            let e = run_euclidean_with(&inst, &opts).unwrap();
            let q = run_projective_with(&inst, &opts).unwrap();
            assert_eq!(
                e.final_polytope.vertices(),
                base_e.final_polytope.vertices()
            );
            assert_eq!(e.outcomes, base_e.outcomes);
            assert_eq!(q.outcomes, base_q.outcomes);
        }
    }
}
