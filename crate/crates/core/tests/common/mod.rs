//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

pub mod dd;

use std::collections::BTreeSet;

use molp_core::molp::MolpInstance;
use molp_core::{HHalfspace, HPoint, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn r(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn dot(h: &HHalfspace, x: &[Rational]) -> Rational {
    h.coeffs()
        .iter()
        .zip(x)
        .map(|(a, b)| Rational::from_integer(a.clone()) * b)
        .sum()
}

/// Reduced row echelon form; returns the pivot column of each nonzero row.
fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][c].recip();
        for x in &mut m[row] {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pr = m[row].clone();
                for (x, y) in m[i].iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

/// The nullspace direction of a `(D-1) x D` system, if it is one-dimensional.
fn null_ray(rows: &[Vec<Rational>], width: usize) -> Option<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    if pivots.len() != width - 1 {
        return None;
    }
    let free = (0..width).find(|c| !pivots.contains(c))?;
    let mut ray = vec![Rational::zero(); width];
    ray[free] = Rational::one();
    for (i, &pc) in pivots.iter().enumerate() {
        ray[pc] = -m[i][free].clone();
    }
    Some(ray)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Vertices of `{x | h·x >= 0 for all h} ∩ {witness·x > 0}` by trying every
/// set of `D-1` tight half-spaces.
pub fn naive_vertices(halfspaces: &[HHalfspace], witness: &HHalfspace) -> BTreeSet<HPoint> {
    let width = witness.len();
    let rows: Vec<Vec<Rational>> = halfspaces
        .iter()
        .map(|h| {
            h.coeffs()
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect()
        })
        .collect();
    let mut out = BTreeSet::new();
    for s in subsets(rows.len(), width - 1) {
        let sub: Vec<Vec<Rational>> = s.iter().map(|&i| rows[i].clone()).collect();
        let Some(ray) = null_ray(&sub, width) else {
            continue;
        };
        for cand in [ray.clone(), ray.iter().map(|x| -x).collect()] {
            if dot(witness, &cand).is_positive()
                && halfspaces.iter().all(|h| !dot(h, &cand).is_negative())
            {
                out.insert(HPoint::canonicalize(&cand).unwrap());
            }
        }
    }
    out
}

/// Facet half-spaces of the cone spanned by `points`.
pub fn naive_facets(points: &[HPoint]) -> Vec<HHalfspace> {
    let width = points[0].len();
    let rows: Vec<Vec<Rational>> = points.iter().map(HPoint::to_rationals).collect();
    let mut out = BTreeSet::new();
    for s in subsets(rows.len(), width - 1) {
        let sub: Vec<Vec<Rational>> = s.iter().map(|&i| rows[i].clone()).collect();
        let Some(normal) = null_ray(&sub, width) else {
            continue;
        };
        for cand in [normal.clone(), normal.iter().map(|x| -x).collect()] {
            let h = HHalfspace::canonicalize(&cand).unwrap();
            if points.iter().all(|p| h.contains(p).unwrap()) {
                out.insert(h);
            }
        }
    }
    out.into_iter().collect()
}

/// Vertices of a Euclidean polyhedron `{y | a·y <= c}` by brute force over
/// `d`-subsets of tight constraints.
pub fn euclidean_vertices(rows: &[(Vec<Rational>, Rational)]) -> BTreeSet<Vec<Rational>> {
    let d = rows[0].0.len();
    let mut out = BTreeSet::new();
    for s in subsets(rows.len(), d) {
        let mut m: Vec<Vec<Rational>> = s
            .iter()
            .map(|&i| {
                let mut row = rows[i].0.clone();
                row.push(rows[i].1.clone());
                row
            })
            .collect();
        let pivots = rref(&mut m);
        if pivots.len() != d || pivots.contains(&d) {
            continue;
        }
        let y: Vec<Rational> = (0..d).map(|i| m[i][d].clone()).collect();
        let feasible = rows
            .iter()
            .all(|(a, c)| a.iter().zip(&y).map(|(p, q)| p * q).sum::<Rational>() <= *c);
        if feasible {
            out.insert(y);
        }
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random bounded feasible instance with `p <= 3`, `n <= 7`, `m <= 3`.
///
/// The first constraint row is strictly positive, so `X` is bounded, and
/// `b = A x0` for a nonnegative integer `x0`, so `X` is nonempty.
pub fn random_instance(seed: u64) -> MolpInstance {
    let mut g = rng(seed);
    let p = g.gen_range(2..=3);
    let n = g.gen_range(p..=7);
    let m = g.gen_range(1..=3usize.min(n - 1));
    let x0: Vec<i64> = (0..n).map(|_| g.gen_range(0..=3)).collect();
    let x0_sum: i64 = x0.iter().sum();
    let x0: Vec<i64> = if x0_sum == 0 { vec![1; n] } else { x0 };
    let mut a: Vec<Vec<i64>> = vec![(0..n).map(|_| g.gen_range(1..=4)).collect()];
    for _ in 1..m {
        a.push((0..n).map(|_| g.gen_range(-3..=3)).collect());
    }
    let b: Vec<i64> = a
        .iter()
        .map(|row| row.iter().zip(&x0).map(|(p, q)| p * q).sum())
        .collect();
    let c: Vec<Vec<Rational>> = (0..p)
        .map(|_| (0..n).map(|_| r(g.gen_range(-4..=4))).collect())
        .collect();
    MolpInstance::new(
        c,
        a.iter()
            .map(|row| row.iter().map(|&x| r(x)).collect())
            .collect(),
        b.iter().map(|&x| r(x)).collect(),
    )
    .expect("generated instance is valid")
}

pub fn simplex2() -> MolpInstance {
    MolpInstance::new(
        vec![vec![r(1), r(0), r(0)], vec![r(0), r(1), r(0)]],
        vec![vec![r(1), r(1), r(1)]],
        vec![r(1)],
    )
    .unwrap()
}
