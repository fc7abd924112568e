//! Random cut problems checked against the naive enumeration.

use std::collections::BTreeSet;

use molp_core::dd::DDPolytope;
use molp_core::{Error, HHalfspace, HPoint, Rational};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{naive_vertices, r};

pub fn set(p: &DDPolytope) -> BTreeSet<HPoint> {
    p.vertices().iter().cloned().collect()
}

pub fn random_halfspace(g: &mut ChaCha8Rng, dim: usize, nonneg: bool) -> HHalfspace {
    loop {
        let a: Vec<Rational> = (0..dim)
            .map(|_| {
                r(if nonneg {
                    g.gen_range(0..=3)
                } else {
                    g.gen_range(-3..=3)
                })
            })
            .collect();
        if a.iter().all(|x| *x == r(0)) {
            continue;
        }
        let c = r(g.gen_range(-2..=6));
        return HHalfspace::at_most(&a, &c).unwrap();
    }
}

pub fn check_incidence(p: &DDPolytope) {
    for (i, v) in p.vertices().iter().enumerate() {
        for (j, h) in p.halfspaces().iter().enumerate() {
            let tight = h.eval(v).unwrap() == BigInt::from(0);
            assert_eq!(
                p.incidence(i).contains(j),
                tight,
                "vertex {i}, half-space {j}"
            );
        }
    }
}

/// A Euclidean polytope `{x >= 0, Σx <= s}` with a few extra random cuts,
/// built entirely by the naive oracle. `None` if it has too many vertices.
pub fn euclidean_start(g: &mut ChaCha8Rng, dim: usize) -> Option<DDPolytope> {
    let mut hs = Vec::new();
    for i in 0..dim {
        let mut e = vec![r(0); dim];
        e[i] = r(1);
        hs.push(HHalfspace::at_least(&e, &r(0)).unwrap());
    }
    hs.push(HHalfspace::at_most(&vec![r(1); dim], &r(g.gen_range(2..=6))).unwrap());
    for _ in 0..g.gen_range(0..=2) {
        let mut h = random_halfspace(g, dim, false);
        // Keep the origin strictly inside.
        if h.coeffs()[dim] <= BigInt::from(0) {
            h = HHalfspace::at_most(&vec![r(-1); dim], &r(1)).unwrap();
        }
        hs.push(h);
    }
    let verts = naive_vertices(&hs, &HHalfspace::visible(dim));
    if verts.len() > 8 {
        return None;
    }
    Some(DDPolytope::new(verts.into_iter().collect(), hs).unwrap())
}

/// `{y <= y_max}` closed off at infinity by the points `-e_i`.
pub fn projective_start(g: &mut ChaCha8Rng, p: usize) -> DDPolytope {
    let ymax: Vec<Rational> = (0..p).map(|_| r(g.gen_range(0..=4))).collect();
    let mut verts = vec![HPoint::lift(&ymax)];
    let mut hs = Vec::new();
    for i in 0..p {
        let mut e = vec![r(0); p];
        e[i] = r(-1);
        verts.push(HPoint::at_infinity(&e).unwrap());
        e[i] = r(1);
        hs.push(HHalfspace::at_most(&e, &ymax[i]).unwrap());
    }
    hs.push(HHalfspace::visible(p));
    DDPolytope::new(verts, hs).unwrap()
}

/// Cuts `poly` by `h` and compares against the naive oracle on the combined
/// half-space list. Returns the cut polytope when nonempty.
pub fn compare_cut(poly: &DDPolytope, h: &HHalfspace) -> Option<DDPolytope> {
    let mut hs = poly.halfspaces().to_vec();
    hs.push(h.clone());
    let expect = naive_vertices(&hs, poly.witness());
    match poly.cut(h) {
        Ok(cut) => {
            assert_eq!(set(&cut), expect, "cut by {h:?}");
            check_incidence(&cut);
            Some(cut)
        }
        Err(Error::EmptyResult) => {
            assert!(
                expect.is_empty(),
                "cut by {h:?} reported empty, oracle found {expect:?}"
            );
            None
        }
        Err(e) => panic!("cut by {h:?} failed: {e}"),
    }
}
