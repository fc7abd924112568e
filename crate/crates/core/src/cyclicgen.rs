//! Dual cyclic polytopes and their embedding as MOLP outcome sets.
//!
//! The `(d, k)` dual cyclic polytope is the polar of the cyclic polytope on
//! `k` points of the moment curve `t ↦ (t, t², ..., t^d)`. It has `k`
//! facets and the largest possible number of vertices for that facet
//! count. Embedded in the hyperplane `y_1 + ... + y_p = 1` of `p = d + 1`
//! dimensional objective space, every one of its vertices is an efficient
//! extreme outcome.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::dd::{self, DDPolytope};
use crate::linalg;
use crate::molp::MolpInstance;
use crate::projective::{HHalfspace, HPoint};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualCyclicSpec {
    pub d: usize,
    pub k: usize,
}

impl DualCyclicSpec {
    pub fn new(d: usize, k: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidSpec(format!("dimension {d} is below 2")));
        }
        if k <= d {
            return Err(Error::InvalidSpec(format!(
                "facet count {k} must exceed the dimension {d}"
            )));
        }
        Ok(Self { d, k })
    }
}

/// Vertex count of the `(d, k)` dual cyclic polytope:
/// `C(k - ⌊(d+1)/2⌋, k - d) + C(k - ⌊(d+2)/2⌋, k - d)`.
pub fn count_dual_cyclic_vertices(d: usize, k: usize) -> Result<BigUint> {
    let DualCyclicSpec { d, k } = DualCyclicSpec::new(d, k)?;
    let term = |shift: usize| binomial(BigUint::from(k - shift), BigUint::from(k - d));
    Ok(term(d.div_ceil(2)) + term(d / 2 + 1))
}

fn moment_points(d: usize, k: usize) -> Vec<Vec<Rational>> {
    (1..=k)
        .map(|t| {
            let t = BigInt::from(t);
            (1..=d as u32)
                .map(|e| Rational::from_integer(t.pow(e)))
                .collect()
        })
        .collect()
}

/// Builds the `(d, k)` dual cyclic polytope in Euclidean `d`-space.
///
/// The moment-curve points `t = 1..k` are centred at their centroid and the
/// polar `{y | w_t·y <= 1}` is enumerated from a box large enough to contain
/// it. The returned half-space list is exactly the `k` facets.
pub fn dual_cyclic_polytope(d: usize, k: usize) -> Result<DDPolytope> {
    let expected = count_dual_cyclic_vertices(d, k)?;
    let pts = moment_points(d, k);
    let kk = Rational::from_integer(BigInt::from(k));
    let centroid: Vec<Rational> = (0..d)
        .map(|j| pts.iter().map(|p| &p[j]).sum::<Rational>() / &kk)
        .collect();
    let centred: Vec<Vec<Rational>> = pts
        .iter()
        .map(|p| p.iter().zip(&centroid).map(|(a, c)| a - c).collect())
        .collect();
    let facets = centred
        .iter()
        .map(|w| HHalfspace::at_most(w, &Rational::one()))
        .collect::<Result<Vec<_>>>()?;

    // The centred points sum to zero, so every w_t·y lies in [-(k-1), 1] on
    // the polar. Inverting d independent rows bounds each coordinate.
    let rows = linalg::independent_rows(&centred, d);
    let basis: Vec<Vec<Rational>> = rows.iter().map(|&i| centred[i].clone()).collect();
    let inv = linalg::inverse(&basis)
        .ok_or_else(|| Error::Internal("moment curve points are affinely dependent".into()))?;
    let reach = Rational::from_integer(BigInt::from(k - 1));
    let bound = inv
        .iter()
        .map(|row| row.iter().map(|x| x.abs()).sum::<Rational>() * &reach)
        .max()
        .expect("d >= 2")
        + Rational::one();

    let seed = box_polytope(d, &bound)?;
    let enumerated = dd::enumerate_from_halfspaces(&facets, seed)?;
    let polytope = DDPolytope::with_witness(
        enumerated.vertices().to_vec(),
        facets,
        HHalfspace::visible(d),
    )?;

    if BigUint::from(polytope.num_vertices()) != expected {
        return Err(Error::Internal(format!(
            "({d}, {k}) dual cyclic polytope has {} vertices, expected {expected}",
            polytope.num_vertices()
        )));
    }
    for i in 0..k {
        let on_facet = (0..polytope.num_vertices())
            .filter(|&v| polytope.incidence(v).contains(i))
            .count();
        if on_facet < d {
            return Err(Error::Internal(format!("half-space {i} is not a facet")));
        }
    }
    Ok(polytope)
}

fn box_polytope(d: usize, bound: &Rational) -> Result<DDPolytope> {
    let corners = (0u64..1 << d)
        .map(|mask| {
            let c: Vec<Rational> = (0..d)
                .map(|j| {
                    if mask >> j & 1 == 1 {
                        bound.clone()
                    } else {
                        -bound
                    }
                })
                .collect();
            HPoint::lift(&c)
        })
        .collect();
    let mut halfspaces = Vec::with_capacity(2 * d);
    for j in 0..d {
        let mut e = vec![Rational::zero(); d];
        e[j] = Rational::one();
        halfspaces.push(HHalfspace::at_most(&e, bound)?);
        halfspaces.push(HHalfspace::at_least(&e, &-bound)?);
    }
    DDPolytope::with_witness(corners, halfspaces, HHalfspace::visible(d))
}

/// Embeds a bounded `d`-polytope into `y_1 + ... + y_{d+1} = 1` and returns
/// the instance over the standard simplex whose outcome set is its image.
///
/// The affine map is `y = (1/p, ..., 1/p) + Bz` with `B` having columns
/// `e_j - e_p`, so `C` has one column per vertex.
pub fn embed_as_molp(polytope: &DDPolytope) -> Result<MolpInstance> {
    let d = polytope.coord_len() - 1;
    if d < 2 {
        return Err(Error::InvalidSpec(format!(
            "cannot embed a polytope of dimension {d}"
        )));
    }
    let p = d + 1;
    let base = Rational::new(BigInt::one(), BigInt::from(p));
    let mut columns = Vec::with_capacity(polytope.num_vertices());
    for v in polytope.vertices() {
        let z = v
            .project()
            .map_err(|_| Error::InvalidSpec("polytope must be bounded".into()))?;
        let mut y: Vec<Rational> = z.iter().map(|zj| &base + zj).collect();
        y.push(&base - z.iter().sum::<Rational>());
        columns.push(y);
    }
    let n = columns.len();
    let c = (0..p)
        .map(|i| columns.iter().map(|col| col[i].clone()).collect())
        .collect();
    MolpInstance::new(c, vec![vec![Rational::one(); n]], vec![Rational::one()])
}

/// The MOLP instance for the `(d, k)` dual cyclic polytope.
pub fn dual_cyclic_instance(d: usize, k: usize) -> Result<MolpInstance> {
    embed_as_molp(&dual_cyclic_polytope(d, k)?)
}
