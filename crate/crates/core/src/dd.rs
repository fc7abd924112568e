//! Double description engine over signed homogeneous coordinates.
//!
//! A [`DDPolytope`] keeps both representations of a (projective) polytope:
//! its vertex list and a half-space list, together with the incidence of
//! each vertex with the half-space boundaries. [`DDPolytope::cut`]
//! intersects with one more half-space by keeping the vertices on the
//! non-negative side and adding one crossing point per adjacent
//! (positive, negative) pair, using the combinatorial adjacency test.
//!
//! Nothing here assumes the vertices are visible: points at infinity are
//! ordinary vertices as long as every vertex lies strictly inside a common
//! witness half-space.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::lp::{self, LinearProgram, Relation};
use crate::projective::{HHalfspace, HPoint, PointClass, Sign};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DDPolytope {
    vertices: Vec<HPoint>,
    halfspaces: Vec<HHalfspace>,
    incidence: Vec<FixedBitSet>,
    witness: HHalfspace,
}

fn incidence_of(v: &HPoint, halfspaces: &[HHalfspace]) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(halfspaces.len());
    for (i, h) in halfspaces.iter().enumerate() {
        if h.eval(v).map(|x| x.is_zero()).unwrap_or(false) {
            bits.insert(i);
        }
    }
    bits
}

/// Finds a half-space with every point strictly inside it, by LP.
pub fn find_witness(points: &[HPoint]) -> Option<HHalfspace> {
    let first = points.first()?;
    let d = first.len();
    // h = h⁺ - h⁻ with h·v >= 1 for every v.
    let mut prog = LinearProgram::new(vec![Rational::zero(); 2 * d], vec![], vec![]).ok()?;
    for v in points {
        if v.len() != d {
            return None;
        }
        let mut row: Vec<Rational> = v
            .coords()
            .iter()
            .map(|x| Rational::from_integer(x.clone()))
            .collect();
        row.extend(v.coords().iter().map(|x| Rational::from_integer(-x)));
        prog = prog
            .with_inequality(row, Relation::Ge, Rational::one())
            .ok()?;
    }
    let res = lp::solve(&prog);
    let x = res.x?;
    let raw: Vec<Rational> = (0..d).map(|i| &x[i] - &x[i + d]).collect();
    HHalfspace::canonicalize(&raw).ok()
}

impl DDPolytope {
    /// Builds a polytope from both representations, searching for a witness
    /// half-space by LP.
    pub fn new(vertices: Vec<HPoint>, halfspaces: Vec<HHalfspace>) -> Result<Self> {
        let witness = find_witness(&vertices).ok_or(Error::NoWitness)?;
        Self::with_witness(vertices, halfspaces, witness)
    }

    /// Builds a polytope from both representations and a known witness.
    ///
    /// Vertices are deduplicated and sorted canonically. The caller is
    /// responsible for the vertex list being exactly the vertex set of the
    /// intersection of the half-spaces.
    pub fn with_witness(
        vertices: Vec<HPoint>,
        halfspaces: Vec<HHalfspace>,
        witness: HHalfspace,
    ) -> Result<Self> {
        let Some(first) = vertices.first() else {
            return Err(Error::EmptyResult);
        };
        let d = first.len();
        for v in &vertices {
            if v.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: v.len(),
                });
            }
            if witness.side(v)? != Sign::Positive {
                return Err(Error::NoWitness);
            }
        }
        let mut vertices = vertices;
        vertices.sort();
        vertices.dedup();
        for (hi, h) in halfspaces.iter().enumerate() {
            for (vi, v) in vertices.iter().enumerate() {
                if h.side(v)? == Sign::Negative {
                    return Err(Error::InfeasibleVertex {
                        vertex: vi,
                        halfspace: hi,
                    });
                }
            }
        }
        let incidence = vertices
            .iter()
            .map(|v| incidence_of(v, &halfspaces))
            .collect();
        Ok(Self {
            vertices,
            halfspaces,
            incidence,
            witness,
        })
    }

    pub fn vertices(&self) -> &[HPoint] {
        &self.vertices
    }

    pub fn halfspaces(&self) -> &[HHalfspace] {
        &self.halfspaces
    }

    pub fn incidence(&self, i: usize) -> &FixedBitSet {
        &self.incidence[i]
    }

    pub fn witness(&self) -> &HHalfspace {
        &self.witness
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Number of homogeneous coordinates (`d + 1`).
    pub fn coord_len(&self) -> usize {
        self.witness.len()
    }

    pub fn vertices_of_class(&self, class: PointClass) -> impl Iterator<Item = &HPoint> + '_ {
        self.vertices.iter().filter(move |v| v.classify() == class)
    }

    /// Euclidean coordinates of the visible vertices, in canonical order.
    pub fn visible_points(&self) -> Vec<Vec<Rational>> {
        self.vertices_of_class(PointClass::Visible)
            .map(|v| v.project().expect("visible"))
            .collect()
    }

    /// Combinatorial adjacency test on vertex indices.
    pub fn adjacent(&self, i: usize, j: usize) -> Result<bool> {
        let n = self.vertices.len();
        for k in [i, j] {
            if k >= n {
                return Err(Error::Index(k));
            }
        }
        if i == j {
            return Err(Error::Index(j));
        }
        Ok(self.adjacent_unchecked(i, j))
    }

    fn adjacent_unchecked(&self, i: usize, j: usize) -> bool {
        let mut common = self.incidence[i].clone();
        common.intersect_with(&self.incidence[j]);
        // An edge spans a 2-dimensional linear subspace, so at least d - 1
        // independent boundaries contain it.
        if common.count_ones(..) + 2 < self.coord_len() {
            return false;
        }
        !(0..self.vertices.len()).any(|z| z != i && z != j && common.is_subset(&self.incidence[z]))
    }

    /// Intersects with `h`, returning the new polytope.
    pub fn cut(&self, h: &HHalfspace) -> Result<DDPolytope> {
        if h.len() != self.coord_len() {
            return Err(Error::DimensionMismatch {
                expected: self.coord_len(),
                found: h.len(),
            });
        }
        let values: Vec<BigInt> = self
            .vertices
            .iter()
            .map(|v| h.eval(v))
            .collect::<Result<_>>()?;
        let new_index = self.halfspaces.len();
        let mut halfspaces = self.halfspaces.clone();
        halfspaces.push(h.clone());

        let grow = |bits: &FixedBitSet, on_boundary: bool| {
            let mut b = bits.clone();
            b.grow(new_index + 1);
            b.set(new_index, on_boundary);
            b
        };

        let mut kept: BTreeMap<HPoint, FixedBitSet> = BTreeMap::new();
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for (i, val) in values.iter().enumerate() {
            match Sign::of(val) {
                Sign::Positive => plus.push(i),
                Sign::Negative => minus.push(i),
                Sign::Zero => {}
            }
            if !val.is_negative() {
                kept.insert(
                    self.vertices[i].clone(),
                    grow(&self.incidence[i], val.is_zero()),
                );
            }
        }
        if kept.is_empty() {
            return Err(Error::EmptyResult);
        }

        for &u in &plus {
            for &v in &minus {
                if !self.adjacent_unchecked(u, v) {
                    continue;
                }
                let x = combine_on_boundary(
                    &self.vertices[u],
                    &values[u],
                    &self.vertices[v],
                    &values[v],
                )?;
                let mut common = self.incidence[u].clone();
                common.intersect_with(&self.incidence[v]);
                kept.entry(x).or_insert_with(|| grow(&common, true));
            }
        }

        let (vertices, incidence) = kept.into_iter().unzip();
        Ok(DDPolytope {
            vertices,
            halfspaces,
            incidence,
            witness: self.witness.clone(),
        })
    }
}

fn combine_on_boundary(u: &HPoint, hu: &BigInt, v: &HPoint, hv: &BigInt) -> Result<HPoint> {
    let raw = u
        .coords()
        .iter()
        .zip(v.coords())
        .map(|(a, b)| hu * b - hv * a)
        .collect();
    HPoint::from_integers(raw)
}

/// The point where the segment `[u, v]` meets the boundary of `h`, for `u`
/// strictly inside and `v` strictly outside.
pub fn crossing_point(u: &HPoint, v: &HPoint, h: &HHalfspace) -> Result<HPoint> {
    let hu = h.eval(u)?;
    let hv = h.eval(v)?;
    if !hu.is_positive() || !hv.is_negative() {
        return Err(Error::NotCrossing);
    }
    combine_on_boundary(u, &hu, v, &hv)
}

/// Intersects `seed` with every half-space in turn.
pub fn enumerate_from_halfspaces(
    halfspaces: &[HHalfspace],
    seed: DDPolytope,
) -> Result<DDPolytope> {
    halfspaces.iter().try_fold(seed, |p, h| p.cut(h))
}
