//! Oriented projective geometry over exact rationals.
//!
//! A point of oriented projective `d`-space is a nonzero `(d+1)`-tuple up to
//! *positive* scaling. The sign of the last coordinate splits the space into
//! visible points (`> 0`), points at infinity (`= 0`) and invisible points
//! (`< 0`). Half-spaces `{x | h·x >= 0}` use the same representation.
//!
//! Both [`HPoint`] and [`HHalfspace`] are stored in canonical form: coprime
//! integers with the original sign pattern. Structural equality is therefore
//! geometric equality.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// The exact scalar used throughout the crate.
pub type Rational = BigRational;

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<T: Signed>(x: &T) -> Self {
        if x.is_positive() {
            Sign::Positive
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

/// Where a point sits relative to the plane at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointClass {
    Visible,
    Infinite,
    Invisible,
}

/// Scales a rational vector by the unique positive rational that makes it a
/// coprime integer vector.
fn canonical_integers(raw: &[Rational]) -> Result<Vec<BigInt>> {
    let lcm = raw.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = raw.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    reduce_integers(ints)
}

fn reduce_integers(mut ints: Vec<BigInt>) -> Result<Vec<BigInt>> {
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return Err(Error::InvalidCoordinates);
    }
    if !g.is_one() {
        for x in &mut ints {
            *x /= &g;
        }
    }
    Ok(ints)
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// A point of oriented projective space in signed homogeneous coordinates.
///
/// Ordering is lexicographic on the canonical coordinates, which is the
/// canonical vertex order used by the double description engine.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HPoint {
    coords: Vec<BigInt>,
}

impl HPoint {
    /// Canonical representative of the ray through `raw`.
    pub fn canonicalize(raw: &[Rational]) -> Result<Self> {
        Ok(Self {
            coords: canonical_integers(raw)?,
        })
    }

    pub fn from_integers(raw: Vec<BigInt>) -> Result<Self> {
        Ok(Self {
            coords: reduce_integers(raw)?,
        })
    }

    pub fn from_i64(raw: &[i64]) -> Result<Self> {
        Self::from_integers(raw.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Visible copy of the Euclidean point `e`.
    pub fn lift(e: &[Rational]) -> Self {
        let mut raw = e.to_vec();
        raw.push(Rational::one());
        Self::canonicalize(&raw).expect("last coordinate is nonzero")
    }

    /// The point at infinity in direction `r`.
    pub fn at_infinity(r: &[Rational]) -> Result<Self> {
        let mut raw = r.to_vec();
        raw.push(Rational::zero());
        Self::canonicalize(&raw)
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.coords
            .iter()
            .map(|x| Rational::from_integer(x.clone()))
            .collect()
    }

    /// Number of homogeneous coordinates, `d + 1`.
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Dimension `d` of the ambient projective space.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn classify(&self) -> PointClass {
        match Sign::of(self.coords.last().expect("nonempty")) {
            Sign::Positive => PointClass::Visible,
            Sign::Zero => PointClass::Infinite,
            Sign::Negative => PointClass::Invisible,
        }
    }

    pub fn is_visible(&self) -> bool {
        self.classify() == PointClass::Visible
    }

    /// Euclidean coordinates of a visible point.
    pub fn project(&self) -> Result<Vec<Rational>> {
        let (last, head) = self.coords.split_last().expect("nonempty");
        if !last.is_positive() {
            return Err(Error::NotVisible);
        }
        Ok(head
            .iter()
            .map(|x| Rational::new(x.clone(), last.clone()))
            .collect())
    }

    pub fn opposite(&self) -> Self {
        Self {
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }

    /// Canonical form of `alpha*u + beta*v` for non-negative weights.
    pub fn combine(u: &HPoint, v: &HPoint, alpha: &Rational, beta: &Rational) -> Result<Self> {
        check_len(u.len(), v.len())?;
        if alpha.is_negative() || beta.is_negative() || (alpha.is_zero() && beta.is_zero()) {
            return Err(Error::InvalidCombination);
        }
        if *u == v.opposite() {
            return Err(Error::OppositePoints);
        }
        let raw: Vec<Rational> = u
            .coords
            .iter()
            .zip(&v.coords)
            .map(|(a, b)| {
                alpha * Rational::from_integer(a.clone()) + beta * Rational::from_integer(b.clone())
            })
            .collect();
        Self::canonicalize(&raw)
    }
}

impl fmt::Debug for HPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HPoint{}", DisplayInts(&self.coords))
    }
}

impl fmt::Display for HPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", DisplayInts(&self.coords))
    }
}

/// A projective half-space `{x | h·x >= 0}`; its boundary is the hyperplane
/// `h·x = 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HHalfspace {
    coeffs: Vec<BigInt>,
}

impl HHalfspace {
    pub fn canonicalize(raw: &[Rational]) -> Result<Self> {
        Ok(Self {
            coeffs: canonical_integers(raw)?,
        })
    }

    pub fn from_integers(raw: Vec<BigInt>) -> Result<Self> {
        Ok(Self {
            coeffs: reduce_integers(raw)?,
        })
    }

    pub fn from_i64(raw: &[i64]) -> Result<Self> {
        Self::from_integers(raw.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// `{y | a·y <= c}` lifted to homogeneous coefficients `(-a, c)`.
    pub fn at_most(a: &[Rational], c: &Rational) -> Result<Self> {
        let mut raw: Vec<Rational> = a.iter().map(|x| -x).collect();
        raw.push(c.clone());
        Self::canonicalize(&raw)
    }

    /// `{y | a·y >= c}` lifted to homogeneous coefficients `(a, -c)`.
    pub fn at_least(a: &[Rational], c: &Rational) -> Result<Self> {
        let mut raw = a.to_vec();
        raw.push(-c);
        Self::canonicalize(&raw)
    }

    /// The visible half-space `(0, ..., 0, 1)` of projective `d`-space.
    pub fn visible(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::one();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn opposite(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }

    /// Exact `h·p` on canonical representatives.
    pub fn eval(&self, p: &HPoint) -> Result<BigInt> {
        check_len(self.len(), p.len())?;
        Ok(dot(&self.coeffs, &p.coords))
    }

    pub fn side(&self, p: &HPoint) -> Result<Sign> {
        Ok(Sign::of(&self.eval(p)?))
    }

    pub fn contains(&self, p: &HPoint) -> Result<bool> {
        Ok(self.side(p)? != Sign::Negative)
    }
}

impl fmt::Debug for HHalfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HHalfspace{}", DisplayInts(&self.coeffs))
    }
}

impl fmt::Display for HHalfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", DisplayInts(&self.coeffs))
    }
}

struct DisplayInts<'a>(&'a [BigInt]);

impl fmt::Display for DisplayInts<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Free-function form of [`HHalfspace::side`].
pub fn side(h: &HHalfspace, p: &HPoint) -> Result<Sign> {
    h.side(p)
}
