//! Exact enumeration of the efficient extreme outcomes of a multiobjective
//! linear program.
//!
//! Two outer approximation drivers are provided. [`outer::run_euclidean`]
//! whittles a simplex down to the bounded box-truncated outcome polytope,
//! while [`outer::run_projective`] works in oriented projective space and
//! approximates the unbounded dominated set directly, closing it off with
//! `p` vertices at infinity. Both rest on an exact rational simplex
//! ([`lp`]) and a double description engine ([`dd`]) over signed
//! homogeneous coordinates ([`projective`]).
//!
//! [`oracle`] and [`cyclicgen`] supply brute-force ground truth and
//! worst-case instances; [`verify`] ties everything together.

pub mod cyclicgen;
pub mod dd;
mod error;
pub mod format;
mod linalg;
pub mod lp;
pub mod molp;
pub mod oracle;
pub mod outer;
pub mod projective;
pub mod verify;

pub use error::{Error, Result};
pub use projective::{HHalfspace, HPoint, PointClass, Rational, Sign};

use num_bigint::BigInt;

/// Shorthand for an integral rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Converts a slice of integers into rationals.
pub fn rvec(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| rat(x)).collect()
}
