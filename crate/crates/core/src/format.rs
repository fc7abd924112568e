//! Instance and result files.
//!
//! Both are TOML documents. Every number that is not a count is an exact
//! rational written as a string, `"a"` or `"a/b"`; decimals are rejected.
//!
//! ```toml
//! p = 2
//! n = 3
//! m = 1
//! C = [["1", "0", "0"], ["0", "1", "0"]]
//! A = [["1", "1", "1"]]
//! b = ["1"]
//! ```

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::molp::MolpInstance;
use crate::outer::RunStats;
use crate::{Error, Rational, Result};

/// Parses `"a"` or `"a/b"` with an optional leading minus sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let int = |t: &str, signed: bool| -> Result<BigInt> {
        let digits = if signed {
            t.strip_prefix('-').unwrap_or(t)
        } else {
            t
        };
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        BigInt::from_str(t).map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(int(s, true)?)),
        Some((num, den)) => {
            let den = int(den, false)?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(int(num, true)?, den))
        }
    }
}

/// Canonical text form of a rational.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn format_vector(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn parse_vector(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

fn parse_matrix(
    name: &str,
    m: &[Vec<String>],
    rows: usize,
    cols: usize,
) -> Result<Vec<Vec<Rational>>> {
    if m.len() != rows {
        return Err(Error::Parse(format!(
            "{name} has {} rows, expected {rows}",
            m.len()
        )));
    }
    m.iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != cols {
                return Err(Error::Parse(format!(
                    "row {i} of {name} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            parse_vector(row)
        })
        .collect()
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceDoc {
    p: usize,
    n: usize,
    m: usize,
    #[serde(rename = "C")]
    c: Vec<Vec<String>>,
    #[serde(rename = "A")]
    a: Vec<Vec<String>>,
    b: Vec<String>,
}

pub fn instance_to_string(inst: &MolpInstance) -> String {
    let doc = InstanceDoc {
        p: inst.num_objectives(),
        n: inst.num_vars(),
        m: inst.num_constraints(),
        c: inst.objectives().iter().map(|r| format_vector(r)).collect(),
        a: inst
            .constraint_matrix()
            .iter()
            .map(|r| format_vector(r))
            .collect(),
        b: format_vector(inst.rhs()),
    };
    toml::to_string(&doc).expect("instance serializes")
}

/// Parses and validates an instance document.
///
/// Syntax and shape problems are [`Error::Parse`]; an empty or unbounded
/// feasible set is reported by [`MolpInstance::new`].
pub fn parse_instance(text: &str) -> Result<MolpInstance> {
    let doc: InstanceDoc =
        toml::from_str(text).map_err(|e| Error::Parse(e.message().to_string()))?;
    let c = parse_matrix("C", &doc.c, doc.p, doc.n)?;
    let a = parse_matrix("A", &doc.a, doc.m, doc.n)?;
    if doc.b.len() != doc.m {
        return Err(Error::Parse(format!(
            "b has {} entries, expected {}",
            doc.b.len(),
            doc.m
        )));
    }
    let b = parse_vector(&doc.b)?;
    match MolpInstance::new(c, a, b) {
        Err(Error::InvalidInstance(msg)) => Err(Error::Parse(msg)),
        other => other,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsDoc {
    pub iterations: usize,
    pub lp_solves: u64,
    pub vertex_counts: Vec<usize>,
    pub final_vertex_count: usize,
    pub final_non_efficient_count: usize,
    pub wall_time_ms: f64,
}

impl From<&RunStats> for StatsDoc {
    fn from(s: &RunStats) -> Self {
        Self {
            iterations: s.iterations,
            lp_solves: s.lp_solves,
            vertex_counts: s.vertex_counts.clone(),
            final_vertex_count: s.final_vertex_count,
            final_non_efficient_count: s.final_non_efficient_count,
            wall_time_ms: s.wall_time.as_secs_f64() * 1000.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDoc {
    pub algorithm: String,
    pub efficient_extreme_outcomes: Vec<Vec<String>>,
    pub stats: StatsDoc,
}

impl ResultDoc {
    pub fn new(algorithm: &str, outcomes: &[Vec<Rational>], stats: &RunStats) -> Self {
        let mut sorted = outcomes.to_vec();
        sorted.sort();
        Self {
            algorithm: algorithm.to_string(),
            efficient_extreme_outcomes: sorted.iter().map(|v| format_vector(v)).collect(),
            stats: stats.into(),
        }
    }

    pub fn outcomes(&self) -> Result<Vec<Vec<Rational>>> {
        self.efficient_extreme_outcomes
            .iter()
            .map(|v| parse_vector(v))
            .collect()
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("result serializes")
    }

    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(e.message().to_string()))
    }
}

pub fn stats_to_string(stats: &RunStats) -> String {
    toml::to_string(&StatsDoc::from(stats)).expect("stats serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{frac, rat, rvec};
    use proptest::prelude::*;

    const SIMPLEX2: &str = r#"
p = 2
n = 3
m = 1
C = [["1", "0", "0"], ["0", "1", "0"]]
A = [["1", "1", "1"]]
b = ["1"]
"#;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational("42").unwrap(), rat(42));
        for bad in [
            "1.5", "", "1/0", "+2", "a", "1/-2", "--1", "1/", "/2", "1e3",
        ] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
        assert_eq!(format_rational(&frac(6, -4)), "-3/2");
        assert_eq!(format_rational(&rat(0)), "0");
    }

    #[test]
    fn parses_simplex2() {
        let inst = parse_instance(SIMPLEX2).unwrap();
        assert_eq!(inst.num_objectives(), 2);
        assert_eq!(inst.objectives()[1], rvec(&[0, 1, 0]));
        let text = instance_to_string(&inst);
        assert_eq!(parse_instance(&text).unwrap(), inst);
        assert_eq!(instance_to_string(&parse_instance(&text).unwrap()), text);
    }

    #[test]
    fn shape_errors() {
        let wrong_b = SIMPLEX2.replace(r#"b = ["1"]"#, r#"b = ["1", "2"]"#);
        assert!(matches!(parse_instance(&wrong_b), Err(Error::Parse(_))));
        let decimal = SIMPLEX2.replace(r#"b = ["1"]"#, r#"b = ["1.5"]"#);
        assert!(matches!(parse_instance(&decimal), Err(Error::Parse(_))));
        let missing = SIMPLEX2.replace("m = 1\n", "");
        assert!(matches!(parse_instance(&missing), Err(Error::Parse(_))));
    }

    #[test]
    fn invalid_feasible_sets() {
        let infeasible = SIMPLEX2.replace(r#"b = ["1"]"#, r#"b = ["-1"]"#);
        assert_eq!(parse_instance(&infeasible), Err(Error::InfeasibleInstance));
        let unbounded = SIMPLEX2.replace(r#"A = [["1", "1", "1"]]"#, r#"A = [["1", "-1", "0"]]"#);
        assert_eq!(parse_instance(&unbounded), Err(Error::UnboundedInstance));
    }

    #[test]
    fn result_document() {
        let stats = RunStats {
            iterations: 1,
            vertex_counts: vec![4],
            ..RunStats::default()
        };
        let doc = ResultDoc::new("projective", &[rvec(&[1, 0]), rvec(&[0, 1])], &stats);
        assert_eq!(
            doc.efficient_extreme_outcomes,
            vec![
                vec!["0".to_string(), "1".into()],
                vec!["1".to_string(), "0".into()]
            ]
        );
        let back = ResultDoc::parse(&doc.to_toml()).unwrap();
        assert_eq!(back, doc);
    }

    proptest! {
        #[test]
        fn instance_roundtrip(
            p in 1usize..4,
            n in 1usize..5,
            entries in prop::collection::vec((-50i64..50, 1i64..9), 32),
        ) {
            let mut it = entries.iter().cycle().map(|&(a, b)| frac(a, b));
            let c: Vec<Vec<Rational>> = (0..p).map(|_| (0..n).map(|_| it.next().unwrap()).collect()).collect();
            let a = vec![vec![rat(1); n]];
            let inst = MolpInstance::new(c, a, vec![frac(7, 3)]).unwrap();
            let text = instance_to_string(&inst);
            prop_assert_eq!(parse_instance(&text).unwrap(), inst);
        }
    }
}
