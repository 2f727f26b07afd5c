//! North-east lattice paths, the two diagonal segments `PQ` and `P'Q'`, and
//! the path-counting certificate for
//!
//! ```text
//! Σ_{j+k=r} C(n-2j, i-j) C(n-2k, i-k)  >=  Σ_{j+k=r} C(n-2j, i-1-j) C(n-2k, i+1-k)
//! ```
//!
//! Both sides are double counted over paths from `O = (0,0)` to
//! `D = (2n-2i-r, 2i-r)`, each path weighted by the number of lattice points
//! it shares with `PQ` (left side) or `P'Q'` (right side). This reproduces
//! the binomial sums only while `D` is not above `Q`, i.e. `r >= i`; for
//! `r < i` the segment `PQ` also contains points `A` with `j > r`, whose path
//! count to `D` is a nonzero binomial with negative `k`.

mod ascii;
mod certificate;
mod config;

pub use ascii::render_grid;
pub use certificate::{certificate, BoundaryTerm, Certificate};
pub use config::{
    claim1_check, claim2_check, claim2_check_all, lhs_by_formula, lhs_by_paths, lhs_by_point_products,
    rhs_by_formula, rhs_by_paths, rhs_by_point_products, segment_intersections, Claim1Report, Claim2Report,
    DiagonalSegment, SegmentConfig,
};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::binomial;
use crate::error::{Error, Result};

/// Default upper bound on the number of paths an enumeration may visit.
pub const DEFAULT_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    /// Componentwise order on `Z^2`.
    pub fn le(&self, other: &LatticePoint) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Unit steps; `E < N` fixes the enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    E,
    N,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub start: LatticePoint,
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: LatticePoint, steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    pub fn end(&self) -> LatticePoint {
        let east = self.steps.iter().filter(|s| **s == Step::E).count() as i64;
        let north = self.steps.len() as i64 - east;
        LatticePoint::new(self.start.x + east, self.start.y + north)
    }

    /// All visited lattice points, start and end included.
    pub fn vertices(&self) -> Vec<LatticePoint> {
        let mut p = self.start;
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(p);
        for s in &self.steps {
            match s {
                Step::E => p.x += 1,
                Step::N => p.y += 1,
            }
            out.push(p);
        }
        out
    }

    /// Parses `"ENNE"` starting at `start`.
    pub fn parse(start: LatticePoint, steps: &str) -> Result<Self> {
        let steps = steps
            .chars()
            .enumerate()
            .map(|(col, c)| match c {
                'E' | 'e' => Ok(Step::E),
                'N' | 'n' => Ok(Step::N),
                _ => Err(Error::Parse {
                    column: col + 1,
                    message: format!("unexpected step {c:?}, expected E or N"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticePath { start, steps })
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::E => "E",
                Step::N => "N",
            })?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LatticePath::parse(LatticePoint::new(0, 0), s)
    }
}

/// `C(Δx + Δy, Δy)` when both displacements are nonnegative, else 0.
pub fn count_paths(a: LatticePoint, b: LatticePoint) -> BigInt {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    if dx < 0 || dy < 0 {
        return BigInt::from(0);
    }
    binomial(dx + dy, dy)
}

/// Lexicographic (`E < N`) stream of all paths between two points.
#[derive(Debug, Clone)]
pub struct PathIter {
    start: LatticePoint,
    next: Option<Vec<Step>>,
}

impl Iterator for PathIter {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // next permutation: rightmost E followed by an N
        if let Some(t) = (0..succ.len().saturating_sub(1))
            .rev()
            .find(|&t| succ[t] == Step::E && succ[t + 1] == Step::N)
        {
            let u = (t + 1..succ.len()).rev().find(|&u| succ[u] == Step::N).expect("N after t");
            succ.swap(t, u);
            succ[t + 1..].reverse();
            self.next = Some(succ);
        }
        Some(LatticePath::new(self.start, current))
    }
}

/// Every path from `a` to `b` exactly once. Unreachable targets give an
/// empty stream; more than `cap` paths is an error carrying the exact count.
pub fn enumerate_paths(a: LatticePoint, b: LatticePoint, cap: u64) -> Result<PathIter> {
    let count = count_paths(a, b);
    if count.to_u64().is_none_or(|c| c > cap) {
        return Err(Error::CapExceeded { count, cap });
    }
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let next = (dx >= 0 && dy >= 0).then(|| {
        let mut steps = vec![Step::E; dx as usize];
        steps.extend(std::iter::repeat_n(Step::N, dy as usize));
        steps
    });
    Ok(PathIter { start: a, next })
}

/// 180° rotation about the centre of the rectangle spanned by `r` and
/// `r_prime`: reverses the step sequence of a path from `r` to `r_prime`.
pub fn involution(path: &LatticePath, r: LatticePoint, r_prime: LatticePoint) -> Result<LatticePath> {
    if path.start != r || path.end() != r_prime || !r.le(&r_prime) {
        return Err(Error::EndpointMismatch {
            expected_start: r.to_string(),
            expected_end: r_prime.to_string(),
        });
    }
    let mut steps = path.steps.clone();
    steps.reverse();
    Ok(LatticePath::new(r, steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn words(a: LatticePoint, b: LatticePoint) -> Vec<String> {
        enumerate_paths(a, b, DEFAULT_CAP).unwrap().map(|p| p.to_string()).collect()
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_paths(pt(0, 0), pt(6, 2)), BigInt::from(28));
        assert_eq!(count_paths(pt(2, 0), pt(2, 0)), BigInt::from(1));
        assert_eq!(count_paths(pt(0, 0), pt(-1, 0)), BigInt::from(0));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(words(pt(0, 0), pt(1, 1)), vec!["EN", "NE"]);
        assert_eq!(words(pt(0, 0), pt(0, 3)), vec!["NNN"]);
        assert_eq!(words(pt(2, 0), pt(2, 0)), vec![""]);
        assert!(words(pt(0, 0), pt(-1, 2)).is_empty());
        let all = words(pt(0, 0), pt(6, 2));
        assert_eq!(all.len(), 28);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), 28);
    }

    #[test]
    fn enumeration_matches_count() {
        for dx in 0..7 {
            for dy in 0..7 {
                let n = enumerate_paths(pt(1, -2), pt(1 + dx, dy - 2), DEFAULT_CAP).unwrap().count();
                assert_eq!(BigInt::from(n), count_paths(pt(1, -2), pt(1 + dx, dy - 2)));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        match enumerate_paths(pt(0, 0), pt(10, 10), 1000) {
            Err(Error::CapExceeded { count, cap }) => {
                assert_eq!(count, BigInt::from(184756));
                assert_eq!(cap, 1000);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn involution_reverses_steps() {
        let p = LatticePath::parse(pt(2, 0), "EEN").unwrap();
        let q = involution(&p, pt(2, 0), pt(4, 1)).unwrap();
        assert_eq!(q.to_string(), "NEE");
        assert_eq!(involution(&q, pt(2, 0), pt(4, 1)).unwrap(), p);
        // vertices are rotated about the rectangle centre
        let rotated: Vec<_> = p.vertices().iter().map(|v| pt(6 - v.x, 1 - v.y)).collect();
        let mut image = q.vertices();
        image.reverse();
        assert_eq!(rotated, image);
        assert!(involution(&p, pt(2, 0), pt(5, 1)).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "ENX".parse::<LatticePath>(),
            Err(Error::Parse { column: 3, .. })
        ));
        assert_eq!("NE".parse::<LatticePath>().unwrap().end(), pt(1, 1));
    }
}
