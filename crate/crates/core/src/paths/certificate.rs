use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use serde_with::{serde_as, DisplayFromStr};

use super::config::{lhs_by_formula, rhs_by_formula, segment_intersections, DiagonalSegment, SegmentConfig};
use super::{count_paths, enumerate_paths, LatticePoint};
use crate::error::{Error, Result};

/// One summand of the second sum: paths whose first `PQ` point is `r` and
/// whose last `P'Q'` point is `r_prime`, weighted by the `PQ` points they
/// visit after `r_prime`.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryTerm {
    pub r: LatticePoint,
    pub r_prime: LatticePoint,
    #[serde_as(as = "DisplayFromStr")]
    pub count: BigInt,
    /// Number of paths in the class with a nonzero weight.
    pub paths: u64,
    /// `count` recomputed as `#(O→R first hitting PQ at R) · #(R→R') · S`,
    /// with `S` the weighted count of tails `R'→D` leaving `P'Q'` for good.
    #[serde_as(as = "DisplayFromStr")]
    pub factored: BigInt,
}

#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub config: SegmentConfig,
    #[serde_as(as = "DisplayFromStr")]
    pub lhs: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub rhs: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub lhs_paths: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub rhs_paths: BigInt,
    /// `Σ #{α ∩ PQ}` over paths avoiding `P'Q'`.
    #[serde_as(as = "DisplayFromStr")]
    pub avoiding_term: BigInt,
    /// Paths avoiding `P'Q'` that meet `PQ`.
    pub avoiding_paths: u64,
    pub boundary_terms: Vec<BoundaryTerm>,
    #[serde_as(as = "DisplayFromStr")]
    pub total: BigInt,
    pub contributing_paths: u64,
    pub total_paths: u64,
}

/// Paths `a→b` whose only vertex on `s` is `b` (if `b ∈ s`) or which avoid
/// `s` altogether.
fn first_hit_count(a: LatticePoint, b: LatticePoint, s: &DiagonalSegment) -> BigInt {
    if !a.le(&b) {
        return BigInt::zero();
    }
    let (w, h) = ((b.x - a.x) as usize, (b.y - a.y) as usize);
    let mut grid = vec![vec![BigInt::zero(); w + 1]; h + 1];
    for dy in 0..=h {
        for dx in 0..=w {
            let mut v = if dx == 0 && dy == 0 { BigInt::from(1) } else { BigInt::zero() };
            // extend only from predecessors not on s
            for (px, py) in [(dx.wrapping_sub(1), dy), (dx, dy.wrapping_sub(1))] {
                if px <= w && py <= h {
                    let prev = LatticePoint::new(a.x + px as i64, a.y + py as i64);
                    if !s.contains(prev) {
                        v += &grid[py][px];
                    }
                }
            }
            grid[dy][dx] = v;
        }
    }
    grid[h][w].clone()
}

/// `Σ #{β ∩ pq}` over paths `β: a→d` with no vertex on `ppqq` after `a`.
fn tail_weight(a: LatticePoint, d: LatticePoint, pq: &DiagonalSegment, ppqq: &DiagonalSegment) -> BigInt {
    if !a.le(&d) {
        return BigInt::zero();
    }
    let (w, h) = ((d.x - a.x) as usize, (d.y - a.y) as usize);
    // (number of admissible prefixes, total PQ hits over them)
    let mut grid = vec![vec![(BigInt::zero(), BigInt::zero()); w + 1]; h + 1];
    for dy in 0..=h {
        for dx in 0..=w {
            let p = LatticePoint::new(a.x + dx as i64, a.y + dy as i64);
            let (cnt, mut wt) = if dx == 0 && dy == 0 {
                (BigInt::from(1), BigInt::zero())
            } else if ppqq.contains(p) {
                (BigInt::zero(), BigInt::zero())
            } else {
                let mut acc = (BigInt::zero(), BigInt::zero());
                if dx > 0 {
                    acc.0 += &grid[dy][dx - 1].0;
                    acc.1 += &grid[dy][dx - 1].1;
                }
                if dy > 0 {
                    acc.0 += &grid[dy - 1][dx].0;
                    acc.1 += &grid[dy - 1][dx].1;
                }
                acc
            };
            if pq.contains(p) {
                wt += &cnt;
            }
            grid[dy][dx] = (cnt, wt);
        }
    }
    grid[h][w].1.clone()
}

/// Splits `LHS - RHS` into the avoiding sum and the boundary sums by
/// enumerating every path `O→D`, then compares with the binomial formula.
///
/// Each path meeting `P'Q'` factors uniquely as `α₁α₂α₃` at its first `PQ`
/// point `R` and last `P'Q'` point `R'`. Fails with
/// [`Error::DecompositionMismatch`] when the itemized total differs from
/// `lhs_by_formula - rhs_by_formula`, which happens for `r < i` because the
/// path sums then include points of `PQ` outside the binomial range.
pub fn certificate(cfg: &SegmentConfig, cap: u64) -> Result<Certificate> {
    let (pq, ppqq) = (cfg.pq(), cfg.ppqq());
    let mut lhs_paths = 0u64;
    let mut rhs_paths = 0u64;
    let mut avoiding_term = 0u64;
    let mut avoiding_paths = 0u64;
    let mut contributing_paths = 0u64;
    let mut total_paths = 0u64;
    let mut boundary: BTreeMap<(LatticePoint, LatticePoint), (u64, u64)> = BTreeMap::new();

    for path in enumerate_paths(cfg.o(), cfg.d(), cap)? {
        total_paths += 1;
        let verts = path.vertices();
        let on_pq = segment_intersections(&path, &pq);
        let on_ppqq = segment_intersections(&path, &ppqq);
        lhs_paths += on_pq.len() as u64;
        rhs_paths += on_ppqq.len() as u64;
        let Some(&r_prime) = on_ppqq.last() else {
            avoiding_term += on_pq.len() as u64;
            if !on_pq.is_empty() {
                avoiding_paths += 1;
                contributing_paths += 1;
            }
            continue;
        };
        let r = match on_pq.first() {
            Some(&r) if r.le(&r_prime) => r,
            _ => {
                return Err(Error::ClaimViolation(format!(
                    "path {path} meets P'Q' without an earlier point on PQ"
                )))
            }
        };
        let at = verts.iter().position(|v| *v == r_prime).expect("R' is a vertex");
        let weight = verts[at..].iter().filter(|v| pq.contains(**v)).count() as u64;
        if weight > 0 {
            let e = boundary.entry((r, r_prime)).or_default();
            e.0 += weight;
            e.1 += 1;
            contributing_paths += 1;
        }
    }

    let boundary_terms: Vec<BoundaryTerm> = boundary
        .into_iter()
        .map(|((r, r_prime), (count, paths))| {
            let factored = first_hit_count(cfg.o(), r, &pq)
                * count_paths(r, r_prime)
                * tail_weight(r_prime, cfg.d(), &pq, &ppqq);
            BoundaryTerm { r, r_prime, count: BigInt::from(count), paths, factored }
        })
        .collect();
    for t in &boundary_terms {
        if t.count != t.factored {
            return Err(Error::Internal(format!(
                "boundary term R={} R'={} enumerates to {} but factors to {}",
                t.r, t.r_prime, t.count, t.factored
            )));
        }
    }

    let total: BigInt =
        BigInt::from(avoiding_term) + boundary_terms.iter().map(|t| &t.count).sum::<BigInt>();
    let (lhs_paths, rhs_paths) = (BigInt::from(lhs_paths), BigInt::from(rhs_paths));
    if total != &lhs_paths - &rhs_paths {
        return Err(Error::Internal(format!(
            "itemized total {total} differs from path difference {}",
            &lhs_paths - &rhs_paths
        )));
    }
    let (lhs, rhs) = (lhs_by_formula(cfg), rhs_by_formula(cfg));
    let expected = &lhs - &rhs;
    if total != expected {
        return Err(Error::DecompositionMismatch { total, expected });
    }
    Ok(Certificate {
        config: *cfg,
        lhs,
        rhs,
        lhs_paths,
        rhs_paths,
        avoiding_term: BigInt::from(avoiding_term),
        avoiding_paths,
        boundary_terms,
        total,
        contributing_paths,
        total_paths,
    })
}
