use num_bigint::BigInt;
use serde::Serialize;

use super::{count_paths, enumerate_paths, involution, LatticePath, LatticePoint};
use crate::arith::binomial;
use crate::error::{Error, Result};

/// Lattice points `(x, y)` with `x - y = offset` and `y_min <= y <= y_max`.
/// Empty when `y_max < y_min`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiagonalSegment {
    pub offset: i64,
    pub y_min: i64,
    pub y_max: i64,
}

impl DiagonalSegment {
    pub fn contains(&self, p: LatticePoint) -> bool {
        p.x - p.y == self.offset && (self.y_min..=self.y_max).contains(&p.y)
    }

    /// Points in increasing order, which on a diagonal is the order `<=`.
    pub fn points(&self) -> Vec<LatticePoint> {
        (self.y_min..=self.y_max).map(|y| LatticePoint::new(y + self.offset, y)).collect()
    }
}

/// The configuration attached to `(n, i, r)`:
/// `O = (0,0)`, `D = (2n-2i-r, 2i-r)`, `PQ` from `(n-2i, 0)` to `(n-i, i)` and
/// `P'Q'` from `(n-2i+2, 0)` to `(n-i+1, i-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SegmentConfig {
    pub n: i64,
    pub i: i64,
    pub r: i64,
}

impl SegmentConfig {
    pub fn new(n: i64, i: i64, r: i64) -> Result<Self> {
        if n < 0 || i < 0 || 2 * i > n || r < 0 {
            return Err(Error::range(format!(
                "need 0 <= i <= floor(n/2) and r >= 0, got n={n}, i={i}, r={r}"
            )));
        }
        Ok(SegmentConfig { n, i, r })
    }

    pub fn o(&self) -> LatticePoint {
        LatticePoint::new(0, 0)
    }

    pub fn d(&self) -> LatticePoint {
        LatticePoint::new(2 * self.n - 2 * self.i - self.r, 2 * self.i - self.r)
    }

    pub fn p(&self) -> LatticePoint {
        LatticePoint::new(self.n - 2 * self.i, 0)
    }

    pub fn q(&self) -> LatticePoint {
        LatticePoint::new(self.n - self.i, self.i)
    }

    pub fn p_prime(&self) -> LatticePoint {
        LatticePoint::new(self.n - 2 * self.i + 2, 0)
    }

    pub fn q_prime(&self) -> LatticePoint {
        LatticePoint::new(self.n - self.i + 1, self.i - 1)
    }

    pub fn pq(&self) -> DiagonalSegment {
        DiagonalSegment { offset: self.n - 2 * self.i, y_min: 0, y_max: self.i }
    }

    pub fn ppqq(&self) -> DiagonalSegment {
        DiagonalSegment { offset: self.n - 2 * self.i + 2, y_min: 0, y_max: self.i - 1 }
    }

    fn paths(&self, cap: u64) -> Result<super::PathIter> {
        enumerate_paths(self.o(), self.d(), cap)
    }
}

/// Vertices of `p` lying on `s`, in path order.
pub fn segment_intersections(p: &LatticePath, s: &DiagonalSegment) -> Vec<LatticePoint> {
    p.vertices().into_iter().filter(|v| s.contains(*v)).collect()
}

fn binomial_pair_sum(cfg: &SegmentConfig, shift: i64) -> BigInt {
    let (n, i, r) = (cfg.n, cfg.i, cfg.r);
    (0..=r)
        .map(|j| {
            let k = r - j;
            binomial(n - 2 * j, i - shift - j) * binomial(n - 2 * k, i + shift - k)
        })
        .sum()
}

/// `Σ_{j+k=r} C(n-2j, i-j) C(n-2k, i-k)` over `j, k >= 0`.
pub fn lhs_by_formula(cfg: &SegmentConfig) -> BigInt {
    binomial_pair_sum(cfg, 0)
}

/// `Σ_{j+k=r} C(n-2j, i-1-j) C(n-2k, i+1-k)` over `j, k >= 0`.
pub fn rhs_by_formula(cfg: &SegmentConfig) -> BigInt {
    binomial_pair_sum(cfg, 1)
}

fn point_products(cfg: &SegmentConfig, s: DiagonalSegment) -> BigInt {
    s.points()
        .into_iter()
        .map(|a| count_paths(cfg.o(), a) * count_paths(a, cfg.d()))
        .sum()
}

/// `Σ_{A ∈ PQ} #(O→A) #(A→D)`.
pub fn lhs_by_point_products(cfg: &SegmentConfig) -> BigInt {
    point_products(cfg, cfg.pq())
}

/// `Σ_{A' ∈ P'Q'} #(O→A') #(A'→D)`.
pub fn rhs_by_point_products(cfg: &SegmentConfig) -> BigInt {
    point_products(cfg, cfg.ppqq())
}

fn weighted_path_sum(cfg: &SegmentConfig, s: DiagonalSegment, cap: u64) -> Result<BigInt> {
    let mut total = 0u64;
    for path in cfg.paths(cap)? {
        total += path.vertices().iter().filter(|v| s.contains(**v)).count() as u64;
    }
    Ok(BigInt::from(total))
}

/// `Σ_{α: O→D} #{α ∩ PQ}` by enumeration.
pub fn lhs_by_paths(cfg: &SegmentConfig, cap: u64) -> Result<BigInt> {
    weighted_path_sum(cfg, cfg.pq(), cap)
}

/// `Σ_{α: O→D} #{α ∩ P'Q'}` by enumeration.
pub fn rhs_by_paths(cfg: &SegmentConfig, cap: u64) -> Result<BigInt> {
    weighted_path_sum(cfg, cfg.ppqq(), cap)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim1Report {
    pub paths: u64,
    /// Paths meeting `P'Q'`, each of which was checked to satisfy
    /// `min(α ∩ PQ) <= max(α ∩ P'Q')`.
    pub paths_meeting_ppqq: u64,
}

/// Every path `O→D` meeting `P'Q'` also meets `PQ`, and its first `PQ`
/// point lies below its last `P'Q'` point.
pub fn claim1_check(cfg: &SegmentConfig, cap: u64) -> Result<Claim1Report> {
    let (pq, ppqq) = (cfg.pq(), cfg.ppqq());
    let mut report = Claim1Report { paths: 0, paths_meeting_ppqq: 0 };
    for path in cfg.paths(cap)? {
        report.paths += 1;
        let on_ppqq = segment_intersections(&path, &ppqq);
        let Some(last) = on_ppqq.last() else { continue };
        report.paths_meeting_ppqq += 1;
        match segment_intersections(&path, &pq).first() {
            None => {
                return Err(Error::ClaimViolation(format!(
                    "path {path} meets P'Q' at {last} but never meets PQ"
                )))
            }
            Some(first) if first.y > last.y => {
                return Err(Error::ClaimViolation(format!(
                    "path {path}: first PQ point {first} lies above last P'Q' point {last}"
                )))
            }
            Some(_) => {}
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim2Report {
    pub r: LatticePoint,
    pub r_prime: LatticePoint,
    pub paths: u64,
    pub pq_sum: u64,
    pub ppqq_sum: u64,
}

/// Over all paths `R→R'`, the `PQ` and `P'Q'` intersection counts agree in
/// total. Also checks that the rotation is a bijection of the path set
/// exchanging the two counts path by path.
pub fn claim2_check(
    cfg: &SegmentConfig,
    r: LatticePoint,
    r_prime: LatticePoint,
    cap: u64,
) -> Result<Claim2Report> {
    let (pq, ppqq) = (cfg.pq(), cfg.ppqq());
    if !pq.contains(r) || !ppqq.contains(r_prime) || !r.le(&r_prime) {
        return Err(Error::range(format!(
            "need R on PQ, R' on P'Q' and R <= R', got R={r}, R'={r_prime}"
        )));
    }
    let paths: Vec<LatticePath> = enumerate_paths(r, r_prime, cap)?.collect();
    let mut images = Vec::with_capacity(paths.len());
    let (mut pq_sum, mut ppqq_sum) = (0u64, 0u64);
    for path in &paths {
        let on_pq = segment_intersections(path, &pq).len();
        pq_sum += on_pq as u64;
        ppqq_sum += segment_intersections(path, &ppqq).len() as u64;
        let image = involution(path, r, r_prime)?;
        if involution(&image, r, r_prime)? != *path {
            return Err(Error::ClaimViolation(format!("rotation of {path} is not an involution")));
        }
        let on_image = segment_intersections(&image, &ppqq).len();
        if on_image != on_pq {
            return Err(Error::ClaimViolation(format!(
                "path {path} meets PQ {on_pq} times but its rotation {image} meets P'Q' {on_image} times"
            )));
        }
        images.push(image.steps);
    }
    images.sort();
    let mut originals: Vec<_> = paths.into_iter().map(|p| p.steps).collect();
    originals.sort();
    if images != originals {
        return Err(Error::ClaimViolation(format!(
            "rotation does not permute the paths from {r} to {r_prime}"
        )));
    }
    if pq_sum != ppqq_sum {
        return Err(Error::ClaimViolation(format!(
            "paths {r} -> {r_prime}: PQ total {pq_sum} differs from P'Q' total {ppqq_sum}"
        )));
    }
    Ok(Claim2Report { r, r_prime, paths: originals.len() as u64, pq_sum, ppqq_sum })
}

/// [`claim2_check`] over every rectangle `R <= R'` with `R ∈ PQ`, `R' ∈ P'Q'`.
pub fn claim2_check_all(cfg: &SegmentConfig, cap: u64) -> Result<Vec<Claim2Report>> {
    let mut out = Vec::new();
    for r in cfg.pq().points() {
        for r_prime in cfg.ppqq().points() {
            if r.le(&r_prime) {
                out.push(claim2_check(cfg, r, r_prime, cap)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::DEFAULT_CAP;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn example_points() {
        let cfg = SegmentConfig::new(6, 2, 2).unwrap();
        assert_eq!(cfg.d(), pt(6, 2));
        assert_eq!((cfg.p(), cfg.q()), (pt(2, 0), pt(4, 2)));
        assert_eq!((cfg.p_prime(), cfg.q_prime()), (pt(4, 0), pt(5, 1)));
        assert_eq!(cfg.pq().points(), vec![pt(2, 0), pt(3, 1), pt(4, 2)]);
        assert_eq!(cfg.ppqq().points(), vec![pt(4, 0), pt(5, 1)]);
        assert!(SegmentConfig::new(6, 4, 0).is_err());
        assert!(SegmentConfig::new(6, 2, -1).is_err());
    }

    #[test]
    fn figure_path_meets_pq_three_times() {
        let cfg = SegmentConfig::new(6, 2, 2).unwrap();
        let path: LatticePath = "EENENEEE".parse().unwrap();
        assert_eq!(path.end(), cfg.d());
        assert_eq!(segment_intersections(&path, &cfg.pq()), vec![pt(2, 0), pt(3, 1), pt(4, 2)]);
        // north first then east stays left of PQ until y = 2
        let corner: LatticePath = "NNEEEEEE".parse().unwrap();
        assert_eq!(segment_intersections(&corner, &cfg.pq()), vec![pt(4, 2)]);
        assert!(segment_intersections(&corner, &cfg.ppqq()).is_empty());
    }

    #[test]
    fn example_sums() {
        let cfg = SegmentConfig::new(6, 2, 2).unwrap();
        let (l, r) = (lhs_by_formula(&cfg), rhs_by_formula(&cfg));
        assert_eq!(l.clone() - r.clone(), BigInt::from(28));
        assert_eq!(lhs_by_paths(&cfg, DEFAULT_CAP).unwrap(), l);
        assert_eq!(rhs_by_paths(&cfg, DEFAULT_CAP).unwrap(), r);
        assert_eq!(lhs_by_point_products(&cfg), l);
        assert_eq!(rhs_by_point_products(&cfg), r);
    }

    #[test]
    fn r_zero_is_a_single_term() {
        for n in 0..12 {
            for i in 0..=n / 2 {
                let cfg = SegmentConfig::new(n, i, 0).unwrap();
                assert_eq!(lhs_by_formula(&cfg), binomial(n, i) * binomial(n, i));
                assert_eq!(rhs_by_formula(&cfg), binomial(n, i - 1) * binomial(n, i + 1));
            }
        }
    }

    #[test]
    fn empty_configuration() {
        let cfg = SegmentConfig::new(0, 0, 0).unwrap();
        assert_eq!(cfg.d(), cfg.o());
        assert_eq!(lhs_by_paths(&cfg, DEFAULT_CAP).unwrap(), BigInt::from(1));
        assert_eq!(rhs_by_paths(&cfg, DEFAULT_CAP).unwrap(), BigInt::from(0));
    }

    #[test]
    fn claims_on_examples() {
        for (n, i, r) in [(6, 2, 2), (8, 3, 3)] {
            let cfg = SegmentConfig::new(n, i, r).unwrap();
            let c1 = claim1_check(&cfg, DEFAULT_CAP).unwrap();
            assert_eq!(BigInt::from(c1.paths), count_paths(cfg.o(), cfg.d()));
            for rep in claim2_check_all(&cfg, DEFAULT_CAP).unwrap() {
                assert_eq!(rep.pq_sum, rep.ppqq_sum);
            }
        }
    }

    #[test]
    fn claim2_rejects_bad_rectangles() {
        let cfg = SegmentConfig::new(6, 2, 2).unwrap();
        assert!(claim2_check(&cfg, pt(3, 1), pt(4, 0), DEFAULT_CAP).is_err());
        assert!(claim2_check(&cfg, pt(3, 0), pt(4, 0), DEFAULT_CAP).is_err());
    }
}
