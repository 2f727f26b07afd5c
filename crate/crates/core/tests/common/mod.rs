#![allow(dead_code)]

use gammalc_core::{BigInt, BigRat, GammaVector};
use rand::Rng;

pub fn frac<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> BigRat {
    BigRat::new(BigInt::from(rng.gen_range(0..=max_num)), BigInt::from(rng.gen_range(1..=max_den)))
}

pub fn positive_frac<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> BigRat {
    BigRat::new(BigInt::from(rng.gen_range(1..=max_num)), BigInt::from(rng.gen_range(1..=max_den)))
}

/// Log-concave without internal zeros: a positive start, multiplied by a
/// weakly decreasing run of positive ratios, then zero padding on both ends.
pub fn log_concave_gamma<R: Rng>(rng: &mut R, n: usize) -> GammaVector {
    let len = n / 2 + 1;
    let support = rng.gen_range(1..=len);
    let offset = rng.gen_range(0..=len - support);
    let mut ratios: Vec<BigRat> = (1..support).map(|_| positive_frac(rng, 12, 6)).collect();
    ratios.sort_by(|a, b| b.cmp(a));
    let mut coeffs = vec![BigRat::from_integer(BigInt::from(0)); len];
    let mut v = positive_frac(rng, 20, 7);
    coeffs[offset] = v.clone();
    for (t, q) in ratios.iter().enumerate() {
        v = &v * q;
        coeffs[offset + t + 1] = v.clone();
    }
    GammaVector::new(n, coeffs).expect("length matches n")
}

/// Nonnegative rationals with no structure.
pub fn arbitrary_gamma<R: Rng>(rng: &mut R, n: usize) -> GammaVector {
    let coeffs = (0..n / 2 + 1).map(|_| frac(rng, 9, 4)).collect();
    GammaVector::new(n, coeffs).expect("length matches n")
}

/// `(a, b)` meeting the summation-by-parts hypotheses: `a` nonnegative then
/// nonpositive with nonnegative total, `b` nonnegative and weakly decreasing.
pub fn abel_pair<R: Rng>(rng: &mut R) -> (Vec<BigRat>, Vec<BigRat>) {
    let len = rng.gen_range(1..=12);
    let split = rng.gen_range(0..=len);
    let pos: Vec<BigRat> = (0..split).map(|_| frac(rng, 30, 5)).collect();
    let mut neg: Vec<BigRat> = (split..len).map(|_| -frac(rng, 30, 5)).collect();
    let total_pos: BigRat = pos.iter().sum();
    let total_neg: BigRat = -neg.iter().sum::<BigRat>();
    if total_neg > total_pos {
        // shrink the negative block so the total lands in [0, total_pos]
        let scale = &total_pos / &total_neg * positive_frac(rng, 10, 10).min(BigRat::from_integer(1.into()));
        for x in &mut neg {
            *x = &*x * &scale;
        }
    }
    let mut b: Vec<BigRat> = (0..len).map(|_| frac(rng, 40, 3)).collect();
    b.sort_by(|x, y| y.cmp(x));
    let mut a = pos;
    a.extend(neg);
    (a, b)
}
