mod common;

use gammalc_core::arith::format_rational;
use gammalc_core::coefficients::{abel_sum_check, coeff_table};
use gammalc_core::concavity::{is_log_concave, is_ultra_log_concave, is_unimodal, pairwise_lc, has_internal_zeros};
use gammalc_core::{gamma_to_h, h_to_gamma, parse_rational, BigInt, BigRat, GammaVector};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = BigRat> {
    (-1000i64..1000, 1i64..50).prop_map(|(p, q)| BigRat::new(BigInt::from(p), BigInt::from(q)))
}

fn nonneg_rational() -> impl Strategy<Value = BigRat> {
    (0i64..40, 1i64..6).prop_map(|(p, q)| BigRat::new(BigInt::from(p), BigInt::from(q)))
}

fn gamma_vector() -> impl Strategy<Value = GammaVector> {
    (0usize..16).prop_flat_map(|n| {
        prop::collection::vec(rational(), n / 2 + 1).prop_map(move |c| GammaVector::new(n, c).unwrap())
    })
}

proptest! {
    #[test]
    fn rational_text_round_trip(x in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn basis_round_trip(g in gamma_vector()) {
        prop_assert_eq!(h_to_gamma(&gamma_to_h(&g)), g);
    }

    #[test]
    fn transform_is_linear(
        (g1, g2) in (0usize..14).prop_flat_map(|n| (
            prop::collection::vec(rational(), n / 2 + 1).prop_map(move |c| GammaVector::new(n, c).unwrap()),
            prop::collection::vec(rational(), n / 2 + 1).prop_map(move |c| GammaVector::new(n, c).unwrap()),
        )),
        s in rational(),
    ) {
        let n = g1.n();
        let combo: Vec<BigRat> = g1.coeffs().iter().zip(g2.coeffs()).map(|(a, b)| a * &s + b).collect();
        let lhs = gamma_to_h(&GammaVector::new(n, combo).unwrap());
        let (h1, h2) = (gamma_to_h(&g1), gamma_to_h(&g2));
        let rhs: Vec<BigRat> = h1.coeffs().iter().zip(h2.coeffs()).map(|(a, b)| a * &s + b).collect();
        prop_assert_eq!(lhs.coeffs(), &rhs[..]);
    }

    /// The quadratic form reproduces `h_i^2 - h_{i-1} h_{i+1}`.
    #[test]
    fn table_evaluates_to_log_concavity_defect(g in gamma_vector(), pick in 0usize..100) {
        let n = g.n();
        prop_assume!(n >= 2);
        let i = 1 + pick % (n - 1);
        let h = gamma_to_h(&g);
        let c = h.coeffs();
        let defect = &c[i] * &c[i] - &c[i - 1] * &c[i + 1];
        let t = coeff_table(n as i64, i as i64).unwrap();
        prop_assert_eq!(t.evaluate(g.coeffs()).unwrap(), defect);
    }

    #[test]
    fn log_concave_without_zeros_is_unimodal(a in prop::collection::vec(nonneg_rational(), 0..10)) {
        let lc = is_log_concave(&a).unwrap().verdict;
        if lc && !has_internal_zeros(&a).verdict {
            prop_assert!(is_unimodal(&a).verdict);
        }
    }

    #[test]
    fn ultra_implies_plain(a in prop::collection::vec(nonneg_rational(), 1..9), extra in 0i64..4) {
        let m = a.len() as i64 - 1 + extra;
        if is_ultra_log_concave(&a, m).unwrap().verdict {
            prop_assert!(is_log_concave(&a).unwrap().verdict);
        }
    }

    #[test]
    fn abel_random(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = common::abel_pair(&mut rng);
        let trace = abel_sum_check(&a, &b).unwrap();
        prop_assert!(trace.holds());
    }

    #[test]
    fn log_concave_generator_is_sound(seed in any::<u64>(), n in 0usize..20) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::log_concave_gamma(&mut rng, n);
        prop_assert!(is_log_concave(g.coeffs()).unwrap().verdict);
        prop_assert!(!has_internal_zeros(g.coeffs()).verdict);
    }
}

/// Pairwise inequalities agree with the adjacent ones for nonnegative
/// sequences without internal zeros; checked for every sequence of length at
/// most 6 with entries in `0..=4`.
#[test]
fn pairwise_equivalence_exhaustive() {
    let mut checked = 0;
    for len in 0..=6u32 {
        for code in 0..5u32.pow(len) {
            let mut c = code;
            let a: Vec<BigRat> = (0..len)
                .map(|_| {
                    let d = c % 5;
                    c /= 5;
                    BigRat::from_integer(BigInt::from(d))
                })
                .collect();
            if has_internal_zeros(&a).verdict {
                continue;
            }
            checked += 1;
            assert_eq!(
                is_log_concave(&a).unwrap().verdict,
                pairwise_lc(&a).unwrap().verdict,
                "{a:?}"
            );
        }
    }
    assert!(checked > 1000);
}
