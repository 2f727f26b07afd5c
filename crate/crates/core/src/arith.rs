//! Binomial coefficients and exact rational input/output.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational number in canonical form (reduced, positive denominator).
pub type BigRat = BigRational;

/// `C(n, k)`, with the convention that it vanishes unless `0 <= k <= n`.
///
/// Negative `n` also yields zero: the coefficient formulas index binomials
/// like `C(n - 2k, ·)` past the last γ and rely on them vanishing.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 1..=k {
        // acc * (n - k + t) is divisible by t at every step
        acc *= n - k + t;
        acc /= t;
    }
    acc
}

pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Parses `p`, `p/q`, `-p/q` or `+p/q` with decimal digits and `q != 0`.
pub fn parse_rational(s: &str) -> Result<BigRat> {
    parse_at(s, 1)
}

fn parse_at(token: &str, column: usize) -> Result<BigRat> {
    let err = |message: String| Error::Parse { column, message };
    let t = token.trim();
    if t.is_empty() {
        return Err(err("empty number".into()));
    }
    let (neg, body) = match t.as_bytes()[0] {
        b'-' => (true, &t[1..]),
        b'+' => (false, &t[1..]),
        _ => (false, t),
    };
    let (num, den) = match body.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (body, None),
    };
    let digits = |d: &str| -> Result<BigInt> {
        if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err(format!("invalid rational {t:?}")));
        }
        Ok(d.parse::<BigInt>().expect("ascii digits"))
    };
    let mut p = digits(num)?;
    let q = match den {
        Some(d) => digits(d)?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(err(format!("zero denominator in {t:?}")));
    }
    if neg {
        p = -p;
    }
    Ok(BigRat::new(p, q))
}

/// Parses a comma- or whitespace-separated list of rationals. Errors carry the
/// 1-based column of the offending token.
pub fn parse_rational_list(s: &str) -> Result<Vec<BigRat>> {
    let mut out = Vec::new();
    let mut start = None;
    // a comma must follow a token, possibly after whitespace
    let mut awaiting_comma = false;
    let bytes = s.as_bytes();
    for pos in 0..=bytes.len() {
        let sep = pos == bytes.len() || bytes[pos] == b',' || bytes[pos].is_ascii_whitespace();
        match (sep, start) {
            (false, None) => start = Some(pos),
            (true, Some(st)) => {
                out.push(parse_at(&s[st..pos], st + 1)?);
                start = None;
                awaiting_comma = pos < bytes.len() && bytes[pos] != b',';
            }
            (true, None) if pos < bytes.len() && bytes[pos] == b',' => {
                if !awaiting_comma {
                    return Err(Error::Parse {
                        column: pos + 1,
                        message: "empty entry".into(),
                    });
                }
                awaiting_comma = false;
            }
            _ => {}
        }
    }
    if out.is_empty() {
        return Err(Error::Parse {
            column: 1,
            message: "no coefficients given".into(),
        });
    }
    Ok(out)
}

/// `p/q`, or `p` when `q = 1`.
pub fn format_rational(x: &BigRat) -> String {
    x.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(rows: usize) -> Vec<Vec<BigInt>> {
        let mut t: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for r in 1..rows {
            let prev = &t[r - 1];
            let mut row = vec![BigInt::one(); r + 1];
            for k in 1..r {
                row[k] = &prev[k - 1] + &prev[k];
            }
            t.push(row);
        }
        t
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let t = pascal(70);
        for (n, row) in t.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n as i64, k as i64), v, "C({n},{k})");
            }
        }
        assert_eq!(binomial(16, 5), t[16][5]);
        assert_eq!(binomial(16, 5), BigInt::from(4368));
    }

    #[test]
    fn binomial_examples_and_out_of_range() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(2, -1), BigInt::zero());
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(-2, 0), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        // exceeds u128
        let big = binomial(200, 100);
        assert_eq!(big.to_string().len(), 59);
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-6/4").unwrap(), BigRat::new((-3).into(), 2.into()));
        assert_eq!(parse_rational("+1/2").unwrap(), BigRat::new(1.into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&parse_rational("10/4").unwrap()), "5/2");
        assert_eq!(format_rational(&rat(-7)), "-7");
    }

    #[test]
    fn list_errors_report_column() {
        let v = parse_rational_list("1, 6,15 ,20").unwrap();
        assert_eq!(v, vec![rat(1), rat(6), rat(15), rat(20)]);
        match parse_rational_list("1,2,abc") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_rational_list("1,,2"), Err(Error::Parse { column: 3, .. })));
        assert!(parse_rational_list("  ").is_err());
    }
}
