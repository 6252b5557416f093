use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_q(s: &str) -> Result<Q> {
    let err = || Error::Parse { what: "rational", input: s.to_string() };
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| err())?;
    let d: BigInt = den.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Q::new(n, d))
}

pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn sign(neg: bool) -> Q {
    if neg {
        -Q::one()
    } else {
        Q::one()
    }
}

pub fn factorial(n: usize) -> Q {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= i;
    }
    Q::from_integer(f)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as usize
}

pub(crate) fn is_neg(x: &Q) -> bool {
    x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_q("3").unwrap(), q(3));
        assert_eq!(parse_q("-1/2").unwrap(), qf(-1, 2));
        assert_eq!(parse_q(" 4/6 ").unwrap(), qf(2, 3));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn format_roundtrip() {
        for s in ["0", "5", "-7/3", "1/2"] {
            assert_eq!(fmt_q(&parse_q(s).unwrap()), s);
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
