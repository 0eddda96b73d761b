//! Exact rationals, backed by `num_rational::BigRational`.
//!
//! The canonical text form is `p/q`, or `p` when the denominator is one.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `n / d` as a reduced rational. Panics if `d == 0`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn to_text(r: &Rational) -> String {
    r.to_string()
}

/// Nearest double, computed from a scaled integer quotient so very large
/// numerators and denominators do not overflow.
pub fn to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let (n, d) = (r.numer(), r.denom());
    let shift = n.bits() as i64 - d.bits() as i64 - 60;
    let scaled = if shift >= 0 {
        n / (d << shift as usize)
    } else {
        (n << (-shift) as usize) / d
    };
    scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32)
}

/// Falling-product generalized binomial `binom(e, n)`.
pub fn binomial(e: &Rational, n: usize) -> Rational {
    let mut c = Rational::one();
    for k in 0..n {
        c = c * (e - int(k as i64)) / int(k as i64 + 1);
    }
    c
}

/// Lowest-terms integer multiple: returns `(content, primitive)` with a
/// positive content and integer `primitive` coefficients whose gcd is one.
pub fn primitive_parts(coeffs: &[Rational]) -> (Rational, Vec<BigInt>) {
    use num_integer::Integer;
    if coeffs.iter().all(Zero::is_zero) {
        return (Rational::one(), vec![BigInt::zero(); coeffs.len()]);
    }
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c)).abs();
    let prim = ints.into_iter().map(|c| c / &g).collect();
    (Rational::new(g, lcm), prim)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form() {
        assert_eq!(to_text(&q(6, -4)), "-3/2");
        assert_eq!(to_text(&int(5)), "5");
        assert_eq!(parse("-3/2").unwrap(), q(-3, 2));
        assert_eq!(parse(" 7 ").unwrap(), int(7));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn zero_is_zero_over_one() {
        let z = q(0, 5);
        assert_eq!(z.numer(), &BigInt::zero());
        assert_eq!(z.denom(), &BigInt::one());
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(&q(1, 2), 2), q(-1, 8));
        assert_eq!(binomial(&int(-1), 3), int(-1));
        assert_eq!(binomial(&int(4), 5), int(0));
    }

    #[test]
    fn huge_to_f64() {
        let big = Rational::new(
            BigInt::from(10).pow(400) + 1u32,
            BigInt::from(10).pow(400) * 3u32,
        );
        assert!((to_f64(&big) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn primitive() {
        let (c, p) = primitive_parts(&[q(1, 2), q(3, 4), int(0)]);
        assert_eq!(c, q(1, 4));
        assert_eq!(p, vec![BigInt::from(2), BigInt::from(3), BigInt::from(0)]);
        let (c, p) = primitive_parts(&[int(-4), int(6)]);
        assert_eq!(c, int(2));
        assert_eq!(p, vec![BigInt::from(-2), BigInt::from(3)]);
    }
}
