//! Exact rational scalars.
//!
//! All coordinates, times and tolerances in this crate are arbitrary-precision
//! rationals. Piecewise-linear iteration multiplies denominators, so fixed
//! width integers overflow within a couple dozen compositions; `BigRational`
//! keeps every operation exact.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n/d` as a reduced rational. Panics on `d == 0` (test/fixture helper).
pub fn frac(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Floor of a rational as a `BigInt`.
pub fn floor_int(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// Fractional part, always in `[0, 1)`.
pub fn mod1(x: &Rational) -> Rational {
    x - x.floor()
}

/// Exact rational → integer when the value is integral.
pub fn as_integer(x: &Rational) -> Option<BigInt> {
    if x.denom().is_one() {
        Some(x.numer().clone())
    } else {
        None
    }
}

/// Renders `p/q` (or `p` when `q == 1`), the literal syntax used by map files
/// and CLI flags.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses the `p/q` literal syntax (`q` omitted means an integer).
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational literal".to_string());
    }
    let mut parts = s.splitn(2, '/');
    let num_s = parts.next().unwrap();
    let numer: BigInt = num_s
        .parse()
        .map_err(|_| format!("bad integer `{num_s}`"))?;
    match parts.next() {
        None => Ok(BigRational::from_integer(numer)),
        Some(den_s) => {
            let denom: BigInt = den_s
                .parse()
                .map_err(|_| format!("bad integer `{den_s}`"))?;
            if denom.is_zero() {
                return Err("zero denominator".to_string());
            }
            Ok(BigRational::new(numer, denom))
        }
    }
}

/// Decimal approximation to six places, rounded to nearest, marked with `~`.
pub fn approx6(x: &Rational) -> String {
    let scaled = x * rat(1_000_000);
    let rounded = scaled.round().to_integer();
    let sign = if rounded.is_negative() { "-" } else { "" };
    let abs = rounded.abs();
    let int_part = &abs / BigInt::from(1_000_000);
    let frac_part = &abs % BigInt::from(1_000_000);
    format!("~{sign}{int_part}.{frac_part:06}")
}

/// Total bits in numerator plus denominator; used for precision budgets.
pub fn bit_size(x: &Rational) -> u64 {
    x.numer().bits() + x.denom().bits()
}

/// Nearest `f64`, for display only.
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-7/8", "5", "0", "-12", "22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert_eq!(format_rational(&parse_rational("6/8").unwrap()), "3/4");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn mod1_in_range() {
        assert_eq!(mod1(&frac(7, 4)), frac(3, 4));
        assert_eq!(mod1(&frac(-1, 4)), frac(3, 4));
        assert_eq!(mod1(&rat(3)), rat(0));
    }

    #[test]
    fn approx6_rounds() {
        assert_eq!(approx6(&frac(1, 3)), "~0.333333");
        assert_eq!(approx6(&frac(2, 3)), "~0.666667");
        assert_eq!(approx6(&frac(-1, 2)), "~-0.500000");
        assert_eq!(approx6(&rat(2)), "~2.000000");
    }
}
