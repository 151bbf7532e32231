//! Exact rationals and their text renderings.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `"p/q"` with `q > 0`, always carrying the denominator (`"1/1"`, `"0/1"`).
pub fn to_exact(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_exact(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            (!q.is_zero()).then(|| Rational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Fixed-point rendering, rounded half away from zero. Display only.
pub fn to_decimal(r: &Rational, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = r.abs() * Rational::from_integer(scale.clone());
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let twice = rem * 2u32;
    let rounded = if &twice >= scaled.denom() { q + 1u32 } else { q };
    let (whole, part) = rounded.div_rem(&scale);
    let sign = if r.is_negative() && !rounded_is_zero(&whole, &part) { "-" } else { "" };
    if places == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{:0>width$}", part.to_string(), width = places)
    }
}

fn rounded_is_zero(whole: &BigInt, part: &BigInt) -> bool {
    whole.is_zero() && part.is_zero()
}

pub fn sum<'a, I: IntoIterator<Item = &'a Rational>>(it: I) -> Rational {
    it.into_iter().fold(Rational::zero(), |acc, x| acc + x)
}

pub fn min<'a, I: IntoIterator<Item = &'a Rational>>(it: I) -> Option<Rational> {
    it.into_iter().min().cloned()
}

pub fn is_one(r: &Rational) -> bool {
    r.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&frac(3, 2), 4), "1.5000");
        assert_eq!(to_decimal(&frac(-308, 163), 4), "-1.8896");
        assert_eq!(to_decimal(&int(0), 4), "0.0000");
        assert_eq!(to_decimal(&frac(2, 3), 4), "0.6667");
        assert_eq!(to_decimal(&frac(-1, 100_000), 4), "0.0000");
        assert_eq!(to_decimal(&frac(1, 20_000), 4), "0.0001");
        assert_eq!(to_decimal(&frac(7, 2), 0), "4");
    }

    #[test]
    fn exact_strings() {
        assert_eq!(to_exact(&int(1)), "1/1");
        assert_eq!(to_exact(&frac(4, -6)), "-2/3");
        assert_eq!(parse_exact("-2/3"), Some(frac(-2, 3)));
        assert_eq!(parse_exact("5"), Some(int(5)));
        assert_eq!(parse_exact("1/0"), None);
        assert_eq!(parse_exact("x"), None);
    }
}
