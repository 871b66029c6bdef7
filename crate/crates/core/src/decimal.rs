//! Exact conversion between number strings and rationals.
//!
//! Case inputs are decimal strings parsed to exact rationals ("0.5" ->
//! 1/2) with no binary-float round trip, so every case can be re-checked
//! by the exact oracle. Values whose reduced denominator is not of the
//! form 2^a 5^b (these arise from mean-inversion generators) are written
//! back as exact fraction strings "n/d", which parse the same way.

use crate::error::{ChebError, Result};
use crate::scalar::Rat;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Parse a decimal literal ("-1.25") or an exact fraction ("n/d").
pub fn parse_number(s: &str) -> Result<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| ChebError::BadDecimal(s.into()))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| ChebError::BadDecimal(s.into()))?;
        if d.is_zero() {
            return Err(ChebError::BadDecimal(s.into()));
        }
        return Ok(Rat::new(n, d));
    }
    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(ChebError::BadDecimal(s.into()));
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(ChebError::BadDecimal(s.into()));
    }
    let mut numer: BigInt = if int_part.is_empty() {
        BigInt::zero()
    } else {
        int_part
            .parse()
            .map_err(|_| ChebError::BadDecimal(s.into()))?
    };
    let mut denom = BigInt::one();
    for c in frac_part.chars() {
        numer = numer * 10 + (c as u8 - b'0');
        denom *= 10;
    }
    Ok(Rat::new(numer * sign, denom))
}

/// Render a rational exactly: plain decimal when the reduced denominator
/// is 2^a 5^b, fraction form otherwise. `parse_number` inverts both.
pub fn format_number(r: &Rat) -> String {
    let denom = r.denom();
    let mut twos = 0u32;
    let mut fives = 0u32;
    let mut d = denom.clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    while (&d % &two).is_zero() {
        d /= &two;
        twos += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        fives += 1;
    }
    if !d.is_one() {
        return format!("{}/{}", r.numer(), r.denom());
    }
    let digits = twos.max(fives);
    // scale so the denominator becomes exactly 10^digits
    let scale = BigInt::from(2).pow(digits - twos.min(digits))
        * BigInt::from(5).pow(digits - fives.min(digits));
    let scaled = (r.numer() * scale).to_string();
    if digits == 0 {
        return scaled;
    }
    let neg = scaled.starts_with('-');
    let body = scaled.trim_start_matches('-');
    let body = format!("{:0>width$}", body, width = digits as usize + 1);
    let split = body.len() - digits as usize;
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&body[..split]);
    out.push('.');
    out.push_str(&body[split..]);
    out
}

pub fn parse_list(items: &[String]) -> Result<Vec<Rat>> {
    items.iter().map(|s| parse_number(s)).collect()
}

pub fn format_list(items: &[Rat]) -> Vec<String> {
    items.iter().map(format_number).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parse_exact_decimals() {
        assert_eq!(parse_number("0.5").unwrap(), rat(1, 2));
        assert_eq!(parse_number("-1.25").unwrap(), rat(-5, 4));
        assert_eq!(parse_number("3").unwrap(), rat(3, 1));
        assert_eq!(parse_number(".5").unwrap(), rat(1, 2));
        assert_eq!(parse_number("2/6").unwrap(), rat(1, 3));
        assert_eq!(parse_number("-1/3").unwrap(), rat(-1, 3));
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", ".", "1.2.3", "1e5", "abc", "1/0"] {
            assert!(parse_number(bad).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn format_round_trips() {
        for r in [
            rat(1, 2),
            rat(-5, 4),
            rat(7, 1),
            rat(0, 1),
            rat(1, 3),
            rat(-22, 7),
            rat(123456, 1000000),
            rat(-1, 80),
        ] {
            let s = format_number(&r);
            assert_eq!(parse_number(&s).unwrap(), r, "round trip of {s}");
        }
        assert_eq!(format_number(&rat(1, 2)), "0.5");
        assert_eq!(format_number(&rat(-1, 4)), "-0.25");
        assert_eq!(format_number(&rat(1, 3)), "1/3");
        assert_eq!(format_number(&rat(5, 1)), "5");
    }
}
