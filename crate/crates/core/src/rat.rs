//! Exact rational scalars shared by the representation-theoretic modules.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, ToPrimitive, Zero};

/// Exact rational number. All root-system and Plancherel arithmetic is
/// carried out in this type; floats appear only at evaluation boundaries.
pub type Rat = BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as an exact rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rzero() -> Rat {
    Rat::zero()
}

pub fn rone() -> Rat {
    Rat::one()
}

/// Lossy conversion for evaluation at floating-point arguments.
pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}

/// True iff `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.is_integer()
}

/// True iff `2r` is an integer (integer or half-odd-integer).
pub fn is_half_integer(r: &Rat) -> bool {
    (r * rint(2)).is_integer()
}

/// True iff `r` is a half-odd-integer (spin value: 1/2, 3/2, ...).
pub fn is_half_odd(r: &Rat) -> bool {
    is_half_integer(r) && !r.is_integer()
}

/// Exact integer extraction; `None` if `r` is not an integer.
pub fn as_bigint(r: &Rat) -> Option<BigInt> {
    if r.is_integer() {
        Some(r.to_integer())
    } else {
        None
    }
}

/// Parse `"-3"`, `"3/2"` style exact rationals (used by the CLI).
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

/// Canonical display form: integers without denominator, otherwise `p/q`.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact conversion from an f64 that is required to be a half-integer
/// (weights arriving through JSON configs). Returns `None` otherwise.
pub fn rat_from_half_integer_f64(x: f64) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    let doubled = 2.0 * x;
    if doubled != doubled.round() {
        return None;
    }
    Some(rat(doubled.round() as i64, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::traits::Signed;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "-3", "3/2", "-7/2", "5"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("x").is_none());
    }

    #[test]
    fn half_integer_predicates() {
        assert!(is_half_odd(&rat(3, 2)));
        assert!(!is_half_odd(&rint(2)));
        assert!(is_half_integer(&rint(2)));
        assert!(!is_half_integer(&rat(1, 3)));
    }

    #[test]
    fn half_integer_from_f64() {
        assert_eq!(rat_from_half_integer_f64(1.5).unwrap(), rat(3, 2));
        assert_eq!(rat_from_half_integer_f64(-2.0).unwrap(), rint(-2));
        assert!(rat_from_half_integer_f64(0.3).is_none());
    }

    #[test]
    fn signum_sanity() {
        assert!(rat(-1, 2).is_negative());
    }
}
