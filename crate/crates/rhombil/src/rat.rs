//! Exact rational arithmetic used throughout the crate.
//!
//! Every count and formula value is a [`Rat`]: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. Tiling counts
//! grow super-exponentially, so nothing in a formula path ever touches
//! fixed-width arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number.
pub type Rat = BigRational;

/// Integer as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The fraction `n/d`. Panics on `d == 0`; callers only use literal constants.
pub fn frac(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `2^k` for any integer `k` (negative exponents give dyadic fractions).
pub fn pow2(k: i64) -> Rat {
    let mag = BigInt::from(2).pow(k.unsigned_abs() as u32);
    if k >= 0 {
        Rat::from_integer(mag)
    } else {
        Rat::new(BigInt::one(), mag)
    }
}

/// True when the value is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// True when the denominator is a power of two (an integer counts as dyadic).
pub fn is_dyadic(r: &Rat) -> bool {
    let mut d = r.denom().clone();
    if d.is_negative() {
        d = -d;
    }
    while (&d % 2u8).is_zero() {
        d /= 2u8;
    }
    d.is_one()
}

/// Render as `num/den`, or just the integer when the denominator is one.
pub fn display(r: &Rat) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow2_handles_both_signs() {
        assert_eq!(pow2(0), int(1));
        assert_eq!(pow2(3), int(8));
        assert_eq!(pow2(-2), frac(1, 4));
    }

    #[test]
    fn dyadic_detection() {
        assert!(is_dyadic(&int(7)));
        assert!(is_dyadic(&frac(3, 8)));
        assert!(!is_dyadic(&frac(1, 3)));
        assert!(!is_dyadic(&frac(5, 6)));
    }

    #[test]
    fn display_forms() {
        assert_eq!(display(&int(-4)), "-4");
        assert_eq!(display(&frac(3, 2)), "3/2");
    }
}
