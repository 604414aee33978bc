//! The scalar of the exact kernel: an arbitrary-precision reduced fraction.
//!
//! Every length in the crate is carried as a *squared* length and every
//! angle as a (cos², sign) pair, so all quantities of interest stay inside
//! this field and no radical arithmetic or tolerance is ever needed.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator. Backed by [`num_rational::BigRational`]; arithmetic is exact
/// and total except division by zero, which panics like integer division.
pub type Rational = num_rational::BigRational;

/// Shorthand constructor from machine integers.
///
/// # Panics
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Whole-number rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Lossy conversion for rendering and oracle comparison only; the exact
/// pipeline never consumes the result.
pub fn rat_to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("BigRational always converts to f64")
}

/// Canonical text form: `num/den`, or just `num` for whole numbers.
pub fn rat_display(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sign of an exact quantity. `Zero` iff the value is exactly zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        if r.is_positive() {
            Sign::Positive
        } else if r.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        };
        f.write_str(s)
    }
}
