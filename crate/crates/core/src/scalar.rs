//! Scalar abstractions.
//!
//! The algebra kernel is generic over the coefficient ring so that the same
//! product code drives exact rationals, Gaussian rationals (inside the
//! spinor representation) and symbolic coefficients in test oracles. The
//! library surface is exact: the concrete aliases below are what everything
//! user-facing works with.

use std::fmt;
use std::ops::{Neg, Sub};

use num_traits::{Num, One, Signed, Zero};

/// Coefficient ring for multivectors: exact ring operations, no division.
///
/// Blanket-implemented; `Rational`, `GaussianRational`, `f64` and any
/// num-traits ring all qualify.
pub trait Ring:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

/// Ring with exact division, required by the linear-algebra kernels.
pub trait Field: Ring + Num {}

impl<T> Field for T where T: Ring + Num {}

/// Exact rational scalar (arbitrary-precision numerator and denominator).
pub type Rational = num_rational::BigRational;

/// Complex number with exact rational components (a Gaussian rational).
pub type GaussianRational = num_complex::Complex<Rational>;

/// Shorthand for small rational constants.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}

/// Shorthand for integer-valued rationals.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(value.into())
}

/// True if the rational is an integer; returns it when so.
pub fn as_integer(value: &Rational) -> Option<num_bigint::BigInt> {
    if value.is_integer() {
        Some(value.to_integer())
    } else {
        None
    }
}

/// Signed magnitude printing helper used by the multivector printer.
pub fn abs(value: &Rational) -> Rational {
    Signed::abs(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_constructors() {
        assert_eq!(ratio(1, 2) + ratio(1, 2), int(1));
        assert_eq!(ratio(2, 4), ratio(1, 2));
        assert_eq!(int(-3), ratio(-3, 1));
    }

    #[test]
    fn gaussian_rational_is_a_field() {
        fn assert_field<T: Field>() {}
        assert_field::<Rational>();
        assert_field::<GaussianRational>();
        assert_field::<f64>();
    }
}
