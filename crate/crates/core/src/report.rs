//! Serde helpers for the JSON report schemas.
//!
//! Rationals serialize as exact strings ("1/2", "-3"); multivectors as
//! literal strings in the text syntax.

use serde::Serializer;

use crate::multivector::MultiVector;
use crate::scalar::Rational;

pub fn serialize_rational<S: Serializer>(value: &Rational, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(&value.to_string())
}

pub fn serialize_opt_rational<S: Serializer>(
    value: &Option<Rational>,
    ser: S,
) -> Result<S::Ok, S::Error> {
    match value {
        Some(v) => ser.serialize_str(&v.to_string()),
        None => ser.serialize_none(),
    }
}

pub fn serialize_multivector<S: Serializer>(
    value: &MultiVector<Rational>,
    ser: S,
) -> Result<S::Ok, S::Error> {
    ser.serialize_str(&value.to_string())
}
