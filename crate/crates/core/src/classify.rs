//! Structure theory: matrix-ring classification of Cl(p,q) and the exact
//! dimension bookkeeping for conjugacy classes of square roots of -1.
//!
//! Dimensions are real dimensions throughout; ring-C records additionally
//! carry complex dimensions. The class of a root is indexed by the integer
//! k in [-d, d] (always 0 outside ring C): the defect of the +-i eigenspace
//! dimensions n1 = d + k, n2 = d - k.

use std::fmt;

use serde::Serialize;

use crate::error::{GaError, Result};
use crate::scalar::Rational;
use crate::signature::{RingKind, Signature};

/// Full structure record for one algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraClassification {
    #[serde(flatten)]
    pub sig: SignatureFacts,
    /// e.g. "M(4,C)"
    pub matrix_form: String,
    /// Connected components of the group of invertible elements.
    pub group_components: u32,
    /// Number of conjugacy classes of square roots of -1.
    pub class_count: u32,
    /// Dimension of the ordinary class: always dim(A)/2.
    pub ordinary_class_dim: u64,
    /// True iff exceptional roots (k != 0) exist, i.e. ring C.
    pub has_exceptional: bool,
}

/// Serialized view of a signature with its derived quantities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignatureFacts {
    pub p: u32,
    pub q: u32,
    pub n: u32,
    pub s: i64,
    pub ring: RingKind,
    pub d: u32,
    pub dim: u64,
}

impl SignatureFacts {
    fn of(sig: Signature) -> Self {
        SignatureFacts {
            p: sig.p(),
            q: sig.q(),
            n: sig.n(),
            s: sig.s(),
            ring: sig.ring(),
            d: sig.d(),
            dim: sig.dim(),
        }
    }
}

fn matrix_form(sig: Signature) -> String {
    let d = sig.d();
    match sig.ring() {
        RingKind::R => format!("M({},R)", 2 * d),
        RingKind::R2 => format!("M({},R^2)", 2 * d),
        RingKind::H => format!("M({},H)", d),
        RingKind::H2 => format!("M({},H^2)", d),
        RingKind::C => format!("M({},C)", 2 * d),
    }
}

/// Classify Cl(p,q).
pub fn classify(p: u32, q: u32) -> Result<AlgebraClassification> {
    let sig = Signature::new(p, q)?;
    classify_signature(sig)
}

pub fn classify_signature(sig: Signature) -> Result<AlgebraClassification> {
    let ring = sig.ring();
    let d = sig.d();
    Ok(AlgebraClassification {
        sig: SignatureFacts::of(sig),
        matrix_form: matrix_form(sig),
        group_components: ring.group_components(),
        class_count: if ring == RingKind::C { 2 * d + 1 } else { 1 },
        ordinary_class_dim: sig.dim() / 2,
        has_exceptional: ring == RingKind::C,
    })
}

/// Per-class exact dimension data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassDescriptor {
    pub k: i32,
    /// Real dimension of the conjugacy class: dim(A) - dim(Cent(f)).
    pub class_dim: u64,
    /// Real dimension of the centralizer.
    pub centralizer_dim: u64,
    /// Complex dimension of the centralizer (ring C only).
    pub centralizer_dim_complex: Option<u64>,
    /// Spec value k/d, when the Spec form exists (odd n).
    #[serde(serialize_with = "crate::report::serialize_opt_rational")]
    pub spec_value: Option<Rational>,
    /// Connected components of the class.
    pub connected_components: u32,
}

/// Dimension data for the class of index k in a classified algebra.
pub fn class_descriptor(cls: &AlgebraClassification, k: i32) -> Result<ClassDescriptor> {
    let d = cls.sig.d as u64;
    let dim = cls.sig.dim;
    if cls.sig.ring == RingKind::C {
        if k.unsigned_abs() as u64 > d {
            return Err(GaError::InvalidClassIndex {
                k: k.into(),
                d: cls.sig.d,
            });
        }
        let n1 = (d as i64 + k as i64) as u64;
        let n2 = (d as i64 - k as i64) as u64;
        let cent_c = n1 * n1 + n2 * n2;
        let cent_r = 2 * cent_c;
        Ok(ClassDescriptor {
            k,
            class_dim: dim - cent_r,
            centralizer_dim: cent_r,
            centralizer_dim_complex: Some(cent_c),
            spec_value: Some(Rational::new(k.into(), (d as i64).into())),
            connected_components: 1,
        })
    } else {
        if k != 0 {
            return Err(GaError::InvalidClassIndex {
                k: k.into(),
                d: cls.sig.d,
            });
        }
        let cent_r = dim / 2;
        Ok(ClassDescriptor {
            k: 0,
            class_dim: dim - cent_r,
            centralizer_dim: cent_r,
            centralizer_dim_complex: None,
            spec_value: if cls.sig.n % 2 == 1 {
                Some(Rational::new(0.into(), 1.into()))
            } else {
                None
            },
            connected_components: cls.group_components,
        })
    }
}

/// All class descriptors of an algebra, k descending (table order).
pub fn all_class_descriptors(cls: &AlgebraClassification) -> Vec<ClassDescriptor> {
    if cls.sig.ring == RingKind::C {
        let d = cls.sig.d as i32;
        (-d..=d)
            .rev()
            .map(|k| class_descriptor(cls, k).expect("k in range"))
            .collect()
    } else {
        vec![class_descriptor(cls, 0).expect("ordinary class")]
    }
}

/// Characteristic polynomial of a root as the exponent pair of
/// (t - i)^n1 (t + i)^n2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CharPolyExponents {
    pub n1: u32,
    pub n2: u32,
}

impl fmt::Display for CharPolyExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factor = |f: &mut fmt::Formatter<'_>, base: &str, exp: u32| -> fmt::Result {
            match exp {
                0 => Ok(()),
                1 => write!(f, "({base})"),
                _ => write!(f, "({base})^{exp}"),
            }
        };
        if self.n1 == 0 && self.n2 == 0 {
            return write!(f, "1");
        }
        factor(f, "t-i", self.n1)?;
        factor(f, "t+i", self.n2)
    }
}

/// Minimal polynomial of a root of -1 in the K-matrix picture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MinPoly {
    #[serde(rename = "t-i")]
    TMinusI,
    #[serde(rename = "t+i")]
    TPlusI,
    #[serde(rename = "t^2+1")]
    TSquaredPlusOne,
}

impl fmt::Display for MinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MinPoly::TMinusI => "t-i",
            MinPoly::TPlusI => "t+i",
            MinPoly::TSquaredPlusOne => "t^2+1",
        };
        write!(f, "{s}")
    }
}

/// Expected characteristic/minimal polynomial data for class k of M(2d,C).
pub fn expected_char_poly(d: u32, k: i32) -> Result<(CharPolyExponents, MinPoly)> {
    if k.unsigned_abs() > d {
        return Err(GaError::InvalidClassIndex { k: k.into(), d });
    }
    let exponents = CharPolyExponents {
        n1: (d as i32 + k) as u32,
        n2: (d as i32 - k) as u32,
    };
    let min_poly = if k == d as i32 {
        MinPoly::TMinusI
    } else if k == -(d as i32) {
        MinPoly::TPlusI
    } else {
        MinPoly::TSquaredPlusOne
    };
    Ok((exponents, min_poly))
}
