//! Exact-arithmetic Clifford algebra engine for the structure of square
//! roots of -1.
//!
//! The library classifies Cl(p,q) by its isomorphic matrix ring, constructs
//! spinor representations over the Gaussian rationals via primitive
//! idempotents, enumerates the conjugacy classes of square roots of -1 with
//! exact class and centralizer dimensions, and analyzes the d = 1 component
//! structure and the n = 2 root manifolds. All arithmetic is exact; the one
//! place floating point appears is the CSV manifold sampler, which is
//! visualization output.
//!
//! The multivector kernel is generic over the coefficient ring (the [`Ring`]
//! and [`Field`] traits); the exact instantiations used everywhere are the
//! crate-root aliases [`Rational`], [`GaussianRational`], [`Mv`] and
//! [`CMat`].

pub mod blade;
pub mod classify;
pub mod coords;
pub mod error;
pub mod golden;
pub mod linalg;
pub mod multivector;
pub mod parse;
pub mod rep;
mod report;
pub mod roots;
pub mod scalar;
pub mod signature;

pub use blade::{blade_product, blades_commute, Blade};
pub use classify::{
    all_class_descriptors, class_descriptor, classify, classify_signature, expected_char_poly,
    AlgebraClassification, CharPolyExponents, ClassDescriptor, MinPoly,
};
pub use coords::BladeOrder;
pub use error::{GaError, Result};
pub use linalg::{Mat, Solver};
pub use multivector::MultiVector;
pub use parse::parse_multivector;
pub use rep::{
    annihilating_family, complex_trace, ideal_basis, primitive_idempotent, realify,
    spinor_representation, Idempotent, MatrixRep,
};
pub use roots::{
    all_class_reports, centralizer, class_of, class_of_with_rep, component_of_d1,
    component_permutation, component_permutation_check, double_split, find_conjugator,
    find_conjugator_seeded, idempotent_from_root, inverse, is_root, manifold_constraint,
    representative_root, root_from_idempotent, sample_invertible_d1, sample_manifold,
    sample_root_d1, ComponentLabel, DoubleSplit, KleinPermutation, ManifoldPoint, RootClassReport,
};
pub use scalar::{Field, GaussianRational, Rational, Ring};
pub use signature::{RingKind, Signature};

/// Exact multivector: the instantiation the whole library surface works with.
pub type Mv = MultiVector<Rational>;

/// Matrix over the Gaussian rationals (spinor representation entries).
pub type CMat = Mat<GaussianRational>;
