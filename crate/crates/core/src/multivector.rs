//! Sparse multivectors over an exact coefficient ring.
//!
//! A multivector is a map from basis blades to coefficients, tied to a
//! signature. No zero coefficients are stored; equality is coefficient-wise.
//! Every operation is pure and values are immutable after construction.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::blade::{blade_product, Blade};
use crate::error::{GaError, Result};
use crate::scalar::{Field, Ring};
use crate::signature::Signature;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiVector<S: Ring> {
    sig: Signature,
    terms: BTreeMap<Blade, S>,
}

impl<S: Ring> MultiVector<S> {
    pub fn zero(sig: Signature) -> Self {
        MultiVector {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(sig: Signature, value: S) -> Self {
        let mut mv = MultiVector::zero(sig);
        mv.insert(Blade::SCALAR, value);
        mv
    }

    pub fn one(sig: Signature) -> Self {
        MultiVector::scalar(sig, S::one())
    }

    pub fn basis_blade(sig: Signature, blade: Blade) -> Result<Self> {
        sig.check_blade(blade)?;
        let mut mv = MultiVector::zero(sig);
        mv.insert(blade, S::one());
        Ok(mv)
    }

    /// Build from (blade, coefficient) pairs; duplicates are summed, zeros dropped.
    pub fn from_terms<I>(sig: Signature, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Blade, S)>,
    {
        let mut mv = MultiVector::zero(sig);
        for (blade, coeff) in terms {
            sig.check_blade(blade)?;
            mv.accumulate(blade, coeff);
        }
        Ok(mv)
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    /// Terms in canonical (grade, mask) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &S)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a blade (zero when absent).
    pub fn coeff(&self, blade: Blade) -> S {
        self.terms.get(&blade).cloned().unwrap_or_else(S::zero)
    }

    fn insert(&mut self, blade: Blade, coeff: S) {
        if !coeff.is_zero() {
            self.terms.insert(blade, coeff);
        }
    }

    fn accumulate(&mut self, blade: Blade, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&blade) {
            None => {
                self.terms.insert(blade, coeff);
            }
            Some(existing) => {
                let sum = existing + coeff;
                self.insert(blade, sum);
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.sig != other.sig {
            return Err(GaError::SignatureMismatch);
        }
        let mut out = self.clone();
        for (blade, coeff) in &other.terms {
            out.accumulate(*blade, coeff.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.clone().neg())
    }

    pub fn scale(&self, factor: &S) -> Self {
        let mut out = MultiVector::zero(self.sig);
        for (blade, coeff) in &self.terms {
            out.insert(*blade, coeff.clone() * factor.clone());
        }
        out
    }

    /// Bilinear extension of the blade product.
    pub fn try_geometric_product(&self, other: &Self) -> Result<Self> {
        if self.sig != other.sig {
            return Err(GaError::SignatureMismatch);
        }
        let mut out = MultiVector::zero(self.sig);
        for (ba, ca) in &self.terms {
            for (bb, cb) in &other.terms {
                let (blade, sign) = blade_product(*ba, *bb, &self.sig);
                let prod = ca.clone() * cb.clone();
                out.accumulate(blade, if sign > 0 { prod } else { -prod });
            }
        }
        Ok(out)
    }

    /// Keep exactly the blades of grade r.
    pub fn grade_project(&self, r: u32) -> Self {
        let mut out = MultiVector::zero(self.sig);
        for (blade, coeff) in &self.terms {
            if blade.grade() == r {
                out.insert(*blade, coeff.clone());
            }
        }
        out
    }

    /// Grades present, ascending.
    pub fn grades(&self) -> Vec<u32> {
        let mut grades: Vec<u32> = self.terms.keys().map(Blade::grade).collect();
        grades.dedup();
        grades
    }

    fn map_grade_signs(&self, sign_of_grade: impl Fn(u32) -> bool) -> Self {
        let mut out = MultiVector::zero(self.sig);
        for (blade, coeff) in &self.terms {
            let coeff = if sign_of_grade(blade.grade()) {
                coeff.clone()
            } else {
                -coeff.clone()
            };
            out.insert(*blade, coeff);
        }
        out
    }

    /// Negates odd grades; an algebra automorphism.
    pub fn grade_involution(&self) -> Self {
        self.map_grade_signs(|r| r.is_multiple_of(2))
    }

    /// Multiplies grade r by (-1)^(r(r-1)/2); an anti-automorphism.
    pub fn reversion(&self) -> Self {
        self.map_grade_signs(|r| matches!(r % 4, 0 | 1))
    }

    /// Composition of grade involution and reversion.
    pub fn clifford_conjugation(&self) -> Self {
        self.map_grade_signs(|r| matches!(r % 4, 0 | 3))
    }

    /// Coefficient of the scalar blade.
    pub fn scal(&self) -> S {
        self.coeff(Blade::SCALAR)
    }

    /// Coefficient of the pseudoscalar blade. Defined when n is odd (the
    /// center is spanned by 1 and omega); the sign convention fixes omega as
    /// the ascending product e_1 e_2 ... e_n.
    pub fn spec(&self) -> Result<S> {
        if self.sig.n().is_multiple_of(2) {
            return Err(GaError::CenterTooSmall);
        }
        Ok(self.coeff(self.sig.pseudoscalar_blade()))
    }

    /// The pseudoscalar omega = e_1 e_2 ... e_n.
    pub fn pseudoscalar(sig: Signature) -> Self {
        let mut mv = MultiVector::zero(sig);
        mv.insert(sig.pseudoscalar_blade(), S::one());
        mv
    }

    /// Exact test for f * f = -1.
    pub fn is_root_of_minus_one(&self) -> bool {
        match self.try_geometric_product(self) {
            Ok(square) => square == MultiVector::scalar(self.sig, -S::one()),
            Err(_) => false,
        }
    }

    /// Exact idempotency test.
    pub fn is_idempotent(&self) -> bool {
        matches!(self.try_geometric_product(self), Ok(square) if square == *self)
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        match (
            self.try_geometric_product(other),
            other.try_geometric_product(self),
        ) {
            (Ok(ab), Ok(ba)) => ab == ba,
            _ => false,
        }
    }
}

impl<S: Field> MultiVector<S> {
    /// Split along a square root r of -1: A = A_+ + A_- with
    /// A_+- = (A -+ r A r) / 2, A_+ r = r A_+ and A_- r = -r A_-.
    pub fn split_commuting(&self, r: &Self) -> Result<(Self, Self)> {
        if self.sig != r.sig {
            return Err(GaError::SignatureMismatch);
        }
        if !r.is_root_of_minus_one() {
            return Err(GaError::NotARoot);
        }
        let half = S::one() / (S::one() + S::one());
        let rar = r.try_geometric_product(self)?.try_geometric_product(r)?;
        let plus = self.try_sub(&rar)?.scale(&half);
        let minus = self.try_add(&rar)?.scale(&half);
        Ok((plus, minus))
    }

    /// Square of the pseudoscalar, as a bare sign.
    pub fn pseudoscalar_square(sig: Signature) -> i8 {
        let top = sig.pseudoscalar_blade();
        blade_product(top, top, &sig).1
    }
}

impl<S: Ring> Neg for MultiVector<S> {
    type Output = MultiVector<S>;

    fn neg(self) -> MultiVector<S> {
        let mut out = MultiVector::zero(self.sig);
        for (blade, coeff) in self.terms {
            out.terms.insert(blade, -coeff);
        }
        out
    }
}

impl<S: Ring> Neg for &MultiVector<S> {
    type Output = MultiVector<S>;

    fn neg(self) -> MultiVector<S> {
        self.clone().neg()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $delegate:ident, $msg:literal) => {
        impl<S: Ring> $trait<&MultiVector<S>> for &MultiVector<S> {
            type Output = MultiVector<S>;

            fn $method(self, rhs: &MultiVector<S>) -> MultiVector<S> {
                self.$delegate(rhs).expect($msg)
            }
        }

        impl<S: Ring> $trait<MultiVector<S>> for MultiVector<S> {
            type Output = MultiVector<S>;

            fn $method(self, rhs: MultiVector<S>) -> MultiVector<S> {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(
    Add,
    add,
    try_add,
    "multivector addition: signature mismatch"
);
binop!(
    Sub,
    sub,
    try_sub,
    "multivector subtraction: signature mismatch"
);
binop!(
    Mul,
    mul,
    try_geometric_product,
    "geometric product: signature mismatch"
);

/// Power by repeated multiplication; exponent small by construction.
pub fn mv_pow<S: Ring>(base: &MultiVector<S>, exp: u32) -> MultiVector<S> {
    let mut acc = MultiVector::scalar(*base.sig(), S::one());
    for _ in 0..exp {
        acc = &acc * base;
    }
    acc
}
