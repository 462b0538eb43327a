//! Coordinate bridge between sparse multivectors and dense vectors/matrices
//! indexed by the canonical blade order.

use crate::blade::Blade;
use crate::linalg::Mat;
use crate::multivector::MultiVector;
use crate::scalar::{Field, Ring};
use crate::signature::Signature;

/// The 2^n basis blades of a signature in canonical (grade, mask) order,
/// with constant-time position lookup.
#[derive(Debug, Clone)]
pub struct BladeOrder {
    sig: Signature,
    blades: Vec<Blade>,
    pos: Vec<usize>,
}

impl BladeOrder {
    pub fn new(sig: Signature) -> Self {
        let blades = sig.basis_blades();
        let mut pos = vec![0usize; blades.len()];
        for (i, b) in blades.iter().enumerate() {
            pos[b.mask() as usize] = i;
        }
        BladeOrder { sig, blades, pos }
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    pub fn len(&self) -> usize {
        self.blades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blades.is_empty()
    }

    pub fn blades(&self) -> &[Blade] {
        &self.blades
    }

    pub fn index_of(&self, blade: Blade) -> usize {
        self.pos[blade.mask() as usize]
    }

    /// Dense coordinate vector of a multivector.
    pub fn coords<S: Ring>(&self, mv: &MultiVector<S>) -> Vec<S> {
        debug_assert_eq!(mv.sig(), &self.sig);
        let mut v = vec![S::zero(); self.len()];
        for (blade, coeff) in mv.terms() {
            v[self.index_of(*blade)] = coeff.clone();
        }
        v
    }

    /// Multivector from a dense coordinate vector.
    pub fn from_coords<S: Ring>(&self, coords: &[S]) -> MultiVector<S> {
        debug_assert_eq!(coords.len(), self.len());
        MultiVector::from_terms(
            self.sig,
            coords
                .iter()
                .enumerate()
                .map(|(i, c)| (self.blades[i], c.clone())),
        )
        .expect("blades come from the signature")
    }

    /// Matrix of left multiplication x -> f x in the blade basis.
    pub fn left_mul_matrix<S: Field>(&self, f: &MultiVector<S>) -> Mat<S> {
        self.mul_matrix(f, true)
    }

    /// Matrix of right multiplication x -> x f in the blade basis.
    pub fn right_mul_matrix<S: Field>(&self, f: &MultiVector<S>) -> Mat<S> {
        self.mul_matrix(f, false)
    }

    fn mul_matrix<S: Field>(&self, f: &MultiVector<S>, left: bool) -> Mat<S> {
        let n = self.len();
        let mut m = Mat::zero(n, n);
        for (j, blade) in self.blades.iter().enumerate() {
            let basis = MultiVector::basis_blade(self.sig, *blade).expect("valid blade");
            let product = if left { f * &basis } else { &basis * f };
            for (b, c) in product.terms() {
                m[(self.index_of(*b), j)] = c.clone();
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_multivector;
    use crate::scalar::{int, Rational};

    #[test]
    fn coords_round_trip() {
        let sig = Signature::new(3, 0).unwrap();
        let order = BladeOrder::new(sig);
        let mv = parse_multivector("1/2 - e2 + 3*e13 - 1/4*e123", sig).unwrap();
        assert_eq!(order.from_coords(&order.coords(&mv)), mv);
    }

    #[test]
    fn regular_representation_is_multiplicative() {
        let sig = Signature::new(2, 1).unwrap();
        let order = BladeOrder::new(sig);
        let a = parse_multivector("1 + 2*e1 - e23", sig).unwrap();
        let b = parse_multivector("e2 - 1/2*e123", sig).unwrap();
        let la: Mat<Rational> = order.left_mul_matrix(&a);
        let lb = order.left_mul_matrix(&b);
        let lab = order.left_mul_matrix(&(&a * &b));
        assert_eq!(la.mul(&lb), lab);

        // right multiplication is an anti-homomorphism
        let ra = order.right_mul_matrix(&a);
        let rb = order.right_mul_matrix(&b);
        let rab = order.right_mul_matrix(&(&a * &b));
        assert_eq!(rb.mul(&ra), rab);
    }

    #[test]
    fn trace_of_left_multiplication_is_dim_times_scal() {
        // trace f = dim(A) Scal(f)
        let sig = Signature::new(2, 1).unwrap();
        let order = BladeOrder::new(sig);
        let f = parse_multivector("3/4 + e1 - 2*e12 + 5*e123", sig).unwrap();
        let lf = order.left_mul_matrix(&f);
        assert_eq!(lf.trace(), int(8) * f.scal());
        let rf = order.right_mul_matrix(&f);
        assert_eq!(rf.trace(), int(8) * f.scal());
    }
}
