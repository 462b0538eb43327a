//! Basis blades as generator-index bitmasks.
//!
//! Bit (i - 1) of the mask is set iff the generator e_i appears. The empty
//! mask is the scalar blade. Products reorder to the canonical ascending
//! sequence, picking up a sign from anticommutations, and contract repeated
//! generators through the metric.

use std::cmp::Ordering;
use std::fmt;

use crate::signature::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade(u16);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_mask(mask: u16) -> Blade {
        Blade(mask)
    }

    /// Blade from strictly ascending 1-based generator indices.
    pub fn from_indices(indices: &[u32]) -> Option<Blade> {
        let mut mask = 0u16;
        let mut prev = 0u32;
        for &i in indices {
            if !(1..=16).contains(&i) || i <= prev {
                return None;
            }
            mask |= 1 << (i - 1);
            prev = i;
        }
        Some(Blade(mask))
    }

    pub fn mask(&self) -> u16 {
        self.0
    }

    pub fn grade(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(&self, index: u32) -> bool {
        index >= 1 && (self.0 >> (index - 1)) & 1 == 1
    }

    /// Ascending 1-based generator indices.
    pub fn indices(&self) -> Vec<u32> {
        (1..=16).filter(|&i| self.contains(i)).collect()
    }

    pub fn is_scalar(&self) -> bool {
        self.0 == 0
    }
}

/// Canonical order: by grade, then by mask. This is the order of the basis
/// listing [Id, e1, e2, e3, e12, e13, e23, e123] and of all printed output.
impl Ord for Blade {
    fn cmp(&self, other: &Blade) -> Ordering {
        (self.grade(), self.0).cmp(&(other.grade(), other.0))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Blade) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_scalar() {
            return write!(f, "1");
        }
        let indices = self.indices();
        if indices.iter().all(|&i| i <= 9) {
            write!(f, "e")?;
            for i in indices {
                write!(f, "{i}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = indices.iter().map(|i| i.to_string()).collect();
            write!(f, "e{{{}}}", parts.join(","))
        }
    }
}

/// Product of basis blades: the canonical blade of the symmetric-difference
/// mask, and the sign in {-1, +1} collected from anticommutations and from
/// metric contractions e_k^2 = +-1.
pub fn blade_product(a: Blade, b: Blade, sig: &Signature) -> (Blade, i8) {
    debug_assert!(sig.check_blade(a).is_ok() && sig.check_blade(b).is_ok());
    let mut sign = reorder_sign(a.0, b.0);
    let mut common = a.0 & b.0;
    while common != 0 {
        let k = common.trailing_zeros() + 1;
        sign *= sig.generator_square(k);
        common &= common - 1;
    }
    (Blade(a.0 ^ b.0), sign)
}

/// Parity of the transpositions needed to merge two ascending index
/// sequences: each index of `b` moves left past the indices of `a`
/// exceeding it.
fn reorder_sign(mut a: u16, b: u16) -> i8 {
    a >>= 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// True when the two blades commute under the geometric product.
pub fn blades_commute(a: Blade, b: Blade, sig: &Signature) -> bool {
    blade_product(a, b, sig).1 == blade_product(b, a, sig).1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: u32, q: u32) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn blade(indices: &[u32]) -> Blade {
        Blade::from_indices(indices).unwrap()
    }

    /// List-based reference product: concatenate the index sequences, bubble
    /// sort counting swaps, contract adjacent equal pairs through the metric.
    /// Deliberately naive; the bitmask path is checked against it.
    fn oracle_product(a: &Blade, b: &Blade, sig: &Signature) -> (Blade, i8) {
        let mut seq: Vec<u32> = a.indices();
        seq.extend(b.indices());
        let mut sign = 1i8;
        loop {
            let mut acted = false;
            let mut i = 0;
            while i + 1 < seq.len() {
                if seq[i] > seq[i + 1] {
                    seq.swap(i, i + 1);
                    sign = -sign;
                    acted = true;
                } else if seq[i] == seq[i + 1] {
                    sign *= sig.generator_square(seq[i]);
                    seq.drain(i..=i + 1);
                    acted = true;
                } else {
                    i += 1;
                }
            }
            if !acted {
                break;
            }
        }
        (Blade::from_indices(&seq).unwrap(), sign)
    }

    #[test]
    fn squares_follow_the_metric() {
        // e1*e1 = +1 in Cl(2,0)
        assert_eq!(
            blade_product(blade(&[1]), blade(&[1]), &sig(2, 0)),
            (Blade::SCALAR, 1)
        );
        // e2*e2 = -1 in Cl(1,1)
        assert_eq!(
            blade_product(blade(&[2]), blade(&[2]), &sig(1, 1)),
            (Blade::SCALAR, -1)
        );
    }

    #[test]
    fn single_anticommutation() {
        // e2*e1 = -e12 in Cl(2,0)
        assert_eq!(
            blade_product(blade(&[2]), blade(&[1]), &sig(2, 0)),
            (blade(&[1, 2]), -1)
        );
    }

    #[test]
    fn matches_list_oracle_exhaustively() {
        for (p, q) in [(4, 0), (0, 4), (2, 2), (3, 1), (1, 3)] {
            let sig = sig(p, q);
            let n = sig.n();
            for am in 0..(1u16 << n) {
                for bm in 0..(1u16 << n) {
                    let a = Blade::from_mask(am);
                    let b = Blade::from_mask(bm);
                    assert_eq!(
                        blade_product(a, b, &sig),
                        oracle_product(&a, &b, &sig),
                        "Cl({p},{q}): {a} * {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn generators_anticommute() {
        let s = sig(3, 2);
        for h in 1..=5u32 {
            for k in 1..=5u32 {
                if h == k {
                    continue;
                }
                let (bh, sh) = blade_product(blade(&[h]), blade(&[k]), &s);
                let (bk, sk) = blade_product(blade(&[k]), blade(&[h]), &s);
                assert_eq!(bh, bk);
                assert_eq!(sh, -sk);
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(blade(&[2, 3]).to_string(), "e23");
        assert_eq!(Blade::SCALAR.to_string(), "1");
        assert_eq!(blade(&[1, 10]).to_string(), "e{1,10}");
    }

    #[test]
    fn canonical_order() {
        assert!(blade(&[3]) < blade(&[1, 2]));
        assert!(blade(&[1, 2]) < blade(&[1, 3]));
        assert!(blade(&[1, 3]) < blade(&[2, 3]));
    }
}
