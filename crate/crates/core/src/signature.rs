//! Algebra signatures (p, q) and the associated matrix-ring classification.
//!
//! Cl(p,q) is generated by e_1..e_n with e_k^2 = +1 for k <= p and -1 for
//! k > p. The isomorphic matrix algebra has entries in one of five rings
//! determined by s = p - q mod 8, and square size 2d or d with
//! d = 2^((n-2)/2) for even n and 2^((n-3)/2) for odd n.

use std::fmt;

use serde::Serialize;

use crate::blade::Blade;
use crate::error::{GaError, Result};

/// The five coefficient rings of the matrix algebra isomorphic to Cl(p,q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RingKind {
    R,
    R2,
    H,
    H2,
    C,
}

impl RingKind {
    /// Ring from the signature residue s mod 8.
    pub fn from_s_mod_8(residue: u32) -> RingKind {
        match residue % 8 {
            0 | 2 => RingKind::R,
            1 => RingKind::R2,
            3 | 7 => RingKind::C,
            4 | 6 => RingKind::H,
            5 => RingKind::H2,
            _ => unreachable!(),
        }
    }

    /// True for the double algebras R^2 and H^2 (central omega with omega^2 = +1).
    pub fn is_double(self) -> bool {
        matches!(self, RingKind::R2 | RingKind::H2)
    }

    /// Number of connected components of the group of invertible elements.
    pub fn group_components(self) -> u32 {
        match self {
            RingKind::R => 2,
            RingKind::R2 => 4,
            RingKind::H | RingKind::H2 | RingKind::C => 1,
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RingKind::R => "R",
            RingKind::R2 => "R^2",
            RingKind::H => "H",
            RingKind::H2 => "H^2",
            RingKind::C => "C",
        };
        write!(f, "{s}")
    }
}

/// Signature (p, q) of a non-degenerate quadratic space, with the derived
/// quantities used throughout: n, s, the associated ring and d.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    p: u32,
    q: u32,
}

impl Signature {
    /// Soft ceiling on n; centralizer solves scale as 8^n.
    pub const DEFAULT_MAX_N: u32 = 12;

    pub fn new(p: u32, q: u32) -> Result<Signature> {
        Signature::with_limit(p, q, Signature::DEFAULT_MAX_N)
    }

    /// Constructor with an explicit n ceiling (CLI `--max-n`).
    pub fn with_limit(p: u32, q: u32, max_n: u32) -> Result<Signature> {
        let n = p + q;
        if n < 2 {
            return Err(GaError::DimensionTooSmall { p, q });
        }
        if n > max_n || n > 16 {
            return Err(GaError::DimensionLimit {
                n,
                max: max_n.min(16),
            });
        }
        Ok(Signature { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.p + self.q
    }

    /// Signature s = p - q.
    pub fn s(&self) -> i64 {
        self.p as i64 - self.q as i64
    }

    /// Real dimension 2^n of the algebra.
    pub fn dim(&self) -> u64 {
        1u64 << self.n()
    }

    pub fn ring(&self) -> RingKind {
        RingKind::from_s_mod_8(self.s().rem_euclid(8) as u32)
    }

    /// Representation half-dimension d.
    pub fn d(&self) -> u32 {
        let n = self.n();
        if n.is_multiple_of(2) {
            1 << ((n - 2) / 2)
        } else {
            1 << ((n - 3) / 2)
        }
    }

    /// Square of the generator e_k (1-based index): +1 for k <= p, -1 for k > p.
    pub fn generator_square(&self, k: u32) -> i8 {
        debug_assert!(k >= 1 && k <= self.n());
        if k <= self.p {
            1
        } else {
            -1
        }
    }

    /// All 2^n basis blades in canonical order (by grade, then mask).
    pub fn basis_blades(&self) -> Vec<Blade> {
        let mut blades: Vec<Blade> = (0..self.dim() as u32)
            .map(|m| Blade::from_mask(m as u16))
            .collect();
        blades.sort();
        blades
    }

    /// The top blade e_1 e_2 ... e_n.
    pub fn pseudoscalar_blade(&self) -> Blade {
        Blade::from_mask(((1u32 << self.n()) - 1) as u16)
    }

    /// Check a blade mask against this signature's generator range.
    pub fn check_blade(&self, blade: Blade) -> Result<()> {
        if u32::from(blade.mask()) >> self.n() != 0 {
            Err(GaError::BladeOutOfRange {
                mask: blade.mask(),
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}
