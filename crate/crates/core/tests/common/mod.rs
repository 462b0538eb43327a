//! Shared test support: independent oracles and fixture loading.
//!
//! Everything here is deliberately naive and separate from the library's
//! computational paths, so it can serve as an independent check.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::path::PathBuf;

use num_traits::{One, Zero};
use rand::Rng;

use ga_core::golden::{parse_golden, GoldenTable};
use ga_core::linalg::Mat;
use ga_core::scalar::ratio;
use ga_core::{Blade, Field, MultiVector, Mv, Rational, Signature};

// ---------------------------------------------------------------------------
// polynomial coefficients for the symbolic n = 2 oracle
// ---------------------------------------------------------------------------

/// Multivariate polynomial over the rationals in the four root coordinates
/// (alpha, b1, b2, beta). Exponent vectors are the map keys.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<[u8; 4], Rational>,
}

pub const ALPHA: usize = 0;
pub const B1: usize = 1;
pub const B2: usize = 2;
pub const BETA: usize = 3;

impl Poly {
    pub fn constant(c: i64) -> Poly {
        let mut p = Poly::default();
        p.insert([0; 4], ratio(c, 1));
        p
    }

    pub fn var(index: usize) -> Poly {
        let mut exps = [0u8; 4];
        exps[index] = 1;
        let mut p = Poly::default();
        p.insert(exps, ratio(1, 1));
        p
    }

    fn insert(&mut self, exps: [u8; 4], coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            None => {
                self.terms.insert(exps, coeff);
            }
            Some(existing) => {
                let sum = existing + coeff;
                if !sum.is_zero() {
                    self.terms.insert(exps, sum);
                }
            }
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(self, rhs: Poly) -> Poly {
        let mut out = self;
        for (exps, coeff) in rhs.terms {
            out.insert(exps, coeff);
        }
        out
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        let mut out = Poly::default();
        for (exps, coeff) in self.terms {
            out.terms.insert(exps, -coeff);
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        let mut out = Poly::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut exps = [0u8; 4];
                for i in 0..4 {
                    exps[i] = ea[i] + eb[i];
                }
                out.insert(exps, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl Zero for Poly {
    fn zero() -> Poly {
        Poly::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly {
    fn one() -> Poly {
        Poly::constant(1)
    }
}

// ---------------------------------------------------------------------------
// independent determinant oracle
// ---------------------------------------------------------------------------

/// Determinant by Laplace-style expansion with dynamic programming over
/// column subsets. Exponential state, fine to 12x12, and entirely
/// independent of the elimination code it checks.
pub fn det_expansion<S: Field>(m: &Mat<S>) -> S {
    let n = m.rows();
    assert_eq!(n, m.cols());
    assert!(n <= 14, "expansion oracle is exponential");
    let mut table: Vec<Option<S>> = vec![None; 1 << n];
    table[0] = Some(S::one());
    for mask in 1usize..1 << n {
        let row = mask.count_ones() as usize - 1;
        let mut acc = S::zero();
        let mut position = 0;
        for col in 0..n {
            if mask >> col & 1 == 0 {
                continue;
            }
            let sub = table[mask ^ (1 << col)]
                .clone()
                .expect("filled by popcount order");
            let entry = m[(row, col)].clone();
            if !entry.is_zero() && !sub.is_zero() {
                let term = entry * sub;
                // cofactor sign along row `row`, column position within the subset
                acc = if (row + position).is_multiple_of(2) {
                    acc + term
                } else {
                    acc - term
                };
            }
            position += 1;
        }
        table[mask] = Some(acc);
    }
    table[(1 << n) - 1].clone().expect("full mask")
}

// ---------------------------------------------------------------------------
// random generators
// ---------------------------------------------------------------------------

pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let numer = loop {
        let v = rng.gen_range(-5i64..=5);
        if v != 0 {
            break v;
        }
    };
    ratio(numer, rng.gen_range(1i64..=4))
}

/// Sparse random multivector with up to `max_terms` nonzero blades.
pub fn random_mv<R: Rng + ?Sized>(sig: Signature, max_terms: usize, rng: &mut R) -> Mv {
    let dim = sig.dim() as u16;
    let count = rng.gen_range(1..=max_terms);
    let terms = (0..count).map(|_| {
        let mask = rng.gen_range(0..dim);
        (Blade::from_mask(mask), random_rational(rng))
    });
    MultiVector::from_terms(sig, terms).expect("masks in range")
}

pub fn random_gaussian_matrix<R: Rng + ?Sized>(
    size: usize,
    rng: &mut R,
) -> Mat<ga_core::GaussianRational> {
    Mat::from_fn(size, size, |_, _| {
        ga_core::GaussianRational::new(random_rational(rng), random_rational(rng))
    })
}

// ---------------------------------------------------------------------------
// golden fixtures
// ---------------------------------------------------------------------------

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../golden")
}

pub const GOLDEN_SIGNATURES: [(u32, u32); 8] = [
    (3, 0),
    (4, 1),
    (0, 5),
    (2, 3),
    (7, 0),
    (1, 6),
    (3, 4),
    (5, 2),
];

pub fn load_golden(p: u32, q: u32) -> GoldenTable {
    let path = golden_dir().join(format!("cl_{p}_{q}.txt"));
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()));
    parse_golden(&text).unwrap_or_else(|e| panic!("cannot parse {}: {e}", path.display()))
}

pub fn all_golden() -> Vec<GoldenTable> {
    GOLDEN_SIGNATURES
        .iter()
        .map(|&(p, q)| load_golden(p, q))
        .collect()
}
