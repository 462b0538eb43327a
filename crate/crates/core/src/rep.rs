//! Faithful matrix representations via primitive idempotents and minimal
//! left ideals.
//!
//! For a ring-C algebra the pipeline is: search a family of pairwise
//! commuting, independent basis blades squaring to +1 whose sign-flip
//! idempotents decompose 1 into mutually annihilating primitives; realize
//! the complex unit as a basis blade iota commuting with every factor;
//! extract generator matrices from the left action on a K-basis of the
//! minimal left ideal. Nothing is trusted from tables: primitivity is
//! certified by the computed ideal dimension, faithfulness by exact rank.

use num_traits::{One, Zero};

use crate::blade::{blade_product, blades_commute, Blade};
use crate::classify::{CharPolyExponents, MinPoly};
use crate::coords::BladeOrder;
use crate::error::{GaError, Result};
use crate::linalg::{Mat, Solver};
use crate::scalar::{GaussianRational, Rational};
use crate::signature::{RingKind, Signature};
use crate::{CMat, Mv};

fn imag_unit() -> GaussianRational {
    GaussianRational::new(Rational::zero(), Rational::one())
}

/// Idempotent built as a product of factors (1 + e_T)/2 over pairwise
/// commuting, independent blades squaring to +1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Idempotent {
    pub element: Mv,
    pub factor_blades: Vec<Blade>,
}

/// Number of mutually annihilating primitive idempotents a complete family
/// needs, by the matrix form of the algebra.
fn primitive_count(sig: Signature) -> u32 {
    let d = sig.d();
    match sig.ring() {
        RingKind::R => 2 * d,
        RingKind::R2 => 4 * d,
        RingKind::H => d,
        RingKind::H2 => 2 * d,
        RingKind::C => 2 * d,
    }
}

fn product_of_factors(sig: Signature, factors: &[(Blade, bool)]) -> Mv {
    let half = Rational::new(1.into(), 2.into());
    let mut eps = Mv::one(sig);
    for &(blade, negate) in factors {
        let coeff = if negate { -half.clone() } else { half.clone() };
        let factor = Mv::from_terms(sig, [(Blade::SCALAR, half.clone()), (blade, coeff)])
            .expect("factor blade valid");
        eps = &eps * &factor;
    }
    eps
}

/// Real dimension of the left ideal Cl(p,q) * eps, by exact rank of the
/// blade multiples of eps.
fn ideal_dimension(order: &BladeOrder, eps: &Mv) -> usize {
    let n = order.len();
    let mut m = Mat::zero(n, n);
    for (j, blade) in order.blades().iter().enumerate() {
        let product = &Mv::basis_blade(*order.sig(), *blade).expect("valid blade") * eps;
        for (b, c) in product.terms() {
            m[(order.index_of(*b), j)] = c.clone();
        }
    }
    m.rank()
}

/// GF(2) independence tracker for blade masks.
#[derive(Default)]
struct MaskSpan {
    basis: Vec<u16>,
}

impl MaskSpan {
    fn reduces_to_zero(&self, mut mask: u16) -> bool {
        for &b in &self.basis {
            let lead = 15 - b.leading_zeros() as u16;
            if mask >> lead & 1 == 1 {
                mask ^= b;
            }
        }
        mask == 0
    }

    fn insert(&mut self, mask: u16) {
        self.basis.push(mask);
        self.basis.sort_unstable_by_key(|b| std::cmp::Reverse(*b));
    }

    fn remove(&mut self, mask: u16) {
        self.basis.retain(|&b| b != mask);
    }
}

/// Search a primitive idempotent: the first (in canonical blade order)
/// family of pairwise commuting, independent +1-squaring blades whose
/// all-plus product generates a minimal left ideal. Primitivity is verified
/// constructively by the ideal dimension, never assumed from tables.
pub fn primitive_idempotent(sig: Signature) -> Result<Idempotent> {
    let count = primitive_count(sig);
    debug_assert!(count.is_power_of_two());
    let family_size = count.trailing_zeros() as usize;
    let target_dim = (sig.dim() / count as u64) as usize;
    let order = BladeOrder::new(sig);

    let candidates: Vec<Blade> = order
        .blades()
        .iter()
        .copied()
        .filter(|b| !b.is_scalar() && blade_product(*b, *b, &sig).1 == 1)
        .collect();

    struct Search<'a> {
        sig: Signature,
        order: &'a BladeOrder,
        candidates: Vec<Blade>,
        family_size: usize,
        target_dim: usize,
    }

    impl Search<'_> {
        fn run(
            &self,
            start: usize,
            chosen: &mut Vec<Blade>,
            span: &mut MaskSpan,
        ) -> Option<Vec<Blade>> {
            if chosen.len() == self.family_size {
                let factors: Vec<(Blade, bool)> = chosen.iter().map(|&b| (b, false)).collect();
                let eps = product_of_factors(self.sig, &factors);
                if ideal_dimension(self.order, &eps) == self.target_dim {
                    return Some(chosen.clone());
                }
                return None;
            }
            for i in start..self.candidates.len() {
                let c = self.candidates[i];
                if span.reduces_to_zero(c.mask()) {
                    continue;
                }
                if !chosen.iter().all(|&b| blades_commute(b, c, &self.sig)) {
                    continue;
                }
                chosen.push(c);
                span.insert(c.mask());
                if let Some(found) = self.run(i + 1, chosen, span) {
                    return Some(found);
                }
                span.remove(c.mask());
                chosen.pop();
            }
            None
        }
    }

    let search = Search {
        sig,
        order: &order,
        candidates,
        family_size,
        target_dim,
    };
    let factors = search
        .run(0, &mut Vec::new(), &mut MaskSpan::default())
        .ok_or(GaError::NoCommutingFamily {
            p: sig.p(),
            q: sig.q(),
        })?;

    let element = product_of_factors(
        sig,
        &factors.iter().map(|&b| (b, false)).collect::<Vec<_>>(),
    );
    Ok(Idempotent {
        element,
        factor_blades: factors,
    })
}

/// The 2^k sign-flip idempotents of a factor family, all-plus first, in the
/// binary order of their sign patterns. They are mutually annihilating and
/// sum to 1, exactly.
pub fn annihilating_family(idem: &Idempotent) -> Vec<Mv> {
    let sig = *idem.element.sig();
    let k = idem.factor_blades.len();
    (0..1usize << k)
        .map(|pattern| {
            let factors: Vec<(Blade, bool)> = idem
                .factor_blades
                .iter()
                .enumerate()
                .map(|(j, &b)| (b, pattern >> j & 1 == 1))
                .collect();
            product_of_factors(sig, &factors)
        })
        .collect()
}

/// First basis blade squaring to -1 that commutes with every factor blade:
/// the realization of the complex scalar i inside the algebra.
fn select_iota(sig: Signature, factors: &[Blade]) -> Result<Blade> {
    let order = BladeOrder::new(sig);
    order
        .blades()
        .iter()
        .copied()
        .find(|b| {
            !b.is_scalar()
                && blade_product(*b, *b, &sig).1 == -1
                && factors.iter().all(|&f| blades_commute(*b, f, &sig))
        })
        .ok_or(GaError::NoCommutingFamily {
            p: sig.p(),
            q: sig.q(),
        })
}

/// Incremental echelon basis over the rationals, for greedy independence tests.
struct Echelon {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    fn try_insert(&mut self, mut v: Vec<Rational>) -> bool {
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let factor = v[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row.iter()) {
                    if !r.is_zero() {
                        *x = x.clone() - factor.clone() * r.clone();
                    }
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[pivot].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() / lead.clone();
            }
        }
        self.rows.push((pivot, v));
        true
    }
}

/// K-basis of the minimal left ideal Cl(p,q) * eps, as the list of blade
/// multipliers m_i with basis elements m_i * eps. Ring C only; the complex
/// unit is realized by the iota blade of the representation.
pub fn ideal_basis(idem: &Idempotent) -> Result<Vec<Mv>> {
    let sig = *idem.element.sig();
    if sig.ring() != RingKind::C {
        return Err(GaError::UnsupportedRing {
            ring: sig.ring(),
            needed: "C",
        });
    }
    let data = IdealData::build(sig, idem)?;
    Ok(data
        .multipliers
        .iter()
        .map(|&m| &Mv::basis_blade(sig, m).expect("valid blade") * &idem.element)
        .collect())
}

struct IdealData {
    order: BladeOrder,
    iota: Mv,
    multipliers: Vec<Blade>,
    solver: Solver<Rational>,
}

impl IdealData {
    fn build(sig: Signature, idem: &Idempotent) -> Result<IdealData> {
        let order = BladeOrder::new(sig);
        let iota_blade = select_iota(sig, &idem.factor_blades)?;
        let iota = Mv::basis_blade(sig, iota_blade).expect("valid blade");
        let dim = 2 * sig.d() as usize;

        let mut multipliers = Vec::with_capacity(dim);
        let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(2 * dim);
        let mut echelon = Echelon::new();
        for &blade in order.blades() {
            if multipliers.len() == dim {
                break;
            }
            let m = Mv::basis_blade(sig, blade).expect("valid blade");
            let s = &m * &idem.element;
            let s_coords = order.coords(&s);
            if !echelon.try_insert(s_coords.clone()) {
                continue;
            }
            let t = &(&m * &iota) * &idem.element;
            let t_coords = order.coords(&t);
            if !echelon.try_insert(t_coords.clone()) {
                return Err(GaError::Inconsistency(format!(
                    "iota partner of {blade} is dependent: K does not act freely on the ideal"
                )));
            }
            multipliers.push(blade);
            columns.push(s_coords);
            columns.push(t_coords);
        }
        if multipliers.len() != dim {
            return Err(GaError::Inconsistency(format!(
                "ideal K-dimension {} does not reach 2d = {dim} for {sig}",
                multipliers.len()
            )));
        }

        let basis = Mat::from_fn(order.len(), 2 * dim, |i, j| columns[j][i].clone());
        Ok(IdealData {
            order,
            iota,
            multipliers,
            solver: Solver::new(&basis),
        })
    }

    /// K-matrix of left multiplication by `a` on the ideal basis.
    fn matrix_of(&self, sig: Signature, eps: &Mv, a: &Mv) -> Result<CMat> {
        let dim = self.multipliers.len();
        let mut m = Mat::zero(dim, dim);
        for (j, &multiplier) in self.multipliers.iter().enumerate() {
            let s_j = &Mv::basis_blade(sig, multiplier).expect("valid blade") * eps;
            let w = a * &s_j;
            let x = self
                .solver
                .solve(&self.order.coords(&w))
                .ok_or_else(|| GaError::Inconsistency("left action leaves the ideal".into()))?;
            for i in 0..dim {
                m[(i, j)] = GaussianRational::new(x[2 * i].clone(), x[2 * i + 1].clone());
            }
        }
        Ok(m)
    }
}

/// Spinor representation of a ring-C algebra: generator images over the
/// Gaussian rationals, with the scalar i realized by the k-generator blade.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    sig: Signature,
    idempotent: Idempotent,
    multipliers: Vec<Blade>,
    iota: Mv,
    gen_images: Vec<CMat>,
    blade_images: Vec<CMat>,
    recon: Solver<Rational>,
    order: BladeOrder,
    side: usize,
}

/// Build the spinor representation. Errors for rings other than C.
pub fn spinor_representation(sig: Signature) -> Result<MatrixRep> {
    if sig.ring() != RingKind::C {
        return Err(GaError::UnsupportedRing {
            ring: sig.ring(),
            needed: "C",
        });
    }
    let idem = primitive_idempotent(sig)?;
    let data = IdealData::build(sig, &idem)?;
    let side = data.multipliers.len();

    let mut gen_images = Vec::with_capacity(sig.n() as usize);
    for k in 1..=sig.n() {
        let ek = Mv::basis_blade(sig, Blade::from_indices(&[k]).expect("index valid"))
            .expect("valid blade");
        gen_images.push(data.matrix_of(sig, &idem.element, &ek)?);
    }

    // images of all blades by mask, lowest generator split off first
    let total = sig.dim() as usize;
    let mut by_mask: Vec<CMat> = Vec::with_capacity(total);
    by_mask.push(Mat::identity(side));
    for mask in 1..total as u16 {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let img = gen_images[low].mul(&by_mask[rest as usize]);
        by_mask.push(img);
    }

    // orientation: omega must act as +i, matching the Spec sign convention
    let omega_image = &by_mask[total - 1];
    let i = imag_unit();
    let mut iota = data.iota.clone();
    let conjugate_all = if *omega_image == Mat::identity(side).scale(&i) {
        false
    } else if *omega_image == Mat::identity(side).scale(&(-i.clone())) {
        true
    } else {
        return Err(GaError::Inconsistency(
            "omega does not act as a complex scalar".into(),
        ));
    };
    if conjugate_all {
        iota = -iota;
        for m in gen_images.iter_mut().chain(by_mask.iter_mut()) {
            *m = m.map(|z| z.conj());
        }
    }

    // reconstruction system: blade images as real coordinate columns
    let order = BladeOrder::new(sig);
    let flat = 2 * side * side;
    debug_assert_eq!(flat, total);
    let recon_matrix = Mat::from_fn(flat, total, |i, j| {
        let img = &by_mask[order.blades()[j].mask() as usize];
        let (entry, re) = (i / 2, i % 2 == 0);
        let (row, col) = (entry / side, entry % side);
        if re {
            img[(row, col)].re.clone()
        } else {
            img[(row, col)].im.clone()
        }
    });
    let recon = Solver::new(&recon_matrix);
    if recon.rank() != total {
        return Err(GaError::Inconsistency(format!(
            "blade images are not linearly independent for {sig}"
        )));
    }

    Ok(MatrixRep {
        sig,
        idempotent: idem,
        multipliers: data.multipliers,
        iota,
        gen_images,
        blade_images: by_mask,
        recon,
        order,
        side,
    })
}

impl MatrixRep {
    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    /// Matrix side length 2d.
    pub fn dimension(&self) -> usize {
        self.side
    }

    pub fn idempotent(&self) -> &Idempotent {
        &self.idempotent
    }

    /// The blade realizing the complex scalar i (sign-normalized so that
    /// omega maps to +i times the identity).
    pub fn k_generator(&self) -> &Mv {
        &self.iota
    }

    /// Image of the generator e_k (1-based).
    pub fn generator_image(&self, k: u32) -> &CMat {
        &self.gen_images[(k - 1) as usize]
    }

    /// Spinor basis elements m_i * eps of the minimal left ideal.
    pub fn ideal_basis(&self) -> Vec<Mv> {
        self.multipliers
            .iter()
            .map(|&m| {
                &Mv::basis_blade(self.sig, m).expect("valid blade") * &self.idempotent.element
            })
            .collect()
    }

    pub fn multipliers(&self) -> &[Blade] {
        &self.multipliers
    }

    pub fn blade_image(&self, blade: Blade) -> &CMat {
        &self.blade_images[blade.mask() as usize]
    }

    /// Algebra homomorphism Cl(p,q) -> M(2d, C).
    pub fn represent(&self, a: &Mv) -> Result<CMat> {
        if a.sig() != &self.sig {
            return Err(GaError::SignatureMismatch);
        }
        let mut out = Mat::zero(self.side, self.side);
        for (blade, coeff) in a.terms() {
            let img = self.blade_image(*blade);
            let c = GaussianRational::new(coeff.clone(), Rational::zero());
            out = out.add(&img.scale(&c));
        }
        Ok(out)
    }

    /// Inverse of `represent`: exact solve over the blade-image span.
    pub fn reconstruct(&self, m: &CMat) -> Result<Mv> {
        if m.rows() != self.side || m.cols() != self.side {
            return Err(GaError::SingularSystem);
        }
        let mut rhs = Vec::with_capacity(2 * self.side * self.side);
        for row in 0..self.side {
            for col in 0..self.side {
                rhs.push(m[(row, col)].re.clone());
                rhs.push(m[(row, col)].im.clone());
            }
        }
        let coords = self.recon.solve(&rhs).ok_or(GaError::SingularSystem)?;
        Ok(self.order.from_coords(&coords))
    }

    /// Characteristic and minimal polynomial of a root of -1, from the exact
    /// eigenvalue multiplicities of its matrix: n1 = dim ker(M - i), n2 =
    /// dim ker(M + i). Cross-checks n1 - n2 = 2 d Spec(f).
    pub fn char_min_poly(&self, f: &Mv) -> Result<(CharPolyExponents, MinPoly)> {
        if !f.is_root_of_minus_one() {
            return Err(GaError::NotARoot);
        }
        let m = self.represent(f)?;
        let i_id = Mat::identity(self.side).scale(&imag_unit());
        let n1 = self.side - m.sub(&i_id).rank();
        let n2 = self.side - m.add(&i_id).rank();
        if n1 + n2 != self.side {
            return Err(GaError::Inconsistency(format!(
                "eigenspace dimensions {n1} + {n2} do not fill 2d = {}",
                self.side
            )));
        }
        let spec = f.spec()?;
        let d = Rational::from_integer((self.sig.d() as i64).into());
        let defect = Rational::from_integer((n1 as i64 - n2 as i64).into());
        if defect != spec.clone() * d * Rational::from_integer(2.into()) {
            return Err(GaError::Inconsistency(format!(
                "n1 - n2 = {n1} - {n2} disagrees with 2 d Spec(f) = 2 d {spec}"
            )));
        }
        let min_poly = if n2 == 0 {
            MinPoly::TMinusI
        } else if n1 == 0 {
            MinPoly::TPlusI
        } else {
            MinPoly::TSquaredPlusOne
        };
        Ok((
            CharPolyExponents {
                n1: n1 as u32,
                n2: n2 as u32,
            },
            min_poly,
        ))
    }
}

/// Realification: replace every entry a + b i with the 2x2 block
/// [[a, -b], [b, a]]. Block structure is preserved under multiplication;
/// tr_R = 2 Re(tr_C) and det_R = |det_C|^2.
pub fn realify(m: &CMat) -> Mat<Rational> {
    let (rows, cols) = (m.rows(), m.cols());
    Mat::from_fn(2 * rows, 2 * cols, |i, j| {
        let z = &m[(i / 2, j / 2)];
        match (i % 2, j % 2) {
            (0, 0) | (1, 1) => z.re.clone(),
            (0, 1) => -z.im.clone(),
            (1, 0) => z.im.clone(),
            _ => unreachable!(),
        }
    })
}

/// Complex trace of a square Gaussian-rational matrix.
pub fn complex_trace(m: &CMat) -> GaussianRational {
    m.trace()
}
