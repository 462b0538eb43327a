//! Square roots of -1: construction, conjugacy classification, centralizers,
//! conjugators, connected-component labels at d = 1, double-algebra splits,
//! and the n = 2 root manifolds.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::blade::{blade_product, Blade};
use crate::classify::{class_descriptor, classify_signature, CharPolyExponents, MinPoly};
use crate::coords::BladeOrder;
use crate::error::{GaError, Result};
use crate::linalg::Solver;
use crate::rep::{annihilating_family, primitive_idempotent, spinor_representation, MatrixRep};
use crate::scalar::{int, ratio, Rational};
use crate::signature::{RingKind, Signature};
use crate::Mv;

/// Exact test for f * f = -1.
pub fn is_root(f: &Mv) -> bool {
    f.is_root_of_minus_one()
}

/// Ring C bijection between idempotents and roots: f = omega (2 eps - 1).
pub fn root_from_idempotent(eps: &Mv, sig: Signature) -> Result<Mv> {
    if sig.ring() != RingKind::C {
        return Err(GaError::UnsupportedRing {
            ring: sig.ring(),
            needed: "C",
        });
    }
    if eps.sig() != &sig {
        return Err(GaError::SignatureMismatch);
    }
    if !eps.is_idempotent() {
        return Err(GaError::NotIdempotent);
    }
    let omega = Mv::pseudoscalar(sig);
    let two_eps_minus_one = eps.scale(&int(2)).try_sub(&Mv::one(sig))?;
    Ok(&omega * &two_eps_minus_one)
}

/// Inverse of `root_from_idempotent`: eps = (1 - omega f) / 2.
pub fn idempotent_from_root(f: &Mv) -> Result<Mv> {
    let sig = *f.sig();
    if sig.ring() != RingKind::C {
        return Err(GaError::UnsupportedRing {
            ring: sig.ring(),
            needed: "C",
        });
    }
    if !is_root(f) {
        return Err(GaError::NotARoot);
    }
    let omega = Mv::pseudoscalar(sig);
    let eps = Mv::one(sig).try_sub(&(&omega * f))?.scale(&ratio(1, 2));
    debug_assert!(eps.is_idempotent());
    Ok(eps)
}

/// Canonical representative of the class with index k.
///
/// Ring C: f = omega (2 eps - 1) where eps sums the first d + k members of
/// the annihilating family in sign-pattern order (all-plus first); k = +-d
/// gives +-omega exactly. Other rings (and their single k = 0 class): the
/// first basis blade squaring to -1.
pub fn representative_root(sig: Signature, k: i32) -> Result<Mv> {
    let d = sig.d() as i32;
    if sig.ring() == RingKind::C {
        if k.abs() > d {
            return Err(GaError::InvalidClassIndex {
                k: k.into(),
                d: sig.d(),
            });
        }
        let family = annihilating_family(&primitive_idempotent(sig)?);
        debug_assert_eq!(family.len(), 2 * d as usize);
        let take = (d + k) as usize;
        let eps = family[..take].iter().fold(Mv::zero(sig), |acc, e| &acc + e);
        let f = root_from_idempotent(&eps, sig)?;
        let expected_spec = Rational::new(k.into(), (d as i64).into());
        if f.spec()? != expected_spec {
            return Err(GaError::Inconsistency(format!(
                "constructed representative for k = {k} has Spec {} != {expected_spec}",
                f.spec()?
            )));
        }
        debug_assert!(is_root(&f));
        Ok(f)
    } else {
        if k != 0 {
            return Err(GaError::InvalidClassIndex {
                k: k.into(),
                d: sig.d(),
            });
        }
        let order = BladeOrder::new(sig);
        let blade = order
            .blades()
            .iter()
            .copied()
            .find(|b| !b.is_scalar() && blade_product(*b, *b, &sig).1 == -1)
            .ok_or(GaError::NoCommutingFamily {
                p: sig.p(),
                q: sig.q(),
            })?;
        Mv::basis_blade(sig, blade)
    }
}

/// Basis of the centralizer {g : f g = g f}, by exact null-space computation
/// of the commutator operator over the blade basis. Basis vectors come out
/// in canonical (grade, mask) order of their free coordinates.
pub fn centralizer(f: &Mv) -> Vec<Mv> {
    let order = BladeOrder::new(*f.sig());
    let commutator = order.left_mul_matrix(f).sub(&order.right_mul_matrix(f));
    commutator
        .null_space()
        .iter()
        .map(|v| order.from_coords(v))
        .collect()
}

/// Two-sided inverse via the left-regular representation; `None` when the
/// element is not invertible.
pub fn inverse(v: &Mv) -> Option<Mv> {
    let order = BladeOrder::new(*v.sig());
    let solver = Solver::new(&order.left_mul_matrix(v));
    if solver.rank() != order.len() {
        return None;
    }
    let mut unit = vec![Rational::zero(); order.len()];
    unit[order.index_of(Blade::SCALAR)] = Rational::one();
    let x = solver.solve(&unit)?;
    let inv = order.from_coords(&x);
    debug_assert_eq!(&inv * v, Mv::one(*v.sig()));
    Some(inv)
}

fn class_index(f: &Mv) -> Result<i32> {
    let sig = *f.sig();
    if sig.ring() != RingKind::C {
        return Ok(0);
    }
    let kd = f.spec()? * int(sig.d() as i64);
    match crate::scalar::as_integer(&kd) {
        Some(k) => Ok(i64::try_from(&k)
            .map_err(|_| GaError::Inconsistency(format!("class index {k} out of range")))?
            as i32),
        None => Err(GaError::Inconsistency(format!(
            "d Spec(f) = {kd} is not an integer; f is not classified by any k"
        ))),
    }
}

/// Exact conjugator search: an invertible v with v^-1 f v = g, or `None`
/// when the classes differ.
///
/// Tries the direct candidate v = 1 - f g first, then the null space of the
/// intertwiner system f v = v g, then seeded random combinations from it.
pub fn find_conjugator<R: Rng + ?Sized>(f: &Mv, g: &Mv, rng: &mut R) -> Result<Option<Mv>> {
    if f.sig() != g.sig() {
        return Err(GaError::SignatureMismatch);
    }
    if !is_root(f) || !is_root(g) {
        return Err(GaError::NotARoot);
    }
    let sig = *f.sig();
    if f == g {
        return Ok(Some(Mv::one(sig)));
    }
    if sig.ring() == RingKind::C && class_index(f)? != class_index(g)? {
        return Ok(None);
    }

    let accept = |v: &Mv| -> Option<Mv> {
        let v_inv = inverse(v)?;
        let conjugated = &(&v_inv * f) * v;
        (&conjugated == g).then(|| v.clone())
    };

    // direct construction: f (1 - f g) = f + g = (1 - f g) g
    let direct = Mv::one(sig).try_sub(&(f * g))?;
    if !direct.is_zero() {
        if let Some(v) = accept(&direct) {
            return Ok(Some(v));
        }
    }

    let order = BladeOrder::new(sig);
    let intertwiner = order.left_mul_matrix(f).sub(&order.right_mul_matrix(g));
    let basis: Vec<Mv> = intertwiner
        .null_space()
        .iter()
        .map(|v| order.from_coords(v))
        .collect();
    if basis.is_empty() {
        return Ok(None);
    }
    for v in &basis {
        if let Some(v) = accept(v) {
            return Ok(Some(v));
        }
    }
    for _ in 0..200 {
        let mut candidate = Mv::zero(sig);
        for v in &basis {
            let c: i64 = rng.gen_range(-4..=4);
            if c != 0 {
                candidate = &candidate + &v.scale(&int(c));
            }
        }
        if candidate.is_zero() {
            continue;
        }
        if let Some(v) = accept(&candidate) {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// `find_conjugator` with a deterministic seeded generator.
pub fn find_conjugator_seeded(f: &Mv, g: &Mv, seed: u64) -> Result<Option<Mv>> {
    find_conjugator(f, g, &mut StdRng::seed_from_u64(seed))
}

/// Everything known about the conjugacy class of one root.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootClassReport {
    pub p: u32,
    pub q: u32,
    pub k: i32,
    #[serde(serialize_with = "crate::report::serialize_opt_rational")]
    pub spec: Option<Rational>,
    #[serde(serialize_with = "crate::report::serialize_rational")]
    pub scal: Rational,
    pub class_dim: u64,
    pub centralizer_dim: u64,
    #[serde(serialize_with = "crate::report::serialize_multivector")]
    pub representative: Mv,
    pub char_poly: Option<CharPolyExponents>,
    pub min_poly: MinPoly,
    pub ordinary: bool,
    #[serde(skip)]
    pub centralizer_basis: Vec<Mv>,
}

/// Classify a root: k from d Spec(f), dimensions from the structure formulas
/// cross-checked against the exact centralizer null space, characteristic
/// and minimal polynomials from the spinor representation (ring C).
pub fn class_of(f: &Mv) -> Result<RootClassReport> {
    let sig = *f.sig();
    let rep = if sig.ring() == RingKind::C {
        Some(spinor_representation(sig)?)
    } else {
        None
    };
    class_of_with_rep(f, rep.as_ref())
}

/// `class_of` reusing an already built representation.
pub fn class_of_with_rep(f: &Mv, rep: Option<&MatrixRep>) -> Result<RootClassReport> {
    if !is_root(f) {
        return Err(GaError::NotARoot);
    }
    let sig = *f.sig();
    let cls = classify_signature(sig)?;
    let k = class_index(f)?;
    let descriptor = class_descriptor(&cls, k)?;

    let basis = centralizer(f);
    if basis.len() as u64 != descriptor.centralizer_dim {
        return Err(GaError::Inconsistency(format!(
            "computed centralizer dimension {} != formula value {} for k = {k} in {sig}",
            basis.len(),
            descriptor.centralizer_dim
        )));
    }

    let char_poly = match rep {
        Some(rep) => {
            let (exps, _) = rep.char_min_poly(f)?;
            Some(exps)
        }
        None => None,
    };
    let min_poly = match rep {
        Some(rep) => rep.char_min_poly(f)?.1,
        None => MinPoly::TSquaredPlusOne,
    };

    Ok(RootClassReport {
        p: sig.p(),
        q: sig.q(),
        k,
        spec: if sig.n() % 2 == 1 {
            Some(f.spec()?)
        } else {
            None
        },
        scal: f.scal(),
        class_dim: sig.dim() - basis.len() as u64,
        centralizer_dim: basis.len() as u64,
        representative: f.clone(),
        char_poly,
        min_poly,
        ordinary: k == 0,
        centralizer_basis: basis,
    })
}

/// Reports for every conjugacy class of the algebra, k descending.
pub fn all_class_reports(sig: Signature) -> Result<Vec<RootClassReport>> {
    if sig.ring() == RingKind::C {
        let rep = spinor_representation(sig)?;
        let d = sig.d() as i32;
        (-d..=d)
            .rev()
            .map(|k| class_of_with_rep(&representative_root(sig, k)?, Some(&rep)))
            .collect()
    } else {
        Ok(vec![class_of_with_rep(
            &representative_root(sig, 0)?,
            None,
        )?])
    }
}

// ---------------------------------------------------------------------------
// double algebras and connected-component labels at d = 1
// ---------------------------------------------------------------------------

/// Central split of a double algebra (rings R^2, H^2) along
/// eps_+- = (1 +- omega)/2.
#[derive(Debug, Clone, PartialEq)]
pub struct DoubleSplit {
    sig: Signature,
    pub eps_plus: Mv,
    pub eps_minus: Mv,
}

pub fn double_split(sig: Signature) -> Result<DoubleSplit> {
    if !sig.ring().is_double() {
        return Err(GaError::UnsupportedRing {
            ring: sig.ring(),
            needed: "R^2 or H^2",
        });
    }
    let omega = Mv::pseudoscalar(sig);
    debug_assert_eq!(&omega * &omega, Mv::one(sig));
    let half = ratio(1, 2);
    let eps_plus = Mv::one(sig).try_add(&omega)?.scale(&half);
    let eps_minus = Mv::one(sig).try_sub(&omega)?.scale(&half);
    Ok(DoubleSplit {
        sig,
        eps_plus,
        eps_minus,
    })
}

impl DoubleSplit {
    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    /// Central projections (A eps_+, A eps_-).
    pub fn project(&self, a: &Mv) -> (Mv, Mv) {
        (a * &self.eps_plus, a * &self.eps_minus)
    }

    /// Factor components (a, b) with A = a eps_+ + b eps_-, transported to
    /// the subalgebra generated by e_1 .. e_{n-1}: exactly the terms of
    /// 2 A eps_+- free of the last generator.
    pub fn components(&self, a: &Mv) -> (Mv, Mv) {
        let n = self.sig.n();
        let restrict = |x: &Mv| -> Mv {
            Mv::from_terms(
                self.sig,
                x.terms()
                    .filter(|(b, _)| !b.contains(n))
                    .map(|(b, c)| (*b, c.clone() * int(2))),
            )
            .expect("blades already valid")
        };
        let (plus, minus) = self.project(a);
        (restrict(&plus), restrict(&minus))
    }

    /// Inverse of `components`.
    pub fn assemble(&self, a: &Mv, b: &Mv) -> Mv {
        &(a * &self.eps_plus) + &(b * &self.eps_minus)
    }

    /// The swap automorphism exchanging the two factors; maps omega to
    /// -omega and is an involution.
    pub fn swap(&self, x: &Mv) -> Mv {
        let (a, b) = self.components(x);
        self.assemble(&b, &a)
    }
}

/// Connected-component label of a root for the d = 1 algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ComponentLabel {
    /// M(2,R) component with matrix invariant b - c >= 2 (beta >= 1 in
    /// Cl(2,0) coordinates).
    BetaGeqOne,
    /// The mirror component b - c <= -2 (beta <= -1).
    BetaLeqMinusOne,
    C1,
    C2,
    C3,
    C4,
}

impl fmt::Display for ComponentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ComponentLabel::BetaGeqOne => "beta>=1",
            ComponentLabel::BetaLeqMinusOne => "beta<=-1",
            ComponentLabel::C1 => "c1",
            ComponentLabel::C2 => "c2",
            ComponentLabel::C3 => "c3",
            ComponentLabel::C4 => "c4",
        };
        write!(f, "{s}")
    }
}

fn e12_blade() -> Blade {
    Blade::from_indices(&[1, 2]).expect("static blade")
}

/// Sign classification helper: Some(true) for >= 1, Some(false) for <= -1.
fn unit_sign(value: &Rational) -> Option<bool> {
    if *value >= int(1) {
        Some(true)
    } else if *value <= int(-1) {
        Some(false)
    } else {
        None
    }
}

/// Connected-component label of a root in Cl(2,0), Cl(1,1) (two components
/// of M(2,R)) or Cl(2,1) (four components c1..c4 of M(2,R^2)).
///
/// Cl(2,0): the invariant is the e12 coefficient beta, |beta| >= 1.
/// Cl(1,1): mapped onto M(2,R) via e1 -> [[1,0],[0,-1]], e2 -> [[0,1],[-1,0]];
/// the matrix criterion b - c >= 2 becomes -2 b2 >= 2, so the invariant
/// coefficient is b2 (of e2) with the component pinned by its sign.
pub fn component_of_d1(f: &Mv) -> Result<ComponentLabel> {
    let sig = *f.sig();
    if !is_root(f) {
        return Err(GaError::NotARoot);
    }
    match (sig.p(), sig.q()) {
        (2, 0) => {
            let beta = f.coeff(e12_blade());
            match unit_sign(&beta) {
                Some(true) => Ok(ComponentLabel::BetaGeqOne),
                Some(false) => Ok(ComponentLabel::BetaLeqMinusOne),
                None => Err(GaError::Inconsistency(format!("root with |beta| < 1: {f}"))),
            }
        }
        (1, 1) => {
            let b2 = f.coeff(Blade::from_indices(&[2]).expect("static blade"));
            match unit_sign(&(-b2)) {
                Some(true) => Ok(ComponentLabel::BetaGeqOne),
                Some(false) => Ok(ComponentLabel::BetaLeqMinusOne),
                None => Err(GaError::Inconsistency(format!("root with |b2| < 1: {f}"))),
            }
        }
        (2, 1) => {
            let split = double_split(sig)?;
            let (a, b) = split.components(f);
            let beta = a.coeff(e12_blade());
            let beta_prime = b.coeff(e12_blade());
            match (unit_sign(&beta), unit_sign(&beta_prime)) {
                (Some(true), Some(true)) => Ok(ComponentLabel::C1),
                (Some(true), Some(false)) => Ok(ComponentLabel::C2),
                (Some(false), Some(true)) => Ok(ComponentLabel::C3),
                (Some(false), Some(false)) => Ok(ComponentLabel::C4),
                _ => Err(GaError::Inconsistency(format!("root with |beta| < 1: {f}"))),
            }
        }
        _ => Err(GaError::UnsupportedSignature(
            "component labels are defined for Cl(2,0), Cl(1,1) and Cl(2,1)",
        )),
    }
}

/// Permutation of the four components c1..c4, as the images of (c1,c2,c3,c4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KleinPermutation {
    pub images: [u8; 4],
}

impl KleinPermutation {
    pub fn apply(&self, label: ComponentLabel) -> ComponentLabel {
        let index = match label {
            ComponentLabel::C1 => 0,
            ComponentLabel::C2 => 1,
            ComponentLabel::C3 => 2,
            ComponentLabel::C4 => 3,
            _ => panic!("Klein permutations act on c1..c4"),
        };
        match self.images[index] {
            1 => ComponentLabel::C1,
            2 => ComponentLabel::C2,
            3 => ComponentLabel::C3,
            4 => ComponentLabel::C4,
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for KleinPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.images == [1, 2, 3, 4] {
            return write!(f, "identity");
        }
        let mut seen = [false; 4];
        let mut first = true;
        for start in 0..4 {
            if seen[start] || self.images[start] as usize == start + 1 {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut next = self.images[start] as usize;
            while next != start + 1 {
                cycle.push(next);
                seen[next - 1] = true;
                next = self.images[next - 1] as usize;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let names: Vec<String> = cycle.iter().map(|i| format!("c{i}")).collect();
            write!(f, "({})", names.join(","))?;
        }
        Ok(())
    }
}

/// Tabulated action on the components of the square roots of -1 in M(2,R^2):
/// inner automorphisms give the Klein-group permutations; automorphisms in
/// the swap coset give the remaining isometries of the square.
pub fn component_permutation(
    det_plus_positive: bool,
    det_minus_positive: bool,
    inner: bool,
) -> KleinPermutation {
    let images = if inner {
        match (det_plus_positive, det_minus_positive) {
            (true, true) => [1, 2, 3, 4],
            (true, false) => [2, 1, 4, 3],
            (false, true) => [3, 4, 1, 2],
            (false, false) => [4, 3, 2, 1],
        }
    } else {
        match (det_plus_positive, det_minus_positive) {
            (true, true) => [1, 3, 2, 4],
            (true, false) => [2, 4, 1, 3],
            (false, true) => [3, 1, 4, 2],
            (false, false) => [4, 2, 3, 1],
        }
    };
    KleinPermutation { images }
}

/// Determinant of an element of the d = 1 subalgebra span {1, e1, e2, e12}
/// under its 2x2 real matrix picture: the Clifford-conjugation norm g conj(g).
fn d1_det(g: &Mv) -> Result<Rational> {
    let norm = g * &g.clifford_conjugation();
    if norm.term_count() > 1 || (!norm.is_zero() && norm.grades() != vec![0]) {
        return Err(GaError::Inconsistency(format!("norm of {g} is not scalar")));
    }
    Ok(norm.scal())
}

/// Random exact root of -1 in the requested component.
///
/// Uses rational hyperbola points beta = (t^2+1)/(2t), which satisfy
/// beta^2 - ((t^2-1)/(2t))^2 = 1 exactly.
pub fn sample_root_d1<R: Rng + ?Sized>(
    sig: Signature,
    label: ComponentLabel,
    rng: &mut R,
) -> Result<Mv> {
    match (sig.p(), sig.q(), label) {
        (2, 0, ComponentLabel::BetaGeqOne) => Ok(m2r_root(sig, true, rng)),
        (2, 0, ComponentLabel::BetaLeqMinusOne) => Ok(m2r_root(sig, false, rng)),
        (1, 1, ComponentLabel::BetaGeqOne) => Ok(cl11_root(sig, true, rng)),
        (1, 1, ComponentLabel::BetaLeqMinusOne) => Ok(cl11_root(sig, false, rng)),
        (2, 1, label) => {
            let (plus, minus) = match label {
                ComponentLabel::C1 => (true, true),
                ComponentLabel::C2 => (true, false),
                ComponentLabel::C3 => (false, true),
                ComponentLabel::C4 => (false, false),
                _ => {
                    return Err(GaError::UnsupportedSignature(
                        "Cl(2,1) components are c1..c4",
                    ))
                }
            };
            let split = double_split(sig)?;
            let a = m2r_root(sig, plus, rng);
            let b = m2r_root(sig, minus, rng);
            let f = split.assemble(&a, &b);
            debug_assert!(is_root(&f));
            Ok(f)
        }
        _ => Err(GaError::UnsupportedSignature(
            "sampling is defined for Cl(2,0), Cl(1,1) and Cl(2,1)",
        )),
    }
}

fn positive_t<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    ratio(rng.gen_range(1..=12), rng.gen_range(1..=12))
}

/// Root b1 e1 + b2 e2 + beta e12 with beta^2 = b1^2 + b2^2 + 1, in the
/// Euclidean-plane coordinates (valid inside Cl(2,0) and inside the
/// e1,e2 subalgebra of Cl(2,1)).
fn m2r_root<R: Rng + ?Sized>(sig: Signature, beta_positive: bool, rng: &mut R) -> Mv {
    let t = positive_t(rng);
    let two = int(2);
    let beta = (t.clone() * t.clone() + int(1)) / (two.clone() * t.clone());
    let u = (t.clone() * t.clone() - int(1)) / (two * t);
    let u = if rng.gen() { u } else { -u };
    let (b1, b2) = if rng.gen() {
        (u, Rational::zero())
    } else {
        (Rational::zero(), u)
    };
    let beta = if beta_positive { beta } else { -beta };
    Mv::from_terms(
        sig,
        [
            (Blade::from_indices(&[1]).expect("static"), b1),
            (Blade::from_indices(&[2]).expect("static"), b2),
            (e12_blade(), beta),
        ],
    )
    .expect("valid blades")
}

/// Root of -1 in Cl(1,1): b2^2 = b1^2 + beta^2 + 1; the b2 sign picks the
/// sheet. `first_component` selects the b - c >= 2 sheet, i.e. b2 <= -1.
fn cl11_root<R: Rng + ?Sized>(sig: Signature, first_component: bool, rng: &mut R) -> Mv {
    let t = positive_t(rng);
    let two = int(2);
    let b2 = (t.clone() * t.clone() + int(1)) / (two.clone() * t.clone());
    let beta = (t.clone() * t.clone() - int(1)) / (two * t);
    let beta = if rng.gen() { beta } else { -beta };
    let b2 = if first_component { -b2 } else { b2 };
    Mv::from_terms(
        sig,
        [
            (Blade::from_indices(&[2]).expect("static"), b2),
            (e12_blade(), beta),
        ],
    )
    .expect("valid blades")
}

/// Random invertible element of the d = 1 subalgebra with the requested
/// determinant sign (in Cl(2,0), Cl(1,1), or the e1,e2 span of Cl(2,1)).
pub fn sample_invertible_d1<R: Rng + ?Sized>(
    sig: Signature,
    det_positive: bool,
    rng: &mut R,
) -> Result<Mv> {
    loop {
        let coeff = |rng: &mut R| ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3));
        let g = Mv::from_terms(
            sig,
            [
                (Blade::SCALAR, coeff(rng)),
                (Blade::from_indices(&[1]).expect("static"), coeff(rng)),
                (Blade::from_indices(&[2]).expect("static"), coeff(rng)),
                (e12_blade(), coeff(rng)),
            ],
        )?;
        let det = d1_det(&g)?;
        if det.is_zero() {
            continue;
        }
        if det.is_positive() == det_positive {
            return Ok(g);
        }
    }
}

/// Experimental verification of the component permutation tables on Cl(2,1):
/// conjugates sampled roots in each component by explicit pairs (g, g') of
/// the given determinant signs (composing with the swap automorphism for the
/// outer case) and confirms the observed relabeling. Returns the table.
pub fn component_permutation_check<R: Rng + ?Sized>(
    sig: Signature,
    det_plus_positive: bool,
    det_minus_positive: bool,
    inner: bool,
    samples_per_component: usize,
    rng: &mut R,
) -> Result<KleinPermutation> {
    if (sig.p(), sig.q()) != (2, 1) {
        return Err(GaError::UnsupportedSignature(
            "component tables live in Cl(2,1)",
        ));
    }
    let table = component_permutation(det_plus_positive, det_minus_positive, inner);
    let split = double_split(sig)?;
    for label in [
        ComponentLabel::C1,
        ComponentLabel::C2,
        ComponentLabel::C3,
        ComponentLabel::C4,
    ] {
        for _ in 0..samples_per_component {
            let f = sample_root_d1(sig, label, rng)?;
            let g_plus = sample_invertible_d1(sig, det_plus_positive, rng)?;
            let g_minus = sample_invertible_d1(sig, det_minus_positive, rng)?;
            let conjugator = split.assemble(&g_plus, &g_minus);
            let inv = inverse(&conjugator)
                .ok_or_else(|| GaError::Inconsistency("assembled conjugator is singular".into()))?;
            let source = if inner { f.clone() } else { split.swap(&f) };
            let mapped = &(&inv * &source) * &conjugator;
            let observed = component_of_d1(&mapped)?;
            let expected = table.apply(label);
            if observed != expected {
                return Err(GaError::Inconsistency(format!(
                    "component {label} mapped to {observed}, table says {expected} \
                     (dets {det_plus_positive}/{det_minus_positive}, inner = {inner})"
                )));
            }
        }
    }
    Ok(table)
}

// ---------------------------------------------------------------------------
// n = 2 root manifolds
// ---------------------------------------------------------------------------

/// Exact check of the n = 2 root constraint: alpha = 0 and
/// beta^2 = b1^2 e2^2 + b2^2 e1^2 + e1^2 e2^2.
pub fn manifold_constraint(f: &Mv) -> Result<bool> {
    let sig = *f.sig();
    if sig.n() != 2 {
        return Err(GaError::UnsupportedSignature(
            "root manifolds are an n = 2 construct",
        ));
    }
    let s1 = int(sig.generator_square(1) as i64);
    let s2 = int(sig.generator_square(2) as i64);
    let alpha = f.scal();
    let b1 = f.coeff(Blade::from_indices(&[1]).expect("static"));
    let b2 = f.coeff(Blade::from_indices(&[2]).expect("static"));
    let beta = f.coeff(e12_blade());
    let rhs = b1.clone() * b1 * s2.clone() + b2.clone() * b2 * s1.clone() + s1 * s2;
    Ok(alpha.is_zero() && beta.clone() * beta == rhs)
}

/// One sampled point of the root manifold. The grid coordinates are exact;
/// beta is the (generally irrational) solved coordinate, emitted as a float
/// for visualization output only.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ManifoldPoint {
    #[serde(serialize_with = "crate::report::serialize_rational")]
    pub b1: Rational,
    #[serde(serialize_with = "crate::report::serialize_rational")]
    pub b2: Rational,
    pub beta: f64,
}

/// Sweep (b1, b2) over a uniform grid on [-2, 2]^2 and emit the real
/// solutions beta = +-sqrt(b1^2 e2^2 + b2^2 e1^2 + e1^2 e2^2) where the
/// radicand is nonnegative.
pub fn sample_manifold(sig: Signature, grid: u32) -> Result<Vec<ManifoldPoint>> {
    if sig.n() != 2 {
        return Err(GaError::UnsupportedSignature(
            "root manifolds are an n = 2 construct",
        ));
    }
    let s1 = int(sig.generator_square(1) as i64);
    let s2 = int(sig.generator_square(2) as i64);
    let coordinate = |i: u32| -> Rational {
        if grid <= 1 {
            Rational::zero()
        } else {
            int(-2) + ratio(4 * i as i64, (grid - 1) as i64)
        }
    };
    let mut points = Vec::new();
    for i in 0..grid.max(1) {
        let b1 = coordinate(i);
        for j in 0..grid.max(1) {
            let b2 = coordinate(j);
            let rhs = b1.clone() * b1.clone() * s2.clone()
                + b2.clone() * b2.clone() * s1.clone()
                + s1.clone() * s2.clone();
            if rhs.is_negative() {
                continue;
            }
            let beta = rhs.to_f64().unwrap_or(f64::NAN).sqrt();
            points.push(ManifoldPoint {
                b1: b1.clone(),
                b2: b2.clone(),
                beta,
            });
            if !rhs.is_zero() {
                points.push(ManifoldPoint {
                    b1: b1.clone(),
                    b2: b2.clone(),
                    beta: -beta,
                });
            }
        }
    }
    Ok(points)
}
