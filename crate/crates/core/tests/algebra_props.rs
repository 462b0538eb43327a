//! Property tests for the algebra kernel and the representation machinery.

mod common;

use common::random_mv;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use ga_core::scalar::int;
use ga_core::{
    blade_product, class_of_with_rep, inverse, parse_multivector, representative_root,
    spinor_representation, Blade, BladeOrder, MultiVector, Mv, RingKind, Signature,
};

fn sig(p: u32, q: u32) -> Signature {
    Signature::new(p, q).unwrap()
}

const SIGNATURES: [(u32, u32); 6] = [(3, 0), (1, 1), (0, 2), (2, 1), (4, 1), (0, 3)];

#[test]
fn generator_relations_hold_exhaustively() {
    for p in 0..=5u32 {
        for q in 0..=5u32 {
            if p + q < 2 || p + q > 5 {
                continue;
            }
            let s = sig(p, q);
            for h in 1..=s.n() {
                let eh = Blade::from_indices(&[h]).unwrap();
                let (blade, sign) = blade_product(eh, eh, &s);
                assert!(blade.is_scalar());
                assert_eq!(sign, s.generator_square(h));
                for k in 1..=s.n() {
                    if h == k {
                        continue;
                    }
                    let ek = Blade::from_indices(&[k]).unwrap();
                    let hk = blade_product(eh, ek, &s);
                    let kh = blade_product(ek, eh, &s);
                    assert_eq!(hk.0, kh.0);
                    assert_eq!(hk.1, -kh.1);
                }
            }
        }
    }
}

#[test]
fn geometric_product_is_associative() {
    let mut rng = StdRng::seed_from_u64(42);
    for &(p, q) in &SIGNATURES {
        let s = sig(p, q);
        for _ in 0..1000 {
            let a = random_mv(s, 3, &mut rng);
            let b = random_mv(s, 3, &mut rng);
            let c = random_mv(s, 3, &mut rng);
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }
    }
}

#[test]
fn product_is_bilinear() {
    let mut rng = StdRng::seed_from_u64(43);
    let s = sig(2, 1);
    for _ in 0..300 {
        let a = random_mv(s, 4, &mut rng);
        let b = random_mv(s, 4, &mut rng);
        let c = random_mv(s, 4, &mut rng);
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        let factor = common::random_rational(&mut rng);
        assert_eq!(&a.scale(&factor) * &b, (&a * &b).scale(&factor));
    }
}

#[test]
fn involutions_interact_correctly_with_products() {
    let mut rng = StdRng::seed_from_u64(44);
    for &(p, q) in &SIGNATURES {
        let s = sig(p, q);
        for _ in 0..200 {
            let a = random_mv(s, 4, &mut rng);
            let b = random_mv(s, 4, &mut rng);
            // reversion is an anti-automorphism
            assert_eq!((&a * &b).reversion(), &b.reversion() * &a.reversion());
            // grade involution is an automorphism
            assert_eq!(
                (&a * &b).grade_involution(),
                &a.grade_involution() * &b.grade_involution()
            );
            // Clifford conjugation is an anti-automorphism
            assert_eq!(
                (&a * &b).clifford_conjugation(),
                &b.clifford_conjugation() * &a.clifford_conjugation()
            );
        }
    }
}

#[test]
fn scal_is_a_trace_form() {
    let mut rng = StdRng::seed_from_u64(45);
    for &(p, q) in &SIGNATURES {
        let s = sig(p, q);
        for _ in 0..300 {
            let a = random_mv(s, 4, &mut rng);
            let b = random_mv(s, 4, &mut rng);
            assert_eq!((&a * &b).scal(), (&b * &a).scal());
        }
    }
}

#[test]
fn regular_trace_matches_scal() {
    // trace of multiplication by f equals dim(A) Scal(f)
    let mut rng = StdRng::seed_from_u64(46);
    for &(p, q) in &[(3, 0), (1, 1), (2, 1)] {
        let s = sig(p, q);
        let order = BladeOrder::new(s);
        for _ in 0..50 {
            let f = random_mv(s, 5, &mut rng);
            let expected = int(s.dim() as i64) * f.scal();
            assert_eq!(order.left_mul_matrix(&f).trace(), expected);
            assert_eq!(order.right_mul_matrix(&f).trace(), expected);
        }
    }
}

#[test]
fn split_commuting_reassembles_for_all_representatives() {
    let mut rng = StdRng::seed_from_u64(47);
    for &(p, q) in &[(3, 0), (4, 1), (2, 0), (0, 2), (2, 1)] {
        let s = sig(p, q);
        let d = s.d() as i32;
        let ks: Vec<i32> = if s.ring() == RingKind::C {
            (-d..=d).collect()
        } else {
            vec![0]
        };
        for k in ks {
            let r = representative_root(s, k).unwrap();
            for _ in 0..20 {
                let a = random_mv(s, 4, &mut rng);
                let (plus, minus) = a.split_commuting(&r).unwrap();
                assert_eq!(&plus + &minus, a);
                assert_eq!(&plus * &r, &r * &plus);
                assert_eq!(&minus * &r, -&(&r * &minus));
            }
        }
    }
}

#[test]
fn pseudoscalar_square_follows_the_ring_table() {
    for p in 0..=8u32 {
        for q in 0..=8u32 {
            if p + q < 2 || p + q > 8 {
                continue;
            }
            let s = sig(p, q);
            let square = Mv::pseudoscalar_square(s);
            match s.ring() {
                RingKind::C => assert_eq!(square, -1, "{s}"),
                RingKind::R2 | RingKind::H2 => assert_eq!(square, 1, "{s}"),
                _ => {}
            }
        }
    }
}

#[test]
fn representation_homomorphism_on_random_pairs() {
    let mut rng = StdRng::seed_from_u64(48);
    for &(p, q) in &[(3, 0), (4, 1), (0, 5)] {
        let s = sig(p, q);
        let rep = spinor_representation(s).unwrap();
        for _ in 0..500 {
            let a = random_mv(s, 3, &mut rng);
            let b = random_mv(s, 3, &mut rng);
            let lhs = rep.represent(&(&a * &b)).unwrap();
            let rhs = rep.represent(&a).unwrap().mul(&rep.represent(&b).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn reconstruct_inverts_represent() {
    let mut rng = StdRng::seed_from_u64(49);
    let s = sig(4, 1);
    let rep = spinor_representation(s).unwrap();
    for _ in 0..50 {
        let a = random_mv(s, 6, &mut rng);
        let m = rep.represent(&a).unwrap();
        assert_eq!(rep.reconstruct(&m).unwrap(), a);
    }
}

#[test]
fn class_reports_are_conjugation_invariant() {
    let mut rng = StdRng::seed_from_u64(50);
    let s = sig(4, 1);
    let rep = spinor_representation(s).unwrap();
    for k in -2..=2 {
        let f = representative_root(s, k).unwrap();
        let base = class_of_with_rep(&f, Some(&rep)).unwrap();
        let mut done = 0;
        while done < 3 {
            let v = random_mv(s, 5, &mut rng);
            let Some(v_inv) = inverse(&v) else { continue };
            let conjugated = &(&v_inv * &f) * &v;
            let report = class_of_with_rep(&conjugated, Some(&rep)).unwrap();
            assert_eq!(report.k, base.k);
            assert_eq!(report.class_dim, base.class_dim);
            assert_eq!(report.centralizer_dim, base.centralizer_dim);
            assert_eq!(report.char_poly, base.char_poly);
            assert_eq!(report.min_poly, base.min_poly);
            assert_eq!(report.spec, base.spec);
            done += 1;
        }
    }
}

// ---------------------------------------------------------------------------
// parser round trips
// ---------------------------------------------------------------------------

fn arbitrary_mv(s: Signature) -> impl Strategy<Value = Mv> {
    let dim = s.dim() as u16;
    proptest::collection::vec((0..dim, -20i64..=20, 1i64..=12), 0..6).prop_map(move |terms| {
        MultiVector::from_terms(
            s,
            terms.into_iter().map(|(mask, numer, denom)| {
                (Blade::from_mask(mask), ga_core::scalar::ratio(numer, denom))
            }),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn printer_parser_round_trip(mv in arbitrary_mv(Signature::new(4, 1).unwrap())) {
        let text = mv.to_string();
        let parsed = parse_multivector(&text, *mv.sig()).unwrap();
        prop_assert_eq!(parsed, mv);
    }

    #[test]
    fn printer_parser_round_trip_wide(mv in arbitrary_mv(Signature::with_limit(6, 4, 12).unwrap())) {
        // n = 10 exercises the braced e{...} syntax
        let text = mv.to_string();
        let parsed = parse_multivector(&text, *mv.sig()).unwrap();
        prop_assert_eq!(parsed, mv);
    }

    #[test]
    fn grade_projections_partition(mv in arbitrary_mv(Signature::new(2, 1).unwrap())) {
        let s = *mv.sig();
        let mut sum = Mv::zero(s);
        for r in 0..=s.n() {
            sum = &sum + &mv.grade_project(r);
        }
        prop_assert_eq!(sum, mv);
    }
}
