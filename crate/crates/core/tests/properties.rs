use std::collections::HashSet;

use gfqm_core::entanglement::{
    all_states, entangled_states, local_generators, Classification, LocalTransformation, Mat2,
    Sides, TwoSpinState,
};
use gfqm_core::field::{field_of_order, Field};
use gfqm_core::projective::{bracket, canonicalize, DualCovector, FieldVector};
use gfqm_core::qm::{tensor_state, Measurement};
use gfqm_core::two_level::all_spin_observables;
use gfqm_core::{FieldElement, Rational};
use proptest::prelude::*;

const ORDERS: [u64; 12] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27];

#[test]
fn field_axioms_exhaustive_up_to_16() {
    for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
        let f = field_of_order(q).unwrap();
        let elems = f.elements();
        let (zero, one) = (f.zero(), f.one());
        for &a in &elems {
            assert_eq!(a + zero, a);
            assert_eq!(a * one, a);
            assert_eq!(a + -a, zero);
            if !a.is_zero() {
                assert_eq!(a * a.inv().unwrap(), one);
            }
            for &b in &elems {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                assert_eq!(a * b, f.poly_mul(a, b).unwrap(), "log tables disagree, q={q}");
                assert_eq!((a * b).abs_value(), a.abs_value() * b.abs_value());
                for &c in &elems {
                    assert_eq!((a + b) + c, a + (b + c));
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
    }
}

#[test]
fn generator_is_primitive_and_enumeration_is_complete() {
    for q in ORDERS.iter().copied().chain([32, 49, 64]) {
        let f = field_of_order(q).unwrap();
        let a = f.generator();
        let mut power = f.one();
        for k in 1..q - 1 {
            power = power * a;
            assert!(!power.is_one(), "q={q} k={k}");
        }
        assert!((power * a).is_one());

        let elems = f.elements();
        assert_eq!(elems.len() as u64, q);
        assert_eq!(elems.iter().collect::<HashSet<_>>().len() as u64, q);
        assert!(elems[0].is_zero());
        assert!(elems[1].is_one());
    }
}

fn element(f: Field, seed: u32) -> FieldElement {
    f.elements()[(seed % f.order()) as usize]
}

fn vector(f: Field, seeds: &[u32]) -> FieldVector {
    FieldVector::new(f, seeds.iter().map(|&s| element(f, s)).collect()).unwrap()
}

proptest! {
    #[test]
    fn canonicalize_is_scale_invariant(
        qi in 0..ORDERS.len(),
        seeds in prop::collection::vec(any::<u32>(), 1..5),
        c in 1u32..1000,
    ) {
        let f = field_of_order(ORDERS[qi]).unwrap();
        let v = vector(f, &seeds);
        prop_assume!(!v.is_zero());
        let scalar = f.nonzero_elements()[(c % (f.order() - 1)) as usize];
        let p = canonicalize(&v).unwrap();
        prop_assert_eq!(&canonicalize(&v.scale(scalar).unwrap()).unwrap(), &p);
        let last = p.rep().coords().iter().rev().find(|x| !x.is_zero()).unwrap();
        prop_assert!(last.is_one());
    }

    #[test]
    fn bracket_is_bilinear(
        qi in 0..ORDERS.len(),
        xs in prop::collection::vec(any::<u32>(), 3),
        us in prop::collection::vec(any::<u32>(), 3),
        vs in prop::collection::vec(any::<u32>(), 3),
        c in any::<u32>(),
    ) {
        let f = field_of_order(ORDERS[qi]).unwrap();
        let x = DualCovector::new(f, xs.iter().map(|&s| element(f, s)).collect()).unwrap();
        let (u, v) = (vector(f, &us), vector(f, &vs));
        let c = element(f, c);
        let lhs = bracket(&x, &u.scale(c).unwrap().checked_add(&v).unwrap()).unwrap();
        let rhs = c * bracket(&x, &u).unwrap() + bracket(&x, &v).unwrap();
        prop_assert_eq!(lhs, rhs);
        let scaled_x = x.scale(c).unwrap();
        prop_assert_eq!(bracket(&scaled_x, &u).unwrap(), c * bracket(&x, &u).unwrap());
    }

    #[test]
    fn tensor_is_bilinear(
        qi in 0..ORDERS.len(),
        us in prop::collection::vec(any::<u32>(), 2),
        vs in prop::collection::vec(any::<u32>(), 3),
        c in any::<u32>(),
    ) {
        let f = field_of_order(ORDERS[qi]).unwrap();
        let (u, v) = (vector(f, &us), vector(f, &vs));
        let c = element(f, c);
        let t = tensor_state(&u, &v).unwrap();
        prop_assert_eq!(t.dim(), 6);
        prop_assert_eq!(tensor_state(&u.scale(c).unwrap(), &v).unwrap(), t.scale(c).unwrap());
        prop_assert_eq!(tensor_state(&u, &v.scale(c).unwrap()).unwrap(), t.scale(c).unwrap());
    }

    #[test]
    fn probabilities_are_normalized_and_covector_scaling_is_harmless(
        qi in 0..7usize,
        obs_seed in any::<usize>(),
        state_seed in any::<usize>(),
        c in any::<u32>(),
    ) {
        let f = field_of_order(ORDERS[qi]).unwrap();
        let observables = all_spin_observables(f);
        let obs = observables[obs_seed % observables.len()];
        let m = obs.measurement(f).unwrap();
        let psi = vector(f, &[state_seed as u32, (state_seed / 7) as u32]);
        prop_assume!(!psi.is_zero());
        let dist = gfqm_core::qm::probability(&m, &psi).unwrap();
        prop_assert_eq!(dist.total(), Rational::from_integer(1));

        let c = f.nonzero_elements()[(c % (f.order() - 1)) as usize];
        let rescaled = Measurement::new(
            vec![m.covectors()[0].scale(c).unwrap(), m.covectors()[1].clone()],
            m.outcomes().to_vec(),
        )
        .unwrap();
        prop_assert_eq!(gfqm_core::qm::probability(&rescaled, &psi).unwrap(), dist);
    }
}

#[test]
fn local_generators_preserve_classification() {
    for q in [2, 3, 4, 5] {
        let f = field_of_order(q).unwrap();
        let gens = local_generators(f, Sides::Both);
        for state in all_states(f) {
            for g in &gens {
                assert_eq!(g.apply(&state).classify(), state.classify());
            }
        }
    }
}

#[test]
fn entangled_states_biject_onto_pgl2() {
    for q in [2, 3, 4, 5, 7] {
        let f = field_of_order(q).unwrap();
        let from_states: HashSet<Mat2> = entangled_states(f)
            .iter()
            .map(|s| s.coefficient_matrix().projective_class().unwrap())
            .collect();
        let group: HashSet<Mat2> = gfqm_core::entanglement::pgl2_elements(f).into_iter().collect();
        assert_eq!(from_states, group, "q={q}");
    }
}

#[test]
fn two_sided_transformation_scales_determinant() {
    let f = field_of_order(5).unwrap();
    let l = Mat2::new([[f.from_int(2), f.from_int(1)], [f.from_int(0), f.from_int(3)]]);
    let r = Mat2::new([[f.from_int(1), f.from_int(4)], [f.from_int(1), f.from_int(1)]]);
    let t = LocalTransformation::new(l, r).unwrap();
    for state in entangled_states(f) {
        let image = t.apply(&state);
        assert_eq!(image.classify(), Classification::Entangled);
        // det is defined up to the square of the rescaling, so compare nonzeroness only.
        assert!(!image.coefficient_matrix().det().is_zero());
    }
    let product = TwoSpinState::product(&vector(f, &[1, 2]), &vector(f, &[3, 0])).unwrap();
    assert_eq!(t.apply(&product).classify(), Classification::Product);
}
