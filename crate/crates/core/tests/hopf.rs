//! Bialgebra structure of `O_q(M_n)` and the maps out of it.

use proptest::prelude::*;
use qhs_core::classical::CommPoly;
use qhs_core::qmatrix::{coassociativity_defect, normal_form_gens, Gen};
use qhs_core::{AlgebraContext, BlockShape, LaurentPoly, QElement, TensorElement};

fn build(ctx: &AlgebraContext, words: &[(Vec<Gen>, i64)]) -> QElement {
    let mut acc = QElement::zero(ctx);
    for (w, c) in words {
        acc = &acc + &normal_form_gens(ctx, w, LaurentPoly::from_int(*c));
    }
    acc
}

fn elements(n: usize, len: usize) -> impl Strategy<Value = Vec<(Vec<Gen>, i64)>> {
    prop::collection::vec(
        (prop::collection::vec(0..(n * n) as Gen, 0..=len), -2i64..=2),
        1..=2,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coproduct_is_coassociative_and_counital(n in 1usize..=3, seed in elements(3, 3)) {
        let ctx = AlgebraContext::new(n);
        let words: Vec<_> = seed
            .into_iter()
            .map(|(w, c)| (w.into_iter().map(|g| g % (n * n) as Gen).collect(), c))
            .collect();
        let f = build(&ctx, &words);
        prop_assert!(coassociativity_defect(&f).is_empty());
        let d = f.coproduct();
        prop_assert_eq!(d.counit_left(), f.clone());
        prop_assert_eq!(d.counit_right(), f);
    }

    #[test]
    fn coproduct_and_counit_are_multiplicative(a in elements(2, 2), b in elements(2, 2)) {
        let ctx = AlgebraContext::new(2);
        let (f, g) = (build(&ctx, &a), build(&ctx, &b));
        let fg = &f * &g;
        prop_assert_eq!(fg.coproduct(), f.coproduct().multiply(&g.coproduct()));
        prop_assert_eq!(fg.counit(), &f.counit() * &g.counit());
    }

    #[test]
    fn specialization_is_a_ring_map(a in elements(3, 2), b in elements(3, 2)) {
        let ctx = AlgebraContext::new(3);
        let (f, g) = (build(&ctx, &a), build(&ctx, &b));
        prop_assert_eq!((&f * &g).specialize_q1(), &f.specialize_q1() * &g.specialize_q1());
        prop_assert_eq!((&f + &g).specialize_q1(), &f.specialize_q1() + &g.specialize_q1());
        prop_assert_eq!(f.coproduct().counit_left().specialize_q1(), f.specialize_q1());
    }

    #[test]
    fn parabolic_projection_is_a_ring_map(a in elements(3, 2), b in elements(3, 2), r in 1usize..=2) {
        let ctx = AlgebraContext::new(3);
        let shape = BlockShape::grassmannian(3, r).unwrap();
        let (f, g) = (build(&ctx, &a), build(&ctx, &b));
        let lhs = (&f * &g).project(&shape);
        let rhs = (&f.project(&shape) * &g.project(&shape)).project(&shape);
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn generator_coproduct_is_matrix_multiplication() {
    let ctx = AlgebraContext::new(3);
    for i in 1..=3 {
        for j in 1..=3 {
            let mut expected = TensorElement::zero(&ctx);
            for k in 1..=3 {
                expected = expected.add(&TensorElement::outer(
                    &QElement::generator(&ctx, i, k).unwrap(),
                    &QElement::generator(&ctx, k, j).unwrap(),
                ));
            }
            let x = QElement::generator(&ctx, i, j).unwrap();
            assert_eq!(x.coproduct(), expected);
            let eps = if i == j { LaurentPoly::one() } else { LaurentPoly::zero() };
            assert_eq!(x.counit(), eps);
        }
    }
}

#[test]
fn specialization_of_relations_commutes() {
    let ctx = AlgebraContext::new(2);
    let a = QElement::generator(&ctx, 1, 1).unwrap();
    let d = QElement::generator(&ctx, 2, 2).unwrap();
    let comm = a.commutator(&d).unwrap();
    assert!(comm.specialize_q1().is_zero());
    assert!(comm.is_divisible_by_qm1());
    let ad = (&a * &d).specialize_q1();
    let expected = &CommPoly::var(2, 1, 1) * &CommPoly::var(2, 2, 2);
    assert_eq!(ad, expected);
    assert!(ad.counit() == qhs_core::rat(1));
    assert!((&ad - &expected).is_zero());
}
