//! Quantum minors: centrality of the determinant and the coproduct identity.

use qhs_core::classical::{classical_minor, CommTensor};
use qhs_core::qminors::{
    check_central, check_minor_coproduct, quantum_det, quantum_minor, CentralFraction, IndexTuple,
};
use qhs_core::{AlgebraContext, LaurentPoly, QElement, TensorElement};

#[test]
fn determinant_is_central_and_grouplike() {
    for n in 2..=3 {
        let ctx = AlgebraContext::new(n);
        let det = quantum_det(&ctx);
        for g in ctx.generators() {
            assert!(det.commutator(&g).unwrap().is_zero(), "n = {n}, {g}");
        }
        assert!(check_central(&det));
        assert_eq!(det.coproduct(), TensorElement::outer(&det, &det));
        assert_eq!(det.counit(), LaurentPoly::one());
    }
}

#[test]
fn three_by_three_determinant_by_row_expansion() {
    // det_q = Σ_k (-q)^{k-1} x[1,k] D^{23}_{\hat k}
    let ctx = AlgebraContext::new(3);
    let mut acc = QElement::zero(&ctx);
    let rest = IndexTuple::new(&[2, 3], 3).unwrap();
    for k in 1..=3usize {
        let cols: Vec<usize> = (1..=3).filter(|&c| c != k).collect();
        let minor = quantum_minor(&ctx, &rest, &IndexTuple::new(&cols, 3).unwrap()).unwrap();
        let x = QElement::generator(&ctx, 1, k).unwrap();
        let sign = (-LaurentPoly::q()).pow(k as u32 - 1);
        acc = &acc + &(&x * &minor).scale(&sign);
    }
    assert_eq!(acc, quantum_det(&ctx));
}

#[test]
fn minor_coproducts_three_by_three() {
    let ctx = AlgebraContext::new(3);
    for r in 1..=2 {
        for rows in IndexTuple::all(3, r) {
            for cols in IndexTuple::all(3, r) {
                assert!(check_minor_coproduct(&ctx, &rows, &cols).unwrap(), "{rows} / {cols}");
            }
        }
    }
}

#[test]
fn minor_coproducts_four_by_four_onto_initial_columns() {
    let ctx = AlgebraContext::new(4);
    let i0 = IndexTuple::initial(2);
    for rows in IndexTuple::all(4, 2) {
        assert!(check_minor_coproduct(&ctx, &rows, &i0).unwrap(), "{rows}");
    }
}

#[test]
fn classical_cauchy_binet_matches_specialization() {
    let n = 3;
    let ctx = AlgebraContext::new(n);
    for rows in IndexTuple::all(n, 2) {
        for cols in IndexTuple::all(n, 2) {
            let m = classical_minor(n, rows.indices(), cols.indices());
            let mut rhs = CommTensor::zero(n);
            for k in IndexTuple::all(n, 2) {
                rhs = rhs.add(&CommTensor::outer(
                    &classical_minor(n, rows.indices(), k.indices()),
                    &classical_minor(n, k.indices(), cols.indices()),
                ));
            }
            assert_eq!(m.coproduct(), rhs);
            let q = quantum_minor(&ctx, &rows, &cols).unwrap();
            assert_eq!(q.specialize_q1(), m);
        }
    }
}

#[test]
fn inverse_determinant_fractions() {
    let ctx = AlgebraContext::new(2);
    let det = quantum_det(&ctx);
    let inv = CentralFraction::det_inverse(&ctx);
    let prod = inv.mul(&CentralFraction::from_element(det)).unwrap();
    assert!(prod.equals(&CentralFraction::from_element(QElement::one(&ctx))).unwrap());
    assert_eq!(inv.substitute_det_one(), QElement::one(&ctx));
    assert_eq!(inv.to_string(), "(1) * det^-1");
}
