//! Printing and parsing are inverse to each other.

use proptest::prelude::*;
use qhs_cli::{evaluate, fraction_text, parse_expression, Expr};
use qhs_core::qmatrix::{normal_form_gens, Gen};
use qhs_core::{AlgebraContext, LaurentPoly, QElement, Rational};

const N: usize = 3;

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0i64..20, 1i64..6).prop_map(|(a, b)| Expr::Num(Rational::new(a.into(), b.into()))),
        Just(Expr::Q),
        (1..=N, 1..=N).prop_map(|(row, col)| Expr::Gen { row, col }),
        (1..=N, 1..=N).prop_map(|(r, c)| Expr::Minor { rows: vec![r], cols: vec![c] }),
        Just(Expr::Minor { rows: vec![1, 3], cols: vec![2, 3] }),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner, 0i32..3).prop_map(|(a, k)| Expr::Pow(Box::new(a), k)),
            (-3i32..0).prop_map(|k| Expr::Pow(Box::new(Expr::Q), k)),
            (-2i32..0).prop_map(|k| Expr::Pow(
                Box::new(Expr::Minor { rows: vec![1, 2, 3], cols: vec![1, 2, 3] }),
                k
            )),
        ]
    })
}

fn element(words: &[(Vec<Gen>, i64, i32)]) -> QElement {
    let ctx = AlgebraContext::new(2);
    let mut acc = QElement::zero(&ctx);
    for (w, c, e) in words {
        acc = &acc + &normal_form_gens(&ctx, w, LaurentPoly::monomial(*e, Rational::from_integer((*c).into())));
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn printed_trees_parse_back(e in expr()) {
        let ctx = AlgebraContext::new(N);
        let text = e.to_string();
        let back = parse_expression(&text, &ctx).map_err(|err| TestCaseError::fail(err.render(&text)))?;
        prop_assert_eq!(&back, &e, "{}", text);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn printed_elements_parse_back(
        words in prop::collection::vec((prop::collection::vec(0..4 as Gen, 0..=3), -3i64..=3, -2i32..=2), 0..=4)
    ) {
        let f = element(&words);
        let text = f.to_string();
        let ctx = f.ctx().clone();
        let v = evaluate(&parse_expression(&text, &ctx).unwrap(), &ctx).unwrap();
        prop_assert!(v.is_polynomial());
        prop_assert_eq!(v.numerator(), &f);
        let det_inv = format!("({text})*D[1,2;1,2]^-2");
        let w = evaluate(&parse_expression(&det_inv, &ctx).unwrap(), &ctx).unwrap();
        prop_assert_eq!(fraction_text(&w), if f.is_zero() { "(0)*D[1,2;1,2]^-2".to_string() } else { det_inv });
    }

    #[test]
    fn normal_form_output_is_a_fixed_point(
        words in prop::collection::vec((prop::collection::vec(0..4 as Gen, 0..=3), -3i64..=3, -2i32..=2), 1..=3)
    ) {
        let text = element(&words).to_string();
        let once = qhs_cli::run(["qhs", "nf", "--n", "2", text.as_str()]);
        prop_assert_eq!(once.code, 0);
        prop_assert_eq!(once.stdout.trim_end(), text.as_str());
    }
}

#[test]
fn scalars_print_in_ascending_powers() {
    let ctx = AlgebraContext::new(2);
    for (src, printed) in [("0", "0"), ("1", "1"), ("-q + q^-1", "q^-1 - q"), ("-1/2*q^2 + 3", "3 - 1/2*q^2")] {
        let v = evaluate(&parse_expression(src, &ctx).unwrap(), &ctx).unwrap();
        assert_eq!(v.numerator().to_string(), printed);
    }
}
