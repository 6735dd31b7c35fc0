//! Evaluation of parsed expressions in `O_q(GL_n)`.

use qhs_core::qminors::{quantum_minor, CentralFraction, IndexTuple};
use qhs_core::{AlgebraContext, LaurentPoly, QElement, Result};

use crate::expr::Expr;

/// Value of `e` as `numerator * det_q^{-k}`.
pub fn evaluate(e: &Expr, ctx: &AlgebraContext) -> Result<CentralFraction> {
    let poly = |x: QElement| CentralFraction::from_element(x);
    Ok(match e {
        Expr::Num(r) => poly(QElement::scalar(ctx, LaurentPoly::constant(r.clone()))),
        Expr::Q => poly(QElement::scalar(ctx, LaurentPoly::q())),
        Expr::Gen { row, col } => poly(QElement::generator(ctx, *row, *col)?),
        Expr::Minor { rows, cols } => poly(quantum_minor(
            ctx,
            &IndexTuple::new(rows, ctx.n())?,
            &IndexTuple::new(cols, ctx.n())?,
        )?),
        Expr::Neg(a) => evaluate(a, ctx)?.scale(&LaurentPoly::from_int(-1)),
        Expr::Add(a, b) => evaluate(a, ctx)?.add(&evaluate(b, ctx)?)?,
        Expr::Sub(a, b) => evaluate(a, ctx)?.sub(&evaluate(b, ctx)?)?,
        Expr::Mul(a, b) => evaluate(a, ctx)?.mul(&evaluate(b, ctx)?)?,
        Expr::Pow(a, k) if *k < 0 => match **a {
            Expr::Q => poly(QElement::scalar(ctx, LaurentPoly::q_pow(*k))),
            _ => CentralFraction::new(QElement::one(ctx), k.unsigned_abs()),
        },
        Expr::Pow(a, k) => {
            let base = evaluate(a, ctx)?;
            let mut acc = poly(QElement::one(ctx));
            for _ in 0..*k {
                acc = acc.mul(&base)?;
            }
            acc
        }
    })
}

/// Text form that parses back to the same value.
pub fn fraction_text(f: &CentralFraction) -> String {
    let n = f.ctx().n();
    let all = (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(",");
    match f.det_power() {
        0 => f.numerator().to_string(),
        k => format!("({})*D[{all};{all}]^-{k}", f.numerator()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expression;
    use qhs_core::qminors::quantum_det;

    fn eval(src: &str, n: usize) -> CentralFraction {
        let ctx = AlgebraContext::new(n);
        evaluate(&parse_expression(src, &ctx).unwrap(), &ctx).unwrap()
    }

    #[test]
    fn determinant_from_text() {
        let ctx = AlgebraContext::new(2);
        let v = eval("x[1,1]*x[2,2] - q*x[1,2]*x[2,1]", 2);
        assert_eq!(v.numerator(), &quantum_det(&ctx));
        assert_eq!(eval("D[1,2;1,2]", 2).numerator(), &quantum_det(&ctx));
    }

    #[test]
    fn fractions() {
        let ctx = AlgebraContext::new(2);
        let v = eval("D[1,2;1,2]^-1 * D[1,2;1,2]", 2);
        assert!(v.equals(&CentralFraction::from_element(QElement::one(&ctx))).unwrap());
        let w = eval("q^-2*x[1,1] + D[1,2;1,2]^-1", 2);
        assert_eq!(w.det_power(), 1);
        assert_eq!(fraction_text(&eval("D[1,2;1,2]^-2", 2)), "(1)*D[1,2;1,2]^-2");
        let again = eval(&fraction_text(&w), 2);
        assert!(again.equals(&w).unwrap());
    }
}
