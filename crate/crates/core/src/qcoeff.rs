//! Exact Laurent polynomials in `q` with rational coefficients.
//!
//! This is the ground ring `Q[q, q^-1]` for every quantum algebra in the
//! crate. Values are kept in canonical form (sorted exponents, no zero
//! coefficients), so structural equality is ring equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Element of `Q[q, q^-1]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    // ascending exponents, nonzero coefficients
    terms: Vec<(i32, Rational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, Rational::one())
    }

    /// `q^exp`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(exp, Rational::one())
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Self {
        Self::from_terms([(0, rat(-1)), (1, rat(1))])
    }

    /// `q - q^-1`.
    pub fn q_minus_q_inv() -> Self {
        Self::from_terms([(-1, rat(-1)), (1, rat(1))])
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn monomial(exp: i32, coeff: Rational) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: vec![(exp, coeff)],
            }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, Rational)>,
    {
        let mut v: Vec<(i32, Rational)> = terms.into_iter().collect();
        v.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i32, Rational)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn terms(&self) -> &[(i32, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Returns the constant `c` if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// Returns `(exp, coeff)` if the polynomial has exactly one term.
    pub fn as_monomial(&self) -> Option<(i32, &Rational)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((*e, c)),
            _ => None,
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Coefficient of the highest power of `q`.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        self.terms
            .binary_search_by_key(&exp, |(e, _)| *e)
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `q = 1`: the sum of all coefficients.
    pub fn eval_at_one(&self) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, (_, c)| acc + c)
    }

    /// Value at a nonzero rational `q`.
    pub fn eval(&self, q: &Rational) -> Rational {
        assert!(!q.is_zero(), "Laurent polynomials are not defined at q = 0");
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num_traits::pow(q.clone(), *e as usize)
            } else {
                num_traits::pow(q.recip(), (-*e) as usize)
            };
            acc += c * p;
        }
        acc
    }

    /// Exact quotient by `q - 1`.
    pub fn div_qm1(&self) -> Result<Self> {
        if !self.eval_at_one().is_zero() {
            return Err(Error::NotDivisible(self.to_string()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Synthetic division from the top: a = (q - 1) * b.
        let lo = self.terms[0].0;
        let hi = self.terms[self.terms.len() - 1].0;
        let mut out = Vec::with_capacity((hi - lo) as usize);
        let mut carry = Rational::zero();
        for e in (lo + 1..=hi).rev() {
            carry += self.coeff(e);
            if !carry.is_zero() {
                out.push((e - 1, carry.clone()));
            }
        }
        out.reverse();
        Ok(Self { terms: out })
    }

    /// Largest `k` such that `(q - 1)^k` divides `self`; `None` for zero.
    pub fn qm1_valuation(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut k = 0;
        let mut cur = self.clone();
        while cur.eval_at_one().is_zero() {
            cur = cur.div_qm1().expect("checked divisibility");
            k += 1;
        }
        Some(k)
    }

    /// Exact quotient `self / other`, if it exists in `Q[q, q^-1]`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        assert!(!other.is_zero(), "division by zero Laurent polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (a_shift, a) = self.to_poly();
        let (b_shift, b) = other.to_poly();
        let (quot, rem) = poly_divrem(&a, &b);
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_poly(a_shift - b_shift, &quot))
    }

    /// Monic gcd in `Q[q, q^-1]` (units `c q^k` stripped). `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_unit();
        }
        if other.is_zero() {
            return self.normalize_unit();
        }
        let (_, mut a) = self.to_poly();
        let (_, mut b) = other.to_poly();
        while b.iter().any(|c| !c.is_zero()) {
            let (_, r) = poly_divrem(&a, &b);
            a = b;
            b = trim(r);
        }
        Self::from_poly(0, &a).normalize_unit()
    }

    /// Divides out the unit `c q^k` so that the lowest exponent is 0 and the
    /// leading coefficient is 1.
    pub fn normalize_unit(&self) -> Self {
        match (self.min_exp(), self.leading_coeff()) {
            (Some(e), Some(c)) => self.shift(-e).scale(&c.recip()),
            _ => Self::zero(),
        }
    }

    /// Writes `self = q^shift * p(q)` with `p(0) != 0`; returns dense ascending
    /// coefficients of `p`.
    fn to_poly(&self) -> (i32, Vec<Rational>) {
        let lo = self.min_exp().unwrap_or(0);
        let hi = self.max_exp().unwrap_or(0);
        let mut dense = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            dense[(e - lo) as usize] = c.clone();
        }
        (lo, dense)
    }

    fn from_poly(shift: i32, dense: &[Rational]) -> Self {
        Self::from_terms(
            dense
                .iter()
                .enumerate()
                .map(|(i, c)| (shift + i as i32, c.clone())),
        )
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Dense polynomial long division over the rationals.
fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let lb = b[db].clone();
    if rem.len() < b.len() {
        return (vec![Rational::zero()], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] / &lb;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] -= &c * bj;
            }
        }
        quot[i] = c;
    }
    rem.truncate(db.max(1));
    (quot, trim(rem))
}

fn add_terms(a: &[(i32, Rational)], b: &[(i32, Rational)], negate_b: bool) -> Vec<(i32, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => Ordering::Less,
            (None, _) => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly {
            terms: add_terms(&self.terms, &rhs.terms, false),
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly {
            terms: add_terms(&self.terms, &rhs.terms, true),
        }
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((e, c)) = rhs.as_monomial() {
            return self.shift(e).scale(c);
        }
        if let Some((e, c)) = self.as_monomial() {
            return rhs.shift(e).scale(c);
        }
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .flat_map(|(e1, c1)| rhs.terms.iter().map(move |(e2, c2)| (e1 + e2, c1 * c2))),
        )
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.terms = add_terms(&self.terms, &rhs.terms, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.terms = add_terms(&self.terms, &rhs.terms, true);
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

/// Writes a rational as `a` or `a/b`, without sign handling beyond the numerator.
pub fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_term(exp: i32, coeff: &Rational) -> String {
    let abs = coeff.abs();
    let power = match exp {
        0 => String::new(),
        1 => "q".to_string(),
        e => format!("q^{e}"),
    };
    let body = if power.is_empty() {
        fmt_rational(&abs)
    } else if abs.is_one() {
        power
    } else {
        format!("{}*{}", fmt_rational(&abs), power)
    };
    if coeff.is_negative() {
        format!("-{body}")
    } else {
        body
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponents, e.g. `-2*q^-1 + 3*q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let t = fmt_term(*e, c);
            if i == 0 {
                write!(f, "{t}")?;
            } else if let Some(rest) = t.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {t}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
