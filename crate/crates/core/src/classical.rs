//! The commutative coordinate ring `O(M_n)` over the rationals.
//!
//! This is the `q = 1` shadow of [`crate::qmatrix`]. It is written without
//! any reference to the quantum rewriting system and doubles as an oracle in
//! tests.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::qcoeff::{fmt_rational, Rational};
use crate::qmatrix::{fmt_coeff_term, join_terms, BlockShape, Gen, Monomial};

fn add_to<K: Ord + Clone>(acc: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(key.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&key);
    }
}

/// Polynomial in the commuting variables `x[i,j]`, `1 <= i, j <= n`.
#[derive(Clone, PartialEq, Eq)]
pub struct CommPoly {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl CommPoly {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::from_terms(n, [(Monomial::one(), c)])
    }

    /// The variable `x[i,j]` (1-based).
    pub fn var(n: usize, i: usize, j: usize) -> Self {
        assert!(i >= 1 && j >= 1 && i <= n && j <= n, "x[{i},{j}] out of range");
        let g = ((i - 1) * n + (j - 1)) as Gen;
        Self::from_terms(n, [(Monomial::from_sorted(vec![g]), Rational::one())])
    }

    /// Builds a polynomial; monomials are sorted and repeated keys summed.
    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            let m = Monomial::sorted(m.gens().to_vec());
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        acc.retain(|_, v: &mut Rational| !v.is_zero());
        Self { n, terms: acc }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(m, x)| (m.clone(), x * c)))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Value at the matrix `point` (row-major, `n * n` entries).
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.n * self.n);
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            acc + m
                .gens()
                .iter()
                .fold(c.clone(), |p, &g| p * &point[g as usize])
        })
    }

    /// Classical coproduct `x_ij ↦ Σ_k x_ik ⊗ x_kj`.
    pub fn coproduct(&self) -> CommTensor {
        let n = self.n;
        let mut out = CommTensor::zero(n);
        for (m, c) in &self.terms {
            let mut acc = CommTensor::unit(n).scale(c);
            for &g in m.gens() {
                let (i, j) = (g as usize / n, g as usize % n);
                let mut dg = BTreeMap::new();
                for k in 0..n {
                    let l = Monomial::from_sorted(vec![(i * n + k) as Gen]);
                    let r = Monomial::from_sorted(vec![(k * n + j) as Gen]);
                    dg.insert((l, r), Rational::one());
                }
                acc = acc.multiply(&CommTensor { n, terms: dg });
            }
            out = out.add(&acc);
        }
        out
    }

    /// Counit: evaluation at the identity matrix.
    pub fn counit(&self) -> Rational {
        let n = self.n;
        let mut id = vec![Rational::zero(); n * n];
        for i in 0..n {
            id[i * n + i] = Rational::one();
        }
        self.eval(&id)
    }

    /// Drops monomials containing a variable killed by `shape`.
    pub fn project(&self, shape: &BlockShape) -> Self {
        let n = self.n;
        Self {
            n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| {
                    m.gens()
                        .iter()
                        .all(|&g| !shape.kills(g as usize / n + 1, g as usize % n + 1))
                })
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        let text = join_terms(self.terms.iter().map(|(m, c)| {
            let mono = m
                .gens()
                .iter()
                .map(|&g| format!("x[{},{}]", g as usize / n + 1, g as usize % n + 1))
                .collect::<Vec<_>>()
                .join("*");
            fmt_coeff_term(&fmt_rational(c), true, &mono)
        }));
        write!(f, "{text}")
    }
}

impl fmt::Debug for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CommPoly({self})")
    }
}

impl Add for &CommPoly {
    type Output = CommPoly;
    fn add(self, rhs: &CommPoly) -> CommPoly {
        assert_eq!(self.n, rhs.n);
        CommPoly::from_terms(
            self.n,
            self.terms.iter().chain(rhs.terms.iter()).map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

impl Sub for &CommPoly {
    type Output = CommPoly;
    fn sub(self, rhs: &CommPoly) -> CommPoly {
        self + &(-rhs)
    }
}

impl Neg for &CommPoly {
    type Output = CommPoly;
    fn neg(self) -> CommPoly {
        CommPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &CommPoly {
    type Output = CommPoly;
    fn mul(self, rhs: &CommPoly) -> CommPoly {
        assert_eq!(self.n, rhs.n);
        let mut acc = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                add_to(&mut acc, m1.commutative_mul(m2), c1 * c2);
            }
        }
        CommPoly {
            n: self.n,
            terms: acc,
        }
    }
}

/// Element of `O(M_n) ⊗ O(M_n)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CommTensor {
    n: usize,
    terms: BTreeMap<(Monomial, Monomial), Rational>,
}

impl CommTensor {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `1 ⊗ 1`.
    pub fn unit(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((Monomial::one(), Monomial::one()), Rational::one());
        Self { n, terms }
    }

    /// `a ⊗ b`.
    pub fn outer(a: &CommPoly, b: &CommPoly) -> Self {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &a.terms {
            for (m2, c2) in &b.terms {
                add_to(&mut terms, (m1.clone(), m2.clone()), c1 * c2);
            }
        }
        Self { n: a.n, terms }
    }

    pub fn terms(&self) -> &BTreeMap<(Monomial, Monomial), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut terms = BTreeMap::new();
        for (k, x) in &self.terms {
            add_to(&mut terms, k.clone(), x * c);
        }
        Self { n: self.n, terms }
    }

    pub fn add(&self, other: &CommTensor) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            add_to(&mut terms, k.clone(), c.clone());
        }
        Self { n: self.n, terms }
    }

    pub fn sub(&self, other: &CommTensor) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn multiply(&self, other: &CommTensor) -> Self {
        let mut terms = BTreeMap::new();
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                add_to(
                    &mut terms,
                    (a.commutative_mul(c), b.commutative_mul(d)),
                    c1 * c2,
                );
            }
        }
        Self { n: self.n, terms }
    }

    /// Applies a linear map to each leg: `Σ f(a) ⊗ g(b)`.
    pub fn map_legs<F, G>(&self, f: F, g: G) -> Self
    where
        F: Fn(&CommPoly) -> CommPoly,
        G: Fn(&CommPoly) -> CommPoly,
    {
        let n = self.n;
        let mut out = CommTensor::zero(n);
        for ((a, b), c) in &self.terms {
            let fa = f(&CommPoly::from_terms(n, [(a.clone(), c.clone())]));
            let gb = g(&CommPoly::from_terms(n, [(b.clone(), Rational::one())]));
            out = out.add(&CommTensor::outer(&fa, &gb));
        }
        out
    }
}

/// Classical minor on rows `rows` and columns `cols` (1-based), by Laplace
/// expansion along the first row.
pub fn classical_minor(n: usize, rows: &[usize], cols: &[usize]) -> CommPoly {
    assert_eq!(rows.len(), cols.len());
    if rows.is_empty() {
        return CommPoly::one(n);
    }
    let mut acc = CommPoly::zero(n);
    let rest_rows = &rows[1..];
    for (k, &c) in cols.iter().enumerate() {
        let rest_cols: Vec<usize> = cols
            .iter()
            .enumerate()
            .filter(|&(t, _)| t != k)
            .map(|(_, &c)| c)
            .collect();
        let term = &CommPoly::var(n, rows[0], c) * &classical_minor(n, rest_rows, &rest_cols);
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Number of semistandard Young tableaux of rectangular shape `r x k`
/// with entries in `1..=n`, by the hook-content formula.
///
/// This is the dimension of the degree-`k` part of the classical
/// homogeneous coordinate ring of `Gr(r, n)`.
pub fn rectangle_tableaux_count(r: usize, k: usize, n: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..r {
        for j in 0..k {
            let content = n as i64 + j as i64 - i as i64;
            if content <= 0 {
                return BigInt::zero();
            }
            num *= BigInt::from(content);
            den *= BigInt::from((k - j - 1) + (r - i - 1) + 1);
        }
    }
    let (q, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    q
}
