//! Quantum minors, the quantum determinant and the localization
//! `O_q(GL_n) = O_q(M_n)[det_q^-1]`.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::qcoeff::LaurentPoly;
use crate::qmatrix::{AlgebraContext, QElement, TensorElement};

/// Strictly increasing tuple of 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple(Vec<usize>);

impl IndexTuple {
    /// Validates strict monotonicity and the range `1..=n`.
    pub fn new(indices: &[usize], n: usize) -> Result<Self> {
        let ok = !indices.is_empty()
            && indices.len() <= n
            && indices[0] >= 1
            && *indices.last().unwrap() <= n
            && indices.windows(2).all(|w| w[0] < w[1]);
        if !ok {
            return Err(Error::InvalidIndexTuple(indices.to_vec()));
        }
        Ok(Self(indices.to_vec()))
    }

    /// `(1, 2, ..., r)`.
    pub fn initial(r: usize) -> Self {
        Self((1..=r).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All `r`-subsets of `1..=n` in lexicographic order.
    pub fn all(n: usize, r: usize) -> Vec<IndexTuple> {
        (1..=n).combinations(r).map(IndexTuple).collect()
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .flat_map(|a| (a + 1..p.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| p[a] > p[b])
        .count()
}

/// `D^I_J = Σ_σ (-q)^{ℓ(σ)} x[i_1, j_σ(1)] ⋯ x[i_r, j_σ(r)]`.
pub fn quantum_minor(ctx: &AlgebraContext, rows: &IndexTuple, cols: &IndexTuple) -> Result<QElement> {
    if rows.len() != cols.len() {
        return Err(Error::SizeMismatch {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    for t in [rows, cols] {
        if t.0.last().is_some_and(|&m| m > ctx.n()) {
            return Err(Error::InvalidIndexTuple(t.0.clone()));
        }
    }
    let r = rows.len();
    let minus_q = -LaurentPoly::q();
    let mut acc = QElement::zero(ctx);
    for perm in (0..r).permutations(r) {
        let mut term = QElement::scalar(ctx, minus_q.pow(inversions(&perm) as u32));
        for (k, &s) in perm.iter().enumerate() {
            term = &term * &QElement::generator(ctx, rows.0[k], cols.0[s])?;
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// `det_q = D^{1..n}_{1..n}`.
pub fn quantum_det(ctx: &AlgebraContext) -> QElement {
    let all = IndexTuple::initial(ctx.n());
    quantum_minor(ctx, &all, &all).expect("full index tuples are valid")
}

/// Principal minor on rows and columns `1..=m`.
pub fn principal_minor(ctx: &AlgebraContext, m: usize) -> Result<QElement> {
    let t = IndexTuple::new(&(1..=m).collect::<Vec<_>>(), ctx.n())?;
    quantum_minor(ctx, &t, &t)
}

/// `D^I := D^I_{(1..r)}`, the minor on rows `I` and the first `r` columns.
pub fn row_minor(ctx: &AlgebraContext, rows: &IndexTuple) -> Result<QElement> {
    quantum_minor(ctx, rows, &IndexTuple::initial(rows.len()))
}

/// Checks `Δ(D^I_J) = Σ_K D^I_K ⊗ D^K_J` and `ε(D^I_J) = δ_{I,J}`.
pub fn check_minor_coproduct(ctx: &AlgebraContext, rows: &IndexTuple, cols: &IndexTuple) -> Result<bool> {
    let m = quantum_minor(ctx, rows, cols)?;
    let mut rhs = TensorElement::zero(ctx);
    for k in IndexTuple::all(ctx.n(), rows.len()) {
        let left = quantum_minor(ctx, rows, &k)?;
        let right = quantum_minor(ctx, &k, cols)?;
        rhs = rhs.add(&TensorElement::outer(&left, &right));
    }
    let expected_counit = if rows == cols {
        LaurentPoly::one()
    } else {
        LaurentPoly::zero()
    };
    Ok(m.coproduct() == rhs && m.counit() == expected_counit)
}

/// First generator that fails to commute with `f`, if any.
pub fn central_witness(f: &QElement) -> Option<(usize, usize, QElement)> {
    let ctx = f.ctx();
    let n = ctx.n();
    for i in 1..=n {
        for j in 1..=n {
            let g = QElement::generator(ctx, i, j).expect("in range");
            let c = f.commutator(&g).expect("same context");
            if !c.is_zero() {
                return Some((i, j, c));
            }
        }
    }
    None
}

/// Whether `f` commutes with all `n^2` generators.
pub fn check_central(f: &QElement) -> bool {
    central_witness(f).is_none()
}

/// Element `numerator * det_q^{-k}` of `O_q(GL_n)`.
///
/// Since `det_q` is central, fractions multiply componentwise.
#[derive(Clone, Debug)]
pub struct CentralFraction {
    numerator: QElement,
    det_power: u32,
}

impl CentralFraction {
    pub fn new(numerator: QElement, det_power: u32) -> Self {
        Self {
            numerator,
            det_power,
        }
    }

    pub fn from_element(numerator: QElement) -> Self {
        Self::new(numerator, 0)
    }

    /// `det_q^{-1}`.
    pub fn det_inverse(ctx: &AlgebraContext) -> Self {
        Self::new(QElement::one(ctx), 1)
    }

    pub fn numerator(&self) -> &QElement {
        &self.numerator
    }

    pub fn det_power(&self) -> u32 {
        self.det_power
    }

    pub fn ctx(&self) -> &AlgebraContext {
        self.numerator.ctx()
    }

    fn det_pow(&self, k: u32) -> QElement {
        quantum_det(self.ctx()).pow(k)
    }

    pub fn mul(&self, other: &CentralFraction) -> Result<CentralFraction> {
        Ok(Self::new(
            self.numerator.multiply(&other.numerator)?,
            self.det_power + other.det_power,
        ))
    }

    pub fn add(&self, other: &CentralFraction) -> Result<CentralFraction> {
        let k = self.det_power.max(other.det_power);
        let a = self.numerator.multiply(&self.det_pow(k - self.det_power))?;
        let b = other.numerator.multiply(&other.det_pow(k - other.det_power))?;
        Ok(Self::new(a.try_add(&b)?, k))
    }

    pub fn sub(&self, other: &CentralFraction) -> Result<CentralFraction> {
        self.add(&Self::new(-&other.numerator, other.det_power))
    }

    pub fn scale(&self, c: &LaurentPoly) -> CentralFraction {
        Self::new(self.numerator.scale(c), self.det_power)
    }

    /// Equality by cross-multiplication with powers of `det_q`.
    pub fn equals(&self, other: &CentralFraction) -> Result<bool> {
        let a = self.numerator.multiply(&self.det_pow(other.det_power))?;
        let b = other.numerator.multiply(&other.det_pow(self.det_power))?;
        Ok(a == b)
    }

    /// Image in `O_q(SL_n)` obtained by setting `det_q = 1` in the denominator.
    pub fn substitute_det_one(&self) -> QElement {
        self.numerator.clone()
    }

    pub fn is_polynomial(&self) -> bool {
        self.det_power == 0
    }
}

impl fmt::Display for CentralFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.det_power {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({}) * det^-1", self.numerator),
            k => write!(f, "({}) * det^-{k}", self.numerator),
        }
    }
}
