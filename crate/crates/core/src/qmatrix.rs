//! The quantum matrix algebra `O_q(M_n)`.
//!
//! Generators `x[i,j]` are numbered row-major, and elements are stored in
//! PBW normal form: a combination of weakly increasing words ("ordered
//! monomials") with Laurent-polynomial coefficients. Two routes produce
//! normal forms:
//!
//! * [`normal_form`] runs the Manin rewriting system on an arbitrary word,
//!   always rewriting the leftmost out-of-order adjacent pair;
//! * [`QElement::multiply`] inserts the generators of the right factor one at
//!   a time, memoising `(monomial, generator)` products in the context.
//!
//! They are independent enough that agreement between them is a meaningful
//! confluence check.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

use itertools::Itertools;
use num_traits::Zero;

use crate::classical::CommPoly;
use crate::error::{Error, Result};
use crate::qcoeff::LaurentPoly;

/// Index of a generator `x[i,j]` in row-major order, i.e. `(i-1)*n + (j-1)`.
pub type Gen = u8;

type Terms = Vec<(Monomial, LaurentPoly)>;
type TensorTerms = Vec<((Monomial, Monomial), LaurentPoly)>;

/// Ordered (weakly increasing) word in the generators.
///
/// Ordering is graded-lexicographic: shorter words first, then lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<Gen>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    /// Wraps a word that is already weakly increasing.
    pub fn from_sorted(word: Vec<Gen>) -> Self {
        debug_assert!(word.windows(2).all(|w| w[0] <= w[1]), "unsorted word {word:?}");
        Self(word)
    }

    /// Sorts the letters; this is the commutative monomial with the same content.
    pub fn sorted(mut word: Vec<Gen>) -> Self {
        word.sort_unstable();
        Self(word)
    }

    pub fn gens(&self) -> &[Gen] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Product of commuting monomials (merge of sorted words).
    pub fn commutative_mul(&self, other: &Monomial) -> Monomial {
        let mut w = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] <= other.0[j] {
                w.push(self.0[i]);
                i += 1;
            } else {
                w.push(other.0[j]);
                j += 1;
            }
        }
        w.extend_from_slice(&self.0[i..]);
        w.extend_from_slice(&other.0[j..]);
        Monomial(w)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.0)
    }
}

#[derive(Default)]
struct Memo {
    insert: HashMap<(Monomial, Gen), Terms>,
    coproduct: HashMap<Monomial, TensorTerms>,
}

struct ContextInner {
    n: usize,
    memo: RwLock<Memo>,
}

/// Descriptor of `O_q(M_n)` together with a shared product cache.
///
/// Cloning is cheap. Two contexts with the same `n` describe the same algebra;
/// the cache has no observable effect on results.
#[derive(Clone)]
pub struct AlgebraContext {
    inner: Arc<ContextInner>,
}

impl PartialEq for AlgebraContext {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n()
    }
}

impl Eq for AlgebraContext {}

impl fmt::Debug for AlgebraContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O_q(M_{})", self.n())
    }
}

impl AlgebraContext {
    /// # Panics
    /// If `n` is zero or too large for the generator encoding.
    pub fn new(n: usize) -> Self {
        assert!((1..=15).contains(&n), "matrix size must be in 1..=15, got {n}");
        Self {
            inner: Arc::new(ContextInner {
                n,
                memo: RwLock::new(Memo::default()),
            }),
        }
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    pub fn num_generators(&self) -> usize {
        self.n() * self.n()
    }

    /// Generator index of `x[row,col]` (1-based).
    pub fn gen(&self, row: usize, col: usize) -> Result<Gen> {
        let n = self.n();
        if row == 0 || col == 0 || row > n || col > n {
            return Err(Error::InvalidGenerator { row, col, n });
        }
        Ok(((row - 1) * n + (col - 1)) as Gen)
    }

    /// 1-based `(row, col)` of a generator.
    pub fn pos(&self, g: Gen) -> (usize, usize) {
        let n = self.n();
        (g as usize / n + 1, g as usize % n + 1)
    }

    pub fn gen_name(&self, g: Gen) -> String {
        let (i, j) = self.pos(g);
        format!("x[{i},{j}]")
    }

    pub fn monomial_text(&self, m: &Monomial) -> String {
        m.gens().iter().map(|&g| self.gen_name(g)).join("*")
    }

    /// All generators, row-major.
    pub fn generators(&self) -> Vec<QElement> {
        (0..self.num_generators() as Gen)
            .map(|g| QElement::from_monomial(self, Monomial(vec![g]), LaurentPoly::one()))
            .collect()
    }

    /// Normal form of the two-letter word `h g` with `h > g`.
    fn pair_rule(&self, h: Gen, g: Gen) -> Vec<([Gen; 2], LaurentPoly)> {
        debug_assert!(h > g);
        let (k, l) = self.pos(h);
        let (i, j) = self.pos(g);
        if k == i || l == j {
            // x_il x_ij = q^-1 x_ij x_il (j < l), same for columns
            vec![([g, h], LaurentPoly::q_pow(-1))]
        } else if l < j {
            vec![([g, h], LaurentPoly::one())]
        } else {
            // x_kl x_ij = x_ij x_kl - (q - q^-1) x_il x_kj   (i < k, j < l)
            let il = ((i - 1) * self.n() + (l - 1)) as Gen;
            let kj = ((k - 1) * self.n() + (j - 1)) as Gen;
            vec![
                ([g, h], LaurentPoly::one()),
                ([il, kj], -LaurentPoly::q_minus_q_inv()),
            ]
        }
    }

    /// `m * x_g` in normal form.
    fn mul_mono_gen(&self, m: &Monomial, g: Gen) -> Terms {
        match m.0.last() {
            None => return vec![(Monomial(vec![g]), LaurentPoly::one())],
            Some(&h) if h <= g => {
                let mut w = m.0.clone();
                w.push(g);
                return vec![(Monomial(w), LaurentPoly::one())];
            }
            _ => {}
        }
        let key = (m.clone(), g);
        if let Some(hit) = self.inner.memo.read().unwrap().insert.get(&key) {
            return hit.clone();
        }
        let h = *m.0.last().unwrap();
        let prefix = Monomial(m.0[..m.0.len() - 1].to_vec());
        let mut acc: BTreeMap<Monomial, LaurentPoly> = BTreeMap::new();
        for ([lo, hi], c) in self.pair_rule(h, g) {
            for (m2, c2) in self.mul_mono_gen(&prefix, lo) {
                let c12 = &c * &c2;
                for (m3, c3) in self.mul_mono_gen(&m2, hi) {
                    accumulate(&mut acc, m3, &c12 * &c3);
                }
            }
        }
        let out: Terms = acc.into_iter().collect();
        self.inner
            .memo
            .write()
            .unwrap()
            .insert
            .insert(key, out.clone());
        out
    }

    /// Normal form of the product of two ordered monomials.
    fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Terms {
        let mut cur: Terms = vec![(a.clone(), LaurentPoly::one())];
        for &g in b.gens() {
            let mut acc: BTreeMap<Monomial, LaurentPoly> = BTreeMap::new();
            for (m, c) in &cur {
                for (m2, c2) in self.mul_mono_gen(m, g) {
                    accumulate(&mut acc, m2, c * &c2);
                }
            }
            cur = acc.into_iter().collect();
        }
        cur
    }

    fn coproduct_monomial(&self, m: &Monomial) -> TensorTerms {
        if m.is_one() {
            return vec![((Monomial::one(), Monomial::one()), LaurentPoly::one())];
        }
        if let Some(hit) = self.inner.memo.read().unwrap().coproduct.get(m) {
            return hit.clone();
        }
        let n = self.n();
        let g = *m.0.last().unwrap();
        let (i, j) = self.pos(g);
        let prefix = Monomial(m.0[..m.0.len() - 1].to_vec());
        let mut acc: BTreeMap<(Monomial, Monomial), LaurentPoly> = BTreeMap::new();
        for ((left, right), c) in self.coproduct_monomial(&prefix) {
            for k in 1..=n {
                let gl = ((i - 1) * n + (k - 1)) as Gen;
                let gr = ((k - 1) * n + (j - 1)) as Gen;
                let lt = self.mul_mono_gen(&left, gl);
                let rt = self.mul_mono_gen(&right, gr);
                for (ml, cl) in &lt {
                    let c1 = &c * cl;
                    for (mr, cr) in &rt {
                        accumulate(&mut acc, (ml.clone(), mr.clone()), &c1 * cr);
                    }
                }
            }
        }
        let out: TensorTerms = acc.into_iter().collect();
        self.inner
            .memo
            .write()
            .unwrap()
            .coproduct
            .insert(m.clone(), out.clone());
        out
    }
}

fn accumulate<K: Ord>(acc: &mut BTreeMap<K, LaurentPoly>, key: K, c: LaurentPoly) {
    if c.is_zero() {
        return;
    }
    match acc.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Reduces `coeff * word` to PBW normal form with the Manin rewriting system.
///
/// `word` lists 1-based generator positions `(row, col)`. The leftmost
/// out-of-order adjacent pair is rewritten at every step; each step makes the
/// word lexicographically smaller, so the process terminates.
pub fn normal_form(
    ctx: &AlgebraContext,
    word: &[(usize, usize)],
    coeff: LaurentPoly,
) -> Result<QElement> {
    let gens = word
        .iter()
        .map(|&(i, j)| ctx.gen(i, j))
        .collect::<Result<Vec<_>>>()?;
    Ok(normal_form_gens(ctx, &gens, coeff))
}

/// [`normal_form`] on generator indices.
pub fn normal_form_gens(ctx: &AlgebraContext, word: &[Gen], coeff: LaurentPoly) -> QElement {
    let mut pending: BTreeMap<Vec<Gen>, LaurentPoly> = BTreeMap::new();
    let mut done: BTreeMap<Monomial, LaurentPoly> = BTreeMap::new();
    accumulate(&mut pending, word.to_vec(), coeff);
    while let Some((w, c)) = pending.pop_last() {
        match w.windows(2).position(|p| p[0] > p[1]) {
            None => accumulate(&mut done, Monomial(w), c),
            Some(p) => {
                for (pair, rc) in ctx.pair_rule(w[p], w[p + 1]) {
                    let mut next = Vec::with_capacity(w.len());
                    next.extend_from_slice(&w[..p]);
                    next.extend_from_slice(&pair);
                    next.extend_from_slice(&w[p + 2..]);
                    accumulate(&mut pending, next, &c * &rc);
                }
            }
        }
    }
    QElement {
        ctx: ctx.clone(),
        terms: done,
    }
}

/// Ordered monomials of total degree `k`, in increasing order.
pub fn homog_basis(ctx: &AlgebraContext, k: usize) -> Vec<Monomial> {
    (0..ctx.num_generators() as Gen)
        .combinations_with_replacement(k)
        .map(Monomial)
        .collect()
}

/// Parabolic block structure: consecutive row/column blocks separated at the
/// given boundaries. Generators strictly below the block diagonal are killed.
///
/// With one boundary `r` this is the maximal parabolic whose quotient kills
/// `x[i,j]` for `i > r >= j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockShape {
    n: usize,
    boundaries: Vec<usize>,
}

impl BlockShape {
    /// Blocks `1..=m_1, m_1+1..=m_2, ..., m_s+1..=n`.
    pub fn new(n: usize, boundaries: &[usize]) -> Result<Self> {
        let ok = !boundaries.is_empty()
            && boundaries.windows(2).all(|w| w[0] < w[1])
            && boundaries[0] >= 1
            && *boundaries.last().unwrap() < n;
        if !ok {
            return Err(Error::InvalidBlock(format!(
                "boundaries {boundaries:?} must be strictly increasing within 1..{n}"
            )));
        }
        Ok(Self {
            n,
            boundaries: boundaries.to_vec(),
        })
    }

    /// The Grassmannian parabolic with a single boundary `r`.
    pub fn grassmannian(n: usize, r: usize) -> Result<Self> {
        Self::new(n, &[r])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn boundaries(&self) -> &[usize] {
        &self.boundaries
    }

    fn block(&self, i: usize) -> usize {
        self.boundaries.iter().filter(|&&b| b < i).count()
    }

    /// Whether `x[i,j]` lies in the killed lower block part.
    pub fn kills(&self, i: usize, j: usize) -> bool {
        self.block(i) > self.block(j)
    }
}

/// Element of `O_q(M_n)` in PBW normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct QElement {
    ctx: AlgebraContext,
    terms: BTreeMap<Monomial, LaurentPoly>,
}

impl QElement {
    pub fn zero(ctx: &AlgebraContext) -> Self {
        Self {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &AlgebraContext) -> Self {
        Self::scalar(ctx, LaurentPoly::one())
    }

    pub fn scalar(ctx: &AlgebraContext, c: LaurentPoly) -> Self {
        Self::from_monomial(ctx, Monomial::one(), c)
    }

    /// The generator `x[row,col]`.
    pub fn generator(ctx: &AlgebraContext, row: usize, col: usize) -> Result<Self> {
        let g = ctx.gen(row, col)?;
        Ok(Self::from_monomial(ctx, Monomial(vec![g]), LaurentPoly::one()))
    }

    /// `c * m` for an ordered monomial `m`.
    pub fn from_monomial(ctx: &AlgebraContext, m: Monomial, c: LaurentPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// Builds an element from ordered monomials; repeated keys are summed.
    pub fn from_terms<I>(ctx: &AlgebraContext, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, LaurentPoly)>,
    {
        let mut acc = BTreeMap::new();
        for (m, c) in terms {
            accumulate(&mut acc, m, c);
        }
        Self {
            ctx: ctx.clone(),
            terms: acc,
        }
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, LaurentPoly> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> LaurentPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree if every term has the same degree (zero counts as any).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn check_ctx(&self, other: &QElement) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch {
                left: self.ctx.n(),
                right: other.ctx.n(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &QElement) -> Result<QElement> {
        self.check_ctx(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(QElement {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &QElement) -> Result<QElement> {
        self.try_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> QElement {
        QElement {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Product in normal form.
    pub fn multiply(&self, other: &QElement) -> Result<QElement> {
        self.check_ctx(other)?;
        let mut acc = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c12 = c1 * c2;
                for (m, c) in self.ctx.mul_monomials(m1, m2) {
                    accumulate(&mut acc, m, &c12 * &c);
                }
            }
        }
        Ok(QElement {
            ctx: self.ctx.clone(),
            terms: acc,
        })
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &QElement) -> Result<QElement> {
        self.multiply(other)?.try_sub(&other.multiply(self)?)
    }

    pub fn pow(&self, k: u32) -> QElement {
        let mut acc = QElement::one(&self.ctx);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &LaurentPoly) -> QElement {
        QElement::from_terms(
            &self.ctx,
            self.terms.iter().map(|(m, x)| (m.clone(), x * c)),
        )
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<F>(&self, f: F) -> QElement
    where
        F: Fn(&LaurentPoly) -> LaurentPoly,
    {
        QElement::from_terms(&self.ctx, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Coproduct `Δ`, extended multiplicatively from `Δ(x_ij) = Σ_k x_ik ⊗ x_kj`.
    pub fn coproduct(&self) -> TensorElement {
        let mut acc = BTreeMap::new();
        for (m, c) in &self.terms {
            for (key, c2) in self.ctx.coproduct_monomial(m) {
                accumulate(&mut acc, key, c * &c2);
            }
        }
        TensorElement {
            ctx: self.ctx.clone(),
            terms: acc,
        }
    }

    /// Counit `ε`, the algebra map with `ε(x_ij) = δ_ij`.
    pub fn counit(&self) -> LaurentPoly {
        let n = self.ctx.n();
        let mut acc = LaurentPoly::zero();
        for (m, c) in &self.terms {
            if m.gens().iter().all(|&g| g as usize / n == g as usize % n) {
                acc += c;
            }
        }
        acc
    }

    /// Image in the commutative ring `O(M_n)` at `q = 1`.
    pub fn specialize_q1(&self) -> CommPoly {
        CommPoly::from_terms(
            self.ctx.n(),
            self.terms.iter().map(|(m, c)| (m.clone(), c.eval_at_one())),
        )
    }

    /// Image in the quotient killing the lower-left `(n-r) x r` block.
    pub fn parabolic_project(&self, r: usize) -> Result<QElement> {
        let shape = BlockShape::grassmannian(self.ctx.n(), r)?;
        Ok(self.project(&shape))
    }

    /// Kills every monomial containing a generator below the block diagonal.
    ///
    /// The killed generators span a two-sided ideal whose complement is spanned
    /// by the surviving ordered monomials, so this is an algebra map.
    pub fn project(&self, shape: &BlockShape) -> QElement {
        assert_eq!(shape.n(), self.ctx.n(), "block shape for a different n");
        let ctx = &self.ctx;
        QElement {
            ctx: ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| {
                    m.gens().iter().all(|&g| {
                        let (i, j) = ctx.pos(g);
                        !shape.kills(i, j)
                    })
                })
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficient vector on a list of monomials (missing entries are zero).
    pub fn coords(&self, basis: &[Monomial]) -> Vec<LaurentPoly> {
        basis.iter().map(|m| self.coeff(m)).collect()
    }

    /// Whether every coefficient is divisible by `(q - 1)`.
    pub fn is_divisible_by_qm1(&self) -> bool {
        self.terms.values().all(|c| c.eval_at_one().is_zero())
    }

    /// Exact division of every coefficient by `(q - 1)`.
    pub fn div_qm1(&self) -> Result<QElement> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = c.div_qm1().map_err(|_| Error::NotDivisible(self.to_string()))?;
            terms.insert(m.clone(), d);
        }
        Ok(QElement {
            ctx: self.ctx.clone(),
            terms,
        })
    }
}

/// Formats a coefficient-times-monomial term; `mono` may be empty.
pub(crate) fn fmt_coeff_term(coeff_text: &str, single: bool, mono: &str) -> String {
    if mono.is_empty() {
        return coeff_text.to_string();
    }
    match coeff_text {
        "1" => mono.to_string(),
        "-1" => format!("-{mono}"),
        c if single => format!("{c}*{mono}"),
        c => format!("({c})*{mono}"),
    }
}

/// Joins term texts with ` + ` / ` - `.
pub(crate) fn join_terms<I: IntoIterator<Item = String>>(terms: I) -> String {
    let mut out = String::new();
    for (i, t) in terms.into_iter().enumerate() {
        if i == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

impl fmt::Display for QElement {
    /// Terms in graded-lex order, e.g. `x[1,1]*x[2,2] - q*x[1,2]*x[2,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = join_terms(self.terms.iter().map(|(m, c)| {
            let mono = self.ctx.monomial_text(m);
            fmt_coeff_term(&c.to_string(), c.terms().len() == 1, &mono)
        }));
        write!(f, "{text}")
    }
}

impl fmt::Debug for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QElement[n={}]({self})", self.ctx.n())
    }
}

impl Add for &QElement {
    type Output = QElement;
    /// # Panics
    /// On a context mismatch; use [`QElement::try_add`] to get an error instead.
    fn add(self, rhs: &QElement) -> QElement {
        self.try_add(rhs).expect("context mismatch")
    }
}

impl Sub for &QElement {
    type Output = QElement;
    fn sub(self, rhs: &QElement) -> QElement {
        self.try_sub(rhs).expect("context mismatch")
    }
}

impl Mul for &QElement {
    type Output = QElement;
    fn mul(self, rhs: &QElement) -> QElement {
        self.multiply(rhs).expect("context mismatch")
    }
}

impl Neg for &QElement {
    type Output = QElement;
    fn neg(self) -> QElement {
        self.neg_ref()
    }
}

impl Add for QElement {
    type Output = QElement;
    fn add(self, rhs: QElement) -> QElement {
        &self + &rhs
    }
}

impl Sub for QElement {
    type Output = QElement;
    fn sub(self, rhs: QElement) -> QElement {
        &self - &rhs
    }
}

impl Mul for QElement {
    type Output = QElement;
    fn mul(self, rhs: QElement) -> QElement {
        &self * &rhs
    }
}

/// Element of `O_q(M_n) ⊗ O_q(M_n)`, both legs in normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    ctx: AlgebraContext,
    terms: BTreeMap<(Monomial, Monomial), LaurentPoly>,
}

impl TensorElement {
    pub fn zero(ctx: &AlgebraContext) -> Self {
        Self {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `a ⊗ b`.
    pub fn outer(a: &QElement, b: &QElement) -> Self {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &a.terms {
            for (m2, c2) in &b.terms {
                accumulate(&mut terms, (m1.clone(), m2.clone()), c1 * c2);
            }
        }
        Self {
            ctx: a.ctx.clone(),
            terms,
        }
    }

    pub fn terms(&self) -> &BTreeMap<(Monomial, Monomial), LaurentPoly> {
        &self.terms
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            accumulate(&mut terms, k.clone(), c.clone());
        }
        TensorElement {
            ctx: self.ctx.clone(),
            terms,
        }
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            accumulate(&mut terms, k.clone(), -c);
        }
        TensorElement {
            ctx: self.ctx.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> TensorElement {
        let mut terms = BTreeMap::new();
        for (k, x) in &self.terms {
            accumulate(&mut terms, k.clone(), x * c);
        }
        TensorElement {
            ctx: self.ctx.clone(),
            terms,
        }
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn multiply(&self, other: &TensorElement) -> TensorElement {
        let ctx = &self.ctx;
        let mut acc = BTreeMap::new();
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                let c12 = c1 * c2;
                let left = ctx.mul_monomials(a, c);
                let right = ctx.mul_monomials(b, d);
                for (ml, cl) in &left {
                    let cc = &c12 * cl;
                    for (mr, cr) in &right {
                        accumulate(&mut acc, (ml.clone(), mr.clone()), &cc * cr);
                    }
                }
            }
        }
        TensorElement {
            ctx: ctx.clone(),
            terms: acc,
        }
    }

    /// Applies a linear map to the left leg.
    pub fn map_left<F>(&self, f: F) -> TensorElement
    where
        F: Fn(&QElement) -> QElement,
    {
        self.map_legs(|m| f(&QElement::from_monomial(&self.ctx, m.clone(), LaurentPoly::one())), |m| {
            QElement::from_monomial(&self.ctx, m.clone(), LaurentPoly::one())
        })
    }

    /// Applies a linear map to the right leg.
    pub fn map_right<F>(&self, f: F) -> TensorElement
    where
        F: Fn(&QElement) -> QElement,
    {
        self.map_legs(
            |m| QElement::from_monomial(&self.ctx, m.clone(), LaurentPoly::one()),
            |m| f(&QElement::from_monomial(&self.ctx, m.clone(), LaurentPoly::one())),
        )
    }

    fn map_legs<F, G>(&self, fl: F, fr: G) -> TensorElement
    where
        F: Fn(&Monomial) -> QElement,
        G: Fn(&Monomial) -> QElement,
    {
        let mut acc = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            let la = fl(a);
            let rb = fr(b);
            for (ma, ca) in &la.terms {
                let cc = c * ca;
                for (mb, cb) in &rb.terms {
                    accumulate(&mut acc, (ma.clone(), mb.clone()), &cc * cb);
                }
            }
        }
        TensorElement {
            ctx: self.ctx.clone(),
            terms: acc,
        }
    }

    /// Projects the right leg onto the quotient given by `shape`.
    pub fn project_right(&self, shape: &BlockShape) -> TensorElement {
        let ctx = &self.ctx;
        TensorElement {
            ctx: ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|((_, b), _)| {
                    b.gens().iter().all(|&g| {
                        let (i, j) = ctx.pos(g);
                        !shape.kills(i, j)
                    })
                })
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Groups terms by left monomial: `Σ_m m ⊗ R_m`.
    pub fn right_legs(&self) -> BTreeMap<Monomial, QElement> {
        let mut out: BTreeMap<Monomial, QElement> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            let e = out.entry(a.clone()).or_insert_with(|| QElement::zero(&self.ctx));
            accumulate(&mut e.terms, b.clone(), c.clone());
        }
        out
    }

    /// `(ε ⊗ id)` applied to `self`.
    pub fn counit_left(&self) -> QElement {
        let mut acc = QElement::zero(&self.ctx);
        for ((a, b), c) in &self.terms {
            let e = QElement::from_monomial(&self.ctx, a.clone(), c.clone()).counit();
            accumulate(&mut acc.terms, b.clone(), e);
        }
        acc
    }

    /// `(id ⊗ ε)` applied to `self`.
    pub fn counit_right(&self) -> QElement {
        let mut acc = QElement::zero(&self.ctx);
        for ((a, b), c) in &self.terms {
            let e = QElement::from_monomial(&self.ctx, b.clone(), c.clone()).counit();
            accumulate(&mut acc.terms, a.clone(), e);
        }
        acc
    }
}

impl fmt::Display for TensorElement {
    /// Terms like `x[1,1] (x) x[1,1] + (q^-1 - q)*x[1,2] (x) x[2,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let leg = |m: &Monomial| {
            if m.is_one() {
                "1".to_string()
            } else {
                self.ctx.monomial_text(m)
            }
        };
        let text = join_terms(self.terms.iter().map(|((a, b), c)| {
            let body = format!("{} (x) {}", leg(a), leg(b));
            fmt_coeff_term(&c.to_string(), c.terms().len() == 1, &body)
        }));
        write!(f, "{text}")
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({self})")
    }
}

/// Three-fold tensors, used for coassociativity checks.
pub fn coassociativity_defect(f: &QElement) -> BTreeMap<(Monomial, Monomial, Monomial), LaurentPoly> {
    let ctx = f.ctx();
    let mut acc = BTreeMap::new();
    for ((a, b), c) in f.coproduct().terms() {
        // (Δ ⊗ id)Δ
        for ((a1, a2), c1) in ctx.coproduct_monomial(a) {
            accumulate(&mut acc, (a1, a2, b.clone()), c * &c1);
        }
        // -(id ⊗ Δ)Δ
        for ((b1, b2), c2) in ctx.coproduct_monomial(b) {
            accumulate(&mut acc, (a.clone(), b1, b2), -(c * &c2));
        }
    }
    acc
}

impl QElement {
    /// Whether the element is a nonzero scalar multiple of the identity.
    pub fn as_scalar(&self) -> Option<LaurentPoly> {
        match self.terms.len() {
            0 => Some(LaurentPoly::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &LaurentPoly)> {
        self.terms.iter().next_back()
    }

    pub fn is_one(&self) -> bool {
        self.as_scalar().is_some_and(|c| c.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(ctx: &AlgebraContext, i: usize, j: usize) -> QElement {
        QElement::generator(ctx, i, j).unwrap()
    }

    #[test]
    fn two_by_two_relations() {
        let ctx = AlgebraContext::new(2);
        let (a, b, c, d) = (x(&ctx, 1, 1), x(&ctx, 1, 2), x(&ctx, 2, 1), x(&ctx, 2, 2));
        let one = LaurentPoly::one();
        assert_eq!(normal_form(&ctx, &[(2, 1), (1, 2)], one.clone()).unwrap(), &b * &c);
        assert_eq!(
            normal_form(&ctx, &[(1, 2), (1, 1)], one.clone()).unwrap(),
            (&a * &b).scale(&LaurentPoly::q_pow(-1))
        );
        let da = normal_form(&ctx, &[(2, 2), (1, 1)], one).unwrap();
        let expected = &(&a * &d) - &(&b * &c).scale(&LaurentPoly::q_minus_q_inv());
        assert_eq!(da, expected);
        assert_eq!(da.to_string(), "x[1,1]*x[2,2] + (q^-1 - q)*x[1,2]*x[2,1]");
        assert_eq!(&a * &b, (&b * &a).scale(&LaurentPoly::q()));
        assert_eq!(&a * &c, (&c * &a).scale(&LaurentPoly::q()));
    }

    #[test]
    fn commutators() {
        let ctx = AlgebraContext::new(2);
        let (a, b, c, d) = (x(&ctx, 1, 1), x(&ctx, 1, 2), x(&ctx, 2, 1), x(&ctx, 2, 2));
        assert_eq!(
            a.commutator(&d).unwrap(),
            (&b * &c).scale(&LaurentPoly::q_minus_q_inv())
        );
        assert!(b.commutator(&c).unwrap().is_zero());
        assert_eq!(&QElement::one(&ctx) * &a, a);
    }

    #[test]
    fn invalid_generator_and_context_mismatch() {
        let ctx = AlgebraContext::new(2);
        assert_eq!(
            normal_form(&ctx, &[(3, 1)], LaurentPoly::one()),
            Err(Error::InvalidGenerator { row: 3, col: 1, n: 2 })
        );
        let other = AlgebraContext::new(3);
        assert!(matches!(
            x(&ctx, 1, 1).multiply(&x(&other, 1, 1)),
            Err(Error::ContextMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn coproduct_and_counit_of_generators() {
        let ctx = AlgebraContext::new(2);
        assert_eq!(
            x(&ctx, 1, 1).coproduct().to_string(),
            "x[1,1] (x) x[1,1] + x[1,2] (x) x[2,1]"
        );
        assert!(x(&ctx, 1, 2).counit().is_zero());
        assert!(x(&ctx, 2, 2).counit().is_one());
        assert_eq!(QElement::one(&ctx).coproduct().to_string(), "1 (x) 1");
    }

    #[test]
    fn specialization_and_projection() {
        let ctx = AlgebraContext::new(2);
        let (a, b, c, d) = (x(&ctx, 1, 1), x(&ctx, 1, 2), x(&ctx, 2, 1), x(&ctx, 2, 2));
        let e = &(&a * &d) - &(&b * &c).scale(&LaurentPoly::q_minus_q_inv());
        assert_eq!(e.specialize_q1().to_string(), "x[1,1]*x[2,2]");
        let det = &(&a * &d) - &(&b * &c).scale(&LaurentPoly::q());
        assert_eq!(det.parabolic_project(1).unwrap(), &a * &d);
        assert!(c.parabolic_project(1).unwrap().is_zero());
        assert_eq!(a.parabolic_project(1).unwrap(), a);
        assert!(matches!(a.parabolic_project(2), Err(Error::InvalidBlock(_))));
    }

    #[test]
    fn homogeneous_basis_sizes() {
        assert_eq!(homog_basis(&AlgebraContext::new(2), 1).len(), 4);
        assert_eq!(homog_basis(&AlgebraContext::new(2), 2).len(), 10);
        assert_eq!(homog_basis(&AlgebraContext::new(4), 2).len(), 136);
        assert_eq!(homog_basis(&AlgebraContext::new(3), 0).len(), 1);
    }

    #[test]
    fn one_by_one_is_commutative() {
        let ctx = AlgebraContext::new(1);
        let a = x(&ctx, 1, 1);
        let a3 = a.pow(3);
        assert_eq!(a3.to_string(), "x[1,1]*x[1,1]*x[1,1]");
        assert_eq!(a3.coproduct(), TensorElement::outer(&a3, &a3));
        assert!(coassociativity_defect(&a3).is_empty());
    }

    #[test]
    fn display_of_constants_and_zero() {
        let ctx = AlgebraContext::new(2);
        assert_eq!(QElement::zero(&ctx).to_string(), "0");
        let e = &QElement::scalar(&ctx, LaurentPoly::from_terms([(0, crate::rat(-1)), (1, crate::rat(1))]))
            - &x(&ctx, 1, 2);
        assert_eq!(e.to_string(), "-1 + q - x[1,2]");
    }
}
