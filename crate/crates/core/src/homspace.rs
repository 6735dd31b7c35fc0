//! Quantum projective homogeneous spaces of matrix groups.
//!
//! A [`ParabolicContext`] fixes a block-parabolic quotient `π` of
//! `O_q(M_n)` together with a candidate section `d`. From it we get the
//! semi-invariance test `Δ_π(ℓ) = ℓ ⊗ π(d^k)`, the graded components of
//! the quantum homogeneous space, Plücker relations for Grassmannians and the
//! big-cell coordinates `t_ij`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;

use crate::classical::{rectangle_tableaux_count, CommPoly, CommTensor};
use crate::error::{Error, Result};
use crate::linalg::{poly_kernel, poly_rank, rank};
use crate::qcoeff::{LaurentPoly, Rational};
use crate::qmatrix::{homog_basis, AlgebraContext, BlockShape, Monomial, QElement, TensorElement};
use crate::qminors::{principal_minor, row_minor, IndexTuple};

/// Default cap on the dimension of a homogeneous component handed to the solver.
pub const DEFAULT_MAX_COMPONENT_DIM: usize = 200;

/// A parabolic quotient together with a candidate section `d` and its
/// classical image `t`.
#[derive(Clone, Debug)]
pub struct ParabolicContext {
    base: AlgebraContext,
    shape: BlockShape,
    d: QElement,
    t: CommPoly,
}

impl ParabolicContext {
    /// Uses `t = d|_{q=1}`.
    pub fn new(base: &AlgebraContext, shape: BlockShape, d: QElement) -> Result<Self> {
        if shape.n() != base.n() || d.ctx() != base {
            return Err(Error::ContextMismatch {
                left: base.n(),
                right: shape.n(),
            });
        }
        let t = d.specialize_q1();
        Ok(Self {
            base: base.clone(),
            shape,
            d,
            t,
        })
    }

    /// The Grassmannian `Gr(r, n)` with `d = D^{(1..r)}`.
    pub fn grassmannian(base: &AlgebraContext, r: usize) -> Result<Self> {
        let shape = BlockShape::grassmannian(base.n(), r)?;
        let d = principal_minor(base, r)?;
        Self::new(base, shape, d)
    }

    /// The flag variety of type `(m_1, …, m_s)` with
    /// `d = D^{(m_1)} ⋯ D^{(m_s)}`, a product of principal minors.
    pub fn flag_section(base: &AlgebraContext, flag_type: &[usize]) -> Result<Self> {
        let n = base.n();
        let shape = BlockShape::new(n, flag_type).map_err(|_| Error::InvalidFlagType(flag_type.to_vec()))?;
        let mut d = QElement::one(base);
        for &m in flag_type {
            d = &d * &principal_minor(base, m)?;
        }
        Self::new(base, shape, d)
    }

    /// Replaces the classical section `t`.
    pub fn with_classical_section(mut self, t: CommPoly) -> Self {
        self.t = t;
        self
    }

    pub fn base(&self) -> &AlgebraContext {
        &self.base
    }

    pub fn shape(&self) -> &BlockShape {
        &self.shape
    }

    pub fn d(&self) -> &QElement {
        &self.d
    }

    pub fn t(&self) -> &CommPoly {
        &self.t
    }

    /// First block boundary; for a Grassmannian this is `r`.
    pub fn r(&self) -> usize {
        self.shape.boundaries()[0]
    }

    /// `π(f)`.
    pub fn project(&self, f: &QElement) -> QElement {
        f.project(&self.shape)
    }

    /// `Δ_π = (id ⊗ π) ∘ Δ`.
    pub fn delta_pi(&self, f: &QElement) -> TensorElement {
        f.coproduct().project_right(&self.shape)
    }

    /// `d^k` for `k = 0..=max`.
    fn d_powers(&self, max: usize) -> Vec<QElement> {
        let mut out = vec![QElement::one(&self.base)];
        for k in 1..=max {
            out.push(&out[k - 1] * &self.d);
        }
        out
    }

    /// Smallest `k <= max_k` with `Δ_π(ℓ) = ℓ ⊗ π(d^k)`.
    pub fn semi_invariant_degree(&self, l: &QElement, max_k: usize) -> Option<usize> {
        let lhs = self.delta_pi(l);
        self.d_powers(max_k)
            .iter()
            .position(|dk| lhs == TensorElement::outer(l, &self.project(dk)))
    }

    /// Classifies `d` as a pre-quantum or quantum section.
    ///
    /// The quantum condition `π([d, s]) = 0` is checked for every `s` in
    /// `spanning_set`.
    pub fn classify_section(&self, spanning_set: &[QElement]) -> SectionReport {
        let eps = self.d.counit();
        if !eps.is_one() {
            return SectionReport::new(
                SectionClass::NotSection,
                Some(format!("counit of d is {eps}, expected 1")),
            );
        }
        let lhs = self.delta_pi(&self.d);
        let rhs = TensorElement::outer(&self.d, &self.project(&self.d));
        if lhs != rhs {
            return SectionReport::new(
                SectionClass::NotSection,
                Some(format!("Δ_π(d) - d ⊗ π(d) = {}", lhs.sub(&rhs))),
            );
        }
        if self.d.specialize_q1() != self.t {
            return SectionReport::new(
                SectionClass::NotSection,
                Some(format!(
                    "d at q = 1 is {}, expected {}",
                    self.d.specialize_q1(),
                    self.t
                )),
            );
        }
        for s in spanning_set {
            let c = self.project(&self.d.commutator(s).expect("same context"));
            if !c.is_zero() {
                return SectionReport::new(
                    SectionClass::PreQuantum,
                    Some(format!("π([d, {s}]) = {c}")),
                );
            }
        }
        SectionReport::new(SectionClass::Quantum, None)
    }

    /// Classical semi-invariance `Δ_π(f) = f ⊗ π(t^k)` in `O(M_n)`.
    pub fn classical_semi_invariant(&self, f: &CommPoly, k: u32) -> bool {
        let shape = &self.shape;
        let lhs = f.coproduct().map_legs(|a| a.clone(), |b| b.project(shape));
        let rhs = CommTensor::outer(f, &self.t.pow(k).project(shape));
        lhs == rhs
    }

    /// Basis of `{ℓ in degree-x_degree part : Δ_π(ℓ) = ℓ ⊗ π(d^degree)}`.
    ///
    /// The linear system is split by the multiset of row indices of each
    /// monomial, which both sides of the equation preserve.
    pub fn solve_semi_invariants(
        &self,
        degree: usize,
        x_degree: usize,
        max_dim: usize,
    ) -> Result<SemiInvariantComponent> {
        let basis = homog_basis(&self.base, x_degree);
        if basis.len() > max_dim {
            return Err(Error::ComponentTooLarge {
                dim: basis.len(),
                bound: max_dim,
            });
        }
        let n = self.base.n();
        let pd = self.project(&self.d_powers(degree)[degree]);
        let mut blocks: BTreeMap<Vec<usize>, Vec<Monomial>> = BTreeMap::new();
        for m in basis {
            let rows: Vec<usize> = m.gens().iter().map(|&g| g as usize / n).sorted().collect();
            blocks.entry(rows).or_default().push(m);
        }
        let mut out = Vec::new();
        for monos in blocks.values() {
            let columns: Vec<TensorElement> = monos
                .iter()
                .map(|m| {
                    let e = QElement::from_monomial(&self.base, m.clone(), LaurentPoly::one());
                    self.delta_pi(&e).sub(&TensorElement::outer(&e, &pd))
                })
                .collect();
            let keys: BTreeSet<(Monomial, Monomial)> = columns
                .iter()
                .flat_map(|c| c.terms().keys().cloned())
                .collect();
            let mat: Vec<Vec<LaurentPoly>> = keys
                .iter()
                .map(|k| {
                    columns
                        .iter()
                        .map(|c| c.terms().get(k).cloned().unwrap_or_default())
                        .collect()
                })
                .collect();
            let kernel = if mat.is_empty() {
                (0..monos.len())
                    .map(|i| {
                        (0..monos.len())
                            .map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() })
                            .collect()
                    })
                    .collect()
            } else {
                poly_kernel(&mat, monos.len())
            };
            for v in kernel {
                out.push(QElement::from_terms(
                    &self.base,
                    monos.iter().cloned().zip(v),
                ));
            }
        }
        Ok(SemiInvariantComponent {
            degree,
            x_degree,
            basis: out,
        })
    }

    /// Whether `Δ(ℓ)` lies in `O_q(M_n) ⊗ span(component)` for every basis element.
    pub fn check_left_coideal(&self, component: &SemiInvariantComponent) -> bool {
        let base_rank = span_rank(&component.basis);
        component.basis.iter().all(|l| {
            l.coproduct().right_legs().values().all(|leg| {
                let mut ext = component.basis.clone();
                ext.push(leg.clone());
                span_rank(&ext) == base_rank
            })
        })
    }

    /// The minors `D^I` (rows `I`, columns `1..r`) for all `r`-subsets `I`.
    pub fn grassmannian_minors(&self) -> Result<Vec<(IndexTuple, QElement)>> {
        let (n, r) = (self.base.n(), self.r());
        IndexTuple::all(n, r)
            .into_iter()
            .map(|i| row_minor(&self.base, &i).map(|m| (i, m)))
            .collect()
    }

    /// Products of row minors `D^{I_1} ⋯ D^{I_s}` with `|I_k| = m_k` for each
    /// block boundary `m_k`; these span the degree-one semi-invariants.
    pub fn degree_one_spanning_set(&self) -> Result<Vec<QElement>> {
        let n = self.base.n();
        let mut out = vec![QElement::one(&self.base)];
        for &m in self.shape.boundaries() {
            let minors = IndexTuple::all(n, m)
                .into_iter()
                .map(|i| row_minor(&self.base, &i))
                .collect::<Result<Vec<_>>>()?;
            out = out
                .iter()
                .cartesian_product(minors.iter())
                .map(|(a, b)| a * b)
                .collect();
        }
        Ok(out)
    }

    /// Linear relations among the degree-two products `D^I D^J`, `I <= J`.
    pub fn plucker_relations(&self) -> Result<PluckerReport> {
        let minors = self.grassmannian_minors()?;
        let mut labels = Vec::new();
        let mut products = Vec::new();
        for (a, (i, di)) in minors.iter().enumerate() {
            for (j, dj) in minors.iter().skip(a).map(|(j, d)| (j, d)) {
                labels.push((i.clone(), j.clone()));
                products.push(di * dj);
            }
        }
        let mat = coordinate_matrix(&products);
        let image_rank = poly_rank(&mat);
        let kernel = poly_kernel(&mat, products.len());
        let classical: Vec<CommPoly> = products.iter().map(QElement::specialize_q1).collect();
        let classical_rank = comm_span_rank(&classical);
        let expected = rectangle_tableaux_count(self.r(), 2, self.base.n());
        Ok(PluckerReport {
            labels,
            image_rank,
            kernel,
            classical_rank,
            classical_expected: expected,
        })
    }

    /// Twists and Manin relations of the big-cell coordinates.
    pub fn bigcell_manin_check(&self) -> Result<BigCellReport> {
        let ctx = &self.base;
        let (n, r) = (ctx.n(), self.r());
        let d0 = Arc::new(principal_minor(ctx, r)?);
        let mut twists = BTreeMap::new();
        let mut ts: BTreeMap<(usize, usize), OreFraction> = BTreeMap::new();
        for i in r + 1..=n {
            for j in 1..=r {
                let delta = bigcell_delta(ctx, r, i, j)?;
                let a = q_twist(&d0, &delta)
                    .ok_or_else(|| Error::NoQCommutation(format!("Δ_{i}{j} = {delta}")))?;
                twists.insert((i, j), a);
                let sign = (-LaurentPoly::q()).pow((r - j) as u32);
                ts.insert((i, j), OreFraction::new(delta.scale(&sign), &d0, 1, a));
            }
        }
        let failures = manin_failures(&ts, r, false)?;
        let reversed_failures = manin_failures(&ts, r, true)?;
        let checked = ts.len() * ts.len().saturating_sub(1) / 2;
        Ok(BigCellReport {
            twists,
            relations_checked: checked,
            failures,
            reversed_failures,
        })
    }
}

/// Checks the Manin relations of the `(n-r) x r` matrix `T[i][j] = t_ij`.
///
/// With `reverse_columns` the column `j` is relabelled `r + 1 - j` first.
fn manin_failures(
    ts: &BTreeMap<(usize, usize), OreFraction>,
    r: usize,
    reverse_columns: bool,
) -> Result<Vec<String>> {
    let col = |j: usize| if reverse_columns { r + 1 - j } else { j };
    let entry = |i: usize, j: usize| &ts[&(i, col(j))];
    let positions: Vec<(usize, usize)> = ts.keys().map(|&(i, j)| (i, col(j))).sorted().collect();
    let mut failures = Vec::new();
    for (p, &(i, j)) in positions.iter().enumerate() {
        for &(k, l) in &positions[p + 1..] {
            let (tij, tkl) = (entry(i, j), entry(k, l));
            let lhs = tij.mul(tkl)?;
            let rhs = if i == k || j == l {
                // y_ij y_il = q y_il y_ij  and  y_ij y_kj = q y_kj y_ij
                tkl.mul(tij)?.scale(&LaurentPoly::q())
            } else if j > l {
                tkl.mul(tij)?
            } else {
                let corr = entry(i, l).mul(entry(k, j))?;
                tkl.mul(tij)?.add(&corr.scale(&LaurentPoly::q_minus_q_inv()))?
            };
            let diff = lhs.sub(&rhs)?;
            if !diff.is_zero() {
                failures.push(format!(
                    "y_{i}{j} y_{k}{l} (t_{i}{} t_{k}{}): numerator of difference is {}",
                    col(j),
                    col(l),
                    diff.numerator
                ));
            }
        }
    }
    Ok(failures)
}

/// `Δ_ij`: the minor on rows `(1..r without j) ∪ {i}` and columns `1..r`.
pub fn bigcell_delta(ctx: &AlgebraContext, r: usize, i: usize, j: usize) -> Result<QElement> {
    let rows: Vec<usize> = (1..=r).filter(|&k| k != j).chain([i]).sorted().collect();
    row_minor(ctx, &IndexTuple::new(&rows, ctx.n())?)
}

/// Exponent `a` with `d · f = q^a f · d`, if one exists.
pub fn q_twist(d: &QElement, f: &QElement) -> Option<i32> {
    let left = d * f;
    let right = f * d;
    let (m, c) = right.leading_term()?;
    let lc = left.coeff(m);
    let ratio = lc.div_exact(c)?;
    let (a, unit) = ratio.as_monomial()?;
    if !num_traits::One::is_one(unit) {
        return None;
    }
    (right.scale(&LaurentPoly::q_pow(a)) == left).then_some(a)
}

/// Coordinate matrix (rows = monomials, columns = elements).
pub fn coordinate_matrix(elems: &[QElement]) -> Vec<Vec<LaurentPoly>> {
    let monos: BTreeSet<Monomial> = elems.iter().flat_map(|e| e.terms().keys().cloned()).collect();
    monos.iter().map(|m| elems.iter().map(|e| e.coeff(m)).collect()).collect()
}

/// Dimension over `Q(q)` of the span of `elems`.
pub fn span_rank(elems: &[QElement]) -> usize {
    let mat = coordinate_matrix(elems);
    if mat.is_empty() {
        0
    } else {
        poly_rank(&mat)
    }
}

fn comm_span_rank(elems: &[CommPoly]) -> usize {
    let monos: BTreeSet<Monomial> = elems.iter().flat_map(|e| e.terms().keys().cloned()).collect();
    let mat: Vec<Vec<Rational>> = monos
        .iter()
        .map(|m| elems.iter().map(|e| e.coeff(m)).collect())
        .collect();
    if mat.is_empty() {
        0
    } else {
        rank(&mat)
    }
}

/// Whether two finite families span the same subspace over `Q(q)`.
pub fn same_span(a: &[QElement], b: &[QElement]) -> bool {
    let ra = span_rank(a);
    let rb = span_rank(b);
    let both: Vec<QElement> = a.iter().chain(b).cloned().collect();
    ra == rb && span_rank(&both) == ra
}

/// Outcome of [`ParabolicContext::classify_section`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectionClass {
    NotSection,
    PreQuantum,
    Quantum,
}

impl fmt::Display for SectionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SectionClass::NotSection => "not_section",
            SectionClass::PreQuantum => "pre_quantum",
            SectionClass::Quantum => "quantum",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionReport {
    pub classification: SectionClass,
    pub witness: Option<String>,
}

impl SectionReport {
    fn new(classification: SectionClass, witness: Option<String>) -> Self {
        Self {
            classification,
            witness,
        }
    }
}

/// A computed graded piece of the quantum homogeneous space.
#[derive(Clone, Debug)]
pub struct SemiInvariantComponent {
    pub degree: usize,
    pub x_degree: usize,
    pub basis: Vec<QElement>,
}

impl SemiInvariantComponent {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Debug)]
pub struct PluckerReport {
    /// Index pairs `(I, J)` with `I <= J`, one per formal product.
    pub labels: Vec<(IndexTuple, IndexTuple)>,
    pub image_rank: usize,
    /// Relation vectors over the formal products.
    pub kernel: Vec<Vec<LaurentPoly>>,
    /// Rank of the products at `q = 1`.
    pub classical_rank: usize,
    /// Number of semistandard tableaux of shape `r x 2` in `1..=n`.
    pub classical_expected: BigInt,
}

impl PluckerReport {
    pub fn classical_agrees(&self) -> bool {
        BigInt::from(self.classical_rank) == self.classical_expected
            && self.classical_rank == self.image_rank
    }
}

#[derive(Clone, Debug)]
pub struct BigCellReport {
    /// `a` with `D_0 Δ_ij = q^a Δ_ij D_0`.
    pub twists: BTreeMap<(usize, usize), i32>,
    pub relations_checked: usize,
    /// Relations of the matrix `(t_ij)` that fail.
    pub failures: Vec<String>,
    /// Failures for the matrix `(t_{i, r+1-j})` with reversed column order.
    pub reversed_failures: Vec<String>,
}

impl BigCellReport {
    /// Whether `(t_ij)` satisfies every Manin relation.
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// Whether the column-reversed matrix satisfies every Manin relation.
    pub fn ok_reversed(&self) -> bool {
        self.reversed_failures.is_empty()
    }
}

/// `numerator · D_0^{-k}` where `D_0 · numerator = q^weight · numerator · D_0`.
#[derive(Clone, Debug)]
pub struct OreFraction {
    numerator: QElement,
    d0: Arc<QElement>,
    d0_power: u32,
    weight: i32,
}

impl OreFraction {
    pub fn new(numerator: QElement, d0: &Arc<QElement>, d0_power: u32, weight: i32) -> Self {
        Self {
            numerator,
            d0: d0.clone(),
            d0_power,
            weight,
        }
    }

    fn with(&self, numerator: QElement, d0_power: u32, weight: i32) -> Self {
        Self::new(numerator, &self.d0, d0_power, weight)
    }

    pub fn numerator(&self) -> &QElement {
        &self.numerator
    }

    pub fn d0_power(&self) -> u32 {
        self.d0_power
    }

    pub fn weight(&self) -> i32 {
        self.weight
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// `(A D_0^{-a})(B D_0^{-b}) = q^{-a w_B} A B D_0^{-(a+b)}`.
    pub fn mul(&self, other: &OreFraction) -> Result<OreFraction> {
        let twist = LaurentPoly::q_pow(-(self.d0_power as i32) * other.weight);
        Ok(self.with(
            self.numerator.multiply(&other.numerator)?.scale(&twist),
            self.d0_power + other.d0_power,
            self.weight + other.weight,
        ))
    }

    pub fn add(&self, other: &OreFraction) -> Result<OreFraction> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.weight != other.weight {
            return Err(Error::MixedTwist(self.weight, other.weight));
        }
        let k = self.d0_power.max(other.d0_power);
        let a = self.numerator.multiply(&self.d0.pow(k - self.d0_power))?;
        let b = other.numerator.multiply(&self.d0.pow(k - other.d0_power))?;
        Ok(self.with(a.try_add(&b)?, k, self.weight))
    }

    pub fn sub(&self, other: &OreFraction) -> Result<OreFraction> {
        self.add(&other.scale(&-LaurentPoly::one()))
    }

    pub fn scale(&self, c: &LaurentPoly) -> OreFraction {
        self.with(self.numerator.scale(c), self.d0_power, self.weight)
    }
}
