//! The quantum duality principle in low degree.
//!
//! Elements of `O_q(M_n)` are rewritten in the variables `y_ij = x_ij - δ_ij`
//! centred at the identity. Ordered `x`-monomials and ordered `y`-monomials
//! are related by a unitriangular substitution, so the ordered `y`-monomials
//! form a basis as well.
//!
//! The filtration `I^k`, with `I = ker ε + (q - 1)`, is read off from the
//! weighted degree: `y`-degree plus the `(q - 1)`-adic valuation of the
//! coefficient, minimised over terms.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::homspace::{bigcell_delta, span_rank, ParabolicContext};
use crate::liebialg::{block_parabolic, build_gl_dual, LieBialgebra, Subspace, Vector};
use crate::linalg::kernel;
use crate::qcoeff::{LaurentPoly, Rational};
use crate::qmatrix::{fmt_coeff_term, join_terms, AlgebraContext, BlockShape, Gen, Monomial, QElement};
use crate::qminors::{principal_minor, quantum_det, IndexTuple};

fn is_diagonal(ctx: &AlgebraContext, g: Gen) -> bool {
    let (i, j) = ctx.pos(g);
    i == j
}

/// Polynomial in the ordered variables `y_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YPoly {
    ctx: AlgebraContext,
    terms: BTreeMap<Monomial, LaurentPoly>,
}

impl YPoly {
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

    /// Smallest `y`-degree of a term.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// Minimum over terms of `y`-degree plus `(q - 1)`-valuation.
    pub fn weighted_degree(&self) -> Option<usize> {
        self.terms
            .iter()
            .map(|(m, c)| m.degree() + c.qm1_valuation().unwrap_or(0) as usize)
            .min()
    }

    /// Drops every term of `y`-degree above `max`.
    pub fn truncate(&self, max: usize) -> YPoly {
        YPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= max)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Back to `x`-normal form.
    pub fn to_element(&self) -> QElement {
        let ctx = &self.ctx;
        let mut acc = QElement::zero(ctx);
        for (m, c) in &self.terms {
            acc = &acc + &expand_ordered(ctx, m, c, true);
        }
        acc
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = join_terms(self.terms.iter().map(|(m, c)| {
            let mono = m
                .gens()
                .iter()
                .map(|&g| {
                    let (i, j) = self.ctx.pos(g);
                    format!("y[{i},{j}]")
                })
                .collect::<Vec<_>>()
                .join("*");
            fmt_coeff_term(&c.to_string(), c.terms().len() == 1, &mono)
        }));
        write!(f, "{text}")
    }
}

/// Expands an ordered monomial under `x = δ + y` (or `y = x - δ` when
/// `to_x` is set). Subwords of an ordered word stay ordered, so the
/// result needs no rewriting.
fn expand_ordered(ctx: &AlgebraContext, m: &Monomial, c: &LaurentPoly, to_x: bool) -> QElement {
    let mut acc: BTreeMap<Vec<Gen>, LaurentPoly> = BTreeMap::new();
    acc.insert(Vec::new(), c.clone());
    for &g in m.gens() {
        let mut next: BTreeMap<Vec<Gen>, LaurentPoly> = BTreeMap::new();
        for (w, v) in acc {
            let mut w2 = w.clone();
            w2.push(g);
            *next.entry(w2).or_default() += &v;
            if is_diagonal(ctx, g) {
                let s = if to_x { -&v } else { v };
                *next.entry(w).or_default() += &s;
            }
        }
        acc = next;
    }
    QElement::from_terms(ctx, acc.into_iter().map(|(w, v)| (Monomial::from_sorted(w), v)))
}

/// Rewrites `f` in the variables `y_ij = x_ij - δ_ij`.
pub fn shift_to_identity(f: &QElement) -> YPoly {
    let ctx = f.ctx();
    let mut terms: BTreeMap<Monomial, LaurentPoly> = BTreeMap::new();
    for (m, c) in f.terms() {
        let e = expand_ordered(ctx, m, c, false);
        for (m2, c2) in e.terms() {
            *terms.entry(m2.clone()).or_default() += c2;
        }
    }
    terms.retain(|_, c| !c.is_zero());
    YPoly {
        ctx: ctx.clone(),
        terms,
    }
}

/// Degree-one part of a function at the identity, in the cotangent basis `e[i,j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearPart {
    n: usize,
    coeffs: Vector,
}

impl LinearPart {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficients indexed row-major by `(i, j)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.coeffs[(i - 1) * self.n + (j - 1)].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Label of coordinate `k`.
    pub fn label(&self, k: usize) -> String {
        format!("e[{},{}]", k / self.n + 1, k % self.n + 1)
    }
}

impl fmt::Display for LinearPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
            let l = self.label(k);
            let ct = crate::qcoeff::fmt_rational(c);
            fmt_coeff_term(&ct, true, &l)
        });
        write!(f, "{}", join_terms(terms))
    }
}

/// Degree-one `y`-coefficients of `f` evaluated at `q = 1`, with no
/// condition on the constant term.
pub fn linear_coefficients(f: &QElement) -> LinearPart {
    let ctx = f.ctx();
    let n = ctx.n();
    let y = shift_to_identity(f);
    let mut coeffs = vec![Rational::zero(); n * n];
    for (m, c) in y.terms() {
        if m.degree() == 1 {
            coeffs[m.gens()[0] as usize] = c.eval_at_one();
        }
    }
    LinearPart { n, coeffs }
}

/// Linear part of `f` at the identity; `f` must vanish there at `q = 1`.
pub fn linear_part_at_identity(f: &QElement) -> Result<LinearPart> {
    if !f.counit().eval_at_one().is_zero() {
        return Err(Error::NotInAugmentationIdeal(f.to_string()));
    }
    Ok(linear_coefficients(f))
}

/// `Σ_{k=0}^{order} (1 - f)^k` in the `y`-variables; `f` must have counit 1.
pub fn truncated_unit_inverse(f: &QElement, order: usize) -> Result<YPoly> {
    if !f.counit().is_one() {
        return Err(Error::NotAUnit(f.to_string()));
    }
    Ok(shift_to_identity(&truncated_unit_inverse_element(f, order)))
}

fn truncated_unit_inverse_element(f: &QElement, order: usize) -> QElement {
    let ctx = f.ctx();
    let u = &QElement::one(ctx) - f;
    let mut acc = QElement::one(ctx);
    let mut power = QElement::one(ctx);
    for _ in 0..order {
        power = &power * &u;
        acc = &acc + &power;
    }
    acc
}

/// `χ_ij = x_ij - δ_ij` for all `i, j`, labelled `e[i,j]`.
pub fn chi_generators(ctx: &AlgebraContext) -> Vec<(String, QElement)> {
    let n = ctx.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let mut x = QElement::generator(ctx, i, j).expect("in range");
            if i == j {
                x = &x - &QElement::one(ctx);
            }
            out.push((format!("e[{i},{j}]"), x));
        }
    }
    out
}

/// Structure constants `[a, b] = Σ_c table[a][b][c] c` on labelled generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    pub labels: Vec<String>,
    pub table: Vec<Vec<Vec<Rational>>>,
}

impl StructureConstants {
    /// The Lie algebra with these constants and zero cobracket.
    pub fn as_lie_algebra(&self) -> LieBialgebra {
        let d = self.labels.len();
        let zero = vec![vec![vec![Rational::zero(); d]; d]; d];
        LieBialgebra::from_tables(self.labels.clone(), self.table.clone(), zero)
            .expect("tables are square")
    }
}

/// Brackets `(q-1)^{-2} [j_μ, j_ν]` reduced modulo `(q - 1)` and `I^2`,
/// written in the given generators.
///
/// The linear parts of the generators must be linearly independent and
/// every bracket must land in their span.
pub fn dual_structure_constants(generators: &[(String, QElement)]) -> Result<StructureConstants> {
    let d = generators.len();
    let mut lins = Vec::with_capacity(d);
    for (_, g) in generators {
        lins.push(linear_part_at_identity(g)?.coeffs);
    }
    let mut table = vec![vec![vec![Rational::zero(); d]; d]; d];
    for a in 0..d {
        for b in a + 1..d {
            let c = generators[a].1.commutator(&generators[b].1)?.div_qm1()?;
            let lin = linear_part_at_identity(&c)?;
            let coords = solve_in_span(&lins, lin.coeffs()).ok_or_else(|| {
                Error::DimensionMismatch(format!(
                    "[{}, {}] has linear part {lin} outside the generator span",
                    generators[a].0, generators[b].0
                ))
            })?;
            for (k, x) in coords.into_iter().enumerate() {
                table[b][a][k] = -x.clone();
                table[a][b][k] = x;
            }
        }
    }
    Ok(StructureConstants {
        labels: generators.iter().map(|(l, _)| l.clone()).collect(),
        table,
    })
}

/// Unique coordinates of `v` in the independent vectors `basis`.
fn solve_in_span(basis: &[Vector], v: &[Rational]) -> Option<Vector> {
    let d = basis.len();
    let len = v.len();
    // columns: basis vectors, then -v; kernel vector with last entry 1
    let mat: Vec<Vec<Rational>> = (0..len)
        .map(|r| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b[r].clone()).collect();
            row.push(-v[r].clone());
            row
        })
        .collect();
    let ker = kernel(&mat, d + 1);
    let sol = ker.iter().find(|k| !k[d].is_zero())?;
    if ker.len() != 1 {
        return None;
    }
    let s = sol[d].clone();
    Some(sol[..d].iter().map(|x| x / &s).collect())
}

/// Whether the extracted constants on `χ_ij` equal the `gl_n^*` table.
pub fn check_gl_dual_extraction(n: usize) -> Result<bool> {
    let ctx = AlgebraContext::new(n);
    let sc = dual_structure_constants(&chi_generators(&ctx))?;
    Ok(&sc.table == build_gl_dual(n).bracket_table())
}

/// Linear part of `Δ_- = (q-1)^{-1} (det_q^{-1} - 1)`, with the inverse
/// approximated by the truncated geometric series; in the `χ` basis it is
/// the linear part of `det_q^{-1} - 1`.
pub fn delta_minus_linear_part(ctx: &AlgebraContext, order: usize) -> Result<LinearPart> {
    let inv = truncated_unit_inverse_element(&quantum_det(ctx), order);
    linear_part_at_identity(&(&inv - &QElement::one(ctx)))
}

/// Element `Σ_k (q-1)^{-k} part_k` of `O_q(M_n)^∨` with `part_k ∈ I^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationElement {
    ctx: AlgebraContext,
    parts: BTreeMap<usize, QElement>,
}

impl FiltrationElement {
    /// Validates `part_k ∈ I^k` through the weighted degree.
    pub fn new(ctx: &AlgebraContext, parts: BTreeMap<usize, QElement>) -> Result<Self> {
        for (&k, p) in &parts {
            if !in_filtration(p, k) {
                return Err(Error::NotInFiltration(format!("level {k}: {p}")));
            }
        }
        let parts = parts.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        Ok(Self {
            ctx: ctx.clone(),
            parts,
        })
    }

    /// `(q-1)^{-k} p`.
    pub fn single(p: QElement, k: usize) -> Result<Self> {
        let ctx = p.ctx().clone();
        Self::new(&ctx, BTreeMap::from([(k, p)]))
    }

    pub fn parts(&self) -> &BTreeMap<usize, QElement> {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest level `K` with all parts collected as `(q-1)^{-K} T`.
    pub fn collect(&self) -> (usize, QElement) {
        let k_max = self.parts.keys().copied().max().unwrap_or(0);
        let mut t = QElement::zero(&self.ctx);
        for (&k, p) in &self.parts {
            let shift = LaurentPoly::q_minus_one().pow((k_max - k) as u32);
            t = &t + &p.scale(&shift);
        }
        (k_max, t)
    }

    pub fn add(&self, other: &FiltrationElement) -> Result<FiltrationElement> {
        let mut parts = self.parts.clone();
        for (&k, p) in &other.parts {
            let e = parts.entry(k).or_insert_with(|| QElement::zero(&self.ctx));
            *e = e.try_add(p)?;
        }
        Self::new(&self.ctx, parts)
    }

    pub fn mul(&self, other: &FiltrationElement) -> Result<FiltrationElement> {
        let mut parts: BTreeMap<usize, QElement> = BTreeMap::new();
        for (&k, p) in &self.parts {
            for (&l, r) in &other.parts {
                let e = parts.entry(k + l).or_insert_with(|| QElement::zero(&self.ctx));
                *e = e.try_add(&p.multiply(r)?)?;
            }
        }
        Self::new(&self.ctx, parts)
    }

    pub fn commutator(&self, other: &FiltrationElement) -> Result<FiltrationElement> {
        let ab = self.mul(other)?;
        let ba = other.mul(self)?;
        let neg = FiltrationElement {
            ctx: ba.ctx.clone(),
            parts: ba.parts.iter().map(|(&k, p)| (k, -p)).collect(),
        };
        ab.add(&neg)
    }

    /// `F / (q - 1)` as a filtration element, if `F ∈ (q-1) O_q^∨`.
    pub fn div_qm1(&self) -> Option<FiltrationElement> {
        let (k, t) = self.collect();
        if t.is_zero() {
            return Some(self.clone());
        }
        in_filtration(&t, k + 1).then(|| FiltrationElement {
            ctx: self.ctx.clone(),
            parts: BTreeMap::from([(k + 1, t)]),
        })
    }

    /// Value modulo `(q - 1)` read on the `χ`-linear level: the linear part
    /// of the collected element divided by `(q-1)^{K-1}`, or `None` when
    /// `K = 0`.
    pub fn leading_linear_part(&self) -> Result<Option<LinearPart>> {
        let (k, t) = self.collect();
        if k == 0 {
            return Ok(None);
        }
        let mut s = t;
        for _ in 1..k {
            s = s.div_qm1()?;
        }
        Ok(Some(linear_part_at_identity(&s)?))
    }
}

/// Whether `p ∈ I^k`.
pub fn in_filtration(p: &QElement, k: usize) -> bool {
    match shift_to_identity(p).weighted_degree() {
        None => true,
        Some(w) => w >= k,
    }
}

/// One big-cell generator in [`PPerpReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigCellImage {
    pub i: usize,
    pub j: usize,
    pub image: LinearPart,
    pub expected_sign: i8,
    pub sign_ok: bool,
}

/// Outcome of [`verify_p_perp`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PPerpReport {
    pub n: usize,
    pub r: usize,
    pub images: Vec<BigCellImage>,
    pub perp_dim: usize,
    pub perp_matches_span: bool,
    pub perp_closed: bool,
    pub perp_abelian: bool,
}

impl PPerpReport {
    pub fn sign_rule_ok(&self) -> bool {
        self.images.iter().all(|b| b.sign_ok)
    }

    pub fn ok(&self) -> bool {
        self.sign_rule_ok() && self.perp_matches_span && self.perp_closed && self.perp_abelian
    }
}

/// Linearizes `μ_ij = (q-1)^{-1} (-q)^{r-j} Δ_ij D_0^{-1}` for `i > r >= j`,
/// with `D_0^{-1}` replaced by its truncated geometric series, and checks
/// the image against `(-1)^{r-j} e[i,j]`. Then compares the span of the
/// `e[i,j]` with `p^⊥` for the block parabolic `p` and tests that it is an
/// abelian subalgebra of `gl_n^*`.
pub fn verify_p_perp(n: usize, r: usize, order: usize) -> Result<PPerpReport> {
    if r == 0 || r >= n {
        return Err(Error::InvalidBlock(format!("need 1 <= r < n, got r = {r}, n = {n}")));
    }
    let ctx = AlgebraContext::new(n);
    let d0 = principal_minor(&ctx, r)?;
    let inv = truncated_unit_inverse_element(&d0, order);
    let mut images = Vec::new();
    for i in r + 1..=n {
        for j in 1..=r {
            let delta = bigcell_delta(&ctx, r, i, j)?;
            let sign = if (r - j).is_multiple_of(2) { 1 } else { -1 };
            let t = (&delta * &inv).scale(&(-LaurentPoly::q()).pow((r - j) as u32));
            let image = linear_part_at_identity(&t)?;
            let mut expected = vec![Rational::zero(); n * n];
            expected[(i - 1) * n + (j - 1)] = Rational::from_integer(sign.into());
            images.push(BigCellImage {
                i,
                j,
                sign_ok: image.coeffs == expected,
                image,
                expected_sign: sign as i8,
            });
        }
    }
    let shape = BlockShape::grassmannian(n, r)?;
    let perp = block_parabolic(&shape).perp();
    let idx: Vec<usize> = (r + 1..=n)
        .flat_map(|i| (1..=r).map(move |j| (i - 1) * n + (j - 1)))
        .collect();
    let span = Subspace::coordinate(n * n, &idx);
    let gstar = build_gl_dual(n);
    let b = perp.basis();
    let mut closed = true;
    let mut abelian = true;
    for a in 0..b.len() {
        for c in a + 1..b.len() {
            let w = gstar.bracket(&b[a], &b[c]);
            closed &= perp.contains(&w);
            abelian &= w.iter().all(Zero::is_zero);
        }
    }
    Ok(PPerpReport {
        n,
        r,
        images,
        perp_dim: perp.dim(),
        perp_matches_span: perp == span,
        perp_closed: closed,
        perp_abelian: abelian,
    })
}

/// Outcome of [`strictness_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictnessReport {
    pub pairs_checked: usize,
    pub divisible: usize,
    pub failures: Vec<String>,
}

/// On the Grassmannian `Gr(r, n)`: for each pair of generators
/// `u_I = D^I - ε(D^I)` the element `F = (q-1)^{-2} [u_I, u_J]` is tested
/// for divisibility by `(q - 1)` in `O_q(M_n)^∨`. When divisible, the
/// quotient `(q-1)^{-3} [u_I, u_J]` must come from the semi-invariant side:
/// `[u_I, u_J] / (q - 1)` lies in the span of products of at most two
/// minors and in `I^2`.
pub fn strictness_check(n: usize, r: usize) -> Result<StrictnessReport> {
    let ctx = AlgebraContext::new(n);
    let pc = ParabolicContext::grassmannian(&ctx, r)?;
    let minors = pc.grassmannian_minors()?;
    let shifted: Vec<QElement> = minors
        .iter()
        .map(|(_, m)| m - &QElement::scalar(&ctx, m.counit()))
        .collect();
    let mut side: Vec<QElement> = vec![QElement::one(&ctx)];
    side.extend(minors.iter().map(|(_, m)| m.clone()));
    for (_, a) in &minors {
        for (_, b) in &minors {
            side.push(a * b);
        }
    }
    let side_rank = span_rank(&side);
    let mut rep = StrictnessReport {
        pairs_checked: 0,
        divisible: 0,
        failures: Vec::new(),
    };
    for a in 0..shifted.len() {
        for b in a + 1..shifted.len() {
            rep.pairs_checked += 1;
            let fa = FiltrationElement::single(shifted[a].clone(), 1)?;
            let fb = FiltrationElement::single(shifted[b].clone(), 1)?;
            let f = fa.commutator(&fb)?;
            let Some(g) = f.div_qm1() else { continue };
            rep.divisible += 1;
            let (_, t) = g.collect();
            let quotient = shifted[a].commutator(&shifted[b])?.div_qm1()?;
            let mut ext = side.clone();
            ext.push(quotient.clone());
            let label = format!("({}, {})", minors[a].0, minors[b].0);
            if span_rank(&ext) != side_rank || !in_filtration(&quotient, 2) || !in_filtration(&t, 3) {
                rep.failures.push(label);
            }
        }
    }
    Ok(rep)
}

/// Index tuples of the big-cell generators `(i, j)` with `i > r >= j`.
pub fn bigcell_indices(n: usize, r: usize) -> Vec<(usize, usize)> {
    (r + 1..=n).flat_map(|i| (1..=r).map(move |j| (i, j))).collect()
}

/// Row tuple of `Δ_ij`.
pub fn bigcell_rows(n: usize, r: usize, i: usize, j: usize) -> Result<IndexTuple> {
    let mut rows: Vec<usize> = (1..=r).filter(|&k| k != j).collect();
    rows.push(i);
    rows.sort_unstable();
    IndexTuple::new(&rows, n)
}
