//! Finite-dimensional Lie bialgebras given by structure-constant tables.
//!
//! For a basis `x_0, …, x_{d-1}`:
//! * `bracket[a][b][c]` is the coefficient of `x_c` in `[x_a, x_b]`;
//! * `cobracket[c][a][b]` is the coefficient of `x_a ⊗ x_b` in `δ(x_c)`.
//!
//! The dual bialgebra on the dual basis swaps the roles of the two tables.
//! Wedges follow `x ∧ y = x ⊗ y - y ⊗ x`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{in_span, kernel, rref};
use crate::qcoeff::{fmt_rational, rat, Rational};
use crate::qmatrix::BlockShape;

/// Dense vector in the coordinate basis.
pub type Vector = Vec<Rational>;
/// Dense two-tensor, `t[a][b]` the coefficient of `x_a ⊗ x_b`.
pub type Tensor2 = Vec<Vec<Rational>>;

type Table = Vec<Vec<Vec<Rational>>>;

fn zero_table(d: usize) -> Table {
    vec![vec![vec![Rational::zero(); d]; d]; d]
}

fn zero_tensor(d: usize) -> Tensor2 {
    vec![vec![Rational::zero(); d]; d]
}

/// `u ∧ v`.
pub fn wedge(u: &[Rational], v: &[Rational]) -> Tensor2 {
    let d = u.len();
    let mut t = zero_tensor(d);
    for a in 0..d {
        for b in 0..d {
            t[a][b] = &u[a] * &v[b] - &v[a] * &u[b];
        }
    }
    t
}

fn unit(d: usize, i: usize) -> Vector {
    let mut v = vec![Rational::zero(); d];
    v[i] = Rational::one();
    v
}

fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

fn is_zero_tensor(t: &Tensor2) -> bool {
    t.iter().all(|r| is_zero_vec(r))
}

fn add_scaled(acc: &mut [Rational], v: &[Rational], c: &Rational) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        *a += c * x;
    }
}

/// A Lie bialgebra with exact rational structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieBialgebra {
    labels: Vec<String>,
    bracket: Table,
    cobracket: Table,
}

impl LieBialgebra {
    /// Builds a bialgebra from raw tables; no axioms are checked here.
    pub fn from_tables(labels: Vec<String>, bracket: Table, cobracket: Table) -> Result<Self> {
        let d = labels.len();
        let ok = |t: &Table| t.len() == d && t.iter().all(|m| m.len() == d && m.iter().all(|r| r.len() == d));
        if !ok(&bracket) || !ok(&cobracket) {
            return Err(Error::DimensionMismatch(format!(
                "structure tables do not match {d} labels"
            )));
        }
        Ok(Self {
            labels,
            bracket,
            cobracket,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn bracket_table(&self) -> &Table {
        &self.bracket
    }

    pub fn cobracket_table(&self) -> &Table {
        &self.cobracket
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `[u, v]`.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vector {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for a in 0..d {
            if u[a].is_zero() {
                continue;
            }
            for b in 0..d {
                if v[b].is_zero() {
                    continue;
                }
                add_scaled(&mut out, &self.bracket[a][b], &(&u[a] * &v[b]));
            }
        }
        out
    }

    /// `δ(u)`.
    pub fn cobracket(&self, u: &[Rational]) -> Tensor2 {
        let d = self.dim();
        let mut out = zero_tensor(d);
        for (c, uc) in u.iter().enumerate() {
            if uc.is_zero() {
                continue;
            }
            for a in 0..d {
                add_scaled(&mut out[a], &self.cobracket[c][a], uc);
            }
        }
        out
    }

    /// Adjoint action on two-tensors: `x.(u ⊗ v) = [x,u] ⊗ v + u ⊗ [x,v]`.
    pub fn act(&self, x: &[Rational], t: &Tensor2) -> Tensor2 {
        let d = self.dim();
        let ad: Vec<Vector> = (0..d).map(|a| self.bracket(x, &unit(d, a))).collect();
        let mut out = zero_tensor(d);
        for a in 0..d {
            for b in 0..d {
                let c = &t[a][b];
                if c.is_zero() {
                    continue;
                }
                for k in 0..d {
                    out[k][b] += c * &ad[a][k];
                    out[a][k] += c * &ad[b][k];
                }
            }
        }
        out
    }

    /// The dual bialgebra on the dual basis; labels get a `*` suffix unless
    /// `labels` is given.
    pub fn dual(&self, labels: Option<Vec<String>>) -> LieBialgebra {
        let d = self.dim();
        let mut br = zero_table(d);
        let mut co = zero_table(d);
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    br[a][b][c] = self.cobracket[c][a][b].clone();
                    co[c][a][b] = self.bracket[a][b][c].clone();
                }
            }
        }
        let labels = labels.unwrap_or_else(|| self.labels.iter().map(|l| format!("{l}*")).collect());
        LieBialgebra {
            labels,
            bracket: br,
            cobracket: co,
        }
    }

    /// Runs every axiom check.
    pub fn check_axioms(&self) -> AxiomReport {
        AxiomReport {
            antisymmetry: self.antisymmetry_witness(),
            jacobi: self.jacobi_witness(),
            co_jacobi: self.dual(None).jacobi_witness(),
            cocycle: self.cocycle_witness(),
        }
    }

    fn antisymmetry_witness(&self) -> Option<String> {
        let d = self.dim();
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    if self.bracket[a][b][c] != -self.bracket[b][a][c].clone() {
                        return Some(format!("[{}, {}]", self.labels[a], self.labels[b]));
                    }
                    if self.cobracket[c][a][b] != -self.cobracket[c][b][a].clone() {
                        return Some(format!("δ({})", self.labels[c]));
                    }
                }
            }
        }
        None
    }

    fn jacobi_witness(&self) -> Option<String> {
        let d = self.dim();
        let e: Vec<Vector> = (0..d).map(|i| unit(d, i)).collect();
        for a in 0..d {
            for b in a + 1..d {
                let ab = self.bracket(&e[a], &e[b]);
                for c in b + 1..d {
                    let mut s = self.bracket(&ab, &e[c]);
                    let bc = self.bracket(&e[b], &e[c]);
                    let ca = self.bracket(&e[c], &e[a]);
                    add_scaled(&mut s, &self.bracket(&bc, &e[a]), &Rational::one());
                    add_scaled(&mut s, &self.bracket(&ca, &e[b]), &Rational::one());
                    if !is_zero_vec(&s) {
                        return Some(format!(
                            "({}, {}, {})",
                            self.labels[a], self.labels[b], self.labels[c]
                        ));
                    }
                }
            }
        }
        None
    }

    fn cocycle_witness(&self) -> Option<String> {
        let d = self.dim();
        let e: Vec<Vector> = (0..d).map(|i| unit(d, i)).collect();
        for a in 0..d {
            for b in a + 1..d {
                let lhs = self.cobracket(&self.bracket(&e[a], &e[b]));
                let t1 = self.act(&e[a], &self.cobracket(&e[b]));
                let t2 = self.act(&e[b], &self.cobracket(&e[a]));
                let ok = (0..d).all(|i| (0..d).all(|j| lhs[i][j] == &t1[i][j] - &t2[i][j]));
                if !ok {
                    return Some(format!("({}, {})", self.labels[a], self.labels[b]));
                }
            }
        }
        None
    }

    /// Nonzero brackets of basis elements `a < b` as `(a, b, [x_a, x_b])`.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vector)> {
        let d = self.dim();
        let mut out = Vec::new();
        for a in 0..d {
            for b in a + 1..d {
                if !is_zero_vec(&self.bracket[a][b]) {
                    out.push((a, b, self.bracket[a][b].clone()));
                }
            }
        }
        out
    }

    /// Text form of a vector, e.g. `2*e[1,3] - e[2,1]`.
    pub fn vector_text(&self, v: &[Rational]) -> String {
        let terms = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let l = &self.labels[i];
                if c.is_one() {
                    l.clone()
                } else if (-c).is_one() {
                    format!("-{l}")
                } else {
                    format!("{}*{l}", fmt_rational(c))
                }
            });
        crate::qmatrix::join_terms(terms)
    }
}

/// Witnesses of failed axioms; `None` means the axiom holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub antisymmetry: Option<String>,
    pub jacobi: Option<String>,
    pub co_jacobi: Option<String>,
    pub cocycle: Option<String>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.antisymmetry.is_none()
            && self.jacobi.is_none()
            && self.co_jacobi.is_none()
            && self.cocycle.is_none()
    }
}

fn gl_index(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * n + (j - 1)
}

fn gl_labels(n: usize, letter: &str) -> Vec<String> {
    (1..=n)
        .flat_map(|i| (1..=n).map(move |j| format!("{letter}[{i},{j}]")))
        .collect()
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

/// `gl_n` on the elementary matrices `m[i,j]` (row-major) with its standard
/// cobracket `δ(x) = x.r`, `r = Σ_{i<j} m[j,i] ∧ m[i,j]`.
///
/// On generators this gives `δ(e_i) = h_i ∧ e_i`, `δ(f_i) = h_i ∧ f_i` and
/// `δ(g_j) = 0`.
pub fn build_gl(n: usize) -> LieBialgebra {
    let d = n * n;
    let mut br = zero_table(d);
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    // [m_ij, m_kl] = δ_jk m_il - δ_li m_kj
                    let c = &mut br[gl_index(n, i, j)][gl_index(n, k, l)];
                    c[gl_index(n, i, l)] += rat(delta(j, k));
                    c[gl_index(n, k, j)] -= rat(delta(l, i));
                }
            }
        }
    }
    let mut g = LieBialgebra {
        labels: gl_labels(n, "m"),
        bracket: br,
        cobracket: zero_table(d),
    };
    let mut r = zero_tensor(d);
    for i in 1..=n {
        for j in i + 1..=n {
            let w = wedge(&unit(d, gl_index(n, j, i)), &unit(d, gl_index(n, i, j)));
            for a in 0..d {
                add_scaled(&mut r[a], &w[a], &Rational::one());
            }
        }
    }
    for c in 0..d {
        g.cobracket[c] = g.act(&unit(d, c), &r);
    }
    g
}

/// `gl_n^*` on the dual basis `e[i,j]`, from the closed-form bracket
///
/// * `[e_ij, e_ik] = δ_ij e_ik + δ_ik e_ij` for `j < k`;
/// * `[e_ij, e_lj] = δ_ij e_lj + δ_lj e_ij` for `i < l`;
/// * `[e_ij, e_lk] = 2 (δ_ik e_lj + δ_lj e_ik)` for `i < l`, `j < k`;
/// * `[e_ij, e_lk] = 0` for `i < l`, `j > k`;
///
/// and cobracket `δ(e_ij) = Σ_k e_ik ∧ e_kj`.
pub fn build_gl_dual(n: usize) -> LieBialgebra {
    let d = n * n;
    let mut br = zero_table(d);
    let idx = |i, j| gl_index(n, i, j);
    let positions: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    for (p, &(i, j)) in positions.iter().enumerate() {
        for &(l, k) in &positions[p + 1..] {
            let mut v = vec![Rational::zero(); d];
            if i == l {
                v[idx(i, k)] += rat(delta(i, j));
                v[idx(i, j)] += rat(delta(i, k));
            } else if j == k {
                v[idx(l, j)] += rat(delta(i, j));
                v[idx(i, j)] += rat(delta(l, j));
            } else if j < k {
                v[idx(l, j)] += rat(2 * delta(i, k));
                v[idx(i, k)] += rat(2 * delta(l, j));
            }
            let neg: Vector = v.iter().map(|x| -x).collect();
            br[idx(i, j)][idx(l, k)] = v;
            br[idx(l, k)][idx(i, j)] = neg;
        }
    }
    let mut co = zero_table(d);
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let w = wedge(&unit(d, idx(i, k)), &unit(d, idx(k, j)));
                for a in 0..d {
                    add_scaled(&mut co[idx(i, j)][a], &w[a], &Rational::one());
                }
            }
        }
    }
    LieBialgebra {
        labels: gl_labels(n, "e"),
        bracket: br,
        cobracket: co,
    }
}

/// The bracket of `gl_n^*` inherited from the pair-of-triangular-matrices
/// realization inside `gl_n ⊕ gl_n`:
/// `e_ij ↦ (m_ij, 0)` for `i > j`, `(-m_ii, m_ii)` for `i = j`, `(0, m_ij)` for `i < j`.
///
/// Its cobracket is `δ(e_ij) = Σ_k e_ik ∧ e_kj`. For `n >= 3` this bracket
/// differs from [`build_gl_dual`] by a factor of 2 on the pairs `e_ij`, `e_lk`
/// with `i < l`, `j < k` that lie in the same triangle.
pub fn build_gl_dual_triangular(n: usize) -> LieBialgebra {
    let d = n * n;
    let idx = |i, j| gl_index(n, i, j);
    // image of e_ij as (lower, upper) pair of n x n matrices
    let image = |i: usize, j: usize| -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
        let mut lo = vec![vec![0; n]; n];
        let mut up = vec![vec![0; n]; n];
        match i.cmp(&j) {
            std::cmp::Ordering::Greater => lo[i - 1][j - 1] = 1,
            std::cmp::Ordering::Less => up[i - 1][j - 1] = 1,
            std::cmp::Ordering::Equal => {
                lo[i - 1][i - 1] = -1;
                up[i - 1][i - 1] = 1;
            }
        }
        (lo, up)
    };
    let comm = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
        let mut c = vec![vec![0; n]; n];
        for r in 0..n {
            for s in 0..n {
                for t in 0..n {
                    c[r][s] += a[r][t] * b[t][s] - b[r][t] * a[t][s];
                }
            }
        }
        c
    };
    let mut br = zero_table(d);
    for i in 1..=n {
        for j in 1..=n {
            for l in 1..=n {
                for k in 1..=n {
                    let (lo1, up1) = image(i, j);
                    let (lo2, up2) = image(l, k);
                    let lo = comm(&lo1, &lo2);
                    let up = comm(&up1, &up2);
                    let v = &mut br[idx(i, j)][idx(l, k)];
                    // read coordinates back: strict lower from lo, strict upper
                    // from up, diagonal from up
                    for r in 1..=n {
                        for s in 1..=n {
                            let c = match r.cmp(&s) {
                                std::cmp::Ordering::Greater => lo[r - 1][s - 1],
                                _ => up[r - 1][s - 1],
                            };
                            v[idx(r, s)] = rat(c);
                        }
                    }
                }
            }
        }
    }
    let co = build_gl_dual(n).cobracket;
    LieBialgebra {
        labels: gl_labels(n, "e"),
        bracket: br,
        cobracket: co,
    }
}

/// The bracket table in the three-case form
///
/// * `[e_ij, e_hk] = δ_jh e_ik - δ_ki e_hj` if both `i <= j, h <= k` or both `i > j, h > k`;
/// * `[e_ij, e_hk] = δ_ki e_hj - δ_jh e_ik` if `i = j, h > k` or `i > j, h = k`;
/// * `[e_ij, e_hk] = 0` if `i < j, h > k` or `i > j, h < k`;
///
/// with the cobracket of [`build_gl_dual`].
pub fn build_gl_dual_three_case(n: usize) -> LieBialgebra {
    let d = n * n;
    let idx = |i, j| gl_index(n, i, j);
    let mut br = zero_table(d);
    for i in 1..=n {
        for j in 1..=n {
            for h in 1..=n {
                for k in 1..=n {
                    let same = (i <= j && h <= k) || (i > j && h > k);
                    let mixed = (i == j && h > k) || (i > j && h == k);
                    let v = &mut br[idx(i, j)][idx(h, k)];
                    if same {
                        v[idx(i, k)] += rat(delta(j, h));
                        v[idx(h, j)] -= rat(delta(k, i));
                    } else if mixed {
                        v[idx(h, j)] += rat(delta(k, i));
                        v[idx(i, k)] -= rat(delta(j, h));
                    }
                }
            }
        }
    }
    LieBialgebra {
        labels: gl_labels(n, "e"),
        bracket: br,
        cobracket: build_gl_dual(n).cobracket,
    }
}

/// `sl_2` on `(H, X+, X-)` with `δ(X±) = H ∧ X±`, `δ(H) = 0`.
pub fn build_sl2() -> LieBialgebra {
    let d = 3;
    let (h, xp, xm) = (0, 1, 2);
    let mut br = zero_table(d);
    br[h][xp][xp] = rat(2);
    br[xp][h][xp] = rat(-2);
    br[h][xm][xm] = rat(-2);
    br[xm][h][xm] = rat(2);
    br[xp][xm][h] = rat(1);
    br[xm][xp][h] = rat(-1);
    let mut co = zero_table(d);
    co[xp] = wedge(&unit(d, h), &unit(d, xp));
    co[xm] = wedge(&unit(d, h), &unit(d, xm));
    LieBialgebra {
        labels: vec!["H".into(), "X+".into(), "X-".into()],
        bracket: br,
        cobracket: co,
    }
}

/// Abelian Lie algebra with zero cobracket.
pub fn abelian(dim: usize) -> LieBialgebra {
    LieBialgebra {
        labels: (1..=dim).map(|i| format!("a{i}")).collect(),
        bracket: zero_table(dim),
        cobracket: zero_table(dim),
    }
}

/// Checks `⟨δ_g(x), ξ⊗η⟩ = ⟨x, [ξ,η]⟩` and `⟨[x,y], ξ⟩ = ⟨x⊗y, δ(ξ)⟩` on bases.
pub fn pairing_duality_check(g: &LieBialgebra, gstar: &LieBialgebra) -> Result<bool> {
    let d = g.dim();
    if gstar.dim() != d {
        return Err(Error::DimensionMismatch(format!(
            "dimensions {d} and {} differ",
            gstar.dim()
        )));
    }
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                if g.cobracket[a][b][c] != gstar.bracket[b][c][a] {
                    return Ok(false);
                }
                if g.bracket[a][b][c] != gstar.cobracket[c][a][b] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Subspace stored as the rows of a reduced row echelon matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn new(ambient: usize, vectors: &[Vector]) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch(format!(
                "vectors must have length {ambient}"
            )));
        }
        let mut m = vectors.to_vec();
        let piv = rref(&mut m);
        m.truncate(piv.len());
        Ok(Self { ambient, basis: m })
    }

    /// Span of coordinate vectors.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let v: Vec<Vector> = indices.iter().map(|&i| unit(ambient, i)).collect();
        Self::new(ambient, &v).expect("unit vectors have the ambient length")
    }

    pub fn full(ambient: usize) -> Self {
        Self::coordinate(ambient, &(0..ambient).collect::<Vec<_>>())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        in_span(&self.basis, v)
    }

    /// The annihilator in dual coordinates.
    pub fn perp(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient);
        }
        let k = kernel(&self.basis, self.ambient);
        Subspace::new(self.ambient, &k).expect("kernel vectors have the ambient length")
    }
}

/// Outcome of [`coisotropy_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoisotropyReport {
    pub subalgebra: bool,
    pub coideal: bool,
    pub perp_subalgebra: bool,
    pub witness: Option<String>,
}

/// Tests `[h,h] ⊆ h`, `δ(h) ⊆ h ∧ g` and `[h^⊥, h^⊥]_{g*} ⊆ h^⊥`.
///
/// The coideal test projects `δ(x)` to `(g/h) ⊗ (g/h)` with a basis of `h^⊥`.
pub fn coisotropy_check(g: &LieBialgebra, h: &Subspace) -> CoisotropyReport {
    let mut witness = None;
    let hb = h.basis();
    let mut subalgebra = true;
    'outer: for (i, u) in hb.iter().enumerate() {
        for v in &hb[i + 1..] {
            let w = g.bracket(u, v);
            if !h.contains(&w) {
                subalgebra = false;
                witness.get_or_insert_with(|| format!("[h, h] ∌ {}", g.vector_text(&w)));
                break 'outer;
            }
        }
    }
    let perp = h.perp();
    let mut coideal = true;
    for u in hb {
        let t = g.cobracket(u);
        for alpha in perp.basis() {
            for beta in perp.basis() {
                let mut s = Rational::zero();
                for a in 0..g.dim() {
                    for b in 0..g.dim() {
                        if !t[a][b].is_zero() {
                            s += &t[a][b] * &alpha[a] * &beta[b];
                        }
                    }
                }
                if !s.is_zero() && coideal {
                    coideal = false;
                    witness.get_or_insert_with(|| {
                        format!("δ({}) ∉ h ∧ g", g.vector_text(u))
                    });
                }
            }
        }
    }
    let gstar = g.dual(None);
    let mut perp_subalgebra = true;
    'perp: for (i, a) in perp.basis().iter().enumerate() {
        for b in &perp.basis()[i + 1..] {
            let w = gstar.bracket(a, b);
            if !perp.contains(&w) {
                perp_subalgebra = false;
                witness.get_or_insert_with(|| "[h^⊥, h^⊥] ⊄ h^⊥".to_string());
                break 'perp;
            }
        }
    }
    CoisotropyReport {
        subalgebra,
        coideal,
        perp_subalgebra,
        witness,
    }
}

/// The subalgebra `span{H_ε, X_ε}` of `sl_2` at the rational point `(s, c)`
/// of the unit circle, with `ε = s²`:
/// `H_ε = (2s² - 1) H - 2sc (X+ + X-)`, `X_ε = sc H + s² X+ - c² X-`.
pub fn p_epsilon(s: &Rational, c: &Rational) -> Result<Subspace> {
    if s * s + c * c != Rational::one() {
        return Err(Error::NotOnCircle {
            s: fmt_rational(s),
            c: fmt_rational(c),
        });
    }
    let (he, xe) = p_epsilon_vectors(s, c);
    Subspace::new(3, &[he, xe])
}

/// `(H_ε, X_ε)` in the basis `(H, X+, X-)`.
pub fn p_epsilon_vectors(s: &Rational, c: &Rational) -> (Vector, Vector) {
    let two = rat(2);
    let sc = s * c;
    let he = vec![&two * s * s - Rational::one(), -(&two * &sc), -(&two * &sc)];
    let xe = vec![sc, s * s, -(c * c)];
    (he, xe)
}

/// Rational points `(s, c)` with `s² + c² = 1`, `s, c >= 0` and common
/// denominator at most `max_den`.
pub fn pythagorean_points(max_den: i64) -> Vec<(Rational, Rational)> {
    let mut out = Vec::new();
    for den in 1..=max_den {
        for a in 0..=den {
            for b in 0..=den {
                if a * a + b * b == den * den {
                    let s = Rational::new(a.into(), den.into());
                    let c = Rational::new(b.into(), den.into());
                    if !out.contains(&(s.clone(), c.clone())) {
                        out.push((s, c));
                    }
                }
            }
        }
    }
    out
}

/// The block-upper parabolic `p ⊂ gl_n` for the given block boundaries.
pub fn block_parabolic(shape: &BlockShape) -> Subspace {
    let n = shape.n();
    let idx: Vec<usize> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| !shape.kills(i, j))
        .map(|(i, j)| gl_index(n, i, j))
        .collect();
    Subspace::coordinate(n * n, &idx)
}

/// Whether all brackets inside `h` vanish.
pub fn is_abelian(g: &LieBialgebra, h: &Subspace) -> bool {
    let b = h.basis();
    (0..b.len()).all(|i| (i + 1..b.len()).all(|j| is_zero_vec(&g.bracket(&b[i], &b[j]))))
}

/// Whether `δ(u) = ± v ∧ w`; returns the sign if it holds.
pub fn cobracket_matches_wedge(g: &LieBialgebra, u: &[Rational], v: &[Rational], w: &[Rational]) -> Option<i8> {
    let t = g.cobracket(u);
    let target = wedge(v, w);
    let d = g.dim();
    let diff = |sign: &Rational| -> bool {
        (0..d).all(|a| (0..d).all(|b| t[a][b] == sign * &target[a][b]))
    };
    if is_zero_tensor(&target) {
        return is_zero_tensor(&t).then_some(1);
    }
    if diff(&Rational::one()) {
        Some(1)
    } else if diff(&-Rational::one()) {
        Some(-1)
    } else {
        None
    }
}

impl fmt::Display for LieBialgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b, v) in self.nonzero_brackets() {
            writeln!(f, "[{}, {}] = {}", self.labels[a], self.labels[b], self.vector_text(&v))?;
        }
        Ok(())
    }
}

/// Sign of a rational as `-1`, `0` or `1`.
pub fn sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcoeff::ratio;

    fn e(d: usize, i: usize) -> Vector {
        unit(d, i)
    }

    #[test]
    fn gl2_basic_bracket() {
        let g = build_gl(2);
        let (m11, m12, m21, m22) = (e(4, 0), e(4, 1), e(4, 2), e(4, 3));
        let h: Vector = m11.iter().zip(&m22).map(|(a, b)| a - b).collect();
        assert_eq!(g.bracket(&m12, &m21), h);
    }

    #[test]
    fn gl_cobracket_on_generators() {
        for n in 2..=4 {
            let g = build_gl(n);
            let d = n * n;
            for i in 1..n {
                let ei = e(d, gl_index(n, i, i + 1));
                let fi = e(d, gl_index(n, i + 1, i));
                let mut hi = e(d, gl_index(n, i, i));
                hi[gl_index(n, i + 1, i + 1)] = rat(-1);
                assert_eq!(g.cobracket(&ei), wedge(&hi, &ei));
                assert_eq!(g.cobracket(&fi), wedge(&hi, &fi));
            }
            for j in 1..=n {
                assert!(is_zero_tensor(&g.cobracket(&e(d, gl_index(n, j, j)))));
            }
        }
    }

    #[test]
    fn axioms_hold() {
        for g in [build_gl(2), build_gl(3), build_gl_dual(2), build_gl_dual(3), build_sl2(), abelian(3)] {
            assert!(g.check_axioms().ok(), "{:?}", g.check_axioms());
        }
    }

    #[test]
    fn dual_tables_pair_correctly() {
        for n in 2..=3 {
            assert!(pairing_duality_check(&build_gl(n), &build_gl_dual(n)).unwrap());
        }
        assert!(pairing_duality_check(&abelian(2), &abelian(2)).unwrap());
        assert!(pairing_duality_check(&build_gl(2), &build_gl_dual(3)).is_err());
    }

    #[test]
    fn three_case_table_agrees_only_for_n_2() {
        assert_eq!(build_gl_dual_three_case(2), build_gl_dual(2));
        assert_eq!(build_gl_dual_triangular(2), build_gl_dual(2));
        let g3 = build_gl_dual(3);
        let p3 = build_gl_dual_three_case(3);
        assert_ne!(p3, g3);
        assert_eq!(build_gl_dual_triangular(3), p3);
        let (e12, e23, e13) = (gl_index(3, 1, 2), gl_index(3, 2, 3), gl_index(3, 1, 3));
        assert_eq!(g3.bracket_table()[e12][e23][e13], rat(2));
        assert_eq!(p3.bracket_table()[e12][e23][e13], rat(1));
    }

    #[test]
    fn gl2_dual_generator_brackets() {
        let g = build_gl_dual(2);
        let (g1, e1, f1) = (e(4, 0), e(4, 1), e(4, 2));
        assert_eq!(g.bracket(&g1, &e1), e1);
        assert!(is_zero_vec(&g.bracket(&e1, &f1)));
        assert_eq!(g.bracket(&g1, &f1), f1);
    }

    #[test]
    fn borel_and_full_space_are_coisotropic() {
        let g = build_gl(2);
        let borel = Subspace::coordinate(4, &[0, 1, 3]);
        let rep = coisotropy_check(&g, &borel);
        assert!(rep.subalgebra && rep.coideal && rep.perp_subalgebra, "{rep:?}");
        let rep = coisotropy_check(&g, &Subspace::full(4));
        assert!(rep.subalgebra && rep.coideal && rep.perp_subalgebra);
    }

    #[test]
    fn p_epsilon_family() {
        let g = build_sl2();
        let h = p_epsilon(&ratio(3, 5), &ratio(4, 5)).unwrap();
        let rep = coisotropy_check(&g, &h);
        assert!(rep.subalgebra && rep.coideal && rep.perp_subalgebra, "{rep:?}");
        let borel = p_epsilon(&rat(1), &rat(0)).unwrap();
        assert_eq!(borel, Subspace::coordinate(3, &[0, 1]));
        assert!(matches!(
            p_epsilon(&ratio(1, 2), &ratio(1, 2)),
            Err(Error::NotOnCircle { .. })
        ));
    }

    #[test]
    fn non_coisotropic_line() {
        let g = build_gl(2);
        let h = Subspace::new(4, &[vec![rat(1), rat(1), rat(0), rat(0)]]).unwrap();
        let rep = coisotropy_check(&g, &h);
        assert!(rep.subalgebra);
        assert_eq!(rep.coideal, rep.perp_subalgebra);
        assert!(!rep.coideal);
        assert!(rep.witness.is_some());
    }

    #[test]
    fn pythagorean_points_small() {
        let pts = pythagorean_points(5);
        assert!(pts.contains(&(ratio(3, 5), ratio(4, 5))));
        assert!(pts.contains(&(rat(0), rat(1))));
        assert_eq!(sign(&rat(-2)), -1);
    }
}
