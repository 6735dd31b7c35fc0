//! The Poisson bracket on `O(M_n)` induced by `O_q(M_n)`:
//! `{f, g} = (f'g' - g'f') / (q - 1)` at `q = 1`, for any lifts `f'`, `g'`.

use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::classical::{CommPoly, CommTensor};
use crate::error::Result;
use crate::qcoeff::{rat, LaurentPoly, Rational};
use crate::qmatrix::{AlgebraContext, Gen, Monomial, QElement};

/// `O(M_n)` with the bracket obtained from the quantum commutator.
#[derive(Clone, Debug)]
pub struct PoissonRing {
    ctx: AlgebraContext,
}

impl PoissonRing {
    pub fn new(n: usize) -> Self {
        Self {
            ctx: AlgebraContext::new(n),
        }
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    /// Canonical lift: each commutative monomial becomes the ordered quantum
    /// monomial with the same rational coefficient.
    pub fn lift(&self, p: &CommPoly) -> QElement {
        QElement::from_terms(
            &self.ctx,
            p.terms()
                .iter()
                .map(|(m, c)| (m.clone(), LaurentPoly::constant(c.clone()))),
        )
    }

    /// Bracket of two arbitrary lifts.
    pub fn bracket_of_lifts(&self, f: &QElement, g: &QElement) -> Result<CommPoly> {
        Ok(f.commutator(g)?.div_qm1()?.specialize_q1())
    }

    /// `{p, r}`.
    pub fn bracket(&self, p: &CommPoly, r: &CommPoly) -> Result<CommPoly> {
        self.bracket_of_lifts(&self.lift(p), &self.lift(r))
    }

    /// Bracket on `O(M_n) ⊗ O(M_n)`: `{a⊗b, c⊗d} = {a,c}⊗bd + ac⊗{b,d}`.
    pub fn tensor_bracket(&self, x: &CommTensor, y: &CommTensor) -> Result<CommTensor> {
        let n = self.n();
        let mono = |m: &Monomial, c: &Rational| CommPoly::from_terms(n, [(m.clone(), c.clone())]);
        let mut out = CommTensor::zero(n);
        for ((a, b), c1) in x.terms() {
            for ((c, d), c2) in y.terms() {
                let (a, b) = (mono(a, c1), mono(b, &Rational::one()));
                let (c, d) = (mono(c, c2), mono(d, &Rational::one()));
                out = out.add(&CommTensor::outer(&self.bracket(&a, &c)?, &(&b * &d)));
                out = out.add(&CommTensor::outer(&(&a * &c), &self.bracket(&b, &d)?));
            }
        }
        Ok(out)
    }

    /// Random polynomial of degree at most `max_deg` with small integer coefficients.
    pub fn random_poly(&self, rng: &mut StdRng, max_deg: usize, max_terms: usize) -> CommPoly {
        let n = self.n();
        let terms = rng.gen_range(1..=max_terms);
        CommPoly::from_terms(
            n,
            (0..terms).map(|_| {
                let deg = rng.gen_range(0..=max_deg);
                let word: Vec<Gen> = (0..deg).map(|_| rng.gen_range(0..n * n) as Gen).collect();
                (Monomial::sorted(word), rat(rng.gen_range(-3..=3)))
            }),
        )
    }

    /// Antisymmetry, Leibniz and Jacobi on random triples of degree at most 2,
    /// and `Δ{x_ij, x_kl} = {Δx_ij, Δx_kl}` on all generator pairs.
    pub fn axiom_suite(&self, samples: usize, seed: u64) -> Result<PoissonReport> {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut rep = PoissonReport {
            samples,
            ..PoissonReport::default()
        };
        for _ in 0..samples {
            let f = self.random_poly(&mut rng, 2, 3);
            let g = self.random_poly(&mut rng, 2, 3);
            let h = self.random_poly(&mut rng, 2, 3);
            let fg = self.bracket(&f, &g)?;
            let gf = self.bracket(&g, &f)?;
            if !(&fg + &gf).is_zero() || !self.bracket(&f, &f)?.is_zero() {
                rep.antisymmetry_failures.push(format!("f = {f}, g = {g}"));
            }
            let lhs = self.bracket(&f, &(&g * &h))?;
            let rhs = &(&fg * &h) + &(&g * &self.bracket(&f, &h)?);
            if lhs != rhs {
                rep.leibniz_failures.push(format!("f = {f}, g = {g}, h = {h}"));
            }
            let j1 = self.bracket(&f, &self.bracket(&g, &h)?)?;
            let j2 = self.bracket(&g, &self.bracket(&h, &f)?)?;
            let j3 = self.bracket(&h, &fg)?;
            if !(&(&j1 + &j2) + &j3).is_zero() {
                rep.jacobi_failures.push(format!("f = {f}, g = {g}, h = {h}"));
            }
        }
        let n = self.n();
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    for l in 1..=n {
                        let a = CommPoly::var(n, i, j);
                        let b = CommPoly::var(n, k, l);
                        let lhs = self.bracket(&a, &b)?.coproduct();
                        let rhs = self.tensor_bracket(&a.coproduct(), &b.coproduct())?;
                        if lhs != rhs {
                            rep.coalgebra_failures.push(format!("{a}, {b}"));
                        }
                    }
                }
            }
        }
        Ok(rep)
    }

    /// Bracket with lifts `p'` and `p' + (q-1) e` for random `e`; returns the
    /// first pair of polynomials for which the results differ.
    pub fn lift_independence_witness(
        &self,
        samples: usize,
        seed: u64,
    ) -> Result<Option<(CommPoly, CommPoly)>> {
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..samples {
            let p = self.random_poly(&mut rng, 2, 3);
            let r = self.random_poly(&mut rng, 2, 3);
            let e = self.lift(&self.random_poly(&mut rng, 2, 3));
            let shifted = self.lift(&p).try_add(&e.scale(&LaurentPoly::q_minus_one()))?;
            let b1 = self.bracket(&p, &r)?;
            let b2 = self.bracket_of_lifts(&shifted, &self.lift(&r))?;
            if b1 != b2 {
                return Ok(Some((p, r)));
            }
        }
        Ok(None)
    }
}

/// Outcome of [`PoissonRing::axiom_suite`]; each list holds failing samples.
#[derive(Clone, Debug, Default)]
pub struct PoissonReport {
    pub samples: usize,
    pub antisymmetry_failures: Vec<String>,
    pub leibniz_failures: Vec<String>,
    pub jacobi_failures: Vec<String>,
    pub coalgebra_failures: Vec<String>,
}

impl PoissonReport {
    pub fn ok(&self) -> bool {
        self.antisymmetry_failures.is_empty()
            && self.leibniz_failures.is_empty()
            && self.jacobi_failures.is_empty()
            && self.coalgebra_failures.is_empty()
    }

    pub fn total_failures(&self) -> usize {
        self.antisymmetry_failures.len()
            + self.leibniz_failures.len()
            + self.jacobi_failures.len()
            + self.coalgebra_failures.len()
    }
}

/// `{x_ij, x_kl}` for all generator pairs, as `(i, j, k, l, bracket)`.
pub fn generator_table(pr: &PoissonRing) -> Result<Vec<(usize, usize, usize, usize, CommPoly)>> {
    let n = pr.n();
    let mut out = Vec::new();
    for g in 0..n * n {
        for h in g + 1..n * n {
            let (i, j, k, l) = (g / n + 1, g % n + 1, h / n + 1, h % n + 1);
            let b = pr.bracket(&CommPoly::var(n, i, j), &CommPoly::var(n, k, l))?;
            out.push((i, j, k, l, b));
        }
    }
    Ok(out)
}
