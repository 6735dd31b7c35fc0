//! Command-line interface: argument parsing, dispatch and output.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qhs_core::homspace::{ParabolicContext, SectionClass, DEFAULT_MAX_COMPONENT_DIM};
use qhs_core::liebialg::{
    block_parabolic, build_gl, build_gl_dual, build_sl2, coisotropy_check, p_epsilon, CoisotropyReport,
    Subspace,
};
use qhs_core::qdp::{chi_generators, dual_structure_constants, verify_p_perp};
use qhs_core::qminors::{central_witness, check_minor_coproduct, quantum_minor, CentralFraction, IndexTuple};
use qhs_core::semiclassical::PoissonRing;
use qhs_core::{AlgebraContext, BlockShape, LaurentPoly, QElement, Rational};
use serde::Serialize;
use serde_json::{json, Value};

use crate::eval::{evaluate, fraction_text};
use crate::expr::parse_expression;

/// Environment variable capping the size of linear solves.
pub const MAX_COMPONENT_DIM_VAR: &str = "QHS_MAX_COMPONENT_DIM";

#[derive(Parser, Debug)]
#[command(name = "qhs", version, about = "Quantum matrix algebras, minors and quantum homogeneous spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Common {
    /// Matrix size.
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct Space {
    /// Grassmannian block size.
    #[arg(long)]
    r: Option<usize>,
    /// Flag type `m1,m2,...`, used instead of `--r`.
    #[arg(long, value_delimiter = ',')]
    flag_type: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AlgebraName {
    Sl2,
    Gl,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form of an expression.
    Nf {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Coproduct of a polynomial expression.
    Coprod {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Expands a quantum minor and checks its coproduct identity.
    Minor {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', required = true)]
        rows: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        cols: Vec<usize>,
    },
    /// Whether an element commutes with every generator.
    CentralCheck {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Classifies the section `d` (default: the initial minor).
    SectionCheck {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        space: Space,
        /// Custom section `d`.
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// Semi-invariant degree of an element.
    Semiinv {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        space: Space,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Solves for a graded piece of the quantum homogeneous space.
    SolveSemiinv {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        space: Space,
        /// Semi-invariant degree.
        #[arg(long, default_value_t = 1)]
        degree: usize,
    },
    /// Quadratic relations among the Grassmannian minors.
    Plucker {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        r: usize,
    },
    /// q-twists and Manin relations of the big-cell coordinates.
    BigcellManin {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        r: usize,
    },
    /// Poisson bracket of two expressions at `q = 1`.
    Poisson {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Structure constants extracted from the rescaled generators.
    QdpStruct {
        #[command(flatten)]
        common: Common,
    },
    /// Linearized big-cell generators and the orthogonal subalgebra.
    QdpPperp {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        r: usize,
        /// Truncation order.
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
    /// Coisotropy of a subalgebra of a Lie bialgebra.
    Coisotropy {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = AlgebraName::Sl2)]
        algebra: AlgebraName,
        /// First coordinate of the circle point for `sl2`.
        #[arg(long)]
        s: Option<String>,
        /// Second coordinate of the circle point for `sl2`.
        #[arg(long)]
        c: Option<String>,
        /// Block parabolic for `gl`.
        #[arg(long, value_delimiter = ',')]
        flag_type: Option<Vec<usize>>,
        /// Explicit spanning vectors, e.g. `1,0,0;0,1,1`.
        #[arg(long)]
        basis: Option<String>,
    },
    /// Section of a type-A flag variety.
    FlagSection {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', required = true)]
        flag_type: Vec<usize>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Nf { .. } => "nf",
            Command::Coprod { .. } => "coprod",
            Command::Minor { .. } => "minor",
            Command::CentralCheck { .. } => "central-check",
            Command::SectionCheck { .. } => "section-check",
            Command::Semiinv { .. } => "semiinv",
            Command::SolveSemiinv { .. } => "solve-semiinv",
            Command::Plucker { .. } => "plucker",
            Command::BigcellManin { .. } => "bigcell-manin",
            Command::Poisson { .. } => "poisson",
            Command::QdpStruct { .. } => "qdp-struct",
            Command::QdpPperp { .. } => "qdp-pperp",
            Command::Coisotropy { .. } => "coisotropy",
            Command::FlagSection { .. } => "flag-section",
        }
    }

    fn common(&self) -> &Common {
        match self {
            Command::Nf { common, .. }
            | Command::Coprod { common, .. }
            | Command::Minor { common, .. }
            | Command::CentralCheck { common, .. }
            | Command::SectionCheck { common, .. }
            | Command::Semiinv { common, .. }
            | Command::SolveSemiinv { common, .. }
            | Command::Plucker { common, .. }
            | Command::BigcellManin { common, .. }
            | Command::Poisson { common, .. }
            | Command::QdpStruct { common }
            | Command::QdpPperp { common, .. }
            | Command::Coisotropy { common, .. }
            | Command::FlagSection { common, .. } => common,
        }
    }
}

/// Result of one command before formatting.
#[derive(Clone, Debug)]
pub struct Report {
    pub ok: bool,
    pub result: Value,
    pub witness: Option<Value>,
    pub text: Vec<String>,
}

impl Report {
    fn new(ok: bool, result: Value, text: Vec<String>) -> Self {
        Self {
            ok,
            result,
            witness: None,
            text,
        }
    }

    fn with_witness(mut self, w: Option<Value>) -> Self {
        self.witness = w;
        self
    }
}

#[derive(Serialize)]
struct JsonOutput<'a> {
    ok: bool,
    command: &'a str,
    result: &'a Value,
    witness: &'a Option<Value>,
}

/// Exit status, standard output and standard error of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: String) -> Self {
        Self {
            code: 2,
            stdout: String::new(),
            stderr: msg,
        }
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome::usage(text)
            };
        }
    };
    let name = cli.command.name();
    let format = cli.command.common().format;
    match dispatch(&cli.command) {
        Ok(report) => {
            let stdout = match format {
                Format::Json => {
                    let out = JsonOutput {
                        ok: report.ok,
                        command: name,
                        result: &report.result,
                        witness: &report.witness,
                    };
                    serde_json::to_string_pretty(&out).expect("serializable") + "\n"
                }
                Format::Text => {
                    let mut lines = report.text.clone();
                    if let Some(w) = &report.witness {
                        let w = match w {
                            Value::String(s) => s.clone(),
                            other => other.to_string(),
                        };
                        lines.push(format!("witness: {w}"));
                    }
                    lines.join("\n") + "\n"
                }
            };
            Outcome {
                code: if report.ok { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(msg) => Outcome::usage(format!("error: {msg}\n")),
    }
}

type CmdResult = std::result::Result<Report, String>;

fn max_component_dim() -> std::result::Result<usize, String> {
    match std::env::var(MAX_COMPONENT_DIM_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{MAX_COMPONENT_DIM_VAR} must be a non-negative integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_MAX_COMPONENT_DIM),
    }
}

fn context(n: usize) -> std::result::Result<AlgebraContext, String> {
    if n == 0 {
        return Err("--n must be at least 1".into());
    }
    Ok(AlgebraContext::new(n))
}

fn value_of(src: &str, ctx: &AlgebraContext) -> std::result::Result<CentralFraction, String> {
    let e = parse_expression(src, ctx).map_err(|e| e.render(src))?;
    evaluate(&e, ctx).map_err(|e| e.to_string())
}

fn polynomial(src: &str, ctx: &AlgebraContext) -> std::result::Result<QElement, String> {
    let v = value_of(src, ctx)?;
    if !v.is_polynomial() {
        return Err(format!("{src:?} involves an inverse determinant; a polynomial is required"));
    }
    Ok(v.numerator().clone())
}

fn parabolic(ctx: &AlgebraContext, space: &Space) -> std::result::Result<ParabolicContext, String> {
    match (&space.flag_type, space.r) {
        (Some(ft), None) => ParabolicContext::flag_section(ctx, ft).map_err(|e| e.to_string()),
        (None, Some(r)) => ParabolicContext::grassmannian(ctx, r).map_err(|e| e.to_string()),
        (Some(_), Some(_)) => Err("--r and --flag-type are mutually exclusive".into()),
        (None, None) => Err("one of --r or --flag-type is required".into()),
    }
}

fn rational_arg(name: &str, v: &Option<String>) -> std::result::Result<Rational, String> {
    let s = v.as_ref().ok_or_else(|| format!("--{name} is required"))?;
    s.trim().parse().map_err(|_| format!("--{name}: {s:?} is not a rational number"))
}

fn subspace_arg(dim: usize, src: &str) -> std::result::Result<Subspace, String> {
    let rows = src
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|x| x.trim().parse::<Rational>().map_err(|_| format!("--basis: {x:?} is not a rational number")))
                .collect::<std::result::Result<Vec<_>, _>>()
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Subspace::new(dim, &rows).map_err(|e| e.to_string())
}

fn coeff_times(c: &LaurentPoly, body: &str) -> String {
    let text = c.to_string();
    match text.as_str() {
        "1" => body.to_string(),
        "-1" => format!("-{body}"),
        t if c.terms().len() == 1 => format!("{t}*{body}"),
        t => format!("({t})*{body}"),
    }
}

fn join_signed(terms: Vec<String>) -> String {
    let mut out = String::new();
    for (i, t) in terms.into_iter().enumerate() {
        match (i, t.strip_prefix('-')) {
            (0, _) => out.push_str(&t),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn minor_label(rows: &IndexTuple, r: usize) -> String {
    let cols = (1..=r).map(|i| i.to_string()).collect::<Vec<_>>().join(",");
    let rows = rows.indices().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
    format!("D[{rows};{cols}]")
}

fn coisotropy_value(rep: &CoisotropyReport) -> Value {
    json!({
        "subalgebra": rep.subalgebra,
        "coideal": rep.coideal,
        "perp_subalgebra": rep.perp_subalgebra,
    })
}

fn dispatch(cmd: &Command) -> CmdResult {
    let n = cmd.common().n;
    match cmd {
        Command::Nf { expr, .. } => {
            let ctx = context(n)?;
            let v = fraction_text(&value_of(expr, &ctx)?);
            Ok(Report::new(true, json!(v), vec![v.clone()]))
        }
        Command::Coprod { expr, .. } => {
            let ctx = context(n)?;
            let t = polynomial(expr, &ctx)?.coproduct().to_string();
            Ok(Report::new(true, json!(t), vec![t.clone()]))
        }
        Command::Minor { rows, cols, .. } => {
            let ctx = context(n)?;
            let rows = IndexTuple::new(rows, n).map_err(|e| e.to_string())?;
            let cols = IndexTuple::new(cols, n).map_err(|e| e.to_string())?;
            let m = quantum_minor(&ctx, &rows, &cols).map_err(|e| e.to_string())?;
            let ok = check_minor_coproduct(&ctx, &rows, &cols).map_err(|e| e.to_string())?;
            let text = vec![format!("minor: {m}"), format!("coproduct identity: {ok}")];
            let rep = Report::new(ok, json!({"minor": m.to_string(), "coproduct_identity": ok}), text);
            Ok(rep.with_witness((!ok).then(|| json!(format!("coproduct of {m} differs from the sum over K")))))
        }
        Command::CentralCheck { expr, .. } => {
            let ctx = context(n)?;
            let v = value_of(expr, &ctx)?;
            let w = central_witness(v.numerator());
            let ok = w.is_none();
            let witness = w.map(|(i, j, c)| json!({"generator": format!("x[{i},{j}]"), "commutator": c.to_string()}));
            Ok(Report::new(ok, json!(ok), vec![ok.to_string()]).with_witness(witness))
        }
        Command::SectionCheck { space, expr, .. } => {
            let ctx = context(n)?;
            let mut pc = parabolic(&ctx, space)?;
            if let Some(src) = expr {
                let d = polynomial(src, &ctx)?;
                pc = ParabolicContext::new(&ctx, pc.shape().clone(), d).map_err(|e| e.to_string())?;
            }
            let span = pc.degree_one_spanning_set().map_err(|e| e.to_string())?;
            let rep = pc.classify_section(&span);
            let class = rep.classification.to_string();
            let ok = rep.classification == SectionClass::Quantum;
            let text = vec![format!("d: {}", pc.d()), format!("classification: {class}")];
            Ok(Report::new(ok, json!({"d": pc.d().to_string(), "classification": class}), text)
                .with_witness(rep.witness.map(Value::String)))
        }
        Command::Semiinv {
            space, max_degree, expr, ..
        } => {
            let ctx = context(n)?;
            let pc = parabolic(&ctx, space)?;
            let f = polynomial(expr, &ctx)?;
            let deg = pc.semi_invariant_degree(&f, *max_degree);
            let text = vec![match deg {
                Some(k) => format!("degree {k}"),
                None => "not semi-invariant".into(),
            }];
            let witness = deg
                .is_none()
                .then(|| json!(format!("no degree k <= {max_degree} with Δ_π(f) = f ⊗ π(d^k)")));
            Ok(Report::new(deg.is_some(), json!({"degree": deg}), text).with_witness(witness))
        }
        Command::SolveSemiinv { space, degree, .. } => {
            let ctx = context(n)?;
            let pc = parabolic(&ctx, space)?;
            let x_degree = degree * pc.d().max_degree();
            let comp = pc
                .solve_semi_invariants(*degree, x_degree, max_component_dim()?)
                .map_err(|e| e.to_string())?;
            let coideal = pc.check_left_coideal(&comp);
            let basis: Vec<String> = comp.basis.iter().map(|b| b.to_string()).collect();
            let mut text = vec![
                format!("degree: {degree}"),
                format!("x-degree: {x_degree}"),
                format!("dimension: {}", comp.dim()),
                format!("left coideal: {coideal}"),
            ];
            text.extend(basis.iter().map(|b| format!("  {b}")));
            let result = json!({
                "degree": degree,
                "x_degree": x_degree,
                "dimension": comp.dim(),
                "left_coideal": coideal,
                "basis": basis,
            });
            let witness = (!coideal).then(|| json!("the coproduct leaves the component"));
            Ok(Report::new(coideal, result, text).with_witness(witness))
        }
        Command::Plucker { r, .. } => {
            let ctx = context(n)?;
            let pc = ParabolicContext::grassmannian(&ctx, *r).map_err(|e| e.to_string())?;
            let rep = pc.plucker_relations().map_err(|e| e.to_string())?;
            let relations: Vec<String> = rep
                .kernel
                .iter()
                .map(|v| {
                    join_signed(
                        rep.labels
                            .iter()
                            .zip(v)
                            .filter(|(_, c)| !c.is_zero())
                            .map(|((i, j), c)| coeff_times(c, &format!("{}*{}", minor_label(i, *r), minor_label(j, *r))))
                            .collect(),
                    )
                })
                .collect();
            let ok = rep.classical_agrees();
            let mut text = vec![
                format!("products: {}", rep.labels.len()),
                format!("image rank: {}", rep.image_rank),
                format!("relations: {}", rep.kernel.len()),
                format!("classical rank: {} (expected {})", rep.classical_rank, rep.classical_expected),
            ];
            text.extend(relations.iter().map(|r| format!("  {r} = 0")));
            let result = json!({
                "products": rep.labels.len(),
                "image_rank": rep.image_rank,
                "kernel_dim": rep.kernel.len(),
                "classical_rank": rep.classical_rank,
                "classical_expected": rep.classical_expected.to_string(),
                "relations": relations,
            });
            let witness = (!ok).then(|| json!("rank differs from the classical graded dimension"));
            Ok(Report::new(ok, result, text).with_witness(witness))
        }
        Command::BigcellManin { r, .. } => {
            let ctx = context(n)?;
            let pc = ParabolicContext::grassmannian(&ctx, *r).map_err(|e| e.to_string())?;
            let rep = pc.bigcell_manin_check().map_err(|e| e.to_string())?;
            let twists: Vec<Value> = rep
                .twists
                .iter()
                .map(|((i, j), a)| json!({"i": i, "j": j, "twist": a}))
                .collect();
            let mut text: Vec<String> = rep
                .twists
                .iter()
                .map(|((i, j), a)| format!("twist D_0 Δ_{i}{j} = q^{a} Δ_{i}{j} D_0"))
                .collect();
            text.push(format!("relations checked: {}", rep.relations_checked));
            text.push(format!("manin relations: {}", rep.ok()));
            text.push(format!("reversed columns: {}", rep.ok_reversed()));
            let result = json!({
                "twists": twists,
                "relations_checked": rep.relations_checked,
                "failures": rep.failures,
                "reversed_failures": rep.reversed_failures,
            });
            let witness = rep.failures.first().map(|f| json!(f));
            Ok(Report::new(rep.ok(), result, text).with_witness(witness))
        }
        Command::Poisson { left, right, .. } => {
            let ctx = context(n)?;
            let f = polynomial(left, &ctx)?.specialize_q1();
            let g = polynomial(right, &ctx)?.specialize_q1();
            let b = PoissonRing::new(n).bracket(&f, &g).map_err(|e| e.to_string())?.to_string();
            Ok(Report::new(true, json!(b), vec![b.clone()]))
        }
        Command::QdpStruct { .. } => {
            let ctx = context(n)?;
            let sc = dual_structure_constants(&chi_generators(&ctx)).map_err(|e| e.to_string())?;
            let alg = sc.as_lie_algebra();
            let matches = sc.table == *build_gl_dual(n).bracket_table();
            let axioms = alg.check_axioms();
            let jacobi = axioms.antisymmetry.is_none() && axioms.jacobi.is_none();
            let brackets: Vec<Value> = alg
                .nonzero_brackets()
                .iter()
                .map(|(a, b, v)| json!({"left": sc.labels[*a], "right": sc.labels[*b], "value": alg.vector_text(v)}))
                .collect();
            let mut text: Vec<String> = alg
                .nonzero_brackets()
                .iter()
                .map(|(a, b, v)| format!("[{}, {}] = {}", sc.labels[*a], sc.labels[*b], alg.vector_text(v)))
                .collect();
            text.push(format!("matches gl_{n}*: {matches}"));
            text.push(format!("jacobi: {jacobi}"));
            let result = json!({
                "labels": sc.labels,
                "brackets": brackets,
                "matches_gl_dual": matches,
                "jacobi": jacobi,
            });
            let witness = axioms.jacobi.or(axioms.antisymmetry).map(Value::String);
            Ok(Report::new(matches && jacobi, result, text).with_witness(witness))
        }
        Command::QdpPperp { r, order, .. } => {
            let rep = verify_p_perp(n, *r, *order).map_err(|e| e.to_string())?;
            let images: Vec<Value> = rep
                .images
                .iter()
                .map(|b| {
                    json!({
                        "i": b.i,
                        "j": b.j,
                        "image": b.image.to_string(),
                        "expected_sign": b.expected_sign,
                        "sign_ok": b.sign_ok,
                    })
                })
                .collect();
            let mut text: Vec<String> = rep
                .images
                .iter()
                .map(|b| {
                    format!(
                        "mu[{},{}] -> {} (expected sign {:+}, {})",
                        b.i,
                        b.j,
                        b.image,
                        b.expected_sign,
                        if b.sign_ok { "ok" } else { "mismatch" }
                    )
                })
                .collect();
            text.push(format!("perp dimension: {}", rep.perp_dim));
            text.push(format!("span equals perp: {}", rep.perp_matches_span));
            text.push(format!("closed: {}", rep.perp_closed));
            text.push(format!("abelian: {}", rep.perp_abelian));
            let result = json!({
                "images": images,
                "perp_dim": rep.perp_dim,
                "perp_matches_span": rep.perp_matches_span,
                "perp_closed": rep.perp_closed,
                "perp_abelian": rep.perp_abelian,
            });
            let bad: Vec<String> = rep
                .images
                .iter()
                .filter(|b| !b.sign_ok)
                .map(|b| format!("mu[{},{}] -> {}", b.i, b.j, b.image))
                .collect();
            let witness = (!bad.is_empty()).then(|| json!(bad.join("; ")));
            Ok(Report::new(rep.ok(), result, text).with_witness(witness))
        }
        Command::Coisotropy {
            algebra,
            s,
            c,
            flag_type,
            basis,
            ..
        } => {
            let (g, h) = match (algebra, basis) {
                (AlgebraName::Sl2, Some(b)) => {
                    let g = build_sl2();
                    let h = subspace_arg(g.dim(), b)?;
                    (g, h)
                }
                (AlgebraName::Gl, Some(b)) => {
                    let g = build_gl(n);
                    let h = subspace_arg(g.dim(), b)?;
                    (g, h)
                }
                (AlgebraName::Sl2, None) => {
                    let s = rational_arg("s", s)?;
                    let c = rational_arg("c", c)?;
                    (build_sl2(), p_epsilon(&s, &c).map_err(|e| e.to_string())?)
                }
                (AlgebraName::Gl, None) => {
                    let ft = flag_type.as_ref().ok_or("--flag-type is required for --algebra gl")?;
                    let shape = BlockShape::new(n, ft).map_err(|e| e.to_string())?;
                    (build_gl(n), block_parabolic(&shape))
                }
            };
            let rep = coisotropy_check(&g, &h);
            let ok = rep.subalgebra && rep.coideal && rep.perp_subalgebra;
            let basis: Vec<String> = h.basis().iter().map(|v| g.vector_text(v)).collect();
            let text = vec![
                format!("basis: {}", basis.join(", ")),
                format!("subalgebra: {}", rep.subalgebra),
                format!("coideal: {}", rep.coideal),
                format!("perp subalgebra: {}", rep.perp_subalgebra),
            ];
            let mut result = coisotropy_value(&rep);
            result["basis"] = json!(basis);
            Ok(Report::new(ok, result, text).with_witness(rep.witness.map(Value::String)))
        }
        Command::FlagSection { flag_type, .. } => {
            let ctx = context(n)?;
            let pc = ParabolicContext::flag_section(&ctx, flag_type).map_err(|e| e.to_string())?;
            let span = pc.degree_one_spanning_set().map_err(|e| e.to_string())?;
            let rep = pc.classify_section(&span);
            let class = rep.classification.to_string();
            let deg = pc.semi_invariant_degree(pc.d(), 2);
            let ok = rep.classification == SectionClass::Quantum && deg == Some(1);
            let text = vec![
                format!("d: {}", pc.d()),
                format!("classification: {class}"),
                format!(
                    "degree of d: {}",
                    deg.map_or_else(|| "none".to_string(), |k| k.to_string())
                ),
            ];
            let result = json!({"d": pc.d().to_string(), "classification": class, "d_degree": deg});
            Ok(Report::new(ok, result, text).with_witness(rep.witness.map(Value::String)))
        }
    }
}
