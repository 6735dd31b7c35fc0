//! Command-line front end: an expression language for elements of
//! `O_q(M_n)` and `O_q(GL_n)` and one batch command per verification.

pub mod commands;
pub mod eval;
pub mod expr;

pub use commands::{run, Format, Outcome, Report, MAX_COMPONENT_DIM_VAR};
pub use eval::{evaluate, fraction_text};
pub use expr::{parse_expression, Expr, ParseError};
