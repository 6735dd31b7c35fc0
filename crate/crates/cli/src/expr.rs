//! Expression syntax for algebra elements.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' ['-'] int)?
//! atom   := rational | 'q' | 'x[' i ',' j ']' | 'D[' list ';' list ']' | '(' expr ')'
//! ```
//!
//! Negative exponents are accepted on `q` and on the full determinant
//! `D[1,…,n;1,…,n]` only.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use qhs_core::qcoeff::fmt_rational;
use qhs_core::{AlgebraContext, Rational};
use thiserror::Error;

/// Abstract syntax tree of an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    Q,
    Gen { row: usize, col: usize },
    Minor { rows: Vec<usize>, cols: Vec<usize> },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
}

impl Expr {
    /// Whether this node is the full determinant `D[1..n;1..n]`.
    pub fn is_full_det(&self, n: usize) -> bool {
        let all: Vec<usize> = (1..=n).collect();
        matches!(self, Expr::Minor { rows, cols } if *rows == all && *cols == all)
    }
}

/// Parse failure with the byte offset into the source.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", .expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("index {index} at byte {offset} is out of range for n = {n}")]
    IndexOutOfRange { offset: usize, index: usize, n: usize },
    #[error("invalid minor at byte {offset}: {reason}")]
    InvalidMinor { offset: usize, reason: String },
    #[error("negative exponent at byte {offset} on a base other than q or the full determinant")]
    NegativeExponent { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::IndexOutOfRange { offset, .. }
            | ParseError::InvalidMinor { offset, .. }
            | ParseError::NegativeExponent { offset } => *offset,
        }
    }

    /// The message followed by the source line and a caret under the offset.
    pub fn render(&self, src: &str) -> String {
        let col = src[..self.offset().min(src.len())].chars().count();
        format!("{self}\n  {src}\n  {}^", " ".repeat(col))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Q,
    X,
    D,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Semi,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("integer {v}"),
            Tok::Q => "'q'".into(),
            Tok::X => "'x'".into(),
            Tok::D => "'D'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Semi => "';'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Slash => "'/'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut it = src.char_indices().peekable();
    while let Some(&(pos, ch)) = it.peek() {
        if ch.is_whitespace() {
            it.next();
            continue;
        }
        if ch.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(p, c)) = it.peek() {
                if !c.is_ascii_digit() {
                    break;
                }
                end = p + c.len_utf8();
                it.next();
            }
            let v: BigInt = src[pos..end].parse().expect("digits");
            out.push((Tok::Int(v), pos));
            continue;
        }
        let tok = match ch {
            'q' => Tok::Q,
            'x' => Tok::X,
            'D' => Tok::D,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            other => {
                return Err(ParseError::Syntax {
                    offset: pos,
                    expected: vec!["a token".into()],
                    found: format!("{other:?}"),
                })
            }
        };
        out.push((tok, pos));
        it.next();
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    n: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<usize, ParseError> {
        if *self.peek() == tok {
            Ok(self.bump().1)
        } else {
            self.error(&[&tok.describe()])
        }
    }

    fn int(&mut self) -> Result<(BigInt, usize), ParseError> {
        match self.peek().clone() {
            Tok::Int(v) => {
                let off = self.bump().1;
                Ok((v, off))
            }
            _ => self.error(&["integer"]),
        }
    }

    fn index(&mut self) -> Result<(usize, usize), ParseError> {
        let (v, off) = self.int()?;
        match v.to_usize() {
            Some(i) if (1..=self.n).contains(&i) => Ok((i, off)),
            _ => Err(ParseError::IndexOutOfRange {
                offset: off,
                index: v.to_usize().unwrap_or(usize::MAX),
                n: self.n,
            }),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = if *self.peek() == Tok::Minus {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let start = self.offset();
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        let (v, _) = self.int()?;
        let v = if negative { -v } else { v };
        let Some(k) = v.to_i32() else {
            return Err(ParseError::Syntax {
                offset: start,
                expected: vec!["exponent within 32 bits".into()],
                found: v.to_string(),
            });
        };
        if k < 0 && base != Expr::Q && !base.is_full_det(self.n) {
            return Err(ParseError::NegativeExponent { offset: start });
        }
        Ok(Expr::Pow(Box::new(base), k))
    }

    fn index_list(&mut self) -> Result<Vec<usize>, ParseError> {
        let mut out = vec![self.index()?.0];
        while *self.peek() == Tok::Comma {
            self.bump();
            out.push(self.index()?.0);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(num) => {
                self.bump();
                if *self.peek() != Tok::Slash {
                    return Ok(Expr::Num(Rational::from_integer(num)));
                }
                self.bump();
                let (den, off) = self.int()?;
                if den.is_zero() {
                    return Err(ParseError::Syntax {
                        offset: off,
                        expected: vec!["nonzero denominator".into()],
                        found: "0".into(),
                    });
                }
                Ok(Expr::Num(Rational::new(num, den)))
            }
            Tok::Q => {
                self.bump();
                Ok(Expr::Q)
            }
            Tok::X => {
                self.bump();
                self.expect(Tok::LBracket)?;
                let (row, _) = self.index()?;
                self.expect(Tok::Comma)?;
                let (col, _) = self.index()?;
                self.expect(Tok::RBracket)?;
                Ok(Expr::Gen { row, col })
            }
            Tok::D => {
                let start = self.bump().1;
                self.expect(Tok::LBracket)?;
                let rows = self.index_list()?;
                self.expect(Tok::Semi)?;
                let cols = self.index_list()?;
                self.expect(Tok::RBracket)?;
                let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
                if rows.len() != cols.len() {
                    return Err(ParseError::InvalidMinor {
                        offset: start,
                        reason: format!("{} rows but {} columns", rows.len(), cols.len()),
                    });
                }
                if !increasing(&rows) || !increasing(&cols) {
                    return Err(ParseError::InvalidMinor {
                        offset: start,
                        reason: "indices must be strictly increasing".into(),
                    });
                }
                Ok(Expr::Minor { rows, cols })
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            _ => self.error(&["number", "'q'", "'x'", "'D'", "'('"]),
        }
    }
}

/// Parses `src` against the generators of `ctx`.
pub fn parse_expression(src: &str, ctx: &AlgebraContext) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
        n: ctx.n(),
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error(&["'+'", "'-'", "'*'", "'^'", "end of input"]);
    }
    Ok(e)
}

fn list(v: &[usize]) -> String {
    v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

fn fmt_expr(e: &Expr) -> String {
    match e {
        Expr::Add(a, b) => format!("{} + {}", fmt_sum_left(a), fmt_term(b)),
        Expr::Sub(a, b) => format!("{} - {}", fmt_sum_left(a), fmt_term(b)),
        Expr::Neg(a) => format!("-{}", fmt_term(a)),
        _ => fmt_term(e),
    }
}

fn fmt_sum_left(e: &Expr) -> String {
    match e {
        Expr::Add(..) | Expr::Sub(..) | Expr::Neg(..) => fmt_expr(e),
        _ => fmt_term(e),
    }
}

fn fmt_term(e: &Expr) -> String {
    match e {
        Expr::Mul(a, b) => {
            let left = match **a {
                Expr::Mul(..) => fmt_term(a),
                _ => fmt_factor(a),
            };
            format!("{left}*{}", fmt_factor(b))
        }
        _ => fmt_factor(e),
    }
}

fn fmt_factor(e: &Expr) -> String {
    match e {
        Expr::Pow(a, k) => format!("{}^{k}", fmt_atom(a)),
        _ => fmt_atom(e),
    }
}

fn fmt_atom(e: &Expr) -> String {
    match e {
        Expr::Num(r) if !r.is_negative() => fmt_rational(r),
        Expr::Q => "q".into(),
        Expr::Gen { row, col } => format!("x[{row},{col}]"),
        Expr::Minor { rows, cols } => format!("D[{};{}]", list(rows), list(cols)),
        _ => format!("({})", fmt_expr(e)),
    }
}

impl fmt::Display for Expr {
    /// Prints with the fewest parentheses the grammar needs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(r) if r.is_negative() => write!(f, "-{}", fmt_rational(&-r)),
            _ => write!(f, "{}", fmt_expr(self)),
        }
    }
}
