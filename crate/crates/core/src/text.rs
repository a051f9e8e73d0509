//! Textual polynomial grammar and the line-oriented field and hypersurface
//! file formats.
//!
//! ```text
//! poly   := [sign] term (sign term)*
//! term   := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
//! factor := 'x' nat ['^' nat]
//! coeff  := nat ['/' nat]
//! sign   := '+' | '-'
//! ```
//!
//! Whitespace is insignificant. A field file starts with
//! `weights: w0 w1 ... wn` followed by one `dx<i>: <poly>` line per nonzero
//! component; a hypersurface file has an optional `weights:` line and one
//! `f: <poly>` line. Blank lines and lines starting with `#` are skipped.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::VectorField;
use crate::poly::{Monomial, Poly};
use crate::weights::WeightSystem;

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    line_offset: usize,
}

impl Cursor {
    fn new(src: &str, line_offset: usize) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            line: 1,
            column: 1,
            line_offset,
        }
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.get(self.pos) {
            if c == '\n' {
                self.line += 1;
                self.column = 1;
            } else if c.is_whitespace() {
                self.column += 1;
            } else {
                break;
            }
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        self.column += 1;
        Some(c)
    }

    fn location(&self) -> (usize, usize) {
        (self.line + self.line_offset, self.column)
    }

    fn error(&mut self, message: impl Into<String>) -> Error {
        self.skip_ws();
        let (line, column) = self.location();
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(format!("expected '{want}', found end of input"))),
        }
    }

    /// Digits are read contiguously; whitespace only before the first one.
    fn nat(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {}
            Some(c) => return Err(self.error(format!("expected a number, found '{c}'"))),
            None => return Err(self.error("expected a number, found end of input")),
        }
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
            self.column += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn small_nat(&mut self, what: &str) -> Result<u64> {
        let (line, column) = {
            self.skip_ws();
            self.location()
        };
        let n = self.nat()?;
        u64::try_from(n).map_err(|_| Error::Syntax {
            line,
            column,
            message: format!("{what} too large"),
        })
    }
}

struct Parser {
    cur: Cursor,
    num_vars: usize,
}

impl Parser {
    fn poly(&mut self) -> Result<Poly> {
        let mut out = Poly::zero(self.num_vars);
        let mut negate = match self.cur.peek() {
            Some('-') => {
                self.cur.bump();
                true
            }
            Some('+') => {
                self.cur.bump();
                false
            }
            _ => false,
        };
        loop {
            let term = self.term()?;
            out = if negate { &out - &term } else { &out + &term };
            match self.cur.peek() {
                Some('+') => negate = false,
                Some('-') => negate = true,
                None => return Ok(out),
                Some(c) => return Err(self.cur.error(format!("unexpected '{c}'"))),
            }
            self.cur.bump();
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut coeff = BigRational::one();
        let mut exps = vec![0u32; self.num_vars];
        match self.cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                coeff = self.coeff()?;
                if self.cur.peek() != Some('*') {
                    return Ok(Poly::constant(self.num_vars, coeff));
                }
                self.cur.bump();
                self.factor(&mut exps)?;
            }
            Some('x') => self.factor(&mut exps)?,
            Some(c) => return Err(self.cur.error(format!("expected a term, found '{c}'"))),
            None => return Err(self.cur.error("expected a term, found end of input")),
        }
        while self.cur.peek() == Some('*') {
            self.cur.bump();
            self.factor(&mut exps)?;
        }
        Ok(Poly::term(self.num_vars, Monomial::new(exps), coeff))
    }

    fn coeff(&mut self) -> Result<BigRational> {
        let num = self.cur.nat()?;
        if self.cur.peek() != Some('/') {
            return Ok(BigRational::from_integer(num));
        }
        self.cur.bump();
        self.cur.skip_ws();
        let (line, column) = self.cur.location();
        let den = self.cur.nat()?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator { line, column });
        }
        Ok(BigRational::new(num, den))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        self.cur.expect('x')?;
        let index = self.cur.small_nat("variable index")?;
        let index = usize::try_from(index).unwrap_or(usize::MAX);
        if index >= self.num_vars {
            return Err(Error::VariableIndexOutOfRange {
                index,
                num_vars: self.num_vars,
            });
        }
        let power = if self.cur.peek() == Some('^') {
            self.cur.bump();
            let e = self.cur.small_nat("exponent")?;
            u32::try_from(e).map_err(|_| self.cur.error("exponent too large"))?
        } else {
            1
        };
        exps[index] = exps[index]
            .checked_add(power)
            .ok_or_else(|| self.cur.error("exponent overflow"))?;
        Ok(())
    }
}

fn parse_at(text: &str, num_vars: usize, line_offset: usize) -> Result<Poly> {
    let mut parser = Parser {
        cur: Cursor::new(text, line_offset),
        num_vars,
    };
    parser.poly()
}

/// Parses `text` as a polynomial in `x0, ..., x{num_vars-1}`.
pub fn parse_poly(text: &str, num_vars: usize) -> Result<Poly> {
    if num_vars < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 variables, got {num_vars}"
        )));
    }
    parse_at(text, num_vars, 0)
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn parse_weights_line(lineno: usize, rest: &str) -> Result<WeightSystem> {
    let weights = rest
        .split_whitespace()
        .map(|tok| {
            tok.parse::<u64>()
                .map_err(|_| syntax(lineno, 1, format!("invalid weight '{tok}'")))
        })
        .collect::<Result<Vec<_>>>()?;
    WeightSystem::new(weights)
        .map_err(|_| syntax(lineno, 1, "weights must be >= 2 positive integers"))
}

/// Offsets the column of a syntax error by the key prefix of its line.
fn shift_column(err: Error, by: usize) -> Error {
    match err {
        Error::Syntax {
            line,
            column,
            message,
        } => Error::Syntax {
            line,
            column: column + by,
            message,
        },
        Error::ZeroDenominator { line, column } => Error::ZeroDenominator {
            line,
            column: column + by,
        },
        other => other,
    }
}

pub fn parse_field_file(text: &str) -> Result<VectorField> {
    let mut lines = content_lines(text);
    let (first_no, first) = lines
        .next()
        .ok_or_else(|| syntax(1, 1, "empty field file"))?;
    let rest = first
        .strip_prefix("weights:")
        .ok_or_else(|| syntax(first_no, 1, "expected 'weights:' line"))?;
    let weights = parse_weights_line(first_no, rest)?;
    let n = weights.num_vars();
    let mut components: Vec<Option<Poly>> = vec![None; n];
    for (lineno, line) in lines {
        let (key, body) = line
            .split_once(':')
            .ok_or_else(|| syntax(lineno, 1, "expected 'dx<i>: <poly>'"))?;
        let index: usize = key
            .strip_prefix("dx")
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| syntax(lineno, 1, format!("unknown key '{key}'")))?;
        if index >= n {
            return Err(Error::VariableIndexOutOfRange { index, num_vars: n });
        }
        if components[index].is_some() {
            return Err(syntax(lineno, 1, format!("duplicate component dx{index}")));
        }
        let poly = parse_at(body, n, lineno - 1).map_err(|e| shift_column(e, key.len() + 1))?;
        components[index] = Some(poly);
    }
    let components = components
        .into_iter()
        .map(|c| c.unwrap_or_else(|| Poly::zero(n)))
        .collect();
    VectorField::new(weights, components)
}

/// Serializes a field; zero components are omitted.
pub fn format_field_file(field: &VectorField) -> String {
    let mut out = String::new();
    writeln!(out, "weights: {}", join_weights(field.weights())).unwrap();
    for (i, c) in field.components().iter().enumerate() {
        if !c.is_zero() {
            writeln!(out, "dx{i}: {c}").unwrap();
        }
    }
    out
}

fn join_weights(w: &WeightSystem) -> String {
    w.weights()
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses a hypersurface file. Without a `weights:` line, `num_vars` must
/// be supplied.
pub fn parse_hypersurface_file(
    text: &str,
    num_vars: Option<usize>,
) -> Result<(Option<WeightSystem>, Poly)> {
    let mut weights = None;
    let mut poly = None;
    for (lineno, line) in content_lines(text) {
        if let Some(rest) = line.strip_prefix("weights:") {
            if weights.is_some() || poly.is_some() {
                return Err(syntax(lineno, 1, "'weights:' must come first, once"));
            }
            weights = Some(parse_weights_line(lineno, rest)?);
        } else if let Some(body) = line.strip_prefix("f:") {
            if poly.is_some() {
                return Err(syntax(lineno, 1, "duplicate 'f:' line"));
            }
            let n = weights
                .as_ref()
                .map(WeightSystem::num_vars)
                .or(num_vars)
                .ok_or_else(|| syntax(lineno, 1, "number of variables unknown"))?;
            poly = Some(parse_at(body, n, lineno - 1).map_err(|e| shift_column(e, 2))?);
        } else {
            return Err(syntax(lineno, 1, "expected 'weights:' or 'f:'"));
        }
    }
    let poly = poly.ok_or_else(|| syntax(1, 1, "missing 'f:' line"))?;
    Ok((weights, poly))
}

pub fn format_hypersurface_file(w: &WeightSystem, f: &Poly) -> String {
    format!("weights: {}\nf: {f}\n", join_weights(w))
}
