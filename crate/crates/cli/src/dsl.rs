//! The ideal expression language.
//!
//! ```text
//! program  := (NAME '=' expr ';')* expr
//! expr     := term ('+' term)*            sum of ideals
//! term     := atom ('^' atom)*            intersection (binds tighter)
//! atom     := literal | NAME | '(' expr ')'
//! literal  := '(' ')' | '(' box (',' box)* ')'
//! box      := '1' | factor factor ...
//! factor   := 'x' INDEX ['^' bound]
//! bound    := ['>'] rational              '>' marks an open threshold
//! rational := INT ['/' POSINT]
//! ```
//!
//! A bare factor `x2` means exponent 1 with a closed threshold, `(1)` is
//! the unit ideal and `()` the zero ideal. Variables are `x1..xd`. After a
//! `(`, a box literal is recognized by its first token (`x<digits>`, `1`,
//! or a closing paren); anything else starts a grouped subexpression.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use staircase_core::{Config, Corner, Ideal, Mode, Monomial, Rational};

use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LParen,
    RParen,
    Plus,
    Caret,
    Comma,
    Gt,
    Slash,
    Semi,
    Eq,
    Minus,
    Int(String),
    Ident(String),
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    pos: usize,
}

fn tokenize(text: &str) -> Result<Vec<Spanned>, CliError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '+' => Tok::Plus,
            '^' => Tok::Caret,
            ',' => Tok::Comma,
            '>' => Tok::Gt,
            '/' => Tok::Slash,
            ';' => Tok::Semi,
            '=' => Tok::Eq,
            '-' => Tok::Minus,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Spanned { tok: Tok::Int(text[start..i].to_string()), pos: start });
                continue;
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Spanned { tok: Tok::Ident(text[start..i].to_string()), pos: start });
                continue;
            }
            other => {
                return Err(CliError::Parse(format!(
                    "unexpected character `{other}` at position {i}"
                )))
            }
        };
        out.push(Spanned { tok, pos: i });
        i += 1;
    }
    Ok(out)
}

/// Abstract syntax: ideal literals combined by sum and intersection, with
/// optional named bindings resolved at evaluation time.
#[derive(Debug, Clone)]
pub enum IdealExpr {
    Literal(Ideal),
    Name(String, usize),
    Sum(Box<IdealExpr>, Box<IdealExpr>),
    Intersect(Box<IdealExpr>, Box<IdealExpr>),
}

pub struct Program {
    bindings: Vec<(String, IdealExpr)>,
    result: IdealExpr,
}

struct Parser<'a> {
    tokens: Vec<Spanned>,
    index: usize,
    cfg: Config,
    text_len: usize,
    _text: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.index).map(|s| &s.tok)
    }

    fn peek_at(&self, offset: usize) -> Option<&Tok> {
        self.tokens.get(self.index + offset).map(|s| &s.tok)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.index).map_or(self.text_len, |s| s.pos)
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.index).cloned();
        self.index += 1;
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<usize, CliError> {
        let pos = self.pos();
        match self.bump() {
            Some(s) if s.tok == tok => Ok(s.pos),
            _ => Err(CliError::Parse(format!("expected {what} at position {pos}"))),
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T, CliError> {
        Err(CliError::Parse(format!("{msg} at position {}", self.pos())))
    }

    fn parse_program(&mut self) -> Result<Program, CliError> {
        let mut bindings = Vec::new();
        loop {
            // A binding starts with NAME '='.
            let is_binding = matches!(
                (self.peek(), self.peek_at(1)),
                (Some(Tok::Ident(_)), Some(Tok::Eq))
            );
            if !is_binding {
                break;
            }
            let name = match self.bump().unwrap().tok {
                Tok::Ident(name) => name,
                _ => unreachable!(),
            };
            if is_variable_name(&name) {
                return self.err(&format!("`{name}` is a reserved variable name"));
            }
            self.expect(Tok::Eq, "`=`")?;
            let expr = self.parse_expr()?;
            self.expect(Tok::Semi, "`;` after binding")?;
            bindings.push((name, expr));
        }
        let result = self.parse_expr()?;
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(Program { bindings, result })
    }

    fn parse_expr(&mut self) -> Result<IdealExpr, CliError> {
        let mut lhs = self.parse_term()?;
        while self.peek() == Some(&Tok::Plus) {
            self.bump();
            let rhs = self.parse_term()?;
            lhs = IdealExpr::Sum(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn parse_term(&mut self) -> Result<IdealExpr, CliError> {
        let mut lhs = self.parse_atom()?;
        while self.peek() == Some(&Tok::Caret) {
            self.bump();
            let rhs = self.parse_atom()?;
            lhs = IdealExpr::Intersect(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn parse_atom(&mut self) -> Result<IdealExpr, CliError> {
        match self.peek() {
            Some(Tok::LParen) => {
                // Box literal or grouped expression, decided by lookahead.
                let literal = match self.peek_at(1) {
                    Some(Tok::RParen) => true,
                    Some(Tok::Int(n)) => n == "1",
                    Some(Tok::Ident(name)) => is_variable_name(name),
                    _ => false,
                };
                if literal {
                    self.parse_literal().map(IdealExpr::Literal)
                } else {
                    self.bump();
                    let inner = self.parse_expr()?;
                    self.expect(Tok::RParen, "`)`")?;
                    Ok(inner)
                }
            }
            Some(Tok::Ident(name)) => {
                let name = name.clone();
                let pos = self.pos();
                if is_variable_name(&name) {
                    return self.err("ideal literals must be parenthesized");
                }
                self.bump();
                Ok(IdealExpr::Name(name, pos))
            }
            _ => self.err("expected an ideal"),
        }
    }

    fn parse_literal(&mut self) -> Result<Ideal, CliError> {
        self.expect(Tok::LParen, "`(`")?;
        let mut corners = Vec::new();
        if self.peek() == Some(&Tok::RParen) {
            self.bump();
            return Ok(Ideal::zero(self.cfg));
        }
        loop {
            corners.push(self.parse_box()?);
            match self.bump() {
                Some(Spanned { tok: Tok::Comma, .. }) => continue,
                Some(Spanned { tok: Tok::RParen, .. }) => break,
                _ => return self.err("expected `,` or `)` in ideal literal"),
            }
        }
        Ok(Ideal::new(self.cfg, corners))
    }

    fn parse_box(&mut self) -> Result<Corner, CliError> {
        if matches!(self.peek(), Some(Tok::Int(n)) if n == "1") {
            self.bump();
            return Ok(Corner::unit(self.cfg.dim));
        }
        let mut alpha = vec![Rational::zero(); self.cfg.dim];
        let mut strict = vec![false; self.cfg.dim];
        let mut seen = vec![false; self.cfg.dim];
        let mut any = false;
        while let Some(Tok::Ident(name)) = self.peek() {
            if !is_variable_name(name) {
                break;
            }
            let pos = self.pos();
            let name = name.clone();
            self.bump();
            let var = name[1..].parse::<usize>().map_err(|_| {
                CliError::Parse(format!("invalid variable `{name}` at position {pos}"))
            })?;
            if var == 0 || var > self.cfg.dim {
                return Err(CliError::Parse(format!(
                    "variable `{name}` out of range 1..={} at position {pos}",
                    self.cfg.dim
                )));
            }
            if seen[var - 1] {
                return Err(CliError::Parse(format!(
                    "duplicate variable `{name}` in one box at position {pos}"
                )));
            }
            seen[var - 1] = true;
            any = true;
            let (exp, open) = if self.peek() == Some(&Tok::Caret) {
                self.bump();
                self.parse_bound()?
            } else {
                (Rational::one(), false)
            };
            alpha[var - 1] = exp;
            strict[var - 1] = open;
        }
        if !any {
            return self.err("expected a box (factors like `x1 x2^3/2`, or `1`)");
        }
        Corner::new(alpha, strict, &self.cfg).map_err(|e| CliError::Parse(e.to_string()))
    }

    fn parse_bound(&mut self) -> Result<(Rational, bool), CliError> {
        let open = if self.peek() == Some(&Tok::Gt) {
            self.bump();
            true
        } else {
            false
        };
        let value = self.parse_rational()?;
        Ok((value, open))
    }

    fn parse_rational(&mut self) -> Result<Rational, CliError> {
        if self.peek() == Some(&Tok::Minus) {
            return self.err("exponents must be nonnegative");
        }
        let pos = self.pos();
        let numer = match self.bump() {
            Some(Spanned { tok: Tok::Int(n), .. }) => n,
            _ => return Err(CliError::Parse(format!("expected a number at position {pos}"))),
        };
        let text = if self.peek() == Some(&Tok::Slash) {
            self.bump();
            let denom = match self.bump() {
                Some(Spanned { tok: Tok::Int(d), .. }) => d,
                _ => {
                    return Err(CliError::Parse(format!(
                        "expected a denominator at position {}",
                        pos
                    )))
                }
            };
            format!("{numer}/{denom}")
        } else {
            numer
        };
        let value = Rational::parse(&text)
            .map_err(|e| CliError::Parse(format!("{e} at position {pos}")))?;
        if self.cfg.mode == Mode::Integer && !value.is_integer() {
            return Err(CliError::Parse(format!(
                "non-integer exponent `{text}` in integer mode at position {pos}"
            )));
        }
        Ok(value)
    }
}

fn is_variable_name(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next() == Some('x') && !name[1..].is_empty() && name[1..].chars().all(|c| c.is_ascii_digit())
}

/// Parses a full program (bindings plus a final expression).
pub fn parse_program(text: &str, cfg: Config) -> Result<Program, CliError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, index: 0, cfg, text_len: text.len(), _text: text };
    parser.parse_program()
}

/// Evaluates a program down to one ideal.
pub fn eval_program(program: &Program) -> Result<Ideal, CliError> {
    let mut env: BTreeMap<String, Ideal> = BTreeMap::new();
    for (name, expr) in &program.bindings {
        let value = eval(expr, &env)?;
        env.insert(name.clone(), value);
    }
    eval(&program.result, &env)
}

fn eval(expr: &IdealExpr, env: &BTreeMap<String, Ideal>) -> Result<Ideal, CliError> {
    match expr {
        IdealExpr::Literal(ideal) => Ok(ideal.clone()),
        IdealExpr::Name(name, pos) => env.get(name).cloned().ok_or_else(|| {
            CliError::Parse(format!("unknown name `{name}` at position {pos}"))
        }),
        IdealExpr::Sum(a, b) => {
            let a = eval(a, env)?;
            let b = eval(b, env)?;
            a.sum(&b).map_err(CliError::from)
        }
        IdealExpr::Intersect(a, b) => {
            let a = eval(a, env)?;
            let b = eval(b, env)?;
            a.intersect(&b).map_err(CliError::from)
        }
    }
}

/// Convenience wrapper: parse and evaluate in one step.
pub fn eval_text(text: &str, cfg: Config) -> Result<Ideal, CliError> {
    eval_program(&parse_program(text, cfg)?)
}

/// Parses a bare monomial such as `x1 x2^3/2` (no parens, closed exponents
/// only).
pub fn parse_monomial(text: &str, cfg: Config) -> Result<Monomial, CliError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, index: 0, cfg, text_len: text.len(), _text: text };
    let corner = parser.parse_box()?;
    if parser.peek().is_some() {
        return parser.err("unexpected trailing input after monomial");
    }
    if corner.strict().iter().any(|&s| s) {
        return Err(CliError::Parse("a monomial cannot have open exponents".into()));
    }
    Ok(corner.monomial())
}

fn write_exponent(out: &mut String, var: usize, value: &Rational, open: bool) {
    if open {
        let _ = write!(out, "x{}^>{}", var + 1, value);
    } else if *value == Rational::one() {
        let _ = write!(out, "x{}", var + 1);
    } else {
        let _ = write!(out, "x{}^{}", var + 1, value);
    }
}

/// Canonical text of an ideal; `parse . print` is the identity on canonical
/// forms.
pub fn ideal_to_text(ideal: &Ideal) -> String {
    let mut out = String::from("(");
    for (k, corner) in ideal.corners().iter().enumerate() {
        if k > 0 {
            out.push_str(", ");
        }
        if corner.is_unit() {
            out.push('1');
            continue;
        }
        let mut wrote = false;
        for i in 0..corner.dim() {
            let a = &corner.alpha()[i];
            let s = corner.strict()[i];
            if a.is_zero() && !s {
                continue;
            }
            if wrote {
                out.push(' ');
            }
            wrote = true;
            write_exponent(&mut out, i, a, s);
        }
    }
    out.push(')');
    out
}

/// Text of a pure-power component, e.g. `(x1, x2^>2)`; parses back to the
/// same ideal.
pub fn pure_powers_to_text(p: &staircase_core::PurePowers) -> String {
    let mut out = String::from("(");
    let mut wrote = false;
    for i in p.support() {
        if wrote {
            out.push_str(", ");
        }
        wrote = true;
        let a = p.thresholds()[i].as_finite().expect("supported threshold is finite");
        write_exponent(&mut out, i, a, p.strict()[i]);
    }
    out.push(')');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn parses_single_open_box() {
        let cfg = Config::dense(2);
        let ideal = eval_text("(x1 x2^>1)", cfg).unwrap();
        let expected = Ideal::new(
            cfg,
            vec![Corner::new(vec![q(1, 1), q(1, 1)], vec![false, true], &cfg).unwrap()],
        );
        assert_eq!(ideal, expected);
    }

    #[test]
    fn parses_multi_box_ideal() {
        let cfg = Config::dense(2);
        let ideal = eval_text("(x1^>1, x2, x1 x2^1/2)", cfg).unwrap();
        assert_eq!(ideal.corners().len(), 3);
        assert_eq!(ideal_to_text(&ideal), "(x2, x1^>1, x1 x2^1/2)");
    }

    #[test]
    fn operators_combine_ideals() {
        let cfg = Config::dense(2);
        let meet = eval_text("(x2^>1) ^ (x1)", cfg).unwrap();
        assert_eq!(ideal_to_text(&meet), "(x1 x2^>1)");
        let join = eval_text("(x1) + (x2)", cfg).unwrap();
        assert_eq!(ideal_to_text(&join), "(x2, x1)");
        // Intersection binds tighter than sum.
        let mixed = eval_text("(x1^2) + (x1) ^ (x2)", cfg).unwrap();
        assert_eq!(ideal_to_text(&mixed), "(x1 x2, x1^2)");
        let grouped = eval_text("((x1^2) + (x1)) ^ (x2)", cfg).unwrap();
        assert_eq!(ideal_to_text(&grouped), "(x1 x2)");
    }

    #[test]
    fn bindings_resolve() {
        let cfg = Config::dense(2);
        let ideal = eval_text("A = (x1); B = (x2); A ^ B", cfg).unwrap();
        assert_eq!(ideal_to_text(&ideal), "(x1 x2)");
        assert!(matches!(
            eval_text("A ^ (x1)", cfg),
            Err(CliError::Parse(msg)) if msg.contains("unknown name")
        ));
    }

    #[test]
    fn zero_and_unit_literals() {
        let cfg = Config::dense(2);
        assert!(eval_text("()", cfg).unwrap().is_zero());
        assert!(eval_text("(1)", cfg).unwrap().is_unit());
        assert_eq!(ideal_to_text(&Ideal::zero(cfg)), "()");
        assert_eq!(ideal_to_text(&Ideal::unit(cfg)), "(1)");
        // x1^0 also gives the unit box.
        assert!(eval_text("(x1^0)", cfg).unwrap().is_unit());
    }

    #[test]
    fn rejects_malformed_input() {
        let cfg = Config::dense(2);
        for bad in [
            "(x1",
            "(x3)",
            "(x0)",
            "(x1 x1)",
            "(x1^-2)",
            "(y1)",
            "(x1))",
            "x1",
            "(x1^1/0)",
        ] {
            assert!(matches!(eval_text(bad, cfg), Err(CliError::Parse(_))), "accepted {bad}");
        }
        let zmode = Config::integer(2);
        assert!(matches!(eval_text("(x1^3/2)", zmode), Err(CliError::Parse(_))));
        assert!(eval_text("(x1^>1)", zmode).is_ok());
    }

    #[test]
    fn print_parse_round_trip() {
        let cfg = Config::dense(3);
        let ideal = eval_text("(x1 x2, x2^>2 x3^>2) + (x1^5/2)", cfg).unwrap();
        let printed = ideal_to_text(&ideal);
        let reparsed = eval_text(&printed, cfg).unwrap();
        assert_eq!(reparsed, ideal);
        assert_eq!(ideal_to_text(&reparsed), printed);
    }

    #[test]
    fn monomials() {
        let cfg = Config::dense(2);
        let m = parse_monomial("x1 x2^3/2", cfg).unwrap();
        assert_eq!(m.exponents(), &[q(1, 1), q(3, 2)]);
        assert!(parse_monomial("x1^>1", cfg).is_err());
        assert_eq!(parse_monomial("1", cfg).unwrap(), Monomial::one(2));
    }

    #[test]
    fn random_canonical_forms_round_trip() {
        // Tiny deterministic generator; every canonical printing must
        // reparse to the identical ideal, in both modes.
        let mut state = 0x00c0ffeeu64 | 1;
        let mut next = move || {
            state ^= state >> 12;
            state ^= state << 25;
            state ^= state >> 27;
            state.wrapping_mul(0x2545_f491_4f6c_dd1d)
        };
        for case in 0..300 {
            let d = 1 + (next() % 4) as usize;
            let cfg = if next() % 2 == 0 { Config::dense(d) } else { Config::integer(d) };
            let corners = (0..1 + next() % 4)
                .map(|_| {
                    let alpha = (0..d)
                        .map(|_| {
                            let numer = (next() % 5) as i64;
                            let denom = if cfg.mode == staircase_core::Mode::Integer {
                                1
                            } else {
                                1 + (next() % 2) as i64
                            };
                            Rational::new(numer, denom)
                        })
                        .collect();
                    let strict = (0..d).map(|_| next() % 2 == 1).collect();
                    Corner::new(alpha, strict, &cfg).unwrap()
                })
                .collect();
            let ideal = Ideal::new(cfg, corners);
            let printed = ideal_to_text(&ideal);
            let reparsed = eval_text(&printed, cfg)
                .unwrap_or_else(|e| panic!("case {case}: `{printed}` failed to reparse: {e}"));
            assert_eq!(reparsed, ideal, "case {case}: `{printed}`");
        }
    }
}
