//! Text grammar for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' uint)?
//! atom   := uint ('/' uint)? | variable | '(' expr ')'
//! ```
//!
//! Variables are `x1..xs`; for `s ≤ 5` the aliases `x,y,z,u,v` name the same
//! variables. Juxtaposition is rejected, so `2x` and `xy` are errors.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub input: String,
    /// Character offset of the problem.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    /// The message followed by the input and a caret under the offending character.
    pub fn render(&self) -> String {
        format!("error: {}\n  {}\n  {}^", self.message, self.input, " ".repeat(self.position))
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at position {}", self.message, self.position)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
}

fn lex(input: &str) -> Result<Lexer, (usize, String)> {
    let chars: Vec<char> = input.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            toks.push((Tok::Num(s.parse().expect("digits")), start));
            continue;
        }
        if c.is_ascii_alphabetic() {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), start));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err((start, format!("unexpected character {c:?}"))),
        };
        toks.push((t, start));
        i += 1;
    }
    toks.push((Tok::End, chars.len()));
    Ok(Lexer { toks })
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    nvars: usize,
}

type PResult<T> = Result<T, (usize, String)>;

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> PResult<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Num(_) | Tok::Ident(_) | Tok::LParen => {
                    return Err((self.offset(), "implicit multiplication is not allowed; use '*'".into()))
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> PResult<Polynomial> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> PResult<Polynomial> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Tok::Num(k) => {
                let k: u32 = k.try_into().map_err(|_| (at, "exponent too large".to_string()))?;
                if *self.peek() == Tok::Caret {
                    return Err((self.offset(), "chained exponents are ambiguous; use parentheses".into()));
                }
                Ok(base.pow(k))
            }
            _ => Err((at, "expected a non-negative integer exponent".into())),
        }
    }

    fn atom(&mut self) -> PResult<Polynomial> {
        let at = self.offset();
        match self.bump() {
            Tok::Num(p) => {
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let qat = self.offset();
                    match self.bump() {
                        Tok::Num(q) if !q.is_zero() => {
                            Ok(Polynomial::constant(self.nvars, BigRational::new(p, q)))
                        }
                        Tok::Num(_) => Err((qat, "zero denominator".into())),
                        _ => Err((qat, "expected an integer denominator".into())),
                    }
                } else {
                    Ok(Polynomial::constant(self.nvars, BigRational::from_integer(p)))
                }
            }
            Tok::Ident(name) => match resolve_variable(&name, self.nvars) {
                Some(i) => Ok(Polynomial::var(self.nvars, i)),
                None => Err((at, format!("unknown variable {name:?} for {} variables", self.nvars))),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                if self.bump() != Tok::RParen {
                    return Err((self.toks[self.pos.saturating_sub(1)].1, "expected ')'".into()));
                }
                Ok(inner)
            }
            Tok::End => Err((at, "unexpected end of input".into())),
            t => Err((at, format!("unexpected {}", describe(&t)))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Slash => "'/'",
        Tok::Caret => "'^'",
        Tok::LParen => "'('",
        Tok::RParen => "')'",
        Tok::Num(_) => "number",
        Tok::Ident(_) => "identifier",
        Tok::End => "end of input",
    }
}

/// Maps a variable name to its 0-based index.
pub fn resolve_variable(name: &str, nvars: usize) -> Option<usize> {
    if nvars <= 5 {
        if let Some(i) = ["x", "y", "z", "u", "v"].iter().position(|a| *a == name) {
            return (i < nvars).then_some(i);
        }
    }
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let k: usize = digits.parse().ok()?;
    (1..=nvars).contains(&k).then(|| k - 1)
}

/// Parses `input` as a polynomial in `nvars` variables.
pub fn parse_polynomial(input: &str, nvars: usize) -> Result<Polynomial, ParseError> {
    let wrap = |(position, message): (usize, String)| ParseError { input: input.to_string(), position, message };
    let lexer = lex(input).map_err(wrap)?;
    let mut p = Parser { toks: &lexer.toks, pos: 0, nvars };
    let poly = p.expr().map_err(wrap)?;
    if *p.peek() != Tok::End {
        let at = p.offset();
        let t = p.bump();
        return Err(wrap((at, format!("unexpected {}", describe(&t)))));
    }
    Ok(poly)
}
