//! Recursive-descent polynomial parser.
//!
//! Grammar: integer literals, identifiers `[A-Za-z][A-Za-z0-9_]*`, operators
//! `+ - * ^` and parentheses; `^` binds tightest, then `*`, then the additive
//! operators; whitespace is insignificant and `#` starts a comment running to
//! end of line. Rational literals `n/m` are accepted as an extension so that
//! printed characteristic-zero coefficients round-trip.

use super::{Polynomial, Ring};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_trivia(&mut self) {
        loop {
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
            if self.pos < self.src.len() && self.src[self.pos] == b'#' {
                while self.pos < self.src.len() && self.src[self.pos] != b'\n' {
                    self.pos += 1;
                }
                continue;
            }
            break;
        }
    }

    fn next(&mut self) -> Result<(Tok, usize), ParseError> {
        self.skip_trivia();
        let start = self.pos;
        if self.pos >= self.src.len() {
            return Ok((Tok::End, start));
        }
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                let n: BigInt = text.parse().unwrap();
                self.pos = end;
                return Ok((Tok::Int(n), start));
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = self.pos;
                while end < self.src.len()
                    && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap().to_string();
                self.pos = end;
                return Ok((Tok::Ident(text), start));
            }
            other => {
                return err(start, format!("unexpected character `{}`", other as char));
            }
        };
        self.pos += 1;
        Ok((tok, start))
    }
}

struct Parser<'a> {
    ring: &'a Ring,
    lexer: Lexer<'a>,
    tok: Tok,
    tok_pos: usize,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a Ring, src: &'a str) -> Result<Self, ParseError> {
        let mut lexer = Lexer::new(src);
        let (tok, tok_pos) = lexer.next()?;
        Ok(Parser {
            ring,
            lexer,
            tok,
            tok_pos,
        })
    }

    fn advance(&mut self) -> Result<(), ParseError> {
        let (tok, pos) = self.lexer.next()?;
        self.tok = tok;
        self.tok_pos = pos;
        Ok(())
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.signed_term()?;
        loop {
            match self.tok {
                Tok::Plus => {
                    self.advance()?;
                    let t = self.signed_term()?;
                    acc = acc.add(&t);
                }
                Tok::Minus => {
                    self.advance()?;
                    let t = self.signed_term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn signed_term(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        loop {
            match self.tok {
                Tok::Plus => self.advance()?,
                Tok::Minus => {
                    negate = !negate;
                    self.advance()?;
                }
                _ => break,
            }
        }
        let t = self.term()?;
        Ok(if negate { t.neg() } else { t })
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.tok == Tok::Star {
            self.advance()?;
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.tok == Tok::Caret {
            self.advance()?;
            let pos = self.tok_pos;
            match std::mem::replace(&mut self.tok, Tok::End) {
                Tok::Int(n) => {
                    self.advance()?;
                    let e: u32 = match n.try_into() {
                        Ok(e) => e,
                        Err(_) => return err(pos, "exponent out of range"),
                    };
                    Ok(base.pow(e))
                }
                other => {
                    self.tok = other;
                    err(pos, "expected a nonnegative integer exponent after `^`")
                }
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let pos = self.tok_pos;
        match std::mem::replace(&mut self.tok, Tok::End) {
            Tok::Int(n) => {
                self.advance()?;
                // rational literal n/m
                if self.tok == Tok::Slash {
                    self.advance()?;
                    let dpos = self.tok_pos;
                    match std::mem::replace(&mut self.tok, Tok::End) {
                        Tok::Int(d) => {
                            self.advance()?;
                            if d == BigInt::from(0) {
                                return err(dpos, "zero denominator");
                            }
                            let num = self.ring.constant(self.ring.field().from_bigint(&n));
                            let den = self.ring.field().from_bigint(&d);
                            let inv = match den.inv() {
                                Ok(i) => i,
                                Err(_) => return err(dpos, "denominator vanishes in the field"),
                            };
                            return Ok(num.scale(&inv));
                        }
                        other => {
                            self.tok = other;
                            return err(dpos, "expected an integer denominator after `/`");
                        }
                    }
                }
                Ok(self.ring.constant(self.ring.field().from_bigint(&n)))
            }
            Tok::Ident(name) => {
                self.advance()?;
                match self.ring.var_by_name(&name) {
                    Some(p) => Ok(p),
                    None => err(pos, format!("unknown variable `{name}`")),
                }
            }
            Tok::LParen => {
                self.advance()?;
                let inner = self.expr()?;
                if self.tok != Tok::RParen {
                    return err(self.tok_pos, "expected `)`");
                }
                self.advance()?;
                Ok(inner)
            }
            Tok::End => err(pos, "unexpected end of input"),
            other => {
                let msg = format!("unexpected token {other:?}");
                self.tok = other;
                err(pos, msg)
            }
        }
    }
}

pub(super) fn parse_polynomial(ring: &Ring, src: &str) -> Result<Polynomial, ParseError> {
    let mut p = Parser::new(ring, src)?;
    let poly = p.expr()?;
    if p.tok != Tok::End {
        return err(p.tok_pos, "trailing input");
    }
    Ok(poly)
}
