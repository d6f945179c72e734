//! Recursive-descent parser for rational expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' exponent)?
//! exponent := ('+' | '-')? integer | '(' ('+' | '-')? integer ')'
//! atom   := integer | identifier | '(' expr ')'
//! ```

use num_bigint::BigInt;

use crate::algebra::{RationalFunction, Scalar};
use crate::error::{AlgebraError, Error, Result};

/// A syntax or name error at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek().filter(|(_, d)| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
            }
            out.push((pos, Token::Int(s.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&(_, d)) = chars
                .peek()
                .filter(|(_, d)| d.is_alphanumeric() || *d == '_')
            {
                s.push(d);
                chars.next();
            }
            out.push((pos, Token::Ident(s)));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Token::Sym(c)));
            chars.next();
        } else {
            return Err(ParseError {
                position: pos,
                message: format!("unexpected character {c:?}"),
            });
        }
    }
    out.push((text.len(), Token::End));
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    at: usize,
    variables: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.at].1
    }

    fn pos(&self) -> usize {
        self.tokens[self.at].0
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(ParseError {
            position: self.pos(),
            message: message.into(),
        }
        .into())
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Token::Sym(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected '{c}'"))
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?)?;
            } else if *self.peek() == Token::Sym('/') {
                let pos = self.pos();
                self.at += 1;
                let d = self.unary()?;
                if d.is_zero() {
                    return Err(ParseError {
                        position: pos,
                        message: "division by zero".into(),
                    }
                    .into());
                }
                acc = acc.div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if self.eat('-') {
            Ok(self.unary()?.neg())
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if *self.peek() != Token::Sym('^') {
            return Ok(base);
        }
        let pos = self.pos();
        self.at += 1;
        let paren = self.eat('(');
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let Token::Int(k) = self.peek().clone() else {
            return self.error("expected an integer exponent");
        };
        self.at += 1;
        if paren {
            self.expect(')')?;
        }
        let k = if negative { -k } else { k };
        let k = i32::try_from(k).map_err(|_| Error::from(AlgebraError::ExponentOverflow))?;
        if k < 0 && base.is_zero() {
            return Err(ParseError {
                position: pos,
                message: "division by zero".into(),
            }
            .into());
        }
        Ok(base.pow(k)?)
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        let n = self.variables.len();
        match self.peek().clone() {
            Token::Int(v) => {
                self.at += 1;
                Ok(RationalFunction::constant(n, Scalar::from_integer(v)))
            }
            Token::Ident(name) => match self.variables.iter().position(|v| *v == name) {
                Some(k) => {
                    self.at += 1;
                    Ok(RationalFunction::variable(n, k))
                }
                None => self.error(format!("unknown identifier {name:?}")),
            },
            Token::Sym('(') => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Token::Sym(c) => self.error(format!("unexpected '{c}'")),
            Token::End => self.error("unexpected end of input"),
        }
    }
}

/// Parses `text` as a rational function of `variables`.
pub fn parse_expr(text: &str, variables: &[String]) -> Result<RationalFunction> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        at: 0,
        variables,
    };
    let e = p.expr()?;
    if *p.peek() != Token::End {
        return p.error("unexpected trailing input");
    }
    Ok(e)
}
