//! Tiny expression language for the ring calculator:
//! integers, `p`, `l<k>`, `+ - * ^` and parentheses.

use thiserror::Error;

use crate::arith::PPoly;
use crate::tautring::{RingError, RingMode, TautClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(i64),
    P,
    Lambda(usize),
    Op(char),
}

fn err(pos: usize, msg: impl Into<String>) -> ExprError {
    ExprError::Parse {
        pos,
        msg: msg.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |start: usize| {
        let mut j = start;
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        (j, chars[start..j].iter().collect::<String>())
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '0'..='9' => {
                let (j, s) = digits(i);
                let v = s.parse().map_err(|_| err(i, "integer too large"))?;
                out.push((i, Tok::Int(v)));
                i = j;
            }
            'p' => {
                out.push((i, Tok::P));
                i += 1;
            }
            'l' => {
                let (j, s) = digits(i + 1);
                if s.is_empty() {
                    return Err(err(i, "expected an index after 'l'"));
                }
                let k = s.parse().map_err(|_| err(i, "index too large"))?;
                out.push((i, Tok::Lambda(k)));
                i = j;
            }
            '+' | '-' | '*' | '^' | '(' | ')' => {
                out.push((i, Tok::Op(c)));
                i += 1;
            }
            _ => return Err(err(i, format!("unexpected character '{c}'"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    at: usize,
    end: usize,
    g: usize,
    mode: RingMode,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<TautClass, ExprError> {
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

    fn term(&mut self) -> Result<TautClass, ExprError> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = acc.mul(&self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<TautClass, ExprError> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<TautClass, ExprError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Int(n)) if *n >= 0 && *n <= u32::MAX as i64 => {
                let n = *n as u32;
                self.at += 1;
                Ok(base.pow(n)?)
            }
            _ => Err(err(pos, "expected a non-negative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<TautClass, ExprError> {
        let pos = self.pos();
        let Some(tok) = self.peek().cloned() else {
            return Err(err(pos, "unexpected end of input"));
        };
        self.at += 1;
        match tok {
            Tok::Int(v) => Ok(TautClass::scalar(self.g, self.mode, PPoly::from_int(v))),
            Tok::P => Ok(TautClass::scalar(self.g, self.mode, PPoly::p())),
            Tok::Lambda(k) => Ok(TautClass::lambda(self.g, self.mode, k)?),
            Tok::Op('(') => {
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(err(self.pos(), "expected ')'"));
                }
                Ok(inner)
            }
            Tok::Op(c) => Err(err(pos, format!("unexpected '{c}'"))),
        }
    }
}

/// Parses and evaluates `src` in the ring of genus `g`.
pub fn evaluate(src: &str, g: usize, mode: RingMode) -> Result<TautClass, ExprError> {
    let toks = lex(src)?;
    let mut parser = Parser {
        toks: &toks,
        at: 0,
        end: src.chars().count(),
        g,
        mode,
    };
    let value = parser.expr()?;
    if parser.at != toks.len() {
        return Err(err(parser.pos(), "unexpected trailing input"));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(src: &str, g: usize) -> String {
        evaluate(src, g, RingMode::Compact).unwrap().to_string()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(eval("l1*l1", 2), "2*l2");
        assert_eq!(eval("l1^3", 2), "2*l1*l2");
        assert_eq!(eval("(p-1)*l1", 1), "(p-1)*l1");
        assert_eq!(eval("-l1 + 2*l1 - 1", 2), "-1 + l1");
        assert_eq!(eval("p^2 * 3", 1), "3*p^2");
        assert_eq!(evaluate("l3", 3, RingMode::Open).unwrap().to_string(), "0");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            evaluate("l1 + * l2", 2, RingMode::Compact),
            Err(err(5, "unexpected '*'"))
        );
        assert!(matches!(
            evaluate("l1 $", 2, RingMode::Compact),
            Err(ExprError::Parse { pos: 3, .. })
        ));
        assert!(matches!(
            evaluate("(l1", 2, RingMode::Compact),
            Err(ExprError::Parse { pos: 3, .. })
        ));
        assert!(matches!(
            evaluate("l", 2, RingMode::Compact),
            Err(ExprError::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            evaluate("l3", 2, RingMode::Compact),
            Err(ExprError::Ring(RingError::IndexOutOfRange {
                index: 3,
                g: 2
            }))
        ));
    }
}
