//! Restricted infix grammar for polynomials:
//! integers, rationals `p/q` as coefficients, variables `x,y,z,w` or `x1..xn`,
//! and the operators `+ - * ^` with parentheses.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Num(chars[start..i].iter().collect())));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*^()/".contains(c) || c == '\u{2212}' {
            out.push((i, Tok::Sym(if c == '\u{2212}' { '-' } else { c })));
            i += 1;
        } else {
            return Err(Error::Parse { position: i, message: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

/// Canonical variable order used when the caller does not supply one.
fn infer_vars(tokens: &[(usize, Tok)]) -> Result<Arc<[String]>> {
    const LETTERS: [&str; 4] = ["x", "y", "z", "w"];
    let mut max_letter = None;
    let mut max_index = 0usize;
    for (pos, t) in tokens {
        if let Tok::Ident(name) = t {
            if let Some(k) = LETTERS.iter().position(|l| l == name) {
                max_letter = Some(max_letter.map_or(k, |m: usize| m.max(k)));
            } else if let Some(idx) = name.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()).filter(|&d| d >= 1) {
                max_index = max_index.max(idx);
            } else {
                return Err(Error::Parse { position: *pos, message: format!("unknown variable {name:?}") });
            }
        }
    }
    match (max_letter, max_index) {
        (Some(_), i) if i > 0 => Err(Error::Parse { position: 0, message: "mixing x,y,z names with x1..xn names".into() }),
        (Some(k), _) => Ok(Poly::make_vars(&LETTERS[..=k])),
        (None, 0) => Ok(Poly::make_vars(&["x"])),
        (None, n) => Ok((1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>().into()),
    }
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    vars: Arc<[String]>,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { position: self.here(), message: msg.to_string() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = if self.eat('-') {
            -&self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if matches!(self.peek(), Some(Tok::Sym('('))) {
                // juxtaposition, as in 2(x+y) or (x+y)(x-y)
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.parse().map_err(|_| Error::Parse { position: self.here(), message: "exponent too large".into() })?;
                    Ok(base.pow(e))
                }
                _ => self.err("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut c: Rational = n.parse()?;
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if d.trim_start_matches('0') != "" => {
                            self.pos += 1;
                            c = c / d.parse::<Rational>()?;
                        }
                        _ => return self.err("expected a nonzero integer denominator"),
                    }
                }
                Ok(Poly::constant(self.vars.clone(), c))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(Poly::var(self.vars.clone(), i)),
                    None => {
                        self.pos -= 1;
                        self.err(&format!("unknown variable {name:?}"))
                    }
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some(Tok::Sym('-')) => {
                self.pos += 1;
                Ok(-&self.power()?)
            }
            _ => self.err("expected a number, variable or '('"),
        }
    }
}

pub(crate) fn parse_poly(src: &str, vars: Option<Arc<[String]>>) -> Result<Poly> {
    let toks = tokenize(src)?;
    let vars = match vars {
        Some(v) => v,
        None => infer_vars(&toks)?,
    };
    let mut p = Parser { toks: &toks, pos: 0, vars, end: src.len() };
    let out = p.expr()?;
    if p.pos != toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}
