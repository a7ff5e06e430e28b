//! Text parser for polynomials such as `2*x1^2*x2 - 3`.
//!
//! Accepted grammar (whitespace anywhere):
//! `expr = term (("+"|"-") term)*`, `term = unary ("*" unary)*`,
//! `unary = "-" unary | atom ("^" int)?`, `atom = int | name | "(" expr ")"`.

use num_bigint::BigInt;

use super::monomial::TermOrder;
use super::poly::Polynomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let txt: String = cs[st..i].iter().collect();
            out.push(Tok::Int(txt.parse().map_err(|_| Error::Parse(txt.clone()))?));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Name(cs[st..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    nvars: usize,
    order: TermOrder,
    names: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn var_index(&self, name: &str) -> Result<usize> {
        if let Some(i) = self.names.iter().position(|n| n == name) {
            return Ok(i);
        }
        if let Some(rest) = name.strip_prefix('x') {
            if let Ok(i) = rest.parse::<usize>() {
                if (1..=self.nvars).contains(&i) {
                    return Ok(i - 1);
                }
            }
        }
        Err(Error::Parse(format!("unknown variable '{name}'")))
    }

    fn expr(&mut self) -> Result<Polynomial> {
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

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = acc.mul(&self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Int(e)) => {
                    self.pos += 1;
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::Parse("expected exponent after '^'".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.nvars, self.order, v))
            }
            Some(Tok::Name(n)) => {
                self.pos += 1;
                let i = self.var_index(&n)?;
                Ok(Polynomial::var(self.nvars, self.order, i))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

/// Parses `src` as a polynomial in `nvars` variables. Variables may be written
/// `x1..xk` or by the optional custom `names`.
pub fn parse_polynomial(src: &str, nvars: usize, order: TermOrder, names: &[String]) -> Result<Polynomial> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser { toks, pos: 0, nvars, order, names };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<Polynomial> {
        parse_polynomial(s, 2, TermOrder::GrevLex, &[])
    }

    #[test]
    fn parses_canonical_and_relaxed_forms() {
        let p = parse("2*x1^2*x2 - 3").unwrap();
        assert_eq!(p.to_string(), "2*x1^2*x2 - 3");
        assert_eq!(parse(" 2 * x1^2 * x2^1 -3*1 ").unwrap(), p);
        assert_eq!(parse("(x1+1)*(x1-1)").unwrap().to_string(), "x1^2 - 1");
        assert_eq!(parse("-x2 + x1").unwrap().to_string(), "x1 - x2");
    }

    #[test]
    fn custom_names() {
        let names = vec!["x".to_string(), "y".to_string()];
        let p = parse_polynomial("x*y + 4*x", 2, TermOrder::GrevLex, &names).unwrap();
        assert_eq!(p.display_with(&names).to_string(), "x*y + 4*x");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse("x3").is_err());
        assert!(parse("2 +").is_err());
        assert!(parse("x1 $ 2").is_err());
        assert!(parse("").is_err());
        assert!(parse("x1^").is_err());
    }
}
