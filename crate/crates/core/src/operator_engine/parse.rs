//! Text syntax for operators.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' int)?
//! atom   := int ('/' int)? | s1..s4 | d1..d4 | R1..R4 | mu1..mu4
//!         | inv(s_i) | com(expr, expr) | acom(expr, expr) | '(' expr ')'
//!         | name | name(args)        -- resolved by an AtomResolver
//! ```

use num_bigint::BigInt;

use super::expr::{anticommutator, commutator, d, inv_s, mu, refl, s, OperatorExpr};
use crate::exact_core::Rational;
use crate::{Error, Result};

/// Resolves named atoms such as factory calls (`D(134)`, `L(1,2)`, `H`).
pub trait AtomResolver {
    /// `None` if the name is unknown.
    fn resolve(&self, name: &str, args: &[String]) -> Option<Result<OperatorExpr>>;
}

/// Resolver that knows no names.
pub struct NoNames;

impl AtomResolver for NoNames {
    fn resolve(&self, _: &str, _: &[String]) -> Option<Result<OperatorExpr>> {
        None
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
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
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Int(text.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "()+-*/^,".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a, R> {
    toks: Vec<Tok>,
    pos: usize,
    names: &'a R,
}

impl<R: AtomResolver> Parser<'_, R> {
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

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::Parse(format!("expected {c:?} at token {}", self.pos)))
        }
    }

    fn expr(&mut self) -> Result<OperatorExpr> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<OperatorExpr> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<OperatorExpr> {
        if self.eat('-') {
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.eat('^') {
            let k = self.int()?;
            let k: u32 = k
                .try_into()
                .map_err(|_| Error::Parse("exponent out of range".into()))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(n)
            }
            other => Err(Error::Parse(format!("expected integer, found {other:?}"))),
        }
    }

    fn atom(&mut self) -> Result<OperatorExpr> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.eat('/') {
                    let den = self.int()?;
                    if den == BigInt::from(0) {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    return Ok(super::scalar(Rational::new(n, den)));
                }
                Ok(super::scalar(Rational::from_integer(n)))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.named(&name)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }

    fn named(&mut self, name: &str) -> Result<OperatorExpr> {
        if let Some(op) = builtin(name) {
            return Ok(op);
        }
        match name {
            "inv" => {
                self.expect('(')?;
                let inner = match self.peek().cloned() {
                    Some(Tok::Ident(v)) => v,
                    other => return Err(Error::Parse(format!("inv expects s_i, found {other:?}"))),
                };
                self.pos += 1;
                self.expect(')')?;
                let i = axis_suffix(&inner, "s")
                    .ok_or_else(|| Error::Parse(format!("inv expects s1..s4, found {inner}")))?;
                Ok(inv_s(i))
            }
            "com" | "acom" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(if name == "com" { commutator(&a, &b) } else { anticommutator(&a, &b) })
            }
            _ => {
                let mut args = Vec::new();
                if self.eat('(') {
                    loop {
                        let n = self.int()?;
                        args.push(n.to_string());
                        if self.eat(')') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                self.names
                    .resolve(name, &args)
                    .unwrap_or_else(|| Err(Error::Parse(format!("unknown name {name:?}"))))
            }
        }
    }
}

fn axis_suffix(name: &str, prefix: &str) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    match rest {
        "1" | "2" | "3" | "4" => rest.parse().ok(),
        _ => None,
    }
}

fn builtin(name: &str) -> Option<OperatorExpr> {
    if let Some(i) = axis_suffix(name, "mu") {
        return Some(mu(i));
    }
    if let Some(i) = axis_suffix(name, "s") {
        return Some(s(i));
    }
    if let Some(i) = axis_suffix(name, "d") {
        return Some(d(i));
    }
    axis_suffix(name, "R").map(refl)
}

pub fn parse_operator<R: AtomResolver>(src: &str, names: &R) -> Result<OperatorExpr> {
    let mut p = Parser { toks: lex(src)?, pos: 0, names };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}
