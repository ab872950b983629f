//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (['*'|'/'] power | power)*     juxtaposition multiplies
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')' | '-' power
//! ```
//!
//! An identifier that is not itself a declared symbol is split into a run of
//! declared symbols when possible, so `c1c2` reads as `c1*c2` and `c1c2^3`
//! as `c1*c2^3`. Division is
//! only allowed by nonzero constants.

use super::{coeff_from_i64, Coeff, SparsePoly, SymbolTable, Symbols};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
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
            out.push(Tok::Num(chars[start..i].iter().collect()));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

/// Splits `word` into declared symbol names, preferring longer names first.
fn split_identifier(word: &str, table: &SymbolTable) -> Option<Vec<usize>> {
    if word.is_empty() {
        return Some(Vec::new());
    }
    let mut candidates: Vec<(usize, &String)> = table
        .names()
        .iter()
        .enumerate()
        .filter(|(_, n)| word.starts_with(n.as_str()))
        .collect();
    candidates.sort_by_key(|(_, n)| std::cmp::Reverse(n.len()));
    for (idx, name) in candidates {
        if let Some(mut rest) = split_identifier(&word[name.len()..], table) {
            rest.insert(0, idx);
            return Some(rest);
        }
    }
    None
}

struct Parser<'a, C> {
    toks: Vec<Tok>,
    pos: usize,
    table: &'a Symbols,
    _c: std::marker::PhantomData<C>,
}

impl<'a, C: Coeff> Parser<'a, C> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<SparsePoly<C>> {
        let mut acc = if self.eat('-') {
            -self.term()?
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

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('('))
        )
    }

    fn term(&mut self) -> Result<SparsePoly<C>> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.eat('/') {
                let d = self.power()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(Error::Parse(format!("division only by nonzero constants, got `{d}`")));
                }
                acc = acc.scale(&(C::one() / d.constant_term()));
            } else if self.starts_atom() {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<SparsePoly<C>> {
        // in a split identifier the exponent binds to the last symbol only
        let (prefix, base) = self.atom()?;
        if self.eat('^') {
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .parse()
                        .map_err(|_| Error::Parse(format!("exponent `{n}` out of range")))?;
                    Ok(&prefix * &base.pow(e))
                }
                other => Err(Error::Parse(format!(
                    "expected a non-negative integer exponent, got {other:?}"
                ))),
            }
        } else {
            Ok(&prefix * &base)
        }
    }

    fn atom(&mut self) -> Result<(SparsePoly<C>, SparsePoly<C>)> {
        let one = SparsePoly::one(self.table);
        match self.next() {
            Some(Tok::Num(n)) => Ok((one, SparsePoly::constant(self.table, decimal(&n)))),
            Some(Tok::Ident(w)) => {
                if let Some(idx) = self.table.index_of(&w) {
                    return Ok((one, SparsePoly::var_at(self.table, idx)));
                }
                let mut parts = split_identifier(&w, self.table).ok_or_else(|| Error::UnknownSymbol(w.clone()))?;
                let last = parts.pop().expect("split is nonempty");
                let mut acc = one;
                for idx in parts {
                    acc = &acc * &SparsePoly::var_at(self.table, idx);
                }
                Ok((acc, SparsePoly::var_at(self.table, last)))
            }
            Some(Tok::Op('(')) => {
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                Ok((one, inner))
            }
            Some(Tok::Op('-')) => Ok((one, -self.power()?)),
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

/// Digit string to coefficient, by Horner's rule so that any `Num` works.
fn decimal<C: Coeff>(digits: &str) -> C {
    let ten: C = coeff_from_i64(10);
    digits.bytes().fold(C::zero(), |acc, b| {
        acc * ten.clone() + coeff_from_i64((b - b'0') as i64)
    })
}

impl<C: Coeff> SparsePoly<C> {
    /// Parses an expression such as `336(9c1^3+12c1c2-11c3)` over `table`.
    pub fn parse(s: &str, table: &Symbols) -> Result<Self> {
        let toks = tokenize(s)?;
        if toks.is_empty() {
            return Err(Error::Parse("empty expression".into()));
        }
        let mut p = Parser {
            toks,
            pos: 0,
            table,
            _c: std::marker::PhantomData,
        };
        let out = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!("trailing input starting at {:?}", p.toks[p.pos])));
        }
        Ok(out)
    }
}
