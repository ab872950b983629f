//! Canonical JSON form of a rational polynomial:
//! `{"symbols":[...], "terms":[{"coeff":"num/den","exps":[...]}]}`, terms in
//! descending graded-lex order.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{Monomial, SymbolTable, Symbols};
use crate::error::{Error, Result};
use crate::{Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Vec<u16>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub symbols: Vec<String>,
    pub terms: Vec<TermJson>,
}

pub(crate) fn rational_to_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub(crate) fn rational_from_str(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    let (n, d) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

impl Poly {
    pub fn to_json_value(&self) -> PolyJson {
        PolyJson {
            symbols: self.symbols.names().to_vec(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermJson {
                    coeff: rational_to_string(c),
                    exps: m.exponents().to_vec(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("plain data serializes")
    }

    /// Reads the canonical form over `table`, whose names must match the
    /// listed symbols exactly.
    pub fn from_json_value_in(value: &PolyJson, table: &Symbols) -> Result<Poly> {
        if value.symbols.as_slice() != table.names() {
            return Err(Error::SymbolMismatch);
        }
        let mut p = Poly::zero(table);
        for t in &value.terms {
            let c = rational_from_str(&t.coeff)?;
            let m = Monomial::from_exponents(table, &t.exps)?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Reads the canonical form, declaring `c<i>` with degree `i` and every
    /// other symbol with degree 1.
    pub fn from_json(s: &str) -> Result<Poly> {
        let value: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let table = SymbolTable::with_default_degrees(&value.symbols)?;
        Poly::from_json_value_in(&value, &table)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }
}
