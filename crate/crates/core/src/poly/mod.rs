//! Exact sparse multivariate polynomials.
//!
//! A [`SparsePoly`] is a map from [`Monomial`] to a nonzero coefficient. Every
//! polynomial carries the [`SymbolTable`] it was built over; arithmetic
//! between polynomials over different tables is rejected. Each symbol has a
//! declared degree (Chern classes `c_i` have degree `i`, hyperplane classes and
//! Chern roots degree 1), and monomials are ordered graded-lexicographically
//! by weighted degree first, then by exponents in declaration order.
//!
//! The coefficient type is generic; the rest of the crate works with
//! [`crate::Poly`], the instantiation over arbitrary-precision rationals.

mod display;
mod json;
mod parse;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::Num;
use smallvec::SmallVec;

use crate::error::{usage, Error, Result};

pub(crate) use json::rational_to_string;
pub use json::{PolyJson, TermJson};

/// Coefficient ring for [`SparsePoly`].
pub trait Coeff:
    Clone + PartialEq + fmt::Debug + fmt::Display + Num + Neg<Output = Self> + Send + Sync + 'static
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + fmt::Debug + fmt::Display + Num + Neg<Output = T> + Send + Sync + 'static
{
}

/// Ordered list of symbol names with their degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolTable {
    names: Vec<String>,
    degrees: Vec<u32>,
}

pub type Symbols = Arc<SymbolTable>;

impl SymbolTable {
    pub fn new<S: AsRef<str>>(decl: &[(S, u32)]) -> Result<Symbols> {
        let mut names = Vec::with_capacity(decl.len());
        let mut degrees = Vec::with_capacity(decl.len());
        for (name, deg) in decl {
            let name = name.as_ref();
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return usage(format!("invalid symbol name `{name}`"));
            }
            if name.starts_with(|c: char| c.is_ascii_digit()) {
                return usage(format!("symbol name `{name}` starts with a digit"));
            }
            if *deg == 0 {
                return usage(format!("symbol `{name}` declared with degree 0"));
            }
            if names.iter().any(|n| n == name) {
                return usage(format!("symbol `{name}` declared twice"));
            }
            names.push(name.to_string());
            degrees.push(*deg);
        }
        Ok(Arc::new(SymbolTable { names, degrees }))
    }

    /// Table where `c<i>` gets degree `i` and every other symbol degree 1.
    pub fn with_default_degrees<S: AsRef<str>>(names: &[S]) -> Result<Symbols> {
        let decl: Vec<(&str, u32)> = names
            .iter()
            .map(|n| {
                let n = n.as_ref();
                (n, default_degree(n))
            })
            .collect();
        SymbolTable::new(&decl)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degree(&self, idx: usize) -> u32 {
        self.degrees[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }
}

fn default_degree(name: &str) -> u32 {
    name.strip_prefix('c')
        .and_then(|rest| rest.parse::<u32>().ok())
        .filter(|&d| d > 0)
        .unwrap_or(1)
}

pub(crate) fn same_table(a: &Symbols, b: &Symbols) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Exponent vector together with its weighted degree.
///
/// The derived ordering compares the weighted degree first and then the
/// exponents lexicographically, which is graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: SmallVec<[u16; 8]>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial {
            degree: 0,
            exps: SmallVec::from_elem(0, n),
        }
    }

    pub fn from_exponents(table: &SymbolTable, exps: &[u16]) -> Result<Self> {
        if exps.len() != table.len() {
            return usage(format!(
                "exponent vector of length {} over a table of {} symbols",
                exps.len(),
                table.len()
            ));
        }
        let degree = exps.iter().enumerate().map(|(i, &e)| e as u32 * table.degree(i)).sum();
        Ok(Monomial {
            degree,
            exps: exps.iter().copied().collect(),
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, idx: usize) -> u16 {
        self.exps[idx]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow in monomial product"))
            .collect();
        Monomial {
            degree: self.degree + other.degree,
            exps,
        }
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    fn quotient(&self, divisor: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree - divisor.degree,
            exps: self.exps.iter().zip(divisor.exps.iter()).map(|(a, b)| a - b).collect(),
        }
    }

    fn with_exponent(&self, table: &SymbolTable, idx: usize, e: u16) -> Monomial {
        let old = self.exps[idx];
        let mut exps = self.exps.clone();
        exps[idx] = e;
        let degree = self.degree - old as u32 * table.degree(idx) + e as u32 * table.degree(idx);
        Monomial { degree, exps }
    }
}

/// Exact sparse polynomial over a declared symbol table.
#[derive(Clone)]
pub struct SparsePoly<C> {
    symbols: Symbols,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> PartialEq for SparsePoly<C> {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.symbols, &other.symbols) && self.terms == other.terms
    }
}

impl<C: Coeff> fmt::Debug for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly({self})")
    }
}

impl<C: Coeff> SparsePoly<C> {
    pub fn zero(symbols: &Symbols) -> Self {
        SparsePoly {
            symbols: symbols.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(symbols: &Symbols) -> Self {
        Self::constant(symbols, C::one())
    }

    pub fn constant(symbols: &Symbols, c: C) -> Self {
        let mut p = Self::zero(symbols);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(symbols.len()), c);
        }
        p
    }

    pub fn from_int(symbols: &Symbols, n: i64) -> Self {
        Self::constant(symbols, coeff_from_i64(n))
    }

    pub fn var(symbols: &Symbols, name: &str) -> Result<Self> {
        let idx = symbols.require(name)?;
        Ok(Self::var_at(symbols, idx))
    }

    pub(crate) fn var_at(symbols: &Symbols, idx: usize) -> Self {
        let mut exps = vec![0u16; symbols.len()];
        exps[idx] = 1;
        let m = Monomial::from_exponents(symbols, &exps).expect("length matches");
        let mut p = Self::zero(symbols);
        p.terms.insert(m, C::one());
        p
    }

    pub fn monomial(symbols: &Symbols, exps: &[u16], c: C) -> Result<Self> {
        let m = Monomial::from_exponents(symbols, exps)?;
        let mut p = Self::zero(symbols);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        Ok(p)
    }

    pub fn from_terms<I>(symbols: &Symbols, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u16>, C)>,
    {
        let mut p = Self::zero(symbols);
        for (exps, c) in terms {
            let m = Monomial::from_exponents(symbols, &exps)?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn symbols(&self) -> &Symbols {
        &self.symbols
    }

    /// Number of terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn constant_term(&self) -> C {
        self.terms
            .get(&Monomial::one(self.symbols.len()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Largest weighted degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Weighted degree if every term has the same one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn degree_in(&self, name: &str) -> Result<u16> {
        let idx = self.symbols.require(name)?;
        Ok(self.degree_in_index(idx))
    }

    pub(crate) fn degree_in_index(&self, idx: usize) -> u16 {
        self.terms.keys().map(|m| m.exps[idx]).max().unwrap_or(0)
    }

    /// Sum of the terms of weighted degree exactly `k`.
    pub fn graded_piece(&self, k: u32) -> Self {
        SparsePoly {
            symbols: self.symbols.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every term of weighted degree above `k`.
    pub fn truncate(&self, k: u32) -> Self {
        SparsePoly {
            symbols: self.symbols.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree <= k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_table(&self, other: &Self) -> Result<()> {
        if same_table(&self.symbols, &other.symbols) {
            Ok(())
        } else {
            Err(Error::SymbolMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.symbols));
        }
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.clone() * cb.clone();
                match acc.get_mut(&m) {
                    Some(v) => *v = v.clone() + c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(SparsePoly {
            symbols: self.symbols.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.symbols);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.symbols);
        }
        SparsePoly {
            symbols: self.symbols.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    /// Multiplies by a single monomial (given as an exponent vector).
    pub(crate) fn shift(&self, m: &Monomial) -> Self {
        SparsePoly {
            symbols: self.symbols.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SparsePoly<D> {
        SparsePoly {
            symbols: self.symbols.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Coefficient of `name^power`, as a polynomial in the remaining symbols
    /// (over the same table, with `name` absent).
    pub fn coefficient(&self, name: &str, power: u16) -> Result<Self> {
        let idx = self.symbols.require(name)?;
        Ok(self.coefficient_at(idx, power))
    }

    pub(crate) fn coefficient_at(&self, idx: usize, power: u16) -> Self {
        let mut out = Self::zero(&self.symbols);
        for (m, c) in &self.terms {
            if m.exps[idx] == power {
                out.terms.insert(m.with_exponent(&self.symbols, idx, 0), c.clone());
            }
        }
        out
    }

    /// Splits into `(e, coefficient of name^e)` pairs, lowest `e` first.
    pub(crate) fn split_by(&self, idx: usize) -> BTreeMap<u16, Self> {
        let mut out: BTreeMap<u16, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exps[idx];
            out.entry(e)
                .or_insert_with(|| Self::zero(&self.symbols))
                .terms
                .insert(m.with_exponent(&self.symbols, idx, 0), c.clone());
        }
        out
    }

    /// Simultaneous substitution of symbols by polynomials over the same
    /// table. Unbound symbols pass through unchanged.
    pub fn substitute(&self, bindings: &[(&str, Self)]) -> Result<Self> {
        self.substitute_into(&self.symbols.clone(), bindings)
    }

    /// Simultaneous substitution into polynomials over `target`.
    ///
    /// Every binding must name a symbol of this polynomial's table and hold a
    /// polynomial over `target`. A symbol without a binding is sent to the
    /// symbol of the same name in `target`, which must exist if the symbol
    /// actually occurs.
    pub fn substitute_into(&self, target: &Symbols, bindings: &[(&str, Self)]) -> Result<Self> {
        let n = self.symbols.len();
        let mut images: Vec<Option<Self>> = vec![None; n];
        for (name, value) in bindings {
            let idx = self.symbols.require(name)?;
            if !same_table(&value.symbols, target) {
                return Err(Error::SymbolMismatch);
            }
            images[idx] = Some(value.clone());
        }
        let used: Vec<u16> = (0..n).map(|i| self.degree_in_index(i)).collect();
        for i in 0..n {
            if images[i].is_none() && used[i] > 0 {
                let name = &self.symbols.names[i];
                let t = target
                    .index_of(name)
                    .ok_or_else(|| Error::UnknownSymbol(name.clone()))?;
                images[i] = Some(Self::var_at(target, t));
            }
        }
        // powers[i][e] = images[i]^e, built lazily up to the largest exponent used
        let mut powers: Vec<Vec<Self>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut pw = vec![Self::one(target)];
            if let Some(img) = &images[i] {
                for e in 1..=used[i] as usize {
                    let next = &pw[e - 1] * img;
                    pw.push(next);
                }
            }
            powers.push(pw);
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[i][e as usize];
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Re-expresses the polynomial over a larger table containing all of its
    /// symbols by name.
    pub fn embed(&self, target: &Symbols) -> Result<Self> {
        if same_table(&self.symbols, target) {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> = self.symbols.names.iter().map(|n| target.index_of(n)).collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; target.len()];
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    let t = map[i].ok_or_else(|| Error::UnknownSymbol(self.symbols.names[i].clone()))?;
                    exps[t] = e;
                }
            }
            out.add_term(Monomial::from_exponents(target, &exps)?, c.clone());
        }
        Ok(out)
    }

    /// Exact evaluation at a point. Every symbol that occurs must be bound.
    pub fn eval(&self, point: &HashMap<String, C>) -> Result<C> {
        let n = self.symbols.len();
        let mut vals: Vec<Option<C>> = vec![None; n];
        for (i, name) in self.symbols.names.iter().enumerate() {
            vals[i] = point.get(name).cloned();
        }
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = vals[i]
                    .as_ref()
                    .ok_or_else(|| Error::UnboundSymbol(self.symbols.names[i].clone()))?;
                for _ in 0..e {
                    t = t * v.clone();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Exact quotient by `divisor`; fails if the division leaves a remainder.
    ///
    /// With a single divisor, multivariate division by leading terms has zero
    /// remainder exactly when the divisor divides the dividend.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.check_table(divisor)?;
        let (lm, lc) = match divisor.leading() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return usage("division by the zero polynomial"),
        };
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.symbols);
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return Err(Error::Consistency(format!("{} is not divisible by {}", self, divisor)));
            }
            let qm = m.quotient(&lm);
            let qc = c.clone() / lc.clone();
            let step = divisor.shift(&qm).scale(&qc);
            rem = rem.checked_sub(&step)?;
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }
}

pub(crate) fn coeff_from_i64<C: Coeff>(n: i64) -> C {
    // Num gives no From<i64>; build from one by doubling to stay generic.
    let mut acc = C::zero();
    let mut base = C::one();
    let mut k = n.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc = acc + base.clone();
        }
        base = base.clone() + base;
        k >>= 1;
    }
    if n < 0 {
        -acc
    } else {
        acc
    }
}

impl<C: Coeff> Add for &SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn add(self, rhs: Self) -> SparsePoly<C> {
        self.checked_add(rhs).expect("symbol table mismatch in `+`")
    }
}

impl<C: Coeff> Sub for &SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn sub(self, rhs: Self) -> SparsePoly<C> {
        self.checked_sub(rhs).expect("symbol table mismatch in `-`")
    }
}

impl<C: Coeff> Mul for &SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn mul(self, rhs: Self) -> SparsePoly<C> {
        self.checked_mul(rhs).expect("symbol table mismatch in `*`")
    }
}

impl<C: Coeff> Add for SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn add(self, rhs: Self) -> SparsePoly<C> {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn sub(self, rhs: Self) -> SparsePoly<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn mul(self, rhs: Self) -> SparsePoly<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for &SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn neg(self) -> SparsePoly<C> {
        SparsePoly {
            symbols: self.symbols.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Neg for SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn neg(self) -> SparsePoly<C> {
        -&self
    }
}
