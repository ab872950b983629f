//! Chow rings of towers of projective bundles.
//!
//! Each level projectivizes (lines in) a bundle `E` of rank `r` over the ring
//! below and adjoins a hyperplane class `H` subject to
//! `H^r + c1(E) H^(r-1) + ... + cr(E) = 0`. Elements are reduced to a normal
//! form in which every hyperplane class appears with exponent below its
//! level's rank; pushing forward one level is then the coefficient of
//! `H^(r-1)`.

use std::collections::BTreeMap;
use std::sync::Mutex;

use serde::Serialize;

use crate::chern::BundleClass;
use crate::error::{usage, Result};
use crate::poly::{PolyJson, SymbolTable, Symbols};
use crate::Poly;

struct TowerLevel {
    symbol: String,
    idx: usize,
    bundle: BundleClass,
    /// `-(c1 H^(r-1) + ... + cr)`, the rewrite target of `H^r`.
    tail: Poly,
    /// Normal forms of `H^e`, filled on demand.
    powers: Mutex<Vec<Poly>>,
}

impl TowerLevel {
    fn new(symbols: &Symbols, symbol: &str, bundle: BundleClass) -> Result<Self> {
        let idx = symbols.require(symbol)?;
        let h = Poly::var_at(symbols, idx);
        let r = bundle.rank();
        let mut tail = Poly::zero(symbols);
        for i in 1..=r {
            tail = &tail - &(&bundle.chern(i) * &h.pow((r - i) as u32));
        }
        let powers = (0..r).map(|e| h.pow(e as u32)).collect();
        Ok(TowerLevel {
            symbol: symbol.to_string(),
            idx,
            bundle,
            tail,
            powers: Mutex::new(powers),
        })
    }

    fn rank(&self) -> usize {
        self.bundle.rank()
    }

    fn relation(&self) -> Poly {
        let h = Poly::var_at(self.tail.symbols(), self.idx);
        &h.pow(self.rank() as u32) - &self.tail
    }
}

/// Ordered stack of projective-bundle levels over a base ring.
pub struct RingTower {
    symbols: Symbols,
    levels: Vec<TowerLevel>,
}

impl Clone for RingTower {
    fn clone(&self) -> Self {
        RingTower {
            symbols: self.symbols.clone(),
            levels: self
                .levels
                .iter()
                .map(|l| TowerLevel {
                    symbol: l.symbol.clone(),
                    idx: l.idx,
                    bundle: l.bundle.clone(),
                    tail: l.tail.clone(),
                    powers: Mutex::new(l.powers.lock().unwrap().clone()),
                })
                .collect(),
        }
    }
}

impl std::fmt::Debug for RingTower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let levels: Vec<_> = self.levels.iter().map(|l| (l.symbol.as_str(), l.rank())).collect();
        f.debug_struct("RingTower")
            .field("symbols", &self.symbols.names())
            .field("levels", &levels)
            .finish()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelDescription {
    pub symbol: String,
    pub rank: usize,
    pub relation: PolyJson,
    pub relation_text: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TowerDescription {
    pub symbols: Vec<String>,
    pub base: Vec<String>,
    pub levels: Vec<LevelDescription>,
}

impl RingTower {
    /// Tower with no levels over the given symbols. Symbols meant to become
    /// hyperplane classes later may already be declared here.
    pub fn new(symbols: &Symbols) -> Self {
        RingTower {
            symbols: symbols.clone(),
            levels: Vec::new(),
        }
    }

    pub fn symbols(&self) -> &Symbols {
        &self.symbols
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Total relative dimension.
    pub fn fiber_dimension(&self) -> usize {
        self.levels.iter().map(|l| l.rank() - 1).sum()
    }

    pub fn hyperplane(&self, level: usize) -> Poly {
        Poly::var_at(&self.symbols, self.levels[level].idx)
    }

    pub fn bundle(&self, level: usize) -> &BundleClass {
        &self.levels[level].bundle
    }

    pub fn relation(&self, level: usize) -> Poly {
        self.levels[level].relation()
    }

    /// Appends the projectivization of `bundle` with hyperplane class `name`.
    ///
    /// If `name` is not yet a symbol it is appended to the table (degree 1)
    /// and every existing level is carried over. The bundle's Chern classes
    /// must already be in normal form.
    pub fn extend(&self, bundle: &BundleClass, name: &str) -> Result<RingTower> {
        if bundle.rank() == 0 {
            return usage("cannot projectivize a rank 0 bundle");
        }
        if self.levels.iter().any(|l| l.symbol == name) {
            return usage(format!("`{name}` is already a hyperplane class of this tower"));
        }
        let symbols = match self.symbols.index_of(name) {
            Some(i) => {
                if self.symbols.degree(i) != 1 {
                    return usage(format!("hyperplane symbol `{name}` must have degree 1"));
                }
                self.symbols.clone()
            }
            None => {
                let mut decl: Vec<(String, u32)> = (0..self.symbols.len())
                    .map(|i| (self.symbols.names()[i].clone(), self.symbols.degree(i)))
                    .collect();
                decl.push((name.to_string(), 1));
                SymbolTable::new(&decl)?
            }
        };
        let bundle = bundle.map(|p| p.embed(&symbols))?;
        let mut levels = Vec::with_capacity(self.levels.len() + 1);
        for l in &self.levels {
            let b = l.bundle.map(|p| p.embed(&symbols))?;
            levels.push(TowerLevel::new(&symbols, &l.symbol, b)?);
        }
        let grown = RingTower {
            symbols: symbols.clone(),
            levels,
        };
        let total = bundle.total();
        if &grown.normal_form(total)? != total {
            return usage(format!(
                "Chern classes `{total}` of the new level are not in normal form"
            ));
        }
        if total.degree_in(name)? > 0 {
            return usage(format!("bundle for level `{name}` mentions `{name}`"));
        }
        let mut levels = grown.levels;
        levels.push(TowerLevel::new(&symbols, name, bundle)?);
        Ok(RingTower { symbols, levels })
    }

    /// Normal form of `H_level^e`.
    fn power(&self, level: usize, e: usize) -> Result<Poly> {
        let l = &self.levels[level];
        {
            let memo = l.powers.lock().unwrap();
            if e < memo.len() {
                return Ok(memo[e].clone());
            }
        }
        // Extend outside the lock's critical section per step, so that the
        // lower-level reductions never need this level's lock.
        loop {
            let (have, last) = {
                let memo = l.powers.lock().unwrap();
                (memo.len(), memo.last().cloned().expect("rank >= 1"))
            };
            if have > e {
                return Ok(l.powers.lock().unwrap()[e].clone());
            }
            let h = Poly::var_at(&self.symbols, l.idx);
            let raised = &last * &h;
            let r = l.rank() as u16;
            let top = raised.coefficient_at(l.idx, r);
            let rest = &raised - &(&top * &h.pow(r as u32));
            let mut next = &rest + &(&top * &l.tail);
            for lower in (0..level).rev() {
                next = self.reduce_level(&next, lower)?;
            }
            let mut memo = l.powers.lock().unwrap();
            if memo.len() == have {
                memo.push(next);
            }
        }
    }

    /// Rewrites all powers of level `level`'s hyperplane class of exponent at
    /// least the rank. Other levels are left alone.
    fn reduce_level(&self, p: &Poly, level: usize) -> Result<Poly> {
        let l = &self.levels[level];
        let r = l.rank() as u16;
        if p.degree_in_index(l.idx) < r {
            return Ok(p.clone());
        }
        let groups: BTreeMap<u16, Poly> = p.split_by(l.idx);
        let mut out = Poly::zero(&self.symbols);
        let h = Poly::var_at(&self.symbols, l.idx);
        for (e, coeff) in groups {
            if e < r {
                out = &out + &(&coeff * &h.pow(e as u32));
            } else {
                out = &out + &(&coeff * &self.power(level, e as usize)?);
            }
        }
        Ok(out)
    }

    pub fn normal_form(&self, p: &Poly) -> Result<Poly> {
        let mut p = p.embed(&self.symbols)?;
        for level in (0..self.levels.len()).rev() {
            p = self.reduce_level(&p, level)?;
        }
        Ok(p)
    }

    /// Pushforward along the top level: the coefficient of `H^(r-1)` in the
    /// normal form.
    pub fn fiber_integrate(&self, p: &Poly) -> Result<Poly> {
        let top = match self.levels.len() {
            0 => return usage("tower has no levels"),
            n => n - 1,
        };
        self.push_level(p, top)
    }

    fn push_level(&self, p: &Poly, level: usize) -> Result<Poly> {
        let l = &self.levels[level];
        let reduced = self.reduce_level(p, level)?;
        Ok(reduced.coefficient_at(l.idx, (l.rank() - 1) as u16))
    }

    /// Pushforward through every level, down to the base symbols.
    pub fn integrate_to_base(&self, p: &Poly) -> Result<Poly> {
        let mut p = p.embed(&self.symbols)?;
        for level in (0..self.levels.len()).rev() {
            p = self.push_level(&p, level)?;
        }
        Ok(p)
    }

    pub fn describe(&self) -> TowerDescription {
        let level_syms: Vec<&str> = self.levels.iter().map(|l| l.symbol.as_str()).collect();
        TowerDescription {
            symbols: self.symbols.names().to_vec(),
            base: self
                .symbols
                .names()
                .iter()
                .filter(|n| !level_syms.contains(&n.as_str()))
                .cloned()
                .collect(),
            levels: self
                .levels
                .iter()
                .map(|l| {
                    let rel = l.relation();
                    LevelDescription {
                        symbol: l.symbol.clone(),
                        rank: l.rank(),
                        relation_text: rel.to_string(),
                        relation: rel.to_json_value(),
                    }
                })
                .collect(),
        }
    }
}
