//! Schubert calculus on a Grassmannian via the Pieri rule, used as an
//! independent check of the localization integrals.
//!
//! Classes are linear combinations of partitions inside the `k x (n-k)` box.
//! With `S` the tautological subbundle, `c_i(S) = (-1)^i sigma_(1^i)`, and
//! multiplication by `sigma_(1^i)` adds a vertical strip of `i` boxes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{usage, Result};

type Partition = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertClass {
    k: usize,
    cols: usize,
    terms: BTreeMap<Partition, BigInt>,
}

impl SchubertClass {
    /// Fundamental class of the Grassmannian of `k`-planes in `C^n`.
    pub fn one(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return usage(format!("need 0 < k < n, got k = {k}, n = {n}"));
        }
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; k], BigInt::one());
        Ok(SchubertClass { k, cols: n - k, terms })
    }

    /// Product with `sigma_(1^i)`.
    pub fn times_column(&self, i: usize) -> Self {
        let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (lam, c) in &self.terms {
            for mu in vertical_strips(lam, i, self.cols) {
                *out.entry(mu).or_insert_with(BigInt::zero) += c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        SchubertClass {
            k: self.k,
            cols: self.cols,
            terms: out,
        }
    }

    /// Product with `c_i(S)`.
    pub fn times_chern(&self, i: usize) -> Self {
        let mut p = self.times_column(i);
        if i % 2 == 1 {
            for c in p.terms.values_mut() {
                *c = -c.clone();
            }
        }
        p
    }

    /// Coefficient of the point class.
    pub fn degree(&self) -> BigInt {
        self.terms
            .get(&vec![self.cols; self.k])
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }
}

/// Partitions obtained from `lam` by adding `i` boxes, no two in one row,
/// staying within `cols` columns.
fn vertical_strips(lam: &Partition, i: usize, cols: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut chosen = vec![false; lam.len()];
    fn go(row: usize, left: usize, lam: &Partition, cols: usize, chosen: &mut Vec<bool>, out: &mut Vec<Partition>) {
        let k = lam.len();
        if left == 0 {
            let mu: Partition = (0..k).map(|r| lam[r] + chosen[r] as usize).collect();
            if mu.windows(2).all(|w| w[0] >= w[1]) {
                out.push(mu);
            }
            return;
        }
        if row == k || k - row < left {
            return;
        }
        if lam[row] < cols {
            chosen[row] = true;
            go(row + 1, left - 1, lam, cols, chosen, out);
            chosen[row] = false;
        }
        go(row + 1, left, lam, cols, chosen, out);
    }
    go(0, i, lam, cols, &mut chosen, &mut out);
    out
}

/// `int c1(S)^e1 ... ck(S)^ek` by repeated Pieri multiplication.
pub fn pieri_chern_number(k: usize, n: usize, exps: &[u32]) -> Result<BigInt> {
    let mut cls = SchubertClass::one(k, n)?;
    for (i, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            cls = cls.times_chern(i + 1);
        }
    }
    Ok(cls.degree())
}
