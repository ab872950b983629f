//! Formal vector bundles and their Chern classes.
//!
//! A [`BundleClass`] is a rank together with a total Chern class, and when
//! known a list of Chern roots. Roots are the preferred representation:
//! symmetric powers need them, and every other operation keeps them up to
//! date when they are present. Bundles defined only through an exact sequence
//! (kernels, quotients) may carry the total class alone.

use std::collections::BTreeMap;

use num_traits::One;

use crate::error::{inconsistent, usage, Error, Result};
use crate::poly::{SymbolTable, Symbols};
use crate::{Poly, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct BundleClass {
    rank: usize,
    total: Poly,
    roots: Option<Vec<Poly>>,
}

/// Product of `(1 + r)` over the roots.
pub fn total_from_roots(symbols: &Symbols, roots: &[Poly]) -> Poly {
    let one = Poly::one(symbols);
    roots.iter().fold(one.clone(), |acc, r| &acc * &(&one + r))
}

/// `k`-th elementary symmetric polynomial of `roots`.
pub fn elementary(symbols: &Symbols, roots: &[Poly], k: usize) -> Poly {
    // e_k by the usual one-root-at-a-time recursion
    let mut e = vec![Poly::zero(symbols); k + 1];
    e[0] = Poly::one(symbols);
    for r in roots {
        for j in (1..=k).rev() {
            let add = &e[j - 1] * r;
            e[j] = &e[j] + &add;
        }
    }
    e.pop().unwrap()
}

/// `k`-th complete homogeneous symmetric polynomial of `roots`.
pub fn complete_homogeneous(symbols: &Symbols, roots: &[Poly], k: usize) -> Poly {
    let mut h = vec![Poly::zero(symbols); k + 1];
    h[0] = Poly::one(symbols);
    for r in roots {
        for j in 1..=k {
            let add = &h[j - 1] * r;
            h[j] = &h[j] + &add;
        }
    }
    h.pop().unwrap()
}

impl BundleClass {
    pub fn from_roots(symbols: &Symbols, roots: Vec<Poly>) -> Result<Self> {
        for r in &roots {
            if !r.is_zero() && r.homogeneous_degree() != Some(1) {
                return usage(format!("Chern root `{r}` is not of degree 1"));
            }
            if r.symbols() != symbols && **r.symbols() != **symbols {
                return Err(Error::SymbolMismatch);
            }
        }
        Ok(BundleClass {
            rank: roots.len(),
            total: total_from_roots(symbols, &roots),
            roots: Some(roots),
        })
    }

    /// Bundle known only through its total Chern class.
    pub fn from_total(rank: usize, total: Poly) -> Result<Self> {
        if !total.constant_term().is_one() {
            return usage(format!("total Chern class `{total}` must start with 1"));
        }
        if total.degree().unwrap_or(0) as usize > rank {
            return usage(format!("total Chern class `{total}` has classes above rank {rank}"));
        }
        Ok(BundleClass {
            rank,
            total,
            roots: None,
        })
    }

    /// Rank `n` bundle with Chern classes given by symbols `c1, ..., cn`.
    pub fn from_chern_symbols(symbols: &Symbols, names: &[&str]) -> Result<Self> {
        let mut total = Poly::one(symbols);
        for (i, n) in names.iter().enumerate() {
            let idx = symbols.require(n)?;
            if symbols.degree(idx) as usize != i + 1 {
                return usage(format!("Chern class symbol `{n}` must have degree {}", i + 1));
            }
            total = &total + &Poly::var(symbols, n)?;
        }
        BundleClass::from_total(names.len(), total)
    }

    pub fn trivial(symbols: &Symbols, rank: usize) -> Self {
        BundleClass {
            rank,
            total: Poly::one(symbols),
            roots: Some(vec![Poly::zero(symbols); rank]),
        }
    }

    pub fn line(class: Poly) -> Result<Self> {
        let symbols = class.symbols().clone();
        BundleClass::from_roots(&symbols, vec![class])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn total(&self) -> &Poly {
        &self.total
    }

    pub fn roots(&self) -> Option<&[Poly]> {
        self.roots.as_deref()
    }

    pub fn symbols(&self) -> &Symbols {
        self.total.symbols()
    }

    /// `c_i`; zero above the rank.
    pub fn chern(&self, i: usize) -> Poly {
        self.total.graded_piece(i as u32)
    }

    pub fn c1(&self) -> Poly {
        self.chern(1)
    }

    /// Replaces the total class (and roots) by their images under `f`, e.g. a
    /// normal form in some quotient ring.
    pub fn map(&self, f: impl Fn(&Poly) -> Result<Poly>) -> Result<Self> {
        let total = f(&self.total)?;
        let roots = match &self.roots {
            Some(rs) => Some(rs.iter().map(&f).collect::<Result<Vec<_>>>()?),
            None => None,
        };
        Ok(BundleClass {
            rank: self.rank,
            total,
            roots,
        })
    }

    pub fn sym_power(&self, d: usize) -> Result<Self> {
        if d < 1 {
            return usage("symmetric power needs d >= 1");
        }
        let roots = self
            .roots
            .as_ref()
            .ok_or_else(|| Error::Usage("symmetric power needs Chern roots".into()))?;
        let mut out = Vec::new();
        for exps in compositions(d, roots.len()) {
            let mut r = Poly::zero(self.symbols());
            for (root, &e) in roots.iter().zip(&exps) {
                if e > 0 {
                    r = &r + &root.scale(&Rational::from_integer((e as i64).into()));
                }
            }
            out.push(r);
        }
        BundleClass::from_roots(self.symbols(), out)
    }

    pub fn dual(&self) -> Self {
        let mut total = Poly::zero(self.symbols());
        for i in 0..=self.rank {
            let piece = self.chern(i);
            total = if i % 2 == 0 { &total + &piece } else { &total - &piece };
        }
        BundleClass {
            rank: self.rank,
            total,
            roots: self.roots.as_ref().map(|rs| rs.iter().map(|r| -r).collect()),
        }
    }

    /// Tensor product with a line bundle of first Chern class `l`.
    pub fn twist_line(&self, l: &Poly) -> Result<Self> {
        if !l.is_zero() && l.homogeneous_degree() != Some(1) {
            return usage(format!("line class `{l}` is not of degree 1"));
        }
        if let Some(rs) = &self.roots {
            let shifted = rs.iter().map(|r| r.checked_add(l)).collect::<Result<Vec<_>>>()?;
            return BundleClass::from_roots(self.symbols(), shifted);
        }
        // c(E (x) L) = sum_i c_i(E) (1 + l)^(r - i)
        let one = Poly::one(self.symbols());
        let base = one.checked_add(l)?;
        let mut total = Poly::zero(self.symbols());
        for i in 0..=self.rank {
            total = &total + &(&self.chern(i) * &base.pow((self.rank - i) as u32));
        }
        Ok(BundleClass {
            rank: self.rank,
            total: total.truncate(self.rank as u32),
            roots: None,
        })
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let total = self.total.checked_mul(&other.total)?;
        let roots = match (&self.roots, &other.roots) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        Ok(BundleClass {
            rank: self.rank + other.rank,
            total,
            roots,
        })
    }

    /// Quotient `self / sub` for an exact sequence `0 -> sub -> self -> Q -> 0`.
    pub fn ses_complement(&self, sub: &Self) -> Result<Self> {
        self.ses_complement_reduced(sub, |p| Ok(p.clone()))
    }

    /// As [`ses_complement`](Self::ses_complement), with every graded piece
    /// passed through `reduce` (a normal form in the ambient ring) before the
    /// vanishing of the classes above the quotient rank is checked.
    pub fn ses_complement_reduced(&self, sub: &Self, reduce: impl Fn(&Poly) -> Result<Poly>) -> Result<Self> {
        if sub.rank > self.rank {
            return usage(format!(
                "subbundle of rank {} inside a bundle of rank {}",
                sub.rank, self.rank
            ));
        }
        let qrank = self.rank - sub.rank;
        let top = self.rank.max(self.total.degree().unwrap_or(0) as usize);
        let s: Vec<Poly> = (0..=top).map(|j| sub.chern(j)).collect();
        let mut q: Vec<Poly> = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let mut qk = self.chern(k);
            for j in 1..=k {
                if !s[j].is_zero() && !q[k - j].is_zero() {
                    qk = qk.checked_sub(&s[j].checked_mul(&q[k - j])?)?;
                }
            }
            q.push(reduce(&qk)?);
        }
        for (k, qk) in q.iter().enumerate().skip(qrank + 1) {
            if !qk.is_zero() {
                return inconsistent(format!("quotient of rank {qrank} has nonzero c{k} = {qk}"));
            }
        }
        let mut total = Poly::zero(self.symbols());
        for qk in q.iter().take(qrank + 1) {
            total = total.checked_add(qk)?;
        }
        let roots = match (&self.roots, &sub.roots) {
            (Some(a), Some(b)) => multiset_difference(a, b),
            _ => None,
        };
        Ok(BundleClass {
            rank: qrank,
            total,
            roots,
        })
    }
}

/// `a - b` as multisets, if `b` is contained in `a`.
fn multiset_difference(a: &[Poly], b: &[Poly]) -> Option<Vec<Poly>> {
    let mut rest: Vec<Poly> = a.to_vec();
    for x in b {
        let pos = rest.iter().position(|y| y == x)?;
        rest.remove(pos);
    }
    Some(rest)
}

/// All exponent vectors of length `n` summing to `d`, in lex-descending order.
pub fn compositions(d: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(d: usize, n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=d).rev() {
            prefix.push(first);
            go(d - first, n - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(d, n, &mut Vec::new(), &mut out);
    out
}

/// Jet bundle of a line bundle along a curve fibration: roots
/// `line + i * cotangent` for `i = 0, ..., order - 1`.
pub fn jet_bundle(line: &Poly, order: usize, cotangent: &Poly) -> Result<BundleClass> {
    if order < 1 {
        return usage("jet bundle order must be at least 1");
    }
    let roots = (0..order)
        .map(|i| line.checked_add(&cotangent.scale(&Rational::from_integer((i as i64).into()))))
        .collect::<Result<Vec<_>>>()?;
    BundleClass::from_roots(line.symbols(), roots)
}

/// Relative tangent bundle of the projectivization of lines in `e`, where
/// `h` is the hyperplane class: `T = e (x) O(1) / O`.
///
/// `reduce` should be the normal form of a ring in which the projective
/// bundle relation of `e` holds; it is used to verify that the top Chern
/// class of `e (x) O(1)` vanishes.
pub fn relative_tangent(e: &BundleClass, h: &Poly, reduce: impl Fn(&Poly) -> Result<Poly>) -> Result<BundleClass> {
    let twisted = e.twist_line(h)?;
    let trivial = BundleClass::trivial(e.symbols(), 1);
    let mut t = twisted.ses_complement_reduced(&trivial, reduce)?;
    t.roots = None;
    Ok(t)
}

/// Substitutes `c_i -> e_i(roots)` for the listed Chern-class symbols.
pub fn chern_to_roots(p: &Poly, chern: &[&str], roots: &[&str]) -> Result<Poly> {
    let symbols = p.symbols().clone();
    let root_polys = roots
        .iter()
        .map(|r| Poly::var(&symbols, r))
        .collect::<Result<Vec<_>>>()?;
    let bindings: Vec<(&str, Poly)> = chern
        .iter()
        .enumerate()
        .map(|(i, c)| (*c, elementary(&symbols, &root_polys, i + 1)))
        .collect();
    p.substitute(&bindings)
}

/// Rewrites a polynomial symmetric in `roots` through the Chern-class
/// symbols `chern` (`chern[i]` standing for `e_{i+1}`), by repeatedly
/// cancelling the lexicographically leading root monomial. Other symbols are
/// carried along as coefficients. Fails if `p` is not symmetric.
pub fn roots_to_chern(p: &Poly, roots: &[&str], chern: &[&str]) -> Result<Poly> {
    if chern.len() != roots.len() {
        return usage("need one Chern-class symbol per root");
    }
    let symbols = p.symbols().clone();
    let ridx: Vec<usize> = roots.iter().map(|r| symbols.require(r)).collect::<Result<_>>()?;
    let cidx: Vec<usize> = chern.iter().map(|c| symbols.require(c)).collect::<Result<_>>()?;
    let n = roots.len();

    // root exponent vector -> coefficient polynomial (root symbols removed)
    type RootMap = BTreeMap<Vec<u16>, Poly>;
    let split = |p: &Poly| -> RootMap {
        let mut m: RootMap = BTreeMap::new();
        for (mono, c) in p.iter() {
            let key: Vec<u16> = ridx.iter().map(|&i| mono.exponent(i)).collect();
            let mut exps = mono.exponents().to_vec();
            for &i in &ridx {
                exps[i] = 0;
            }
            let term = Poly::monomial(&symbols, &exps, c.clone()).expect("same table");
            let slot = m.entry(key).or_insert_with(|| Poly::zero(&symbols));
            *slot = &*slot + &term;
        }
        m.retain(|_, v| !v.is_zero());
        m
    };

    let root_vars: Vec<Poly> = ridx.iter().map(|&i| Poly::var_at(&symbols, i)).collect();
    let e_split: Vec<RootMap> = (1..=n).map(|k| split(&elementary(&symbols, &root_vars, k))).collect();
    let mul_maps = |a: &RootMap, b: &RootMap| -> RootMap {
        let mut out: RootMap = BTreeMap::new();
        for (ka, va) in a {
            for (kb, vb) in b {
                let k: Vec<u16> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
                let v = va * vb;
                let slot = out.entry(k).or_insert_with(|| Poly::zero(&symbols));
                *slot = &*slot + &v;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    };

    let mut rest = split(p);
    let mut out = Poly::zero(&symbols);
    let mut e_pow_cache: BTreeMap<(usize, u16), RootMap> = BTreeMap::new();
    while let Some((lead, coeff)) = rest.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return usage(format!("`{p}` is not symmetric in {roots:?}"));
        }
        // lead = (a1 >= a2 >= ... >= an): subtract coeff * prod e_k^(a_k - a_{k+1})
        let mut prod: RootMap = BTreeMap::new();
        prod.insert(vec![0; n], Poly::one(&symbols));
        let mut cmono = vec![0u16; symbols.len()];
        for k in 0..n {
            let next = if k + 1 < n { lead[k + 1] } else { 0 };
            let e = lead[k] - next;
            if e == 0 {
                continue;
            }
            cmono[cidx[k]] = e;
            let pw = e_pow_cache
                .entry((k, e))
                .or_insert_with(|| {
                    let mut acc: RootMap = BTreeMap::new();
                    acc.insert(vec![0; n], Poly::one(&symbols));
                    for _ in 0..e {
                        acc = mul_maps(&acc, &e_split[k]);
                    }
                    acc
                })
                .clone();
            prod = mul_maps(&prod, &pw);
        }
        let cterm = Poly::monomial(&symbols, &cmono, Rational::one())?;
        out = &out + &(&cterm * &coeff);
        for (k, v) in prod {
            let sub = &v * &coeff;
            let slot = rest.entry(k.clone()).or_insert_with(|| Poly::zero(&symbols));
            *slot = &*slot - &sub;
            if slot.is_zero() {
                rest.remove(&k);
            }
        }
        if rest.get(&lead).is_some_and(|v| !v.is_zero()) {
            return inconsistent("symmetric reduction failed to cancel the leading term");
        }
    }
    Ok(out)
}

/// Names used by [`chern_shift`]: Chern classes of a bundle, matching root
/// symbols, and the hyperplane class of its projectivization.
#[derive(Debug, Clone)]
pub struct ChernFrame {
    pub chern: Vec<String>,
    pub roots: Vec<String>,
    pub hyperplane: String,
    table: Symbols,
}

impl ChernFrame {
    /// `c1..cn`, roots `u, v, w` (rank at most 3), hyperplane `H`.
    pub fn standard(rank: usize) -> Result<Self> {
        const ROOTS: [&str; 3] = ["u", "v", "w"];
        if rank == 0 || rank > ROOTS.len() {
            return usage(format!("standard frame supports ranks 1 to 3, not {rank}"));
        }
        let chern: Vec<String> = (1..=rank).map(|i| format!("c{i}")).collect();
        let roots: Vec<String> = ROOTS[..rank].iter().map(|s| s.to_string()).collect();
        let mut decl: Vec<(String, u32)> = chern
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i as u32 + 1))
            .collect();
        decl.extend(roots.iter().map(|r| (r.clone(), 1)));
        decl.push(("H".into(), 1));
        let table = SymbolTable::new(&decl)?;
        Ok(ChernFrame {
            chern,
            roots,
            hyperplane: "H".into(),
            table,
        })
    }

    pub fn table(&self) -> &Symbols {
        &self.table
    }

    fn chern_refs(&self) -> Vec<&str> {
        self.chern.iter().map(String::as_str).collect()
    }

    fn root_refs(&self) -> Vec<&str> {
        self.roots.iter().map(String::as_str).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftDirection {
    Projectivize,
    Affinize,
}

/// Substitutes every root `x -> x - H/d` (projectivize) or sets `H = 0`
/// (affinize). Input and output are expressed through the frame's Chern
/// classes (and `H`), over the frame's table.
pub fn chern_shift(p: &Poly, d: i64, dir: ShiftDirection, frame: &ChernFrame) -> Result<Poly> {
    if d == 0 {
        return usage("chern_shift needs d != 0");
    }
    let p = p.embed(frame.table())?;
    let t = frame.table();
    let h = Poly::var(t, &frame.hyperplane)?;
    match dir {
        ShiftDirection::Affinize => p.substitute(&[(frame.hyperplane.as_str(), Poly::zero(t))]),
        ShiftDirection::Projectivize => {
            let in_roots = chern_to_roots(&p, &frame.chern_refs(), &frame.root_refs())?;
            let shift = h.scale(&Rational::new((-1).into(), d.into()));
            let bindings = frame
                .roots
                .iter()
                .map(|r| Ok((r.as_str(), Poly::var(t, r)?.checked_add(&shift)?)))
                .collect::<Result<Vec<_>>>()?;
            let shifted = in_roots.substitute(&bindings)?;
            roots_to_chern(&shifted, &frame.root_refs(), &frame.chern_refs())
        }
    }
}

/// Shifts roots directly: `x -> x + s * H` for each listed root symbol.
pub fn shift_roots(p: &Poly, roots: &[&str], h: &str, s: &Rational) -> Result<Poly> {
    let t = p.symbols().clone();
    let hs = Poly::var(&t, h)?.scale(s);
    let bindings = roots
        .iter()
        .map(|r| Ok((*r, Poly::var(&t, r)?.checked_add(&hs)?)))
        .collect::<Result<Vec<_>>>()?;
    p.substitute(&bindings)
}

pub(crate) fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uvw() -> Symbols {
        SymbolTable::new(&[("u", 1), ("v", 1), ("w", 1), ("H", 1), ("h", 1)]).unwrap()
    }

    fn var(t: &Symbols, n: &str) -> Poly {
        Poly::var(t, n).unwrap()
    }

    #[test]
    fn sym_cubed_of_rank_two() {
        let t = uvw();
        let b = BundleClass::from_roots(&t, vec![var(&t, "u"), var(&t, "v")]).unwrap();
        let s = b.sym_power(3).unwrap();
        let want: Vec<Poly> = ["3u", "2u+v", "u+2v", "3v"]
            .iter()
            .map(|e| Poly::parse(e, &t).unwrap())
            .collect();
        assert_eq!(s.roots().unwrap(), want.as_slice());
    }

    #[test]
    fn sym_fourth_of_rank_three() {
        let t = uvw();
        let b = BundleClass::from_roots(&t, vec![var(&t, "u"), var(&t, "v"), var(&t, "w")]).unwrap();
        let s = b.sym_power(4).unwrap();
        assert_eq!(s.rank(), 15);
        assert_eq!(s.c1(), b.c1().scale(&int(20)));
        assert!(b.sym_power(0).is_err());
    }

    #[test]
    fn dual_and_twist() {
        let t = uvw();
        let b = BundleClass::from_roots(&t, vec![var(&t, "u"), var(&t, "v")]).unwrap();
        let d = b.dual();
        assert_eq!(d.c1(), -&b.c1());
        assert_eq!(d.chern(2), b.chern(2));
        assert_eq!(d.roots().unwrap()[0], -&var(&t, "u"));
        let tw = b.twist_line(&var(&t, "H")).unwrap();
        assert_eq!(tw.roots().unwrap()[1], Poly::parse("v+H", &t).unwrap());
    }

    #[test]
    fn rootless_twist_matches_rooted_twist() {
        let t = uvw();
        let b = BundleClass::from_roots(&t, vec![var(&t, "u"), var(&t, "v"), var(&t, "w")]).unwrap();
        let bare = BundleClass::from_total(3, b.total().clone()).unwrap();
        let l = Poly::parse("2H-h", &t).unwrap();
        assert_eq!(bare.twist_line(&l).unwrap().total(), b.twist_line(&l).unwrap().total());
    }

    #[test]
    fn trivial_quotient() {
        let t = uvw();
        let triv = BundleClass::trivial(&t, 4);
        let q = triv.ses_complement(&triv).unwrap();
        assert_eq!(q.rank(), 0);
        assert_eq!(q.total(), &Poly::one(&t));
    }

    #[test]
    fn quotient_with_leftover_classes_is_rejected() {
        let t = uvw();
        let big = BundleClass::from_roots(&t, vec![var(&t, "u"), var(&t, "v")]).unwrap();
        let sub = BundleClass::line(var(&t, "w")).unwrap();
        assert!(matches!(big.ses_complement(&sub), Err(Error::Consistency(_))));
    }

    #[test]
    fn jets() {
        let t = SymbolTable::new(&[("x", 1)]).unwrap();
        let x = Poly::var(&t, "x").unwrap();
        let j1 = jet_bundle(&x.scale(&int(3)), 1, &x.scale(&int(-2))).unwrap();
        assert_eq!(j1.c1(), x.scale(&int(3)));
        // on a line (x = point class): O(3) has degree 3, cotangent degree -2
        let j3 = jet_bundle(&x.scale(&int(3)), 3, &x.scale(&int(-2))).unwrap();
        assert_eq!(j3.c1(), x.scale(&int(3)));
        let j4 = jet_bundle(&x.scale(&int(5)), 4, &x.scale(&int(-2))).unwrap();
        assert_eq!(j4.c1(), x.scale(&int(8)));
        assert!(jet_bundle(&x, 0, &x).is_err());
    }

    #[test]
    fn symmetric_reduction_round_trip() {
        let f = ChernFrame::standard(3).unwrap();
        let t = f.table();
        let p = Poly::parse("9c1^3+12c1c2-11c3+H*c1^2", t).unwrap();
        let r = chern_to_roots(&p, &["c1", "c2", "c3"], &["u", "v", "w"]).unwrap();
        assert_eq!(r.degree_in("c1").unwrap(), 0);
        let back = roots_to_chern(&r, &["u", "v", "w"], &["c1", "c2", "c3"]).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn asymmetric_input_is_rejected() {
        let f = ChernFrame::standard(2).unwrap();
        let p = Poly::parse("u^2", f.table()).unwrap();
        assert!(roots_to_chern(&p, &["u", "v"], &["c1", "c2"]).is_err());
    }

    #[test]
    fn shift_round_trip() {
        let f = ChernFrame::standard(3).unwrap();
        let p = Poly::parse("c1^2c2^2-7c3c2c1+c2^3", f.table()).unwrap();
        let proj = chern_shift(&p, 4, ShiftDirection::Projectivize, &f).unwrap();
        assert_ne!(proj, p);
        assert_eq!(proj.homogeneous_degree(), Some(6));
        let back = chern_shift(&proj, 4, ShiftDirection::Affinize, &f).unwrap();
        assert_eq!(back, p);
        assert!(chern_shift(&p, 0, ShiftDirection::Projectivize, &f).is_err());
    }
}
