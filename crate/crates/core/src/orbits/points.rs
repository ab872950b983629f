//! Orbit classes of configurations of points on the projective line.
//!
//! Classes are `GL2`-equivariant, written in the weights `u, v`. Following
//! the localization computation they are produced evaluated at `(-u, -v)`;
//! [`flip`] converts to the standard convention.

use crate::chern::int;
use crate::error::{inconsistent, usage, Result};
use crate::localization::points_localization;
use crate::poly::{SymbolTable, Symbols};
use crate::{Poly, Rational};

pub fn point_symbols() -> Symbols {
    SymbolTable::new(&[("u", 1), ("v", 1), ("H", 1)]).expect("static table")
}

fn check(ms: &[u32]) -> Result<()> {
    if ms.len() < 3 {
        return usage(format!("need at least 3 distinct points, got {}", ms.len()));
    }
    if ms.contains(&0) {
        return usage("multiplicities must be positive");
    }
    Ok(())
}

/// Closed formula: with `G = prod_{i=0..d} (iu + (d-i)v)`,
///
/// `G / (u-v)^2 * ((n-2)/(duv) + sum_i (2m_i - d)/((m_i v + (d-m_i) u)(m_i u + (d-m_i) v)))`.
///
/// Every denominator with a nonzero numerator divides `G`; the division by
/// `(u-v)^2` is checked to be exact. The result is the class at `(-u, -v)`.
pub fn points_class(ms: &[u32]) -> Result<Poly> {
    check(ms)?;
    let t = point_symbols();
    let u = Poly::var(&t, "u")?;
    let v = Poly::var(&t, "v")?;
    let n = ms.len() as i64;
    let d: i64 = ms.iter().map(|&m| m as i64).sum();
    let lin = |a: i64, b: i64| &u.scale(&int(a)) + &v.scale(&int(b));
    let mut g = Poly::one(&t);
    for i in 0..=d {
        g = &g * &lin(i, d - i);
    }
    let mut bracket = g.div_exact(&(&lin(d, 0) * &v))?.scale(&int(n - 2));
    for &m in ms {
        let m = m as i64;
        if 2 * m == d {
            continue;
        }
        let den = &lin(d - m, m) * &lin(m, d - m);
        bracket = &bracket + &g.div_exact(&den)?.scale(&int(2 * m - d));
    }
    let diff = &u - &v;
    match bracket.div_exact(&(&diff * &diff)) {
        Ok(q) => Ok(q),
        Err(_) => inconsistent(format!("points formula for {ms:?}: (u-v)^2 does not divide {bracket}")),
    }
}

/// The localization pipeline on the resolution of the orbit map, over the
/// same symbols as [`points_class`].
pub fn points_class_by_localization(ms: &[u32]) -> Result<Poly> {
    check(ms)?;
    points_localization(ms)?.embed(&point_symbols())
}

/// `u -> -u, v -> -v`.
pub fn flip(p: &Poly) -> Result<Poly> {
    let t = p.symbols().clone();
    p.substitute(&[("u", -&Poly::var(&t, "u")?), ("v", -&Poly::var(&t, "v")?)])
}

/// Projective class in the same flipped convention: `q(u + H/d, v + H/d)`.
pub fn projectivize_flipped(q: &Poly, d: u32) -> Result<Poly> {
    if d == 0 {
        return usage("degree must be positive");
    }
    let t = q.symbols().clone();
    let h = Poly::var(&t, "H")?.scale(&Rational::new(1.into(), (d as i64).into()));
    q.substitute(&[("u", &Poly::var(&t, "u")? + &h), ("v", &Poly::var(&t, "v")? + &h)])
}

/// `n(n-1)(n-2) prod_{j=2..n-2} (H + ju + (n-j)v)`: the projective class of
/// `n` distinct points, flipped convention.
pub fn points_class_distinct(n: u32) -> Result<Poly> {
    if n < 3 {
        return usage(format!("need at least 3 points, got {n}"));
    }
    let t = point_symbols();
    let n = n as i64;
    let mut out = Poly::from_int(&t, n * (n - 1) * (n - 2));
    for j in 2..=n - 2 {
        let f = Poly::parse(&format!("H+{j}u+{}v", n - j), &t)?;
        out = &out * &f;
    }
    Ok(out)
}

/// Partitions of `d` into at least `min_parts` parts, largest part first.
pub fn partitions(d: u32, min_parts: usize) -> Vec<Vec<u32>> {
    fn go(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            go(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out.retain(|p| p.len() >= min_parts);
    out
}
