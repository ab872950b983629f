//! Torus localization.
//!
//! A class is integrated by restricting it to each fixed component, dividing
//! by the equivariant Euler class of the normal bundle and summing. Fixed
//! components are points or projective lines carrying a class `z` with
//! `z^2 = 0`; in the latter case the contribution is the coefficient of `z`.
//! All denominators are products of linear forms, so the sum is taken over a
//! common denominator and divided out exactly once at the end; a nonzero
//! remainder means the fixed-point data was wrong.

pub mod grassmann;
pub mod schubert;

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{inconsistent, usage, Error, Result};
use crate::poly::{SymbolTable, Symbols};
use crate::{Poly, Rational};

pub use grassmann::grassmann_chern_numbers;

/// A polynomial divided by a product of linear forms.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalTerm {
    pub numerator: Poly,
    pub denominator_factors: Vec<Poly>,
}

impl RationalTerm {
    pub fn new(numerator: Poly, denominator_factors: Vec<Poly>) -> Result<Self> {
        for f in &denominator_factors {
            if f.is_zero() {
                return usage("zero factor in a denominator");
            }
            if f.homogeneous_degree().unwrap_or(0) > 1 {
                return usage(format!("denominator factor `{f}` is not linear"));
            }
        }
        Ok(RationalTerm {
            numerator,
            denominator_factors,
        })
    }
}

/// Scales a linear form to have leading coefficient 1; returns the form and
/// the scalar that was divided out.
fn monic(f: &Poly) -> (Poly, Rational) {
    let (_, lc) = f.leading().expect("nonzero factor");
    let lc = lc.clone();
    (f.scale(&(Rational::one() / lc.clone())), lc)
}

/// Exact sum of rational terms, which must be a polynomial.
pub fn sum_rational_terms(symbols: &Symbols, terms: &[RationalTerm]) -> Result<Poly> {
    // normalized factor text -> (factor, multiplicity in the common denominator)
    let mut common: BTreeMap<String, (Poly, usize)> = BTreeMap::new();
    let mut prepared = Vec::with_capacity(terms.len());
    for t in terms {
        let mut scale = Rational::one();
        let mut counts: BTreeMap<String, usize> = BTreeMap::new();
        for f in &t.denominator_factors {
            let (m, lc) = monic(&f.embed(symbols)?);
            scale *= lc;
            let key = m.to_expr_string();
            let c = counts.entry(key.clone()).or_default();
            *c += 1;
            let slot = common.entry(key).or_insert((m, 0));
            slot.1 = slot.1.max(*c);
        }
        let num = t.numerator.embed(symbols)?.scale(&(Rational::one() / scale));
        prepared.push((num, counts));
    }
    let mut total = Poly::zero(symbols);
    for (num, counts) in prepared {
        let mut n = num;
        for (key, (f, mult)) in &common {
            let have = counts.get(key).copied().unwrap_or(0);
            if *mult > have {
                n = &n * &f.pow((*mult - have) as u32);
            }
        }
        total = &total + &n;
    }
    let mut denom = Poly::one(symbols);
    for (f, mult) in common.values() {
        denom = &denom * &f.pow(*mult as u32);
    }
    match total.div_exact(&denom) {
        Ok(q) => Ok(q),
        Err(Error::Consistency(_)) => inconsistent(format!(
            "localization sum is not a polynomial: numerator {total} over {denom}"
        )),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocusKind {
    Point,
    /// A fixed projective line whose own ring is `Q[z, ...]/(z^2)`.
    Line {
        z: String,
    },
}

/// One torus-fixed component.
#[derive(Debug, Clone)]
pub struct FixedLocus {
    pub name: String,
    pub kind: LocusKind,
    /// Ambient symbol -> its restriction in the component's ring.
    pub restrictions: Vec<(String, Poly)>,
    /// Linear factors of the Euler class of the normal bundle.
    pub euler_factors: Vec<Poly>,
}

impl FixedLocus {
    fn z_index(&self, symbols: &Symbols) -> Result<Option<usize>> {
        match &self.kind {
            LocusKind::Point => Ok(None),
            LocusKind::Line { z } => symbols.require(z).map(Some),
        }
    }

    /// Restriction of an ambient class, truncated at `z^2`.
    pub fn restrict(&self, class: &Poly) -> Result<Poly> {
        let symbols = class.symbols().clone();
        let bindings: Vec<(&str, Poly)> = self
            .restrictions
            .iter()
            .map(|(s, p)| Ok((s.as_str(), p.embed(&symbols)?)))
            .collect::<Result<_>>()?;
        let r = class.substitute(&bindings)?;
        match self.z_index(&symbols)? {
            None => Ok(r),
            Some(zi) => {
                let z = Poly::var_at(&symbols, zi);
                Ok(&r.coefficient_at(zi, 0) + &(&r.coefficient_at(zi, 1) * &z))
            }
        }
    }

    /// Contribution of `class` as a list of rational terms.
    pub fn contribution(&self, class: &Poly) -> Result<Vec<RationalTerm>> {
        let symbols = class.symbols().clone();
        let restricted = self.restrict(class)?;
        let factors: Vec<Poly> = self
            .euler_factors
            .iter()
            .map(|f| f.embed(&symbols))
            .collect::<Result<_>>()?;
        match self.z_index(&symbols)? {
            None => {
                for f in &factors {
                    if f.is_zero() {
                        return inconsistent(format!("Euler class of `{}` vanishes", self.name));
                    }
                }
                Ok(vec![RationalTerm::new(restricted, factors)?])
            }
            Some(zi) => {
                // [z] (f0 + f1 z) / prod (a_k + b_k z)
                //   = f1 / prod a - f0 sum_k b_k / (a_k prod a)
                let f0 = restricted.coefficient_at(zi, 0);
                let f1 = restricted.coefficient_at(zi, 1);
                let mut a = Vec::with_capacity(factors.len());
                let mut b = Vec::with_capacity(factors.len());
                for f in &factors {
                    let ak = f.coefficient_at(zi, 0);
                    let bk = f.coefficient_at(zi, 1);
                    if ak.is_zero() {
                        return inconsistent(format!("Euler factor `{f}` of `{}` vanishes at z = 0", self.name));
                    }
                    if !bk.is_constant() || f.degree_in_index(zi) > 1 {
                        return usage(format!("Euler factor `{f}` is not linear in z"));
                    }
                    a.push(ak);
                    b.push(bk.constant_term());
                }
                let mut out = vec![RationalTerm::new(f1, a.clone())?];
                for k in 0..a.len() {
                    if b[k].is_zero() {
                        continue;
                    }
                    let mut den = a.clone();
                    den.push(a[k].clone());
                    out.push(RationalTerm::new(f0.scale(&-b[k].clone()), den)?);
                }
                Ok(out)
            }
        }
    }
}

/// Sum over fixed loci of restriction over Euler class; exact polynomial.
pub fn ab_integrate(loci: &[FixedLocus], class: &Poly) -> Result<Poly> {
    let mut terms = Vec::new();
    for l in loci {
        terms.extend(l.contribution(class)?);
    }
    let symbols = class.symbols().clone();
    let out = sum_rational_terms(&symbols, &terms)?;
    for l in loci {
        if let LocusKind::Line { z } = &l.kind {
            if out.degree_in(z)? > 0 {
                return inconsistent("localization result still depends on z");
            }
        }
    }
    Ok(out)
}

/// Symbols of the points-on-a-line resolution: weights `u, v`, the local
/// class `z`, the target hyperplane class `H`, the orbit-map pullback `D` and
/// exceptional divisors `E1..En`.
pub fn points_symbols(n: usize) -> Result<Symbols> {
    let mut decl: Vec<(String, u32)> = ["u", "v", "z", "H", "D"].iter().map(|s| (s.to_string(), 1)).collect();
    decl.extend((1..=n).map(|i| (format!("E{i}"), 1)));
    SymbolTable::new(&decl)
}

/// Fixed loci of the resolution of the orbit map for `n` points with the
/// given multiplicities: two projective lines and `2n` isolated points.
///
/// The restrictions of `H` and of each `Ei` are listed together with the
/// derived restriction of the pullback `D = dH - sum mi Ei`.
pub fn p1_points_fixed_loci(multiplicities: &[u32]) -> Result<(Symbols, Vec<FixedLocus>)> {
    let n = multiplicities.len();
    if n < 3 {
        return usage(format!("need at least 3 distinct points, got {n}"));
    }
    if multiplicities.contains(&0) {
        return usage("multiplicities must be positive");
    }
    let d: i64 = multiplicities.iter().map(|&m| m as i64).sum();
    let t = points_symbols(n)?;
    let p = |s: &str| Poly::parse(s, &t);
    let q = |k: i64| Rational::from_integer(k.into());
    let u = p("u")?;
    let v = p("v")?;
    let z = p("z")?;

    let mut loci = Vec::with_capacity(2 * n + 2);
    for (name, a, b) in [("C1", &u, &v), ("C2", &v, &u)] {
        // H -> z - a, every E -> z, so D -> -d a
        let mut restrictions = vec![("H".to_string(), &z - a)];
        for i in 1..=n {
            restrictions.push((format!("E{i}"), z.clone()));
        }
        restrictions.push(("D".to_string(), a.scale(&q(-d))));
        let ba = b - a;
        let euler = vec![&z + &ba, &z.scale(&q(1 - n as i64)) + &ba];
        loci.push(FixedLocus {
            name: name.into(),
            kind: LocusKind::Line { z: "z".into() },
            restrictions,
            euler_factors: euler,
        });
    }
    for (i, &m) in multiplicities.iter().enumerate() {
        let m = m as i64;
        for (side, a, b) in [("C1", &u, &v), ("C2", &v, &u)] {
            let mut restrictions = vec![("H".to_string(), -a)];
            for j in 0..n {
                let val = if j == i { b - a } else { Poly::zero(&t) };
                restrictions.push((format!("E{}", j + 1), val));
            }
            let dval = &a.scale(&q(m - d)) - &b.scale(&q(m));
            restrictions.push(("D".to_string(), dval));
            let ba = b - a;
            loci.push(FixedLocus {
                name: format!("R{}/{side}", i + 1),
                kind: LocusKind::Point,
                restrictions,
                euler_factors: vec![ba.clone(), ba.clone(), -&ba],
            });
        }
    }
    Ok((t, loci))
}

/// `(G(X) - G(0)) / X` with `G(X) = prod_{i=0..d} (X + (d-i)u + iv)`, as a
/// polynomial in the symbol `var`, built by dropping the constant term and
/// shifting exponents down.
pub fn secant_quotient(symbols: &Symbols, var: &str, d: u32) -> Result<Poly> {
    let x = Poly::var(symbols, var)?;
    let u = Poly::var(symbols, "u")?;
    let v = Poly::var(symbols, "v")?;
    let q = |k: u32| Rational::from_integer((k as i64).into());
    let xi = symbols.require(var)?;
    let mut g = Poly::one(symbols);
    for i in 0..=d {
        let w = &u.scale(&q(d - i)) + &v.scale(&q(i));
        g = &g * &(&x + &w);
    }
    let mut out = Poly::zero(symbols);
    for e in 1..=g.degree_in_index(xi) {
        out = &out + &(&g.coefficient_at(xi, e) * &x.pow(e as u32 - 1));
    }
    Ok(out)
}

/// Localization side of the points computation, in the resolution's own
/// sign convention (the class evaluated at `(-u, -v)`).
pub fn points_localization(multiplicities: &[u32]) -> Result<Poly> {
    let (t, loci) = p1_points_fixed_loci(multiplicities)?;
    let d: u32 = multiplicities.iter().sum();
    let phi = secant_quotient(&t, "D", d)?;
    ab_integrate(&loci, &phi)
}

pub(crate) fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_through_two_points() {
        let t = SymbolTable::new(&[("u", 1), ("v", 1), ("H", 1)]).unwrap();
        let p = |s: &str| Poly::parse(s, &t).unwrap();
        let loci = vec![
            FixedLocus {
                name: "0".into(),
                kind: LocusKind::Point,
                restrictions: vec![("H".into(), p("-u"))],
                euler_factors: vec![p("v-u")],
            },
            FixedLocus {
                name: "inf".into(),
                kind: LocusKind::Point,
                restrictions: vec![("H".into(), p("-v"))],
                euler_factors: vec![p("u-v")],
            },
        ];
        assert_eq!(ab_integrate(&loci, &p("H")).unwrap(), Poly::one(&t));
        assert!(ab_integrate(&loci, &p("1")).unwrap().is_zero());
        assert_eq!(ab_integrate(&loci, &p("H^2")).unwrap(), p("-u-v"));
    }

    #[test]
    fn wrong_data_is_detected() {
        let t = SymbolTable::new(&[("u", 1), ("v", 1), ("H", 1)]).unwrap();
        let p = |s: &str| Poly::parse(s, &t).unwrap();
        let loci = vec![FixedLocus {
            name: "lonely".into(),
            kind: LocusKind::Point,
            restrictions: vec![("H".into(), p("-u"))],
            euler_factors: vec![p("v-u")],
        }];
        assert!(matches!(ab_integrate(&loci, &p("H")), Err(Error::Consistency(_))));
    }

    #[test]
    fn three_simple_points() {
        let got = points_localization(&[1, 1, 1]).unwrap();
        assert_eq!(got, Poly::from_int(got.symbols(), 6));
    }

    #[test]
    fn appendix_data_shapes() {
        let (t, loci) = p1_points_fixed_loci(&[2, 1, 1]).unwrap();
        assert_eq!(loci.len(), 8);
        let c1 = &loci[0];
        assert_eq!(c1.restrictions[0].1, Poly::parse("z-u", &t).unwrap());
        assert_eq!(c1.euler_factors[1], Poly::parse("-2z+v-u", &t).unwrap());
        let iso = &loci[2];
        assert_eq!(iso.restrictions[0].1, Poly::parse("-u", &t).unwrap());
        assert_eq!(iso.restrictions[1].1, Poly::parse("v-u", &t).unwrap());
        assert!(p1_points_fixed_loci(&[1, 1]).is_err());
        assert!(p1_points_fixed_loci(&[1, 0, 1]).is_err());
    }

    #[test]
    fn secant_quotient_cancels_constant() {
        let t = points_symbols(3).unwrap();
        let phi = secant_quotient(&t, "D", 1).unwrap();
        // ((D+u)(D+v) - uv)/D = D + u + v
        assert_eq!(phi, Poly::parse("D+u+v", &t).unwrap());
    }
}
