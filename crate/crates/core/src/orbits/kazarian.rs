//! Pushforward of Kazarian's local singularity classes.
//!
//! A local class is a polynomial in the Chern classes `c1, c2` of the
//! tangent bundle of the surface and in `u`, the first Chern class of the
//! line bundle whose sections are the curves. For plane curves of degree `d`
//! over `P(V) -> B` one substitutes the relative tangent bundle and
//! `u = d h`, then pushes forward along the projection.

use serde::Deserialize;

use crate::chern::{relative_tangent, BundleClass};
use crate::error::{usage, Error, Result};
use crate::poly::{PolyJson, SymbolTable, Symbols};
use crate::tower::RingTower;
use crate::Poly;

/// Symbols of a local class: `c1`, `c2` of the tangent bundle, and `u`.
pub fn local_symbols() -> Symbols {
    SymbolTable::new(&[("c1", 1), ("c2", 2), ("u", 1)]).expect("static table")
}

#[derive(Debug, Clone, PartialEq)]
pub struct KazarianLocalClass {
    pub name: String,
    pub polynomial: Poly,
}

impl KazarianLocalClass {
    pub fn new(name: &str, polynomial: Poly) -> Result<Self> {
        let polynomial = polynomial.embed(&local_symbols())?;
        if polynomial.is_zero() {
            return usage(format!("local class `{name}` is zero"));
        }
        if polynomial.homogeneous_degree().is_none() {
            return usage(format!("local class `{name}` is not homogeneous"));
        }
        let at_zero = polynomial.substitute(&[("u", Poly::zero(&local_symbols()))])?;
        if !at_zero.is_zero() {
            return usage(format!("local class `{name}` does not vanish at u = 0"));
        }
        Ok(KazarianLocalClass {
            name: name.to_string(),
            polynomial,
        })
    }

    pub fn parse(name: &str, expr: &str) -> Result<Self> {
        KazarianLocalClass::new(name, Poly::parse(expr, &local_symbols())?)
    }
}

const A6: &str = "u(-c1+u)(c2-c1u+u^2)(720c1^4-1248c1^2c2+156c2^2-1500c1^3u+1514c1c2u\
+1236c1^2u^2-485c2u^2-487c1u^3+79u^4)";
const D6: &str = "2u(-c1+u)(4c2-2c1u+u^2)(c2-c1u+u^2)(12c1^2-6c2-13c1u+4u^2)";
const E6: &str = "3u(-c1+u)(2c1^2+c2-3c1u+u^2)(4c2-2c1u+u^2)(c2-c1u+u^2)";

/// The built-in local classes: `A6`, `D6`, `E6`.
pub fn builtin(name: &str) -> Option<KazarianLocalClass> {
    let expr = match name {
        "A6" => A6,
        "D6" => D6,
        "E6" => E6,
        _ => return None,
    };
    Some(KazarianLocalClass::parse(name, expr).expect("built-in classes are valid"))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PolySource {
    Text(String),
    Canonical(PolyJson),
}

#[derive(Deserialize)]
struct Entry {
    name: String,
    polynomial: PolySource,
}

/// Reads a JSON list of `{"name": ..., "polynomial": ...}` where the
/// polynomial is either an expression string or the canonical JSON form,
/// over the symbols `c1, c2, u`.
pub fn load_local_classes(json: &str) -> Result<Vec<KazarianLocalClass>> {
    let entries: Vec<Entry> = serde_json::from_str(json).map_err(|e| Error::Parse(format!("local class file: {e}")))?;
    let table = local_symbols();
    entries
        .into_iter()
        .map(|e| {
            let p = match e.polynomial {
                PolySource::Text(s) => Poly::parse(&s, &table)?,
                PolySource::Canonical(pj) => {
                    let own = SymbolTable::with_default_degrees(&pj.symbols)?;
                    Poly::from_json_value_in(&pj, &own)?.embed(&table)?
                }
            };
            KazarianLocalClass::new(&e.name, p)
        })
        .collect()
}

/// Chern-class symbols of the rank 3 bundle `V`.
pub fn base_symbols() -> Symbols {
    SymbolTable::with_default_degrees(&["c1", "c2", "c3"]).expect("static table")
}

/// `pi_*` of the local class along `P(V) -> B`, for curves of degree `d`.
/// The result is a polynomial in `c1, c2, c3` of `V`.
pub fn kazarian_class(local: &KazarianLocalClass, d: u32) -> Result<Poly> {
    if d < 1 {
        return usage("curve degree must be at least 1");
    }
    let t = SymbolTable::with_default_degrees(&["c1", "c2", "c3", "h"])?;
    let v = BundleClass::from_chern_symbols(&t, &["c1", "c2", "c3"])?;
    let tower = RingTower::new(&t).extend(&v, "h")?;
    let h = Poly::var(&t, "h")?;
    let tangent = relative_tangent(&v, &h, |p| tower.normal_form(p))?;
    let u = h.scale(&crate::chern::int(d as i64));
    let pulled = local
        .polynomial
        .substitute_into(&t, &[("c1", tangent.chern(1)), ("c2", tangent.chern(2)), ("u", u)])?;
    let pushed = tower.integrate_to_base(&pulled)?;
    pushed.embed(&base_symbols())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_are_well_formed() {
        for n in ["A6", "D6", "E6"] {
            let k = builtin(n).unwrap();
            assert_eq!(k.polynomial.homogeneous_degree(), Some(8));
        }
        assert!(builtin("A2").is_none());
    }

    #[test]
    fn rejects_classes_not_divisible_by_u() {
        assert!(KazarianLocalClass::parse("bad", "c1^2").is_err());
        assert!(KazarianLocalClass::parse("bad", "u+c2").is_err());
    }

    #[test]
    fn file_formats() {
        let json = r#"[{"name":"A2","polynomial":"u*(u-c1)"},
                       {"name":"X","polynomial":{"symbols":["u"],"terms":[{"coeff":"2/1","exps":[1]}]}}]"#;
        let got = load_local_classes(json).unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(got[1].polynomial, Poly::parse("2u", &local_symbols()).unwrap());
        assert!(load_local_classes("{").is_err());
    }
}
