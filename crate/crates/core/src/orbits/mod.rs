//! Orbit-closure classes of plane curves and of point configurations.
//!
//! A class `p` is the equivariant class of the orbit closure in the space of
//! forms, times the number of automorphisms when that number is finite.
//! Curve classes are polynomials in the Chern classes `c1, c2, c3` of the
//! rank 3 bundle `V`; point classes are polynomials in the weights `u, v`.
//! Each result also carries the class of the projectivized orbit closure
//! (with hyperplane class `H`) and the predegree.

pub mod engine;
pub mod kazarian;
pub mod multmap;
pub mod points;
pub mod predegree;
pub mod sections;
pub mod spec;
pub mod wvariety;

use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::chern::{chern_shift, ChernFrame, ShiftDirection};
use crate::error::{inconsistent, Result};
use crate::poly::rational_to_string;
use crate::poly::{SymbolTable, Symbols};
use crate::{Poly, Rational};

pub use engine::{Engine, Table};
pub use kazarian::{kazarian_class, KazarianLocalClass};
pub use spec::{CubicRow, CurveSpec};

/// `c1, c2, c3, H`: the symbols of projective curve classes.
pub fn curve_symbols() -> Symbols {
    SymbolTable::with_default_degrees(&["c1", "c2", "c3", "H"]).expect("static table")
}

/// Projective class of a curve class for curves of degree `d`.
pub fn projectivize(p: &Poly, d: u32) -> Result<Poly> {
    let frame = ChernFrame::standard(3)?;
    chern_shift(p, d as i64, ShiftDirection::Projectivize, &frame)?.embed(&curve_symbols())
}

/// Coefficient of `H^k` after setting every other symbol to zero.
pub fn top_coefficient(projective: &Poly, k: u32) -> Result<Rational> {
    let t = projective.symbols();
    let h = t.require("H")?;
    let mut out = Rational::zero();
    for (m, c) in projective.iter() {
        let pure = m
            .exponents()
            .iter()
            .enumerate()
            .all(|(i, &e)| if i == h { e as u32 == k } else { e == 0 });
        if pure {
            out += c;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutOrder {
    Finite(u64),
    /// The table entry is the unweighted orbit-closure class.
    Infinite,
    /// The row is a family; the automorphism group depends on the member.
    PerMember,
}

impl fmt::Display for AutOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutOrder::Finite(n) => write!(f, "{n}"),
            AutOrder::Infinite => f.write_str("infinite"),
            AutOrder::PerMember => f.write_str("per member"),
        }
    }
}

/// Sign convention of point classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// Curve classes, and point classes `p(u, v)`.
    Standard,
    /// Point classes `p(-u, -v)`, as produced by localization.
    Flipped,
}

/// A class written as `scalar * prod factors`; kept for display only and
/// checked against the expansion when attached.
#[derive(Debug, Clone, PartialEq)]
pub struct Factored {
    pub scalar: Rational,
    pub factors: Vec<Poly>,
}

impl Factored {
    pub fn expand(&self) -> Poly {
        let t = self.factors[0].symbols();
        let prod = self.factors.iter().fold(Poly::one(t), |acc, f| &acc * f);
        prod.scale(&self.scalar)
    }

    fn render(&self, each: impl Fn(&Poly) -> String, times: &str) -> String {
        let body: Vec<String> = self
            .factors
            .iter()
            .map(|f| {
                if f.len() > 1 || self.factors.len() > 1 {
                    format!("({})", each(f))
                } else {
                    each(f)
                }
            })
            .collect();
        let body = body.join(times);
        let one = Rational::from_integer(1.into());
        if self.scalar == one {
            body
        } else if self.scalar == -one {
            if body.starts_with('(') {
                format!("-{body}")
            } else {
                format!("-({body})")
            }
        } else {
            let s = rational_to_string(&self.scalar);
            let s = s.strip_suffix("/1").unwrap_or(&s).to_string();
            let sep = if times.is_empty() { "" } else { times };
            if body.starts_with('(') {
                format!("{s}{sep}{body}")
            } else {
                format!("{s}{sep}({body})")
            }
        }
    }

    pub fn to_compact_string(&self) -> String {
        self.render(|f| f.to_compact_string(), "")
    }

    pub fn to_latex(&self) -> String {
        self.render(|f| f.to_latex(), " ")
    }
}

#[derive(Debug, Clone)]
pub struct OrbitClassResult {
    pub id: String,
    pub name: String,
    pub curve_degree: u32,
    pub affine: Poly,
    pub projective: Poly,
    pub predegree: Rational,
    pub aut: AutOrder,
    pub convention: Convention,
    pub provenance: String,
    pub notes: Vec<String>,
    pub factored: Option<Factored>,
}

impl OrbitClassResult {
    /// Builds a curve result, deriving the projective class and predegree.
    pub fn curve(
        spec: &CurveSpec,
        affine: Poly,
        aut: AutOrder,
        provenance: &str,
        factored: Option<Factored>,
    ) -> Result<Self> {
        let d = spec.curve_degree();
        let affine = affine.embed(&kazarian::base_symbols())?;
        let projective = projectivize(&affine, d)?;
        let codim = affine.homogeneous_degree().unwrap_or(0);
        let predegree = top_coefficient(&projective, codim)?;
        let mut notes = Vec::new();
        if aut == AutOrder::Infinite {
            notes.push("infinite automorphism group: the entry is the unweighted orbit-closure class".into());
        }
        let out = OrbitClassResult {
            id: spec.id(),
            name: spec.name(),
            curve_degree: d,
            affine,
            projective,
            predegree,
            aut,
            convention: Convention::Standard,
            provenance: provenance.to_string(),
            notes,
            factored: None,
        };
        out.with_factored(factored)
    }

    pub(crate) fn with_factored(mut self, factored: Option<Factored>) -> Result<Self> {
        if let Some(f) = &factored {
            let e = f.expand().embed(self.affine.symbols())?;
            if e != self.affine {
                return inconsistent(format!(
                    "{}: stored factorization {} expands to {e}, not {}",
                    self.id,
                    f.to_compact_string(),
                    self.affine
                ));
            }
        }
        self.factored = factored;
        Ok(self)
    }

    /// Label of the affine class, e.g. `p` or `p(-u,-v)`.
    pub fn affine_label(&self) -> &'static str {
        match (self.convention, self.id.starts_with("points:")) {
            (Convention::Flipped, _) => "p(-u,-v)",
            (Convention::Standard, true) => "p(u,v)",
            _ => "p",
        }
    }

    pub fn projective_label(&self) -> &'static str {
        match (self.convention, self.id.starts_with("points:")) {
            (Convention::Flipped, _) => "P(-u,-v,H)",
            (Convention::Standard, true) => "P(u,v,H)",
            _ => "P",
        }
    }

    /// Converts a point class between `p(-u,-v)` and `p(u,v)`; curve
    /// classes are returned unchanged.
    pub fn flip_sign(&self) -> Result<Self> {
        if !self.id.starts_with("points:") {
            return Ok(self.clone());
        }
        let mut out = self.clone();
        out.affine = points::flip(&self.affine)?;
        out.projective = points::flip(&self.projective)?;
        out.convention = match self.convention {
            Convention::Flipped => Convention::Standard,
            Convention::Standard => Convention::Flipped,
        };
        out.factored = None;
        Ok(out)
    }

    /// Affine class rendered from the stored factorization when present.
    pub fn affine_display(&self) -> String {
        match &self.factored {
            Some(f) => f.to_compact_string(),
            None => self.affine.to_compact_string(),
        }
    }

    pub fn affine_latex(&self) -> String {
        match &self.factored {
            Some(f) => f.to_latex(),
            None => self.affine.to_latex(),
        }
    }

    pub fn to_json_value(&self) -> Value {
        let aut = match self.aut {
            AutOrder::Finite(n) => json!(n),
            AutOrder::Infinite => json!("infinite"),
            AutOrder::PerMember => json!("per-member"),
        };
        json!({
            "id": self.id,
            "name": self.name,
            "curve_degree": self.curve_degree,
            "convention": match self.convention {
                Convention::Standard => "standard",
                Convention::Flipped => "flipped",
            },
            "affine": {
                "label": self.affine_label(),
                "text": self.affine.to_compact_string(),
                "display": self.affine_display(),
                "poly": self.affine.to_json_value(),
            },
            "projective": {
                "label": self.projective_label(),
                "text": self.projective.to_compact_string(),
                "poly": self.projective.to_json_value(),
            },
            "predegree": rational_to_string(&self.predegree),
            "aut": aut,
            "provenance": self.provenance,
            "notes": self.notes,
        })
    }
}
