//! Assembly of individual classes and of the result tables.
//!
//! An [`Engine`] memoizes the expensive pipelines (pushforwards and the
//! incidence tower) so that a table computes each of them once.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use crate::error::{inconsistent, usage, Error, Result};
use crate::orbits::kazarian::{base_symbols, builtin, kazarian_class, KazarianLocalClass};
use crate::orbits::multmap::{concurrent_lines_class, mult_map_class};
use crate::orbits::points::{points_class, projectivize_flipped};
use crate::orbits::sections::PlaneChernNumbers;
use crate::orbits::spec::{CubicRow, CurveSpec};
use crate::orbits::wvariety::{invariant_hypersurface, SubbundleConvention, WVariety, WVarietyClasses};
use crate::orbits::{top_coefficient, AutOrder, Convention, Factored, OrbitClassResult};
use crate::{Poly, Rational};

/// Rows of a table; rows that need missing input are listed in `skipped`
/// with the reason.
#[derive(Debug, Clone)]
pub struct Table {
    pub rows: Vec<OrbitClassResult>,
    pub skipped: Vec<(String, String)>,
}

#[derive(Debug, Clone)]
pub struct SectionRow {
    pub id: String,
    pub name: String,
    pub aut: AutOrder,
    pub count: Rational,
}

#[derive(Default)]
pub struct Engine {
    user: BTreeMap<String, KazarianLocalClass>,
    polys: Mutex<HashMap<String, Poly>>,
    wvariety: Mutex<Option<WVarietyClasses>>,
    planes: Mutex<Option<PlaneChernNumbers>>,
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn c(expr: &str) -> Poly {
    Poly::parse(expr, &base_symbols()).expect("static expression")
}

fn factored(scalar: i64, factors: &[&str]) -> Option<Factored> {
    Some(Factored {
        scalar: int(scalar),
        factors: factors.iter().map(|f| c(f)).collect(),
    })
}

const SEXTIC_D6: &str = "18c1^6+33c1^4c2+12c1^2c2^2-85c1^3c3-11c1c2c3-7c3^2";
const SEXTIC_AN: &str = "18c1^6+33c1^4c2+12c1^2c2^2+19c1^3c3-7c1c2c3-35c3^2";
const SEXTIC_Q: &str = "18c1^6+33c1^4c2+12c1^2c2^2+131c1^3c3+153c1c2c3-147c3^2";

/// Local classes whose cubic rows are computed only when supplied.
pub const CONDITIONAL_LOCAL_CLASSES: [(CubicRow, &str); 2] =
    [(CubicRow::ConicTangent, "A3"), (CubicRow::Cuspidal, "A2")];

impl Engine {
    pub fn new() -> Self {
        Engine::default()
    }

    /// An engine that also knows the given local classes, e.g. `A2`, `A3`
    /// or `D4`, for the conditional cubic rows and cross-checks.
    pub fn with_local_classes(classes: Vec<KazarianLocalClass>) -> Result<Self> {
        let mut user = BTreeMap::new();
        for k in classes {
            if user.contains_key(&k.name) {
                return usage(format!("local class `{}` given twice", k.name));
            }
            user.insert(k.name.clone(), k);
        }
        Ok(Engine {
            user,
            ..Engine::default()
        })
    }

    pub fn user_class(&self, name: &str) -> Option<&KazarianLocalClass> {
        self.user.get(name)
    }

    pub fn user_classes(&self) -> impl Iterator<Item = &KazarianLocalClass> {
        self.user.values()
    }

    fn memo(&self, key: &str, f: impl FnOnce() -> Result<Poly>) -> Result<Poly> {
        if let Some(p) = self.polys.lock().expect("cache lock").get(key) {
            return Ok(p.clone());
        }
        let p = f()?;
        self.polys
            .lock()
            .expect("cache lock")
            .insert(key.to_string(), p.clone());
        Ok(p)
    }

    /// Pushforward of a local class (built in first, then user supplied)
    /// for curves of degree `d`.
    pub fn kazarian(&self, name: &str, d: u32) -> Result<Poly> {
        let local = builtin(name).or_else(|| self.user.get(name).cloned()).ok_or_else(|| {
            Error::Usage(format!(
                "no local class named `{name}`; supply it with a local-class file"
            ))
        })?;
        self.memo(&format!("kazarian:{name}:{d}"), || kazarian_class(&local, d))
    }

    /// Orbit classes of the nodal cubic plus a line, for quartics.
    pub fn w_classes(&self) -> Result<WVarietyClasses> {
        let mut slot = self.wvariety.lock().expect("cache lock");
        if let Some(w) = slot.as_ref() {
            return Ok(w.clone());
        }
        let w = WVariety::build(SubbundleConvention::Kernel)?.classes(4)?;
        *slot = Some(w.clone());
        Ok(w)
    }

    /// Orbit-closure class of four general lines.
    pub fn four_lines(&self) -> Result<Poly> {
        self.memo("four-lines", || mult_map_class(&[(1, 1); 4], 24, 4))
    }

    pub fn plane_numbers(&self) -> Result<PlaneChernNumbers> {
        let mut slot = self.planes.lock().expect("cache lock");
        if let Some(n) = slot.as_ref() {
            return Ok(n.clone());
        }
        let n = PlaneChernNumbers::compute()?;
        *slot = Some(n.clone());
        Ok(n)
    }

    /// The affine class of a quartic row.
    pub fn quartic_p(&self, spec: &CurveSpec) -> Result<Poly> {
        let p = |s: CurveSpec| self.quartic_p(&s);
        Ok(match spec {
            CurveSpec::A(6) => self.kazarian("A6", 4)?.scale(&int(3)),
            CurveSpec::A(n) => p(CurveSpec::A(6))?.scale(&int(7 - *n as i64)),
            CurveSpec::D6 => self.kazarian("D6", 4)?.scale(&int(3)),
            CurveSpec::E6 => self.kazarian("E6", 4)?.scale(&int(2)),
            CurveSpec::AN => self.w_classes()?.o_an.scale(&int(2)),
            CurveSpec::Flex => &p(CurveSpec::AN)? + &p(CurveSpec::D6)?.scale(&int(2)),
            CurveSpec::Quadrilateral => self.four_lines()?.scale(&int(24)),
            CurveSpec::D4 => {
                let num = &p(CurveSpec::A(6))?.scale(&int(8)) - &p(CurveSpec::Quadrilateral)?;
                let q = num.scale(&Rational::new(1.into(), 4.into()));
                if !q.is_integral() {
                    return inconsistent(format!("(8 p_A6 - p_Q)/4 is not integral: {q}"));
                }
                q
            }
            CurveSpec::TwoLinesConic => &p(CurveSpec::Quadrilateral)? + &p(CurveSpec::D4)?.scale(&int(2)),
            CurveSpec::LineCubic => &p(CurveSpec::Quadrilateral)? + &p(CurveSpec::D4)?.scale(&int(3)),
            CurveSpec::NodalCuspidal { nodes, cusps } => {
                let general = p(CurveSpec::General)?;
                let nodes_part = p(CurveSpec::D6)?.scale(&int(2 * *nodes as i64));
                let cusps_part = p(CurveSpec::Flex)?.scale(&int(*cusps as i64));
                &(&general - &nodes_part) - &cusps_part
            }
            CurveSpec::Smooth { hyperflexes } => {
                &p(CurveSpec::General)? - &p(CurveSpec::E6)?.scale(&int(*hyperflexes as i64))
            }
            CurveSpec::General => p(CurveSpec::A(6))?.scale(&int(8)),
            other => return usage(format!("`{other}` is not a quartic row")),
        })
    }

    fn quartic_meta(spec: &CurveSpec) -> (AutOrder, &'static str, Option<Factored>) {
        match spec {
            CurveSpec::A(6) => (
                AutOrder::Finite(3),
                "local singularity class pushed forward along P(V), times #Aut",
                factored(336, &["9c1^3+12c1c2-11c3", "2c1^3+c1c2+c3"]),
            ),
            CurveSpec::A(_) => (AutOrder::PerMember, "relation (7-n) p_A6", None),
            CurveSpec::D6 => (
                AutOrder::Finite(3),
                "local singularity class pushed forward along P(V), times #Aut",
                factored(192, &[SEXTIC_D6]),
            ),
            CurveSpec::E6 => (
                AutOrder::Finite(2),
                "local singularity class pushed forward along P(V), times #Aut",
                factored(96, &["2c1^3+c1c2+c3", "9c1^3-6c1c2+7c3"]),
            ),
            CurveSpec::AN => (
                AutOrder::Finite(2),
                "incidence tower of (cubic, line, flex point), flex-line divisor, times #Aut",
                factored(384, &[SEXTIC_AN]),
            ),
            CurveSpec::Flex => (AutOrder::PerMember, "relation p_AN + 2 p_D6", None),
            CurveSpec::Quadrilateral => (
                AutOrder::Finite(24),
                "multiplication map from four P(V^dual) factors, divided by 24, times #Aut",
                factored(384, &[SEXTIC_Q]),
            ),
            CurveSpec::D4 => (AutOrder::PerMember, "relation (8 p_A6 - p_Q)/4", None),
            CurveSpec::TwoLinesConic => (AutOrder::PerMember, "relation p_Q + 2 p_D4", None),
            CurveSpec::LineCubic => (AutOrder::PerMember, "relation p_Q + 3 p_D4", None),
            CurveSpec::NodalCuspidal { .. } => (
                AutOrder::PerMember,
                "relation 8 p_A6 - 2 nodes p_D6 - cusps p_flex",
                None,
            ),
            CurveSpec::Smooth { .. } => (AutOrder::PerMember, "relation 8 p_A6 - n p_E6", None),
            CurveSpec::General => (AutOrder::PerMember, "relation 8 p_A6", None),
            _ => (AutOrder::PerMember, "", None),
        }
    }

    fn cubic(&self, row: CubicRow) -> Result<OrbitClassResult> {
        let spec = CurveSpec::Cubic(row);
        let mult = |factors: &[(u32, u32)], deg: u64| mult_map_class(factors, deg, 3);
        let fixed = |k: i64, aut: u64| -> Result<OrbitClassResult> {
            let t = base_symbols();
            let p = invariant_hypersurface(k, 3, &Poly::zero(&t), &Poly::var(&t, "c1")?);
            let f = Factored {
                scalar: int(aut as i64),
                factors: vec![p.clone()],
            };
            OrbitClassResult::curve(
                &spec,
                p.scale(&int(aut as i64)),
                AutOrder::Finite(aut),
                "invariant hypersurface of fixed j in P(Sym^3 V^dual), times #Aut",
                Some(f),
            )
        };
        let conditional = |name: &str| -> Result<OrbitClassResult> {
            let p = self.kazarian(name, 3)?;
            OrbitClassResult::curve(
                &spec,
                p,
                AutOrder::Infinite,
                "user-supplied local singularity class pushed forward along P(V)",
                None,
            )
        };
        match row {
            CubicRow::TripleLine => OrbitClassResult::curve(
                &spec,
                mult(&[(1, 3)], 1)?,
                AutOrder::Infinite,
                "map P(V^dual) -> P(Sym^3 V^dual), l -> l^3",
                factored(-1, &["72c1^3c2^2+36c1c2^3+36c1^4c3-162c1^2c2c3+243c1c3^2"]),
            ),
            CubicRow::DoubleLineLine => OrbitClassResult::curve(
                &spec,
                mult(&[(1, 2), (1, 1)], 1)?,
                AutOrder::Infinite,
                "multiplication map (l, m) -> l^2 m",
                factored(-1, &["72c1^3c2+36c1c2^2-108c1^2c3"]),
            ),
            CubicRow::ConcurrentLines => OrbitClassResult::curve(
                &spec,
                concurrent_lines_class()?,
                AutOrder::Infinite,
                "three lines through a moving point, multiplication map divided by 6",
                None,
            ),
            CubicRow::Triangle => OrbitClassResult::curve(
                &spec,
                mult(&[(1, 1); 3], 6)?,
                AutOrder::Infinite,
                "multiplication map from three P(V^dual) factors, divided by 6",
                factored(-1, &["12c1^3+6c1c2+27c3"]),
            ),
            CubicRow::ConicLine => OrbitClassResult::curve(
                &spec,
                mult(&[(2, 1), (1, 1)], 1)?,
                AutOrder::Infinite,
                "multiplication map (q, l) -> q l",
                None,
            ),
            CubicRow::ConicTangent => conditional("A3"),
            CubicRow::Cuspidal => conditional("A2"),
            CubicRow::Nodal => fixed(12, 6),
            CubicRow::Smooth => fixed(12, 18),
            CubicRow::SmoothJ1728 => fixed(6, 36),
            CubicRow::SmoothJ0 => fixed(4, 54),
        }
    }

    fn points(&self, ms: &[u32]) -> Result<OrbitClassResult> {
        let spec = CurveSpec::Points(ms.to_vec());
        spec.validate()?;
        let d = spec.curve_degree();
        let affine = points_class(ms)?;
        let projective = projectivize_flipped(&affine, d)?;
        let predegree = top_coefficient(&projective, d - 3)?;
        let aut = if ms.len() == 3 {
            let same = |a: u32, b: u32| u64::from(a == b);
            let pairs = same(ms[0], ms[1]) + same(ms[0], ms[2]) + same(ms[1], ms[2]);
            AutOrder::Finite([1, 2, 2, 6][pairs as usize])
        } else {
            AutOrder::PerMember
        };
        Ok(OrbitClassResult {
            id: spec.id(),
            name: spec.name(),
            curve_degree: d,
            affine,
            projective,
            predegree,
            aut,
            convention: Convention::Flipped,
            provenance: "closed formula over the weights u, v".into(),
            notes: Vec::new(),
            factored: None,
        })
    }

    /// Computes one class.
    pub fn class(&self, spec: &CurveSpec) -> Result<OrbitClassResult> {
        spec.validate()?;
        match spec {
            CurveSpec::Cubic(row) => self.cubic(*row),
            CurveSpec::Points(ms) => self.points(ms),
            _ => {
                let p = self.quartic_p(spec)?;
                let (aut, provenance, f) = Engine::quartic_meta(spec);
                OrbitClassResult::curve(spec, p, aut, provenance, f)
            }
        }
    }

    pub fn quartic_specs() -> Vec<CurveSpec> {
        let mut out = vec![
            CurveSpec::A(6),
            CurveSpec::D6,
            CurveSpec::E6,
            CurveSpec::AN,
            CurveSpec::Flex,
            CurveSpec::Quadrilateral,
            CurveSpec::D4,
            CurveSpec::TwoLinesConic,
            CurveSpec::LineCubic,
        ];
        out.extend((3..=5).map(CurveSpec::A));
        for total in 1..=3u32 {
            for cusps in 0..=total {
                out.push(CurveSpec::NodalCuspidal {
                    nodes: total - cusps,
                    cusps,
                });
            }
        }
        out.extend((1..=12).map(|n| CurveSpec::Smooth { hyperflexes: n }));
        out.push(CurveSpec::General);
        out
    }

    pub fn quartic_table(&self) -> Result<Table> {
        let rows = Engine::quartic_specs()
            .iter()
            .map(|s| self.class(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Table {
            rows,
            skipped: Vec::new(),
        })
    }

    pub fn cubic_table(&self) -> Result<Table> {
        let mut rows = Vec::new();
        let mut skipped = Vec::new();
        for row in CubicRow::ALL {
            let needs = CONDITIONAL_LOCAL_CLASSES
                .iter()
                .find(|(r, _)| *r == row)
                .map(|(_, name)| *name);
            match needs {
                Some(name) if self.user_class(name).is_none() => skipped.push((
                    row.id().to_string(),
                    format!("needs the local class {name} from a local-class file"),
                )),
                _ => rows.push(self.cubic(row)?),
            }
        }
        Ok(Table { rows, skipped })
    }

    /// Plane-section counts for every quartic row.
    pub fn section_table(&self) -> Result<Vec<SectionRow>> {
        let numbers = self.plane_numbers()?;
        Engine::quartic_specs()
            .iter()
            .map(|s| {
                let p = self.quartic_p(s)?;
                Ok(SectionRow {
                    id: s.id(),
                    name: s.name(),
                    aut: Engine::quartic_meta(s).0,
                    count: numbers.integrate(&p)?,
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quartic_rows_carry_their_factorizations() {
        let e = Engine::new();
        let a6 = e.class(&CurveSpec::A(6)).unwrap();
        assert_eq!(a6.affine_display(), "336(9c1^3+12c1c2-11c3)(2c1^3+c1c2+c3)");
        assert_eq!(a6.predegree, int(1785));
        let general = e.class(&CurveSpec::General).unwrap();
        assert_eq!(general.predegree, int(14280));
    }

    #[test]
    fn conditional_rows_are_skipped_without_input() {
        let t = Engine::new().cubic_table().unwrap();
        let skipped: Vec<&str> = t.skipped.iter().map(|(id, _)| id.as_str()).collect();
        assert_eq!(skipped, vec!["conic+tangent", "cuspidal-cubic"]);
        assert_eq!(t.rows.len(), 9);
    }

    #[test]
    fn point_rows() {
        let e = Engine::new();
        let r = e.class(&"points:1,1,1".parse().unwrap()).unwrap();
        assert_eq!(r.affine.to_compact_string(), "6");
        assert_eq!(r.aut, AutOrder::Finite(6));
        assert_eq!(r.affine_label(), "p(-u,-v)");
        let r = e.class(&"points:2,1,1".parse().unwrap()).unwrap();
        assert_eq!(r.aut, AutOrder::Finite(2));
    }
}
