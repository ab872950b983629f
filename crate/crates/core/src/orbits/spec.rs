//! Curve identifiers: the stable strings accepted on the command line.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CubicRow {
    TripleLine,
    DoubleLineLine,
    ConcurrentLines,
    ConicTangent,
    Triangle,
    ConicLine,
    Cuspidal,
    Nodal,
    Smooth,
    SmoothJ1728,
    SmoothJ0,
}

impl CubicRow {
    pub const ALL: [CubicRow; 11] = [
        CubicRow::TripleLine,
        CubicRow::DoubleLineLine,
        CubicRow::ConcurrentLines,
        CubicRow::ConicTangent,
        CubicRow::Triangle,
        CubicRow::ConicLine,
        CubicRow::Cuspidal,
        CubicRow::Nodal,
        CubicRow::Smooth,
        CubicRow::SmoothJ1728,
        CubicRow::SmoothJ0,
    ];

    pub fn id(self) -> &'static str {
        match self {
            CubicRow::TripleLine => "triple-line",
            CubicRow::DoubleLineLine => "double-line+line",
            CubicRow::ConcurrentLines => "concurrent-lines",
            CubicRow::ConicTangent => "conic+tangent",
            CubicRow::Triangle => "triangle",
            CubicRow::ConicLine => "conic+line",
            CubicRow::Cuspidal => "cuspidal-cubic",
            CubicRow::Nodal => "nodal-cubic",
            CubicRow::Smooth => "smooth-cubic",
            CubicRow::SmoothJ1728 => "smooth-cubic-j1728",
            CubicRow::SmoothJ0 => "smooth-cubic-j0",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CubicRow::TripleLine => "triple line",
            CubicRow::DoubleLineLine => "double line plus line",
            CubicRow::ConcurrentLines => "three concurrent lines",
            CubicRow::ConicTangent => "conic plus tangent line",
            CubicRow::Triangle => "triangle",
            CubicRow::ConicLine => "conic plus line",
            CubicRow::Cuspidal => "cuspidal cubic",
            CubicRow::Nodal => "irreducible nodal cubic",
            CubicRow::Smooth => "smooth cubic (j not 0, 1728)",
            CubicRow::SmoothJ1728 => "smooth cubic with j = 1728",
            CubicRow::SmoothJ0 => "smooth cubic with j = 0",
        }
    }
}

/// A row of the quartic or cubic table, or a configuration of points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CurveSpec {
    /// Quartic with an `A_n` singularity, `3 <= n <= 6`.
    A(u32),
    D6,
    E6,
    /// Nodal cubic plus a flex line.
    AN,
    /// Smooth cubic plus a flex line.
    Flex,
    Quadrilateral,
    D4,
    TwoLinesConic,
    LineCubic,
    /// Irreducible quartic with the given numbers of nodes and cusps.
    NodalCuspidal {
        nodes: u32,
        cusps: u32,
    },
    /// Smooth quartic with the given number of hyperflexes.
    Smooth {
        hyperflexes: u32,
    },
    General,
    Cubic(CubicRow),
    /// Points on the projective line with these multiplicities.
    Points(Vec<u32>),
}

fn bad<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}

fn parse_args(s: &str, open: &str) -> Option<Vec<String>> {
    let inner = s.strip_prefix(open)?.strip_suffix(')')?;
    Some(inner.split(',').map(|a| a.trim().to_string()).collect())
}

fn parse_count(s: &str, what: &str) -> Result<u32> {
    s.parse::<u32>()
        .map_err(|_| Error::Usage(format!("{what} must be a non-negative integer, got `{s}`")))
}

impl CurveSpec {
    pub fn id(&self) -> String {
        match self {
            CurveSpec::A(n) => format!("A{n}"),
            CurveSpec::D6 => "D6".into(),
            CurveSpec::E6 => "E6".into(),
            CurveSpec::AN => "AN".into(),
            CurveSpec::Flex => "flex".into(),
            CurveSpec::Quadrilateral => "quadrilateral".into(),
            CurveSpec::D4 => "D4".into(),
            CurveSpec::TwoLinesConic => "2lines+conic".into(),
            CurveSpec::LineCubic => "line+cubic".into(),
            CurveSpec::NodalCuspidal { nodes, cusps } => format!("nodal({nodes},{cusps})"),
            CurveSpec::Smooth { hyperflexes } => format!("smooth({hyperflexes})"),
            CurveSpec::General => "general".into(),
            CurveSpec::Cubic(row) => row.id().into(),
            CurveSpec::Points(ms) => {
                let parts: Vec<String> = ms.iter().map(u32::to_string).collect();
                format!("points:{}", parts.join(","))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            CurveSpec::A(n) => format!("quartic with an A{n} singularity"),
            CurveSpec::D6 => "nodal cubic plus a line tangent to a branch (D6)".into(),
            CurveSpec::E6 => "rational quartic with an E6 singularity".into(),
            CurveSpec::AN => "nodal cubic plus flex line".into(),
            CurveSpec::Flex => "smooth cubic plus flex line".into(),
            CurveSpec::Quadrilateral => "four general lines".into(),
            CurveSpec::D4 => "general quartic with a D4 singularity".into(),
            CurveSpec::TwoLinesConic => "two lines plus a conic".into(),
            CurveSpec::LineCubic => "a line plus a general cubic".into(),
            CurveSpec::NodalCuspidal { nodes, cusps } => {
                format!("irreducible quartic with {nodes} nodes and {cusps} cusps, no hyperflexes")
            }
            CurveSpec::Smooth { hyperflexes } => format!("smooth quartic with {hyperflexes} hyperflexes"),
            CurveSpec::General => "general smooth quartic".into(),
            CurveSpec::Cubic(row) => row.name().into(),
            CurveSpec::Points(ms) => {
                let parts: Vec<String> = ms.iter().map(u32::to_string).collect();
                format!("{} points on P^1 with multiplicities {}", ms.len(), parts.join(","))
            }
        }
    }

    /// Degree of the curve, or of the binary form for points.
    pub fn curve_degree(&self) -> u32 {
        match self {
            CurveSpec::Cubic(_) => 3,
            CurveSpec::Points(ms) => ms.iter().sum(),
            _ => 4,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            CurveSpec::A(n) if !(3..=6).contains(n) => bad(format!("A{n}: only A3 to A6 are covered")),
            CurveSpec::NodalCuspidal { nodes, cusps } if nodes + cusps > 3 => bad(format!(
                "an irreducible quartic has at most 3 singular points, got {nodes} nodes and {cusps} cusps"
            )),
            CurveSpec::Smooth { hyperflexes } if *hyperflexes > 12 => bad(format!(
                "a smooth quartic has at most 12 hyperflexes, got {hyperflexes}"
            )),
            CurveSpec::Points(ms) if ms.len() < 3 => bad(format!("need at least 3 distinct points, got {}", ms.len())),
            CurveSpec::Points(ms) if ms.contains(&0) => bad("multiplicities must be positive"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl FromStr for CurveSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let spec = match s {
            "D6" => CurveSpec::D6,
            "E6" => CurveSpec::E6,
            "AN" => CurveSpec::AN,
            "flex" => CurveSpec::Flex,
            "quadrilateral" => CurveSpec::Quadrilateral,
            "D4" => CurveSpec::D4,
            "2lines+conic" => CurveSpec::TwoLinesConic,
            "line+cubic" => CurveSpec::LineCubic,
            "general" => CurveSpec::General,
            _ => {
                if let Some(row) = CubicRow::ALL.iter().find(|r| r.id() == s) {
                    CurveSpec::Cubic(*row)
                } else if let Some(n) = s.strip_prefix('A').and_then(|n| n.parse::<u32>().ok()) {
                    CurveSpec::A(n)
                } else if let Some(args) = parse_args(s, "nodal(") {
                    if args.len() != 2 {
                        return bad(format!("`{s}`: expected nodal(nodes,cusps)"));
                    }
                    CurveSpec::NodalCuspidal {
                        nodes: parse_count(&args[0], "node count")?,
                        cusps: parse_count(&args[1], "cusp count")?,
                    }
                } else if let Some(args) = parse_args(s, "smooth(") {
                    if args.len() != 1 {
                        return bad(format!("`{s}`: expected smooth(hyperflexes)"));
                    }
                    CurveSpec::Smooth {
                        hyperflexes: parse_count(&args[0], "hyperflex count")?,
                    }
                } else if let Some(list) = s.strip_prefix("points:") {
                    let ms = list
                        .split(',')
                        .map(|m| {
                            m.trim()
                                .parse::<u32>()
                                .map_err(|_| Error::Usage(format!("bad multiplicity `{m}` in `{s}`")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    CurveSpec::Points(ms)
                } else {
                    return bad(format!("unknown curve identifier `{s}`"));
                }
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}
