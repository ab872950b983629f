//! Text, JSON, CSV and LaTeX output. Everything is built as a string so the
//! same invocation always prints the same bytes.

use orbitclass::orbits::engine::SectionRow;
use orbitclass::orbits::wvariety::WVariety;
use orbitclass::orbits::{OrbitClassResult, Table};
use orbitclass::verify::Report;
use orbitclass::Rational;
use serde_json::{json, Value};

use crate::Format;

#[derive(Debug, Clone, Copy)]
pub struct Parts {
    pub affine: bool,
    pub projective: bool,
}

fn num(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    let mut line = fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",");
    line.push('\n');
    line
}

fn class_json(r: &OrbitClassResult, parts: Parts) -> Value {
    let mut v = r.to_json_value();
    let obj = v.as_object_mut().expect("result is an object");
    if !parts.affine {
        obj.remove("affine");
    }
    if !parts.projective {
        obj.remove("projective");
    }
    v
}

pub fn class(r: &OrbitClassResult, parts: Parts, format: Format) -> String {
    match format {
        Format::Json => pretty(&class_json(r, parts)),
        Format::Csv => {
            let mut header = vec!["id".to_string(), "name".into(), "aut".into(), "predegree".into()];
            let mut row = vec![r.id.clone(), r.name.clone(), r.aut.to_string(), num(&r.predegree)];
            if parts.affine {
                header.push(r.affine_label().into());
                row.push(r.affine.to_compact_string());
            }
            if parts.projective {
                header.push(r.projective_label().into());
                row.push(r.projective.to_compact_string());
            }
            csv_line(&header) + &csv_line(&row)
        }
        Format::Latex => {
            let mut out = format!("% {}\n", r.name);
            if parts.affine {
                out += &format!("{} = {}\n", r.affine_label(), r.affine_latex());
            }
            if parts.projective {
                out += &format!("{} = {}\n", r.projective_label(), r.projective.to_latex());
            }
            out
        }
        Format::Text => {
            let mut out = format!("{} ({})\n", r.id, r.name);
            if parts.affine {
                out += &format!("{} = {}\n", r.affine_label(), r.affine_display());
            }
            if parts.projective {
                out += &format!("{} = {}\n", r.projective_label(), r.projective.to_compact_string());
            }
            out += &format!("predegree = {}\n", num(&r.predegree));
            out += &format!("#Aut = {}\n", r.aut);
            out += &format!("computed by: {}\n", r.provenance);
            for n in &r.notes {
                out += &format!("note: {n}\n");
            }
            out
        }
    }
}

fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .map(|r| r.get(c).map_or(0, |s| s.chars().count()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let last = r.len().saturating_sub(1);
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, s)| {
                if i == last {
                    s.clone()
                } else {
                    format!("{s:<w$}", w = widths[i])
                }
            })
            .collect();
        out += cells.join("  ").trim_end();
        out.push('\n');
    }
    out
}

pub fn table(t: &Table, format: Format) -> String {
    match format {
        Format::Json => {
            let rows: Vec<Value> = t
                .rows
                .iter()
                .map(|r| {
                    class_json(
                        r,
                        Parts {
                            affine: true,
                            projective: true,
                        },
                    )
                })
                .collect();
            let skipped: Vec<Value> = t
                .skipped
                .iter()
                .map(|(id, why)| json!({"id": id, "reason": why}))
                .collect();
            pretty(&json!({"rows": rows, "skipped": skipped}))
        }
        Format::Csv => {
            let mut out = csv_line(&["id", "name", "aut", "predegree", "p", "provenance"].map(String::from));
            for r in &t.rows {
                out += &csv_line(&[
                    r.id.clone(),
                    r.name.clone(),
                    r.aut.to_string(),
                    num(&r.predegree),
                    r.affine.to_compact_string(),
                    r.provenance.clone(),
                ]);
            }
            out
        }
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{l|l|l}\nCurve & $p_C$ & $\\#\\mathrm{Aut}$\\\\\\hline\n");
            for r in &t.rows {
                out += &format!("{} & ${}$ & {}\\\\\n", r.name, r.affine_latex(), r.aut);
            }
            out += "\\end{tabular}\n";
            for (id, why) in &t.skipped {
                out += &format!("% {id}: not computed, {why}\n");
            }
            out
        }
        Format::Text => {
            let mut rows = vec![["id", "#Aut", "predegree", "p"].map(String::from).to_vec()];
            for r in &t.rows {
                rows.push(vec![
                    r.id.clone(),
                    r.aut.to_string(),
                    num(&r.predegree),
                    r.affine_display(),
                ]);
            }
            let mut out = aligned(&rows);
            for (id, why) in &t.skipped {
                out += &format!("{id}: not computed, {why}\n");
            }
            out
        }
    }
}

const SECTIONS_PROVENANCE: &str = "quartic row integrated over G(3,5) by torus localization";

pub fn sections(rows: &[SectionRow], format: Format) -> String {
    match format {
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id,
                        "name": r.name,
                        "aut": r.aut.to_string(),
                        "count": num(&r.count),
                        "provenance": SECTIONS_PROVENANCE,
                    })
                })
                .collect();
            pretty(&json!({ "rows": rows }))
        }
        Format::Csv => {
            let mut out = csv_line(&["id", "name", "aut", "count"].map(String::from));
            for r in rows {
                out += &csv_line(&[r.id.clone(), r.name.clone(), r.aut.to_string(), num(&r.count)]);
            }
            out
        }
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{l|r}\nCurve & count\\\\\\hline\n");
            for r in rows {
                out += &format!("{} & ${}$\\\\\n", r.name, num(&r.count));
            }
            out + "\\end{tabular}\n"
        }
        Format::Text => {
            let mut table = vec![["id", "#Aut", "count", "name"].map(String::from).to_vec()];
            for r in rows {
                table.push(vec![r.id.clone(), r.aut.to_string(), num(&r.count), r.name.clone()]);
            }
            aligned(&table)
        }
    }
}

pub fn report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let checks: Vec<Value> = r
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "suite": c.suite,
                        "name": c.name,
                        "computed": c.computed,
                        "expected": c.expected,
                        "passed": c.passed,
                    })
                })
                .collect();
            let skipped: Vec<Value> = r
                .skipped
                .iter()
                .map(|(s, n, why)| json!({"suite": s, "name": n, "reason": why}))
                .collect();
            pretty(&json!({"passed": r.passed(), "checks": checks, "skipped": skipped}))
        }
        Format::Csv => {
            let mut out = csv_line(&["suite", "name", "passed", "computed", "expected"].map(String::from));
            for c in &r.checks {
                out += &csv_line(&[
                    c.suite.to_string(),
                    c.name.clone(),
                    c.passed.to_string(),
                    c.computed.clone(),
                    c.expected.clone(),
                ]);
            }
            out
        }
        Format::Text | Format::Latex => {
            let mut out = String::new();
            for c in &r.checks {
                out += &format!("{c}\n");
            }
            for (s, n, why) in &r.skipped {
                out += &format!("skip [{s}] {n}: {why}\n");
            }
            let failed = r.checks.iter().filter(|c| !c.passed).count();
            out += &format!(
                "{} checks, {} failed, {} skipped\n",
                r.checks.len(),
                failed,
                r.skipped.len()
            );
            out
        }
    }
}

pub fn tower(w: &WVariety) -> String {
    let d = &w.divisors;
    let text = |p: &orbitclass::Poly| p.to_compact_string();
    pretty(&json!({
        "tower": w.tower().describe(),
        "divisors": {
            "relative_canonical": text(&d.relative_canonical),
            "flex_divisor": text(&d.flex_divisor),
            "ramification": text(&d.ramification),
            "discriminant": text(&d.discriminant),
            "w_bn": text(&d.w_bn),
            "w_an": text(&d.w_an),
        }
    }))
}
