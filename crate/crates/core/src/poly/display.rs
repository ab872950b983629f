use std::fmt;

use super::{Coeff, Monomial, SparsePoly};

impl<C: Coeff> SparsePoly<C> {
    /// Human-readable form with juxtaposed factors, e.g. `9c1^3+12c1c2-11c3`.
    /// Terms appear in descending graded-lex order.
    pub fn to_compact_string(&self) -> String {
        self.render("")
    }

    /// Same as the compact form but with explicit `*` between factors; this is
    /// the form emitted for machine consumers (CSV) and it parses back.
    pub fn to_expr_string(&self) -> String {
        self.render("*")
    }

    /// LaTeX body (no surrounding `$`).
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = split_sign(&c.to_string());
            if neg {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let mono = self.latex_monomial(m);
            if mono.is_empty() {
                out.push_str(&latex_number(&mag));
            } else {
                if mag != "1" {
                    out.push_str(&latex_number(&mag));
                }
                out.push_str(&mono);
            }
        }
        out
    }

    fn render(&self, sep: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = split_sign(&c.to_string());
            if neg {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let mono = self.monomial_string(m, sep);
            if mono.is_empty() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&mono);
            } else {
                if mag.contains('/') {
                    out.push('(');
                    out.push_str(&mag);
                    out.push(')');
                } else {
                    out.push_str(&mag);
                }
                out.push_str(sep);
                out.push_str(&mono);
            }
        }
        out
    }

    fn monomial_string(&self, m: &Monomial, sep: &str) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.symbols.names[i].clone()),
                _ => parts.push(format!("{}^{}", self.symbols.names[i], e)),
            }
        }
        parts.join(sep)
    }

    fn latex_monomial(&self, m: &Monomial) -> String {
        let mut out = String::new();
        for (i, &e) in m.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            out.push_str(&latex_symbol(&self.symbols.names[i]));
            if e > 1 {
                out.push_str(&format!("^{{{e}}}"));
            }
        }
        out
    }
}

fn split_sign(s: &str) -> (bool, String) {
    match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s.to_string()),
    }
}

fn latex_number(s: &str) -> String {
    match s.split_once('/') {
        Some((n, d)) => format!("\\tfrac{{{n}}}{{{d}}}"),
        None => s.to_string(),
    }
}

fn latex_symbol(name: &str) -> String {
    if let Some((head, tail)) = name.split_once('_') {
        return format!("{head}_{{\\mathrm{{{tail}}}}}");
    }
    let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
    let (head, digits) = name.split_at(split);
    if digits.is_empty() {
        head.to_string()
    } else {
        format!("{head}_{{{digits}}}")
    }
}

impl<C: Coeff> fmt::Display for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact_string())
    }
}

#[cfg(test)]
mod tests {
    use crate::poly::SymbolTable;
    use crate::Poly;

    #[test]
    fn compact_and_expr_forms() {
        let t = SymbolTable::with_default_degrees(&["c1", "c2", "c3"]).unwrap();
        let p = Poly::parse("9*c1^3+12*c1*c2-11*c3", &t).unwrap();
        assert_eq!(p.to_compact_string(), "9c1^3+12c1c2-11c3");
        assert_eq!(p.to_expr_string(), "9*c1^3+12*c1*c2-11*c3");
        assert_eq!(p.to_latex(), "9c_{1}^{3}+12c_{1}c_{2}-11c_{3}");
    }

    #[test]
    fn fractions_and_signs() {
        let t = SymbolTable::new(&[("u", 1), ("H", 1)]).unwrap();
        let p = Poly::parse("u^2-u*H/2+H^2/16-1", &t).unwrap();
        assert_eq!(p.to_string(), "u^2-(1/2)uH+(1/16)H^2-1");
        assert_eq!(Poly::zero(&t).to_string(), "0");
    }

    #[test]
    fn round_trip_through_parser() {
        let t = SymbolTable::new(&[("H_curve", 1), ("H_line", 1), ("c1", 1)]).unwrap();
        let p = Poly::parse("-7H_curve^2*H_line+H_line/3-6c1", &t).unwrap();
        assert_eq!(Poly::parse(&p.to_string(), &t).unwrap(), p);
        assert_eq!(Poly::parse(&p.to_expr_string(), &t).unwrap(), p);
    }
}
