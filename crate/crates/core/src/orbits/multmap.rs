//! Classes of loci of reducible curves, by pushing forward along
//! multiplication maps `prod P(Sym^di V^dual) -> P(Sym^d V^dual)`.
//!
//! The class of a point `[F]` of `P(E)` pulled back from the whole space is
//! `alpha(H) = sum_j c_(N-1-j)(E) H^j` (`N = rank E`); pulling `alpha` back
//! along a map and integrating over the source gives the map degree times
//! the class of the image.

use crate::chern::{elementary, int, roots_to_chern, BundleClass, ChernFrame};
use crate::error::{inconsistent, usage, Result};
use crate::orbits::kazarian::base_symbols;
use crate::poly::{SymbolTable, Symbols};
use crate::tower::RingTower;
use crate::{Poly, Rational};

/// `c_0, ..., c_N` of `Sym^d V^dual` for rank 3 `V`, in `c1, c2, c3`,
/// over `target` (which must contain those symbols).
pub fn sym_dual_chern(d: usize, target: &Symbols) -> Result<Vec<Poly>> {
    if d < 1 {
        return usage("symmetric power needs d >= 1");
    }
    let frame = ChernFrame::standard(3)?;
    let t = frame.table();
    let roots: Vec<Poly> = ["u", "v", "w"]
        .iter()
        .map(|r| Poly::var(t, r).map(|p| -&p))
        .collect::<Result<_>>()?;
    let vd = BundleClass::from_roots(t, roots)?;
    let s = vd.sym_power(d)?;
    let sroots = s.roots().expect("symmetric powers keep roots");
    (0..=s.rank())
        .map(|k| {
            let ek = elementary(t, sroots, k);
            roots_to_chern(&ek, &["u", "v", "w"], &["c1", "c2", "c3"])?.embed(target)
        })
        .collect()
}

/// `int alpha(image) * extra` over the whole tower, where `alpha` is built
/// from the Chern classes `chern = [c_0, ..., c_N]` of the target bundle.
pub fn integrate_alpha(tower: &RingTower, chern: &[Poly], image: &Poly, extra: &Poly) -> Result<Poly> {
    let n = chern.len() - 1;
    let mut acc = Poly::zero(tower.symbols());
    let mut power = tower.normal_form(extra)?;
    for j in 0..n {
        let c = chern[n - 1 - j].embed(tower.symbols())?;
        acc = &acc + &(&c * &power);
        if j + 1 < n {
            power = tower.normal_form(&(&power * image))?;
        }
    }
    tower.integrate_to_base(&acc)
}

/// Divides by a positive integer, requiring integral coefficients.
pub fn divide_integral(p: &Poly, by: u64, what: &str) -> Result<Poly> {
    let q = p.scale(&Rational::new(1.into(), (by as i64).into()));
    if !q.is_integral() {
        return inconsistent(format!("{what}: {p} is not divisible by {by}"));
    }
    Ok(q)
}

/// Orbit-closure class of the image of `prod P(Sym^si V^dual)` under
/// `(F_i) -> prod F_i^pi`, for `factors = [(si, pi)]`, divided by the map
/// degree. The result is a polynomial in `c1, c2, c3`.
pub fn mult_map_class(factors: &[(u32, u32)], map_degree: u64, total_d: u32) -> Result<Poly> {
    if factors.is_empty() || map_degree == 0 {
        return usage("need at least one factor and a positive map degree");
    }
    let sum: u32 = factors.iter().map(|(s, p)| s * p).sum();
    if sum != total_d {
        return usage(format!("factor degrees add up to {sum}, not {total_d}"));
    }
    let mut decl: Vec<(String, u32)> = vec![("c1".into(), 1), ("c2".into(), 2), ("c3".into(), 3)];
    decl.extend((0..factors.len()).map(|i| (format!("h{i}"), 1)));
    let t = SymbolTable::new(&decl)?;
    let mut tower = RingTower::new(&t);
    let mut image = Poly::zero(&t);
    for (i, &(s, p)) in factors.iter().enumerate() {
        let chern = sym_dual_chern(s as usize, &t)?;
        let total = chern.iter().fold(Poly::zero(&t), |acc, c| &acc + c);
        let bundle = BundleClass::from_total(chern.len() - 1, total)?;
        let name = format!("h{i}");
        tower = tower.extend(&bundle, &name)?;
        image = &image + &Poly::var(&t, &name)?.scale(&int(p as i64));
    }
    let target = sym_dual_chern(total_d as usize, &t)?;
    let pushed = integrate_alpha(&tower, &target, &image, &Poly::one(&t))?;
    divide_integral(&pushed, map_degree, "multiplication map")?.embed(&base_symbols())
}

/// Three concurrent lines: over `P(V)` (the common point, class `h`) the
/// linear forms vanishing there form `K = ker(V^dual -> O(1))` of rank 2;
/// three factors `P(K)` map to cubics by multiplication, with degree 6.
pub fn concurrent_lines_class() -> Result<Poly> {
    let t = SymbolTable::with_default_degrees(&["c1", "c2", "c3", "h", "a", "b", "c"])?;
    let v = BundleClass::from_chern_symbols(&t, &["c1", "c2", "c3"])?;
    let base = RingTower::new(&t).extend(&v, "h")?;
    let h = Poly::var(&t, "h")?;
    let k = v
        .dual()
        .ses_complement_reduced(&BundleClass::line(h)?, |p| base.normal_form(p))?;
    let mut tower = base;
    for name in ["a", "b", "c"] {
        tower = tower.extend(&k, name)?;
    }
    let image = Poly::parse("a+b+c", &t)?;
    let target = sym_dual_chern(3, &t)?;
    let pushed = integrate_alpha(&tower, &target, &image, &Poly::one(&t))?;
    divide_integral(&pushed, 6, "concurrent lines")?.embed(&base_symbols())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Poly {
        Poly::parse(s, &base_symbols()).unwrap()
    }

    #[test]
    fn first_chern_class_of_sym4() {
        let t = base_symbols();
        let ch = sym_dual_chern(4, &t).unwrap();
        assert_eq!(ch.len(), 16);
        assert_eq!(ch[1], c("-20c1"));
    }

    #[test]
    fn conic_plus_line() {
        assert_eq!(mult_map_class(&[(2, 1), (1, 1)], 1, 3).unwrap(), c("18c1^2+9c2"));
    }

    #[test]
    fn triangle() {
        assert_eq!(
            mult_map_class(&[(1, 1), (1, 1), (1, 1)], 6, 3).unwrap(),
            c("-(12c1^3+6c1c2+27c3)")
        );
    }

    #[test]
    fn concurrent() {
        assert_eq!(concurrent_lines_class().unwrap(), c("12c1^4+6c1^2c2+27c1c3"));
    }

    #[test]
    fn bad_arguments() {
        assert!(mult_map_class(&[(1, 1)], 1, 3).is_err());
        assert!(mult_map_class(&[(1, 1), (1, 1), (1, 1)], 0, 3).is_err());
    }

    #[test]
    fn non_integral_division_is_reported() {
        assert!(mult_map_class(&[(1, 1), (1, 1), (1, 1)], 7, 3).is_err());
    }
}
