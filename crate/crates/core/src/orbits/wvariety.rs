//! The incidence variety of (cubic, line, point) with the line meeting the
//! cubic to order at least 3 at the point, as an iterated projective bundle
//! `B <- P(V^dual) <- P(S) <- P(V_flex)`, and the two orbit classes of
//! degree `d` curves (a nodal cubic plus a multiple line) obtained from
//! divisors on it.
//!
//! Every divisor class below is derived from the tower and then compared
//! with an independently written closed form; a mismatch is an error.

use crate::chern::{jet_bundle, BundleClass};
use crate::error::{inconsistent, usage, Result};
use crate::orbits::kazarian::base_symbols;
use crate::orbits::multmap::{integrate_alpha, sym_dual_chern};
use crate::poly::{SymbolTable, Symbols};
use crate::tower::RingTower;
use crate::{Poly, Rational};

/// How the rank 2 bundle of points on the line is built over `P(V^dual)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubbundleConvention {
    /// `S = ker(V -> O(1))`, `c(S) = c(V) / (1 + H_line)`.
    Kernel,
    /// `c(S) = c(V^dual) / (1 + H_line)`; does not define a rank 2 bundle
    /// and is kept to show that the computation detects it.
    Dual,
}

/// Divisor classes on the incidence variety, in normal form.
#[derive(Debug, Clone)]
pub struct WVarietyDivisors {
    pub relative_canonical: Poly,
    pub flex_divisor: Poly,
    pub ramification: Poly,
    pub discriminant: Poly,
    pub w_bn: Poly,
    pub w_an: Poly,
}

#[derive(Debug, Clone)]
pub struct WVariety {
    tower: RingTower,
    pub divisors: WVarietyDivisors,
}

/// The two orbit classes for one curve degree.
#[derive(Debug, Clone, PartialEq)]
pub struct WVarietyClasses {
    pub o_an: Poly,
    pub o_bn: Poly,
}

pub const RELATIVE_CANONICAL: &str = "-7H_curve+H_line+H_point+7c1";
pub const FLEX_DIVISOR: &str = "H_curve-3H_point+3H_line-3c1";
pub const RAMIFICATION: &str = "3H_curve+H_line+H_point-3c1";
pub const W_BN: &str = "H_curve-H_line+2H_point";
pub const W_AN: &str = "7H_curve-3H_line-6c1";

/// `k H + a c1` is the class of a degree `k` invariant hypersurface in
/// `P(Sym^d V^dual)`; invariance under scaling fixes `a = -k d / 3`.
pub fn invariant_hypersurface(k: i64, d: i64, h: &Poly, c1: &Poly) -> Poly {
    &h.scale(&Rational::from_integer(k.into())) + &c1.scale(&Rational::new((-k * d).into(), 3.into()))
}

fn w_symbols() -> Symbols {
    SymbolTable::with_default_degrees(&["c1", "c2", "c3", "H_line", "H_point", "H_curve"]).expect("static table")
}

fn sum_relative_canonical(tower: &RingTower) -> Result<Poly> {
    let t = tower.symbols();
    let mut k = Poly::zero(t);
    for level in 0..tower.depth() {
        let e = tower.bundle(level);
        let r = Rational::from_integer((e.rank() as i64).into());
        k = &k - &(&e.c1() + &tower.hyperplane(level).scale(&r));
    }
    tower.normal_form(&k)
}

fn expect(tower: &RingTower, what: &str, derived: &Poly, quoted: &str) -> Result<()> {
    let q = tower.normal_form(&Poly::parse(quoted, tower.symbols())?)?;
    if &q != derived {
        return inconsistent(format!("{what}: derived {derived}, expected {q}"));
    }
    Ok(())
}

impl WVariety {
    pub fn build(convention: SubbundleConvention) -> Result<Self> {
        let t = w_symbols();
        let v = BundleClass::from_chern_symbols(&t, &["c1", "c2", "c3"])?;
        let l1 = RingTower::new(&t).extend(&v.dual(), "H_line")?;
        let h_line = Poly::var(&t, "H_line")?;
        let ambient = match convention {
            SubbundleConvention::Kernel => v.clone(),
            SubbundleConvention::Dual => v.dual(),
        };
        let s = ambient.ses_complement_reduced(&BundleClass::line(h_line.clone())?, |p| l1.normal_form(p))?;
        let l2 = l1.extend(&s, "H_point")?;
        let h_point = Poly::var(&t, "H_point")?;
        let omega = l2.normal_form(&(&(-&s.c1()) - &h_point.scale(&Rational::from_integer(2.into()))))?;

        let cubic_chern = sym_dual_chern(3, &t)?;
        let sym3 = BundleClass::from_total(10, cubic_chern.iter().fold(Poly::zero(&t), |acc, c| &acc + c))?;
        let three_p = h_point.scale(&Rational::from_integer(3.into()));
        let jets = jet_bundle(&three_p, 3, &omega)?;
        let v_flex = sym3.ses_complement_reduced(&jets, |p| l2.normal_form(p))?;
        let tower = l2.extend(&v_flex, "H_curve")?;
        let h_curve = Poly::var(&t, "H_curve")?;
        let c1 = Poly::var(&t, "c1")?;

        let relative_canonical = sum_relative_canonical(&tower)?;
        expect(
            &tower,
            "relative canonical class",
            &relative_canonical,
            RELATIVE_CANONICAL,
        )?;

        // fourth jet coordinate: the cubic meets the line to order 4
        let flex_divisor =
            tower.normal_form(&(&(&h_curve + &three_p) + &omega.scale(&Rational::from_integer(3.into()))))?;
        expect(&tower, "flex divisor", &flex_divisor, FLEX_DIVISOR)?;

        let canonical_target = &(-&sym3.c1()) - &h_curve.scale(&Rational::from_integer(10.into()));
        let ramification = tower.normal_form(&(&relative_canonical - &canonical_target))?;
        expect(&tower, "ramification divisor", &ramification, RAMIFICATION)?;

        // normal bundle of the point in the line: V/S twisted by O(1)
        let normal_c1 = &(&v.c1() - &s.c1()) + &h_point;
        let w_bn = tower.normal_form(&(&(&h_curve + &three_p) - &normal_c1))?;
        expect(&tower, "nodal-branch divisor", &w_bn, W_BN)?;
        let rh = tower.normal_form(&(&w_bn.scale(&Rational::from_integer(2.into())) + &flex_divisor))?;
        if rh != ramification {
            return inconsistent(format!(
                "Riemann-Hurwitz: ramification {ramification} != 2 W_BN + Z = {rh}"
            ));
        }

        let discriminant = tower.normal_form(&invariant_hypersurface(12, 3, &h_curve, &c1))?;
        let w_an = tower.normal_form(
            &(&(&discriminant - &w_bn.scale(&Rational::from_integer(3.into())))
                - &flex_divisor.scale(&Rational::from_integer(2.into()))),
        )?;
        expect(&tower, "flex-line divisor", &w_an, W_AN)?;

        Ok(WVariety {
            tower,
            divisors: WVarietyDivisors {
                relative_canonical,
                flex_divisor,
                ramification,
                discriminant,
                w_bn,
                w_an,
            },
        })
    }

    pub fn tower(&self) -> &RingTower {
        &self.tower
    }

    fn image(&self, d: u32) -> Result<Poly> {
        if d < 4 {
            return usage(format!("the incidence construction needs d >= 4, got {d}"));
        }
        let t = self.tower.symbols();
        Poly::parse(&format!("H_curve+{}H_line", d - 3), t)
    }

    /// Orbit-closure classes of the nodal cubic plus a `(d-3)`-fold line,
    /// the line through a flex (`o_an`) or tangent to a branch (`o_bn`).
    pub fn classes(&self, d: u32) -> Result<WVarietyClasses> {
        let image = self.image(d)?;
        let chern = sym_dual_chern(d as usize, self.tower.symbols())?;
        let push = |w: &Poly| integrate_alpha(&self.tower, &chern, &image, w)?.embed(&base_symbols());
        Ok(WVarietyClasses {
            o_an: push(&self.divisors.w_an)?,
            o_bn: push(&self.divisors.w_bn)?,
        })
    }

    /// Degrees of the two projectivized orbit closures: `int image^8 W`
    /// with all base classes set to zero. Returns `(an, bn)`.
    pub fn degrees(&self, d: u32) -> Result<(Rational, Rational)> {
        let image = self.image(d)?;
        let t = self.tower.symbols();
        let zero = Poly::zero(t);
        let kill = |p: &Poly| p.substitute(&[("c1", zero.clone()), ("c2", zero.clone()), ("c3", zero.clone())]);
        let power = image.pow(self.tower.fiber_dimension() as u32 - 1);
        let deg = |w: &Poly| -> Result<Rational> {
            let top = self.tower.integrate_to_base(&(&power * w))?;
            Ok(kill(&top)?.constant_term())
        };
        Ok((deg(&self.divisors.w_an)?, deg(&self.divisors.w_bn)?))
    }
}
