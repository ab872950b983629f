//! Local classes obtained by Porteous-type arguments on the first jet bundle
//! give the cusp and triple-point rows of the cubic table.
//!
//! A curve singular at a point: `c3(J^1 L) = u (u^2 - c1 u + c2)`.
//! Cusp or worse: also the Hessian `T -> T^dual (x) L` degenerates, class
//! `c1((det T^dual)^2 (x) L^2) = 2(u - c1)`.
//! Triple point: the Hessian vanishes, `c3(Sym^2 T^dual (x) L)`
//! `= (u - c1)(u^2 - 2 c1 u + 4 c2)`.
//! Tacnode or worse: over `P(T)` with kernel line `K`, the Hessian kills `K`
//! (`c2(K^dual (x) T^dual (x) L)`) and the cubic term vanishes on `K`
//! (`c1(K^dual^3 (x) L)`); pushing forward along `P(T)` gives the factor.

use orbitclass::chern::BundleClass;
use orbitclass::orbits::kazarian::{base_symbols, kazarian_class, KazarianLocalClass};
use orbitclass::orbits::multmap::concurrent_lines_class;
use orbitclass::orbits::{CubicRow, CurveSpec, Engine};
use orbitclass::tower::RingTower;
use orbitclass::verify::{verify, Suite};
use orbitclass::{Poly, SymbolTable};

const SINGULAR: &str = "u(u^2-c1u+c2)";

fn cusp() -> KazarianLocalClass {
    KazarianLocalClass::parse("A2", &format!("{SINGULAR}*2(u-c1)")).unwrap()
}

fn triple_point() -> KazarianLocalClass {
    KazarianLocalClass::parse("D4", &format!("{SINGULAR}(u-c1)(u^2-2c1u+4c2)")).unwrap()
}

/// Pushforward along `P(T)` of the kernel-line conditions, optionally with
/// the cubic-term condition.
fn kernel_line_factor(with_cubic: bool) -> Poly {
    let t = SymbolTable::new(&[("c1", 1), ("c2", 2), ("u", 1), ("z", 1)]).unwrap();
    let tangent = BundleClass::from_chern_symbols(&t, &["c1", "c2"]).unwrap();
    let tower = RingTower::new(&t).extend(&tangent, "z").unwrap();
    // K = O(-1), so K^dual (x) T^dual (x) L has roots z - a + u, z - b + u
    let hess = Poly::parse("(z+u)^2-c1(z+u)+c2", &t).unwrap();
    let cubic = Poly::parse("3z+u", &t).unwrap();
    let class = if with_cubic { &hess * &cubic } else { hess };
    let local = SymbolTable::new(&[("c1", 1), ("c2", 2), ("u", 1)]).unwrap();
    tower.integrate_to_base(&class).unwrap().embed(&local).unwrap()
}

fn tacnode() -> KazarianLocalClass {
    let singular = Poly::parse(SINGULAR, &orbitclass::orbits::kazarian::local_symbols()).unwrap();
    KazarianLocalClass::new("A3", &singular * &kernel_line_factor(true)).unwrap()
}

#[test]
fn kernel_line_pushforward_recovers_the_cusp_factor() {
    let cusp_factor = Poly::parse("2(u-c1)", kernel_line_factor(false).symbols()).unwrap();
    assert_eq!(kernel_line_factor(false), cusp_factor);
}

#[test]
fn tacnode_class_gives_conic_plus_tangent() {
    let got = kazarian_class(&tacnode(), 3).unwrap();
    assert_eq!(got, Poly::parse("-36c1^3-18c1c2", &base_symbols()).unwrap());
}

#[test]
fn cusp_class_gives_cuspidal_cubics() {
    let got = kazarian_class(&cusp(), 3).unwrap();
    assert_eq!(got, Poly::parse("24c1^2", &base_symbols()).unwrap());
}

#[test]
fn triple_point_class_gives_concurrent_lines() {
    let got = kazarian_class(&triple_point(), 3).unwrap();
    assert_eq!(got, concurrent_lines_class().unwrap());
}

#[test]
fn triple_point_factor_divides_the_d6_class() {
    let d6 = orbitclass::orbits::kazarian::builtin("D6").unwrap().polynomial;
    assert!(d6.div_exact(&triple_point().polynomial).is_ok());
}

#[test]
fn supplied_classes_enable_conditional_checks() {
    let engine = Engine::with_local_classes(vec![cusp(), triple_point()]).unwrap();
    let row = engine.class(&CurveSpec::Cubic(CubicRow::Cuspidal)).unwrap();
    assert_eq!(row.affine.to_compact_string(), "24c1^2");
    let report = verify(&engine, Suite::Cubics).unwrap();
    assert!(report.passed());
    assert_eq!(report.skipped.len(), 1, "the A3 row stays conditional");

    let engine = Engine::with_local_classes(vec![cusp(), triple_point(), tacnode()]).unwrap();
    let report = verify(&engine, Suite::Cubics).unwrap();
    assert!(report.passed());
    assert!(report.skipped.is_empty());
    let report = verify(&engine, Suite::Crosschecks).unwrap();
    assert!(report.passed());
    assert!(report.skipped.is_empty());
}

#[test]
fn shipped_local_class_file_matches_the_derivations() {
    let text = include_str!("../../../data/local_classes.json");
    let shipped = orbitclass::orbits::kazarian::load_local_classes(text).unwrap();
    let derived = [cusp(), tacnode(), triple_point()];
    assert_eq!(shipped.len(), derived.len());
    for want in derived {
        let got = shipped.iter().find(|c| c.name == want.name).unwrap();
        assert_eq!(got.polynomial, want.polynomial, "{}", want.name);
    }
}
