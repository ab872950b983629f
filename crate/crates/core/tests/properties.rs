use num_rational::Ratio;
use orbitclass::chern::BundleClass;
use orbitclass::localization::grassmann::chern_monomials;
use orbitclass::localization::grassmann_chern_numbers;
use orbitclass::localization::schubert::pieri_chern_number;
use orbitclass::orbits::points::{partitions, points_class, points_class_by_localization};
use orbitclass::tower::RingTower;
use orbitclass::{Poly, Rational, SparsePoly, SymbolTable, Symbols};
use proptest::prelude::*;

fn base() -> Symbols {
    SymbolTable::with_default_degrees(&["c1", "c2", "c3", "h", "k"]).unwrap()
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Homogeneous polynomial of weighted degree `deg` in `c1, c2, c3` with the
/// given coefficients (cycled).
fn homogeneous(t: &Symbols, deg: usize, coeffs: &[i64]) -> Poly {
    let mut p = Poly::zero(t);
    if deg == 0 {
        return Poly::from_int(t, coeffs.first().copied().unwrap_or(1));
    }
    for (i, m) in chern_monomials(3, deg).iter().enumerate() {
        let mut exps = vec![0u16; t.len()];
        for (j, &e) in m.iter().enumerate() {
            exps[j] = e as u16;
        }
        let c = coeffs[i % coeffs.len()];
        p = &p + &Poly::monomial(t, &exps, q(c)).unwrap();
    }
    p
}

fn bundle(t: &Symbols, rank: usize, coeffs: &[i64]) -> BundleClass {
    let mut total = Poly::one(t);
    for i in 1..=rank {
        total = &total + &homogeneous(t, i, &coeffs[i..]);
    }
    BundleClass::from_total(rank, total).unwrap()
}

/// `s_0, ..., s_n` with `s(t) c(t) = 1`.
fn segre(e: &BundleClass, n: usize) -> Vec<Poly> {
    let t = e.symbols();
    let mut s = vec![Poly::one(t)];
    for k in 1..=n {
        let mut acc = Poly::zero(t);
        for j in 1..=k.min(e.rank()) {
            acc = &acc - &(&e.chern(j) * &s[k - j]);
        }
        s.push(acc);
    }
    s
}

fn small_poly(t: &Symbols, terms: &[(i64, [u16; 3])]) -> Poly {
    let mut p = Poly::zero(t);
    for (c, e) in terms {
        let mut exps = vec![0u16; t.len()];
        exps[..3].copy_from_slice(e);
        p = &p + &Poly::monomial(t, &exps, q(*c)).unwrap();
    }
    p
}

fn term() -> impl Strategy<Value = (i64, [u16; 3])> {
    (-9i64..10, [0u16..3, 0u16..3, 0u16..2])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ring_axioms(a in prop::collection::vec(term(), 0..5),
                   b in prop::collection::vec(term(), 0..5),
                   c in prop::collection::vec(term(), 0..5)) {
        let t = base();
        let (a, b, c) = (small_poly(&t, &a), small_poly(&t, &b), small_poly(&t, &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn printing_is_deterministic_and_parses_back(a in prop::collection::vec(term(), 0..6)) {
        let t = base();
        let p = small_poly(&t, &a);
        let again = small_poly(&t, &a);
        prop_assert_eq!(p.to_compact_string(), again.to_compact_string());
        prop_assert_eq!(Poly::parse(&p.to_compact_string(), &t).unwrap(), p.clone());
        prop_assert_eq!(Poly::parse(&p.to_expr_string(), &t).unwrap(), p.clone());
        prop_assert_eq!(Poly::from_json(&p.to_json()).unwrap().embed(&t).unwrap(), p);
    }

    #[test]
    fn shift_substitution_round_trips(a in prop::collection::vec(term(), 0..5), d in 1i64..6) {
        let t = SymbolTable::with_default_degrees(&["c1", "c2", "c3", "H"]).unwrap();
        let p = small_poly(&t, &a);
        let h = Poly::var(&t, "H").unwrap().scale(&Rational::new(1.into(), d.into()));
        let c1 = Poly::var(&t, "c1").unwrap();
        let there = p.substitute(&[("c1", &c1 - &h)]).unwrap();
        let back = there.substitute(&[("c1", &c1 + &h)]).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn generic_layer_over_machine_rationals(a in -20i64..20, b in 1i64..20) {
        let t = SymbolTable::new(&[("x", 1)]).unwrap();
        let x = SparsePoly::<Ratio<i64>>::var(&t, "x").unwrap();
        let c = SparsePoly::constant(&t, Ratio::new(a, b));
        let p = &(&x + &c) * &(&x - &c);
        let want = &(&x * &x) - &(&c * &c);
        prop_assert_eq!(p, want);
    }

    #[test]
    fn normal_form_is_idempotent(r1 in 1usize..4, r2 in 1usize..3,
                                 coeffs in prop::collection::vec(-4i64..5, 12),
                                 cls in prop::collection::vec(-3i64..4, 6),
                                 eh in 0u32..6, ek in 0u32..5) {
        let t = base();
        let e = bundle(&t, r1, &coeffs);
        let l1 = RingTower::new(&t).extend(&e, "h").unwrap();
        let f = bundle(&t, r2, &coeffs[3..])
            .direct_sum(&BundleClass::line(Poly::var(&t, "h").unwrap()).unwrap())
            .unwrap()
            .map(|p| l1.normal_form(p))
            .unwrap();
        let tower = l1.extend(&f, "k").unwrap();
        let h = Poly::var(&t, "h").unwrap();
        let k = Poly::var(&t, "k").unwrap();
        let p = &(&h.pow(eh) * &k.pow(ek)) * &homogeneous(&t, 2, &cls);
        let once = tower.normal_form(&p).unwrap();
        prop_assert_eq!(tower.normal_form(&once).unwrap(), once.clone());
        prop_assert!(once.degree_in("h").unwrap() < r1 as u16);
        prop_assert!(once.degree_in("k").unwrap() < (r2 + 1) as u16);
    }

    #[test]
    fn hyperplane_powers_push_forward_to_segre_classes(r in 1usize..4,
                                                      coeffs in prop::collection::vec(-5i64..6, 8),
                                                      i in 0usize..5) {
        let t = base();
        let e = bundle(&t, r, &coeffs);
        let tower = RingTower::new(&t).extend(&e, "h").unwrap();
        let h = Poly::var(&t, "h").unwrap();
        let pushed = tower.integrate_to_base(&h.pow((r - 1 + i) as u32)).unwrap();
        prop_assert_eq!(pushed, segre(&e, i)[i].clone());
    }

    #[test]
    fn projection_formula(r in 1usize..4,
                          coeffs in prop::collection::vec(-5i64..6, 8),
                          a in prop::collection::vec(-3i64..4, 4),
                          eh in 0u32..6) {
        let t = base();
        let e = bundle(&t, r, &coeffs);
        let tower = RingTower::new(&t).extend(&e, "h").unwrap();
        let x = Poly::var(&t, "h").unwrap().pow(eh);
        let base_class = homogeneous(&t, 2, &a);
        let lhs = tower.integrate_to_base(&(&base_class * &x)).unwrap();
        let rhs = &base_class * &tower.integrate_to_base(&x).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn complement_of_a_direct_summand(r1 in 1usize..4, r2 in 1usize..4,
                                      coeffs in prop::collection::vec(-5i64..6, 8)) {
        let t = base();
        let e = bundle(&t, r1, &coeffs);
        let f = bundle(&t, r2, &coeffs[2..]);
        let sum = e.direct_sum(&f).unwrap();
        let back = sum.ses_complement(&f).unwrap();
        prop_assert_eq!(back.rank(), r1);
        prop_assert_eq!(back.total().clone(), e.total().clone());
    }

    #[test]
    fn localization_sums_are_polynomial(d in 3u32..9, pick in 0usize..64) {
        let parts = partitions(d, 3);
        let ms = &parts[pick % parts.len()];
        let ab = points_class_by_localization(ms).unwrap();
        prop_assert_eq!(ab.homogeneous_degree().unwrap_or(d - 3), d - 3);
        prop_assert_eq!(ab, points_class(ms).unwrap());
    }
}

#[test]
fn pieri_agrees_with_localization_on_small_grassmannians() {
    for (k, n) in [(1, 3), (2, 4), (3, 5), (2, 5), (3, 6)] {
        let dim = k * (n - k);
        let ms: Vec<Vec<u32>> = chern_monomials(k, dim);
        let loc = grassmann_chern_numbers(k, n, &ms).unwrap();
        for (m, v) in ms.iter().zip(loc) {
            let pieri = pieri_chern_number(k, n, m).unwrap();
            assert_eq!(v, Rational::from_integer(pieri), "G({k},{n}) {m:?}");
        }
    }
}
