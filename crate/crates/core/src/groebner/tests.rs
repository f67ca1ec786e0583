use super::*;
use crate::io::parse_polynomial;
use proptest::prelude::*;

fn ring(names: &[&str]) -> Arc<Ring> {
    Ring::new(names.iter().copied()).unwrap()
}

fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
    parse_polynomial(s, r).unwrap()
}

fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|s| p(r, s)).collect()).unwrap()
}

fn engine() -> Engine {
    Engine::default()
}

fn assert_valid(gb: &GroebnerBasis) {
    assert!(satisfies_buchberger_criterion(gb.basis(), gb.order()).unwrap(), "criterion fails for {:?}", gb.basis());
    if gb.is_reduced() {
        assert!(is_reduced_basis(gb.basis(), gb.order()));
    }
    // same ideal both ways
    for g in gb.ideal().generators() {
        assert!(normal_form(g, gb.basis(), gb.order()).unwrap().is_zero());
    }
}

#[test]
fn s_polynomials() {
    let r = ring(&["x", "y"]);
    let f = p(&r, "x^2-y^2");
    assert!(s_polynomial(&f, &f, &MonomialOrder::Lex).unwrap().is_zero());
    let g = p(&r, "x-y");
    let s = s_polynomial(&f, &g, &MonomialOrder::Lex).unwrap();
    assert_eq!(s, p(&r, "x*y-y^2"));
    // independent check: S = f - x*g
    assert_eq!(&f - &(&p(&r, "x") * &g), s);
    let (a, b) = (p(&r, "x^2+y"), p(&r, "y^2+1"));
    let s = s_polynomial(&a, &b, &MonomialOrder::Lex).unwrap();
    assert!(normal_form(&s, &[a.clone(), b.clone()], &MonomialOrder::Lex).unwrap().is_zero());
    assert!(s_polynomial(&a, &Polynomial::zero(&r), &MonomialOrder::Lex).is_err());
}

#[test]
fn normal_forms() {
    let r = ring(&["x", "y", "z"]);
    let g = p(&r, "x^2*y-z");
    assert!(normal_form(&g, std::slice::from_ref(&g), &MonomialOrder::Lex).unwrap().is_zero());
    let basis = [p(&r, "x-y"), p(&r, "y^2+2*y*z+z^2")];
    assert_eq!(normal_form(&p(&r, "y+z"), &basis, &MonomialOrder::Lex).unwrap(), p(&r, "y+z"));
    assert!(normal_form(&p(&r, "(y+z)^2"), &basis, &MonomialOrder::Lex).unwrap().is_zero());
}

#[test]
fn division_identity() {
    let r = ring(&["x", "y", "z"]);
    let f = p(&r, "x^3*y-2*x*z^2+y^3-7");
    let divs = [p(&r, "x*y-z"), p(&r, "y^2-1/2*x")];
    for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
        let (qs, rem) = division(&f, &divs, &order).unwrap();
        let mut rebuilt = rem.clone();
        for (q, d) in qs.iter().zip(&divs) {
            rebuilt = &rebuilt + &(q * d);
        }
        assert_eq!(rebuilt, f);
        for t in rem.terms() {
            assert!(divs.iter().all(|d| !d.leading_term(&order).unwrap().monomial.divides(&t.monomial)));
        }
    }
}

#[test]
fn single_generator_is_its_own_basis() {
    let r = ring(&["x", "y"]);
    let gb = engine().groebner(&ideal(&r, &["x-y"]), &MonomialOrder::Lex).unwrap();
    assert_eq!(gb.basis(), &[p(&r, "x-y")]);
    assert_valid(&gb);
}

#[test]
fn monomial_ideal_is_already_a_basis() {
    let r = ring(&["x", "y"]);
    let gb = engine().groebner(&ideal(&r, &["x^2", "x*y", "y^2"]), &MonomialOrder::Lex).unwrap();
    assert_eq!(gb.basis(), &[p(&r, "y^2"), p(&r, "x*y"), p(&r, "x^2")]);
    assert_valid(&gb);
    let raw = buchberger(&ideal(&r, &["x^2", "x*y", "y^2"]), &MonomialOrder::Lex).unwrap();
    assert!(!raw.is_reduced());
    assert_valid(&raw);
}

fn intersection_ring() -> Arc<Ring> {
    ring(&["x0", "x1", "x2", "x3", "lambda1", "lambda2", "u0", "u1", "u2", "u3"])
}

const INTERSECTION_SYSTEM: [&str; 6] =
    ["x2^2-x3^2", "x0-x2", "-lambda2+u0", "u1", "-2*x2*lambda1+lambda2+u2", "2*x3*lambda1+u3"];

#[test]
fn intersection_system_basis_generates_the_listed_ideal() {
    let r = intersection_ring();
    let system = ideal(&r, &INTERSECTION_SYSTEM);
    let order = MonomialOrder::elimination(6, 10, BlockKind::DegRevLex);
    let gb = engine().groebner(&system, &order).unwrap();
    assert_valid(&gb);
    let listed = ideal(
        &r,
        &[
            "u1",
            "u0^2+2*u0*u2+u2^2-u3^2",
            "lambda2-u0",
            "2*x3*lambda1+u3",
            "x2*u3+x3*u0+x3*u2",
            "x2*u0+x2*u2+x3*u3",
            "2*x2*lambda1-u0-u2",
            "x2^2-x3^2",
            "x0-x2",
        ],
    );
    assert!(engine().ideal_equal(&gb.to_ideal(), &listed).unwrap());
}

#[test]
fn elimination_of_intersection_system() {
    let r = intersection_ring();
    let system = ideal(&r, &INTERSECTION_SYSTEM);
    let e = engine().elimination_ideal(&system, 6).unwrap();
    assert_eq!(e.ring().variables(), &["u0", "u1", "u2", "u3"]);
    let expected = ideal(e.ring(), &["u1", "u0^2+2*u0*u2+u2^2-u3^2"]);
    assert_eq!(e, expected);
    let lex = Engine::default().with_pure_lex_elimination(true).elimination_ideal(&system, 6).unwrap();
    assert_eq!(lex, expected);
}

#[test]
fn trivial_eliminations() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x*y-z", "y^2-x"]);
    let e = engine().elimination_ideal(&i, 0).unwrap();
    assert_eq!(e.generators(), engine().groebner(&i, &MonomialOrder::DegRevLex).unwrap().basis());
    let line = ideal(&ring(&["x", "y"]), &["x-y"]);
    assert!(engine().elimination_ideal(&line, 1).unwrap().is_zero());
    assert!(engine().elimination_ideal(&line, 2).is_err());
}

#[test]
fn reduce_basis_examples() {
    let r = ring(&["x", "y"]);
    let gb = GroebnerBasis {
        ideal: ideal(&r, &["x-y", "2*x-2*y"]),
        order: MonomialOrder::Lex,
        basis: vec![p(&r, "x-y"), p(&r, "2*x-2*y")],
        reduced: false,
    };
    let red = reduce_basis(&gb).unwrap();
    assert_eq!(red.basis(), &[p(&r, "x-y")]);
    assert_eq!(reduce_basis(&red).unwrap(), red);

    let r3 = ring(&["x", "y", "z"]);
    let a = engine().groebner(&ideal(&r3, &["x*y-y^2+x*z-y*z", "x^2-2*x*y+y^2"]), &MonomialOrder::DegRevLex).unwrap();
    let b = engine().groebner(&ideal(&r3, &["(x-y)*(y+z)", "(x-y)^2"]), &MonomialOrder::DegRevLex).unwrap();
    assert_eq!(a.basis(), b.basis());
}

#[test]
fn membership() {
    let r = ring(&["x", "y", "z"]);
    let d = ideal(&r, &["x-y", "y^2+2*y*z+z^2"]);
    assert!(ideal_membership(&Polynomial::zero(&r), &d).unwrap());
    assert!(ideal_membership(&p(&r, "x-y"), &d).unwrap());
    assert!(!ideal_membership(&p(&r, "y+z"), &d).unwrap());
    assert!(ideal_membership(&p(&r, "(y+z)^2*x"), &d).unwrap());
}

#[test]
fn equality_and_containment() {
    let r = ring(&["x0", "x1", "x2", "x3"]);
    let q = p(&r, "-7*x0^2+22*x0*x1-5*x1^2+1/3*x2^2");
    let scaled = q.scale(&Rational::new((-6).into(), 1.into()));
    assert!(ideal_equal(&Ideal::new(&r, vec![q]).unwrap(), &Ideal::new(&r, vec![scaled]).unwrap()).unwrap());
    let r3 = ring(&["x", "y", "z"]);
    assert!(ideal_contains(&ideal(&r3, &["x-y", "y^2+2*y*z+z^2"]), &ideal(&r3, &["x-y"])).unwrap());
    assert!(!ideal_contains(&ideal(&r3, &["x-y"]), &ideal(&r3, &["x-y", "y^2+2*y*z+z^2"])).unwrap());
    assert!(!ideal_equal(&ideal(&r3, &["x"]), &ideal(&r3, &["y"])).unwrap());
    assert!(ideal_equal(&Ideal::zero(&r3), &ideal(&r3, &["0"])).unwrap());
    assert!(ideal_equal(&ideal(&r3, &["x"]), &ideal(&ring(&["x", "y"]), &["x"])).is_err());
}

#[test]
fn radical_membership_examples() {
    let r = ring(&["x", "y", "z"]);
    let d = ideal(&r, &["x-y", "y^2+2*y*z+z^2"]);
    assert!(radical_membership(&p(&r, "y+z"), &d).unwrap());
    assert!(radical_membership(&p(&r, "z"), &ideal(&r, &["z^2", "x+y-z"])).unwrap());
    assert!(radical_membership(&p(&r, "x+y"), &ideal(&r, &["z^2", "x+y-z"])).unwrap());
    assert!(!radical_membership(&p(&r, "x"), &ideal(&r, &["y"])).unwrap());
    assert!(radical_contains(&d, &d).unwrap());
    let i = ideal(&r, &["z^2", "x+y-z"]);
    assert!(radical_contains(&i, &i).unwrap());
    assert!(!radical_contains(&ideal(&r, &["y"]), &ideal(&r, &["x"])).unwrap());
}

#[test]
fn step_limit_is_reported() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x^2+y*z-1", "y^2-x*z+2", "z^3-x*y"]);
    let err = Engine::default().with_step_limit(Some(1)).groebner(&i, &MonomialOrder::Lex).unwrap_err();
    assert_eq!(err, Error::StepLimit(1));
    let gb = engine().groebner(&i, &MonomialOrder::Lex).unwrap();
    assert_valid(&gb);
}

#[test]
fn weights_do_not_change_the_reduced_basis() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x^2+y*z-1", "y^2-x*z+2", "x*y-z"]);
    let order = MonomialOrder::elimination(1, 3, BlockKind::DegRevLex);
    let plain = engine().groebner(&i, &order).unwrap();
    let weighted = engine().groebner_weighted(&i, &order, Some(&[3, 1, 2])).unwrap();
    assert_eq!(plain.basis(), weighted.basis());
    assert_valid(&plain);
}

#[test]
fn cyclic_three() {
    let r = ring(&["a", "b", "c"]);
    let i = ideal(&r, &["a+b+c", "a*b+b*c+c*a", "a*b*c-1"]);
    for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
        let gb = engine().groebner(&i, &order).unwrap();
        assert_valid(&gb);
    }
    let lex = engine().groebner(&i, &MonomialOrder::Lex).unwrap();
    assert_eq!(lex.basis(), &[p(&r, "c^3-1"), p(&r, "b^2+b*c+c^2"), p(&r, "a+b+c")]);
}

fn small_poly(r: Arc<Ring>) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-3i64..=3, prop::collection::vec(0u16..3, 3)), 1..4).prop_map(move |ts| {
        Polynomial::from_terms(&r, ts.into_iter().map(|(c, e)| (Rational::from_integer(c.into()), Monomial::new(e)))).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduced_basis_is_canonical(gens in prop::collection::vec(small_poly(ring(&["x", "y", "z"])), 1..4),
                                  scales in prop::collection::vec(1i64..6, 4),
                                  rotate in 0usize..4) {
        let r = gens[0].ring().clone();
        let order = MonomialOrder::DegRevLex;
        let a = engine().groebner(&Ideal::new(&r, gens.clone()).unwrap(), &order).unwrap();
        let mut shuffled: Vec<Polynomial> = gens.iter().zip(&scales)
            .map(|(g, &s)| g.scale(&Rational::new((-s).into(), 7.into()))).collect();
        let len = shuffled.len();
        shuffled.rotate_left(rotate % len);
        let b = engine().groebner(&Ideal::new(&r, shuffled).unwrap(), &order).unwrap();
        prop_assert_eq!(a.basis(), b.basis());
        prop_assert!(satisfies_buchberger_criterion(a.basis(), &order).unwrap());
        prop_assert!(is_reduced_basis(a.basis(), &order));
    }

    #[test]
    fn normal_form_difference_is_in_the_ideal(gens in prop::collection::vec(small_poly(ring(&["x", "y", "z"])), 1..3),
                                              f in small_poly(ring(&["x", "y", "z"]))) {
        let r = f.ring().clone();
        let i = Ideal::new(&r, gens).unwrap();
        let gb = engine().groebner(&i, &MonomialOrder::Lex).unwrap();
        let rem = normal_form(&f, gb.basis(), gb.order()).unwrap();
        prop_assert!(engine().ideal_membership(&(&f - &rem), &i).unwrap());
        if engine().ideal_membership(&f, &i).unwrap() {
            prop_assert!(engine().radical_membership(&f, &i).unwrap());
        }
    }
}
