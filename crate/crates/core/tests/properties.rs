use proptest::prelude::*;

use kahler_core::diffmod::{delta_expand, omega_presentation, omega_relation_candidates, DeltaBasis};
use kahler_core::groebner::{ideal_groebner, syzygy_vectors, IdealReducer};
use kahler_core::parse::{parse_label, parse_poly, parse_presentation, parse_ringspec};
use kahler_core::structured::{parse_structured, presentation_to_json, to_string, Structured};
use kahler_core::{GeneratorLabel, Monomial, Poly, Presentation, Rational, RingSpec, Vector};

fn plane() -> RingSpec {
    RingSpec::polynomial(&["x", "y"])
}

fn cusp() -> RingSpec {
    parse_ringspec("vars=[x,y]; weights=[2,3]; ideal=[y^2 - x^3]; assume_domain=true;").unwrap()
}

fn node() -> RingSpec {
    parse_ringspec("vars=[x,y]; ideal=[y^2 - x^2 - x^3];").unwrap()
}

type Terms = Vec<(Vec<u32>, i64, i64)>;

fn terms(max_deg: u32, max_terms: usize) -> impl Strategy<Value = Terms> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, 2), -6i64..=6, 1i64..=4), 0..=max_terms)
}

fn build(ring: &RingSpec, t: &Terms) -> Poly {
    Poly::from_terms(
        ring.poly_ring(),
        t.iter()
            .map(|(e, n, d)| (Monomial::from_exponents(e), Rational::new((*n).into(), (*d).into()))),
    )
}

fn label() -> impl Strategy<Value = GeneratorLabel> {
    let leaf = prop_oneof![
        (0u32..10).prop_map(|i| GeneratorLabel::plain(format!("g{i}"))),
        (1u32..=3, 0u32..=2, 0u32..=2)
            .prop_filter("positive degree", |(_, a, b)| a + b > 0)
            .prop_map(|(q, a, b)| GeneratorLabel::delta(&plane(), q, &Monomial::from_exponents(&[a, b]))),
    ];
    leaf.prop_recursive(2, 8, 2, |inner| {
        prop_oneof![
            (1u32..=2, inner.clone(), 0u32..=2, 0u32..=2).prop_map(|(q, l, a, b)| GeneratorLabel::jet(
                &plane(),
                q,
                l,
                &Monomial::from_exponents(&[a, b])
            )),
            (inner.clone(), inner).prop_map(|(a, b)| GeneratorLabel::sym(a, b)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_axioms(a in terms(4, 5), b in terms(4, 5), c in terms(3, 4)) {
        let r = plane();
        let (p, q, s) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
        prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
    }

    #[test]
    fn polynomial_text_round_trips(a in terms(5, 6)) {
        let r = plane();
        let p = build(&r, &a);
        prop_assert_eq!(parse_poly(&p.to_string(), &r).unwrap(), p);
    }

    #[test]
    fn label_text_round_trips(l in label()) {
        prop_assert_eq!(parse_label(&l.to_string(), &plane()).unwrap(), l);
    }

    #[test]
    fn parsers_never_panic(s in "\\PC{0,60}") {
        let r = plane();
        let _ = parse_poly(&s, &r);
        let _ = parse_label(&s, &r);
        let _ = parse_ringspec(&s);
        let _ = parse_presentation(&s);
        let _ = parse_structured(&s);
    }

    #[test]
    fn parsers_never_panic_on_grammar_fragments(
        parts in prop::collection::vec(
            prop::sample::select(vec![
                "x", "y", "^", "2", "-", "+", "*", "/", "(", ")", "[", "]", ",", ";", "=",
                "vars", "ideal", "weights", "d2", "D1", "s", "0", "99999999999999999999",
            ]),
            0..25,
        )
    ) {
        let s = parts.concat();
        let r = plane();
        let _ = parse_poly(&s, &r);
        let _ = parse_label(&s, &r);
        let _ = parse_ringspec(&s);
    }

    #[test]
    fn groebner_basis_is_idempotent_and_contains_ideal(
        f in terms(3, 3), g in terms(3, 3), a in terms(2, 3), b in terms(2, 3)
    ) {
        let r = plane();
        let pr = r.poly_ring();
        let (f, g) = (build(&r, &f), build(&r, &g));
        let gb = ideal_groebner(pr, &[f.clone(), g.clone()]);
        prop_assert_eq!(ideal_groebner(pr, &gb), gb);
        let red = IdealReducer::new(pr, &[f.clone(), g.clone()]);
        let member = &(&build(&r, &a) * &f) + &(&build(&r, &b) * &g);
        prop_assert!(red.is_zero(&f) && red.is_zero(&g) && red.is_zero(&member));
    }

    #[test]
    fn syzygies_are_syzygies(entries in prop::collection::vec(terms(2, 3), 6)) {
        let r = cusp();
        let pr = r.poly_ring();
        let gens: Vec<Vector> = entries
            .chunks(2)
            .map(|c| Vector::new(vec![build(&r, &c[0]), build(&r, &c[1])]))
            .collect();
        for s in syzygy_vectors(pr, 2, &gens, r.ideal()).unwrap() {
            let mut acc = Vector::zero(pr, 2);
            for (c, g) in s.coords().iter().zip(&gens) {
                acc = acc.add(&g.scale(c));
            }
            prop_assert!(r.reduce_vector(&acc).is_zero());
        }
    }

    #[test]
    fn first_order_leibniz(g in terms(3, 3), h in terms(3, 3)) {
        for r in [plane(), cusp(), node()] {
            let (g, h) = (build(&r, &g), build(&r, &h));
            let lhs = delta_expand(&(&g * &h), &r, 1);
            let rhs = delta_expand(&h, &r, 1).scale(&g).add(&delta_expand(&g, &r, 1).scale(&h));
            prop_assert_eq!(lhs, r.reduce_vector(&rhs));
        }
    }

    #[test]
    fn delta_expansion_is_linear(g in terms(4, 4), h in terms(4, 4), n in -5i64..=5) {
        let r = cusp();
        let c = r.constant(Rational::from_integer(n.into()));
        let (g, h) = (build(&r, &g), build(&r, &h));
        for q in 1..=3 {
            let lhs = delta_expand(&(&(&c * &g) + &h), &r, q);
            let rhs = delta_expand(&g, &r, q).scale(&c).add(&delta_expand(&h, &r, q));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn delta_of_ideal_elements_vanishes_in_omega(a in terms(2, 3)) {
        let r = cusp();
        let f = r.ideal()[0].clone();
        let h = &build(&r, &a) * &f;
        let omega = omega_presentation(&r, 2);
        prop_assert!(omega.represents_zero(&delta_expand(&h, &r, 2)));
    }

    #[test]
    fn normal_form_is_idempotent(entries in prop::collection::vec(terms(3, 3), 5)) {
        let r = cusp();
        let omega = omega_presentation(&r, 2);
        let v = Vector::new(entries.iter().map(|t| build(&r, t)).collect());
        let nf = omega.normal_form(&v);
        prop_assert_eq!(omega.normal_form(&nf), nf.clone());
        prop_assert!(omega.represents_zero(&v.sub(&nf)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    // random hypersurfaces x^a + c*y^b
    #[test]
    fn relation_sets_agree(a in 2u32..=4, b in 2u32..=4, c in 1i64..=3, q in 1u32..=2) {
        let text = format!("vars=[x,y]; ideal=[x^{a} + {c}*y^{b}];");
        let r = parse_ringspec(&text).unwrap();
        let basis = DeltaBasis::new(&r, q);
        let free = Presentation::free(&r, basis.labels(&r), None);
        let small = omega_relation_candidates(&r, &basis, q - 1);
        let large = omega_relation_candidates(&r, &basis, q);
        prop_assert!(free.same_submodule(&small, &large));
    }

    #[test]
    fn structured_presentation_round_trips(a in 2u32..=4, b in 2u32..=4, q in 1u32..=2) {
        let text = format!("vars=[x,y]; ideal=[x^{a} - y^{b}];");
        let r = parse_ringspec(&text).unwrap();
        let p = omega_presentation(&r, q);
        match parse_structured(&to_string(&presentation_to_json(&p))).unwrap() {
            Structured::Presentation(back) => prop_assert_eq!(back, p),
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }
}
