//! J_1(Omega^(1)) over the cusp y^2 = x^3, checked against the textbook
//! relations a, b, c on the five generators D(dx), D(dy), D(x dx), D(x dy), D(y dx).

use kahler_core::diffmod::{jq_presentation, omega_presentation};
use kahler_core::parse::{parse_poly, parse_ringspec};
use kahler_core::resolution::{free_resolution, minimalize, verdict, PdVerdict};
use kahler_core::{Presentation, RingSpec, Vector};

fn cusp() -> RingSpec {
    parse_ringspec("vars=[x,y]; weights=[2,3]; ideal=[y^2 - x^3]; assume_domain=true;").unwrap()
}

/// A vector on the six generators of our presentation; the sixth, D(y dy), is
/// absent from the five-generator form.
fn vec6(ring: &RingSpec, entries: [&str; 5]) -> Vector {
    let mut coords: Vec<_> = entries.iter().map(|e| parse_poly(e, ring).unwrap()).collect();
    coords.push(ring.zero());
    Vector::new(coords)
}

fn jets() -> Presentation {
    let ring = cusp();
    jq_presentation(&omega_presentation(&ring, 1), 1)
}

#[test]
fn generator_order_extends_five_generator_form() {
    let names: Vec<String> = jets().generators().iter().map(|g| g.to_string()).collect();
    assert_eq!(
        names,
        ["D1[d1(x)](1)", "D1[d1(y)](1)", "D1[d1(x)](x)", "D1[d1(y)](x)", "D1[d1(x)](y)", "D1[d1(y)](y)"]
    );
}

#[test]
fn relations_a_b_and_corrected_c_hold() {
    let ring = cusp();
    let j = jets();
    let free = Presentation::free_rank(&ring, 6);
    let a = vec6(&ring, ["-3*x^3", "2*x*y", "3*x^2", "-2*y", "0"]);
    let b = vec6(&ring, ["-x^3", "0", "3*x^2", "0", "-2*y"]);
    let c = vec6(&ring, ["3*x^2*y", "-x^3", "-6*x*y", "3*x^2", "0"]);
    for (name, v) in [("a", &a), ("b", &b), ("c", &c)] {
        assert!(free.span_contains(j.relations(), v), "relation {name} should hold");
    }
    // c as printed, with +x^3 on D(dy), does not
    let printed = vec6(&ring, ["3*x^2*y", "x^3", "-6*x*y", "3*x^2", "0"]);
    assert!(!free.span_contains(j.relations(), &printed));
}

#[test]
fn textbook_relations_miss_a_degree_nine_relation() {
    let ring = cusp();
    let j = jets();
    let free6 = Presentation::free_rank(&ring, 6);
    let d = vec6(&ring, ["0", "-2*y^2", "6*x*y", "0", "-3*x^2"]);
    assert!(free6.span_contains(j.relations(), &d));

    let a = vec6(&ring, ["-3*x^3", "2*x*y", "3*x^2", "-2*y", "0"]);
    let b = vec6(&ring, ["-x^3", "0", "3*x^2", "0", "-2*y"]);
    let c = vec6(&ring, ["3*x^2*y", "-x^3", "-6*x*y", "3*x^2", "0"]);
    assert!(!free6.span_contains(&[a, b, c], &d));
}

#[test]
fn minimal_resolution_does_not_stop() {
    let res = minimalize(&free_resolution(&jets(), 6).unwrap()).unwrap();
    assert_eq!(res.betti, vec![5, 4, 2, 2, 2, 2, 2]);
    assert!(!res.terminated);
    assert_eq!(verdict(&res), PdVerdict::AtLeast(6));
    assert!(res.is_complex());
}
