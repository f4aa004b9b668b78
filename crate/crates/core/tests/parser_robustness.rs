//! Replays the fuzz seeds and mutated variants of them through the parsers.

use std::fs;
use std::path::{Path, PathBuf};

use proptest::prelude::*;

use latsum::algebra::rational::format_scalar;
use latsum::json::{parse_phi, parse_poly, parse_polytope, parse_rational, phi_to_json, poly_to_json, polytope_to_json};

fn seed_dir(target: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target)
}

fn seeds(target: &str) -> Vec<String> {
    let mut files: Vec<PathBuf> = fs::read_dir(seed_dir(target))
        .expect("seed directory exists")
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    files.iter().map(|f| fs::read_to_string(f).unwrap()).collect()
}

fn polytope_round_trip(data: &str) {
    if let Ok(p) = parse_polytope(data) {
        let again = parse_polytope(&polytope_to_json(&p).to_string()).unwrap();
        assert_eq!(again.vertices(), p.vertices());
        assert_eq!(again.num_facets(), p.num_facets());
    }
}

fn phi_round_trip(data: &str) {
    if let Ok(w) = parse_phi(data) {
        assert_eq!(parse_phi(&phi_to_json(&w).to_string()).unwrap(), w);
    }
}

fn poly_round_trip(data: &str) {
    if let Ok(p) = parse_poly(data) {
        assert_eq!(parse_poly(&poly_to_json(&p).to_string()).unwrap(), p);
    }
}

fn rational_round_trip(data: &str) {
    if let Ok(x) = parse_rational(data) {
        assert_eq!(parse_rational(&format_scalar(&x)).unwrap(), x);
    }
}

#[test]
fn seeds_replay() {
    type Check = fn(&str);
    let cases: [(&str, Check); 4] = [
        ("parse_polytope", polytope_round_trip),
        ("parse_phi", phi_round_trip),
        ("parse_poly", poly_round_trip),
        ("parse_rational", rational_round_trip),
    ];
    for (target, check) in cases {
        let found = seeds(target);
        assert!(found.len() >= 3, "{target} has {} seeds", found.len());
        for s in &found {
            check(s);
        }
    }
    assert!(seeds("parse_polytope").iter().any(|s| parse_polytope(s).is_ok()));
    assert!(seeds("parse_polytope").iter().any(|s| parse_polytope(s).is_err()));
}

/// A seed with one byte range replaced by arbitrary text.
fn mutated(target: &'static str) -> impl Strategy<Value = String> {
    let all = seeds(target);
    (0..all.len(), any::<prop::sample::Index>(), 0usize..6, "[\\[\\]{}\",:0-9/ -]{0,6}")
        .prop_map(move |(i, at, len, insert)| {
            let s = &all[i];
            let start = at.index(s.len() + 1);
            let end = (start + len).min(s.len());
            let (start, end) = (floor_char(s, start), floor_char(s, end));
            format!("{}{}{}", &s[..start], insert, &s[end..])
        })
}

fn floor_char(s: &str, mut i: usize) -> usize {
    while !s.is_char_boundary(i) {
        i -= 1;
    }
    i
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn mutated_polytopes(s in mutated("parse_polytope")) {
        polytope_round_trip(&s);
    }

    #[test]
    fn mutated_weights(s in mutated("parse_phi")) {
        phi_round_trip(&s);
    }

    #[test]
    fn mutated_polynomials(s in mutated("parse_poly")) {
        poly_round_trip(&s);
    }

    #[test]
    fn arbitrary_rationals(s in "\\PC{0,40}") {
        rational_round_trip(&s);
    }

    #[test]
    fn arbitrary_text(s in "\\PC{0,64}") {
        polytope_round_trip(&s);
        phi_round_trip(&s);
        poly_round_trip(&s);
    }
}
