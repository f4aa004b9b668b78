#![no_main]
use libfuzzer_sys::fuzz_target;

use latsum::json::{parse_polytope, polytope_to_json};

fuzz_target!(|data: &str| {
    if let Ok(p) = parse_polytope(data) {
        let again = parse_polytope(&polytope_to_json(&p).to_string()).expect("serialized polytope parses");
        assert_eq!(again.vertices(), p.vertices());
        assert_eq!(again.num_facets(), p.num_facets());
    }
});
