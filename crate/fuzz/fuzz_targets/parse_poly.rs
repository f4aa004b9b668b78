#![no_main]
use libfuzzer_sys::fuzz_target;

use latsum::json::{parse_poly, poly_to_json};

fuzz_target!(|data: &str| {
    if let Ok(p) = parse_poly(data) {
        let again = parse_poly(&poly_to_json(&p).to_string()).expect("serialized polynomial parses");
        assert_eq!(again, p);
    }
});
