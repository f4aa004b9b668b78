#![no_main]
use libfuzzer_sys::fuzz_target;

use latsum::json::{parse_phi, phi_to_json};

fuzz_target!(|data: &str| {
    if let Ok(w) = parse_phi(data) {
        let again = parse_phi(&phi_to_json(&w).to_string()).expect("serialized weight parses");
        assert_eq!(again, w);
    }
});
