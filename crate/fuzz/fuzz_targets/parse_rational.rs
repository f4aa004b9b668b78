#![no_main]
use libfuzzer_sys::fuzz_target;

use latsum::algebra::rational::format_scalar;
use latsum::json::parse_rational;

fuzz_target!(|data: &str| {
    if let Ok(x) = parse_rational(data) {
        assert_eq!(parse_rational(&format_scalar(&x)).expect("formatted rational parses"), x);
    }
});
