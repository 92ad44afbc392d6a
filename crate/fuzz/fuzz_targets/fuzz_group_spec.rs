#![no_main]

use libfuzzer_sys::fuzz_target;

use cayley_broadcast::GroupSpec;

// Group-spec grammar: anything that parses must render to canonical text
// that parses back to the same spec.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = GroupSpec::parse(s) {
        let canonical = spec.to_string();
        let again = GroupSpec::parse(&canonical).expect("canonical text must parse");
        assert_eq!(spec, again);
        let _ = spec.order();
        let _ = spec.identity();
    }
});
