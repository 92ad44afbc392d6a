#![no_main]

use libfuzzer_sys::fuzz_target;

use cayley_broadcast::GroupSpec;

// First line: group spec. Remaining lines: element literals. Accepted
// elements must be members and must round-trip through their canonical
// literal; membership lets us exercise multiply/inverse safely.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let mut lines = s.lines();
    let Some(head) = lines.next() else { return };
    let Ok(spec) = GroupSpec::parse(head) else { return };

    let mut parsed = Vec::new();
    for line in lines.take(16) {
        if let Ok(e) = spec.parse_element(line) {
            assert!(spec.contains(&e));
            let literal = spec.element_literal(&e);
            assert_eq!(spec.parse_element(&literal).expect("literal reparses"), e);
            parsed.push(e);
        }
    }
    for a in &parsed {
        let inv = spec.inverse(a).expect("members invert");
        assert_eq!(spec.multiply(a, &inv).unwrap(), spec.identity());
        for b in &parsed {
            let ab = spec.multiply(a, b).expect("members multiply");
            assert!(spec.contains(&ab));
        }
    }
});
