#![no_main]

use libfuzzer_sys::fuzz_target;

use cayley_broadcast::{build_cayley_with_limit, validate_generators, GeneratorSet, GroupSpec};

// First line: group spec. Rest: generator list. A set that builds must be
// inverse-closed, regular of degree |S|, and connected exactly when the
// validation report says it generates.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Some((head, rest)) = s.split_once('\n') else { return };
    let Ok(spec) = GroupSpec::parse(head) else { return };
    if spec.order() > 4096 {
        return;
    }
    let Ok(gens) = GeneratorSet::parse(&spec, rest.trim()) else { return };
    let report = validate_generators(&spec, &gens).expect("within the order limit");
    match build_cayley_with_limit(&spec, &gens, 4096) {
        Ok(cg) => {
            assert!(report.inverse_closed);
            assert_eq!(cg.is_connected(), report.generates);
            assert_eq!(cg.vertex_count() as u128, spec.order());
            for v in 0..cg.vertex_count() as u32 {
                assert_eq!(cg.graph().degree(v), gens.len());
            }
        }
        Err(_) => assert!(!report.inverse_closed),
    }
});
