#![no_main]

use libfuzzer_sys::fuzz_target;

use cayley_broadcast::{
    build_cayley_with_limit, simulate, validate_trace, BroadcastScheme, GeneratorSet, GroupSpec,
    SimOptions,
};

// Three sections split on newlines: group spec, generator list, scheme
// text. Parsed schemes must round-trip through their text form, and any
// trace the simulator emits must validate.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let mut parts = s.splitn(3, '\n');
    let (Some(spec_text), Some(gens_text), Some(scheme_text)) =
        (parts.next(), parts.next(), parts.next())
    else {
        return;
    };
    let Ok(spec) = GroupSpec::parse(spec_text) else { return };
    if spec.order() > 512 {
        return;
    }
    let Ok(gens) = GeneratorSet::parse(&spec, gens_text) else { return };
    let Ok(scheme) = BroadcastScheme::parse(&spec, gens.len(), scheme_text) else { return };

    let rendered = scheme.text(&spec);
    let again = BroadcastScheme::parse(&spec, gens.len(), &rendered).expect("rendered reparses");
    assert_eq!(scheme, again);

    let Ok(cg) = build_cayley_with_limit(&spec, &gens, 512) else { return };
    let opts = SimOptions {
        max_rounds: Some(32),
        ..Default::default()
    };
    if let Ok(trace) = simulate(&cg, &scheme, cg.identity_vertex(), opts) {
        assert_eq!(validate_trace(cg.graph(), &trace), None);
        for r in 0..=trace.rounds.len() as u32 {
            assert!((trace.informed_set(r).len() as u128) <= 1u128 << r.min(100));
        }
    }
});
