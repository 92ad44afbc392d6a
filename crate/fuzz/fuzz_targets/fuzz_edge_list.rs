#![no_main]

use libfuzzer_sys::fuzz_target;

use cayley_broadcast::Graph;

// Edge-list text. Accepted graphs must re-export to a stable canonical
// form. Vertex ids are pre-screened to keep per-exec allocation small;
// the parser itself enforces a larger hard cap.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if s.len() > 1 << 16 {
        return;
    }
    for line in s.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.split_whitespace().any(|tok| tok.len() > 5) {
            return;
        }
    }
    if let Ok(g) = Graph::parse_edge_list(s) {
        assert!(g.is_regular() || g.max_degree() > 0);
        let exported = g.to_edge_list();
        let again = Graph::parse_edge_list(&exported).expect("canonical export reparses");
        assert_eq!(again.to_edge_list(), exported);
        assert_eq!(again.edge_count(), g.edge_count());
        let _ = g.to_dot();
    }
});
