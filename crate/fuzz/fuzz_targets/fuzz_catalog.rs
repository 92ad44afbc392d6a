#![no_main]

use libfuzzer_sys::fuzz_target;

use cayley_broadcast::{Catalog, CatalogRecord};

// Catalog file contents. Structural parsing must be total (no panics) and
// parsed catalogs must re-render to lines that parse back unchanged.
// Checksums and replays are deliberately not run here; they belong to
// verification, not parsing.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Some(first) = s.lines().next() {
        let _ = CatalogRecord::parse_line(first);
    }
    if let Ok(catalog) = Catalog::parse(s) {
        let mut rendered = String::new();
        for rec in catalog.records() {
            rendered.push_str(&rec.to_line());
            rendered.push('\n');
        }
        let again = Catalog::parse(&rendered).expect("rendered catalog reparses");
        assert_eq!(again.len(), catalog.len());
    }
});
