#![no_main]

use jordan_cone::AlgebraDescriptor;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(alg) = AlgebraDescriptor::from_json(text) else { return };
    // Accepted descriptors satisfy the structural bounds...
    assert!(alg.rank() >= 2);
    assert!(alg.dim() >= alg.rank());
    // ...and survive a serialization round-trip unchanged.
    let back = AlgebraDescriptor::from_json(&alg.to_json()).expect("round-trip parses");
    assert_eq!(alg, back);
});
