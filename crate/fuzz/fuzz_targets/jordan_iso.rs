#![no_main]

use jordan_cone::{order_unit_norm, JordanIsomorphism};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(j) = JordanIsomorphism::from_json(text) else { return };
    assert_eq!(j.domain().dim(), j.codomain().dim());
    assert_eq!(j.domain().rank(), j.codomain().rank());
    let back = JordanIsomorphism::from_json(&j.to_json()).expect("round-trip parses");
    assert_eq!(back.domain(), j.domain());
    if j.domain().dim() <= 64 {
        // Unital: accepted isomorphisms carry the unit to the unit.
        let img = j.apply(&j.domain().unit()).expect("unit is in the domain");
        let defect = img.sub(&j.codomain().unit()).expect("same algebra");
        assert!(order_unit_norm(&defect) <= 1e-6);
    }
});
