#![no_main]

use jordan_cone::{variation_seminorm, AffineVariationIsometry};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(t) = AffineVariationIsometry::from_json(text) else { return };
    let back = AffineVariationIsometry::from_json(&t.to_json()).expect("round-trip parses");
    assert_eq!(back.epsilon(), t.epsilon());
    if t.domain().dim() <= 64 {
        // Quotient distances are preserved by construction.
        let alg = t.domain().clone();
        let x = alg.unit();
        let y = alg.zero();
        let d = variation_seminorm(&x.sub(&y).expect("same algebra"));
        let img = t
            .apply(&x)
            .and_then(|a| t.apply(&y).and_then(|b| a.sub(&b)))
            .expect("total on elements");
        assert!((variation_seminorm(&img) - d).abs() <= 1e-6 * (1.0 + d));
    }
});
