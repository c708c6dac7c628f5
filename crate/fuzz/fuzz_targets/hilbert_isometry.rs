#![no_main]

use jordan_cone::{HilbertIsometry, Ray};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(h) = HilbertIsometry::from_json(text) else { return };
    let back = HilbertIsometry::from_json(&h.to_json()).expect("round-trip parses");
    assert_eq!(back.epsilon(), h.epsilon());
    if h.domain().dim() <= 64 {
        // Accepted isometries act totally on interior rays.
        let r = Ray::of(&h.domain().unit()).expect("unit spans a ray");
        let img = h.apply_ray(&r).expect("total on rays");
        assert!(img.representative().coords().iter().all(|c| c.is_finite()));
    }
});
