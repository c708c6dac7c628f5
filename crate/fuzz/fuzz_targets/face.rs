#![no_main]

use jordan_cone::{sampled_face_diameter, FaceDescriptor};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(face) = FaceDescriptor::from_json(text) else { return };
    // Accepted faces carry orthogonal nonzero projections.
    let prod = face
        .p()
        .element()
        .jordan_product(face.q().element())
        .expect("same algebra");
    assert!(prod.max_abs_coord() <= 1e-6);
    let back = FaceDescriptor::from_json(&face.to_json()).expect("round-trip parses");
    assert_eq!(back.p().rank(), face.p().rank());
    if face.algebra().dim() <= 64 {
        let d = sampled_face_diameter(&face, 4, 9).expect("diameter is total");
        assert!((0.0..=4.0 + 1e-6).contains(&d));
    }
});
