#![no_main]

use jordan_cone::CoordLinearMap;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(m) = CoordLinearMap::from_json(text) else { return };
    assert_eq!(m.matrix().nrows(), m.to_algebra().dim());
    assert_eq!(m.matrix().ncols(), m.from_algebra().dim());
    let back = CoordLinearMap::from_json(&m.to_json()).expect("round-trip parses");
    assert_eq!(back.matrix().entries(), m.matrix().entries());
    if m.from_algebra().dim() <= 64 {
        // Application is total or fails gracefully (it must never panic).
        let _ = m.apply(&m.from_algebra().unit());
    }
});
