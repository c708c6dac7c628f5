#![no_main]

use jordan_cone::{dual_norm, orthogonal_decomposition, Functional};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(phi) = Functional::from_json(text) else { return };
    let back = Functional::from_json(&phi.to_json()).expect("round-trip parses");
    assert_eq!(phi.representer().coords(), back.representer().coords());
    if phi.representer().algebra().dim() <= 64 {
        let n = dual_norm(&phi);
        assert!(n.is_finite() && n >= 0.0);
        // The split must always exist and preserve the total norm.
        let (plus, minus) = orthogonal_decomposition(&phi).expect("total on functionals");
        let total = dual_norm(&plus) + dual_norm(&minus);
        assert!((total - n).abs() <= 1e-6 * (1.0 + n));
    }
});
