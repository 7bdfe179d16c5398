#![no_main]

use libfuzzer_sys::fuzz_target;
use tdc_core::family::FamilySpec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(spec) = text.parse::<FamilySpec>() else { return };
    assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
    if spec.order() <= 64 {
        let g = spec.build().unwrap();
        assert_eq!(g.order(), spec.order());
    }
});
