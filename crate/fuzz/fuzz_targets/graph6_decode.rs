#![no_main]

use libfuzzer_sys::fuzz_target;
use tdc_core::io::{decode_graph6, decode_graph6_stream, encode_graph6, GRAPH6_HEADER};

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = decode_graph6(data) {
        // decoding is strict, so a decoded string re-encodes to itself
        let body = data.strip_prefix(GRAPH6_HEADER.as_bytes()).unwrap_or(data);
        assert_eq!(encode_graph6(&g).as_bytes(), body);
    }
    let _ = decode_graph6_stream(data);
});
