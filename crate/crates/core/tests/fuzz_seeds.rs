//! Runs the checked-in fuzz seeds through the same round trips the fuzz
//! targets assert, so the seeds stay meaningful on stable toolchains.

use std::fs;
use std::path::PathBuf;

use tdc_core::family::FamilySpec;
use tdc_core::io::{
    decode_graph6, encode_graph6, parse_coloring, parse_edge_list, write_coloring, write_edge_list, GRAPH6_HEADER,
};
use tdc_core::report::{parse_report, serialize_report};

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

fn text(data: &[u8]) -> &str {
    std::str::from_utf8(data).unwrap()
}

#[test]
fn graph6_seeds() {
    let mut decoded = 0;
    for (_, data) in seeds("graph6_decode") {
        if let Ok(g) = decode_graph6(&data) {
            let body = data.strip_prefix(GRAPH6_HEADER.as_bytes()).unwrap_or(&data);
            assert_eq!(encode_graph6(&g).as_bytes(), body);
            decoded += 1;
        }
    }
    assert!(decoded >= 4);
}

#[test]
fn edge_list_seeds() {
    for (name, data) in seeds("edgelist_parse") {
        let g = parse_edge_list(text(&data)).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}

#[test]
fn coloring_seeds() {
    for (name, data) in seeds("coloring_json") {
        let c = parse_coloring(text(&data)).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_coloring(&write_coloring(&c)).unwrap(), c);
    }
}

#[test]
fn family_seeds() {
    for (name, data) in seeds("family_spec_parse") {
        let spec: FamilySpec = text(&data).parse().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
        assert_eq!(spec.build().unwrap().order(), spec.order());
    }
}

#[test]
fn report_seeds() {
    for (name, data) in seeds("report_json") {
        let r = parse_report(text(&data)).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_report(&serialize_report(&r)).unwrap(), r);
    }
}
