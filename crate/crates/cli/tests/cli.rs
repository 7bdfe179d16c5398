use std::fs;
use std::path::Path;

use tdc_cli::run;
use tdc_core::family::FamilySpec;
use tdc_core::io::encode_graph6;
use tdc_core::report::parse_report;

fn tdc(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("tdc").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_central_path() {
    let (code, out, _) = tdc(&["solve", "--family", "path:8", "--central", "--invariant", "tdc"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("tdc = 6\n"), "{out}");
}

#[test]
fn solve_json_witness_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let col = dir.path().join("c.json");
    let (code, out, _) = tdc(&[
        "solve", "--family", "wheel:4", "--central", "--json", "--coloring", path_str(&col),
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], 6);
    let (code, out, _) = tdc(&["verify", "--family", "wheel:4", "--central", "--coloring", path_str(&col)]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("pass"));
}

#[test]
fn other_invariants() {
    let (code, out, _) = tdc(&["solve", "--family", "cycle:5", "--invariant", "chi"]);
    assert_eq!((code, out.lines().next().unwrap()), (0, "chi = 3"));
    let (code, out, _) = tdc(&["solve", "--family", "complete:5", "--central", "--invariant", "gammat"]);
    assert_eq!((code, out.lines().next().unwrap()), (0, "gammat = 7"));
    let (code, out, _) = tdc(&["solve", "--family", "path:5", "--central", "--complement"]);
    assert_eq!((code, out.lines().next().unwrap()), (0, "tdc = 5"));
}

#[test]
fn report_complete_five() {
    let (code, out, _) = tdc(&["report", "--family", "complete:5", "--json"]);
    assert_eq!(code, 0);
    let r = parse_report(out.trim()).unwrap();
    let e = r.entry("thm2.5").unwrap();
    assert_eq!((e.lhs.clone(), e.rhs.clone(), e.holds), (vec![8], vec![8], true));
    assert_eq!(r.entry("formula").unwrap().rhs, vec![8]);
}

#[test]
fn verify_rejects_improper_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.g6");
    let c = dir.path().join("c.json");
    fs::write(&g, "Bg\n").unwrap();
    fs::write(&c, r#"{"assignment":[0,0,1]}"#).unwrap();
    let (code, out, _) = tdc(&["verify", "--graph", path_str(&g), "--coloring", path_str(&c)]);
    assert_eq!(code, 1);
    assert!(out.contains("edge 0 1"), "{out}");

    fs::write(&c, r#"{"assignment":[0,1,0]}"#).unwrap();
    let (code, _, _) = tdc(&["verify", "--graph", path_str(&g), "--coloring", path_str(&c)]);
    assert_eq!(code, 0);
    // classes must be contiguous
    fs::write(&c, r#"{"assignment":[0,2,0]}"#).unwrap();
    let (code, _, err) = tdc(&["verify", "--graph", path_str(&g), "--coloring", path_str(&c)]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn central_roles_and_edge_list_input() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("p3.txt");
    fs::write(&g, "3\n0 1\n1 2\n").unwrap();
    let (code, out, _) = tdc(&["central", "--graph", path_str(&g)]);
    assert_eq!(code, 0);
    assert!(out.contains("# 3 subdiv:0,1\n") && out.contains("# 4 subdiv:1,2\n"), "{out}");
    assert!(out.contains("\n5\n"));

    let out_path = dir.path().join("c.g6");
    let (code, _, _) = tdc(&["central", "--graph", path_str(&g), "--to", "graph6", "-o", path_str(&out_path)]);
    assert_eq!(code, 0);
    let cp3 = tdc_core::central::central(&FamilySpec::Path(3).build().unwrap());
    assert_eq!(fs::read_to_string(&out_path).unwrap(), format!("{}\n", encode_graph6(cp3.result())));
}

#[test]
fn construct_and_formula() {
    let (code, out, _) = tdc(&["construct", "--family", "bipartite:3,5", "--central"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# classes: 8\n"));
    let (code, out, _) = tdc(&["construct", "--family", "path:3", "--to", "graph6"]);
    assert_eq!((code, out.as_str()), (0, "Bg\n"));
    let (code, out, _) = tdc(&["formula", "--family", "multipartite:2,2,2", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(serde_json::from_str::<serde_json::Value>(&out).unwrap()["value"], 7);
    let (code, out, _) = tdc(&["formula", "--family", "complete:4", "--invariant", "gammat"]);
    assert_eq!((code, out.as_str()), (0, "gamma_t(C(G)) = 5 for G = complete:4\n"));
}

#[test]
fn sweep_preserves_input_order() {
    let dir = tempfile::tempdir().unwrap();
    let stream = dir.path().join("s.g6");
    let names = ["C~", "Bg", "Dhc", "A_", "C]"];
    fs::write(&stream, names.join("\n")).unwrap();
    let (code, out, _) = tdc(&["sweep", "--graph", path_str(&stream), "--threads", "3", "--budget-secs", "5"]);
    assert_eq!(code, 0, "{out}");
    let got: Vec<String> = out.lines().map(|l| parse_report(l).unwrap().graph.graph6).collect();
    assert_eq!(got, names);
}

#[test]
fn oracle_check_small() {
    let (code, out, _) = tdc(&["oracle-check", "--min-n", "2", "--max-n", "4", "--central"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with(", 0 mismatches\n"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(tdc(&[]).0, 2);
    assert_eq!(tdc(&["solve"]).0, 2);
    assert_eq!(tdc(&["solve", "--family", "path:x"]).0, 2);
    assert_eq!(tdc(&["solve", "--family", "path:4", "--invariant", "omega"]).0, 2);
    assert_eq!(tdc(&["solve", "--family", "path:4", "--graph", "g.g6"]).0, 2);
    assert_eq!(tdc(&["formula", "--family", "empty:4"]).0, 2);
    assert_eq!(tdc(&["solve", "--family", "complete:12", "--central"]).0, 2);

    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("bad.txt");
    fs::write(&g, "3\n0 1\n1 5\n").unwrap();
    let (code, _, err) = tdc(&["solve", "--graph", path_str(&g)]);
    assert_eq!(code, 2);
    assert!(err.contains("byte 8"), "{err}");
}

#[test]
fn help_exits_0() {
    let (code, out, _) = tdc(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("oracle-check"));
}
