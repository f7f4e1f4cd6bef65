use std::path::{Path, PathBuf};
use std::process::Command;

use distlat::{ArcSet, Poset, ReflexiveGraph};
use distlat_cli::format::{emit_graph, emit_poset, parse_graph, parse_poset, PosetFile};
use proptest::prelude::*;
use tempfile::TempDir;

const SAMPLE: &str = "poset 4\ncover 0 2\ncover 1 2\ncover 1 3\narc 0 2\narc 1 3\narcs all-loops\n";

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn distlat(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_distlat")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn construct_sample() {
    let dir = TempDir::new().unwrap();
    let input = file(&dir, "sample.txt", SAMPLE);
    let dot = dir.path().join("sample.dot");
    let (code, out, _) = distlat(&["construct", s(&input), "--dot", s(&dot)]);
    assert_eq!(code, 0);
    let g = parse_graph(&out).unwrap();
    assert_eq!((g.len(), g.edge_count()), (8, 24));
    assert!(out.contains("# vertex 5: {0,1,2}"));
    let drawing = std::fs::read_to_string(dot).unwrap();
    // D(P) has ten covers, all of them edges
    assert_eq!(drawing.matches("penwidth=4").count(), 10);
}

#[test]
fn recognize_exit_codes() {
    let dir = TempDir::new().unwrap();
    let star = file(&dir, "star.txt", &emit_graph(&ReflexiveGraph::star(4)));
    let (code, out, _) = distlat(&["recognize", s(&star)]);
    assert_eq!(code, 1);
    let v = json(&out);
    assert_eq!(v["verdict"], "no");
    assert!(v["reason"].as_str().unwrap().contains("degree one"));

    let path = file(&dir, "path.txt", &emit_graph(&ReflexiveGraph::path(6)));
    let (code, out, _) = distlat(&["recognize", s(&path), "--jobs", "3"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["lattice"]["covers"].as_array().unwrap().len(), 5);

    // K4 reduces to a single vertex; with no fallback that settles nothing
    let k = file(&dir, "k.txt", "graph 4\nedge 0 1\nedge 0 2\nedge 1 2\nedge 2 3\nedge 0 3\nedge 1 3\n");
    let (code, out, _) = distlat(&["recognize", s(&k), "--oracle-fallback", "0"]);
    assert_eq!((code, json(&out)["verdict"].as_str().unwrap()), (3, "inconclusive"));
}

#[test]
fn verify_sample() {
    let dir = TempDir::new().unwrap();
    let input = file(&dir, "sample.txt", SAMPLE);
    let (code, out, _) = distlat(&["verify", "--poset", s(&input), "--majority"]);
    assert_eq!(code, 0);
    let v = json(&out);
    for key in ["compatible", "distributive", "min_max_identity", "vee_identity", "hasse_subgraph", "majority_polymorphism", "arcs_recovered"] {
        assert_eq!(v[key], true, "{key}");
    }
}

#[test]
fn verify_graph_and_lattice_files() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "p3.txt", "graph 3\nedge 0 1\nedge 1 2\n");
    let good = file(&dir, "chain.txt", "poset 3\ncover 0 1\ncover 1 2\n");
    let twisted = file(&dir, "twisted.txt", "poset 3\ncover 0 2\ncover 2 1\n");
    let antichain = file(&dir, "anti.txt", "poset 3\n");
    assert_eq!(distlat(&["verify", "--graph", s(&g), "--lattice", s(&good)]).0, 0);
    let (code, out, _) = distlat(&["verify", "--graph", s(&g), "--lattice", s(&twisted)]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["counterexample"]["operation"], "meet");
    let (code, _, err) = distlat(&["verify", "--graph", s(&g), "--lattice", s(&antichain)]);
    assert_eq!(code, 2);
    assert!(err.contains("not the minimum"), "{err}");
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad.txt", "graph 2\nedge 0 5\n");
    let (code, out, err) = distlat(&["recognize", s(&bad)]);
    assert_eq!((code, out.as_str()), (2, ""));
    assert!(err.contains("bad.txt:2:8"), "{err}");
    let sample = file(&dir, "sample.txt", SAMPLE);
    assert_eq!(distlat(&["recognize", s(&sample)]).0, 2);
    assert_eq!(distlat(&["construct", s(&dir.path().join("missing.txt"))]).0, 2);
    assert_eq!(distlat(&["frobnicate"]).0, 2);
    let big = file(&dir, "big.txt", &emit_graph(&ReflexiveGraph::path(7)));
    assert_eq!(distlat(&["oracle", s(&big)]).0, 2);
    let small = file(&dir, "small.txt", &emit_graph(&ReflexiveGraph::path(3)));
    assert_eq!(distlat(&["oracle", s(&small), "--max-n", "2"]).0, 2);
}

#[test]
fn embed_covers() {
    let dir = TempDir::new().unwrap();
    let input = file(&dir, "sample.txt", SAMPLE);
    let (code, out, _) = distlat(&["embed", s(&input), "--cover", "induced"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["induced"], true);
    assert_eq!(v["removed_vertices"].as_array().unwrap().len(), 2);
    assert_eq!(v["coordinates"].as_array().unwrap().len(), 8);

    let cover = file(&dir, "cover.txt", "chain 0 2\nchain 1 3\n");
    let (code, out, _) = distlat(&["embed", s(&input), "--cover", "file", "--cover-file", s(&cover)]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["induced"], false);
    assert_eq!(v["tight"], true);
    assert_eq!(v["removed_vertices"], json(r#"[{"alpha":2,"i":0,"beta":0,"j":1}]"#));

    let (code, out, _) = distlat(&["embed", s(&input)]);
    assert_eq!(code, 0);
    assert!(json(&out)["contractions"].is_array());
    let a = distlat(&["embed", s(&input), "--cover", "random", "--seed", "5"]).1;
    let b = distlat(&["embed", s(&input), "--cover", "random", "--seed", "5"]).1;
    assert_eq!(a, b);
}

#[test]
fn reduce_and_oracle() {
    let dir = TempDir::new().unwrap();
    let k = file(&dir, "k.txt", "graph 3\nedge 0 1\nedge 1 2\nedge 0 2\n");
    let (code, out, _) = distlat(&["reduce", s(&k)]);
    assert_eq!(code, 0);
    assert!(out.contains("# class 0: 0 1 2"));
    assert_eq!(parse_graph(&out).unwrap().len(), 1);

    let p = file(&dir, "p3.txt", &emit_graph(&ReflexiveGraph::path(3)));
    let (code, out, _) = distlat(&["oracle", s(&p), "--jobs", "2"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out).as_array().unwrap().len(), 2);
    let all = json(&distlat(&["oracle", s(&k), "--all"]).1);
    assert_eq!(all.as_array().unwrap().len(), 6);
}

fn arb_graph() -> impl Strategy<Value = ReflexiveGraph> {
    (0usize..12).prop_flat_map(|n| {
        proptest::collection::vec((0..n.max(1), 0..n.max(1)), 0..30).prop_map(move |pairs| {
            let edges = pairs.into_iter().filter(|(u, v)| u != v && *u < n && *v < n);
            ReflexiveGraph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_poset_file() -> impl Strategy<Value = PosetFile> {
    (0usize..8, any::<u64>()).prop_map(|(n, seed)| {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let poset: Poset = distlat_cli::corpus::random_poset(&mut rng, n);
        let arcs: ArcSet = distlat_cli::corpus::random_arcs(&mut rng, &poset);
        PosetFile { poset, arcs }
    })
}

proptest! {
    #[test]
    fn graph_text_round_trips(g in arb_graph()) {
        prop_assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
    }

    #[test]
    fn poset_text_round_trips(f in arb_poset_file()) {
        let text = emit_poset(&f);
        prop_assert_eq!(parse_poset(&text).unwrap(), f);
    }
}
