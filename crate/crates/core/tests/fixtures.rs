use std::path::PathBuf;

use hyperzeta::generate::*;
use hyperzeta::{parse_hypergraph, Hypergraph};

fn load(name: &str) -> Hypergraph {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    parse_hypergraph(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

#[test]
fn fixture_files_match_constructors() {
    let cases: Vec<(&str, Hypergraph)> = vec![
        ("bowtie.hg", bowtie()),
        ("hub.hg", hub()),
        ("prism.hg", prism().as_hypergraph().clone()),
        ("k3.hg", complete_graph(3).as_hypergraph().clone()),
        ("k4.hg", complete_graph(4).as_hypergraph().clone()),
        ("c4.hg", cycle_graph(4).as_hypergraph().clone()),
        ("c6.hg", cycle_graph(6).as_hypergraph().clone()),
        ("fano.hg", fano()),
        ("x1.hg", stark_terras_x1().as_hypergraph().clone()),
        ("x2.hg", stark_terras_x2().as_hypergraph().clone()),
        ("nonramanujan16.hg", non_ramanujan_cubic().as_hypergraph().clone()),
    ];
    for (name, h) in cases {
        assert!(load(name) == h, "{name} differs from its constructor");
    }
}

#[test]
fn round_trip_through_text() {
    for (_, h) in regular_zoo() {
        assert!(parse_hypergraph(&h.to_hg_string()).unwrap() == h);
    }
}

#[test]
fn fixtures_validate() {
    for name in ["bowtie.hg", "hub.hg", "prism.hg", "k4.hg", "c6.hg", "fano.hg", "x1.hg", "x2.hg"] {
        let report = load(name).validate();
        assert!(report.zeta_ready(), "{name}: {:?}", report.failures());
    }
}
