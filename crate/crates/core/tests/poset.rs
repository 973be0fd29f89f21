mod common;

use std::collections::BTreeMap;

use ppg_core::pieces::BlockFilter;
use ppg_core::points::Oracle;
use ppg_core::poset::*;

fn edges(list: &[(&str, &str, usize)]) -> Vec<(String, String, usize)> {
    list.iter().map(|(a, b, m)| (a.to_string(), b.to_string(), *m)).collect()
}

#[test]
fn s4_multiposet() {
    let a = common::analysis("s4", 2);
    let o = Oracle::new(&a).unwrap();
    let mp = common::multiposet(&a, &o, BlockFilter::All);
    let labels: Vec<&str> = mp.nodes.iter().map(|n| n.label.as_str()).collect();
    assert_eq!(labels, ["1_1", "1_2", "C2'↑1_2", "C2'_1", "C2_1", "Z_1", "V4'_1", "V4_1", "C4_1", "D_1"]);
    let expected = edges(&[
        ("1_1", "C2'_1", 1),
        ("1_1", "C2_1", 1),
        ("1_1", "Z_1", 1),
        ("1_2", "C2'↑1_2", 2),
        ("1_2", "C2_1", 2),
        ("1_2", "Z_1", 2),
        ("C2'↑1_2", "V4'_1", 1),
        ("C2'_1", "V4'_1", 1),
        ("C2_1", "V4_1", 1),
        ("Z_1", "V4'_1", 1),
        ("Z_1", "V4_1", 1),
        ("Z_1", "C4_1", 1),
        ("V4'_1", "D_1", 1),
        ("V4_1", "D_1", 1),
        ("C4_1", "D_1", 1),
    ]);
    assert_eq!(common::edge_table(&mp), expected);
}

#[test]
fn s5_principal_multiposet() {
    let a = common::analysis("s5", 2);
    let o = Oracle::new(&a).unwrap();
    let mp = common::multiposet(&a, &o, BlockFilter::Principal);
    assert_eq!(mp.nodes.len(), 14);
    assert_eq!(mp.nodes.iter().filter(|n| n.is_piece).count(), 9);
    let expected = edges(&[
        ("1_1", "C2'_1", 1),
        ("1_1", "Z_1", 1),
        ("1_1", "C2_1", 1),
        ("1_2", "C2'↑1_2", 2),
        ("1_2", "Z↑1_2", 2),
        ("1_2", "C2↑1_2", 2),
        ("C2'↑1_2", "V4'↑1_2", 2),
        ("C2'_1", "V4'_1", 1),
        ("Z↑1_2", "V4'↑1_2", 2),
        ("Z↑1_2", "C4↑1_2", 2),
        ("Z↑1_2", "V4_1", 2),
        ("Z_1", "V4'_1", 1),
        ("Z_1", "C4_1", 1),
        ("Z_1", "V4_1", 1),
        ("C2↑1_2", "V4_1", 2),
        ("C2_1", "V4_1", 1),
        ("V4'↑1_2", "D_1", 1),
        ("V4'_1", "D_1", 1),
        ("C4↑1_2", "D_1", 1),
        ("C4_1", "D_1", 1),
        ("V4_1", "D_1", 1),
    ]);
    assert_eq!(common::edge_table(&mp), expected);
}

#[test]
fn full_check_suite_on_corpus() {
    for (name, p) in common::CORPUS {
        let a = common::analysis(name, p);
        let o = Oracle::new(&a).unwrap();
        for filter in [BlockFilter::All, BlockFilter::Principal] {
            let mp = common::multiposet(&a, &o, filter);
            let report = run_checks(&a, &o, &mp, filter, CheckOptions { slow: true });
            let failed: Vec<_> = report.failures().collect();
            assert!(failed.is_empty(), "{name}: {failed:?}");
            assert_eq!(report.checks.len(), 12);
        }
    }
}

#[test]
fn edges_compose_along_chains() {
    // Products of covering labels along saturated chains reproduce the direct
    // relative multiplicity between the ends.
    let a = common::analysis("s5", 2);
    let o = Oracle::new(&a).unwrap();
    let mp = common::multiposet(&a, &o, BlockFilter::Principal);
    assert_eq!(common::rel(&a, &o, &mp, "1_2", "V4'↑1_2"), 2 * 2); // only through C2'↑1_2
    assert_eq!(common::rel(&a, &o, &mp, "1_2", "D_1"), 4);
    assert_eq!(common::rel(&a, &o, &mp, "1_1", "D_1"), 1);
}

#[test]
fn piece_posets_of_s4_and_s5_differ() {
    let order = |name: &str, filter| {
        let a = common::analysis(name, 2);
        let o = Oracle::new(&a).unwrap();
        let mp = common::multiposet(&a, &o, filter);
        piece_order(&a, &o, &mp).unwrap()
    };
    let (l4, r4) = order("s4", BlockFilter::All);
    let (l5, r5) = order("s5", BlockFilter::Principal);
    assert_eq!((l4.len(), l5.len()), (9, 9));
    assert!(!posets_isomorphic(&r4, &r5));
    assert!(posets_isomorphic(&r4, &r4) && posets_isomorphic(&r5, &r5));
    // The difference: 1_2 lies under C2_1 and Z_1 in S4 but not in S5.
    let below = |l: &[String], r: &[Vec<bool>], x: &str, y: &str| {
        let i = l.iter().position(|s| s == x).unwrap();
        let j = l.iter().position(|s| s == y).unwrap();
        r[i][j]
    };
    assert!(below(&l4, &r4, "1_2", "Z_1") && !below(&l5, &r5, "1_2", "Z_1"));
    assert!(below(&l4, &r4, "1_2", "V4_1") && below(&l5, &r5, "1_2", "V4_1"));
}

#[test]
fn dot_output() {
    let a = common::analysis("s5", 2);
    let o = Oracle::new(&a).unwrap();
    let mp = common::multiposet(&a, &o, BlockFilter::Principal);
    let dot = hasse_dot(&mp);
    assert!(dot.starts_with("digraph "));
    assert_eq!(dot.matches(" [label=\"").count() - mp.edges.len(), 14);
    assert_eq!(dot.matches(" -> ").count(), mp.edges.len());
    assert_eq!(dot.matches("rank=same").count(), 4);
    let empty = Multiposet { nodes: vec![], edges: vec![], ..mp.clone() };
    let d = hasse_dot(&empty);
    assert!(d.starts_with("digraph ") && d.trim_end().ends_with('}'));
    assert!(!d.contains("->"));
}

#[test]
fn json_schema() {
    let a = common::analysis("s4", 2);
    let o = Oracle::new(&a).unwrap();
    let mp = common::multiposet(&a, &o, BlockFilter::All);
    let v: serde_json::Value = serde_json::from_str(&to_json(&mp)).unwrap();
    for key in ["schema", "group", "prime", "field_degree", "seed", "nodes", "edges", "checks"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["schema"], "ppg/1");
    assert_eq!(v["field_degree"], 2);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 10);
    let e = &v["edges"][0];
    assert!(e["multiplicity"].as_u64().unwrap() > 0 && e["covering"] == true);
}

#[test]
fn repeated_builds_are_identical() {
    let render = || {
        let a = common::analysis("s5", 2);
        let o = Oracle::new(&a).unwrap();
        let mp = common::multiposet(&a, &o, BlockFilter::All);
        (to_json(&mp), hasse_dot(&mp), hasse_table(&mp))
    };
    assert_eq!(render(), render());
}

#[test]
fn other_seeds_give_the_same_structure() {
    let a0 = common::analysis("s4", 2);
    let o0 = Oracle::new(&a0).unwrap();
    let base = common::edge_table(&common::multiposet(&a0, &o0, BlockFilter::All));
    for seed in [1u64, 7, 12345] {
        let a = ppg_core::analysis::Analysis::new(&common::group("s4"), 2, seed).unwrap();
        let o = Oracle::new(&a).unwrap();
        let mp = common::multiposet(&a, &o, BlockFilter::All);
        let mut e = common::edge_table(&mp);
        let mut b = base.clone();
        e.sort();
        b.sort();
        assert_eq!(e, b, "seed {seed}");
    }
}

#[test]
fn node_counts_across_corpus() {
    let expected: BTreeMap<&str, usize> =
        [("s3", 3), ("s4", 10), ("s5", 24), ("a4", 7), ("d8", 8), ("q8", 6), ("c6", 6), ("s3xc2", 10)].into();
    for (name, p) in common::CORPUS {
        let a = common::analysis(name, p);
        let o = Oracle::new(&a).unwrap();
        assert_eq!(common::multiposet(&a, &o, BlockFilter::All).nodes.len(), expected[name], "{name}");
    }
}
