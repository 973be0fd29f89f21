#![allow(dead_code)]

use std::path::PathBuf;

use ppg_core::analysis::Analysis;
use ppg_core::groups::{load_group, GroupRef, DEFAULT_MAX_ORDER};

pub fn group(name: &str) -> GroupRef {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("data/groups/{name}.json"));
    load_group(&path, DEFAULT_MAX_ORDER).unwrap()
}

pub fn analysis(name: &str, p: u64) -> Analysis {
    Analysis::new(&group(name), p, 0).unwrap()
}

/// Corpus of (group file, prime) pairs.
pub const CORPUS: [(&str, u64); 8] = [
    ("s3", 3),
    ("s4", 2),
    ("s5", 2),
    ("a4", 2),
    ("d8", 2),
    ("q8", 2),
    ("c6", 2),
    ("s3xc2", 2),
];

/// Class index by conventional name (dihedral Sylow only).
pub fn class(a: &Analysis, name: &str) -> usize {
    a.display.iter().position(|n| n == name).unwrap_or_else(|| panic!("no class {name}"))
}

pub mod naive;

/// Prime powers up to 64, as (p, k).
pub fn small_fields() -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61] {
        let mut k = 1;
        while p.pow(k) <= 64 {
            out.push((p, k));
            k += 1;
        }
    }
    out
}
pub mod kernel;

use ppg_core::pieces::BlockFilter;
use ppg_core::points::Oracle;
use ppg_core::poset::{build_multiposet, Multiposet, Node};

pub fn node<'m>(mp: &'m Multiposet, label: &str) -> &'m Node {
    mp.nodes
        .iter()
        .find(|n| n.label == label)
        .unwrap_or_else(|| panic!("no node {label}"))
}

/// `m(x', x)` between two nodes given by label, through their class representatives.
pub fn rel(a: &Analysis, o: &Oracle, mp: &Multiposet, lower: &str, upper: &str) -> usize {
    let (x, y) = (node(mp, lower), node(mp, upper));
    let w = &a.classes[x.point.0].rep;
    let u = &a.classes[y.point.0].rep;
    assert!(w.is_subgroup_of(u), "{lower} is not below {upper} on representatives");
    o.relative_multiplicity(w, x.point.1, u, y.point.1).unwrap()
}

pub fn multiposet(a: &Analysis, o: &Oracle, filter: BlockFilter) -> Multiposet {
    build_multiposet(a, o, filter).unwrap()
}

/// Edges as (lower label, upper label, multiplicity), in output order.
pub fn edge_table(mp: &Multiposet) -> Vec<(String, String, usize)> {
    mp.edges
        .iter()
        .map(|e| (mp.nodes[e.source].label.clone(), mp.nodes[e.target].label.clone(), e.multiplicity))
        .collect()
}
