//! DOT, table and JSON renderings. All output is a pure function of the
//! multiposet, so equal inputs give byte-identical text.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::Multiposet;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One digraph, bottom to top, one rank per subgroup order; double lines
/// are drawn for multiplicity 2 and beyond.
pub fn hasse_dot(mp: &Multiposet) -> String {
    let mut out = String::new();
    let title = format!("{} p={} block={}", mp.group, mp.prime, mp.block);
    let _ = writeln!(out, "digraph {} {{", quote(&title));
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=plaintext];");
    let mut ranks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for n in &mp.nodes {
        ranks.entry(n.p_order).or_default().push(n.id);
    }
    for (order, ids) in &ranks {
        let _ = write!(out, "  {{ rank=same; /* order {order} */");
        for &id in ids {
            let n = &mp.nodes[id];
            let _ = write!(out, " n{id} [label={}];", quote(&n.label));
        }
        let _ = writeln!(out, " }}");
    }
    for e in &mp.edges {
        let style = if e.multiplicity > 1 { ", color=\"black:invis:black\"" } else { "" };
        let _ = writeln!(
            out,
            "  n{} -> n{} [label=\"{}\"{style}];",
            e.source, e.target, e.multiplicity
        );
    }
    out.push_str("}\n");
    out
}

pub fn hasse_table(mp: &Multiposet) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# {} p={} field GF({}^{}) seed={} block={}",
        mp.group, mp.prime, mp.prime, mp.field_degree, mp.seed, mp.block
    );
    let w = mp.nodes.iter().map(|n| n.label.chars().count()).max().unwrap_or(4).max(4);
    let _ = writeln!(out, "{:>3}  {:<w$}  {:>3}  {:>4}  {:>4}  {:>5}", "id", "node", "|P|", "m", "|S|", "block");
    for n in &mp.nodes {
        let _ = writeln!(
            out,
            "{:>3}  {:<w$}  {:>3}  {:>4}  {:>4}  {:>5}",
            n.id, n.label, n.p_order, n.multiplicity, n.stabilizer_order, n.block
        );
    }
    if !mp.edges.is_empty() {
        let _ = writeln!(out);
        let _ = writeln!(out, "edges (lower -> upper : multiplicity)");
        for e in &mp.edges {
            let via = if e.via.len() == 1 && mp.edges.iter().filter(|f| (f.source, f.target) == (e.source, e.target)).count() > 1 {
                format!("  [via member {}]", e.via[0])
            } else {
                String::new()
            };
            let _ = writeln!(
                out,
                "  {} -> {} : {}{via}",
                mp.nodes[e.source].label, mp.nodes[e.target].label, e.multiplicity
            );
        }
    }
    if !mp.checks.is_empty() {
        let _ = writeln!(out);
        for (name, ok) in &mp.checks {
            let _ = writeln!(out, "{} {name}", if *ok { "PASS" } else { "FAIL" });
        }
        for f in &mp.failures {
            let _ = writeln!(out, "  {}: {}", f.name, f.detail);
        }
    }
    out
}

pub fn to_json(mp: &Multiposet) -> String {
    let mut s = serde_json::to_string_pretty(mp).expect("multiposet serializes");
    s.push('\n');
    s
}
