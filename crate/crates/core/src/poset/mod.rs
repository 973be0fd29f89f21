//! The multiposet of substantive generalized pieces, labelled by relative
//! multiplicities, and the checks that tie the two computation routes together.

mod checks;
mod emit;
mod iso;

pub use checks::{run_checks, structural_checks, CheckOptions, CheckReport, CheckResult};
pub use emit::{hasse_dot, hasse_table, to_json};
pub use iso::{piece_order, posets_isomorphic};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::analysis::Analysis;
use crate::error::{Error, Result};
use crate::groups::subgroup_classes;
use crate::pieces::{enumerate_generalized_pieces, BlockFilter, GeneralizedPiece};
use crate::points::{Oracle, PieceKey};

/// How edges between class representatives are formed.
pub const CONVENTION: &str = "transported-subclass/agree-or-split";

#[derive(Clone, Debug, Serialize)]
pub struct Node {
    pub id: usize,
    pub label: String,
    #[serde(rename = "P_class")]
    pub p_class: String,
    #[serde(rename = "P_order")]
    pub p_order: usize,
    #[serde(rename = "Q_class")]
    pub q_class: String,
    pub phi_index: usize,
    pub stabilizer_order: usize,
    pub multiplicity: usize,
    pub is_piece: bool,
    pub block: usize,
    /// 1-based index of the matching point of `P` in the oracle.
    pub point_index: usize,
    #[serde(skip)]
    pub point: (usize, usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub multiplicity: usize,
    pub covering: bool,
    /// Members of the smaller class inside the larger representative through
    /// which this value is realized (1-based positions in the class).
    pub via: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Multiposet {
    pub schema: &'static str,
    pub group: String,
    pub prime: u64,
    pub field_degree: u32,
    pub seed: u64,
    pub block: String,
    pub convention: &'static str,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
    pub checks: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<CheckResult>,
}

pub fn block_filter_name(f: BlockFilter) -> String {
    match f {
        BlockFilter::All => "all".into(),
        BlockFilter::Principal => "principal".into(),
        BlockFilter::Index(i) => i.to_string(),
    }
}

fn key_of(gp: &GeneralizedPiece) -> PieceKey {
    PieceKey {
        p_class: gp.p_class,
        q: gp.piece.q.elements().to_vec(),
        phi: gp.piece.phi,
    }
}

/// Match substantive generalized pieces with points, node by node. Fails
/// with a counterexample when the two routes disagree.
pub fn correspondence(a: &Analysis, o: &Oracle, filter: BlockFilter) -> Result<Vec<(GeneralizedPiece, (usize, usize))>> {
    let gps = enumerate_generalized_pieces(a, filter, true)?;
    let mut by_key: BTreeMap<PieceKey, (usize, usize, usize)> = BTreeMap::new();
    for info in o.info.iter().flatten() {
        if !filter.keeps(a, info.block) {
            continue;
        }
        if by_key
            .insert(info.key.clone(), (info.class, info.index, info.multiplicity))
            .is_some()
        {
            return Err(Error::TheoremViolation(format!(
                "two points of {} map to the same generalized piece",
                a.class_name(info.class)
            )));
        }
    }
    let mut out = Vec::with_capacity(gps.len());
    for gp in gps {
        let key = key_of(&gp);
        let (ci, l, m) = by_key.remove(&key).ok_or_else(|| {
            Error::TheoremViolation(format!(
                "substantive generalized piece {} has no point",
                a.generalized_name(&gp)
            ))
        })?;
        if m != gp.multiplicity {
            return Err(Error::TheoremViolation(format!(
                "{}: point multiplicity {m} but piece multiplicity {}",
                a.generalized_name(&gp),
                gp.multiplicity
            )));
        }
        if o.info[ci][l].block != gp.block {
            return Err(Error::TheoremViolation(format!(
                "{}: point and piece lie in different blocks",
                a.generalized_name(&gp)
            )));
        }
        out.push((gp, (ci, l)));
    }
    if let Some((key, (ci, l, _))) = by_key.into_iter().next() {
        return Err(Error::TheoremViolation(format!(
            "point {} of {} maps to {key:?}, which is not a substantive generalized piece",
            l + 1,
            a.class_name(ci)
        )));
    }
    Ok(out)
}

pub fn build_multiposet(a: &Analysis, o: &Oracle, filter: BlockFilter) -> Result<Multiposet> {
    let matched = correspondence(a, o, filter)?;
    let nodes: Vec<Node> = matched
        .iter()
        .enumerate()
        .map(|(id, (gp, point))| Node {
            id,
            label: a.generalized_name(gp),
            p_class: a.class_name(gp.p_class).to_string(),
            p_order: gp.p.order(),
            q_class: a.class_name(gp.piece.class).to_string(),
            phi_index: gp.piece.phi + 1,
            stabilizer_order: gp.stabilizer.order(),
            multiplicity: gp.multiplicity,
            is_piece: gp.is_piece(),
            block: gp.block,
            point_index: point.1 + 1,
            point: *point,
        })
        .collect();
    let node_of: BTreeMap<(usize, usize), usize> = nodes.iter().map(|n| (n.point, n.id)).collect();
    let p = a.p as usize;
    let mut edges = Vec::new();
    for (ci, class) in a.classes.iter().enumerate() {
        let big = &class.rep;
        if big.order() == 1 {
            continue;
        }
        // Maximal subgroups of index p, grouped by the class they belong to.
        let mut by_class: BTreeMap<usize, Vec<(usize, crate::groups::Subgroup)>> = BTreeMap::new();
        for members in subgroup_classes(big, big) {
            let sub = &members[0];
            if sub.order() * p != big.order() {
                continue;
            }
            let (sc, _) = a.locate(sub)?;
            let pos = a.classes[sc].members.binary_search(sub).map_or(0, |k| k + 1);
            by_class.entry(sc).or_default().push((pos, sub.clone()));
        }
        for (sc, subs) in by_class {
            for mu in 0..o.points[ci].len() {
                let Some(&target) = node_of.get(&(ci, mu)) else { continue };
                for omega in 0..o.points[sc].len() {
                    let Some(&source) = node_of.get(&(sc, omega)) else { continue };
                    let values: Vec<(usize, usize)> = subs
                        .iter()
                        .map(|(pos, sub)| Ok((*pos, o.relative_multiplicity(sub, omega, big, mu)?)))
                        .collect::<Result<_>>()?;
                    if values.iter().all(|v| v.1 == values[0].1) {
                        if values[0].1 > 0 {
                            edges.push(Edge {
                                source,
                                target,
                                multiplicity: values[0].1,
                                covering: true,
                                via: values.iter().map(|v| v.0).collect(),
                            });
                        }
                    } else {
                        for (pos, m) in values.into_iter().filter(|v| v.1 > 0) {
                            edges.push(Edge {
                                source,
                                target,
                                multiplicity: m,
                                covering: true,
                                via: vec![pos],
                            });
                        }
                    }
                }
            }
        }
    }
    edges.sort_by_key(|e| (e.source, e.target, e.via.clone()));
    Ok(Multiposet {
        schema: "ppg/1",
        group: a.group.name().unwrap_or("G").to_string(),
        prime: a.p,
        field_degree: a.field.degree(),
        seed: a.seed,
        block: block_filter_name(filter),
        convention: CONVENTION,
        nodes,
        edges,
        checks: BTreeMap::new(),
        failures: Vec::new(),
    })
}
