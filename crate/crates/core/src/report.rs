//! The five front-end commands, rendered to text. Shared by the binary and
//! the C interface.

use std::fmt::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::BlockRecord;
use crate::analysis::Analysis;
use crate::error::{Error, Result};
use crate::pieces::{enumerate_generalized_pieces, enumerate_pieces, BlockFilter, GeneralizedPieceRecord};
use crate::points::{Oracle, PointRecord};
use crate::poset::{
    block_filter_name, build_multiposet, hasse_dot, hasse_table, piece_order, run_checks, to_json, CheckOptions,
    Multiposet,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Pieces,
    Generalized,
    Points,
    Multiposet,
    Verify,
}

impl FromStr for Command {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "pieces" => Command::Pieces,
            "generalized" => Command::Generalized,
            "points" => Command::Points,
            "multiposet" => Command::Multiposet,
            "verify" => Command::Verify,
            _ => return Err(Error::Malformed(format!("unknown command {s:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Table,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "json" => Format::Json,
            "dot" => Format::Dot,
            "table" => Format::Table,
            _ => return Err(Error::Malformed(format!("unknown format {s:?}"))),
        })
    }
}

pub fn parse_block(s: &str) -> Result<BlockFilter> {
    match s {
        "all" => Ok(BlockFilter::All),
        "principal" => Ok(BlockFilter::Principal),
        _ => s
            .parse()
            .map(BlockFilter::Index)
            .map_err(|_| Error::Malformed(format!("bad block selector {s:?}"))),
    }
}

/// Rendered output; `passed` is false only when `verify` found a failure.
pub struct Output {
    pub text: String,
    pub passed: bool,
}

#[derive(Serialize)]
struct Header<'a, T: Serialize> {
    schema: &'static str,
    group: &'a str,
    prime: u64,
    field_degree: u32,
    seed: u64,
    block: String,
    blocks: Vec<BlockRecord>,
    #[serde(flatten)]
    body: T,
}

fn json<T: Serialize>(a: &Analysis, filter: BlockFilter, body: T) -> String {
    let h = Header {
        schema: "ppg/1",
        group: a.group.name().unwrap_or("G"),
        prime: a.p,
        field_degree: a.field.degree(),
        seed: a.seed,
        block: block_filter_name(filter),
        blocks: a.blocks.iter().map(|b| b.record()).collect(),
        body,
    };
    let mut s = serde_json::to_string_pretty(&h).expect("report serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct PieceRow {
    label: String,
    #[serde(rename = "Q_class")]
    q_class: String,
    #[serde(rename = "Q_order")]
    q_order: usize,
    phi_index: usize,
    dim: usize,
    block: usize,
}

#[derive(Serialize)]
struct PointGroup {
    #[serde(rename = "P_class")]
    p_class: String,
    points: Vec<PointRecord>,
}

/// Substantive flag plus name, for the `generalized` listing.
#[derive(Serialize)]
struct NamedGeneralized {
    label: String,
    #[serde(flatten)]
    record: GeneralizedPieceRecord,
}

fn no_dot(cmd: &str) -> Error {
    Error::Malformed(format!("DOT output is not available for `{cmd}`"))
}

fn pieces(a: &Analysis, filter: BlockFilter, format: Format) -> Result<String> {
    if format == Format::Dot {
        // The poset of pieces, drawn through its covering relation.
        let o = Oracle::new(a)?;
        let mp = build_multiposet(a, &o, filter)?;
        let (labels, rel) = piece_order(a, &o, &mp)?;
        let n = labels.len();
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"pieces {} p={}\" {{", a.group.name().unwrap_or("G"), a.p);
        let _ = writeln!(out, "  rankdir=BT;\n  node [shape=plaintext];");
        for (i, l) in labels.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{l}\"];");
        }
        for i in 0..n {
            for j in 0..n {
                let covers =
                    i != j && rel[i][j] && !(0..n).any(|k| k != i && k != j && rel[i][k] && rel[k][j]);
                if covers {
                    let _ = writeln!(out, "  n{i} -> n{j};");
                }
            }
        }
        out.push_str("}\n");
        return Ok(out);
    }
    let rows: Vec<PieceRow> = enumerate_pieces(a, filter)
        .into_iter()
        .map(|pc| PieceRow {
            label: a.piece_name(pc.class, pc.phi),
            q_class: a.class_name(pc.class).to_string(),
            q_order: a.classes[pc.class].rep.order(),
            phi_index: pc.phi + 1,
            dim: pc.dim,
            block: pc.block,
        })
        .collect();
    Ok(match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Body {
                pieces: Vec<PieceRow>,
            }
            json(a, filter, Body { pieces: rows })
        }
        _ => {
            let mut out = String::new();
            let _ = writeln!(out, "{:<10} {:>3} {:>4} {:>5}", "piece", "|Q|", "dim", "block");
            for r in rows {
                let _ = writeln!(out, "{:<10} {:>3} {:>4} {:>5}", r.label, r.q_order, r.dim, r.block);
            }
            out
        }
    })
}

fn generalized(a: &Analysis, filter: BlockFilter, format: Format) -> Result<String> {
    let rows: Vec<NamedGeneralized> = enumerate_generalized_pieces(a, filter, false)?
        .iter()
        .map(|gp| NamedGeneralized {
            label: a.generalized_name(gp),
            record: a.record(gp),
        })
        .collect();
    Ok(match format {
        Format::Dot => return Err(no_dot("generalized")),
        Format::Json => {
            #[derive(Serialize)]
            struct Body {
                generalized_pieces: Vec<NamedGeneralized>,
            }
            json(a, filter, Body { generalized_pieces: rows })
        }
        Format::Table => {
            let w = rows.iter().map(|r| r.label.chars().count()).max().unwrap_or(4).max(4);
            let mut out = String::new();
            let _ = writeln!(out, "{:<w$}  {:>3}  {:>3}  {:>5}", "name", "|S|", "m", "block");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:<w$}  {:>3}  {:>3}  {:>5}{}",
                    r.label,
                    r.record.stabilizer_order,
                    r.record.multiplicity,
                    r.record.block,
                    if r.record.substantive { "" } else { "  (not substantive)" }
                );
            }
            out
        }
    })
}

fn points(a: &Analysis, filter: BlockFilter, format: Format) -> Result<String> {
    let o = Oracle::new(a)?;
    let mp = build_multiposet(a, &o, filter)?;
    let mut groups = Vec::new();
    for (ci, row) in o.info.iter().enumerate() {
        let points = row
            .iter()
            .filter(|i| filter.keeps(a, i.block))
            .map(|i| {
                let name = mp
                    .nodes
                    .iter()
                    .find(|n| n.point == (ci, i.index))
                    .map(|n| n.label.clone())
                    .unwrap_or_default();
                o.record(i, name)
            })
            .collect();
        groups.push(PointGroup {
            p_class: a.class_name(ci).to_string(),
            points,
        });
    }
    Ok(match format {
        Format::Dot => return Err(no_dot("points")),
        Format::Json => {
            #[derive(Serialize)]
            struct Body {
                points: Vec<PointGroup>,
            }
            json(a, filter, Body { points: groups })
        }
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "{:<6} {:>3} {:>3} {:>6} {:>7} {:>5}  generalized piece", "P", "pt", "m", "local", "defect", "block");
            for g in groups {
                for r in g.points {
                    let _ = writeln!(
                        out,
                        "{:<6} {:>3} {:>3} {:>6} {:>7} {:>5}  {}",
                        g.p_class, r.point_index, r.multiplicity, r.local, r.defect_class, r.block, r.generalized_piece
                    );
                }
            }
            out
        }
    })
}

fn render(mp: &Multiposet, format: Format) -> String {
    match format {
        Format::Json => to_json(mp),
        Format::Dot => hasse_dot(mp),
        Format::Table => hasse_table(mp),
    }
}

pub fn run(a: &Analysis, cmd: Command, filter: BlockFilter, format: Format, slow: bool) -> Result<Output> {
    if let BlockFilter::Index(i) = filter {
        if i >= a.blocks.len() {
            return Err(Error::Malformed(format!("block {i} does not exist ({} blocks)", a.blocks.len())));
        }
    }
    let text = match cmd {
        Command::Pieces => pieces(a, filter, format)?,
        Command::Generalized => generalized(a, filter, format)?,
        Command::Points => points(a, filter, format)?,
        Command::Multiposet | Command::Verify => {
            let o = Oracle::new(a)?;
            let mut mp = build_multiposet(a, &o, filter)?;
            let report = if cmd == Command::Verify {
                run_checks(a, &o, &mp, filter, CheckOptions { slow })
            } else {
                crate::poset::structural_checks(a, &mp, filter)
            };
            mp.checks = report.checks.iter().map(|c| (c.name.to_string(), c.passed)).collect();
            mp.failures = report.failures().cloned().collect();
            let passed = report.passed();
            return Ok(Output {
                text: render(&mp, format),
                passed,
            });
        }
    };
    Ok(Output { text, passed: true })
}
