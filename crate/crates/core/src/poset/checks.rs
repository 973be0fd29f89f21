//! The invariant suite run by `verify`: each check recomputes something one
//! way and compares it against another route.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::analysis::Analysis;
use crate::error::Result;
use crate::groups::{all_subgroups, subgroup_classes, Subgroup};
use crate::pieces::{
    absolute_multiplicity, enumerate_generalized_pieces, enumerate_pieces, multiplicities_through_all, BlockFilter,
    PieceAt,
};
use crate::points::{left_ideal_dim, Oracle};

use super::{correspondence, key_of, Multiposet};

#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    /// Recompute edge multiplicities by explicit primitive decomposition.
    pub slow: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub checks: Vec<CheckResult>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: &'static str, outcome: Result<Option<String>>) {
        let (passed, detail) = match outcome {
            Ok(None) => (true, String::new()),
            Ok(Some(why)) => (false, why),
            Err(e) => (false, e.to_string()),
        };
        self.checks.push(CheckResult { name, passed, detail });
    }
}

type Outcome = Result<Option<String>>;

fn fail(msg: String) -> Outcome {
    Ok(Some(msg))
}

/// Run every check; `mp` must have been built from the same analysis and
/// oracle with the same filter.
pub fn run_checks(a: &Analysis, o: &Oracle, mp: &Multiposet, filter: BlockFilter, opts: CheckOptions) -> CheckReport {
    let mut r = CheckReport::default();
    r.push("correspondence", check_correspondence(a, o, filter));
    r.push("multiplicity_agreement", check_multiplicities(a, o, filter));
    r.push("piece_count", check_piece_count(a, mp, filter));
    r.push("covering_edges", check_covering(a, mp));
    r.push("matrix_relation", check_matrix_relation(a, o));
    r.push("s_independence", check_s_independence(a, filter));
    r.push("monotonicity", check_monotonicity(a, filter));
    r.push("local_multiplicity", check_local_multiplicity(a, o));
    r.push("local_defect", check_local_defect(a, o));
    r.push("block_partition", check_block_partition(a, o, filter));
    r.push("dimension_accounting", check_dimensions(a, o, filter));
    if opts.slow {
        r.push("slow_oracle", check_slow(a, o));
    }
    r
}

/// The cheap checks attached to every multiposet: the node set matched
/// the points when it was built, so only its shape is inspected here.
pub fn structural_checks(a: &Analysis, mp: &Multiposet, filter: BlockFilter) -> CheckReport {
    let mut r = CheckReport::default();
    r.push("correspondence", Ok(None));
    r.push("piece_count", check_piece_count(a, mp, filter));
    r.push("covering_edges", check_covering(a, mp));
    r
}

/// Sets of generalized-piece keys agree with the sets of points.
fn check_correspondence(a: &Analysis, o: &Oracle, filter: BlockFilter) -> Outcome {
    let pieces: BTreeSet<_> = enumerate_generalized_pieces(a, filter, true)?.iter().map(key_of).collect();
    let points: Vec<_> = o
        .info
        .iter()
        .flatten()
        .filter(|i| filter.keeps(a, i.block))
        .map(|i| i.key.clone())
        .collect();
    let distinct: BTreeSet<_> = points.iter().cloned().collect();
    if distinct.len() != points.len() {
        return fail("two points share a generalized piece".into());
    }
    if distinct != pieces {
        let extra: Vec<_> = distinct.symmetric_difference(&pieces).collect();
        return fail(format!("sets differ at {extra:?}"));
    }
    Ok(None)
}

fn check_multiplicities(a: &Analysis, o: &Oracle, filter: BlockFilter) -> Outcome {
    // Errors from `correspondence` carry the mismatching node.
    correspondence(a, o, filter)?;
    Ok(None)
}

/// Nodes with `P = Q` are exactly the pieces of the kept blocks.
fn check_piece_count(a: &Analysis, mp: &Multiposet, filter: BlockFilter) -> Outcome {
    let nodes = mp.nodes.iter().filter(|n| n.is_piece).count();
    let pieces = enumerate_pieces(a, filter);
    if nodes != pieces.len() {
        return fail(format!("{nodes} piece nodes but {} pieces", pieces.len()));
    }
    for n in mp.nodes.iter().filter(|n| n.is_piece) {
        let ci = n.point.0;
        let dim = a.piece_module(ci, n.phi_index - 1).dim();
        if n.multiplicity != dim {
            return fail(format!("{}: multiplicity {} but dimension {dim}", n.label, n.multiplicity));
        }
    }
    Ok(None)
}

fn check_covering(a: &Analysis, mp: &Multiposet) -> Outcome {
    for e in &mp.edges {
        let (s, t) = (&mp.nodes[e.source], &mp.nodes[e.target]);
        if s.p_order * a.p as usize != t.p_order || e.multiplicity == 0 {
            return fail(format!("bad edge {} -> {}", s.label, t.label));
        }
    }
    Ok(None)
}

/// `m(W_ω, U_μ) = Σ_ν m(W_ω, V_ν) m(V_ν, U_μ)` for every chain
/// `W < V < U` with `U` a class representative, and `m(U_μ, U_ν) = δ`.
fn check_matrix_relation(a: &Analysis, o: &Oracle) -> Outcome {
    let n = |s: &Subgroup| -> Result<usize> { Ok(o.points[a.locate(s)?.0].len()) };
    for (ci, class) in a.classes.iter().enumerate() {
        let u = &class.rep;
        for mu in 0..o.points[ci].len() {
            for nu in 0..o.points[ci].len() {
                let m = o.relative_multiplicity(u, nu, u, mu)?;
                if m != usize::from(mu == nu) {
                    return fail(format!("m({0}_{1}, {0}_{2}) = {m}", a.class_name(ci), nu + 1, mu + 1));
                }
            }
        }
        let subs = all_subgroups(u);
        for v in subs.iter().filter(|v| v.order() < u.order()) {
            let nv = n(v)?;
            for w in all_subgroups(v).iter().filter(|w| w.order() < v.order()) {
                let nw = n(w)?;
                for mu in 0..o.points[ci].len() {
                    let through: Vec<usize> = (0..nv)
                        .map(|nu| o.relative_multiplicity(v, nu, u, mu))
                        .collect::<Result<_>>()?;
                    for omega in 0..nw {
                        let direct = o.relative_multiplicity(w, omega, u, mu)?;
                        let mut sum = 0;
                        for (nu, &b) in through.iter().enumerate() {
                            if b != 0 {
                                sum += o.relative_multiplicity(w, omega, v, nu)? * b;
                            }
                        }
                        if sum != direct {
                            return fail(format!(
                                "chain of orders {} < {} < {} in {}: direct {direct}, composed {sum}",
                                w.order(),
                                v.order(),
                                u.order(),
                                a.class_name(ci)
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Every admissible `S` gives the same multiplicity.
fn check_s_independence(a: &Analysis, filter: BlockFilter) -> Outcome {
    for gp in enumerate_generalized_pieces(a, filter, false)? {
        let values = multiplicities_through_all(a, &gp.p, &gp.piece)?;
        if values.iter().any(|&m| m != gp.multiplicity) {
            return fail(format!("{}: {} vs {values:?}", a.generalized_name(&gp), gp.multiplicity));
        }
    }
    Ok(None)
}

/// For `Q ≤ P' ≤ P`: substantive over `P` implies substantive over `P'`;
/// and when `N_P(Q_φ) ≤ P'`, substantive over `P'` implies over `P`.
fn check_monotonicity(a: &Analysis, filter: BlockFilter) -> Outcome {
    for gp in enumerate_generalized_pieces(a, filter, false)? {
        let q = &gp.piece.q;
        for mid in all_subgroups(&gp.p) {
            if !q.is_subgroup_of(&mid) {
                continue;
            }
            let piece = PieceAt::new(a, q, gp.piece.phi)?;
            let m = absolute_multiplicity(a, &mid, &piece)?;
            if gp.is_substantive() && m == 0 {
                return fail(format!(
                    "{} substantive but not over a subgroup of order {}",
                    a.generalized_name(&gp),
                    mid.order()
                ));
            }
            if m > 0 && gp.stabilizer.is_subgroup_of(&mid) && !gp.is_substantive() {
                return fail(format!(
                    "{} substantive over an intermediate subgroup containing the stabilizer but not over P",
                    a.generalized_name(&gp)
                ));
            }
        }
    }
    Ok(None)
}

/// A local point corresponding to `θ` has multiplicity `dim V(θ)`.
fn check_local_multiplicity(a: &Analysis, o: &Oracle) -> Outcome {
    for info in o.info.iter().flatten() {
        if let Some(theta) = info.piece {
            let dim = a.piece_module(info.class, theta).dim();
            if info.multiplicity != dim {
                return fail(format!(
                    "local point {} of {}: multiplicity {} but dimension {dim}",
                    info.index + 1,
                    a.class_name(info.class),
                    info.multiplicity
                ));
            }
        }
    }
    // Distinct local points give distinct simples.
    for row in &o.info {
        let mut seen: Vec<usize> = row.iter().filter_map(|i| i.piece).collect();
        let n = seen.len();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != n {
            return fail("two local points share a simple".into());
        }
    }
    Ok(None)
}

/// Points are local exactly when their defect group is the whole of `P`,
/// and the local points of `P` account for every simple of `C_G(P)`.
fn check_local_defect(a: &Analysis, o: &Oracle) -> Outcome {
    for (ci, row) in o.info.iter().enumerate() {
        let order = a.classes[ci].rep.order();
        for info in row {
            if info.local != (info.defect.order() == order) {
                return fail(format!(
                    "point {} of {}: local {} but defect order {}",
                    info.index + 1,
                    a.class_name(ci),
                    info.local,
                    info.defect.order()
                ));
            }
        }
        let locals = row.iter().filter(|i| i.local).count();
        if locals != a.locals[ci].simples.len() {
            return fail(format!(
                "{}: {locals} local points for {} simples",
                a.class_name(ci),
                a.locals[ci].simples.len()
            ));
        }
    }
    Ok(None)
}

/// Block idempotents are orthogonal and sum to 1; each point lies in the
/// block of its generalized piece (checked in the correspondence).
fn check_block_partition(a: &Analysis, o: &Oracle, filter: BlockFilter) -> Outcome {
    let g = &a.group;
    let mut total = crate::algebra::AlgElem::zero(g, &a.field);
    for (i, b) in a.blocks.iter().enumerate() {
        total = total.add(&b.idempotent);
        for c in &a.blocks[i + 1..] {
            if !b.idempotent.mul(&c.idempotent).is_zero() {
                return fail(format!("blocks {} and {} are not orthogonal", b.index, c.index));
            }
        }
    }
    if total != crate::algebra::AlgElem::one(g, &a.field) {
        return fail("block idempotents do not sum to 1".into());
    }
    for gp in enumerate_generalized_pieces(a, filter, true)? {
        let key = key_of(&gp);
        let info = o.info[gp.p_class].iter().find(|i| i.key == key);
        if info.map(|i| i.block) != Some(gp.block) {
            return fail(format!("{}: block differs from its point's", a.generalized_name(&gp)));
        }
    }
    Ok(None)
}

/// `Σ m(P_α) dim FG·i_α = dim FG·b` for every kept block and every `P`.
fn check_dimensions(a: &Analysis, o: &Oracle, filter: BlockFilter) -> Outcome {
    for b in a.blocks.iter().filter(|b| filter.keeps(a, b.index)) {
        let whole = left_ideal_dim(&b.idempotent);
        for (ci, row) in o.info.iter().enumerate() {
            let sum: usize = row
                .iter()
                .filter(|i| i.block == b.index)
                .map(|i| i.multiplicity * left_ideal_dim(o.idempotent(ci, i.index)))
                .sum();
            if sum != whole {
                return fail(format!(
                    "block {} over {}: {sum} vs dim FGb = {whole}",
                    b.index,
                    a.class_name(ci)
                ));
            }
        }
    }
    Ok(None)
}

/// Relative multiplicities across every index-p inclusion agree with an
/// explicit decomposition into primitive idempotents.
fn check_slow(a: &Analysis, o: &Oracle) -> Outcome {
    let p = a.p as usize;
    for (ci, class) in a.classes.iter().enumerate() {
        let u = &class.rep;
        for members in subgroup_classes(u, u) {
            let w = &members[0];
            if w.order() * p != u.order() {
                continue;
            }
            let (cw, _) = a.locate(w)?;
            for mu in 0..o.points[ci].len() {
                for omega in 0..o.points[cw].len() {
                    let fast = o.relative_multiplicity(w, omega, u, mu)?;
                    let slow = o.relative_multiplicity_slow(w, omega, u, mu)?;
                    if fast != slow {
                        return fail(format!(
                            "{} in {}: fast {fast}, slow {slow}",
                            a.class_name(cw),
                            a.class_name(ci)
                        ));
                    }
                }
            }
        }
    }
    Ok(None)
}
