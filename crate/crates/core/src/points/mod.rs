//! Points of p-subgroups on `FG`, computed directly from the fixed-point
//! algebras, and their correspondence with substantive generalized pieces.

mod algebra;

pub use algebra::{lift_by_powers, InvariantAlgebra, Points};

use serde::Serialize;

use crate::algebra::{brauer_map, relative_trace, AlgElem};
use crate::analysis::Analysis;
use crate::error::{Error, Result};
use crate::groups::{subgroup_classes, Subgroup};
use crate::linalg::meataxe::SemiEchelon;
use crate::pieces::{conjugate_piece, PieceAt};

/// Identity of a generalized piece `P ↑ Q_φ`: the class of `P`, the least
/// member `Q` of its P-class, and the least `φ` of its `N_P(Q)`-orbit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PieceKey {
    pub p_class: usize,
    pub q: Vec<u32>,
    pub phi: usize,
}

/// What the oracle knows about one point of a class representative.
#[derive(Clone, Debug)]
pub struct PointInfo {
    pub class: usize,
    pub index: usize,
    pub multiplicity: usize,
    pub local: bool,
    /// For local points: the simple of `C_G(P)` it corresponds to.
    pub piece: Option<usize>,
    /// Least member of the P-class of defect groups.
    pub defect: Subgroup,
    pub defect_class: usize,
    pub key: PieceKey,
    pub block: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointRecord {
    pub point_index: usize,
    pub multiplicity: usize,
    pub local: bool,
    pub piece: Option<String>,
    pub defect_class: String,
    pub idempotent_support_size: usize,
    pub block: usize,
    pub generalized_piece: String,
}

/// Points of every class representative.
pub struct Oracle<'a> {
    pub analysis: &'a Analysis,
    pub points: Vec<Points>,
    pub info: Vec<Vec<PointInfo>>,
}

impl<'a> Oracle<'a> {
    pub fn new(a: &'a Analysis) -> Result<Oracle<'a>> {
        let points = a
            .classes
            .iter()
            .map(|c| Points::compute(&a.group, &a.field, &c.rep, a.seed))
            .collect::<Result<Vec<_>>>()?;
        let mut oracle = Oracle {
            analysis: a,
            points,
            info: Vec::new(),
        };
        let mut info = Vec::with_capacity(a.classes.len());
        for ci in 0..a.classes.len() {
            let mut row = Vec::new();
            for l in 0..oracle.points[ci].len() {
                row.push(oracle.describe(ci, l)?);
            }
            info.push(row);
        }
        oracle.info = info;
        Ok(oracle)
    }

    pub fn idempotent(&self, ci: usize, l: usize) -> &AlgElem {
        &self.points[ci].idempotents[l]
    }

    /// Idempotent of point `l` transported to the D-conjugate `q` of class `ci`.
    pub fn idempotent_at(&self, q: &Subgroup, l: usize) -> Result<AlgElem> {
        let (ci, d) = self.analysis.locate(q)?;
        Ok(self.points[ci].idempotents[l].conjugate(d))
    }

    /// `m(W_ω, U_μ)` for subgroups `W ≤ U ≤ D`, with points indexed through
    /// their class representatives: the rank of `i_μ` on the simple module
    /// of `(FG)^W` attached to `ω`.
    pub fn relative_multiplicity(&self, w: &Subgroup, omega: usize, u: &Subgroup, mu: usize) -> Result<usize> {
        if !w.is_subgroup_of(u) {
            return Err(Error::Precondition("relative multiplicity needs W ≤ U".into()));
        }
        let g = &self.analysis.group;
        let i = self.idempotent_at(u, mu)?;
        let (cw, dw) = self.analysis.locate(w)?;
        Ok(self.points[cw].rank_on(omega, &i.conjugate(g.inv(dw))))
    }

    /// The same count by explicit primitive decomposition inside `(FG)^W`.
    pub fn relative_multiplicity_slow(&self, w: &Subgroup, omega: usize, u: &Subgroup, mu: usize) -> Result<usize> {
        if !w.is_subgroup_of(u) {
            return Err(Error::Precondition("relative multiplicity needs W ≤ U".into()));
        }
        let g = &self.analysis.group;
        let i = self.idempotent_at(u, mu)?;
        let (cw, dw) = self.analysis.locate(w)?;
        Ok(self.points[cw].decompose(&i.conjugate(g.inv(dw)))?[omega])
    }

    /// `br_P(i) ≠ 0` for point `l` of class `ci`; when local, the simple
    /// `θ` of `C_G(P)` with `br_P(i) V(θ) ≠ 0`, which must be unique and of
    /// rank one.
    pub fn locality(&self, ci: usize, l: usize) -> Result<Option<usize>> {
        let a = self.analysis;
        let local = &a.locals[ci];
        let br = brauer_map(self.idempotent(ci, l), &local.q, &local.cgroup)?;
        if br.is_zero() {
            return Ok(None);
        }
        let mut hit = Vec::new();
        for (t, s) in local.simples.list.iter().enumerate() {
            let r = br.act(&s.module).rank();
            if r != 0 {
                hit.push((t, r));
            }
        }
        match hit.as_slice() {
            [(t, 1)] => Ok(Some(*t)),
            _ => Err(Error::TheoremViolation(format!(
                "Brauer image of a primitive idempotent is not primitive ({hit:?})"
            ))),
        }
    }

    /// Defect groups of point `l` of class `ci`: the least P-class `Q` with
    /// `i ∈ tr_Q^P((iFGi)^Q)`. Every passing class must contain a
    /// conjugate of it.
    pub fn defect_group(&self, ci: usize, l: usize) -> Result<Subgroup> {
        let a = self.analysis;
        let p = &a.classes[ci].rep;
        let i = self.idempotent(ci, l);
        let classes = subgroup_classes(p, p);
        let mut passing: Vec<&Subgroup> = Vec::new();
        for members in &classes {
            if in_trace_image(i, &members[0], p)? {
                passing.push(&members[0]);
            }
        }
        let min = *passing
            .first()
            .ok_or_else(|| Error::TheoremViolation("idempotent is not a trace from P itself".into()))?;
        for members in &classes {
            let r = &members[0];
            let contains = contains_conjugate(r, min, p);
            let passes = passing.contains(&r);
            if contains != passes {
                return Err(Error::TheoremViolation(
                    "trace membership is not upward closed over the defect group".into(),
                ));
            }
        }
        Ok(min.clone())
    }

    /// Maximal local pointed subgroups `Q_δ` of `P_α` with `Q` the defect
    /// group: local points `δ` of `Q` with `m(Q_δ, P_α) ≠ 0`. They must form
    /// a single `N_P(Q)`-orbit; returns the canonical piece and the orbit.
    pub fn max_local(&self, ci: usize, l: usize, q: &Subgroup) -> Result<(PieceAt, Vec<usize>)> {
        let a = self.analysis;
        let p = &a.classes[ci].rep;
        let (qc, _) = a.locate(q)?;
        let mut thetas = Vec::new();
        for delta in 0..self.points[qc].len() {
            if self.relative_multiplicity(q, delta, p, l)? == 0 {
                continue;
            }
            if let Some(theta) = self.locality(qc, delta)? {
                thetas.push(theta);
            }
        }
        thetas.sort_unstable();
        let first = *thetas
            .first()
            .ok_or_else(|| Error::TheoremViolation("no local pointed subgroup over the defect group".into()))?;
        let piece = PieceAt::new(a, q, first)?;
        let mut orbit: Vec<usize> = q
            .normalizer_in(p)
            .elements()
            .iter()
            .map(|&n| conjugate_piece(a, &piece, n))
            .collect::<Result<_>>()?;
        orbit.sort_unstable();
        orbit.dedup();
        if orbit != thetas {
            return Err(Error::TheoremViolation(format!(
                "maximal local pointed subgroups form more than one class ({thetas:?} vs orbit {orbit:?})"
            )));
        }
        Ok((PieceAt::new(a, q, orbit[0])?, orbit))
    }

    fn describe(&self, ci: usize, l: usize) -> Result<PointInfo> {
        let a = self.analysis;
        let piece = self.locality(ci, l)?;
        let defect = self.defect_group(ci, l)?;
        if piece.is_some() && defect.order() != a.classes[ci].rep.order() {
            return Err(Error::TheoremViolation("local point with a proper defect group".into()));
        }
        let (canon, _) = self.max_local(ci, l, &defect)?;
        let (defect_class, _) = a.locate(&defect)?;
        let i = self.idempotent(ci, l);
        let owners: Vec<usize> = a
            .blocks
            .iter()
            .filter(|b| i.mul(&b.idempotent) == *i)
            .map(|b| b.index)
            .collect();
        if owners.len() != 1 {
            return Err(Error::TheoremViolation("point idempotent lies in no single block".into()));
        }
        Ok(PointInfo {
            class: ci,
            index: l,
            multiplicity: self.points[ci].multiplicity(l),
            local: piece.is_some(),
            piece,
            defect,
            defect_class,
            key: PieceKey {
                p_class: ci,
                q: canon.q.elements().to_vec(),
                phi: canon.phi,
            },
            block: owners[0],
        })
    }

    pub fn record(&self, info: &PointInfo, name: String) -> PointRecord {
        let a = self.analysis;
        PointRecord {
            point_index: info.index + 1,
            multiplicity: info.multiplicity,
            local: info.local,
            piece: info.piece.map(|t| a.piece_name(info.class, t)),
            defect_class: a.class_name(info.defect_class).to_string(),
            idempotent_support_size: self.idempotent(info.class, info.index).support_size(),
            block: info.block,
            generalized_piece: name,
        }
    }
}

/// Whether `R` contains a P-conjugate of `Q`.
fn contains_conjugate(r: &Subgroup, q: &Subgroup, p: &Subgroup) -> bool {
    p.elements().iter().any(|&x| q.conjugate(x).is_subgroup_of(r))
}

/// `i ∈ span{tr_Q^P(i o i) : o a Q-orbit sum}`.
fn in_trace_image(i: &AlgElem, q: &Subgroup, p: &Subgroup) -> Result<bool> {
    let g = i.group();
    let f = i.field();
    let alg = InvariantAlgebra::new(g, f, q);
    let mut span = SemiEchelon::new(g.order());
    for k in 0..alg.dim() {
        let a = i.mul(&alg.basis(k)).mul(i);
        if a.is_zero() {
            continue;
        }
        let t = relative_trace(&a, q, p)?;
        span.insert(f, t.coeffs().to_vec());
    }
    Ok(span.contains(f, i.coeffs()))
}

/// `dim FG·x`: rank of right multiplication by `x`.
pub fn left_ideal_dim(x: &AlgElem) -> usize {
    let g = x.group();
    let f = x.field();
    let n = g.order();
    let mut ech = SemiEchelon::new(n);
    for y in g.elements() {
        let v = AlgElem::basis(g, f, y).mul(x);
        ech.insert(f, v.coeffs().to_vec());
        if ech.len() == n {
            break;
        }
    }
    ech.len()
}
