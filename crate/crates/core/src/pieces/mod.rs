//! Pieces `Q_φ` and generalized pieces `P ↑ Q_φ`, with their absolute
//! multiplicities computed through the stabilizer extension.

mod extension;

pub use extension::{conjugation_product, extend_to_stabilizer, multiplicity_through, Extension};

use serde::Serialize;

use crate::analysis::Analysis;
use crate::error::{Error, Result};
use crate::groups::{subgroup_classes, Subgroup};
use crate::linalg::meataxe::simples_isomorphic;

/// Which blocks to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockFilter {
    All,
    Principal,
    Index(usize),
}

impl BlockFilter {
    pub fn keeps(&self, a: &Analysis, block: usize) -> bool {
        match *self {
            BlockFilter::All => true,
            BlockFilter::Principal => block == a.principal_block(),
            BlockFilter::Index(i) => block == i,
        }
    }
}

/// A piece `Q_φ` with `Q` a class representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Piece {
    pub class: usize,
    /// 0-based position among the simples of `C_G(Q)`.
    pub phi: usize,
    pub dim: usize,
    pub block: usize,
}

pub fn enumerate_pieces(a: &Analysis, filter: BlockFilter) -> Vec<Piece> {
    let mut out = Vec::new();
    for (ci, local) in a.locals.iter().enumerate() {
        for (phi, s) in local.simples.list.iter().enumerate() {
            let block = local.block_of[phi];
            if filter.keeps(a, block) {
                out.push(Piece {
                    class: ci,
                    phi,
                    dim: s.label.dim,
                    block,
                });
            }
        }
    }
    out
}

/// A piece over an arbitrary subgroup `q ≤ D`, described through its class
/// representative `Q_s` and the least `d ∈ D` with `d Q_s d⁻¹ = q`; `phi`
/// indexes the simples of `C_G(Q_s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceAt {
    pub q: Subgroup,
    pub class: usize,
    pub d: u32,
    pub phi: usize,
}

impl PieceAt {
    pub fn new(a: &Analysis, q: &Subgroup, phi: usize) -> Result<Self> {
        let (class, d) = a.locate(q)?;
        Ok(PieceAt {
            q: q.clone(),
            class,
            d,
            phi,
        })
    }
}

/// The position of `ⁿφ` for `n ∈ N_G(q)`.
pub fn conjugate_piece(a: &Analysis, piece: &PieceAt, n: u32) -> Result<usize> {
    let g = &a.group;
    let local = &a.locals[piece.class];
    // Conjugation by n on C_G(q) is conjugation by m = d⁻¹ n d on C_G(Q_s).
    let m = g.mul(g.mul(g.inv(piece.d), n), piece.d);
    let v = &local.simples.list[piece.phi].module;
    let c = v.conjugate(&local.cgroup.embedding, m)?;
    for (i, s) in local.simples.list.iter().enumerate() {
        if s.label.dim == c.dim() && (c.generators().is_empty() || simples_isomorphic(s.module.generators(), c.generators())?) {
            return Ok(i);
        }
    }
    Err(Error::Internal("conjugate simple matches no simple".into()))
}

/// `N_P(q_φ)`: elements of `N_P(q)` fixing the class of `φ`.
pub fn piece_stabilizer(a: &Analysis, p: &Subgroup, piece: &PieceAt) -> Result<Subgroup> {
    let norm = piece.q.normalizer_in(p);
    let mut keep = Vec::new();
    for &n in norm.elements() {
        if conjugate_piece(a, piece, n)? == piece.phi {
            keep.push(n);
        }
    }
    Subgroup::new(&a.group, keep)
}

/// `m(P ↑ q_φ)`: free multiplicity of the extension of `V(φ)` to
/// `C_G(q) ⋊ N_P(q_φ)/q`, restricted to the second factor. `q ≤ p ≤ D`.
pub fn absolute_multiplicity(a: &Analysis, p: &Subgroup, piece: &PieceAt) -> Result<usize> {
    if !piece.q.is_subgroup_of(p) {
        return Err(Error::Precondition("generalized piece needs Q ≤ P".into()));
    }
    let stab = piece_stabilizer(a, p, piece)?;
    let local = &a.locals[piece.class];
    let v = &local.simples.list[piece.phi].module;
    if piece.q.order() == 1 {
        // Inner action: the extension is V(φ) itself on P.
        return Ok(v.sum_over(stab.elements()).rank());
    }
    let g = &a.group;
    let n = stab.conjugate(g.inv(piece.d));
    let ext = extend_to_stabilizer(v, &local.cgroup, &local.q, &n)?;
    Ok(ext.free_multiplicity())
}

/// Every admissible `S` (between `N_P(q_φ)` and `N_P(q)`) gives the same
/// multiplicity; returns the values through each.
pub fn multiplicities_through_all(a: &Analysis, p: &Subgroup, piece: &PieceAt) -> Result<Vec<usize>> {
    let stab = piece_stabilizer(a, p, piece)?;
    let norm = piece.q.normalizer_in(p);
    let g = &a.group;
    let local = &a.locals[piece.class];
    let v = &local.simples.list[piece.phi].module;
    let dinv = g.inv(piece.d);
    let n_t = stab.conjugate(dinv);
    let mut out = Vec::new();
    for s in crate::groups::all_subgroups(&norm) {
        if !stab.is_subgroup_of(&s) {
            continue;
        }
        let n_s = s.conjugate(dinv);
        out.push(multiplicity_through(v, &local.cgroup, &local.q, &n_t, &n_s)?);
    }
    Ok(out)
}

/// `P ↑ Q_φ` with `P` a class representative, `Q` the least member of its
/// P-class, and `φ` the least index in its `N_P(Q)`-orbit.
#[derive(Clone, Debug)]
pub struct GeneralizedPiece {
    pub p_class: usize,
    pub p: Subgroup,
    pub piece: PieceAt,
    pub stabilizer: Subgroup,
    pub multiplicity: usize,
    pub block: usize,
}

impl GeneralizedPiece {
    pub fn is_piece(&self) -> bool {
        self.piece.q == self.p
    }

    pub fn is_substantive(&self) -> bool {
        self.multiplicity > 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneralizedPieceRecord {
    #[serde(rename = "P_class")]
    pub p_class: String,
    #[serde(rename = "Q_class")]
    pub q_class: String,
    pub phi_index: usize,
    pub stabilizer_order: usize,
    pub multiplicity: usize,
    pub substantive: bool,
    pub block: usize,
}

/// Generalized pieces over the class representative `P`.
pub fn generalized_pieces_over(a: &Analysis, pi: usize, filter: BlockFilter) -> Result<Vec<GeneralizedPiece>> {
    let p = &a.classes[pi].rep;
    let mut out = Vec::new();
    for members in subgroup_classes(p, p) {
        let q = &members[0];
        let (class, _) = a.locate(q)?;
        let local = &a.locals[class];
        let norm = q.normalizer_in(p);
        let mut done = vec![false; local.simples.len()];
        for phi in 0..local.simples.len() {
            if done[phi] {
                continue;
            }
            let piece = PieceAt::new(a, q, phi)?;
            for &n in norm.elements() {
                done[conjugate_piece(a, &piece, n)?] = true;
            }
            let block = local.block_of[phi];
            if !filter.keeps(a, block) {
                continue;
            }
            let stabilizer = piece_stabilizer(a, p, &piece)?;
            let multiplicity = absolute_multiplicity(a, p, &piece)?;
            out.push(GeneralizedPiece {
                p_class: pi,
                p: p.clone(),
                piece,
                stabilizer,
                multiplicity,
                block,
            });
        }
    }
    Ok(out)
}

pub fn enumerate_generalized_pieces(
    a: &Analysis,
    filter: BlockFilter,
    substantive_only: bool,
) -> Result<Vec<GeneralizedPiece>> {
    let mut out = Vec::new();
    for pi in 0..a.classes.len() {
        for gp in generalized_pieces_over(a, pi, filter)? {
            if !substantive_only || gp.is_substantive() {
                out.push(gp);
            }
        }
    }
    Ok(out)
}

impl Analysis {
    /// Name of a piece over a class representative, e.g. `C2'_1`.
    pub fn piece_name(&self, class: usize, phi: usize) -> String {
        format!("{}_{}", self.class_name(class), phi + 1)
    }

    /// Name of a generalized piece: the piece name when `P = Q`, else
    /// `P↑Q_φ`. A `Q` other than its class representative carries its
    /// position among the class members, e.g. `C2'[2]_1`.
    pub fn generalized_name(&self, gp: &GeneralizedPiece) -> String {
        let q = &gp.piece;
        let class = &self.classes[q.class];
        let qname = if q.q == class.rep {
            self.piece_name(q.class, q.phi)
        } else {
            let k = class.members.binary_search(&q.q).map_or(0, |k| k + 1);
            format!("{}[{k}]_{}", self.class_name(q.class), q.phi + 1)
        };
        if gp.is_piece() {
            qname
        } else {
            format!("{}↑{}", self.class_name(gp.p_class), qname)
        }
    }

    pub fn record(&self, gp: &GeneralizedPiece) -> GeneralizedPieceRecord {
        GeneralizedPieceRecord {
            p_class: self.class_name(gp.p_class).to_string(),
            q_class: self.class_name(gp.piece.class).to_string(),
            phi_index: gp.piece.phi + 1,
            stabilizer_order: gp.stabilizer.order(),
            multiplicity: gp.multiplicity,
            substantive: gp.is_substantive(),
            block: gp.block,
        }
    }
}
