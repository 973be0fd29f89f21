//! Blocks: central primitive idempotents of `FG`.

use serde::Serialize;

use super::element::{brauer_map, AlgElem};
use crate::error::{Error, Result};
use crate::groups::{Embedded, Subgroup};
use crate::linalg::{Elem, Matrix};
use crate::modrep::{GModule, Simples};

#[derive(Clone, Debug)]
pub struct Block {
    /// 0-based; the principal block is 0.
    pub index: usize,
    pub idempotent: AlgElem,
    pub is_principal: bool,
    /// 0-based positions in the group's simple list.
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockRecord {
    pub index: usize,
    pub is_principal: bool,
    pub member_simples: Vec<usize>,
    pub idempotent_support_size: usize,
}

impl Block {
    pub fn record(&self) -> BlockRecord {
        BlockRecord {
            index: self.index,
            is_principal: self.is_principal,
            member_simples: self.members.iter().map(|&i| i + 1).collect(),
            idempotent_support_size: self.idempotent.support_size(),
        }
    }
}

/// Scalar by which each class sum acts on a simple module.
pub fn central_character(m: &GModule, classes: &[Vec<u32>]) -> Result<Vec<Elem>> {
    classes
        .iter()
        .map(|c| {
            m.sum_over(c)
                .as_scalar()
                .ok_or_else(|| Error::NotSplitting("class sum is not scalar on a simple".into()))
        })
        .collect()
}

/// Raise to the p-th power until idempotent. Exact for elements of a
/// commutative subalgebra that are congruent to an idempotent modulo a
/// nilpotent ideal.
pub fn lift_idempotent_commutative(x: &AlgElem, p: u64, max_steps: usize) -> Result<AlgElem> {
    let mut x = x.clone();
    for _ in 0..max_steps {
        if x.is_idempotent() {
            return Ok(x);
        }
        x = x.pow(p);
    }
    Err(Error::Internal("idempotent lifting did not stabilize".into()))
}

/// The blocks of `FG`: simples are grouped by central character, and each
/// block idempotent is the p-power limit of a central element whose
/// central characters are 1 on the block and 0 elsewhere.
pub fn block_idempotents(simples: &Simples) -> Result<Vec<Block>> {
    let (g, f) = (&simples.group, &simples.field);
    let classes = g.conjugacy_classes();
    let chars: Vec<Vec<Elem>> = simples
        .list
        .iter()
        .map(|s| central_character(&s.module, &classes))
        .collect::<Result<_>>()?;
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, ch) in chars.iter().enumerate() {
        match groups.iter_mut().find(|b| chars[b[0]] == *ch) {
            Some(b) => b.push(i),
            None => groups.push(vec![i]),
        }
    }
    // Rows: one equation per simple; columns: class-sum coefficients.
    let a = Matrix::from_rows(f, &chars)?;
    let p = f.characteristic() as u64;
    let steps = 2 + (g.order() as f64).log(p as f64).ceil() as usize;
    let mut blocks = Vec::with_capacity(groups.len());
    for (index, members) in groups.into_iter().enumerate() {
        let target: Vec<Elem> = (0..chars.len())
            .map(|i| u32::from(members.contains(&i)))
            .collect();
        let coeffs = a
            .solve(&target)?
            .ok_or_else(|| Error::Internal("central characters are not separable".into()))?;
        let mut z = AlgElem::zero(g, f);
        for (c, class) in coeffs.iter().zip(&classes) {
            if *c != 0 {
                z = z.add(&AlgElem::sum_of(g, f, class).scale(*c));
            }
        }
        let e = lift_idempotent_commutative(&z, p, steps)?;
        blocks.push(Block {
            index,
            idempotent: e,
            is_principal: members.contains(&0),
            members,
        });
    }
    check_blocks(simples, &blocks)?;
    Ok(blocks)
}

fn check_blocks(simples: &Simples, blocks: &[Block]) -> Result<()> {
    let (g, f) = (&simples.group, &simples.field);
    let mut total = AlgElem::zero(g, f);
    for (i, b) in blocks.iter().enumerate() {
        total = total.add(&b.idempotent);
        for c in blocks.iter().skip(i + 1) {
            if !b.idempotent.mul(&c.idempotent).is_zero() {
                return Err(Error::Internal("block idempotents are not orthogonal".into()));
            }
        }
        for &x in g.generators() {
            if b.idempotent.conjugate(x) != b.idempotent {
                return Err(Error::Internal("block idempotent is not central".into()));
            }
        }
        for (j, s) in simples.list.iter().enumerate() {
            let m = b.idempotent.act(&s.module);
            let expect_one = b.members.contains(&j);
            if (expect_one && !m.is_identity()) || (!expect_one && !m.is_zero()) {
                return Err(Error::Internal("block idempotent acts wrongly on a simple".into()));
            }
        }
    }
    if total != AlgElem::one(g, f) {
        return Err(Error::Internal("block idempotents do not sum to 1".into()));
    }
    if blocks.iter().filter(|b| b.is_principal).count() != 1 {
        return Err(Error::Internal("no unique principal block".into()));
    }
    Ok(())
}

/// Whether the piece `Q_φ` belongs to block `b`: `br_Q(b)` acts as 1 on `V(φ)`.
pub fn block_of_piece(b: &Block, q: &Subgroup, centralizer: &Embedded, v: &GModule) -> Result<bool> {
    let br = brauer_map(&b.idempotent, q, centralizer)?;
    let m = br.act(v);
    if m.is_identity() {
        Ok(true)
    } else if m.is_zero() {
        Ok(false)
    } else {
        Err(Error::Internal("Brauer image of a block idempotent is not 0 or 1 on a simple".into()))
    }
}
