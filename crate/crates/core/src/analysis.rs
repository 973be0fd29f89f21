//! Shared per-run data: the group, its splitting field, a Sylow subgroup,
//! the subgroup classes of it, and the simples of each centralizer.

use crate::algebra::{block_idempotents, block_of_piece, Block};
use crate::error::{Error, Result};
use crate::groups::{
    dihedral_labels, p_subgroup_classes, splitting_degree, sylow_subgroup, Embedded, GroupRef, Subgroup,
    SubgroupClass,
};
use crate::linalg::{Field, FieldRef};
use crate::modrep::{GModule, Simples};

/// Data attached to one subgroup-class representative `Q`.
#[derive(Debug)]
pub struct Local {
    pub q: Subgroup,
    pub centralizer: Subgroup,
    pub cgroup: Embedded,
    pub simples: Simples,
    /// Block index of each piece `Q_φ`.
    pub block_of: Vec<usize>,
}

#[derive(Debug)]
pub struct Analysis {
    pub group: GroupRef,
    pub p: u64,
    pub field: FieldRef,
    pub seed: u64,
    pub whole: Subgroup,
    pub sylow: Subgroup,
    pub classes: Vec<SubgroupClass>,
    /// Conventional names for the classes when the Sylow subgroup is dihedral of order 8.
    pub display: Vec<String>,
    pub simples: Simples,
    pub blocks: Vec<Block>,
    pub locals: Vec<Local>,
}

impl Analysis {
    pub fn new(group: &GroupRef, p: u64, seed: u64) -> Result<Analysis> {
        if !crate::linalg::field::is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        let field = Field::new(p, splitting_degree(group, p))?;
        let whole = Subgroup::whole(group);
        let sylow = sylow_subgroup(group, p);
        let classes = p_subgroup_classes(&sylow);
        let display = dihedral_labels(&classes)
            .unwrap_or_else(|| classes.iter().map(|c| c.label.clone()).collect());
        let simples = Simples::compute(group, &field, seed)?;
        let blocks = block_idempotents(&simples)?;
        let mut locals = Vec::with_capacity(classes.len());
        for c in &classes {
            let q = c.rep.clone();
            let centralizer = q.centralizer_in(&whole);
            let cgroup = centralizer.as_group();
            let simples = if q.order() == 1 {
                // Reuse the group's own simples, transported to the copy.
                let id = crate::groups::GroupMap::new(cgroup.group.clone(), group.clone(), group.elements().collect())?;
                let list = simples
                    .list
                    .iter()
                    .map(|s| {
                        Ok(crate::modrep::Simple {
                            label: s.label.clone(),
                            module: s.module.pullback(&id)?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Simples {
                    group: cgroup.group.clone(),
                    field: field.clone(),
                    list,
                }
            } else {
                Simples::compute(&cgroup.group, &field, seed)?
            };
            let mut block_of = Vec::with_capacity(simples.len());
            for s in &simples.list {
                let mut owners = Vec::new();
                for b in &blocks {
                    if block_of_piece(b, &q, &cgroup, &s.module)? {
                        owners.push(b.index);
                    }
                }
                if owners.len() != 1 {
                    return Err(Error::TheoremViolation(format!(
                        "piece over class {} lies in {} blocks",
                        c.label,
                        owners.len()
                    )));
                }
                block_of.push(owners[0]);
            }
            locals.push(Local {
                q,
                centralizer,
                cgroup,
                simples,
                block_of,
            });
        }
        Ok(Analysis {
            group: group.clone(),
            p,
            field,
            seed,
            whole,
            sylow,
            classes,
            display,
            simples,
            blocks,
            locals,
        })
    }

    pub fn principal_block(&self) -> usize {
        self.blocks.iter().position(|b| b.is_principal).expect("a principal block exists")
    }

    /// The class index of `q ≤ D` and the least `d ∈ D` with `d Q_s d⁻¹ = q`.
    pub fn locate(&self, q: &Subgroup) -> Result<(usize, u32)> {
        let ci = crate::groups::class_of(&self.classes, q)
            .ok_or_else(|| Error::Precondition("subgroup is not inside the Sylow subgroup".into()))?;
        let d = self.classes[ci]
            .rep
            .conjugating_element(&self.sylow, q)
            .ok_or_else(|| Error::Internal("class member not conjugate to its representative".into()))?;
        Ok((ci, d))
    }

    /// `V(φ)` for the representative of class `ci`.
    pub fn piece_module(&self, ci: usize, phi: usize) -> &GModule {
        &self.locals[ci].simples.list[phi].module
    }

    /// Human-readable name of a class.
    pub fn class_name(&self, ci: usize) -> &str {
        &self.display[ci]
    }

    /// Parse a subgroup selector `class:<order>:<index>` (1-based among
    /// the classes of that order).
    pub fn select_class(&self, selector: &str) -> Result<usize> {
        let parts: Vec<&str> = selector.split(':').collect();
        if parts.len() != 3 || parts[0] != "class" {
            return Err(Error::Malformed(format!("bad subgroup selector {selector:?}")));
        }
        let order: usize = parts[1]
            .parse()
            .map_err(|_| Error::Malformed(format!("bad order in {selector:?}")))?;
        let index: usize = parts[2]
            .parse()
            .map_err(|_| Error::Malformed(format!("bad index in {selector:?}")))?;
        self.classes
            .iter()
            .filter(|c| c.rep.order() == order)
            .nth(index.wrapping_sub(1))
            .map(|c| c.index)
            .ok_or_else(|| Error::Malformed(format!("no subgroup class {selector:?}")))
    }
}
