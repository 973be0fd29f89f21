//! Simple modules of a group algebra, found by chopping the regular module.

use std::sync::Arc;

use serde::Serialize;

use super::module::GModule;
use crate::error::{Error, Result};
use crate::groups::GroupRef;
use crate::linalg::meataxe::{chop, simples_isomorphic};
use crate::linalg::{intertwiner_space, Elem, FieldRef, Matrix};
use crate::rng;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleLabel {
    /// 1-based; 1 is the trivial module.
    pub index: usize,
    pub dim: usize,
    /// Per conjugacy class: rank of the class-sum action and trace of a
    /// class representative.
    pub fingerprint: Vec<(usize, Elem)>,
}

#[derive(Clone, Debug)]
pub struct Simple {
    pub label: SimpleLabel,
    pub module: GModule,
}

/// The simple modules of `FG`, trivial first, the rest by (dimension, fingerprint).
#[derive(Clone, Debug)]
pub struct Simples {
    pub group: GroupRef,
    pub field: FieldRef,
    pub list: Vec<Simple>,
}

fn fingerprint(m: &GModule, classes: &[Vec<u32>]) -> Vec<(usize, Elem)> {
    classes
        .iter()
        .map(|c| (m.sum_over(c).rank(), m.matrix(c[0]).trace()))
        .collect()
}

pub fn p_regular_class_count(group: &GroupRef, p: u64) -> usize {
    group
        .conjugacy_classes()
        .iter()
        .filter(|c| !(group.element_order(c[0]) as u64).is_multiple_of(p))
        .count()
}

impl Simples {
    pub fn compute(group: &GroupRef, field: &FieldRef, seed: u64) -> Result<Simples> {
        let reg = GModule::regular(group, field);
        let mut rng = rng::stream(seed, "simples", group.order() as u64);
        let factors = chop(field, reg.generators(), reg.dim(), &mut rng)?;
        let mut reps: Vec<Vec<Matrix>> = Vec::new();
        for f in factors {
            let mut seen = false;
            for r in &reps {
                if simples_isomorphic(r, &f)? {
                    seen = true;
                    break;
                }
            }
            if !seen {
                reps.push(f);
            }
        }
        let expected = p_regular_class_count(group, field.characteristic() as u64);
        if reps.len() != expected {
            return Err(Error::NotSplitting(format!(
                "found {} simples but {} p-regular classes",
                reps.len(),
                expected
            )));
        }
        let classes = group.conjugacy_classes();
        let mut list = Vec::with_capacity(reps.len());
        for gens in reps {
            let dim = gens.first().map_or(1, Matrix::rows);
            let m = GModule::from_generators(group, field, dim, gens)?;
            if !m.generators().is_empty() && intertwiner_space(m.generators(), m.generators())?.len() != 1 {
                return Err(Error::NotSplitting(format!(
                    "a simple of dimension {dim} has a larger endomorphism ring"
                )));
            }
            let fp = fingerprint(&m, &classes);
            list.push((m, fp));
        }
        let is_trivial = |m: &GModule| m.dim() == 1 && m.generators().iter().all(Matrix::is_identity);
        list.sort_by(|(a, fa), (b, fb)| {
            is_trivial(b)
                .cmp(&is_trivial(a))
                .then(a.dim().cmp(&b.dim()))
                .then(fa.cmp(fb))
        });
        for w in list.windows(2) {
            if w[0].1 == w[1].1 {
                return Err(Error::Internal("two simples share a fingerprint".into()));
            }
        }
        let list = list
            .into_iter()
            .enumerate()
            .map(|(i, (module, fingerprint))| Simple {
                label: SimpleLabel {
                    index: i + 1,
                    dim: module.dim(),
                    fingerprint,
                },
                module,
            })
            .collect();
        Ok(Simples {
            group: group.clone(),
            field: field.clone(),
            list,
        })
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    /// 0-based position of the simple isomorphic to the given irreducible action.
    pub fn identify(&self, gens: &[Matrix]) -> Result<usize> {
        for (i, s) in self.list.iter().enumerate() {
            if simples_isomorphic(s.module.generators(), gens)? {
                return Ok(i);
            }
        }
        Err(Error::Internal("irreducible module matches no known simple".into()))
    }

    /// Composition factors as sorted 0-based simple positions.
    pub fn composition_factors(&self, m: &GModule, seed: u64) -> Result<Vec<usize>> {
        if !Arc::ptr_eq(m.group(), &self.group) {
            return Err(Error::Precondition("module for a different group".into()));
        }
        let mut rng = rng::stream(seed, "composition", m.dim() as u64);
        let mut out = Vec::new();
        for f in chop(&self.field, m.generators(), m.dim(), &mut rng)? {
            if m.generators().is_empty() {
                // Trivial group: every factor is the trivial module.
                out.push(0);
            } else {
                out.push(self.identify(&f)?);
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}
