//! Finite groups, subgroups and semidirect products.

mod group;
mod io;
mod subgroup;

pub use group::{
    closure, greedy_generators, semidirect_product, splitting_degree, FiniteGroup, GroupMap, GroupRef,
    Permutations, SemidirectProduct, DEFAULT_MAX_ORDER,
};
pub use io::{builtin_group, load_group, resolve_group, GroupSpec, BUILTIN};
pub use subgroup::{
    all_subgroups, class_of, dihedral_labels, iso_type, p_subgroup_classes, quotient, subgroup_classes,
    sylow_subgroup, Embedded, Quotient, Subgroup, SubgroupClass,
};
