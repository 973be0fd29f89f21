//! Group input files: `{ "degree": n, "generators": [[1-based images]...], "name": optional }`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::group::{FiniteGroup, GroupRef};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupSpec {
    pub degree: usize,
    #[serde(default)]
    pub generators: Vec<Vec<u32>>,
    #[serde(default)]
    pub name: Option<String>,
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(format!("group file: {e}")))
    }

    pub fn build(&self, max_order: usize) -> Result<GroupRef> {
        let g = FiniteGroup::from_permutations(self.degree, &self.generators, max_order)?;
        Ok(match &self.name {
            Some(n) => g.with_name(n.clone()),
            None => g,
        })
    }
}

pub fn load_group(path: &Path, max_order: usize) -> Result<GroupRef> {
    let text = std::fs::read_to_string(path)?;
    GroupSpec::parse(&text)?.build(max_order)
}

/// The bundled example groups, by file stem.
pub const BUILTIN: [(&str, &str); 8] = [
    ("s3", include_str!("../../data/groups/s3.json")),
    ("s4", include_str!("../../data/groups/s4.json")),
    ("s5", include_str!("../../data/groups/s5.json")),
    ("a4", include_str!("../../data/groups/a4.json")),
    ("d8", include_str!("../../data/groups/d8.json")),
    ("q8", include_str!("../../data/groups/q8.json")),
    ("c6", include_str!("../../data/groups/c6.json")),
    ("s3xc2", include_str!("../../data/groups/s3xc2.json")),
];

pub fn builtin_group(name: &str, max_order: usize) -> Result<GroupRef> {
    let text = BUILTIN
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::Malformed(format!("no bundled group named {name:?}")))?;
    GroupSpec::parse(text)?.build(max_order)
}

/// A path to a group file, or `builtin:<name>` for a bundled one.
pub fn resolve_group(arg: &str, max_order: usize) -> Result<GroupRef> {
    match arg.strip_prefix("builtin:") {
        Some(name) => builtin_group(name, max_order),
        None => load_group(Path::new(arg), max_order),
    }
}
