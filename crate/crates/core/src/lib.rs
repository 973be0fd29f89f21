//! Pointed p-groups on group algebras over finite splitting fields.

pub mod algebra;
pub mod analysis;
pub mod error;
pub mod groups;
pub mod linalg;
pub mod modrep;
pub mod pieces;
pub mod points;
pub mod poset;
pub mod report;
pub mod rng;

pub use error::{Error, Result};
