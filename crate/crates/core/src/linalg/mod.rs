//! Exact arithmetic in GF(p^k) and dense linear algebra over it.

pub mod field;
pub mod matrix;
pub mod meataxe;
pub mod poly;

pub use field::{Elem, Field, FieldRef};
pub use matrix::{intertwiner_space, Echelon, Matrix};
pub use poly::Poly;
