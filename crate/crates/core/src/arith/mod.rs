//! Exact arithmetic: residues, cyclotomic numbers and scaled matrices.

pub mod context;
pub mod cyclotomic;
pub mod matrix;
pub mod residue;

pub use context::{level_parts, Qudit};
pub use cyclotomic::{Cyclotomic, CyclotomicField};
pub use matrix::{PhaseKey, ScaledMatrix};
pub use residue::{mod_inverse, Residue};
