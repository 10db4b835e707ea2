pub mod arith;
pub mod clifford;
pub mod diagonal;
pub mod error;
pub mod exec;
pub mod hierarchy;
pub mod json;
pub mod pauli;
pub mod random;
pub mod teleport;
pub mod verify;

pub use error::{Error, Result};
