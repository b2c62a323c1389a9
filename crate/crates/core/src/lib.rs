pub mod catalog;
pub mod cli;
pub mod coring;
pub mod duals;
pub mod error;
pub mod exactlin;
pub mod field;
pub mod hopf;
pub mod smash;
pub mod theorems;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
