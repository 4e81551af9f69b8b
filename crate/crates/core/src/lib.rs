pub mod cli;
pub mod complexes;
pub mod error;
pub mod forest;
pub mod fraction;
pub mod report;
pub mod rewrite;
pub mod units;
pub mod verify;
pub mod zs;

pub use error::{OreError, Result};
