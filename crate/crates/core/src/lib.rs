pub mod additive;
pub mod cli;
pub mod cox;
pub mod demazure;
pub mod error;
pub mod fan;
pub mod lattice;
pub mod poly;
pub mod polytope;
pub mod random;

pub use error::{Error, Result};
