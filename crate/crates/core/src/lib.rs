pub mod arith;
pub mod covers;
pub mod error;
pub mod invariant_rings;
pub mod motivic;
pub mod stringy;
pub mod suite;

pub use error::{Error, Result};
