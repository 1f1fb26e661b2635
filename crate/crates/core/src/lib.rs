pub mod arith;
pub mod asym;
pub mod error;
pub mod families;
pub mod qseries;
pub mod signcheck;
pub mod thetaside;

pub use error::{Error, Result};
