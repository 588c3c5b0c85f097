pub mod affine;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod orbit;
pub mod peterson;
pub mod qchev;
pub mod rootdata;
pub mod weyl;

pub use error::{Error, Result};
pub use linalg::Rat;
