pub mod branching;
pub mod cache;
pub mod charclass;
pub mod charlib;
pub mod cli;
pub mod error;
pub mod golden;
pub mod gpoly;
pub mod homotopy;
pub mod lambda_ring;
pub mod linalg;
pub mod presentation;
pub mod rootdata;
pub mod verify;

pub use error::{Error, Result};
