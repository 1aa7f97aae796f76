pub mod algebra;
pub mod comatrix;
pub mod coring;
pub mod duality;
pub mod error;
pub mod examples;
pub mod exactmath;
pub mod galois;
pub mod report;

pub use error::{Error, Result};
