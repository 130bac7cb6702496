pub mod cli;
pub mod codec;
pub mod error;
pub mod exact_math;
pub mod hats;
pub mod instance;
pub mod pl_calculus;
pub mod simplicial;
pub mod suites;
pub mod valuation;

pub use error::{Error, Result};
