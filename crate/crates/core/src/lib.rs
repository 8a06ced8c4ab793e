//! Exact weight combinatorics for the root system A_r.

pub mod certificate;
pub mod classifier;
pub mod duality;
pub mod error;
pub mod hyperplane;
pub mod linalg;
pub mod multinomial;
pub mod orbit;
pub mod props;
pub mod weights;

pub use error::{Error, Result};
