//! Exact verification of the split octonion model of g₂ and the rolling
//! balls distribution.

// Index loops read more plainly than iterator chains over the fixed-size tables here.
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod exact;
pub mod g2;
pub mod octonion;
pub mod pfaffian;
pub mod roots;
pub mod compact;
pub mod quadric;
pub mod rolling;
pub mod report;
pub mod serre;

pub use error::{Error, Result};
