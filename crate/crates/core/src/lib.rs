//! Quantum cohomology of Grassmannians through the affine nilCoxeter algebra.

pub mod affine_weyl;
pub mod error;
pub mod nilcoxeter;
pub mod niltl;
pub mod oracle;
pub mod peterson;
pub mod quantum;
pub mod rootsys;
pub mod shapes;
pub mod verify;

pub use error::{Error, Result};
