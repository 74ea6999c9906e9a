//! Exact symbolic verification toolkit for the classical and quantum Toda2
//! chain: Laurent-polynomial scalars, the multi-site q-Weyl algebra, Poisson
//! charts, small operator matrices and the identity-checking suites built on
//! top of them.

pub mod classical;
pub mod error;
pub mod matops;
pub mod mutants;
pub mod poisson;
pub mod quantum;
pub mod registry;
pub mod report;
pub mod ring;
pub mod sample;
pub mod stoch;
pub mod weyl;

pub use error::{AlgebraError, Result};
pub use matops::{Entry, OpMatrix};
pub use report::{CheckReport, Status};
pub use ring::{Bindings, Scalar, ScalarFraction};
pub use weyl::{Gen, Lattice, WeylOp};
