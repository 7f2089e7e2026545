//! Census and theorem-verification harness on top of `bei-core`.

pub mod campaign;
pub mod census;
pub mod corpus;
pub mod error;
pub mod record;
pub mod report;
pub mod verify;
pub mod workers;

pub use error::{HarnessError, HarnessResult};
