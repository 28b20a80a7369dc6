//! Standard-library companion of `wvg-core`: weight-table files, run files,
//! a thread pool for Monte Carlo chunks and the commands behind the `wvg`
//! binary.

pub mod commands;
pub mod error;
pub mod io;
pub mod parallel;
pub mod reference;
pub mod spec;

pub use error::{Error, Result};
