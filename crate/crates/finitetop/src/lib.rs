//! IO, file formats and the command-line surface for the
//! `finitetop-core` workbench.

pub mod cli;
pub mod csvio;
pub mod dot;
pub mod error;
pub mod formats;
