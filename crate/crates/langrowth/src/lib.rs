//! File formats, language resolution, verification suites and the command
//! line for the `langrowth-core` library.

pub mod cli;
pub mod error;
pub mod format;
pub mod language;
pub mod verify;
