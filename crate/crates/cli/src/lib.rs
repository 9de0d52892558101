//! Library surface of the search CLI: output records and the sweep
//! machinery, kept importable so the acceptance suite can drive the same
//! code paths the binary uses.

pub mod records;
pub mod sweep;
