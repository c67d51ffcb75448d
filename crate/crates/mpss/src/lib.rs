//! File formats, report rendering, verification suites and the command-line
//! front end for `mpss-core`.

pub mod cli;
pub mod family;
pub mod io;
pub mod report;
pub mod verify;
