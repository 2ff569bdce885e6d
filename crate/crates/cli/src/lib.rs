//! Library side of the command-line front end: problem-file handling and
//! the verb implementations, kept out of `main` so they are testable.

pub mod commands;
pub mod problem;
