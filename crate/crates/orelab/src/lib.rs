//! Corpus tooling for 5-critical graphs: file formats, a corpus on disk,
//! verification campaigns and the `orelab` command line.

pub mod campaign;
pub mod cli;
pub mod corpus;
pub mod format;
pub mod fuzz;
pub mod report;
