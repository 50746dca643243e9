//! Library surface of the command-line driver: the ontology text format and
//! the scenario runner.

pub mod parser;
pub mod scenario;
