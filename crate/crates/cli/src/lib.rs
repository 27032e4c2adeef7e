//! Edge-list IO, perturbation parsing, corpora and the verification harness
//! behind the `indexbound` command.

pub mod commands;
pub mod corpus;
pub mod edgelist;
pub mod error;
pub mod output;
pub mod perturbation;
pub mod verify;

pub use error::CliError;
