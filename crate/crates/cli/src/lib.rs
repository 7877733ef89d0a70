//! IO, file formats and the verification registry for `e8grade-core`.

pub mod checks;
pub mod error;
pub mod format;
pub mod helix_file;

pub use error::CliError;
