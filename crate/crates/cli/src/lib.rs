//! File formats, reports and the `klein` command line over `klein-core`.

pub mod cli;
pub mod error;
pub mod formats;
pub mod report;

pub use cli::run;
pub use error::{CliError, CliResult, ExitStatus};
