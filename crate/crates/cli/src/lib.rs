//! Command-line front end for `citeweight`.

pub mod app;
pub mod report;

pub use app::{execute, run, Cli, CliError, ExitCode, RunConfig, Source, Task};
pub use report::{render_report, Format, Report};
