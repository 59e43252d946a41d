//! Command-line front end for `knee-mcdm`.
//!
//! [`run`] takes the raw argument list and two sinks, and returns the process
//! exit code, so the whole tool can be driven from tests.

use std::io::Write;

use clap::Parser;

mod app;
pub mod bench;
pub mod plot;
pub mod sampling;

pub use app::Cli;

/// Exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INPUT: i32 = 2;
    pub const DEGENERATE: i32 = 3;
    pub const VIOLATION: i32 = 4;
    pub const PLOT: i32 = 5;
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return e.exit_code();
        }
    };
    match app::dispatch(cli, stdout, stderr) {
        Ok(()) => exit::OK,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}
