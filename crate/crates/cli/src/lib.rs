//! The `braidcurve` command line.
//!
//! Subcommands: `braid`, `branch`, `monodromy`, `group`, `delta2` and
//! `fixtures`. Arguments that take a value accept a bundled fixture name,
//! a file path, inline text, or `-` (or nothing) for stdin, in either the
//! text form or the JSON form any command prints under `--json`, so
//! commands compose in pipelines.
//!
//! Exit status: 0 on success, 1 when the input is rejected by the
//! computation, 2 on usage errors, 3 when a cap or budget runs out.

pub mod commands;
pub mod error;
pub mod fixtures;
pub mod input;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::Parser;

pub use commands::{Cli, Output};
pub use error::CliError;
pub use fixtures::{Fixture, FixtureData, FixtureSet, SelftestReport, Target};

/// Parses `args` (program name first), runs the command and writes its
/// output. Returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    2
                }
            };
            return code;
        }
    };
    let json = cli.json;
    match commands::execute(cli, stdin) {
        Ok(out) => {
            let text = if json {
                serde_json::to_string_pretty(&out.json).expect("JSON values serialize")
            } else {
                out.text
            };
            let _ = writeln!(stdout, "{text}");
            for w in &out.warnings {
                let _ = writeln!(stderr, "warning: {w}");
            }
            out.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if json {
                let body = serde_json::json!({ "error": e.to_string(), "exit_code": e.exit_code() });
                let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&body).expect("JSON values serialize"));
            }
            e.exit_code()
        }
    }
}
