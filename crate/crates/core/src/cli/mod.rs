//! The `fockspace` command line tool.
//!
//! Exit codes: `0` when every check passes, `1` when a check fails, `2` for
//! usage errors.

mod args;
mod commands;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::Parser;

pub use args::{
    ApplyArgs, BasisArgs, CharactersArgs, Cli, Command, Family, Format, IntRange, QbinomArgs, RelationsArgs, Series,
};
pub use commands::{
    basic_character_count, character_series, cmd_apply, cmd_characters, cmd_qbinom_identity, cmd_verify_basis,
    cmd_verify_relations, cmd_verify_relations_with, fibonacci_cells, fibonacci_sweep, parse_monomial,
    relation_symbols, relations_sweep, test_vectors, FamilyPairCount, FibonacciCellResult, OddLambdaFailure,
    RelationsResult, MAX_LISTED_FAILURES,
};
pub use report::{Report, Table, SCHEMA, TOOL, VERSION};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub fn execute(command: &Command) -> crate::Result<Report> {
    match command {
        Command::VerifyRelations(a) => cmd_verify_relations(a),
        Command::VerifyBasis(a) => cmd_verify_basis(a),
        Command::Characters(a) => cmd_characters(a),
        Command::Apply(a) => cmd_apply(a),
        Command::QbinomIdentity(a) => cmd_qbinom_identity(a),
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    }
}

/// Parses `args`, runs the subcommand and writes the report. Returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(text.as_bytes());
                return EXIT_PASS;
            }
            let _ = stderr.write_all(text.as_bytes());
            return EXIT_USAGE;
        }
    };
    let start = Instant::now();
    let report = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let body = render(&report, cli.format);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, body.as_bytes()),
        None => stdout.write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write report: {e}");
        return EXIT_USAGE;
    }
    let _ = writeln!(stderr, "{} finished in {:.3}s", report.command, start.elapsed().as_secs_f64());
    if report.passed {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}
