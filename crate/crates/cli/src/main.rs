use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use debruijn_codes_cli::{run, CommandRequest, Format, Verb, EXIT_ERROR};

/// Identifying codes and related sets on directed de Bruijn graphs.
///
/// Exit status: 0 valid, 1 invalid or not identifiable, 2 bad parameters
/// or resource limits.
#[derive(Parser)]
#[command(name = "dbcodes", version)]
struct Cli {
    #[arg(value_enum)]
    verb: Verb,
    /// Alphabet size.
    #[arg(short)]
    d: Option<u32>,
    /// Word length.
    #[arg(short)]
    n: Option<u32>,
    /// Radius (default 1).
    #[arg(short)]
    t: Option<u32>,
    /// Construction tag: simple1, mpt10, twoid, main, odd, auto, domexact, tdom.
    #[arg(long)]
    theorem: Option<String>,
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    #[arg(long = "out", value_name = "FILE")]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Observed signature for decode, e.g. "001,100".
    #[arg(long)]
    observed: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR as u8 } else { 0 });
        }
    };
    let outcome = run(&CommandRequest {
        verb: cli.verb,
        d: cli.d,
        n: cli.n,
        t: cli.t,
        theorem: cli.theorem,
        input_path: cli.input,
        output_path: cli.output,
        format: cli.format,
        observed: cli.observed,
    });
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.exit_code as u8)
}
