//! Command-line front end for `umfb`: argument definitions, the subcommand
//! implementations and the benchmark harness.

pub mod args;
pub mod bench;
pub mod commands;
pub mod error;

use std::io::Write;

use umfb::UmfbOptions;

pub use args::{Cli, Command};
pub use error::CliError;

/// Runs one parsed invocation, writing results to `out` and warnings to `warn`.
pub fn run(cli: &Cli, out: &mut dyn Write, warn: &mut dyn Write) -> Result<(), CliError> {
    let opts = UmfbOptions::from_env().map_err(|e| CliError::Usage(e.to_string()))?;
    let mut buf_out = Vec::new();
    let mut buf_warn = Vec::new();
    let mut work = || match &cli.command {
        Command::Compute(a) => commands::compute(a, &opts, &mut buf_out),
        Command::Partitions(a) => commands::list_partitions(a, &mut buf_out),
        Command::Verify(a) => commands::verify(a, &opts, &mut buf_out),
        Command::Bench(a) => commands::bench(a, &opts, &mut buf_out, &mut buf_warn),
        Command::Cumulants(a) => commands::cumulants(a, &mut buf_out),
        Command::Moments(a) => commands::moments(a, &mut buf_out),
        Command::Hermite(a) => commands::hermite_cmd(a, &mut buf_out),
        Command::Poisson(a) => commands::poisson(a, &mut buf_out),
    };
    let result = match cli.threads {
        Some(0) => Err(CliError::Usage("--threads must be at least 1".into())),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))
            .and_then(|pool| pool.install(work)),
        None => work(),
    };
    out.write_all(&buf_out)?;
    warn.write_all(&buf_warn)?;
    result
}
