use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use umfb_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut warn = io::stderr();
    let result = run(&cli, &mut out, &mut warn);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(warn, "error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
