use clap::Parser;
use fodepth_cli::args::Cli;
use fodepth_cli::commands::execute;
use fodepth_cli::EXIT_USAGE;
use std::io::{ErrorKind, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: cannot configure {jobs} workers: {e}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    }
    match execute(&cli) {
        Ok(output) => {
            // A closed pipe (e.g. `| head`) is not an error of the command.
            match writeln!(std::io::stdout().lock(), "{}", output.render(cli.format)) {
                Err(e) if e.kind() != ErrorKind::BrokenPipe => {
                    eprintln!("error: cannot write output: {e}");
                    ExitCode::from(EXIT_USAGE as u8)
                }
                _ => ExitCode::from(output.exit as u8),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
