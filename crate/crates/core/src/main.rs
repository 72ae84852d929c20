mod cli;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let args = cli::Cli::parse();
    let outcome = match cli::dispatch(&args) {
        Ok(o) => o,
        Err(e) => {
            cli::print_error(&e.to_string());
            return ExitCode::from(cli::exit_code(&e) as u8);
        }
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(cli::render(&outcome.report, args.format).as_bytes()).is_err() {
        return ExitCode::from(cli::EXIT_INTERNAL as u8);
    }
    if outcome.verified {
        ExitCode::SUCCESS
    } else {
        cli::print_error("verification failed");
        ExitCode::from(cli::EXIT_VERIFICATION as u8)
    }
}
