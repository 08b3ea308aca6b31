use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;

use adf_engine::cli::{self, CliAction};

fn main() -> ExitCode {
    let action = match cli::parse_args(std::env::args().skip(1)) {
        Ok(action) => action,
        Err(error) => {
            eprintln!("error: {error}");
            eprintln!("try `adf-engine --help`");
            return ExitCode::from(1);
        }
    };
    match action {
        CliAction::Help => {
            print!("{}", cli::USAGE);
            ExitCode::SUCCESS
        }
        CliAction::Version => {
            println!("{} {}", env!("CARGO_PKG_NAME"), env!("CARGO_PKG_VERSION"));
            ExitCode::SUCCESS
        }
        CliAction::Run(config) => {
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            // a panic here means an internal invariant broke; report it
            // with a dedicated exit code instead of aborting
            let outcome = panic::catch_unwind(AssertUnwindSafe(|| cli::run(&config, &mut out)));
            match outcome {
                Ok(Ok(())) => {
                    let _ = out.flush();
                    ExitCode::SUCCESS
                }
                Ok(Err(error)) => {
                    eprintln!("error: {error}");
                    ExitCode::from(error.exit_code() as u8)
                }
                Err(_) => {
                    eprintln!("error: internal invariant failure");
                    ExitCode::from(3)
                }
            }
        }
    }
}
