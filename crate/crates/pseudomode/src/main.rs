use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(pseudomode::cli::run(std::env::args()) as u8)
}
