use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(core_inverse::cli::run(std::env::args_os()))
}
