use std::process::ExitCode;

fn main() -> ExitCode {
    lie_psi::cli::main_with_args(std::env::args_os())
}
