use std::process::ExitCode;

fn main() -> ExitCode {
    sympow::cli::main()
}
