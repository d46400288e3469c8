//! Run every verification suite and print the one-line-per-check report.

use std::process::ExitCode;

use sympow::verify::{run, Suite};

fn main() -> ExitCode {
    let report = run(Suite::All);
    print!("{}", report.render());
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
