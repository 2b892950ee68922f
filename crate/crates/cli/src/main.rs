use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, text) = mvinverse_cli::run(std::env::args_os());
    let ok = code == mvinverse_cli::EXIT_OK || code == mvinverse_cli::EXIT_NON_INVERTIBLE;
    let _ = if ok {
        std::io::stdout().write_all(text.as_bytes())
    } else {
        std::io::stderr().write_all(text.as_bytes())
    };
    ExitCode::from(code as u8)
}
