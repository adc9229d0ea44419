use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = gsp4_serre::cli::run(std::env::args_os());
    let res = if out.code == 0 {
        std::io::stdout().write_all(out.output.as_bytes())
    } else {
        std::io::stderr().write_all(out.output.as_bytes())
    };
    if res.is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(out.code as u8)
}
