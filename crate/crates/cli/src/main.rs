use std::io::{stderr, stdin, stdout, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let mut out = stdout().lock();
    let code = tricyclic_cli::run(&args, &mut stdin().lock(), &mut out, &mut stderr().lock());
    let _ = out.flush();
    ExitCode::from(code as u8)
}
